//! Polynomial gcd in `Z[q,t]` by content / primitive-part recursion.
//!
//! A bivariate polynomial is viewed as a polynomial in a main variable with
//! coefficients in `Z[y]`; gcds of those coefficients are univariate gcds over
//! `Z`, themselves computed by primitive pseudo-remainder sequences.

use super::poly::QTPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type U = Vec<BigInt>;

fn u_trim(v: &mut U) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn u_content(v: &U) -> BigInt {
    let mut g = BigInt::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_int(v: &U, c: &BigInt) -> U {
    v.iter().map(|x| x / c).collect()
}

fn u_scale(v: &U, c: &BigInt) -> U {
    v.iter().map(|x| x * c).collect()
}

fn u_mul(a: &U, b: &U) -> U {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

fn u_sub(a: &U, b: &U) -> U {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_default();
        let y = b.get(i).cloned().unwrap_or_default();
        out.push(x - y);
    }
    u_trim(&mut out);
    out
}

/// Exact division over `Z`, or `None`.
fn u_div_exact(a: &U, b: &U) -> Option<U> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if b.len() > a.len() {
        return None;
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = &b[db];
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let s = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[s + j] -= c * &qc;
        }
        quot[s] = qc;
        u_trim(&mut r);
    }
    if r.is_empty() {
        u_trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder of `a` by `b` (both non-zero).
fn u_prem(a: &U, b: &U) -> U {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        r = u_scale(&r, &lb);
        let s = dr - db;
        for (j, c) in b.iter().enumerate() {
            r[s + j] -= c * &lr;
        }
        u_trim(&mut r);
    }
    r
}

fn u_primitive(v: &U) -> U {
    let c = u_content(v);
    if c.is_zero() {
        return Vec::new();
    }
    let mut p = u_div_int(v, &c);
    if p.last().is_some_and(|x| x.is_negative()) {
        p = p.iter().map(|x| -x).collect();
    }
    p
}

/// Univariate gcd over `Z`, with positive leading coefficient.
fn u_gcd(a: &U, b: &U) -> U {
    if a.is_empty() {
        return u_primitive_signed(b);
    }
    if b.is_empty() {
        return u_primitive_signed(a);
    }
    let cg = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = (u_primitive(a), u_primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if u_div_exact(&x, &y).is_some() {
        return u_scale(&y, &cg);
    }
    while !y.is_empty() {
        let r = u_prem(&x, &y);
        x = y;
        y = u_primitive(&r);
    }
    u_scale(&x, &cg)
}

fn u_primitive_signed(v: &U) -> U {
    let mut p = v.clone();
    if p.last().is_some_and(|x| x.is_negative()) {
        p = p.iter().map(|x| -x).collect();
    }
    p
}

type B = Vec<U>;

fn b_trim(v: &mut B) {
    while v.last().is_some_and(|c| c.is_empty()) {
        v.pop();
    }
}

fn b_content(v: &B) -> U {
    let mut g: U = Vec::new();
    for c in v {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_div_u(v: &B, c: &U) -> B {
    v.iter().map(|x| if x.is_empty() { Vec::new() } else { u_div_exact(x, c).expect("content division") }).collect()
}

fn b_prem(a: &B, b: &B) -> B {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let s = dr - db;
        let mut nr: B = r.iter().map(|c| u_mul(c, &lb)).collect();
        for (j, c) in b.iter().enumerate() {
            let prod = u_mul(c, &lr);
            nr[s + j] = u_sub(&nr[s + j], &prod);
        }
        r = nr;
        b_trim(&mut r);
    }
    r
}

fn b_primitive(v: &B) -> B {
    let c = b_content(v);
    if c.is_empty() {
        return Vec::new();
    }
    b_div_u(v, &c)
}

fn to_b(p: &QTPoly, t_main: bool) -> B {
    let (dx, dy) = if t_main { (p.deg_t(), p.deg_q()) } else { (p.deg_q(), p.deg_t()) };
    let mut v: B = vec![vec![BigInt::zero(); dy as usize + 1]; dx as usize + 1];
    for ((a, b), c) in p.terms() {
        let (x, y) = if t_main { (*b, *a) } else { (*a, *b) };
        v[x as usize][y as usize] = c.clone();
    }
    for c in v.iter_mut() {
        u_trim(c);
    }
    b_trim(&mut v);
    v
}

fn from_b(v: &B, t_main: bool) -> QTPoly {
    let mut terms = Vec::new();
    for (x, c) in v.iter().enumerate() {
        for (y, k) in c.iter().enumerate() {
            if !k.is_zero() {
                let m = if t_main { (y as u32, x as u32) } else { (x as u32, y as u32) };
                terms.push((m, k.clone()));
            }
        }
    }
    QTPoly::from_terms(terms)
}

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn reduce(c: &BigInt) -> u64 {
    let m = c.mod_floor(&BigInt::from(P));
    u64::try_from(m).expect("reduced below P")
}

/// Image in `F_P[x]` of `p` with the other variable set to `y0`; `x` is `t` when `t_main`.
fn image(p: &QTPoly, t_main: bool, y0: u64) -> Vec<u64> {
    let deg = if t_main { p.deg_t() } else { p.deg_q() } as usize;
    let mut v = vec![0u64; deg + 1];
    for ((a, b), c) in p.terms() {
        let (x, y) = if t_main { (*b, *a) } else { (*a, *b) };
        let term = mulmod(reduce(c), powmod(y0, y as u64));
        v[x as usize] = (v[x as usize] + term) % P;
    }
    v
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Degree of the gcd over `F_P` (`-1` never occurs for non-zero inputs).
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim_mod(&mut a);
    trim_mod(&mut b);
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), P - 2);
        while a.len() >= b.len() {
            let f = mulmod(*a.last().unwrap(), inv);
            let s = a.len() - b.len();
            for (j, c) in b.iter().enumerate() {
                a[s + j] = (a[s + j] + P - mulmod(f, *c)) % P;
            }
            trim_mod(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True when the images in both directions prove there is no common factor of positive degree.
/// A common factor `G` with `deg_x G > 0` keeps its degree under `y := y0` whenever the
/// leading coefficients of the inputs survive, so a constant image gcd rules it out.
fn coprime_by_images(a: &QTPoly, b: &QTPoly) -> bool {
    const Y0: [u64; 2] = [1_234_567_891, 987_654_323];
    for (t_main, y0) in [(false, Y0[0]), (true, Y0[1])] {
        let (da, db) = if t_main { (a.deg_t(), b.deg_t()) } else { (a.deg_q(), b.deg_q()) };
        if da == 0 || db == 0 {
            continue;
        }
        let (ia, ib) = (image(a, t_main, y0), image(b, t_main, y0));
        if ia.len() != da as usize + 1 || ib.len() != db as usize + 1 || ia[da as usize] == 0 || ib[db as usize] == 0 {
            return false;
        }
        if gcd_degree_mod(ia, ib) != 0 {
            return false;
        }
    }
    true
}

/// Makes the lex-leading coefficient positive.
pub fn normalize_sign(p: QTPoly) -> QTPoly {
    match p.leading() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p,
    }
}

/// Greatest common divisor in `Z[q,t]`, with positive lex-leading coefficient.
pub fn poly_gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    // Monomial factors first.
    let (ma, mb) = ((a.min_q(), a.min_t()), (b.min_q(), b.min_t()));
    let mono = (ma.0.min(mb.0), ma.1.min(mb.1));
    let a1 = a.unshift(ma.0, ma.1);
    let b1 = b.unshift(mb.0, mb.1);
    if a1.is_constant() || b1.is_constant() {
        let g = a1.content().gcd(&b1.content());
        return QTPoly::monomial(g, mono.0, mono.1);
    }
    if coprime_by_images(&a1, &b1) {
        let g = a1.content().gcd(&b1.content());
        return QTPoly::monomial(g, mono.0, mono.1);
    }
    let (big, small) = if a1.len() >= b1.len() { (&a1, &b1) } else { (&b1, &a1) };
    if big.div_exact(small).is_some() {
        return normalize_sign(small.shift(mono.0, mono.1));
    }
    // Main variable: the one of lower total degree keeps pseudo-division short.
    let t_main = a1.deg_t().max(b1.deg_t()) <= a1.deg_q().max(b1.deg_q());
    let (ba, bb) = (to_b(&a1, t_main), to_b(&b1, t_main));
    let cg = u_gcd(&b_content(&ba), &b_content(&bb));
    let (mut x, mut y) = (b_primitive(&ba), b_primitive(&bb));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            // y is free of the main variable and primitive: gcd of primitive parts is 1.
            x = vec![vec![BigInt::one()]];
            break;
        }
        let r = b_prem(&x, &y);
        x = y;
        y = b_primitive(&r);
    }
    let pp = b_primitive(&x);
    let g: B = pp.iter().map(|c| u_mul(c, &cg)).collect();
    normalize_sign(from_b(&g, t_main).shift(mono.0, mono.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTPoly {
        let r = crate::qt_ring::parse_qt(s).unwrap();
        assert!(r.den().is_one());
        r.num().clone()
    }

    #[test]
    fn bivariate_gcd() {
        let g = p("(1 - q*t)*(q^2 + t)");
        let a = &g * &p("(1 + q)*(t - q^3)");
        let b = &g * &p("(1 - t^2)*q");
        assert_eq!(poly_gcd(&a, &b), normalize_sign(g));
    }

    #[test]
    fn content_and_monomials() {
        let a = p("6*q^2*t");
        let b = p("4*q*t^3 + 8*q^3*t");
        assert_eq!(poly_gcd(&a, &b), p("2*q*t"));
        assert_eq!(poly_gcd(&p("q - t"), &p("q + t")), QTPoly::one());
    }
}
