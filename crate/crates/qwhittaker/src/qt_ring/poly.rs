use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Exponent pair `(a, b)` standing for `q^a t^b`.
pub type Mono = (u32, u32);

/// Sparse polynomial in `q` and `t` with big-integer coefficients.
///
/// Terms are kept sorted increasingly in lexicographic order of the exponent
/// pair, so the lex-leading term is the last one. Zero coefficients are never
/// stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, a: u32, b: u32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            QTPoly { terms: vec![((a, b), c)] }
        }
    }

    /// `q^a`.
    pub fn q_pow(a: u32) -> Self {
        Self::monomial(1, a, 0)
    }

    /// `t^b`.
    pub fn t_pow(b: u32) -> Self {
        Self::monomial(1, 0, b)
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigInt)>>(it: I) -> Self {
        let mut map: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in it {
            *map.entry(m).or_default() += c;
        }
        Self::from_map(map)
    }

    fn from_map(map: HashMap<Mono, BigInt>) -> Self {
        let mut terms: Vec<(Mono, BigInt)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|x| x.0);
        QTPoly { terms }
    }

    /// Univariate polynomial in `q` from its coefficient list (index = exponent).
    pub fn from_q_coeffs(coeffs: &[BigInt]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ((i as u32, 0), c.clone()))
            .collect();
        QTPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == (0, 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> BigInt {
        match self.terms.binary_search_by(|x| x.0.cmp(&(a, b))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Lex-leading term.
    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.last()
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).max().unwrap_or(0)
    }

    pub fn min_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .0).min().unwrap_or(0)
    }

    pub fn min_t(&self) -> u32 {
        self.terms.iter().map(|t| t.0 .1).min().unwrap_or(0)
    }

    /// Whether the polynomial does not involve `t`.
    pub fn is_q_only(&self) -> bool {
        self.terms.iter().all(|t| t.0 .1 == 0)
    }

    /// Whether all coefficients are non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|t| !t.1.is_negative())
    }

    /// Gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Exact division of every coefficient by an integer. Panics if inexact.
    pub fn div_int(&self, c: &BigInt) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| {
                    let (d, r) = x.div_rem(c);
                    assert!(r.is_zero(), "inexact integer division");
                    (*m, d)
                })
                .collect(),
        }
    }

    /// Multiplication by `q^a t^b`.
    pub fn shift(&self, a: u32, b: u32) -> Self {
        QTPoly { terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Division by `q^a t^b`; panics if some exponent would become negative.
    pub fn unshift(&self, a: u32, b: u32) -> Self {
        QTPoly {
            terms: self
                .terms
                .iter()
                .map(|((x, y), c)| ((x.checked_sub(a).expect("unshift"), y.checked_sub(b).expect("unshift")), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division in `Z[q,t]`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &QTPoly) -> Option<QTPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let ((a, b), c) = &d.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for ((x, y), v) in &self.terms {
                if x < a || y < b {
                    return None;
                }
                let (qq, r) = v.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                out.push(((x - a, y - b), qq));
            }
            return Some(QTPoly { terms: out });
        }
        if self.deg_q() < d.deg_q() || self.deg_t() < d.deg_t() {
            return None;
        }
        let ((la, lb), lc) = d.leading().unwrap().clone();
        let mut rem: std::collections::BTreeMap<Mono, BigInt> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((&(ra, rb), rc)) = rem.iter().next_back() {
            if ra < la || rb < lb {
                return None;
            }
            let (qc, r) = rc.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            let (sa, sb) = (ra - la, rb - lb);
            for ((x, y), c) in &d.terms {
                let key = (x + sa, y + sb);
                let prod = c * &qc;
                let entry = rem.entry(key).or_default();
                *entry -= prod;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push(((sa, sb), qc));
        }
        Some(QTPoly::from_terms(quot))
    }

    /// Swaps the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QTPoly::from_terms(self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())))
    }

    /// Substitutes `q -> q^k`, `t -> t^k`.
    pub fn power_subs(&self, k: u32) -> Self {
        QTPoly { terms: self.terms.iter().map(|((a, b), c)| ((a * k, b * k), c.clone())).collect() }
    }

    /// Substitutes `t -> 0`.
    pub fn at_t_zero(&self) -> Self {
        QTPoly { terms: self.terms.iter().filter(|t| t.0 .1 == 0).cloned().collect() }
    }

    /// Substitutes `q -> 0`.
    pub fn at_q_zero(&self) -> Self {
        QTPoly { terms: self.terms.iter().filter(|t| t.0 .0 == 0).cloned().collect() }
    }

    /// Coefficient of `t^b`, as a polynomial in `q`.
    pub fn t_coeff(&self, b: u32) -> Self {
        QTPoly { terms: self.terms.iter().filter(|t| t.0 .1 == b).map(|((a, _), c)| ((*a, 0), c.clone())).collect() }
    }

    /// Coefficient of `q^a`, as a polynomial in `t`.
    pub fn q_coeff(&self, a: u32) -> Self {
        QTPoly { terms: self.terms.iter().filter(|t| t.0 .0 == a).map(|((_, b), c)| ((0, *b), c.clone())).collect() }
    }

    /// Sum of all coefficients, i.e. the value at `q = t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.iter().map(|t| t.1.clone()).sum()
    }

    /// Value at integer points.
    pub fn eval_int(&self, q: &BigInt, t: &BigInt) -> BigInt {
        let mut s = BigInt::zero();
        for ((a, b), c) in &self.terms {
            s += c * num_traits::pow(q.clone(), *a as usize) * num_traits::pow(t.clone(), *b as usize);
        }
        s
    }

    /// Substitution `t -> 1/q` written as `N(q) / q^s`: returns `(N, s)`.
    pub fn at_t_inv_q(&self) -> (QTPoly, u32) {
        let s = self.deg_t();
        let n = QTPoly::from_terms(self.terms.iter().map(|((a, b), c)| ((a + s - b, 0), c.clone())));
        (n, s)
    }

    pub fn map_coeffs<F: Fn(&BigInt) -> BigInt>(&self, f: F) -> Self {
        QTPoly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Univariate coefficient list in `q`; panics if `t` occurs.
    pub fn q_coeff_vec(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); if self.is_zero() { 0 } else { self.deg_q() as usize + 1 }];
        for ((a, b), c) in &self.terms {
            assert_eq!(*b, 0, "polynomial involves t");
            v[*a as usize] = c.clone();
        }
        v
    }

    /// Human-readable form, for instance `q^2*t + 2*q - 1`.
    ///
    /// Terms are ordered by decreasing total degree and then decreasing
    /// `q`-degree.
    pub fn to_string_with(&self, x: &str, y: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut ts: Vec<&(Mono, BigInt)> = self.terms.iter().collect();
        ts.sort_by(|p, r| {
            let (a1, b1) = p.0;
            let (a2, b2) = r.0;
            (a2 + b2).cmp(&(a1 + b1)).then(a2.cmp(&a1))
        });
        let mut out = String::new();
        for (i, ((a, b), c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || (*a == 0 && *b == 0) {
                factors.push(abs.to_string());
            }
            match *a {
                0 => {}
                1 => factors.push(x.to_string()),
                e => factors.push(format!("{x}^{e}")),
            }
            match *b {
                0 => {}
                1 => factors.push(y.to_string()),
                e => factors.push(format!("{y}^{e}")),
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with("q", "t"))
    }
}

impl fmt::Debug for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QTPoly({self})")
    }
}

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::constant(c)
    }
}

impl From<BigInt> for QTPoly {
    fn from(c: BigInt) -> Self {
        QTPoly::constant(c)
    }
}

fn merge(a: &QTPoly, b: &QTPoly, negate_b: bool) -> QTPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() || j < b.terms.len() {
        if j == b.terms.len() || (i < a.terms.len() && a.terms[i].0 < b.terms[j].0) {
            out.push(a.terms[i].clone());
            i += 1;
        } else if i == a.terms.len() || b.terms[j].0 < a.terms[i].0 {
            let c = if negate_b { -&b.terms[j].1 } else { b.terms[j].1.clone() };
            out.push((b.terms[j].0, c));
            j += 1;
        } else {
            let c = if negate_b { &a.terms[i].1 - &b.terms[j].1 } else { &a.terms[i].1 + &b.terms[j].1 };
            if !c.is_zero() {
                out.push((a.terms[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    QTPoly { terms: out }
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, o: &QTPoly) -> QTPoly {
        merge(self, o, false)
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, o: &QTPoly) -> QTPoly {
        merge(self, o, true)
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, o: &QTPoly) -> QTPoly {
        if self.is_zero() || o.is_zero() {
            return QTPoly::zero();
        }
        if o.is_monomial() {
            let ((a, b), c) = &o.terms[0];
            return QTPoly { terms: self.terms.iter().map(|((x, y), v)| ((x + a, y + b), v * c)).collect() };
        }
        if self.is_monomial() {
            return o * self;
        }
        // Dense accumulation when the exponent box is small, hash map otherwise.
        let (qa, qb) = (self.deg_q() + o.deg_q() + 1, self.deg_t() + o.deg_t() + 1);
        let cells = qa as usize * qb as usize;
        if cells <= 4 * (self.terms.len() * o.terms.len()).max(64) {
            let mut grid = vec![BigInt::zero(); cells];
            for ((a1, b1), c1) in &self.terms {
                for ((a2, b2), c2) in &o.terms {
                    let idx = (a1 + a2) as usize * qb as usize + (b1 + b2) as usize;
                    grid[idx] += c1 * c2;
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in grid.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((((idx / qb as usize) as u32, (idx % qb as usize) as u32), c));
                }
            }
            return QTPoly { terms };
        }
        let mut map: HashMap<Mono, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len());
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &o.terms {
                *map.entry((a1 + a2, b1 + b2)).or_default() += c1 * c2;
            }
        }
        QTPoly::from_map(map)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, o: QTPoly) -> QTPoly {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, o: &QTPoly) -> QTPoly {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<QTPoly> for &'a QTPoly {
            type Output = QTPoly;
            fn $m(self, o: QTPoly) -> QTPoly {
                self.$m(&o)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&QTPoly> for QTPoly {
    fn add_assign(&mut self, o: &QTPoly) {
        *self = merge(self, o, false);
    }
}

impl SubAssign<&QTPoly> for QTPoly {
    fn sub_assign(&mut self, o: &QTPoly) {
        *self = merge(self, o, true);
    }
}

impl std::iter::Sum for QTPoly {
    fn sum<I: Iterator<Item = QTPoly>>(iter: I) -> Self {
        let mut s = QTPoly::zero();
        for x in iter {
            s += &x;
        }
        s
    }
}

impl std::iter::Product for QTPoly {
    fn product<I: Iterator<Item = QTPoly>>(iter: I) -> Self {
        let mut s = QTPoly::one();
        for x in iter {
            s = &s * &x;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let q = QTPoly::q();
        let t = QTPoly::t();
        let a = &q + &t;
        let b = &q - &t;
        assert_eq!(&a * &b, &q.pow(2) - &t.pow(2));
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "q + t");
        assert_eq!((&q.pow(2) * &t).to_string(), "q^2*t");
    }

    #[test]
    fn exact_division() {
        let one = QTPoly::one();
        let q = QTPoly::q();
        let t = QTPoly::t();
        let f = (&one - &(&q * &t)) * (&q + &t.pow(3));
        assert_eq!(f.div_exact(&(&one - &(&q * &t))), Some(&q + &t.pow(3)));
        assert_eq!(f.div_exact(&(&one - &q)), None);
    }

    #[test]
    fn t_inverse_substitution() {
        // 1 - q t  ->  0
        let f = &QTPoly::one() - &(&QTPoly::q() * &QTPoly::t());
        let (n, _) = f.at_t_inv_q();
        assert!(n.is_zero());
    }
}
