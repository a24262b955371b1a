//! Elliptic Hall operators `O_mn` built from `e_1` and `D_0` by brackets.

use super::EigenError;
use crate::linalg::Matrix;
use crate::macdonald::{d0_eigenvalue, eigen_matrix, QTMatrix};
use crate::partitions::Partition;
use crate::qt_ring::{one_minus_q_pow, one_minus_t_pow, qint_poly, QTPoly, QTRational, Subst};
use crate::symfunc::{transition, Basis, SymFunc};
use crate::whittaker::{expand_in_w, WExpansion, WKind};
use num_integer::Integer;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// The bracket splitting `O_mn = [O_uv, O_kl] / ((1-q)(1-t))`, returned as `((u,v),(k,l))`.
///
/// For coprime `(m,n)`, `(k,l)` ranges over `0<=k<=m, 0<=l<=n` with `nk - ml = 1`,
/// minimising `l - kn/m`. For `(ad,bd)` the `(u,v)` of `(a,b)` is kept.
pub fn split(m: u32, n: u32) -> Result<((u32, u32), (u32, u32)), EigenError> {
    if m == 0 || n == 0 {
        return Err(EigenError::InvalidIndex(m, n));
    }
    let d = m.gcd(&n);
    if d > 1 {
        let ((u, v), _) = split(m / d, n / d)?;
        return Ok(((u, v), (m - u, n - v)));
    }
    let mut best: Option<((u32, u32), (i64, i64))> = None;
    for k in 0..=m {
        for l in 0..=n {
            if (k, l) == (m, n) || (k, l) == (0, 0) {
                continue;
            }
            if n as i64 * k as i64 - m as i64 * l as i64 != 1 {
                continue;
            }
            // compare l - kn/m as (lm - kn)/m
            let key = (l as i64 * m as i64 - k as i64 * n as i64, m as i64);
            if best.is_none_or(|(_, b)| key.0 * b.1 < b.0 * key.1) {
                best = Some(((k, l), key));
            }
        }
    }
    let ((k, l), _) = best.ok_or(EigenError::InvalidIndex(m, n))?;
    Ok(((m - k, n - l), (k, l)))
}

/// Bracket expression of `O_mn` in terms of `e1` and `D0`, without the scalar factor.
pub fn bracket_expression(m: u32, n: u32) -> Result<String, EigenError> {
    match (m, n) {
        (0, 1) => Ok("e1".into()),
        (1, 0) => Ok("D0".into()),
        _ => {
            let ((u, v), (k, l)) = split(m, n)?;
            Ok(format!("[{},{}]", bracket_expression(u, v)?, bracket_expression(k, l)?))
        }
    }
}

fn e1_matrix(d: u32) -> QTMatrix {
    let src = &transition::index(d).parts;
    Matrix::from_rows(src.iter().map(|lam| SymFunc::s(lam).mul(&SymFunc::s(&Partition::row(1))).to_vec(Basis::S, d + 1)).collect())
}

/// Schur-basis matrix (row convention) of `O_mn` from degree `d` to degree `d + n`.
pub fn o_matrix(m: u32, n: u32, d: u32) -> Result<Arc<QTMatrix>, EigenError> {
    static C: OnceLock<Mutex<HashMap<(u32, u32, u32), Arc<QTMatrix>>>> = OnceLock::new();
    let cache = C.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(m, n, d)) {
        return Ok(v.clone());
    }
    let mat = match (m, n) {
        (0, 1) => e1_matrix(d),
        (1, 0) => eigen_matrix(d, d0_eigenvalue),
        _ => {
            let ((u, v), (k, l)) = split(m, n)?;
            // [A, B] f = A(B f) - B(A f); in row convention f.B.A - f.A.B
            let first = o_matrix(k, l, d)?.mul(&*o_matrix(u, v, d + l)?);
            let second = o_matrix(u, v, d)?.mul(&*o_matrix(k, l, d + v)?);
            let c = QTRational::new(QTPoly::one(), &one_minus_q_pow(1) * &one_minus_t_pow(1));
            Matrix::from_fn(first.rows(), first.cols(), |i, j| {
                let x = first.get(i, j) - second.get(i, j);
                if x.is_zero() { x } else { &x * &c }
            })
        }
    };
    let mat = Arc::new(mat);
    cache.lock().unwrap().insert((m, n, d), mat.clone());
    Ok(mat)
}

/// Applies `O_mn` to a symmetric function.
pub fn apply_o(m: u32, n: u32, f: &SymFunc) -> Result<SymFunc, EigenError> {
    let mut out = SymFunc::zero(Basis::S);
    for d in f.degrees() {
        let v = o_matrix(m, n, d)?.vec_mul(&f.homogeneous_part(d).to_vec(Basis::S, d));
        out = out.add(&SymFunc::from_vec(Basis::S, d + n, &v));
    }
    Ok(out)
}

/// `Q_mn = O_mn(1)`.
pub fn elliptic_q(m: u32, n: u32) -> Result<SymFunc, EigenError> {
    if (m, n) == (0, 0) {
        return Err(EigenError::InvalidIndex(m, n));
    }
    apply_o(m, n, &SymFunc::one())
}

/// `alpha = (mn - m - n + d)/2` with `d = gcd(m,n)`.
pub fn alpha(m: u32, n: u32) -> i64 {
    let d = m.gcd(&n) as i64;
    (m as i64 * n as i64 - m as i64 - n as i64 + d) / 2
}

/// Closed-form W-expansion of `q^alpha Q_mn(q, 1/q)`: the coefficient of `W_mu` is
/// `q^{eta(mu')} [d]_q/[m]_q prod_{l(i,j)=0} (1-q^{m-i})/(1-q^{a(i,j)+1})`.
pub fn formula_qmn_specialized(m: u32, n: u32) -> WExpansion {
    let d = m.gcd(&n) as i64;
    let mut out = WExpansion::new("W");
    let lead = QTRational::new(qint_poly(d), qint_poly(m as i64));
    for mu in crate::partitions::partitions_of(n) {
        let mut c = lead.mul_monomial(mu.conjugate().eta() as i64, 0);
        for (i, j) in mu.cells() {
            let (a, l) = mu.arm_leg(i, j);
            if l == 0 {
                let num = &QTRational::one() - &QTRational::monomial(m as i64 - i as i64, 0);
                c = &(&c * &num) / &QTRational::from(one_minus_q_pow(a + 1));
            }
        }
        out.add_term(mu, c);
    }
    out
}

/// `q^alpha Q_mn(q, 1/q)` computed from the bracket recursion and expanded in `W`.
pub fn qmn_specialized_direct(m: u32, n: u32) -> Result<WExpansion, EigenError> {
    let q = elliptic_q(m, n)?.specialize(&Subst::TInvQ)?;
    Ok(expand_in_w(&q.map_coeffs(|c| c.mul_monomial(alpha(m, n), 0)), WKind::W))
}

/// `Q_mn(q, 0)` expanded in `W`.
pub fn qmn_at_t0(m: u32, n: u32) -> Result<WExpansion, EigenError> {
    Ok(expand_in_w(&elliptic_q(m, n)?.specialize(&Subst::TZero)?, WKind::W))
}

/// For coprime `(m,n)`, the exponent `beta` with `Q_mn(q,0) = q^beta W_{(m^k, r)}`, if of that form.
pub fn qmn_beta(m: u32, n: u32) -> Result<Option<(Partition, i64)>, EigenError> {
    let e = qmn_at_t0(m, n)?;
    if e.terms.len() != 1 {
        return Ok(None);
    }
    let (mu, c) = e.terms.iter().next().unwrap();
    let p = c.as_poly().filter(|p| p.len() == 1).map(|p| { let ((a, b), _) = &p.terms()[0]; (*a, *b) });
    Ok(p.filter(|&(_, b)| b == 0).map(|(a, _)| (mu.clone(), a as i64)))
}

/// `Q_nn(q,0) = W_n + [n-1]_q W_{(n-1,1)}`.
pub fn qnn_at_t0_closed(n: u32) -> WExpansion {
    let mut out = WExpansion::new("W");
    out.add_term(Partition::row(n), QTRational::one());
    if n >= 2 {
        out.add_term(Partition::from_unsorted(vec![n - 1, 1]), qint_poly(n as i64 - 1).into());
    }
    out
}

/// `Q_nn = nabla(sum_{k+l=n-1} (-qt)^{-k} s_{(k+1,1^l)})`.
pub fn qnn_via_nabla(n: u32) -> SymFunc {
    let mut f = SymFunc::zero(crate::symfunc::Basis::S);
    for k in 0..n {
        let l = n - 1 - k;
        let mut parts = vec![k + 1];
        parts.extend(std::iter::repeat_n(1, l as usize));
        let c = QTRational::monomial(-(k as i64), -(k as i64)).scale_int(&num_bigint::BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        f.add_term(Partition::from_unsorted(parts), c);
    }
    super::nabla(&f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::parse_symfunc;

    fn sf(s: &str) -> SymFunc {
        parse_symfunc(s).unwrap()
    }

    #[test]
    fn splittings_match_printed_brackets() {
        assert_eq!(bracket_expression(4, 3).unwrap(), "[[e1,D0],[[e1,D0],[[e1,D0],D0]]]");
        assert_eq!(bracket_expression(6, 3).unwrap(), "[[e1,D0],[[[e1,D0],D0],[[[e1,D0],D0],D0]]]");
        assert!(split(2, 0).is_err());
        assert!(elliptic_q(0, 2).is_err());
    }

    #[test]
    fn printed_q_values() {
        assert!(elliptic_q(1, 3).unwrap().equals(&sf("s111")));
        assert!(elliptic_q(2, 3).unwrap().equals(&sf("(q+t)*s111 + s21")));
        assert!(elliptic_q(3, 3).unwrap().equals(&sf("(q^3 + q^2 t + q t^2 + t^3 + q^2 + 2 q t + t^2 + q + t)*s111 + (q^2 + q t + t^2 + 2 q + 2 t + 1)*s21 + s3")));
        assert!(elliptic_q(4, 3).unwrap().equals(&sf("(q^3 + q^2 t + q t^2 + t^3 + q t)*s111 + (q^2 + q t + t^2 + q + t)*s21 + s3")));
    }

    #[test]
    fn specialized_formula_small() {
        for n in 1..=4 {
            for m in 1..=n + 1 {
                assert_eq!(formula_qmn_specialized(m, n), qmn_specialized_direct(m, n).unwrap(), "({m},{n})");
            }
        }
    }

    #[test]
    fn q_identities_small() {
        for n in 1..=5 {
            assert!(elliptic_q(1, n).unwrap().equals(&SymFunc::e(n)), "Q1{n}");
            assert_eq!(qmn_at_t0(n, n).unwrap(), qnn_at_t0_closed(n), "Qnn(q,0) {n}");
        }
        for n in 1..=4 {
            assert!(elliptic_q(n, n).unwrap().equals(&qnn_via_nabla(n)), "Qnn nabla {n}");
        }
        for n in 1..=3u32 {
            for m in 1..=(5 - n) {
                let lhs = super::super::nabla(&elliptic_q(m, n).unwrap());
                assert!(lhs.equals(&elliptic_q(m + n, n).unwrap()), "nabla Q{m}{n}");
            }
        }
    }
}
