//! Exact arithmetic in `Z[q,t]` and `Q(q,t)`, plus q-analogs.

mod gcd;
mod parse;
mod poly;
mod rational;

pub use gcd::{normalize_sign, poly_gcd};
pub use parse::parse_qt;
pub use poly::{Mono, QTPoly};
pub use rational::QTRational;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QtError {
    #[error("denominator vanishes under substitution")]
    DenominatorVanishes,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A natural number or infinity, as used for arm lengths of external cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub fn is_inf(self) -> bool {
        matches!(self, ExtNat::Inf)
    }

    pub fn fin(self) -> Option<u64> {
        match self {
            ExtNat::Fin(n) => Some(n),
            ExtNat::Inf => None,
        }
    }

    /// `self + k`, saturating at infinity.
    pub fn plus(self, k: u64) -> ExtNat {
        match self {
            ExtNat::Fin(n) => ExtNat::Fin(n + k),
            ExtNat::Inf => ExtNat::Inf,
        }
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Fin(n)
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{n}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}` as a polynomial (zero for `n <= 0`).
pub fn qint_poly(n: i64) -> QTPoly {
    if n <= 0 {
        return QTPoly::zero();
    }
    QTPoly::from_terms((0..n as u32).map(|a| ((a, 0), BigInt::one())))
}

/// `[n]_q!` as a polynomial.
pub fn qfactorial(n: u64) -> QTPoly {
    (1..=n as i64).map(qint_poly).product()
}

/// Gaussian binomial as a polynomial; zero unless `0 <= k <= n`.
pub fn qbinom_poly(n: i64, k: i64) -> QTPoly {
    if k < 0 || n < 0 || k > n {
        return QTPoly::zero();
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    // Pascal recurrence on coefficient vectors: [n,k] = [n-1,k-1] + q^k [n-1,k].
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let mut next: Vec<Vec<BigInt>> = Vec::with_capacity(k + 1);
        for j in 0..=k.min(m) {
            let mut v: Vec<BigInt> = Vec::new();
            if j >= 1 {
                v = row[j - 1].clone();
            }
            if j < row.len() {
                let shifted = &row[j];
                if v.len() < shifted.len() + j {
                    v.resize(shifted.len() + j, BigInt::zero());
                }
                for (i, c) in shifted.iter().enumerate() {
                    v[i + j] += c;
                }
            }
            next.push(v);
        }
        row = next;
    }
    QTPoly::from_q_coeffs(&row[k])
}

/// `[n]_q`, with `[inf]_q = 1/(1-q)`.
pub fn q_analog(n: ExtNat) -> QTRational {
    match n {
        ExtNat::Fin(n) => qint_poly(n as i64).into(),
        ExtNat::Inf => QTRational::new(QTPoly::one(), one_minus_q_pow(1)),
    }
}

/// Gaussian binomial; for `n = inf` returns `prod_{i=1..k} 1/(1-q^i)`.
pub fn q_binomial(n: ExtNat, k: u64) -> QTRational {
    match n {
        ExtNat::Fin(n) => qbinom_poly(n as i64, k as i64).into(),
        ExtNat::Inf => {
            let den: QTPoly = (1..=k as u32).map(one_minus_q_pow).product();
            QTRational::new(QTPoly::one(), den)
        }
    }
}

/// `1 - q^k`.
pub fn one_minus_q_pow(k: u32) -> QTPoly {
    &QTPoly::one() - &QTPoly::q_pow(k)
}

/// `1 - t^k`.
pub fn one_minus_t_pow(k: u32) -> QTPoly {
    &QTPoly::one() - &QTPoly::t_pow(k)
}

/// Substitution rules accepted by [`specialize`].
#[derive(Debug, Clone, PartialEq)]
pub enum Subst {
    TZero,
    TInvQ,
    QZero,
    Swap,
    Power(u32),
    Q(QTRational),
    T(QTRational),
}

fn eval_poly(p: &QTPoly, qv: &QTRational, tv: &QTRational) -> QTRational {
    let mut qpows: Vec<QTRational> = vec![QTRational::one()];
    let mut tpows: Vec<QTRational> = vec![QTRational::one()];
    let mut acc = QTRational::zero();
    for ((a, b), c) in p.terms() {
        while qpows.len() <= *a as usize {
            let nx = qpows.last().unwrap() * qv;
            qpows.push(nx);
        }
        while tpows.len() <= *b as usize {
            let nx = tpows.last().unwrap() * tv;
            tpows.push(nx);
        }
        acc += &(&qpows[*a as usize] * &tpows[*b as usize]).scale_int(c);
    }
    acc
}

/// Applies a substitution to a polynomial. Total except for `t := 1/q`, which
/// needs a fraction and is handled in [`specialize`].
fn specialize_poly(p: &QTPoly, rule: &Subst) -> QTRational {
    match rule {
        Subst::TZero => p.at_t_zero().into(),
        Subst::QZero => p.at_q_zero().into(),
        Subst::Swap => p.swap_qt().into(),
        Subst::Power(k) => p.power_subs(*k).into(),
        Subst::TInvQ => {
            let (n, s) = p.at_t_inv_q();
            QTRational::from(n).mul_monomial(-(s as i64), 0)
        }
        Subst::Q(v) => eval_poly(p, v, &QTRational::t()),
        Subst::T(v) => eval_poly(p, &QTRational::q(), v),
    }
}

/// Substitutes into a reduced fraction and re-normalises.
pub fn specialize(r: &QTRational, rule: &Subst) -> Result<QTRational, QtError> {
    let den = specialize_poly(r.den(), rule);
    if den.is_zero() {
        return Err(QtError::DenominatorVanishes);
    }
    let num = specialize_poly(r.num(), rule);
    Ok(&num / &den)
}

/// Convenience: `r(q, 0)`.
pub fn at_t0(r: &QTRational) -> Result<QTRational, QtError> {
    specialize(r, &Subst::TZero)
}

/// Convenience: `r(q, 1/q)`.
pub fn at_t_inv_q(r: &QTRational) -> Result<QTRational, QtError> {
    specialize(r, &Subst::TInvQ)
}

impl QTRational {
    pub fn specialize(&self, rule: &Subst) -> Result<QTRational, QtError> {
        specialize(self, rule)
    }

    pub fn swap_qt(&self) -> QTRational {
        specialize(self, &Subst::Swap).expect("swap is invertible")
    }

    pub fn power_subs(&self, k: u32) -> QTRational {
        specialize(self, &Subst::Power(k)).expect("power substitution keeps denominators")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QTRational {
        parse_qt(s).unwrap()
    }

    #[test]
    fn q_analogs() {
        assert_eq!(q_analog(ExtNat::Fin(3)), p("1+q+q^2"));
        assert!(q_analog(ExtNat::Fin(0)).is_zero());
        assert_eq!(q_analog(ExtNat::Inf), p("1/(1-q)"));
        assert_eq!(q_binomial(ExtNat::Fin(4), 2), p("1+q+2q^2+q^3+q^4"));
        assert!(q_binomial(ExtNat::Fin(7), 0).is_one());
        assert!(q_binomial(ExtNat::Fin(2), 3).is_zero());
        assert_eq!(q_binomial(ExtNat::Inf, 2), p("1/((1-q)(1-q^2))"));
        assert!(qbinom_poly(-1, 0).is_zero());
    }

    #[test]
    fn q_binomial_brute_force() {
        // Sum over k-subsets of {0..n-1} of q^{sum - k(k-1)/2}.
        for n in 0..8u32 {
            for k in 0..=n {
                let mut terms = Vec::new();
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() == k {
                        let s: u32 = (0..n).filter(|i| mask >> i & 1 == 1).sum();
                        terms.push(((s - k * (k.saturating_sub(1)) / 2, 0), BigInt::one()));
                    }
                }
                assert_eq!(qbinom_poly(n as i64, k as i64), QTPoly::from_terms(terms));
            }
        }
    }

    #[test]
    fn specializations() {
        assert_eq!(specialize(&p("q^2 t + q"), &Subst::TZero).unwrap(), p("q"));
        assert_eq!(specialize(&p("q+t"), &Subst::Swap).unwrap(), p("q+t"));
        assert!(specialize(&p("(1-q t)/(1-q)"), &Subst::TInvQ).unwrap().is_zero());
        assert_eq!(specialize(&p("1/t"), &Subst::TZero), Err(QtError::DenominatorVanishes));
        assert_eq!(specialize(&p("(q+t)/(1-t)"), &Subst::T(QTRational::int(2))).unwrap(), p("-q-2"));
        assert_eq!(specialize(&p("q t^2"), &Subst::TInvQ).unwrap(), p("q^-1"));
        assert_eq!(specialize(&p("q+t^2"), &Subst::Power(2)).unwrap(), p("q^2+t^4"));
    }
}
