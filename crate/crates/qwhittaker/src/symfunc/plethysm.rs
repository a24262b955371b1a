//! Plethystic substitution `f[A]` for formal alphabets.

use super::{Basis, SymFunc};
use crate::partitions::Partition;
use crate::qt_ring::{QTRational, Subst};
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlethysmError {
    #[error("ill-formed alphabet: {0}")]
    IllFormedAlphabet(String),
}

/// A formal plethystic argument.
#[derive(Debug, Clone, PartialEq)]
pub enum Alphabet {
    /// A set of variables `x = x_1 + x_2 + ...`.
    Var(String),
    /// The power sum `p_j` of a variable set.
    PowerSum(String, u32),
    /// Expression in `q`, `t` whose letters behave as variables: `p_k[R] = R(q^k, t^k)`.
    Monomials(QTRational),
    /// A constant: `p_k[c] = c`.
    Constant(QTRational),
    Epsilon,
    Sum(Vec<Alphabet>),
    Neg(Box<Alphabet>),
    Prod(Box<Alphabet>, Box<Alphabet>),
    Quot(Box<Alphabet>, Box<Alphabet>),
}

impl Alphabet {
    pub fn var(name: &str) -> Self {
        Alphabet::Var(name.to_string())
    }

    pub fn q() -> Self {
        Alphabet::Monomials(QTRational::q())
    }

    pub fn t() -> Self {
        Alphabet::Monomials(QTRational::t())
    }

    pub fn one() -> Self {
        Alphabet::Monomials(QTRational::one())
    }

    pub fn int(n: i64) -> Self {
        Alphabet::Monomials(QTRational::int(n))
    }

    pub fn rational(r: QTRational) -> Self {
        Alphabet::Monomials(r)
    }
}

impl Add for Alphabet {
    type Output = Alphabet;
    fn add(self, o: Alphabet) -> Alphabet {
        Alphabet::Sum(vec![self, o])
    }
}

impl Sub for Alphabet {
    type Output = Alphabet;
    fn sub(self, o: Alphabet) -> Alphabet {
        Alphabet::Sum(vec![self, Alphabet::Neg(Box::new(o))])
    }
}

impl Mul for Alphabet {
    type Output = Alphabet;
    fn mul(self, o: Alphabet) -> Alphabet {
        Alphabet::Prod(Box::new(self), Box::new(o))
    }
}

impl Div for Alphabet {
    type Output = Alphabet;
    fn div(self, o: Alphabet) -> Alphabet {
        Alphabet::Quot(Box::new(self), Box::new(o))
    }
}

impl Neg for Alphabet {
    type Output = Alphabet;
    fn neg(self) -> Alphabet {
        Alphabet::Neg(Box::new(self))
    }
}

/// A monomial in power sums of several named variable sets.
pub type PMono = BTreeMap<String, Partition>;

/// Polynomial in power sums of several variable sets, with `Q(q,t)` coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Tensor {
    terms: BTreeMap<PMono, QTRational>,
}

impl Tensor {
    pub fn zero() -> Self {
        Tensor::default()
    }

    pub fn scalar(c: QTRational) -> Self {
        let mut t = Tensor::zero();
        t.add_term(PMono::new(), c);
        t
    }

    pub fn terms(&self) -> &BTreeMap<PMono, QTRational> {
        &self.terms
    }

    pub fn add_term(&mut self, m: PMono, c: QTRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Tensor {
        Tensor { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn mul(&self, o: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let mut m = a.clone();
                for (name, p) in b {
                    let merged = match m.get(name) {
                        Some(x) => {
                            let mut v = x.parts().to_vec();
                            v.extend_from_slice(p.parts());
                            Partition::from_unsorted(v)
                        }
                        None => p.clone(),
                    };
                    m.insert(name.clone(), merged);
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// The constant value, if no variable set occurs.
    pub fn as_scalar(&self) -> Option<QTRational> {
        match self.terms.len() {
            0 => Some(QTRational::zero()),
            1 => self.terms.get(&PMono::new()).cloned(),
            _ => None,
        }
    }

    /// Tensor product `f(x) g(y) ...` of single-set functions.
    pub fn product_of(factors: &[(&str, &SymFunc)]) -> Tensor {
        let mut out = Tensor::scalar(QTRational::one());
        for (name, f) in factors {
            let mut t = Tensor::zero();
            for (p, c) in f.to_basis(Basis::P).terms() {
                let mut m = PMono::new();
                if !p.is_empty() {
                    m.insert(name.to_string(), p.clone());
                }
                t.add_term(m, c.clone());
            }
            out = out.mul(&t);
        }
        out
    }

    /// Reads the tensor as a function of the single set `name`, in the p basis.
    pub fn into_single(&self, name: &str) -> Result<SymFunc, PlethysmError> {
        let mut f = SymFunc::zero(Basis::P);
        for (m, c) in &self.terms {
            let p = match (m.len(), m.get(name)) {
                (0, _) => Partition::empty(),
                (1, Some(p)) => p.clone(),
                _ => return Err(PlethysmError::IllFormedAlphabet(format!("result involves sets other than {name}"))),
            };
            f.add_term(p, c.clone());
        }
        Ok(f)
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> QTRational) -> Tensor {
        let mut out = Tensor::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }
}

/// `p_k[A]`.
pub fn p_k(a: &Alphabet, k: u32) -> Result<Tensor, PlethysmError> {
    Ok(match a {
        Alphabet::Var(x) => Tensor { terms: BTreeMap::from([(PMono::from([(x.clone(), Partition::row(k))]), QTRational::one())]) },
        Alphabet::PowerSum(x, j) => {
            Tensor { terms: BTreeMap::from([(PMono::from([(x.clone(), Partition::row(k * j))]), QTRational::one())]) }
        }
        Alphabet::Monomials(r) => Tensor::scalar(r.specialize(&Subst::Power(k)).expect("power map keeps denominators")),
        Alphabet::Constant(c) => Tensor::scalar(c.clone()),
        Alphabet::Epsilon => Tensor::scalar(QTRational::int(if k.is_multiple_of(2) { 1 } else { -1 })),
        Alphabet::Sum(v) => {
            let mut out = Tensor::zero();
            for x in v {
                out = out.add(&p_k(x, k)?);
            }
            out
        }
        Alphabet::Neg(x) => p_k(x, k)?.neg(),
        Alphabet::Prod(x, y) => p_k(x, k)?.mul(&p_k(y, k)?),
        Alphabet::Quot(x, y) => {
            let d = p_k(y, k)?
                .as_scalar()
                .ok_or_else(|| PlethysmError::IllFormedAlphabet("division by an alphabet involving variable sets".into()))?;
            if d.is_zero() {
                return Err(PlethysmError::IllFormedAlphabet("division by zero".into()));
            }
            p_k(x, k)?.map_coeffs(|c| c / &d)
        }
    })
}

/// `f[A]` as a polynomial in power sums of the variable sets of `A`.
pub fn plethysm(f: &SymFunc, a: &Alphabet) -> Result<Tensor, PlethysmError> {
    let fp = f.to_basis(Basis::P);
    let mut cache: HashMap<u32, Tensor> = HashMap::new();
    let mut out = Tensor::zero();
    for (lam, c) in fp.terms() {
        let mut term = Tensor::scalar(c.clone());
        for &k in lam.parts() {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(k) {
                e.insert(p_k(a, k)?);
            }
            term = term.mul(&cache[&k]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `f[A]` when `A` involves at most the set `z`; returned in the basis of `f`.
pub fn plethysm_single(f: &SymFunc, a: &Alphabet, z: &str) -> Result<SymFunc, PlethysmError> {
    Ok(plethysm(f, a)?.into_single(z)?.to_basis(f.basis()))
}

/// `f[A]` when `A` involves no variable set.
pub fn plethysm_scalar(f: &SymFunc, a: &Alphabet) -> Result<QTRational, PlethysmError> {
    plethysm(f, a)?.as_scalar().ok_or_else(|| PlethysmError::IllFormedAlphabet("result is not a scalar".into()))
}

/// `e_b^perp f`, in the basis of `f`.
pub fn e_skew_series(f: &SymFunc, b: u32) -> SymFunc {
    SymFunc::perp(&SymFunc::e(b), f)
}

impl SymFunc {
    /// `f[A]` for an alphabet in the single set `z`.
    pub fn pleth(&self, a: &Alphabet) -> SymFunc {
        plethysm_single(self, a, "z").expect("alphabet in the set z")
    }
}

/// `z`.
pub fn z() -> Alphabet {
    Alphabet::var("z")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};
    use crate::qt_ring::QTPoly;

    #[test]
    fn epsilon_gives_signed_omega() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                let f = SymFunc::s(&mu);
                let minus_eps = f.pleth(&(-(Alphabet::Epsilon * z())));
                assert!(minus_eps.equals(&f.omega()), "{mu}");
                // With p_k[eps] = (-1)^k, f[eps z] is omega f evaluated at -z.
                let eps = f.pleth(&(Alphabet::Epsilon * z()));
                assert!(eps.equals(&f.omega().pleth(&(-z()))));
            }
        }
    }

    #[test]
    fn geometric_series_specialization() {
        let a = Alphabet::one() / (Alphabet::one() - Alphabet::q());
        for n in 1..=5 {
            let v = plethysm_scalar(&SymFunc::h(n), &a).unwrap();
            let den: QTPoly = (1..=n).map(crate::qt_ring::one_minus_q_pow).product();
            assert_eq!(v, QTRational::new(QTPoly::one(), den));
        }
    }

    #[test]
    fn hook_evaluation() {
        // u is carried by t.
        let a = Alphabet::one() - Alphabet::t();
        for n in 1..=5u32 {
            for mu in partitions_of(n) {
                let v = plethysm_scalar(&SymFunc::s(&mu), &a).unwrap();
                let k = mu.len() as u32 - 1;
                let is_hook = mu.parts()[1..].iter().all(|&x| x == 1);
                let expect = if is_hook {
                    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
                    QTRational::from(QTPoly::monomial(sign, 0, k)) * QTRational::from(crate::qt_ring::one_minus_t_pow(1))
                } else {
                    QTRational::zero()
                };
                assert_eq!(v, expect, "{mu}");
            }
        }
    }

    #[test]
    fn e_skewing_matches_alphabet_shift() {
        let f = crate::symfunc::parse_symfunc("s4 + (q^2+q+t)*s31 + (q^2+q t)*s22 + (q^3+q^2 t+q t)*s211 + q^3 t*s1111").unwrap();
        // u in the t slot would clash with t in the coefficients; use a fresh set u instead.
        let shifted = plethysm(&f, &(z() - Alphabet::Epsilon * Alphabet::var("u"))).unwrap();
        for b in 0..=4 {
            let mut part = Tensor::zero();
            for (m, c) in shifted.terms() {
                let deg = m.get("u").map_or(0, |p| p.size());
                if deg == b {
                    // u is a single variable: p_lambda(u) = u^{|lambda|}.
                    let mut m2 = m.clone();
                    m2.remove("u");
                    part.add_term(m2, c.clone());
                }
            }
            let lhs = part.into_single("z").unwrap();
            assert!(lhs.equals(&e_skew_series(&f, b)), "b = {b}");
        }
        assert!(e_skew_series(&SymFunc::h(2), 1).equals(&SymFunc::h(1)));
        assert_eq!(e_skew_series(&SymFunc::s(&p(&[2, 2])), 2).to_basis(Basis::S).to_string(), "s11");
    }

    #[test]
    fn tensor_rule_and_cauchy() {
        // p_k[p_j(x) p_l(y)] = p_{kj}(x) p_{kl}(y)
        let a = Alphabet::PowerSum("x".into(), 2) * Alphabet::PowerSum("y".into(), 3);
        let t = p_k(&a, 2).unwrap();
        let m = PMono::from([("x".to_string(), p(&[4])), ("y".to_string(), p(&[6]))]);
        assert_eq!(t.terms().get(&m), Some(&QTRational::one()));
        // h_n[xy] = sum s_l(x) s_l(y)
        for n in 1..=5 {
            let lhs = plethysm(&SymFunc::h(n), &(Alphabet::var("x") * Alphabet::var("y"))).unwrap();
            let mut rhs = Tensor::zero();
            for lam in partitions_of(n) {
                let s = SymFunc::s(&lam);
                rhs = rhs.add(&Tensor::product_of(&[("x", &s), ("y", &s)]));
            }
            assert_eq!(lhs, rhs);
        }
    }
}
