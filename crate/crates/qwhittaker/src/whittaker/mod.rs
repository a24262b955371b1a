//! q-Whittaker polynomials `W_mu(q; z)` and their duals.

use crate::linalg::Matrix;
use crate::macdonald::{h_mu, htilde, kostka_foulkes, QTMatrix};
use crate::partitions::{partitions_of, Partition};
use crate::qt_ring::{qfactorial, QTPoly, QTRational, Subst};
use crate::symfunc::{transition, Alphabet, Basis, SymFunc};
use num_bigint::BigInt;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WhittakerError {
    #[error("construction routes disagree for W{0}")]
    RouteMismatch(String),
    #[error("g_mu is not a polynomial for {0}")]
    NonPolynomialG(String),
}

/// `W_mu = sum_lambda K_{lambda' mu'}(q) s_lambda`.
pub fn w(mu: &Partition) -> SymFunc {
    static C: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    let m = C.get_or_init(Default::default);
    if let Some(v) = m.lock().unwrap().get(mu) {
        return v.clone();
    }
    let mc = mu.conjugate();
    let v = SymFunc::from_terms(
        Basis::S,
        partitions_of(mu.size()).into_iter().map(|lam| {
            let k = kostka_foulkes(&lam.conjugate(), &mc);
            (lam, QTRational::from(k))
        }),
    );
    m.lock().unwrap().insert(mu.clone(), v.clone());
    v
}

/// Coefficient of `t^{eta(mu)}` in `H~_mu`.
pub fn w_from_htilde(mu: &Partition) -> SymFunc {
    let e = mu.eta() as u32;
    htilde(mu).map_coeffs(|c| c.as_poly().expect("H~ is polynomial").t_coeff(e).into())
}

/// `H_mu(q, 0)`.
pub fn w_from_h(mu: &Partition) -> SymFunc {
    h_mu(mu).specialize(&Subst::TZero).expect("polynomial coefficients")
}

/// Runs all three constructions and reports disagreement.
pub fn w_checked(mu: &Partition) -> Result<SymFunc, WhittakerError> {
    let a = w(mu);
    if !w_from_htilde(mu).equals(&a) || !w_from_h(mu).equals(&a) {
        return Err(WhittakerError::RouteMismatch(mu.label()));
    }
    Ok(a)
}

/// `v_mu = prod_{l(c)=0} (1 - q^{a(c)+1})`.
pub fn v_mu(mu: &Partition) -> QTPoly {
    mu.v_mu()
}

/// `W^_mu = W_mu / v_mu`.
pub fn w_hat(mu: &Partition) -> SymFunc {
    w(mu).scale(&QTRational::new(QTPoly::one(), v_mu(mu)))
}

/// `sigma_mu(i) = mu_i - mu_{i+1}`, the number of columns of height `i`.
pub fn sigma(mu: &Partition) -> Vec<u32> {
    (1..=mu.len()).map(|i| mu.part(i) - mu.part(i + 1)).collect()
}

/// `prod_i sigma_mu(i)!_q`.
pub fn sigma_factorial(mu: &Partition) -> QTPoly {
    sigma(mu).into_iter().map(|s| qfactorial(s as u64)).product()
}

/// Number of standard tableaux of shape `lambda`.
pub fn f_lambda(lambda: &Partition) -> BigInt {
    transition::character(lambda, &Partition::column(lambda.size()))
}

/// Hilbert series `W_mu(q) = <W_mu, p_1^n>`.
pub fn hilbert(mu: &Partition) -> QTPoly {
    w(mu).terms().iter().map(|(lam, c)| c.as_poly().expect("polynomial").scale(&f_lambda(lam))).sum()
}

/// `g_mu = W_mu(q) / prod sigma_mu(i)!_q`.
pub fn g_mu(mu: &Partition) -> Result<QTPoly, WhittakerError> {
    hilbert(mu).div_exact(&sigma_factorial(mu)).ok_or_else(|| WhittakerError::NonPolynomialG(mu.label()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookSide {
    Plain,
    Omega,
}

/// Closed form for `W_mu[q; 1-u]` (plain) or `(omega W_mu)[q; 1-u]`. The variable `u`
/// is returned in the `t` slot.
pub fn hook_eval(mu: &Partition, side: HookSide) -> QTRational {
    let n = mu.size() as i64;
    let mut r = QTRational::monomial(mu.conjugate().eta() as i64, 0);
    if side == HookSide::Plain {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        r = r.mul_monomial(0, n).scale_int(&BigInt::from(sign));
    }
    for (i, j) in mu.cells() {
        if mu.arm_leg(i, j).1 == 0 {
            let x = match side {
                HookSide::Plain => QTRational::monomial(-(i as i64), -1),
                HookSide::Omega => QTRational::monomial(-(i as i64), 1),
            };
            r = &r * &(&QTRational::one() - &x);
        }
    }
    r
}

/// `W_mu[q; 1-u]` by plethysm, `u` in the `t` slot.
pub fn hook_eval_direct(mu: &Partition, side: HookSide) -> QTRational {
    let f = match side {
        HookSide::Plain => w(mu),
        HookSide::Omega => w(mu).omega(),
    };
    crate::symfunc::plethysm_scalar(&f, &(Alphabet::one() - Alphabet::t())).expect("well-formed")
}

/// Coefficients of the hooks `s_{(n-k,1^k)}`, `k = 0..n-1`, in `W_mu`, read off the hook evaluation.
pub fn hook_coefficients(mu: &Partition) -> Vec<QTPoly> {
    let n = mu.size();
    // W[1-u] = (1-u) sum_k c_k (-u)^k
    let quotient = &hook_eval(mu, HookSide::Plain) / &QTRational::new(crate::qt_ring::one_minus_t_pow(1), QTPoly::one());
    let poly = quotient.as_poly().expect("divisible by 1-u");
    (0..n).map(|k| {
        let c = poly.t_coeff(k);
        if k % 2 == 0 { c } else { -c }
    }).collect()
}

/// Per-degree W data: `kw` has row `mu` equal to the Schur coefficients of `W_mu`.
pub struct WhittakerBasis {
    pub n: u32,
    pub parts: Vec<Partition>,
    pub kw: QTMatrix,
    pub kw_inv: QTMatrix,
    pub v: Vec<QTPoly>,
}

pub fn basis(n: u32) -> Arc<WhittakerBasis> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<WhittakerBasis>>>> = OnceLock::new();
    let m = C.get_or_init(Default::default);
    if let Some(b) = m.lock().unwrap().get(&n) {
        return b.clone();
    }
    let parts = transition::index(n).parts.clone();
    let kw = Matrix::from_rows(parts.iter().map(|mu| w(mu).to_vec(Basis::S, n)).collect());
    let kw_inv = kw.inverse().expect("unitriangular");
    let v = parts.iter().map(v_mu).collect();
    let b = Arc::new(WhittakerBasis { n, parts, kw, kw_inv, v });
    m.lock().unwrap().insert(n, b.clone());
    b
}

/// The matrix `(K_{lambda' mu'}(q))`, rows `mu`, columns `lambda`.
pub fn kostka_w_matrix(n: u32) -> QTMatrix {
    basis(n).kw.clone()
}

/// A finite linear combination of indexed basis elements, displayed with a given prefix.
#[derive(Clone, Debug, PartialEq)]
pub struct WExpansion {
    pub name: String,
    pub terms: BTreeMap<Partition, QTRational>,
}

impl WExpansion {
    pub fn new(name: &str) -> Self {
        WExpansion { name: name.into(), terms: BTreeMap::new() }
    }

    pub fn coeff(&self, mu: &Partition) -> QTRational {
        self.terms.get(mu).cloned().unwrap_or_else(QTRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mu: Partition, c: QTRational) {
        let v = &self.coeff(&mu) + &c;
        if v.is_zero() {
            self.terms.remove(&mu);
        } else {
            self.terms.insert(mu, v);
        }
    }

    pub fn add(&self, other: &WExpansion) -> WExpansion {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WExpansion) -> WExpansion {
        self.add(&other.scale(&QTRational::int(-1)))
    }

    pub fn scale(&self, c: &QTRational) -> WExpansion {
        let mut out = WExpansion::new(&self.name);
        if !c.is_zero() {
            for (mu, x) in &self.terms {
                out.terms.insert(mu.clone(), x * c);
            }
        }
        out
    }

    /// Applies a map defined on single basis elements linearly.
    pub fn map_linear(&self, f: impl Fn(&Partition) -> WExpansion) -> WExpansion {
        let mut out = WExpansion::new(&self.name);
        for (mu, c) in &self.terms {
            out = out.add(&f(mu).scale(c));
        }
        out
    }
}

impl fmt::Display for WExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = SymFunc::from_terms(Basis::S, self.terms.clone());
        write!(f, "{}", s.display_with(&self.name))
    }
}

/// Which dual family to expand in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WKind {
    W,
    WHat,
}

/// WExpansion of `f` in the `W` or `W^` basis, degree by degree.
pub fn expand_in_w(f: &SymFunc, kind: WKind) -> WExpansion {
    let mut terms = BTreeMap::new();
    for n in f.degrees() {
        let b = basis(n);
        let c = b.kw_inv.vec_mul(&f.homogeneous_part(n).to_vec(Basis::S, n));
        for ((mu, x), v) in b.parts.iter().zip(c).zip(&b.v) {
            if x.is_zero() {
                continue;
            }
            let x = match kind {
                WKind::W => x,
                WKind::WHat => &x * &QTRational::from(v.clone()),
            };
            terms.insert(mu.clone(), x);
        }
    }
    let name = match kind {
        WKind::W => "W",
        WKind::WHat => "What",
    };
    WExpansion { name: name.into(), terms }
}

/// `sum c_mu W_mu` (or `W^_mu`) back to the Schur basis.
pub fn from_w(e: &WExpansion, kind: WKind) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for (mu, c) in &e.terms {
        let f = match kind {
            WKind::W => w(mu),
            WKind::WHat => w_hat(mu),
        };
        out = out.add(&f.scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::p;
    use crate::symfunc::parse_symfunc;

    fn sf(s: &str) -> SymFunc {
        parse_symfunc(s).unwrap()
    }

    #[test]
    fn three_routes() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                w_checked(&mu).unwrap();
            }
        }
        assert!(w(&p(&[3, 2])).equals(&sf("s32 + q*s311 + (q^2+q)*s221 + (q^3+q^2)*s2111 + q^4*s11111")));
    }

    #[test]
    fn duals_and_hilbert() {
        assert!(w_hat(&p(&[1, 1, 1])).equals(&SymFunc::e(3).scale(&crate::qt_ring::parse_qt("1/(1-q)").unwrap())));
        let z = crate::symfunc::z() / (Alphabet::one() - Alphabet::q());
        assert!(w_hat(&p(&[3])).equals(&SymFunc::h(3).pleth(&z)));
        assert_eq!(hilbert(&p(&[3])), qfactorial(3));
        assert_eq!(g_mu(&p(&[2, 1])).unwrap(), crate::qt_ring::parse_qt("q+2").unwrap().as_poly().unwrap().clone());
        assert!(hilbert(&p(&[1, 1])).is_one());
    }

    #[test]
    fn hook_formulas() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                for side in [HookSide::Plain, HookSide::Omega] {
                    assert_eq!(hook_eval(&mu, side), hook_eval_direct(&mu, side), "{mu} {side:?}");
                }
                let hc = hook_coefficients(&mu);
                for (k, c) in hc.iter().enumerate() {
                    let mut parts = vec![n - k as u32];
                    parts.extend(std::iter::repeat_n(1, k));
                    assert_eq!(QTRational::from(c.clone()), w(&mu).coeff(&Partition::new(parts).unwrap()));
                }
            }
        }
    }

    #[test]
    fn w_expansion_round_trip() {
        let f = htilde(&p(&[2, 2]));
        for kind in [WKind::W, WKind::WHat] {
            assert!(from_w(&expand_in_w(&f, kind), kind).equals(&f));
        }
    }
}
