//! Macdonald polynomials `P`, `H`, `H~`, Hall-Littlewood functions, charge
//! Kostka-Foulkes polynomials and Macdonald eigenoperators.

mod charge;
mod hhl;

pub use charge::{charge, kostka_foulkes, ssyt, ChargeTableau};
pub use hhl::{htilde_hhl, monomial_coefficient};

use crate::linalg::Matrix;
use crate::partitions::{partitions_of, Partition};
use crate::qt_ring::{one_minus_q_pow, one_minus_t_pow, QTPoly, QTRational, Subst};
use crate::symfunc::{transition, Alphabet, Basis, SymFunc};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub type QTMatrix = Matrix<QTRational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MacdonaldError {
    #[error("expected a polynomial result for {0}")]
    NonPolynomialResult(String),
}

fn memo<K: std::hash::Hash + Eq + Clone, V: Clone>(cache: &'static OnceLock<Mutex<HashMap<K, V>>>, key: K, f: impl FnOnce() -> V) -> V {
    let m = cache.get_or_init(Default::default);
    if let Some(v) = m.lock().unwrap().get(&key) {
        return v.clone();
    }
    let v = f();
    m.lock().unwrap().insert(key, v.clone());
    v
}

/// Modified Macdonald polynomial `H~_mu(q,t)` in the Schur basis.
pub fn htilde(mu: &Partition) -> SymFunc {
    static C: OnceLock<Mutex<HashMap<Partition, SymFunc>>> = OnceLock::new();
    memo(&C, mu.clone(), || htilde_hhl(mu))
}

/// `H_mu = t^{eta(mu)} H~_mu(q, 1/t)`.
pub fn h_mu(mu: &Partition) -> SymFunc {
    let e = mu.eta() as i64;
    htilde(mu).map_coeffs(|c| c.specialize(&Subst::T(QTRational::monomial(0, -1))).unwrap().mul_monomial(0, e))
}

/// `prod_{c in mu} (q^{a(c)} - t^{l(c)+1})`.
pub fn arm_leg_product(mu: &Partition) -> QTPoly {
    mu.cells()
        .map(|(i, j)| {
            let (a, l) = mu.arm_leg(i, j);
            &QTPoly::q_pow(a) - &QTPoly::t_pow(l + 1)
        })
        .product()
}

/// `prod_{c in mu} (1 - q^{a(c)} t^{l(c)+1})`, the integral-form normalisation.
pub fn integral_form_constant(mu: &Partition) -> QTPoly {
    mu.cells()
        .map(|(i, j)| {
            let (a, l) = mu.arm_leg(i, j);
            &QTPoly::one() - &QTPoly::monomial(1, a, l + 1)
        })
        .product()
}

/// `<p_l, p_l>_{q,t}` weight.
fn qt_weight(p: &Partition) -> QTRational {
    let mut w = QTRational::int(p.z());
    for &k in p.parts() {
        w = &w * &QTRational::new(one_minus_q_pow(k), one_minus_t_pow(k));
    }
    w
}

/// Gram-Schmidt in the monomial basis along the given linear extension of
/// dominance (listed from the top element down). Returns `P_mu` in the p basis.
pub fn gram_schmidt_p(order: &[Partition]) -> HashMap<Partition, SymFunc> {
    let n = order.first().map_or(0, |p| p.size());
    let idx = transition::index(n);
    let weights: Vec<QTRational> = idx.parts.iter().map(qt_weight).collect();
    let form = |a: &[QTRational], b: &[QTRational]| -> QTRational {
        a.iter().zip(b).zip(&weights).filter(|((x, y), _)| !x.is_zero() && !y.is_zero()).map(|((x, y), w)| &(x * y) * w).sum()
    };
    let m_to_p = transition::transition(n, Basis::M, Basis::P);
    let mut done: Vec<(Partition, Vec<QTRational>, QTRational)> = Vec::new();
    let mut out = HashMap::new();
    for mu in order.iter().rev() {
        let row: Vec<QTRational> = m_to_p.row(idx.pos[mu]).iter().map(QTRational::from_rat).collect();
        let mut v = row.clone();
        for (_, pl, norm) in &done {
            let c = &form(&row, pl) / norm;
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(pl) {
                if !y.is_zero() {
                    *x -= &(&c * y);
                }
            }
        }
        let norm = form(&v, &v);
        out.insert(mu.clone(), SymFunc::from_vec(Basis::P, n, &v));
        done.push((mu.clone(), v, norm));
    }
    out
}

/// Macdonald `P_mu(q,t)` in the Schur basis.
pub fn p_mu(mu: &Partition) -> SymFunc {
    static C: OnceLock<Mutex<HashMap<u32, Arc<HashMap<Partition, SymFunc>>>>> = OnceLock::new();
    let all = memo(&C, mu.size(), || {
        let order = partitions_of(mu.size());
        Arc::new(gram_schmidt_p(&order).into_iter().map(|(k, v)| (k, v.to_basis(Basis::S))).collect())
    });
    all[mu].clone()
}

/// `H_mu` through the integral form: `J_mu[z/(1-t); q,t]` with `J_mu = P_mu prod (1 - q^a t^{l+1})`.
pub fn h_mu_integral_form(mu: &Partition) -> SymFunc {
    let j = p_mu(mu).scale(&integral_form_constant(mu).into());
    j.pleth(&(crate::symfunc::z() / (Alphabet::one() - Alphabet::t()))).to_basis(Basis::S)
}

/// The displayed definition taken literally: `P_mu[z/(1-t); q, 1/t] prod (q^a - t^{l+1})`.
pub fn h_mu_literal(mu: &Partition) -> SymFunc {
    let p_inv = p_mu(mu).specialize(&Subst::T(QTRational::monomial(0, -1))).unwrap();
    p_inv.pleth(&(crate::symfunc::z() / (Alphabet::one() - Alphabet::t()))).scale(&arm_leg_product(mu).into()).to_basis(Basis::S)
}

/// `H~_mu` from `H_mu` computed through `P`: `t^{eta} H(q, 1/t)`.
pub fn htilde_plethysm_route(mu: &Partition) -> SymFunc {
    let e = mu.eta() as i64;
    h_mu_integral_form(mu).map_coeffs(|c| c.specialize(&Subst::T(QTRational::monomial(0, -1))).unwrap().mul_monomial(0, e))
}

/// Schur-basis matrix of `f -> f[(1-x) z]` with `x = q` or `t`, rows indexed by `s_nu`.
pub fn one_minus_pleth_matrix(n: u32, use_t: bool) -> Arc<QTMatrix> {
    static C: OnceLock<Mutex<HashMap<(u32, bool), Arc<QTMatrix>>>> = OnceLock::new();
    memo(&C, (n, use_t), || {
        let idx = transition::index(n);
        let x = if use_t { Alphabet::t() } else { Alphabet::q() };
        let a = crate::symfunc::z() * (Alphabet::one() - x);
        let rows = idx.parts.iter().map(|nu| SymFunc::s(nu).pleth(&a).to_vec(Basis::S, n)).collect();
        Arc::new(Matrix::from_rows(rows))
    })
}

/// `H~_mu` as the unique solution of the triangularity system.
pub fn htilde_triangular(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let idx = transition::index(n);
    let aq = one_minus_pleth_matrix(n, false);
    let at = one_minus_pleth_matrix(n, true);
    let conj = mu.conjugate();
    let len = idx.parts.len();
    let mut rows: Vec<Vec<QTRational>> = Vec::new();
    let mut rhs = Vec::new();
    for (j, lam) in idx.parts.iter().enumerate() {
        if !lam.dominates(mu) {
            rows.push((0..len).map(|i| aq.get(i, j).clone()).collect());
            rhs.push(QTRational::zero());
        }
        if !lam.dominates(&conj) {
            rows.push((0..len).map(|i| at.get(i, j).clone()).collect());
            rhs.push(QTRational::zero());
        }
    }
    let mut norm = vec![QTRational::zero(); len];
    norm[idx.pos[&Partition::row(n)]] = QTRational::one();
    rows.push(norm);
    rhs.push(QTRational::one());
    let sol = Matrix::from_rows(rows).solve_unique(&rhs).expect("triangularity system has a unique solution");
    SymFunc::from_vec(Basis::S, n, &sol)
}

/// Which Macdonald family the (q,t)-Kostka matrix is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KostkaKind {
    Modified,
    Unmodified,
}

/// `(K_{lambda mu}(q,t))`, rows `lambda` (the polynomial), columns `s_mu`.
pub fn qt_kostka(n: u32, kind: KostkaKind) -> QTMatrix {
    let idx = transition::index(n);
    let rows = idx
        .parts
        .iter()
        .map(|lam| {
            let f = match kind {
                KostkaKind::Modified => htilde(lam),
                KostkaKind::Unmodified => h_mu(lam),
            };
            f.to_vec(Basis::S, n)
        })
        .collect();
    Matrix::from_rows(rows)
}

/// `Q'_mu(q) = sum_lambda K_{lambda mu}(q) s_lambda` with charge Kostka-Foulkes polynomials.
pub fn q_prime(mu: &Partition) -> SymFunc {
    SymFunc::from_terms(Basis::S, partitions_of(mu.size()).into_iter().map(|lam| {
        let k = kostka_foulkes(&lam, mu);
        (lam, QTRational::from(k))
    }))
}

/// `q^{deg} f(1/q)` on polynomial coefficients.
pub fn q_reverse(f: &SymFunc, deg: u32) -> SymFunc {
    f.map_coeffs(|c| c.specialize(&Subst::Q(QTRational::monomial(-1, 0))).unwrap().mul_monomial(deg as i64, 0))
}

/// The Hall-Littlewood function `H_mu(q) = H~_mu(q,0) = q^{eta(mu')} Q'_{mu'}(1/q)`.
pub fn hall_littlewood(mu: &Partition) -> SymFunc {
    let c = mu.conjugate();
    q_reverse(&q_prime(&c), c.eta() as u32)
}

/// `(<H_mu, s_lambda>)`, rows `mu`.
pub fn hall_littlewood_matrix(n: u32) -> QTMatrix {
    let idx = transition::index(n);
    Matrix::from_rows(idx.parts.iter().map(|mu| hall_littlewood(mu).to_vec(Basis::S, n)).collect())
}

/// `Q'_mu` by the triangular characterisation: `Q'_mu = s_mu + sum_{lambda > mu} c s_lambda`
/// with `Q'_mu[(1-q)z]` supported on `lambda <= mu`.
pub fn q_prime_triangular(mu: &Partition) -> SymFunc {
    let n = mu.size();
    let idx = transition::index(n);
    let aq = one_minus_pleth_matrix(n, false);
    let len = idx.parts.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (j, lam) in idx.parts.iter().enumerate() {
        if !mu.dominates(lam) {
            rows.push((0..len).map(|i| aq.get(i, j).clone()).collect::<Vec<_>>());
            rhs.push(QTRational::zero());
        }
        // support condition on Q'_mu itself
        if !lam.dominates(mu) || lam == mu {
            let mut r = vec![QTRational::zero(); len];
            r[j] = QTRational::one();
            rows.push(r);
            rhs.push(if lam == mu { QTRational::one() } else { QTRational::zero() });
        }
    }
    let sol = Matrix::from_rows(rows).solve_unique(&rhs).expect("unique solution");
    SymFunc::from_vec(Basis::S, n, &sol)
}

/// Per-degree data for Macdonald eigenoperators.
pub struct MacdonaldBasis {
    pub n: u32,
    pub parts: Vec<Partition>,
    /// Row `mu`: Schur coefficients of `H~_mu`.
    pub ht: QTMatrix,
    /// `ht * A_q`: row `mu` holds `H~_mu[z(1-q)]`, supported on `lambda >= mu`,
    /// so it is lower triangular in the partition order.
    pub u: QTMatrix,
    aq: Arc<QTMatrix>,
    ht_inv: OnceLock<QTMatrix>,
}

impl MacdonaldBasis {
    /// Inverse of `ht`, built on first use: `ht^{-1} = A_q u^{-1}`.
    pub fn ht_inv(&self) -> &QTMatrix {
        self.ht_inv.get_or_init(|| self.aq.mul(&self.u.inverse().expect("triangular and invertible")))
    }

    /// Coordinates of a Schur vector in the `H~` basis, by back substitution.
    pub fn solve(&self, f: &[QTRational]) -> Vec<QTRational> {
        let g = self.aq.vec_mul(f);
        let len = self.parts.len();
        let mut c = vec![QTRational::zero(); len];
        for l in (0..len).rev() {
            let mut acc = g[l].clone();
            for m in l + 1..len {
                let v = self.u.get(m, l);
                if !v.is_zero() && !c[m].is_zero() {
                    acc = &acc - &(&c[m] * v);
                }
            }
            if !acc.is_zero() {
                c[l] = &acc / self.u.get(l, l);
            }
        }
        c
    }
}

pub fn basis(n: u32) -> Arc<MacdonaldBasis> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<MacdonaldBasis>>>> = OnceLock::new();
    memo(&C, n, || {
        let idx = transition::index(n);
        let ht = Matrix::from_rows(idx.parts.iter().map(|mu| htilde(mu).to_vec(Basis::S, n)).collect());
        let aq = one_minus_pleth_matrix(n, false);
        let u = ht.mul(&aq);
        Arc::new(MacdonaldBasis { n, parts: idx.parts.clone(), ht, u, aq, ht_inv: OnceLock::new() })
    })
}

/// Coordinates of a degree-`n` function in the `H~` basis.
pub fn expand_in_htilde(f: &SymFunc, n: u32) -> Vec<QTRational> {
    basis(n).solve(&f.to_vec(Basis::S, n))
}

/// Schur-basis matrix (row convention) of the eigenoperator with eigenvalue `ev(mu)` on `H~_mu`.
pub fn eigen_matrix(n: u32, ev: impl Fn(&Partition) -> QTRational) -> QTMatrix {
    let b = basis(n);
    let len = b.parts.len();
    let mut scaled = b.ht.clone();
    for (i, mu) in b.parts.iter().enumerate() {
        let e = ev(mu);
        for j in 0..len {
            let v = b.ht.get(i, j);
            if !v.is_zero() {
                scaled.set(i, j, v * &e);
            }
        }
    }
    b.ht_inv().mul(&scaled)
}

/// Applies a row-convention Schur matrix to the degree-`n` part of `f`.
pub fn apply_matrix(m: &QTMatrix, f: &SymFunc, n: u32) -> SymFunc {
    SymFunc::from_vec(Basis::S, n, &m.vec_mul(&f.to_vec(Basis::S, n)))
}

/// Applies an eigenoperator degree by degree.
pub fn apply_eigen(f: &SymFunc, ev: &dyn Fn(&Partition) -> QTRational) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for n in f.degrees() {
        let c = expand_in_htilde(&f.homogeneous_part(n), n);
        let b = basis(n);
        let scaled: Vec<QTRational> = c.iter().zip(&b.parts).map(|(x, mu)| if x.is_zero() { x.clone() } else { x * &ev(mu) }).collect();
        out = out.add(&SymFunc::from_vec(Basis::S, n, &b.ht.vec_mul(&scaled)));
    }
    out
}

/// `1 - (1-q)(1-t) B_mu(q,t)`.
pub fn d0_eigenvalue(mu: &Partition) -> QTRational {
    let m = &one_minus_q_pow(1) * &one_minus_t_pow(1);
    (&QTPoly::one() - &(&m * &mu.cell_enumerator())).into()
}

/// The Macdonald operator `D_0`.
pub fn d0_apply(f: &SymFunc) -> SymFunc {
    apply_eigen(f, &d0_eigenvalue)
}

/// `H^_mu = H~_mu / w_mu` with `w_mu = prod (q^a - t^{l+1})(t^l - q^{a+1})`.
pub fn htilde_dual(mu: &Partition) -> SymFunc {
    let w: QTPoly = mu
        .cells()
        .map(|(i, j)| {
            let (a, l) = mu.arm_leg(i, j);
            &(&QTPoly::q_pow(a) - &QTPoly::t_pow(l + 1)) * &(&QTPoly::t_pow(l) - &QTPoly::q_pow(a + 1))
        })
        .product();
    htilde(mu).scale(&QTRational::new(QTPoly::one(), w))
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
    fn htilde_small() {
        assert!(htilde(&p(&[2])).equals(&sf("s2 + q*s11")));
        assert!(htilde(&p(&[1, 1])).equals(&sf("s2 + t*s11")));
        assert!(htilde(&p(&[2, 1])).equals(&sf("s3 + (q+t)*s21 + q t*s111")));
        assert!(htilde(&p(&[3, 1])).equals(&sf("s4 + (q^2+q+t)*s31 + (q^2+q t)*s22 + (q^3+q^2 t+q t)*s211 + q^3 t*s1111")));
    }

    #[test]
    fn d0_on_h2() {
        let h = htilde(&p(&[2]));
        let ev = crate::qt_ring::parse_qt("1-(1-q)(1-t)(1+q)").unwrap();
        assert!(d0_apply(&h).equals(&h.scale(&ev)));
    }

    #[test]
    fn hall_littlewood_displays() {
        assert!(hall_littlewood(&p(&[3, 1])).equals(&sf("s4 + (q^2+q)*s31 + q^2*s22 + q^3*s211")));
        assert!(q_prime(&p(&[2, 1, 1])).equals(&sf("s211 + q*s22 + (q^2+q)*s31 + q^3*s4")));
    }

    #[test]
    fn h31_and_p31_displays() {
        let h = sf("t*s4 + (q^2 t + q t + 1)*s31 + (q^2 t + q)*s22 + (q^3 t + q^2 + q)*s211 + q^3*s1111");
        assert!(h_mu(&p(&[3, 1])).equals(&h));
        assert!(h_mu_integral_form(&p(&[3, 1])).equals(&h));
        let pp = sf("s31 + (q-t)/(1-q t)*s22 + (1+q)(q-t)(1-q t^2)/((1-q t)(1-q^2 t^2))*s211 + (1+t)(q-t)(q^2-t)/((1-q t)(1-q^2 t^2))*s1111");
        assert!(p_mu(&p(&[3, 1])).equals(&pp));
    }

    #[test]
    fn literal_h_formula_is_omega_of_htilde() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                assert!(h_mu_literal(&mu).equals(&htilde(&mu).omega()), "{mu}");
            }
        }
    }

    #[test]
    fn three_routes_agree_small() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                let a = htilde(&mu);
                assert!(htilde_triangular(&mu).equals(&a), "{mu}");
                assert!(htilde_plethysm_route(&mu).equals(&a), "{mu}");
            }
        }
    }

    #[test]
    fn q_prime_two_ways() {
        for n in 1..=5 {
            for mu in partitions_of(n) {
                assert!(q_prime_triangular(&mu).equals(&q_prime(&mu)), "{mu}");
            }
        }
    }
}
