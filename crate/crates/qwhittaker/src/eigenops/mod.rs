//! Macdonald eigenoperators and their specialisations, elliptic Hall
//! `Q_mn`, W-positivity families and the two-row `C_j^n` functions.

pub mod elliptic;
pub mod families;
pub mod science_fiction;

pub use elliptic::*;
pub use families::*;
pub use science_fiction::*;

use crate::linalg::Matrix;
use crate::macdonald::{self, hall_littlewood, QTMatrix};
use crate::partitions::Partition;
use crate::qt_ring::{QTRational, QtError, Subst};
use crate::symfunc::{plethysm_scalar, transition, Alphabet, Basis, SymFunc};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EigenError {
    #[error("specialization hits a pole")]
    PoleAtSpecialization,
    #[error("invalid elliptic Hall index ({0},{1})")]
    InvalidIndex(u32, u32),
    #[error("non-integral q-binomial division: {0}")]
    NonIntegralDivision(String),
}

impl From<QtError> for EigenError {
    fn from(_: QtError) -> Self {
        EigenError::PoleAtSpecialization
    }
}

/// The family on which an eigenoperator is diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EigenBasis {
    /// `H~_mu(q,t)`.
    Macdonald,
    /// Hall-Littlewood `calH_mu(q) = H~_mu(q,0)`.
    HallLittlewood,
    /// `s_mu[z/(1-q)]`.
    SchurOverOneMinusQ,
}

/// A linear operator given by its eigenvalues on one of the families above.
pub struct EigenOp {
    pub basis: EigenBasis,
    pub eigenvalue: Box<dyn Fn(&Partition) -> QTRational + Send + Sync>,
}

impl EigenOp {
    pub fn new(basis: EigenBasis, eigenvalue: impl Fn(&Partition) -> QTRational + Send + Sync + 'static) -> Self {
        EigenOp { basis, eigenvalue: Box::new(eigenvalue) }
    }

    /// Schur-basis matrix on degree `n`, row convention.
    pub fn matrix(&self, n: u32) -> QTMatrix {
        let (fwd, inv) = eigenbasis_matrices(self.basis, n);
        let parts = &transition::index(n).parts;
        let mut scaled = (*fwd).clone();
        for (i, mu) in parts.iter().enumerate() {
            let e = (self.eigenvalue)(mu);
            for j in 0..parts.len() {
                let v = fwd.get(i, j);
                if !v.is_zero() {
                    scaled.set(i, j, v * &e);
                }
            }
        }
        inv.mul(&scaled)
    }

    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(Basis::S);
        for n in f.degrees() {
            let parts = &transition::index(n).parts;
            let ev = |c: Vec<QTRational>| -> Vec<QTRational> { c.iter().zip(parts).map(|(x, mu)| if x.is_zero() { x.clone() } else { x * &(self.eigenvalue)(mu) }).collect() };
            let v = f.homogeneous_part(n).to_vec(Basis::S, n);
            let image = if self.basis == EigenBasis::Macdonald {
                // back substitution avoids inverting the H~ matrix
                let b = macdonald::basis(n);
                b.ht.vec_mul(&ev(b.solve(&v)))
            } else {
                let (fwd, inv) = eigenbasis_matrices(self.basis, n);
                fwd.vec_mul(&ev(inv.vec_mul(&v)))
            };
            out = out.add(&SymFunc::from_vec(Basis::S, n, &image));
        }
        out
    }
}

type MatPair = (Arc<QTMatrix>, Arc<QTMatrix>);

/// `(F, F^{-1})` where row `mu` of `F` is the Schur expansion of the eigenfunction.
pub fn eigenbasis_matrices(basis: EigenBasis, n: u32) -> MatPair {
    static C: OnceLock<Mutex<HashMap<(u8, u32), MatPair>>> = OnceLock::new();
    let key = (basis as u8, n);
    let m = C.get_or_init(Default::default);
    if let Some(v) = m.lock().unwrap().get(&key) {
        return v.clone();
    }
    let parts = transition::index(n).parts.clone();
    let v: MatPair = match basis {
        EigenBasis::Macdonald => {
            let b = macdonald::basis(n);
            (Arc::new(b.ht.clone()), Arc::new(b.ht_inv().clone()))
        }
        EigenBasis::HallLittlewood => {
            let f = Matrix::from_rows(parts.iter().map(|mu| hall_littlewood(mu).to_vec(Basis::S, n)).collect());
            let inv = f.inverse().expect("Hall-Littlewood functions form a basis");
            (Arc::new(f), Arc::new(inv))
        }
        EigenBasis::SchurOverOneMinusQ => {
            let z = crate::symfunc::z();
            let fwd = Matrix::from_rows(parts.iter().map(|mu| SymFunc::s(mu).pleth(&(z.clone() / (Alphabet::one() - Alphabet::q()))).to_vec(Basis::S, n)).collect());
            let inv = Matrix::from_rows(parts.iter().map(|mu| SymFunc::s(mu).pleth(&(z.clone() * (Alphabet::one() - Alphabet::q()))).to_vec(Basis::S, n)).collect());
            (Arc::new(fwd), Arc::new(inv))
        }
    };
    m.lock().unwrap().insert(key, v.clone());
    v
}

/// `f[A]` for an alphabet of monomials given as a polynomial `A(q,t)`.
pub fn pleth_eval(f: &SymFunc, a: &QTRational) -> QTRational {
    plethysm_scalar(f, &Alphabet::Monomials(a.clone())).expect("well-formed")
}

/// `T_mu = q^{eta(mu')} t^{eta(mu)}`.
pub fn t_mu(mu: &Partition) -> QTRational {
    mu.t_mu().into()
}

fn b_mu(mu: &Partition) -> QTRational {
    mu.cell_enumerator().into()
}

pub fn nabla_op() -> EigenOp {
    EigenOp::new(EigenBasis::Macdonald, t_mu)
}

pub fn delta_op(f: &SymFunc) -> EigenOp {
    let f = f.clone();
    EigenOp::new(EigenBasis::Macdonald, move |mu| pleth_eval(&f, &b_mu(mu)))
}

pub fn delta_prime_op(f: &SymFunc) -> EigenOp {
    let f = f.clone();
    EigenOp::new(EigenBasis::Macdonald, move |mu| pleth_eval(&f, &(&b_mu(mu) - &QTRational::one())))
}

pub fn nabla(g: &SymFunc) -> SymFunc {
    nabla_op().apply(g)
}

pub fn delta(f: &SymFunc, g: &SymFunc) -> SymFunc {
    delta_op(f).apply(g)
}

pub fn delta_prime(f: &SymFunc, g: &SymFunc) -> SymFunc {
    delta_prime_op(f).apply(g)
}

/// `Delta^0_f`: `Delta'_f` at `t = 0`, diagonal on Hall-Littlewood functions with
/// eigenvalue `f[q + ... + q^{mu_1 - 1}]`.
pub fn delta_zero_op(f: &SymFunc) -> EigenOp {
    let f = f.clone();
    EigenOp::new(EigenBasis::HallLittlewood, move |mu| {
        let a: QTRational = (&crate::qt_ring::qint_poly(mu.part(1) as i64) - &crate::qt_ring::QTPoly::one()).into();
        pleth_eval(&f, &a)
    })
}

pub fn delta_zero(f: &SymFunc, g: &SymFunc) -> SymFunc {
    delta_zero_op(f).apply(g)
}

/// `Delta^0_f g` computed as `(Delta'_f g)|_{t=0}`.
pub fn delta_zero_direct(f: &SymFunc, g: &SymFunc) -> Result<SymFunc, EigenError> {
    Ok(delta_prime(f, g).specialize(&Subst::TZero)?)
}

/// `Delta-bar_f`: `Delta_f` at `t = 1/q`, diagonal on `s_mu[z/(1-q)]` with eigenvalue `f[B_mu(q,1/q)]`.
pub fn delta_bar_op(f: &SymFunc) -> EigenOp {
    let f = f.clone();
    EigenOp::new(EigenBasis::SchurOverOneMinusQ, move |mu| {
        let b = b_mu(mu).specialize(&Subst::TInvQ).expect("polynomial");
        pleth_eval(&f, &b)
    })
}

pub fn delta_bar(f: &SymFunc, g: &SymFunc) -> SymFunc {
    delta_bar_op(f).apply(g)
}

/// `Delta-bar_f g` computed as `(Delta_f g)|_{t=1/q}`.
pub fn delta_bar_direct(f: &SymFunc, g: &SymFunc) -> Result<SymFunc, EigenError> {
    Ok(delta(f, g).specialize(&Subst::TInvQ)?)
}

/// `nabla^0`: diagonal on Hall-Littlewood functions, `q^{C(n,2)}` on `calH_n` and `0` otherwise.
pub fn nabla_zero_op() -> EigenOp {
    EigenOp::new(EigenBasis::HallLittlewood, |mu| {
        if mu.len() <= 1 {
            QTRational::monomial(mu.conjugate().eta() as i64, 0)
        } else {
            QTRational::zero()
        }
    })
}

pub fn nabla_zero(g: &SymFunc) -> SymFunc {
    nabla_zero_op().apply(g)
}

/// `nabla-bar`: diagonal on `s_mu[z/(1-q)]` with eigenvalue `T_mu(q,1/q)`.
pub fn nabla_bar_op() -> EigenOp {
    EigenOp::new(EigenBasis::SchurOverOneMinusQ, |mu| t_mu(mu).specialize(&Subst::TInvQ).expect("monomial"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::htilde;
    use crate::partitions::{p, partitions_of};
    use crate::symfunc::parse_symfunc;

    #[test]
    fn nabla_basics() {
        let h = htilde(&p(&[3, 1]));
        assert!(nabla(&h).equals(&h.scale(&QTRational::monomial(3, 1))));
        for n in 1..=3 {
            assert!(delta(&SymFunc::e(n), &SymFunc::e(n)).equals(&nabla(&SymFunc::e(n))));
        }
        let ne2 = parse_symfunc("s2 + (q+t)*s11").unwrap();
        assert!(nabla(&SymFunc::e(2)).equals(&ne2));
    }

    #[test]
    fn specialisations_agree() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                let g = crate::whittaker::w(&mu);
                for k in 1..=n {
                    let f = SymFunc::e(k);
                    assert!(delta_zero(&f, &g).equals(&delta_zero_direct(&f, &g).unwrap()), "{mu} {k}");
                    assert!(delta_bar(&f, &g).equals(&delta_bar_direct(&f, &g).unwrap()), "{mu} {k}");
                }
                let nz = nabla(&g).specialize(&Subst::TZero).unwrap();
                assert!(nabla_zero(&g).equals(&nz));
            }
        }
    }
}
