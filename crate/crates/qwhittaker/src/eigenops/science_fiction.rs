//! The components `C_j^n` of `H~_{(k,l)}`, `k = ceil(n/2)`, `l = floor(n/2)`, and the
//! `Phi` functions built from `T_nu`.

use super::{nabla, EigenError};
use crate::linalg::Matrix;
use crate::macdonald::{htilde, QTMatrix};
use crate::partitions::{partitions_of, Partition};
use crate::qt_ring::{qbinom_poly, QTPoly, QTRational, Subst};
use crate::symfunc::{Basis, SymFunc};
use crate::whittaker::w;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn qb(n: i64, k: i64) -> QTRational {
    qbinom_poly(n, k).into()
}

fn two_row(a: u32, b: u32) -> Partition {
    Partition::from_unsorted(vec![a, b])
}

#[derive(Debug, Clone)]
pub struct CBasis {
    pub n: u32,
    pub k: u32,
    pub l: u32,
    /// `c[j] = C_j^n`, `0 <= j <= l`.
    pub c: Vec<SymFunc>,
}

impl CBasis {
    pub fn get(&self, j: u32) -> &SymFunc {
        &self.c[j as usize]
    }
}

/// `C_j^n = [t^j] H~_{(k,l)} / [l; j]_q`.
pub fn science_fiction(n: u32) -> Result<Arc<CBasis>, EigenError> {
    static C: OnceLock<Mutex<HashMap<u32, Arc<CBasis>>>> = OnceLock::new();
    let cache = C.get_or_init(Default::default);
    if let Some(b) = cache.lock().unwrap().get(&n) {
        return Ok(b.clone());
    }
    let (k, l) = (n.div_ceil(2), n / 2);
    let h = htilde(&two_row(k, l)).to_basis(Basis::S);
    let mut c = Vec::new();
    for j in 0..=l {
        let bin = qbinom_poly(l as i64, j as i64);
        let mut f = SymFunc::zero(Basis::S);
        for (lam, coef) in h.terms() {
            let p = coef.as_poly().ok_or_else(|| EigenError::NonIntegralDivision(format!("H~ coefficient of s{lam}")))?;
            let part = p.t_coeff(j);
            if part.is_zero() {
                continue;
            }
            let q = part.div_exact(&bin).ok_or_else(|| EigenError::NonIntegralDivision(format!("[t^{j}] of s{lam} by [{l};{j}]")))?;
            f.add_term(lam.clone(), q.into());
        }
        c.push(f);
    }
    let b = Arc::new(CBasis { n, k, l, c });
    cache.lock().unwrap().insert(n, b.clone());
    Ok(b)
}

/// `sum_j t^j [l; j]_q C_j^n`, which reassembles `H~_{(k,l)}`.
pub fn reassemble(b: &CBasis) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for (j, cj) in b.c.iter().enumerate() {
        out = out.add(&cj.scale(&(&QTRational::monomial(0, j as i64) * &qb(b.l as i64, j as i64))));
    }
    out
}

/// Highest power of `q` occurring in `f`.
pub fn q_degree(f: &SymFunc) -> u32 {
    f.terms().values().filter_map(|c| c.as_poly()).map(|p| p.deg_q()).max().unwrap_or(0)
}

/// `q^d omega C_i^n(1/q)`, with `d` the q-degree of `C_i^n`.
pub fn flipped(f: &SymFunc) -> SymFunc {
    let d = q_degree(f) as i64;
    let inv = f.specialize(&Subst::Q(QTRational::monomial(-1, 0))).expect("no denominators");
    inv.omega().map_coeffs(|c| c.mul_monomial(d, 0))
}

/// Dimension of the module with graded character `f`: `<f(1), p_1^n>`.
pub fn dimension(f: &SymFunc, n: u32) -> QTRational {
    f.specialize(&Subst::Q(QTRational::one())).expect("polynomial").hall(&SymFunc::p(&Partition::column(n)))
}

/// The matrix `gamma^n`: row `i` holds the coordinates of `H~_{(n-i,i)}` in the `C_j^n`.
pub fn gamma_matrix(n: u32) -> Result<QTMatrix, EigenError> {
    let b = science_fiction(n)?;
    let parts = partitions_of(n);
    let cmat = Matrix::from_fn(parts.len(), b.c.len(), |r, j| b.c[j].to_basis(Basis::S).coeff(&parts[r]));
    let mut rows = Vec::new();
    for i in 0..=b.l {
        let h = htilde(&two_row(n - i, i)).to_vec(Basis::S, n);
        let x = cmat.solve_unique(&h).ok_or_else(|| EigenError::NonIntegralDivision(format!("H~_({},{i}) outside the span of C^{n}", n - i)))?;
        rows.push(x);
    }
    Ok(Matrix::from_rows(rows))
}

/// Lower factor: `[i; j]_q prod_{a=0}^{j-1} (t - q^{n-i-a})`.
pub fn lu_lower(n: u32) -> QTMatrix {
    let l = (n / 2) as usize;
    Matrix::from_fn(l + 1, l + 1, |i, j| {
        if j > i {
            return QTRational::zero();
        }
        let mut c = qb(i as i64, j as i64);
        for a in 0..j {
            let f = &QTRational::t() - &QTRational::monomial(n as i64 - i as i64 - a as i64, 0);
            c = &c * &f;
        }
        c
    })
}

/// Upper factor: `q^{(k-i)(j-i)} [l-i; j-i]_q`.
pub fn lu_upper(n: u32) -> QTMatrix {
    let (k, l) = (n.div_ceil(2) as i64, (n / 2) as i64);
    Matrix::from_fn(l as usize + 1, l as usize + 1, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if j < i {
            return QTRational::zero();
        }
        qb(l - i, j - i).mul_monomial((k - i) * (j - i), 0)
    })
}

/// `W_{(n-i,i)} = sum_j q^{(k-i)(j-i)} [l-i; j-i]_q C_j^n`.
pub fn w_from_c(n: u32, i: u32) -> Result<SymFunc, EigenError> {
    let b = science_fiction(n)?;
    let u = lu_upper(n);
    let mut out = SymFunc::zero(Basis::S);
    for (j, cj) in b.c.iter().enumerate() {
        out = out.add(&cj.scale(u.get(i as usize, j)));
    }
    Ok(out)
}

/// `C_i^n = sum_j (-1)^{i+j} [l-i; l-j]_q q^{C(k+1-i,2) - C(k+1-j,2)} W_{(n-j,j)}`.
pub fn c_from_w(n: u32, i: u32) -> SymFunc {
    let (k, l) = (n.div_ceil(2) as i64, (n / 2) as i64);
    let i = i as i64;
    let mut out = SymFunc::zero(Basis::S);
    for j in 0..=l {
        let mut c = qb(l - i, l - j).mul_monomial(binom2(k + 1 - i) - binom2(k + 1 - j), 0);
        if (i + j) % 2 == 1 {
            c = -c;
        }
        out = out.add(&w(&two_row((n as i64 - j) as u32, j as u32)).scale(&c));
    }
    out
}

/// `nabla C_0^n` against `(-1)^m q^e t^m C_m^n`, with `e = m(3m-1)/2` for `n = 2m` and
/// `e = 3m(m+1)/2` for `n = 2m+1`. Returns both sides.
pub fn nabla_c0(n: u32) -> Result<(SymFunc, SymFunc), EigenError> {
    let b = science_fiction(n)?;
    let m = (n / 2) as i64;
    let e = if n.is_multiple_of(2) { m * (3 * m - 1) / 2 } else { 3 * m * (m + 1) / 2 };
    let sign = if m % 2 == 0 { QTRational::one() } else { -QTRational::one() };
    let rhs = b.get(m as u32).scale(&(&sign * &QTRational::monomial(e, m)));
    Ok((nabla(b.get(0)), rhs))
}

/// Partitions obtained from `lambda` by removing one corner.
pub fn lower_covers(lambda: &Partition) -> Vec<Partition> {
    (0..lambda.len()).filter_map(|j| lambda.remove_cell(j)).collect()
}

fn t_of(nu: &Partition) -> QTRational {
    nu.t_mu().into()
}

/// `P_nu(c) = prod_{alpha in c, alpha != nu} 1/(1 - T_nu/T_alpha)`.
pub fn p_nu(nu: &Partition, c: &[Partition]) -> QTRational {
    let tn = t_of(nu);
    c.iter().filter(|a| *a != nu).fold(QTRational::one(), |acc, a| &acc / &(&QTRational::one() - &(&tn / &t_of(a))))
}

/// `Phi_c^{(j)} = sum_{nu in c} P_nu(c) (-T_nu)^j H~_nu`.
pub fn phi(c: &[Partition], j: u32) -> SymFunc {
    let mut out = SymFunc::zero(Basis::S);
    for nu in c {
        let coef = &p_nu(nu, c) * &(-t_of(nu)).pow(j as i64);
        out = out.add(&htilde(nu).scale(&coef));
    }
    out
}

/// `sum_{j < m} e_j[S_nu(c)] Phi_c^{(j)}` with `S_nu(c) = sum_{alpha != nu} 1/T_alpha`; equals `H~_nu`.
pub fn phi_reconstruct(nu: &Partition, c: &[Partition]) -> SymFunc {
    let others: Vec<QTRational> = c.iter().filter(|a| *a != nu).map(|a| t_of(a).inv()).collect();
    // e_j of the alphabet {1/T_alpha} by the product expansion.
    let mut ej = vec![QTRational::one()];
    for x in &others {
        let mut next = ej.clone();
        next.push(QTRational::zero());
        for (i, e) in ej.iter().enumerate() {
            next[i + 1] = &next[i + 1] + &(e * x);
        }
        ej = next;
    }
    let mut out = SymFunc::zero(Basis::S);
    for (j, e) in ej.iter().enumerate().take(c.len()) {
        out = out.add(&phi(c, j as u32).scale(e));
    }
    out
}

/// `sum_{i < l} [l-1; i]_q t^i C_i^{2l}`, the expansion of `Phi^{(0)}_{(l+1,l)}`.
pub fn phi0_two_row_expansion(l: u32) -> Result<SymFunc, EigenError> {
    let b = science_fiction(2 * l)?;
    let mut out = SymFunc::zero(Basis::S);
    for i in 0..l {
        out = out.add(&b.get(i).scale(&(&qb(l as i64 - 1, i as i64) * &QTRational::monomial(0, i as i64))));
    }
    Ok(out)
}

/// True when all Schur coefficients lie in `N[q,t]`.
pub fn schur_positive(f: &SymFunc) -> bool {
    f.to_basis(Basis::S).terms().values().all(|c| c.as_poly().is_some_and(QTPoly::is_nonnegative))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::parse_symfunc;

    #[test]
    fn c6_displays() {
        let b = science_fiction(6).unwrap();
        let exp = [
            "q^6*s[2,2,2] + (q^5+q^4)*s[3,2,1] + q^3*s[3,3] + q^3*s[4,1,1] + (q^4+q^3+q^2)*s[4,2] + (q^2+q)*s[5,1] + s[6]",
            "q^4*s[2,2,1,1] + q^3*s[3,1,1,1] + (q^3+q^2)*s[3,2,1] + q^2*s[3,3] + (q^2+q)*s[4,1,1] + q*s[4,2] + s[5,1]",
            "q^4*s[2,1,1,1,1] + q^3*s[2,2,1,1] + q^2*s[2,2,2] + (q^3+q^2)*s[3,1,1,1] + (q^2+q)*s[3,2,1] + q*s[4,1,1] + s[4,2]",
            "q^6*s[1,1,1,1,1,1] + (q^5+q^4)*s[2,1,1,1,1] + (q^4+q^3+q^2)*s[2,2,1,1] + q^3*s[2,2,2] + q^3*s[3,1,1,1] + (q^2+q)*s[3,2,1] + s[3,3]",
        ];
        for (j, e) in exp.iter().enumerate() {
            assert!(b.get(j as u32).equals(&parse_symfunc(e).unwrap()), "C_{j}");
        }
        assert_eq!(gamma_matrix(6).unwrap(), lu_lower(6).mul(&lu_upper(6)));
    }

    #[test]
    fn small_structure() {
        for n in 2..=6 {
            let b = science_fiction(n).unwrap();
            assert!(reassemble(&b).equals(&htilde(&two_row(b.k, b.l))));
            assert!(b.get(b.l).equals(&w(&two_row(b.k, b.l))));
            for i in 0..=b.l {
                assert!(flipped(b.get(i)).equals(b.get(b.l - i)), "{n} {i}");
                assert!(w_from_c(n, i).unwrap().equals(&w(&two_row(n - i, i))), "{n} {i}");
                assert!(c_from_w(n, i).equals(b.get(i)), "{n} {i}");
                assert!(schur_positive(b.get(i)));
                let fact: u64 = (1..=n as u64).product();
                assert_eq!(dimension(b.get(i), n), QTRational::int(fact >> b.l));
            }
        }
    }

    #[test]
    fn nabla_and_phi() {
        for n in 2..=5 {
            let (a, b) = nabla_c0(n).unwrap();
            assert!(a.equals(&b), "{n}");
        }
        for m in 1..=5 {
            for lam in partitions_of(m + 1) {
                let c = lower_covers(&lam);
                for j in 0..c.len() as u32 {
                    assert!(schur_positive(&phi(&c, j)), "{lam} {j}");
                }
                for nu in &c {
                    assert!(phi_reconstruct(nu, &c).equals(&htilde(nu)), "{lam} {nu}");
                }
            }
        }
        for l in 1..=2 {
            let c = lower_covers(&two_row(l + 1, l));
            assert!(phi(&c, 0).equals(&phi0_two_row_expansion(l).unwrap()), "{l}");
        }
    }
}
