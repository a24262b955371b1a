//! Pieri rules for `W` and `W^`, and the cell-indexed down/up operators.

use crate::partitions::{arm, c_coefficient, contains, horizontal_strips, leftmost_rel, leg, rightmost_rel, Cell, Coord, Partition, StripDirection};
use crate::qt_ring::{q_analog, q_binomial, ExtNat, QTPoly, QTRational};
use crate::symfunc::SymFunc;
use crate::whittaker::{expand_in_w, w, w_hat, WExpansion, WKind};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PieriError {
    #[error("cell {0} is not supported for this operator")]
    UnsupportedCell(String),
}

/// `c_{mu lambda}(q) = prod_i qbinom(sigma_lambda(i), lambda_i - mu_i)`; zero off horizontal strips.
pub fn c_coeff(mu: &Partition, lambda: &Partition) -> QTPoly {
    c_coefficient(mu, lambda)
}

/// `d_{mu lambda}(q) = prod_{i>=1} qbinom(sigma_mu(i-1), lambda_i - mu_i)` with `sigma_mu(0) = inf`.
pub fn d_coeff(mu: &Partition, lambda: &Partition) -> QTRational {
    if !crate::partitions::is_horizontal_strip(mu, lambda) {
        return QTRational::zero();
    }
    let mut out = QTRational::one();
    for i in 1..=lambda.len() {
        let k = (lambda.part(i) - mu.part(i)) as u64;
        if k > 0 {
            out = &out * &q_binomial(mu.step(i - 1), k);
        }
    }
    out
}

/// `h_k^perp W_lambda = sum_{mu ->_k lambda} c_{mu lambda} W_mu`.
pub fn hk_perp_w(lambda: &Partition, k: u32) -> WExpansion {
    let mut out = WExpansion::new("W");
    for mu in horizontal_strips(lambda, k, StripDirection::Remove) {
        out.add_term(mu.clone(), c_coeff(&mu, lambda).into());
    }
    out
}

/// `W_lambda(q; z + y)` as coefficients of `y^k`, `k = 0..=|lambda|`.
pub fn add_variable(lambda: &Partition) -> Vec<WExpansion> {
    (0..=lambda.size()).map(|k| hk_perp_w(lambda, k)).collect()
}

/// Monomial expansion of `W_lambda(y_1, ..., y_m)` by iterating [`add_variable`].
/// Keys are exponent vectors `(a_1, ..., a_m)`.
pub fn w_in_variables(lambda: &Partition, m: usize) -> HashMap<Vec<u32>, QTPoly> {
    let mut out = HashMap::new();
    fn go(lam: &Partition, m: usize, prefix: &mut Vec<u32>, coeff: QTPoly, out: &mut HashMap<Vec<u32>, QTPoly>) {
        if prefix.len() == m {
            if lam.is_empty() {
                let e = out.entry(prefix.clone()).or_insert_with(QTPoly::zero);
                *e = &*e + &coeff;
            }
            return;
        }
        // The last variable added is y_{m - prefix.len()}; remaining variables z hold W_mu.
        for (k, exp) in add_variable(lam).into_iter().enumerate() {
            for (mu, c) in exp.terms {
                prefix.push(k as u32);
                go(&mu, m, prefix, &coeff * c.as_poly().expect("polynomial"), out);
                prefix.pop();
            }
        }
    }
    let mut pre = Vec::new();
    go(lambda, m, &mut pre, QTPoly::one(), &mut out);
    out.into_iter().map(|(mut k, v)| {
        k.reverse();
        (k, v)
    }).filter(|(_, v)| !v.is_zero()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualPieriMode {
    /// `W^_k W^_mu` in the `W^` basis.
    HatHat,
    /// `W^_k W_mu` in the `W` basis.
    HatW,
}

pub fn dual_pieri(k: u32, mu: &Partition, mode: DualPieriMode) -> WExpansion {
    let strips = horizontal_strips(mu, k, StripDirection::Add);
    match mode {
        DualPieriMode::HatHat => {
            let mut out = WExpansion::new("What");
            for lam in strips {
                out.add_term(lam.clone(), c_coeff(mu, &lam).into());
            }
            out
        }
        DualPieriMode::HatW => {
            let mut out = WExpansion::new("W");
            for lam in strips {
                out.add_term(lam.clone(), d_coeff(mu, &lam));
            }
            out
        }
    }
}

/// `W^_k W_mu` (or `W^_k W^_mu`) computed by multiplying out, for cross-checking.
pub fn dual_pieri_direct(k: u32, mu: &Partition, mode: DualPieriMode) -> WExpansion {
    let wk = w_hat(&Partition::row(k));
    match mode {
        DualPieriMode::HatHat => expand_in_w(&wk.mul(&w_hat(mu)), WKind::WHat),
        DualPieriMode::HatW => expand_in_w(&wk.mul(&w(mu)), WKind::W),
    }
}

fn row_of(c: &Cell) -> usize {
    match c.j {
        Coord::Fin(j) => j as usize,
        Coord::Inf => unreachable!("finite row expected"),
    }
}

fn qint_ext(a: ExtNat) -> QTRational {
    q_analog(a.plus(1))
}

/// `D_c W_lambda` by the four-term recursion.
pub fn d_c_recursive(c: &Cell, lambda: &Partition) -> WExpansion {
    let mut memo = HashMap::new();
    d_rec(c, lambda, &mut memo)
}

fn d_rec(c: &Cell, lambda: &Partition, memo: &mut HashMap<Cell, WExpansion>) -> WExpansion {
    if !contains(lambda, c) {
        return WExpansion::new("W");
    }
    if let Some(v) = memo.get(c) {
        return v.clone();
    }
    let (i, j) = c.finite().expect("inside cells are finite");
    let out = if leg(lambda, c) == ExtNat::Fin(0) {
        let mu = lambda.remove_cell(j as usize).expect("row ends in an inner corner");
        let mut e = WExpansion::new("W");
        e.add_term(mu, qint_ext(arm(lambda, c)));
        e
    } else {
        let a = d_rec(&Cell::new(i, j + 1), lambda, memo);
        let b = d_rec(&Cell::new(i + 1, j), lambda, memo);
        let d = d_rec(&Cell::new(i + 1, j + 1), lambda, memo);
        a.add(&b).sub(&d)
    };
    memo.insert(*c, out.clone());
    out
}

/// `D_c W_lambda = sum_{c ⇝ c'} [a(c')+1]_q W_{lambda - c'_row}`.
pub fn d_c_apply(c: &Cell, lambda: &Partition) -> WExpansion {
    let mut out = WExpansion::new("W");
    for cp in leftmost_rel(lambda, c) {
        let mu = lambda.remove_cell(row_of(&cp)).expect("inner corner");
        out.add_term(mu, qint_ext(arm(lambda, &cp)));
    }
    out
}

/// `U_c W_mu`, for finite cells, `(inf, j)` and `(inf, inf)`.
pub fn u_c_apply(c: &Cell, mu: &Partition) -> Result<WExpansion, PieriError> {
    if matches!((c.i, c.j), (Coord::Fin(_), Coord::Inf)) || matches!(c.j, Coord::Fin(j) if j < 0) || matches!(c.i, Coord::Fin(i) if i < 0) {
        return Err(PieriError::UnsupportedCell(c.to_string()));
    }
    let mut out = WExpansion::new("W");
    if contains(mu, c) {
        return Ok(out);
    }
    let base = |cp: &Cell, out: &mut WExpansion| {
        let r = match cp.j {
            Coord::Fin(j) => j as usize,
            Coord::Inf => unreachable!(),
        };
        let lam = mu.add_cell(r).expect("outer corner on this row");
        out.add_term(lam, qint_ext(arm(mu, cp)));
    };
    if leg(mu, c) == ExtNat::Fin(0) {
        base(c, &mut out);
    } else {
        for cp in rightmost_rel(mu, c) {
            base(&cp, &mut out);
        }
    }
    Ok(out)
}

/// `D = D_{(0,0)}` on a W-expansion.
pub fn down(e: &WExpansion) -> WExpansion {
    e.map_linear(|lam| d_c_apply(&Cell::new(0, 0), lam))
}

/// `U = U_{(inf,inf)}` on a W-expansion.
pub fn up(e: &WExpansion) -> WExpansion {
    e.map_linear(|mu| u_c_apply(&Cell::inf_inf(), mu).expect("supported"))
}

/// Checks `(DU - UD) W_mu = W_mu / (1-q)` for all `mu` of size `n`.
pub fn commutator_check(n: u32) -> bool {
    let inv = QTRational::new(QTPoly::one(), crate::qt_ring::one_minus_q_pow(1));
    crate::partitions::partitions_of(n).into_iter().all(|mu| {
        let mut e = WExpansion::new("W");
        e.add_term(mu.clone(), QTRational::one());
        let lhs = down(&up(&e)).sub(&up(&down(&e)));
        lhs == e.scale(&inv)
    })
}

/// `h_k^perp` on a symmetric function, re-expanded in `W`, for cross-checks.
pub fn hk_perp_direct(lambda: &Partition, k: u32) -> WExpansion {
    expand_in_w(&SymFunc::perp(&SymFunc::h(k), &w(lambda)), WKind::W)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};
    use crate::qt_ring::parse_qt;

    fn r(s: &str) -> QTRational {
        parse_qt(s).unwrap()
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_coeff(&p(&[5, 2]), &p(&[6, 2])), r("1/(1-q)"));
        assert_eq!(d_coeff(&p(&[5, 2]), &p(&[5, 3])), r("q^2+q+1"));
        assert!(d_coeff(&p(&[5, 2]), &p(&[5, 2])).is_one());
        let e = dual_pieri(1, &p(&[5, 2]), DualPieriMode::HatW);
        assert_eq!(e.coeff(&p(&[5, 2, 1])), r("q+1"));
        assert_eq!(e.terms.len(), 3);
    }

    #[test]
    fn perp_rule_matches_generic_perp() {
        for n in 0..=4 {
            for lam in partitions_of(n) {
                for k in 0..=n {
                    assert_eq!(hk_perp_w(&lam, k), hk_perp_direct(&lam, k), "{lam} {k}");
                }
            }
        }
    }

    #[test]
    fn w42_plus_y() {
        let ys = add_variable(&p(&[4, 2]));
        assert_eq!(ys[2].coeff(&p(&[3, 1])), r("(q+1)^2"));
        assert_eq!(ys[2].coeff(&p(&[4])), r("1"));
        assert_eq!(ys[4].coeff(&p(&[2])), r("1"));
        assert_eq!(ys[1].coeff(&p(&[4, 1])), r("q+1"));
    }

    #[test]
    fn down_operators_agree() {
        for n in 1..=5 {
            for lam in partitions_of(n) {
                for (i, j) in lam.cells() {
                    let c = Cell::new(i as i64, j as i64);
                    assert_eq!(d_c_recursive(&c, &lam), d_c_apply(&c, &lam), "{lam} {c}");
                }
                assert_eq!(d_c_apply(&Cell::new(0, 0), &lam), hk_perp_w(&lam, 1));
                assert!(d_c_apply(&Cell::new(7, 0), &lam).is_zero());
            }
        }
    }

    #[test]
    fn up_is_w1_hat() {
        for n in 1..=4 {
            for mu in partitions_of(n) {
                assert_eq!(u_c_apply(&Cell::inf_inf(), &mu).unwrap(), dual_pieri_direct(1, &mu, DualPieriMode::HatW));
            }
            assert!(commutator_check(n));
        }
    }
}
