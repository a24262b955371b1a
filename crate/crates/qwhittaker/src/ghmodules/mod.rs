//! Garsia-Haiman style modules spanned by derivatives of diagram determinants.
//!
//! Cells `(a,b)` carry the monomial `x^a y^b`, so `q` tracks `x`-degree and
//! `t` tracks `y`-degree, matching `htilde`.

mod poly;

pub use poly::{Echelon, Exps, MultiPoly};

use crate::partitions::{partitions_of, Cell, Diagram, Partition};
use crate::pieri::d_c_apply;
use crate::qt_ring::QTRational;
use crate::symfunc::{Basis, SymFunc};
use crate::whittaker::{from_w, w, WKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest diagram accepted by the determinant and closure routines.
pub const MAX_CELLS: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GhError {
    #[error("duplicate cell ({0},{1})")]
    DuplicateCells(u32, u32),
    #[error("diagram has {0} cells, limit is {MAX_CELLS}")]
    TooLarge(usize),
}

fn rat(a: i64) -> BigRational {
    BigRational::from_integer(a.into())
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in all_permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `det(x_i^a y_i^b)` over the cells, columns in lexicographic order.
pub fn vandermonde_det(cells: &[(u32, u32)]) -> Result<MultiPoly, GhError> {
    let mut sorted = cells.to_vec();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(GhError::DuplicateCells(w[0].0, w[0].1));
    }
    let n = sorted.len();
    if n > MAX_CELLS {
        return Err(GhError::TooLarge(n));
    }
    let mut out = MultiPoly::zero(n);
    for sigma in all_permutations(n) {
        let mut e = vec![0u8; 2 * n];
        for (i, &s) in sigma.iter().enumerate() {
            e[i] = sorted[s].0 as u8;
            e[n + i] = sorted[s].1 as u8;
        }
        out.add_term(e, rat(perm_sign(&sigma)));
    }
    Ok(out)
}

/// `V_d` for a diagram (cells are distinct by construction).
pub fn v_diagram(d: &Diagram) -> Result<MultiPoly, GhError> {
    let cells: Vec<_> = d.cells().copied().collect();
    vandermonde_det(&cells)
}

/// Bigraded components `(x-degree, y-degree) -> row-reduced basis`.
#[derive(Debug, Clone)]
pub struct GradedModuleBasis {
    pub n: usize,
    pub components: BTreeMap<(u32, u32), Echelon>,
}

impl GradedModuleBasis {
    pub fn dim(&self) -> usize {
        self.components.values().map(Echelon::dim).sum()
    }

    pub fn hilbert(&self) -> BTreeMap<(u32, u32), usize> {
        self.components.iter().map(|(k, e)| (*k, e.dim())).collect()
    }

    /// Components with the given `y`-degree, keyed by `x`-degree.
    pub fn y_slice(&self, j: u32) -> BTreeMap<u32, &Echelon> {
        self.components.iter().filter(|((_, b), _)| *b == j).map(|((a, _), e)| (*a, e)).collect()
    }

    pub fn top_y_degree(&self) -> u32 {
        self.components.keys().map(|k| k.1).max().unwrap_or(0)
    }
}

/// Span of all derivatives of `v`; with `y_inert` only `x`-derivatives are taken.
pub fn closure_of(v: &MultiPoly, y_inert: bool) -> GradedModuleBasis {
    let n = v.nvars();
    let mut components: BTreeMap<(u32, u32), Echelon> = BTreeMap::new();
    let Some(top) = v.bidegree() else {
        return GradedModuleBasis { n, components };
    };
    components.entry(top).or_default().insert(v);
    // Every component at total degree D is spanned by first derivatives of D+1.
    for total in (1..=top.0 + top.1).rev() {
        let keys: Vec<_> = components.keys().filter(|k| k.0 + k.1 == total).copied().collect();
        for (a, b) in keys {
            let rows: Vec<MultiPoly> = components[&(a, b)].rows().cloned().collect();
            for r in &rows {
                for i in 0..n {
                    if a > 0 {
                        let d = r.dx(i, 1);
                        if !d.is_zero() {
                            components.entry((a - 1, b)).or_default().insert(&d);
                        }
                    }
                    if b > 0 && !y_inert {
                        let d = r.dy(i, 1);
                        if !d.is_zero() {
                            components.entry((a, b - 1)).or_default().insert(&d);
                        }
                    }
                }
            }
        }
    }
    components.retain(|_, e| e.dim() > 0);
    GradedModuleBasis { n, components }
}

/// `M_d`: the span of all partial derivatives of `V_d`.
pub fn derivative_closure(d: &Diagram) -> Result<GradedModuleBasis, GhError> {
    Ok(closure_of(&v_diagram(d)?, false))
}

/// Permutation with consecutive cycles of the given lengths.
pub fn cycle_representative(lambda: &Partition) -> Vec<usize> {
    let mut sigma = Vec::new();
    let mut start = 0;
    for &l in lambda.parts() {
        let l = l as usize;
        for k in 0..l {
            sigma.push(start + (k + 1) % l);
        }
        start += l;
    }
    sigma
}

fn frobenius_with(basis: &GradedModuleBasis, weight: impl Fn(u32, u32) -> QTRational) -> SymFunc {
    let n = basis.n as u32;
    if n == 0 {
        return SymFunc::one().scale(&basis.components.keys().map(|&(a, b)| weight(a, b)).fold(QTRational::zero(), |x, y| &x + &y));
    }
    let mut out = SymFunc::zero(Basis::P);
    for lambda in partitions_of(n) {
        let sigma = cycle_representative(&lambda);
        let z = BigRational::from_integer(lambda.z());
        let mut c = QTRational::zero();
        for (&(a, b), ech) in &basis.components {
            let tr = ech.permutation_trace(&sigma) / &z;
            c = &c + &weight(a, b).scale_rat(&tr);
        }
        out.add_term(lambda, c);
    }
    out.to_basis(Basis::S)
}

/// `sum_{k,j} q^k t^j Frob(M^{(k,j)})` in the Schur basis.
pub fn bigraded_frobenius(basis: &GradedModuleBasis) -> SymFunc {
    frobenius_with(basis, |a, b| QTRational::monomial(a as i64, b as i64))
}

/// Frobenius of the `x`-graded module with `y` inert.
pub fn graded_frobenius_x(basis: &GradedModuleBasis) -> SymFunc {
    frobenius_with(basis, |a, _| QTRational::monomial(a as i64, 0))
}

/// Runs `f` on each partition of `n`, one thread per partition.
pub fn par_partitions<T: Send>(n: u32, f: impl Fn(&Partition) -> T + Sync) -> Vec<(Partition, T)> {
    let parts = partitions_of(n);
    std::thread::scope(|s| {
        let handles: Vec<_> = parts.iter().map(|mu| s.spawn(|| f(mu))).collect();
        parts.iter().cloned().zip(handles.into_iter().map(|h| h.join().expect("worker panicked"))).collect()
    })
}

/// `M_mu(q,t;z)` for a partition.
pub fn module_frobenius(mu: &Partition) -> Result<SymFunc, GhError> {
    Ok(bigraded_frobenius(&derivative_closure(&Diagram::from_partition(mu))?))
}

/// The top `y`-degree part of `M_d`, i.e. the `x`-derivative span of `V_d`.
pub fn whittaker_module(d: &Diagram) -> Result<GradedModuleBasis, GhError> {
    Ok(closure_of(&v_diagram(d)?, true))
}

/// Graded Frobenius of the top `y`-degree part of `M_d`, `y` inert.
pub fn whittaker_module_char(d: &Diagram) -> Result<SymFunc, GhError> {
    Ok(graded_frobenius_x(&whittaker_module(d)?))
}

/// Character of `lambda - {c}`; the zero module when `c` is outside `lambda`.
pub fn punctured_char(lambda: &Partition, c: (u32, u32)) -> Result<SymFunc, GhError> {
    let d = Diagram::from_partition(lambda);
    if !d.contains(c) {
        return Ok(SymFunc::zero(Basis::S));
    }
    whittaker_module_char(&Diagram::punctured(lambda, c))
}

/// `D_c W_lambda` through the Pieri module, for comparison with [`punctured_char`].
pub fn punctured_expected(lambda: &Partition, c: (u32, u32)) -> SymFunc {
    from_w(&d_c_apply(&Cell::new(c.0 as i64, c.1 as i64), lambda), WKind::W)
}

/// The row segment `{(n-k,0),...,(n-1,0)}`.
pub fn row_segment(n: u32, k: u32) -> Diagram {
    Diagram::new((n - k..n).map(|a| (a, 0)))
}

/// `Σ_i d^j/dx_i^j d^k/dy_i^k p`.
pub fn kappa_apply(j: u32, k: u32, p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for i in 0..p.nvars() {
        out = out.add(&p.dx(i, j).dy(i, k));
    }
    out
}

fn falling(a: u32, j: u32) -> BigInt {
    (0..j).map(|r| BigInt::from(a as i64 - r as i64)).product()
}

/// `kappa_{jk} V_d` as `Σ γ V_{d'}`: each cell `(a,b)` moves to `(a-j,b-k)`
/// with weight `(a)_j (b)_k` and the sign of re-sorting the cells.
pub fn kappa_on_vd(j: u32, k: u32, d: &Diagram) -> Vec<(BigInt, Diagram)> {
    let cells: Vec<(u32, u32)> = d.cells().copied().collect();
    let mut out = Vec::new();
    for (pos, &(a, b)) in cells.iter().enumerate() {
        if a < j || b < k {
            continue;
        }
        let moved = (a - j, b - k);
        if d.contains(moved) {
            continue;
        }
        let mut seq = cells.clone();
        seq[pos] = moved;
        // inversions of seq against its sorted order
        let mut inv = 0;
        for x in 0..seq.len() {
            for y in x + 1..seq.len() {
                if seq[x] > seq[y] {
                    inv += 1;
                }
            }
        }
        let sign = if inv % 2 == 0 { 1 } else { -1 };
        let gamma = falling(a, j) * falling(b, k) * sign;
        out.push((gamma, Diagram::new(seq)));
    }
    out
}

/// Compares the moving-box formula against direct differentiation.
pub fn kappa_formula_holds(j: u32, k: u32, d: &Diagram) -> Result<bool, GhError> {
    let direct = kappa_apply(j, k, &v_diagram(d)?);
    let mut formula = MultiPoly::zero(d.len());
    for (g, d2) in kappa_on_vd(j, k, d) {
        formula.axpy(&BigRational::from_integer(g), &v_diagram(&d2)?);
    }
    Ok(direct == formula)
}

/// `y`-free part of `M_mu`, graded by `x`-degree.
pub fn y_free_char(mu: &Partition) -> Result<SymFunc, GhError> {
    let m = derivative_closure(&Diagram::from_partition(mu))?;
    let slice = GradedModuleBasis {
        n: m.n,
        components: m.components.into_iter().filter(|((_, b), _)| *b == 0).collect(),
    };
    Ok(graded_frobenius_x(&slice))
}

/// `π = Σ_i y_i d^r/dx_i^r`.
pub fn polarize(r: u32, p: &MultiPoly) -> MultiPoly {
    let mut out = MultiPoly::zero(p.nvars());
    for i in 0..p.nvars() {
        out = out.add(&p.dx(i, r).mul_y(i));
    }
    out
}

/// One step `W_{ab} -> W_{(a-1,b+1)}` of the polarization sequence.
#[derive(Debug, Clone)]
pub struct KernelStep {
    pub a: u32,
    pub b: u32,
    /// `x`-degree drop of `π`.
    pub shift: u32,
    /// `π` maps onto the target, degree by degree.
    pub surjective: bool,
    /// Character of the kernel computed from ranks on the module.
    pub kernel: SymFunc,
    /// `W_{ab} - q^shift W_{(a-1,b+1)}`.
    pub expected: SymFunc,
    pub schur_positive: bool,
}

#[derive(Debug, Clone)]
pub struct FiltrationReport {
    pub n: u32,
    pub steps: Vec<KernelStep>,
    /// `K_n = q^{C(n-1,2)} ω W_{(n-1,1)}(1/q)`.
    pub kn_identity: bool,
}

impl FiltrationReport {
    pub fn ok(&self) -> bool {
        self.kn_identity && self.steps.iter().all(|s| s.surjective && s.schur_positive && s.kernel.equals(&s.expected))
    }
}

fn two_row(a: u32, b: u32) -> Partition {
    Partition::new(if b == 0 { vec![a] } else { vec![a, b] }).expect("a >= b")
}

fn schur_positive(f: &SymFunc) -> bool {
    f.to_basis(Basis::S).terms().values().all(|c| c.is_positive_poly())
}

/// Polarization kernels `K_{ab}` for the two-row partitions of `n`.
pub fn filtration_check(n: u32) -> Result<FiltrationReport, GhError> {
    let mut steps = Vec::new();
    let mut a = n;
    let mut b = 0;
    while a >= b {
        let mu = two_row(a, b);
        let src = whittaker_module(&Diagram::from_partition(&mu))?;
        let mut kernel = graded_frobenius_x(&src);
        let (surjective, shift, expected) = if a >= b + 2 {
            let nu = two_row(a - 1, b + 1);
            let shift = a - b - 1;
            let dst = whittaker_module(&Diagram::from_partition(&nu))?;
            let mut ok = true;
            let mut image = GradedModuleBasis { n: n as usize, components: BTreeMap::new() };
            for (&(x, y), ech) in &src.components {
                for r in ech.rows() {
                    let p = polarize(shift, r);
                    if p.is_zero() {
                        continue;
                    }
                    let key = (x - shift, y + 1);
                    ok &= dst.components.get(&key).is_some_and(|e| e.contains(&p));
                    image.components.entry(key).or_default().insert(&p);
                }
            }
            ok &= image.hilbert() == dst.hilbert();
            let img = graded_frobenius_x(&image);
            kernel = kernel.sub(&img.map_coeffs(|c| c.mul_monomial(shift as i64, 0)));
            let expected = w(&mu).sub(&w(&nu).map_coeffs(|c| c.mul_monomial(shift as i64, 0)));
            (ok, shift, expected)
        } else {
            (true, 0, w(&mu))
        };
        let schur_positive = schur_positive(&kernel);
        steps.push(KernelStep { a, b, shift, surjective, kernel, expected, schur_positive });
        if a == 0 {
            break;
        }
        a -= 1;
        b += 1;
    }
    let kn_identity = if n >= 2 {
        let hook = two_row(n - 1, 1);
        let deg = (n - 1) * (n - 2) / 2;
        let rhs = crate::macdonald::q_reverse(&w(&hook).omega(), deg);
        steps[0].kernel.equals(&rhs)
    } else {
        true
    };
    Ok(FiltrationReport { n, steps, kn_identity })
}

/// `Σ_k q^k Frob(M_mu^{(k,0)}) = q^{η(μ')} ω W_mu(1/q)`.
pub fn y_free_expected(mu: &Partition) -> SymFunc {
    crate::macdonald::q_reverse(&w(mu).omega(), mu.conjugate().eta() as u32)
}

/// `true` when every coefficient is one.
pub fn is_unit_sum(v: &[(BigInt, Diagram)]) -> bool {
    v.iter().all(|(g, _)| g.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::htilde;
    use crate::partitions::p;

    #[test]
    fn determinants() {
        assert_eq!(vandermonde_det(&[(0, 0), (0, 0)]), Err(GhError::DuplicateCells(0, 0)));
        // V_11 = y2 - y1 with rows x_1,x_2 in lexicographic column order
        let v = vandermonde_det(&[(0, 0), (0, 1)]).unwrap();
        let mut expect = MultiPoly::zero(2);
        expect.add_term(vec![0, 0, 0, 1], rat(1));
        expect.add_term(vec![0, 0, 1, 0], rat(-1));
        assert_eq!(v, expect);
        let v3 = v_diagram(&Diagram::from_partition(&p(&[3]))).unwrap();
        assert_eq!(v3.len(), 6);
        assert_eq!(v3.permute(&[1, 0, 2]), v3.scale(&rat(-1)));
        assert!(vandermonde_det(&[(0, 0); 7]).is_err());
    }

    #[test]
    fn small_modules() {
        let m = derivative_closure(&Diagram::new([(0, 0)])).unwrap();
        assert_eq!(m.dim(), 1);
        let m2 = derivative_closure(&Diagram::from_partition(&p(&[2]))).unwrap();
        assert_eq!(m2.hilbert(), BTreeMap::from([((0, 0), 1), ((1, 0), 1)]));
        for n in 1..=3 {
            for mu in partitions_of(n) {
                let m = derivative_closure(&Diagram::from_partition(&mu)).unwrap();
                assert_eq!(m.dim(), (1..=n as usize).product::<usize>());
                assert!(bigraded_frobenius(&m).equals(&htilde(&mu)), "{mu:?}");
                assert!(graded_frobenius_x(&whittaker_module(&Diagram::from_partition(&mu)).unwrap()).equals(&w(&mu)));
                assert!(y_free_char(&mu).unwrap().equals(&y_free_expected(&mu)), "{mu:?}");
            }
        }
    }

    #[test]
    fn kappa() {
        let d = Diagram::new([(0, 0), (2, 0)]);
        let v = kappa_on_vd(1, 0, &d);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].1, Diagram::new([(0, 0), (1, 0)]));
        assert_eq!(v[0].0.clone() * v[0].0.clone(), BigInt::from(4));
        assert!(kappa_formula_holds(1, 0, &d).unwrap());
        assert!(kappa_on_vd(1, 0, &Diagram::from_partition(&p(&[2]))).is_empty());
        for mu in partitions_of(4) {
            let v = v_diagram(&Diagram::from_partition(&mu)).unwrap();
            for (j, k) in [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (3, 0)] {
                assert!(kappa_apply(j, k, &v).is_zero());
                assert!(kappa_on_vd(j, k, &Diagram::from_partition(&mu)).is_empty());
            }
        }
        let odd = Diagram::new([(0, 0), (1, 2), (3, 1)]);
        for (j, k) in [(1, 0), (0, 1), (1, 1), (2, 1)] {
            assert!(kappa_formula_holds(j, k, &odd).unwrap());
        }
    }

    #[test]
    fn punctured_small() {
        for n in 2..=4 {
            for lambda in partitions_of(n) {
                for c in lambda.cells() {
                    let got = punctured_char(&lambda, c).unwrap();
                    assert!(got.equals(&punctured_expected(&lambda, c)), "{lambda:?} {c:?}");
                }
                assert!(punctured_char(&lambda, (n, n)).unwrap().is_zero());
            }
        }
        for n in 1..=4 {
            for k in 1..=n {
                let got = whittaker_module_char(&row_segment(n, k)).unwrap();
                let qb = QTRational::from(crate::qt_ring::qbinom_poly(n as i64, k as i64));
                assert!(got.equals(&w(&Partition::row(k)).scale(&qb)), "{n} {k}");
            }
        }
    }

    #[test]
    fn filtration() {
        for n in 2..=4 {
            let r = filtration_check(n).unwrap();
            for s in &r.steps {
                assert!(s.surjective, "{n} {:?}", (s.a, s.b));
                assert!(s.kernel.equals(&s.expected), "{n} {:?}", (s.a, s.b));
                assert!(s.schur_positive, "{n} {:?}", (s.a, s.b));
            }
            assert!(r.kn_identity, "{n}");
        }
    }
}
