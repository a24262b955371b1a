//! Verification suites: each runs the identities of one area up to a given size.

use super::report::{run_jobs, Check, Job, SuiteReport};
use super::{tables, CliError};
use crate::eigenops::{self, elliptic, families, science_fiction as sf};
use crate::ghmodules;
use crate::macdonald::{hall_littlewood, htilde, htilde_plethysm_route, htilde_triangular, q_prime, q_prime_triangular};
use crate::partitions::{horizontal_strips, partitions_of, slide_polynomial, Cell, Diagram, Partition, StripDirection};
use crate::pieri::{self, DualPieriMode};
use crate::qt_ring::{qbinom_poly, QTRational, Subst};
use crate::symfunc::{plethysm, Alphabet, Basis, SymFunc, Tensor};
use crate::whittaker::{self, expand_in_w, w, w_hat, WExpansion, WKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const SUITES: &[&str] = &[
    "cauchy",
    "duality",
    "pieri",
    "downup",
    "mac-tables",
    "kostka",
    "qmn-tables",
    "delta-zero",
    "delta-bar",
    "qt-two-rows",
    "vn",
    "science-fiction",
    "gh-nfact",
    "gh-pieri",
    "w-positivity",
];

/// `W_42(z + y)` by powers of `y`, and `W^_1 W_52`.
pub const W42_PLUS_Y: [&str; 5] = ["W42", "(q+1)*W41 + (q+1)*W32", "W4 + (q+1)^2*W31 + W22", "(q+1)*W3 + (q+1)*W21", "W2"];
pub const W1HAT_W52: &str = "(1/(1-q))*W62 + (q^2+q+1)*W53 + (q+1)*W521";

/// Seed for the random diagrams of the `gh-pieri` suite.
pub const DIAGRAM_SEED: u64 = 0x5eed_d1a6;

type Jobs = Vec<(String, Job<'static>)>;

fn job(name: String, f: impl FnOnce() -> Vec<Check> + Send + 'static) -> (String, Job<'static>) {
    (name, Box::new(f))
}

/// One job per size `k` in `lo..=n`; sizes above `limit` are reported as skipped.
fn per_size(jobs: &mut Jobs, name: &'static str, lo: u32, n: u32, limit: u32, f: fn(u32) -> Vec<Check>) {
    for k in lo..=n {
        let label = format!("{name} n={k}");
        if k > limit {
            jobs.push(job(label.clone(), move || vec![Check::skipped(label)]));
        } else {
            jobs.push(job(label, move || f(k)));
        }
    }
}

fn delta(a: &Partition, b: &Partition) -> QTRational {
    if a == b {
        QTRational::one()
    } else {
        QTRational::zero()
    }
}

fn parse_w(s: &str) -> WExpansion {
    super::golden::w_expansion(s).expect("built-in expansion parses")
}

fn first_failure<T>(name: String, items: impl IntoIterator<Item = T>, check: impl Fn(&T) -> Option<(String, String, String)>) -> Check {
    for it in items {
        if let Some((what, e, c)) = check(&it) {
            return Check::with_sides(format!("{name}: {what}"), false, e, c);
        }
    }
    Check::holds(name, true)
}

fn cauchy(k: u32) -> Vec<Check> {
    let a = Alphabet::var("x") * Alphabet::var("y") / (Alphabet::one() - Alphabet::q());
    let lhs = match plethysm(&SymFunc::h(k), &a) {
        Ok(t) => t,
        Err(e) => return vec![Check::failed(format!("h_{k}[xy/(1-q)]"), e)],
    };
    let mut rhs = Tensor::zero();
    for mu in partitions_of(k) {
        rhs = rhs.add(&Tensor::product_of(&[("x", &w(&mu)), ("y", &w_hat(&mu))]));
    }
    vec![Check::holds(format!("h_{k}[xy/(1-q)] = sum W_mu(x) W^_mu(y)"), lhs == rhs)]
}

fn duality(k: u32) -> Vec<Check> {
    let parts = partitions_of(k);
    let pairs: Vec<(Partition, Partition)> = parts.iter().flat_map(|a| parts.iter().map(move |b| (a.clone(), b.clone()))).collect();
    vec![first_failure(format!("<W_lambda, W^_mu>_q = delta, |lambda| = {k}"), pairs, |(a, b)| {
        let v = w(a).scalar_q(&w_hat(b));
        (v != delta(a, b)).then(|| (format!("{a} {b}"), delta(a, b).to_string(), v.to_string()))
    })]
}

fn pieri_strips(k: u32) -> Vec<Check> {
    let mut strips = Vec::new();
    for lam in partitions_of(k) {
        for j in 0..=k {
            for mu in horizontal_strips(&lam, j, StripDirection::Remove) {
                strips.push((mu, lam.clone()));
            }
        }
    }
    let c = first_failure(format!("c coefficients = slide enumeration, |lambda| = {k}"), strips.iter(), |(mu, lam)| {
        let closed = pieri::c_coeff(mu, lam);
        match slide_polynomial(mu, lam) {
            Ok(s) if s == closed => None,
            Ok(s) => Some((format!("{lam}/{mu}"), s.to_string(), closed.to_string())),
            Err(e) => Some((format!("{lam}/{mu}"), "a slide polynomial".into(), e.to_string())),
        }
    });
    let d = first_failure(format!("d = v_mu/v_lambda * slide enumeration, |lambda| = {k}"), strips.iter(), |(mu, lam)| {
        let slide = QTRational::from(slide_polynomial(mu, lam).ok()?);
        let v = QTRational::new(whittaker::v_mu(mu), whittaker::v_mu(lam));
        let expect = &v * &slide;
        let closed = pieri::d_coeff(mu, lam);
        (expect != closed).then(|| (format!("{lam}/{mu}"), expect.to_string(), closed.to_string()))
    });
    vec![c, d]
}

fn pieri_perp(k: u32) -> Vec<Check> {
    let cases: Vec<(Partition, u32)> = partitions_of(k).into_iter().flat_map(|l| (0..=k).map(move |j| (l.clone(), j))).collect();
    let perp = first_failure(format!("h_j^perp rule = generic perp, |lambda| = {k}"), cases, |(lam, j)| {
        let (a, b) = (pieri::hk_perp_direct(lam, *j), pieri::hk_perp_w(lam, *j));
        (a != b).then(|| (format!("h_{j}^perp W_{lam}"), a.to_string(), b.to_string()))
    });
    let dual: Vec<(u32, Partition, DualPieriMode)> = (1..=k)
        .flat_map(|j| partitions_of(k - j).into_iter().flat_map(move |mu| [DualPieriMode::HatHat, DualPieriMode::HatW].map(|m| (j, mu.clone(), m))))
        .collect();
    let dual = first_failure(format!("dual Pieri rule = multiplication, degree {k}"), dual, |(j, mu, mode)| {
        let (a, b) = (pieri::dual_pieri_direct(*j, mu, *mode), pieri::dual_pieri(*j, mu, *mode));
        (a != b).then(|| (format!("W^_{j} * {mu} {mode:?}"), a.to_string(), b.to_string()))
    });
    vec![perp, dual]
}

fn pieri_displays() -> Vec<Check> {
    let lam = crate::partitions::p(&[4, 2]);
    let got = pieri::add_variable(&lam);
    let mut out: Vec<Check> =
        W42_PLUS_Y.iter().enumerate().map(|(k, e)| Check::eq(format!("W_42(z+y): coefficient of y^{k}"), &parse_w(e), &got[k])).collect();
    out.push(Check::holds("W_42(z+y): no terms beyond y^4", got[5..].iter().all(WExpansion::is_zero)));
    let mu = crate::partitions::p(&[5, 2]);
    let expect = parse_w(W1HAT_W52);
    out.push(Check::eq("W^_1 W_52 by the d coefficients", &expect, &pieri::dual_pieri(1, &mu, DualPieriMode::HatW)));
    out.push(Check::eq("W^_1 W_52 by multiplication", &expect, &pieri::dual_pieri_direct(1, &mu, DualPieriMode::HatW)));
    out
}

fn downup(k: u32) -> Vec<Check> {
    let mut cases = Vec::new();
    for lam in partitions_of(k) {
        let (w0, h0) = (lam.part(1) as i64, lam.len() as i64);
        for i in 0..=w0 {
            for j in 0..=h0 {
                cases.push((lam.clone(), Cell::new(i, j)));
            }
        }
    }
    let d = first_failure(format!("recursive D_c = closed D_c, |lambda| = {k}"), cases, |(lam, c)| {
        let (a, b) = (pieri::d_c_recursive(c, lam), pieri::d_c_apply(c, lam));
        (a != b).then(|| (format!("D_{c} W_{lam}"), a.to_string(), b.to_string()))
    });
    vec![d, Check::holds(format!("(DU - UD) W_mu = W_mu/(1-q), |mu| = {k}"), pieri::commutator_check(k))]
}

fn mac_routes(k: u32) -> Vec<Check> {
    partitions_of(k)
        .into_iter()
        .map(|mu| {
            let h = htilde(&mu);
            let (tri, pl) = (htilde_triangular(&mu), htilde_plethysm_route(&mu));
            let ok = h.equals(&tri) && h.equals(&pl);
            let computed = if h.equals(&tri) { pl } else { tri };
            Check::with_sides(format!("H~_{mu}: tableaux = triangularity = Gram-Schmidt P route"), ok, h, computed)
        })
        .collect()
}

fn inv_qt(f: &SymFunc) -> SymFunc {
    f.map_coeffs(|c| {
        c.specialize(&Subst::Q(QTRational::monomial(-1, 0)))
            .and_then(|c| c.specialize(&Subst::T(QTRational::monomial(0, -1))))
            .expect("monomial substitution")
    })
}

fn mac_flips(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    let one = QTRational::one();
    for mu in partitions_of(k) {
        let h = htilde(&mu);
        let tm = eigenops::t_mu(&mu);
        let flip = inv_qt(&h.omega()).scale(&tm);
        out.push(Check::with_sides(format!("H~_{mu}(q,t) = T_mu omega H~_{mu}(1/q,1/t)"), h.equals(&flip), &h, &flip));
        let swapped = h.map_coeffs(|c| c.specialize(&Subst::Swap).expect("swap"));
        let conj = htilde(&mu.conjugate());
        out.push(Check::with_sides(format!("H~_{mu}(t,q) = H~_{}(q,t)", mu.conjugate()), swapped.equals(&conj), &conj, &swapped));
        let col = h.coeff(&Partition::column(k));
        out.push(Check::with_sides(format!("<H~_{mu}, s_1^{k}> = T_mu"), col == tm, &tm, &col));
        let at1 = h.specialize(&Subst::Q(one.clone())).and_then(|f| f.specialize(&Subst::T(one.clone())));
        let p1n = SymFunc::p(&Partition::column(k)).to_basis(Basis::S);
        out.push(match at1 {
            Ok(f) => Check::with_sides(format!("H~_{mu}(1,1) = h_1^{k}"), f.equals(&p1n), &p1n, &f),
            Err(e) => Check::failed(format!("H~_{mu}(1,1)"), e),
        });
    }
    let hn = htilde(&Partition::row(k));
    for b in 0..k {
        let mut parts = vec![k - b];
        parts.extend(std::iter::repeat_n(1, b as usize));
        let hook = Partition::from_unsorted(parts);
        let expect = QTRational::from(qbinom_poly(k as i64 - 1, b as i64)).mul_monomial((b * (b + 1) / 2) as i64, 0);
        let got = hn.coeff(&hook);
        out.push(Check::with_sides(format!("<H~_{k}, s_{hook}> = q^C(b+1,2) [n-1; b]_q"), got == expect, &expect, &got));
    }
    out
}

fn kostka(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for mu in partitions_of(k) {
        out.push(match whittaker::w_checked(&mu) {
            Ok(_) => Check::holds(format!("W_{mu}: charge = top t-coefficient of H~ = H route"), true),
            Err(e) => Check::failed(format!("W_{mu}: three routes"), e),
        });
        let h = htilde(&mu);
        let bad = partitions_of(k).into_iter().find_map(|lam| {
            let c = h.coeff(&lam).specialize(&Subst::Q(QTRational::one())).and_then(|c| c.specialize(&Subst::T(QTRational::one()))).ok()?;
            let f = QTRational::int(whittaker::f_lambda(&lam));
            (c != f).then_some((lam, f, c))
        });
        out.push(match bad {
            None => Check::holds(format!("K~_(lambda,{mu})(1,1) = f^lambda"), true),
            Some((lam, f, c)) => Check::with_sides(format!("K~_({lam},{mu})(1,1) = f^lambda"), false, f, c),
        });
        let hl = hall_littlewood(&mu);
        let t0 = h.specialize(&Subst::TZero).expect("polynomial");
        out.push(Check::with_sides(format!("Hall-Littlewood H_{mu} = H~_{mu}(q,0)"), hl.equals(&t0), &t0, &hl));
        let (qp, tri) = (q_prime(&mu), q_prime_triangular(&mu));
        out.push(Check::with_sides(format!("Q'_{mu}: charge = triangularity"), qp.equals(&tri), &tri, &qp));
    }
    out
}

fn qmn_formula(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=7 {
        let name = format!("q^alpha Q_({m},{k})(q,1/q): closed form = bracket recursion");
        out.push(match elliptic::qmn_specialized_direct(m, k) {
            Ok(d) => Check::eq(name, &d, &elliptic::formula_qmn_specialized(m, k)),
            Err(e) => Check::failed(name, e),
        });
    }
    out.push(match elliptic::qmn_at_t0(k, k) {
        Ok(e) => Check::eq(format!("Q_({k},{k})(q,0) = W_{k} + [{}]_q W_({},1)", k - 1, k - 1), &elliptic::qnn_at_t0_closed(k), &e),
        Err(e) => Check::failed(format!("Q_({k},{k})(q,0)"), e),
    });
    out.push(match elliptic::elliptic_q(1, k) {
        Ok(q) => Check::with_sides(format!("Q_(1,{k}) = e_{k}"), q.equals(&SymFunc::e(k)), SymFunc::e(k).to_basis(Basis::S), q),
        Err(e) => Check::failed(format!("Q_(1,{k})"), e),
    });
    out
}

fn table_checks(name: &str) -> Vec<Check> {
    match tables::run_table(name) {
        Ok(t) => t.report.checks.into_iter().map(|mut c| {
            c.name = format!("table {name}: {}", c.name);
            c
        }).collect(),
        Err(e) => vec![Check::failed(format!("table {name}"), e)],
    }
}

fn delta_zero(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for j in 1..=k {
        out.push(Check::eq(
            format!("Delta0_(e_{j}) on length-{j} sum, degree {k}: closed = direct"),
            &families::delta_zero_expansions_direct(j, k),
            &families::delta_zero_expansions(j, k),
        ));
    }
    let cases: Vec<(Partition, u32)> = partitions_of(k).into_iter().flat_map(|mu| (0..k).map(move |j| (mu.clone(), j))).collect();
    out.push(first_failure(format!("Delta0_(e_j) W_mu vanishing and closed forms, |mu| = {k}"), cases, |(mu, j)| {
        if !families::delta_w_vanishing_holds(mu, *j) {
            return Some((format!("{mu} j={j} vanishing"), "0".into(), families::prop_delta_w(mu, *j).to_string()));
        }
        let direct = families::prop_delta_w(mu, *j);
        families::delta_w_closed_forms(mu, *j)
            .into_iter()
            .find(|(_, e)| *e != direct)
            .map(|(case, e)| (format!("{mu} j={j} {case:?}"), direct.to_string(), e.to_string()))
    }));
    if k <= 4 {
        let cases: Vec<(Partition, u32)> = partitions_of(k).into_iter().flat_map(|nu| (0..=k).map(move |j| (nu.clone(), j))).collect();
        out.push(first_failure(format!("P_(nu,k) product = Kostka sum, |nu| = {k}"), cases, |(nu, j)| {
            let (a, b) = (families::p_nu_k(nu, *j), families::p_nu_k_kostka(nu, *j));
            (a != b).then(|| (format!("{nu} {j}"), b.to_string(), a.to_string()))
        }));
        out.push(first_failure(format!("Delta0 operator identity on s_nu, |nu| = {k}"), partitions_of(k), |nu| {
            (!families::operator_identity_holds(&SymFunc::s(nu), k, 5)).then(|| (nu.to_string(), "identity".into(), "differs".into()))
        }));
    }
    if k == 6 {
        let e = families::prop_delta_w(&crate::partitions::p(&[2, 2, 2]), 1);
        let c = e.coeff(&crate::partitions::p(&[3, 3]));
        let expect = crate::qt_ring::parse_qt("q^2-1").expect("constant");
        out.push(Check::with_sides("Delta0_(e_1) W_222: coefficient of W_33 is q^2-1", c == expect, &expect, &c));
        let pos = families::positivity(&eigenops::delta_zero(&SymFunc::e(1), &w(&crate::partitions::p(&[2, 2, 2]))), families::PositivityBasis::W);
        out.push(Check::holds("Delta0_(e_1) W_222 is not W-positive", !pos));
    }
    out
}

fn delta_bar(k: u32) -> Vec<Check> {
    let cases: Vec<(Partition, u32)> = partitions_of(k).into_iter().flat_map(|mu| (1..=k).map(move |j| (mu.clone(), j))).collect();
    let bar = first_failure(format!("Delta-bar_(e_j) W_mu = specialisation of Delta, |mu| = {k}"), cases.clone(), |(mu, j)| {
        let (f, g) = (SymFunc::e(*j), w(mu));
        match eigenops::delta_bar_direct(&f, &g) {
            Ok(d) => {
                let b = eigenops::delta_bar(&f, &g);
                (!b.equals(&d)).then(|| (format!("{mu} e_{j}"), d.to_string(), b.to_string()))
            }
            Err(e) => Some((format!("{mu} e_{j}"), "a specialisation".into(), e.to_string())),
        }
    });
    let zero = first_failure(format!("Delta0_(e_j) W_mu = t=0 specialisation, |mu| = {k}"), cases, |(mu, j)| {
        let (f, g) = (SymFunc::e(*j), w(mu));
        match eigenops::delta_zero_direct(&f, &g) {
            Ok(d) => {
                let b = eigenops::delta_zero(&f, &g);
                (!b.equals(&d)).then(|| (format!("{mu} e_{j}"), d.to_string(), b.to_string()))
            }
            Err(e) => Some((format!("{mu} e_{j}"), "a specialisation".into(), e.to_string())),
        }
    });
    vec![bar, zero]
}

fn two_rows(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for b in 0..=k / 2 {
        let a = k - b;
        out.push(Check::eq(format!("nabla W_({a},{b}) closed form"), &families::nabla_w_two_rows_direct(a, b), &families::nabla_w_two_rows(a, b)));
        for j in 1..=3 {
            if let Some(e) = families::qt_delta_two_rows(a, b, j) {
                out.push(Check::eq(format!("Delta'_(e_{j}) W_({a},{b}) at t=1/q, closed form"), &families::qt_delta_two_rows_direct(a, b, j), &e));
            }
        }
    }
    out
}

fn vn(k: u32) -> Vec<Check> {
    let v = families::v_n(k);
    let mut out = vec![Check::with_sides(format!("V_{k} = LLT sum over height-1 Dyck paths"), v.equals(&families::dyck_llt_sum(k, 1)), families::dyck_llt_sum(k, 1), &v)];
    let at1 = v.specialize(&Subst::Q(QTRational::one())).expect("polynomial");
    let series = families::v_n_series(k);
    out.push(Check::with_sides(format!("V_{k}(1,t) series"), at1.equals(&series), &series, &at1));
    let both = at1.specialize(&Subst::T(QTRational::one())).expect("polynomial");
    let expect = families::v_n_at_one(k);
    out.push(Check::with_sides(format!("V_{k}(1,1)"), both.equals(&expect), &expect, &both));
    if k <= 4 {
        let ne = eigenops::nabla(&SymFunc::e(k));
        out.push(Check::with_sides(format!("nabla e_{k} = LLT sum over all Dyck paths"), ne.equals(&families::dyck_llt_sum(k, k)), &ne, families::dyck_llt_sum(k, k)));
    }
    out
}

fn two_row(a: u32, b: u32) -> Partition {
    Partition::from_unsorted(vec![a, b])
}

fn science_fiction_structure(k: u32) -> Vec<Check> {
    let b = match sf::science_fiction(k) {
        Ok(b) => b,
        Err(e) => return vec![Check::failed(format!("C^{k} basis"), e)],
    };
    let mut out = Vec::new();
    let top = htilde(&two_row(b.k, b.l));
    out.push(Check::with_sides(format!("sum_j t^j C_j^{k} = H~_({},{})", b.k, b.l), sf::reassemble(&b).equals(&top), &top, sf::reassemble(&b)));
    let fact: u64 = (1..=k as u64).product();
    for i in 0..=b.l {
        let c = b.get(i);
        let fl = sf::flipped(c);
        out.push(Check::with_sides(format!("symmetry: flip C_{i}^{k} = C_{}^{k}", b.l - i), fl.equals(b.get(b.l - i)), b.get(b.l - i), &fl));
        let wi = w(&two_row(k - i, i));
        let wc = sf::w_from_c(k, i);
        out.push(match wc {
            Ok(x) => Check::with_sides(format!("W_({},{i}) from C^{k}", k - i), x.equals(&wi), &wi, &x),
            Err(e) => Check::failed(format!("W_({},{i}) from C^{k}", k - i), e),
        });
        let cw = sf::c_from_w(k, i);
        out.push(Check::with_sides(format!("C_{i}^{k} from W"), cw.equals(c), c, &cw));
        let dim = sf::dimension(c, k);
        let expect = QTRational::int(fact >> b.l);
        out.push(Check::with_sides(format!("dim C_{i}^{k} = {k}!/2^{}", b.l), dim == expect, &expect, &dim));
        out.push(Check::holds(format!("C_{i}^{k} is Schur positive"), sf::schur_positive(c)));
    }
    out.push(match sf::gamma_matrix(k) {
        Ok(g) => Check::holds(format!("gamma^{k} = lower * upper"), g == sf::lu_lower(k).mul(&sf::lu_upper(k))),
        Err(e) => Check::failed(format!("gamma^{k}"), e),
    });
    out
}

fn science_fiction_nabla(k: u32) -> Vec<Check> {
    vec![match sf::nabla_c0(k) {
        Ok((a, b)) => Check::with_sides(format!("nabla C_0^{k}"), a.equals(&b), &b, &a),
        Err(e) => Check::failed(format!("nabla C_0^{k}"), e),
    }]
}

/// `k` is the size of `lambda`; the reconstructed `H~_nu` have size `k - 1`.
fn science_fiction_phi(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for lam in partitions_of(k) {
        let c = sf::lower_covers(&lam);
        let ok = c.iter().all(|nu| sf::phi_reconstruct(nu, &c).equals(&htilde(nu)));
        out.push(Check::holds(format!("Phi reconstruction of H~_nu for nu covered by {lam}"), ok));
        let pos = (0..c.len() as u32).all(|j| sf::schur_positive(&sf::phi(&c, j)));
        out.push(Check::holds(format!("Phi^(j) below {lam} are Schur positive"), pos));
    }
    out
}

fn gh_nfact(k: u32) -> Vec<Check> {
    let fact: usize = (1..=k as usize).product();
    ghmodules::par_partitions(k, |mu| match ghmodules::derivative_closure(&Diagram::from_partition(mu)) {
        Ok(m) => {
            let h = htilde(mu);
            let f = ghmodules::bigraded_frobenius(&m);
            vec![
                Check::with_sides(format!("dim M_{mu} = {k}!"), m.dim() == fact, fact, m.dim()),
                Check::with_sides(format!("Frobenius of M_{mu} = H~_{mu}"), f.equals(&h), &h, &f),
            ]
        }
        Err(e) => vec![Check::failed(format!("M_{mu}"), e)],
    })
    .into_iter()
    .flat_map(|(_, v)| v)
    .collect()
}

/// `k` is the size of `lambda`; punctured diagrams have `k - 1` cells.
fn gh_punctured(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for lam in partitions_of(k) {
        for c in lam.cells() {
            let e = ghmodules::punctured_expected(&lam, c);
            out.push(match ghmodules::punctured_char(&lam, c) {
                Ok(g) => Check::with_sides(format!("character of W_({lam} minus {c:?}) = D_c W_{lam}"), g.equals(&e), &e, &g),
                Err(err) => Check::failed(format!("W_({lam} minus {c:?})"), err),
            });
        }
    }
    out
}

fn gh_kappa_vanishing(k: u32) -> Vec<Check> {
    partitions_of(k)
        .into_iter()
        .map(|mu| {
            let ok = match ghmodules::v_diagram(&Diagram::from_partition(&mu)) {
                Ok(v) => kappa_pairs().iter().all(|&(a, b)| ghmodules::kappa_apply(a, b, &v).is_zero()),
                Err(_) => false,
            };
            Check::holds(format!("kappa_jk V_{mu} = 0"), ok)
        })
        .collect()
}

fn kappa_pairs() -> Vec<(u32, u32)> {
    vec![(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2), (3, 0)]
}

/// `count` diagrams of at most `max_cells` distinct cells in a 4 x 4 box.
pub fn random_diagrams(count: usize, max_cells: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_cells);
            let mut d = Diagram::new([]);
            while d.len() < size {
                d.insert((rng.gen_range(0..4), rng.gen_range(0..4)));
            }
            d
        })
        .collect()
}

fn gh_kappa_random(max_cells: u32) -> Vec<Check> {
    random_diagrams(20, max_cells as usize, DIAGRAM_SEED)
        .into_iter()
        .map(|d| {
            let cells: Vec<_> = d.cells().copied().collect();
            let ok = kappa_pairs().iter().all(|&(a, b)| ghmodules::kappa_formula_holds(a, b, &d).unwrap_or(false));
            Check::holds(format!("kappa_jk V_D by moving cells = by differentiation, D = {cells:?}"), ok)
        })
        .collect()
}

fn gh_filtration(k: u32) -> Vec<Check> {
    match ghmodules::filtration_check(k) {
        Ok(r) => {
            let mut out: Vec<Check> = r
                .steps
                .iter()
                .map(|s| {
                    let ok = s.surjective && s.schur_positive && s.kernel.equals(&s.expected);
                    Check::with_sides(format!("polarisation step ({},{}) in degree {k}", s.a, s.b), ok, &s.expected, &s.kernel)
                })
                .collect();
            out.push(Check::holds(format!("K_{k} identity"), r.kn_identity));
            out
        }
        Err(e) => vec![Check::failed(format!("filtration {k}"), e)],
    }
}

fn w_positivity(k: u32) -> Vec<Check> {
    let mut out = Vec::new();
    for mu in partitions_of(k) {
        let pos = w(&mu).terms().values().all(QTRational::is_positive_poly);
        out.push(Check::holds(format!("W_{mu} is Schur positive"), pos));
        let sz = SymFunc::s(&mu).pleth(&(crate::symfunc::z() / (Alphabet::one() - Alphabet::q())));
        let jt = families::jacobi_trudi_w_hat(&mu);
        out.push(Check::with_sides(format!("s_{mu}[z/(1-q)] by the determinant"), jt.equals(&sz), &sz, &jt));
        let e = families::s_over_1mq_expansion(&mu);
        let ok = e.coeff(&mu).is_one() && e.terms.values().all(families::is_nonneg_poly);
        out.push(Check::with_sides(format!("s_{mu}[z/(1-q)] is W^-positive and unitriangular"), ok, "positive", &e));
        let hook_like = mu.len() == 1 || mu.part(2) == 1 || mu.len() == k as usize;
        if hook_like {
            let bad = partitions_of(k).into_iter().filter(|l| *l != mu && l.dominates(&mu)).find(|l| e.coeff(l) != families::hook_gamma(&mu, l));
            out.push(match bad {
                None => Check::holds(format!("hook gamma formula for s_{mu}[z/(1-q)]"), true),
                Some(l) => Check::with_sides(format!("hook gamma formula, s_{mu} at W^_{l}"), false, families::hook_gamma(&mu, &l), e.coeff(&l)),
            });
        }
        for side in [whittaker::HookSide::Plain, whittaker::HookSide::Omega] {
            let (a, b) = (whittaker::hook_eval(&mu, side), whittaker::hook_eval_direct(&mu, side));
            out.push(Check::with_sides(format!("hook evaluation {side:?} of W_{mu}"), a == b, &b, &a));
        }
        out.push(Check::holds(format!("W_{mu} Mellit shape"), families::w_mellit_shape_holds(&mu)));
    }
    let en = SymFunc::e(k).pleth(&(crate::symfunc::z() / (Alphabet::one() - Alphabet::q())));
    let e = expand_in_w(&en, WKind::WHat);
    let bad = partitions_of(k).into_iter().find(|mu| e.coeff(mu) != QTRational::monomial(mu.conjugate().eta() as i64, 0));
    out.push(Check::holds(format!("e_{k}[z/(1-q)] = sum q^eta(mu') W^_mu"), bad.is_none()));
    out
}

/// Runs suite `name` for sizes up to `n`.
pub fn run_suite(name: &str, n: u32) -> Result<SuiteReport, CliError> {
    let mut jobs: Jobs = Vec::new();
    match name {
        "cauchy" => per_size(&mut jobs, "cauchy", 1, n, 7, cauchy),
        "duality" => per_size(&mut jobs, "duality", 1, n, 8, duality),
        "pieri" => {
            per_size(&mut jobs, "strips", 1, n, 9, pieri_strips);
            per_size(&mut jobs, "perp", 1, n, 7, pieri_perp);
            jobs.push(job("displays".into(), pieri_displays));
        }
        "downup" => per_size(&mut jobs, "down-up", 1, n, 7, downup),
        "mac-tables" => {
            per_size(&mut jobs, "routes", 1, n, 5, mac_routes);
            per_size(&mut jobs, "flips", 1, n, 7, mac_flips);
        }
        "kostka" => {
            per_size(&mut jobs, "kostka", 1, n, 7, kostka);
            if n >= 4 {
                for t in ["kostka-4", "qt-kostka-4", "hl-kostka-4"] {
                    jobs.push(job(t.into(), move || table_checks(t)));
                }
            }
        }
        "qmn-tables" => {
            per_size(&mut jobs, "qmn", 1, n, 6, qmn_formula);
            for k in 3..=n.min(6) {
                let t: &'static str = ["qmn-3", "qmn-4", "qmn-5", "qmn-6"][k as usize - 3];
                jobs.push(job(t.into(), move || table_checks(t)));
            }
            if n >= 3 {
                jobs.push(job("Q-3".into(), || table_checks("Q-3")));
            }
        }
        "delta-zero" => per_size(&mut jobs, "delta-zero", 1, n, 6, delta_zero),
        "delta-bar" => per_size(&mut jobs, "delta-bar", 1, n, 5, delta_bar),
        "qt-two-rows" => per_size(&mut jobs, "two-rows", 1, n, 6, two_rows),
        "vn" => per_size(&mut jobs, "vn", 1, n, 6, vn),
        "science-fiction" => {
            per_size(&mut jobs, "structure", 2, n, 8, science_fiction_structure);
            per_size(&mut jobs, "nabla C0", 2, n, 7, science_fiction_nabla);
            per_size(&mut jobs, "phi", 2, n, 7, science_fiction_phi);
            if n >= 6 {
                jobs.push(job("C6".into(), || table_checks("C6")));
                jobs.push(job("gamma-6".into(), || table_checks("gamma-6")));
            }
        }
        "gh-nfact" => per_size(&mut jobs, "gh n!", 1, n, 5, gh_nfact),
        "gh-pieri" => {
            per_size(&mut jobs, "punctured", 2, n, 5, gh_punctured);
            per_size(&mut jobs, "kappa V_mu", 1, n, 5, gh_kappa_vanishing);
            per_size(&mut jobs, "filtration", 2, n, 5, gh_filtration);
            let cells = n.clamp(1, 4);
            jobs.push(job("kappa random".into(), move || gh_kappa_random(cells)));
        }
        "w-positivity" => per_size(&mut jobs, "w-positivity", 1, n, 6, w_positivity),
        _ => return Err(CliError::Usage(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
    Ok(SuiteReport { suite: name.to_string(), n, checks: run_jobs(jobs) })
}
