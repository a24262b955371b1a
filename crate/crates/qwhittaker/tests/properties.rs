use proptest::prelude::*;
use qwhittaker::ghmodules::kappa_formula_holds;
use qwhittaker::macdonald::htilde;
use qwhittaker::partitions::{partitions_of, Diagram, Partition};
use qwhittaker::qt_ring::{parse_qt, QTRational, Subst};
use qwhittaker::symfunc::{parse_symfunc, Basis, SymFunc};
use qwhittaker::whittaker::{expand_in_w, from_w, w, WKind};

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| {
        let parts = partitions_of(n);
        (0..parts.len()).prop_map(move |i| parts[i].clone())
    })
}

fn qt_rational() -> impl Strategy<Value = QTRational> {
    let mono = (-3i64..=3, 0i64..=3, 0i64..=3).prop_map(|(c, a, b)| &QTRational::int(c) * &QTRational::monomial(a, b));
    let poly = prop::collection::vec(mono, 1..4).prop_map(|v| v.iter().fold(QTRational::zero(), |acc, m| &acc + m));
    (poly.clone(), poly).prop_filter_map("nonzero denominator", |(a, b)| (!b.is_zero()).then(|| &a / &b))
}

fn symfunc(n: u32) -> impl Strategy<Value = SymFunc> {
    let parts = partitions_of(n);
    let k = parts.len();
    prop::collection::vec(qt_rational(), k).prop_map(move |cs| SymFunc::from_terms(Basis::S, parts.iter().cloned().zip(cs)))
}

fn diagram() -> impl Strategy<Value = Diagram> {
    prop::collection::btree_set((0u32..4, 0u32..4), 1..=5).prop_map(Diagram::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_is_an_involution(mu in partition(9)) {
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
        prop_assert_eq!(mu.conjugate().size(), mu.size());
    }

    #[test]
    fn conjugation_reverses_dominance(a in partition(7), b in partition(7)) {
        prop_assume!(a.size() == b.size());
        prop_assert_eq!(a.dominates(&b), b.conjugate().dominates(&a.conjugate()));
    }

    #[test]
    fn qt_display_parses_back(r in qt_rational()) {
        prop_assert_eq!(parse_qt(&r.to_string()).unwrap(), r);
    }

    #[test]
    fn qt_field_identities(a in qt_rational(), b in qt_rational()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(a.swap_qt().swap_qt(), a);
    }

    #[test]
    fn basis_changes_round_trip(f in symfunc(4), target in prop::sample::select(vec![Basis::M, Basis::E, Basis::H, Basis::P])) {
        prop_assert!(f.to_basis(target).to_basis(Basis::S).equals(&f));
    }

    #[test]
    fn omega_is_an_involution(f in symfunc(4)) {
        prop_assert!(f.omega().omega().equals(&f));
    }

    #[test]
    fn symfunc_display_parses_back(f in symfunc(3)) {
        prop_assert!(parse_symfunc(&f.to_string()).unwrap().equals(&f));
    }

    #[test]
    fn w_expansion_round_trips(f in symfunc(4)) {
        prop_assert!(from_w(&expand_in_w(&f, WKind::W), WKind::W).equals(&f));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn w_at_q_zero_is_schur(mu in partition(5)) {
        let at0 = w(&mu).specialize(&Subst::QZero).unwrap();
        prop_assert!(at0.equals(&SymFunc::s(&mu)));
    }

    #[test]
    fn htilde_duality(mu in partition(4)) {
        let swapped = htilde(&mu).map_coeffs(QTRational::swap_qt);
        prop_assert!(swapped.equals(&htilde(&mu.conjugate())));
    }

    #[test]
    fn kappa_by_moving_cells(d in diagram(), jk in prop::sample::select(vec![(1u32, 0u32), (0, 1), (1, 1), (2, 0)])) {
        prop_assert!(kappa_formula_holds(jk.0, jk.1, &d).unwrap());
    }
}
