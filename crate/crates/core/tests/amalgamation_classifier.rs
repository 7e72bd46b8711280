mod common;

use blcalc::algebra::ComponentKind::{self, *};
use blcalc::amalgamation::{
    amalgamate_constructive, find_amalgam_bruteforce, is_essential_span, one_sided_amalgam, verify_amalgam, Bounds,
    Span,
};
use blcalc::classifier::{classify, classify_ap_bh, enumerate_catalog, CatalogMode};
use blcalc::dsl::parse_class_expr;
use blcalc::morphisms::enumerate_embeddings;
use blcalc::varieties::VarietyInput;
use blcalc::{Caps, Chain};
use common::*;
use proptest::prelude::*;

#[test]
fn finite_spans_amalgamate_and_commute() {
    let universe = parse_class_expr("[U*]").unwrap();
    let chains = bounded_chains(2, 3, false);
    let mut spans = 0;
    for a in chains.iter().filter(|c| c.index() <= 1) {
        for b in &chains {
            for c in &chains {
                let nl = enumerate_embeddings(a, b, None).unwrap().len();
                let nr = enumerate_embeddings(a, c, None).unwrap().len();
                for (li, ri) in (0..nl).flat_map(|i| (0..nr).map(move |j| (i, j))) {
                    let span = Span::from_indices(a, b, c, li, ri).unwrap();
                    let built = amalgamate_constructive(&span, &universe).unwrap();
                    verify_amalgam(&span, &built, Caps::default()).unwrap();
                    assert!(!built.one_sided);
                    let found = find_amalgam_bruteforce(&span, &universe, Bounds::new(4, 6)).unwrap();
                    let found = found.amalgam().expect("the constructed target is within bounds");
                    verify_amalgam(&span, found, Caps::default()).unwrap();
                    assert!(found.target.index() <= built.target.index());
                    spans += 1;
                }
            }
        }
    }
    assert!(spans > 100);
}

#[test]
fn symbolic_spans_commute_on_windows() {
    let universe = parse_class_expr("[U*]").unwrap();
    let h = |ks: Vec<ComponentKind>| Chain::hoop(ks).unwrap();
    let cases = [
        (h(vec![CancellativeZ]), h(vec![LexOmega(1)]), h(vec![FinLuk(1), CancellativeZ])),
        (h(vec![LexOmega(1)]), h(vec![LexOmega(2)]), h(vec![LexOmega(3)])),
        (h(vec![FinLuk(1)]), h(vec![LexOmega(2)]), h(vec![CancellativeZ, FinLuk(2)])),
    ];
    for (a, b, c) in cases {
        let span = Span::from_indices(&a, &b, &c, 0, 0).unwrap();
        let built = amalgamate_constructive(&span, &universe).unwrap();
        verify_amalgam(&span, &built, Caps::new(4, 4)).unwrap();
        assert!(!built.one_sided);
    }
}

#[test]
fn essential_spans_have_full_amalgams() {
    let universe = parse_class_expr("[W1* Z*]").unwrap();
    let h = |ks: Vec<ComponentKind>| Chain::hoop(ks).unwrap();
    let apexes = [h(vec![FinLuk(1)]), h(vec![CancellativeZ]), h(vec![FinLuk(1), CancellativeZ])];
    let targets =
        [h(vec![FinLuk(1), CancellativeZ]), h(vec![FinLuk(1), FinLuk(1), CancellativeZ]), h(vec![CancellativeZ])];
    let (mut essential, mut other) = (0, 0);
    for a in &apexes {
        for b in &targets {
            for c in &targets {
                let (Ok(lefts), Ok(rights)) =
                    (enumerate_embeddings(a, b, Some(2)), enumerate_embeddings(a, c, Some(2)))
                else {
                    continue;
                };
                for (li, ri) in (0..lefts.len()).flat_map(|i| (0..rights.len()).map(move |j| (i, j))) {
                    let span = Span::from_indices(a, b, c, li, ri).unwrap();
                    let one = one_sided_amalgam(&span, &universe, Bounds::new(4, 2)).unwrap();
                    verify_amalgam(&span, &one, Caps::new(3, 2)).unwrap();
                    if is_essential_span(&span) {
                        assert!(!one.one_sided, "{span:?}");
                        essential += 1;
                    } else {
                        other += 1;
                    }
                }
            }
        }
    }
    assert!(essential > 0 && other > 0);
}

#[test]
fn catalog_nodes_are_fixed_points() {
    for entry in enumerate_catalog(CatalogMode::Bh, 3, 0) {
        let v = classify(&VarietyInput::Canonical(entry.class.clone())).unwrap();
        assert!(v.ap, "{}", entry.class);
        assert_eq!(v.position, Some(entry.position.clone()), "{}", entry.class);
    }
    for entry in enumerate_catalog(CatalogMode::Bl, 2, 1) {
        let v = classify(&VarietyInput::Canonical(entry.class.clone())).unwrap();
        assert!(v.ap, "{}", entry.class);
        assert_eq!(v.canonical.as_ref(), Some(&entry.class));
    }
}

fn hoop_kind() -> impl Strategy<Value = ComponentKind> {
    prop_oneof![(1u32..=3).prop_map(FinLuk), (1u32..=2).prop_map(LexOmega), Just(CancellativeZ), Just(StdUnit)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_varieties_never_get_starred_classes(
        gens in prop::collection::vec(prop::collection::vec(hoop_kind(), 1..=3), 1..=3)
    ) {
        let gens: Vec<Chain> = gens.into_iter().map(|ks| Chain::hoop(ks).unwrap()).collect();
        let v = classify_ap_bh(&VarietyInput::Generators(gens)).unwrap();
        if let Some(c) = &v.canonical {
            prop_assert!(!c.has_star(), "{}", c);
        }
        prop_assert_eq!(v.ap, v.canonical.is_some());
    }
}
