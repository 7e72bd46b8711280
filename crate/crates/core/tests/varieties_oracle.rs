mod common;

use blcalc::algebra::ComponentKind::{self, *};
use blcalc::dsl::{parse_chain, parse_class_expr, pretty_chain, pretty_class};
use blcalc::structure::flatten;
use blcalc::varieties::{component_member, member, vfc_membership, Atom, ClassExpr, Item, SumClass, VarietyInput};
use blcalc::Chain;
use common::*;
use proptest::prelude::*;

#[test]
fn generator_membership_matches_hs_closure() {
    for mode in [false, true] {
        let chains = finite_chains(7, mode);
        for g in &chains {
            let hs = hs_closure(&flatten(g).unwrap());
            let input = VarietyInput::Generators(vec![g.clone()]);
            for x in &chains {
                let expected = hs.contains(&table_key(&flatten(x).unwrap()));
                assert_eq!(vfc_membership(x, &input).unwrap(), expected, "{x:?} in V({g:?})");
            }
        }
    }
}

#[test]
fn several_generators_act_as_a_join() {
    let chains = finite_chains(6, false);
    let closures: Vec<_> = chains.iter().map(|g| hs_closure(&flatten(g).unwrap())).collect();
    for (i, g) in chains.iter().enumerate().step_by(3) {
        for (j, h) in chains.iter().enumerate().skip(1).step_by(4) {
            let input = VarietyInput::Generators(vec![g.clone(), h.clone()]);
            for x in &chains {
                let key = table_key(&flatten(x).unwrap());
                let expected = closures[i].contains(&key) || closures[j].contains(&key);
                assert_eq!(vfc_membership(x, &input).unwrap(), expected, "{x:?} in V({g:?}, {h:?})");
            }
        }
    }
}

fn kind() -> impl Strategy<Value = ComponentKind> {
    prop_oneof![(1u32..=4).prop_map(FinLuk), (1u32..=3).prop_map(LexOmega), Just(CancellativeZ), Just(StdUnit),]
}

fn head_kind() -> impl Strategy<Value = ComponentKind> {
    prop_oneof![(1u32..=4).prop_map(FinLuk), (1u32..=3).prop_map(LexOmega), Just(StdUnit)]
}

fn item() -> impl Strategy<Value = Item> {
    prop_oneof![
        kind().prop_map(|k| Item::Atom(Atom::w(k))),
        kind().prop_map(|k| Item::Star(Atom::w(k))),
        prop::collection::vec(kind(), 2..=3).prop_map(|ks| Item::Group(ks.into_iter().map(Atom::w).collect())),
    ]
}

fn sum_class(bl: bool) -> impl Strategy<Value = SumClass> {
    (head_kind(), prop::collection::vec(item(), 1..=4)).prop_map(move |(h, mut items)| {
        if bl {
            items.insert(0, Item::Atom(Atom::l(h)));
        }
        SumClass::new(items)
    })
}

fn class_expr(bl: bool) -> impl Strategy<Value = ClassExpr> {
    prop::collection::vec(sum_class(bl), 1..=3).prop_map(ClassExpr::new)
}

fn chain(bl: bool) -> impl Strategy<Value = Chain> {
    (head_kind(), prop::collection::vec(kind(), 0..=4)).prop_map(move |(h, mut ks)| {
        if bl {
            ks.insert(0, h);
        }
        Chain::new(ks, bl).unwrap()
    })
}

fn refinements(k: ComponentKind) -> Vec<ComponentKind> {
    let pool =
        [FinLuk(1), FinLuk(2), FinLuk(3), FinLuk(4), LexOmega(1), LexOmega(2), LexOmega(3), CancellativeZ, StdUnit];
    pool.into_iter().filter(|&p| component_member(p, k)).collect()
}

proptest! {
    #[test]
    fn chain_text_round_trips(c in any::<bool>().prop_flat_map(chain)) {
        let text = pretty_chain(&c);
        prop_assert_eq!(parse_chain(&text).unwrap(), c);
    }

    #[test]
    fn class_text_round_trips(e in any::<bool>().prop_flat_map(class_expr)) {
        let text = pretty_class(&e);
        let parsed = parse_class_expr(&text).unwrap();
        prop_assert_eq!(pretty_class(&parsed), text.clone());
        prop_assert_eq!(parsed, e);
    }

    #[test]
    fn union_is_disjunction(
        (x, e1, e2) in any::<bool>().prop_flat_map(|bl| (chain(bl), class_expr(bl), class_expr(bl)))
    ) {
        let both = member(&x, &e1.union(&e2)).unwrap();
        prop_assert_eq!(both, member(&x, &e1).unwrap() || member(&x, &e2).unwrap());
    }

    #[test]
    fn membership_survives_refinement(
        (x, e, pos, pick) in any::<bool>().prop_flat_map(|bl| (chain(bl), class_expr(bl), 0usize..5, any::<prop::sample::Index>()))
    ) {
        prop_assume!(!x.is_trivial());
        prop_assume!(member(&x, &e).unwrap());
        let comps = x.components().to_vec();
        let pos = pos % comps.len();
        let options: Vec<ComponentKind> = refinements(comps[pos])
            .into_iter()
            .filter(|k| pos > 0 || !x.bottom_designated() || k.is_bounded())
            .collect();
        let mut next = comps.clone();
        next[pos] = *pick.get(&options);
        let y = Chain::new(next, x.bottom_designated()).unwrap();
        prop_assert!(member(&y, &e).unwrap(), "{:?} in {} but {:?} is not", x, e, y);
    }
}
