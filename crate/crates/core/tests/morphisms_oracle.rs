mod common;

use std::collections::BTreeSet;

use blcalc::algebra::ComponentKind::*;
use blcalc::morphisms::{
    enumerate_embeddings, essentialize, filters, is_essential_by_filters, is_essential_embedding, quotient_by_filter,
    verify_embedding,
};
use blcalc::structure::{decompose, flatten};
use blcalc::{Caps, Chain, Element};
use common::*;

fn as_function(m: &blcalc::morphisms::ChainMap) -> Vec<usize> {
    let src = m.source.elements_finite().unwrap();
    src.iter().map(|x| index_of(&m.target, &m.apply(x))).collect()
}

#[test]
fn embeddings_match_exhaustive_function_search() {
    for mode in [false, true] {
        let sources = finite_chains(5, mode);
        let targets = finite_chains(7, mode);
        for a in &sources {
            let ta = flatten(a).unwrap();
            for b in &targets {
                let tb = flatten(b).unwrap();
                let ours = enumerate_embeddings(a, b, None).unwrap();
                let funcs: Vec<Vec<usize>> = ours.iter().map(as_function).collect();
                let got: BTreeSet<Vec<usize>> = funcs.iter().cloned().collect();
                assert_eq!(got.len(), funcs.len(), "duplicate embeddings {a:?} -> {b:?}");
                let expected: BTreeSet<Vec<usize>> = table_embeddings(&ta, &tb).into_iter().collect();
                assert_eq!(got, expected, "{a:?} -> {b:?}");
            }
        }
    }
}

#[test]
fn symbolic_embeddings_verify_on_windows() {
    let chains: Vec<Chain> = [
        vec![LexOmega(1)],
        vec![FinLuk(2), CancellativeZ],
        vec![CancellativeZ, LexOmega(2)],
        vec![LexOmega(2), FinLuk(1), CancellativeZ],
    ]
    .into_iter()
    .map(|k| Chain::hoop(k).unwrap())
    .collect();
    for a in &chains {
        for b in &chains {
            for m in enumerate_embeddings(a, b, Some(3)).unwrap() {
                verify_embedding(&m, Caps::new(4, 4)).unwrap();
            }
        }
    }
}

#[test]
fn structural_essentiality_matches_filter_definition() {
    let chains = bounded_chains(3, 3, false);
    let mut checked = 0;
    for a in &chains {
        for b in &chains {
            for m in enumerate_embeddings(a, b, None).unwrap() {
                assert_eq!(
                    is_essential_embedding(&m),
                    is_essential_by_filters(&m, Caps::default()),
                    "{a:?} -> {b:?} via {:?}",
                    m.index_map
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn essentiality_with_radical_filters() {
    let caps = Caps::new(4, 4);
    let cases = [
        (vec![FinLuk(1)], vec![LexOmega(1)]),
        (vec![LexOmega(1)], vec![LexOmega(2)]),
        (vec![FinLuk(2)], vec![FinLuk(1), LexOmega(2)]),
        (vec![CancellativeZ], vec![FinLuk(1), LexOmega(1)]),
    ];
    for (s, t) in cases {
        let a = Chain::hoop(s).unwrap();
        let b = Chain::hoop(t).unwrap();
        for m in enumerate_embeddings(&a, &b, Some(2)).unwrap() {
            assert_eq!(is_essential_embedding(&m), is_essential_by_filters(&m, caps), "{a:?} -> {b:?} {m:?}");
        }
    }
}

fn image_injective_under(m: &blcalc::morphisms::ChainMap, f: &blcalc::morphisms::Filter) -> bool {
    let img: Vec<Element> = m.source.elements_finite().unwrap().iter().map(|x| m.apply(x)).collect();
    let proj: BTreeSet<Element> = img.iter().map(|y| f.project(&m.target, y)).collect();
    proj.len() == img.len()
}

#[test]
fn essentialize_is_essential_and_maximal() {
    let chains = bounded_chains(3, 2, false);
    for a in &chains {
        for b in &chains {
            for m in enumerate_embeddings(a, b, None).unwrap() {
                let (theta, e) = essentialize(&m).unwrap();
                assert!(is_essential_embedding(&e));
                assert!(is_essential_by_filters(&e, Caps::default()));
                verify_embedding(&e, Caps::default()).unwrap();
                assert!(image_injective_under(&m, &theta));
                let fc = filters(&m.target).filters;
                let pos = fc.iter().position(|f| *f == theta).unwrap();
                for larger in &fc[pos + 1..] {
                    assert!(!image_injective_under(&m, larger), "{m:?} survives {larger:?}");
                }
            }
        }
    }
}

#[test]
fn quotients_match_table_congruences() {
    for mode in [false, true] {
        for c in bounded_chains(4, 2, mode) {
            let t = flatten(&c).unwrap();
            let elems = c.elements_finite().unwrap();
            let table_fs = table_filters(&t);
            let ours = filters(&c).filters;
            assert_eq!(ours.len(), table_fs.len(), "{c:?}");
            for f in ours {
                let members: BTreeSet<usize> =
                    elems.iter().enumerate().filter(|(_, x)| f.contains(&c, x)).map(|(i, _)| i).collect();
                assert!(table_fs.contains(&members), "{f:?} on {c:?}");
                let q = quotient_by_filter(&c, &f).unwrap();
                let oracle = decompose(&table_quotient(&t, &members)).unwrap().chain;
                assert_eq!(q, oracle, "{f:?} on {c:?}");
                let prefix = &c.components()[..f.cut];
                assert_eq!(&q.components()[..f.cut.min(q.index())], prefix);
            }
        }
    }
}
