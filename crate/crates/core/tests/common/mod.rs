//! Table-level oracles shared by the integration tests. Everything here
//! works on raw operation tables only and never consults the structural
//! machinery it is used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use blcalc::algebra::ComponentKind;
use blcalc::{Chain, Element, RawChain};

/// Every composition of `total` into positive parts.
pub fn compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All fully finite chains of the given mode with at most `max_size`
/// elements, the trivial chain included.
pub fn finite_chains(max_size: usize, bottom_designated: bool) -> Vec<Chain> {
    let mut out = Vec::new();
    for total in 0..max_size as u32 {
        for parts in compositions(total) {
            let kinds = parts.into_iter().map(ComponentKind::FinLuk).collect();
            out.push(Chain::new(kinds, bottom_designated).unwrap());
        }
    }
    out
}

/// Chains with at most `max_comps` components, each `W_k` with `k <= max_k`.
pub fn bounded_chains(max_comps: usize, max_k: u32, bottom_designated: bool) -> Vec<Chain> {
    let mut out = vec![Chain::trivial(bottom_designated)];
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_comps {
        let mut next = Vec::new();
        for p in &layer {
            for k in 1..=max_k {
                let mut q = p.clone();
                q.push(k);
                next.push(q);
            }
        }
        for q in &next {
            out.push(Chain::new(q.iter().map(|&k| ComponentKind::FinLuk(k)).collect(), bottom_designated).unwrap());
        }
        layer = next;
    }
    out
}

/// Index of each element in the flattened tables.
pub fn index_of(c: &Chain, x: &Element) -> usize {
    c.elements_finite().unwrap().binary_search(x).unwrap()
}

/// All injective maps between tables preserving product, implication
/// and, for bottom-designated tables, the least element. Found by
/// backtracking over every function.
pub fn table_embeddings(a: &RawChain, b: &RawChain) -> Vec<Vec<usize>> {
    fn go(a: &RawChain, b: &RawChain, f: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = f.len();
        if i == a.size {
            out.push(f.clone());
            return;
        }
        'cand: for v in 0..b.size {
            if f.contains(&v) {
                continue;
            }
            if a.bottom_designated && i == 0 && v != 0 {
                continue;
            }
            f.push(v);
            for x in 0..=i {
                for y in 0..=i {
                    for (ta, tb) in [(&a.mul, &b.mul), (&a.imp, &b.imp)] {
                        let r = ta[x][y];
                        if r <= i && f[r] != tb[f[x]][f[y]] {
                            f.pop();
                            continue 'cand;
                        }
                    }
                }
            }
            go(a, b, f, out);
            f.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out);
    // Products landing above the current index are only checked here.
    out.retain(|f| {
        (0..a.size)
            .all(|x| (0..a.size).all(|y| f[a.mul[x][y]] == b.mul[f[x]][f[y]] && f[a.imp[x][y]] == b.imp[f[x]][f[y]]))
    });
    out
}

/// Deductive filters of a table: upsets containing the top that are
/// closed under product.
pub fn table_filters(t: &RawChain) -> Vec<BTreeSet<usize>> {
    (0..t.size)
        .map(|lo| (lo..t.size).collect::<BTreeSet<usize>>())
        .filter(|f| f.iter().all(|&x| f.iter().all(|&y| f.contains(&t.mul[x][y]))))
        .collect()
}

/// Quotient of a table by a filter, as a table on the congruence classes.
pub fn table_quotient(t: &RawChain, f: &BTreeSet<usize>) -> RawChain {
    let equiv = |x: usize, y: usize| f.contains(&t.imp[x][y]) && f.contains(&t.imp[y][x]);
    let mut class_of = vec![usize::MAX; t.size];
    let mut n = 0;
    for x in 0..t.size {
        if class_of[x] == usize::MAX {
            for (y, c) in class_of.iter_mut().enumerate().skip(x) {
                if equiv(x, y) {
                    *c = n;
                }
            }
            n += 1;
        }
    }
    let rep: Vec<usize> = (0..n).map(|c| class_of.iter().position(|&k| k == c).unwrap()).collect();
    let table = |src: &Vec<Vec<usize>>| -> Vec<Vec<usize>> {
        rep.iter().map(|&x| rep.iter().map(|&y| class_of[src[x][y]]).collect()).collect()
    };
    RawChain { size: n, mul: table(&t.mul), imp: table(&t.imp), bottom_designated: t.bottom_designated }
}

/// Subsets containing the top (and the bottom for bottom-designated
/// tables) closed under both operations.
pub fn table_subalgebras(t: &RawChain) -> Vec<Vec<usize>> {
    let top = t.size - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1 << t.size) {
        if mask & (1 << top) == 0 || (t.bottom_designated && mask & 1 == 0) {
            continue;
        }
        let s: Vec<usize> = (0..t.size).filter(|&i| mask & (1 << i) != 0).collect();
        let closed =
            s.iter().all(|&x| s.iter().all(|&y| mask & (1 << t.mul[x][y]) != 0 && mask & (1 << t.imp[x][y]) != 0));
        if closed {
            out.push(s);
        }
    }
    out
}

/// Isomorphism type of a finite chain. An isomorphism of chains is
/// monotone, so two chains are isomorphic exactly when their ascending
/// tables coincide.
pub type TableKey = (Vec<Vec<usize>>, Vec<Vec<usize>>);

pub fn table_key(t: &RawChain) -> TableKey {
    (t.mul.clone(), t.imp.clone())
}

/// Isomorphism types of all subalgebras of all quotients of `t`.
pub fn hs_closure(t: &RawChain) -> BTreeSet<TableKey> {
    let mut out = BTreeSet::new();
    for f in table_filters(t) {
        let q = table_quotient(t, &f);
        for s in table_subalgebras(&q) {
            out.insert(table_key(&q.restrict(&s).unwrap()));
        }
    }
    out
}
