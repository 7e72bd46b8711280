//! Class expressions over component kinds, membership, and comparison of
//! finite-index parts of varieties.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::algebra::{Chain, ComponentKind};
use crate::error::{Error, Result};
use crate::morphisms::{filters, quotient_by_filter};

/// A component kind inside a class expression. `designated` marks the
/// bottom-designated first atom of a BL class (`L m`, `Lo m`, `UM`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Atom {
    pub kind: ComponentKind,
    pub designated: bool,
}

impl Atom {
    pub fn w(kind: ComponentKind) -> Atom {
        Atom { kind, designated: false }
    }

    pub fn l(kind: ComponentKind) -> Atom {
        Atom { kind, designated: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Item {
    Atom(Atom),
    Star(Atom),
    Group(Vec<Atom>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SumClass {
    pub items: Vec<Item>,
}

/// A union of sum classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassExpr {
    pub sums: Vec<SumClass>,
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::dsl::pretty_class(self))
    }
}

impl SumClass {
    pub fn new(items: Vec<Item>) -> SumClass {
        SumClass { items }
    }

    pub fn is_trivial_only(&self) -> bool {
        self.items.iter().all(|i| matches!(i, Item::Atom(a) if a.kind.is_trivial()))
    }

    pub fn is_bl(&self) -> bool {
        matches!(self.items.first(), Some(Item::Atom(a)) if a.designated)
    }

    /// Items after the designated head (all items in BH mode).
    pub fn tail(&self) -> &[Item] {
        if self.is_bl() {
            &self.items[1..]
        } else {
            &self.items
        }
    }
}

impl ClassExpr {
    pub fn new(sums: Vec<SumClass>) -> ClassExpr {
        ClassExpr { sums }
    }

    /// The class containing only the trivial chain.
    pub fn trivial() -> ClassExpr {
        ClassExpr { sums: vec![SumClass::new(vec![Item::Atom(Atom::w(ComponentKind::Trivial))])] }
    }

    pub fn single(items: Vec<Item>) -> ClassExpr {
        ClassExpr { sums: vec![SumClass::new(items)] }
    }

    pub fn union(&self, other: &ClassExpr) -> ClassExpr {
        let mut sums = self.sums.clone();
        for s in &other.sums {
            if !sums.contains(s) {
                sums.push(s.clone());
            }
        }
        ClassExpr { sums }
    }

    pub fn is_trivial_only(&self) -> bool {
        self.sums.iter().all(SumClass::is_trivial_only)
    }

    /// `Some(true)` for BL classes, `Some(false)` for basic-hoop classes,
    /// `None` when only the trivial chain is described.
    pub fn mode(&self) -> Option<bool> {
        self.sums.iter().find(|s| !s.is_trivial_only()).map(SumClass::is_bl)
    }

    pub fn has_star(&self) -> bool {
        self.sums.iter().flat_map(|s| &s.items).any(|i| !matches!(i, Item::Atom(_)))
    }

    pub fn atoms(&self) -> Vec<Atom> {
        let mut out = BTreeSet::new();
        for s in &self.sums {
            for i in &s.items {
                match i {
                    Item::Atom(a) | Item::Star(a) => {
                        out.insert(*a);
                    }
                    Item::Group(g) => out.extend(g.iter().copied()),
                }
            }
        }
        out.into_iter().collect()
    }

    /// Checks the placement rules for designated atoms.
    pub fn validate(&self) -> Result<()> {
        if self.sums.is_empty() {
            return Err(Error::Invalid("empty class expression".into()));
        }
        for s in &self.sums {
            if s.items.is_empty() {
                return Err(Error::Invalid("empty sum class".into()));
            }
            for (i, item) in s.items.iter().enumerate() {
                let designated = match item {
                    Item::Atom(a) => a.designated && i > 0,
                    Item::Star(a) => a.designated,
                    Item::Group(g) => g.iter().any(|a| a.designated) || g.is_empty(),
                };
                if designated {
                    return Err(Error::Invalid("bottom-designated atoms may only open a sum class".into()));
                }
            }
            if s.is_bl() {
                if let Some(Item::Atom(a)) = s.items.first() {
                    if !a.kind.is_bounded() {
                        return Err(Error::Invalid(format!("{:?} cannot open a BL class", a.kind)));
                    }
                }
            }
        }
        let modes: BTreeSet<bool> = self.sums.iter().filter(|s| !s.is_trivial_only()).map(SumClass::is_bl).collect();
        if modes.len() > 1 {
            return Err(Error::Invalid("BL and basic-hoop sum classes are mixed".into()));
        }
        Ok(())
    }

    /// Prefixes every sum class with a designated atom (`[A] ⊕ K`).
    pub fn prefixed(&self, head: Atom) -> ClassExpr {
        let mut sums = Vec::new();
        for s in &self.sums {
            let mut items = vec![Item::Atom(head)];
            items.extend(s.items.iter().filter(|i| !matches!(i, Item::Atom(a) if a.kind.is_trivial())).cloned());
            let sc = SumClass::new(items);
            if !sums.contains(&sc) {
                sums.push(sc);
            }
        }
        ClassExpr { sums }
    }

    /// The union of the tails of all sum classes, as a basic-hoop class.
    pub fn tails(&self) -> ClassExpr {
        let mut sums: Vec<SumClass> = Vec::new();
        for s in &self.sums {
            let tail = s.tail();
            let sc = if tail.is_empty() { ClassExpr::trivial().sums.remove(0) } else { SumClass::new(tail.to_vec()) };
            if !sums.contains(&sc) {
                sums.push(sc);
            }
        }
        if sums.len() > 1 {
            sums.retain(|s| !s.is_trivial_only());
        }
        ClassExpr { sums }
    }

    /// Whether each sum class has one of the shapes with a known witness
    /// basis: at most two tail items, a group only on its own.
    pub fn is_canonical_shape(&self) -> bool {
        self.sums.iter().all(|s| {
            let tail = s.tail();
            tail.len() <= 2
                && tail.iter().all(|i| match i {
                    Item::Group(g) => tail.len() == 1 && g.len() == 2,
                    _ => true,
                })
        })
    }
}

/// Whether a component kind belongs to the class generated by an atom
/// (closed under subalgebras, homomorphic images and ultraproducts).
pub fn component_member(kind: ComponentKind, atom: ComponentKind) -> bool {
    use ComponentKind::*;
    match (kind, atom) {
        (Trivial, _) => true,
        (_, Trivial) => false,
        (_, StdUnit) => true,
        (FinLuk(k), FinLuk(n)) | (FinLuk(k), LexOmega(n)) | (LexOmega(k), LexOmega(n)) => n % k == 0,
        (CancellativeZ, CancellativeZ) | (CancellativeZ, LexOmega(_)) => true,
        _ => false,
    }
}

/// Entries of [`component_member`] that rest on ultrapower arguments rather
/// than on a finite embedding: infinite kinds inside the unit interval's
/// class (infinitesimals of ultrapowers of `[0,1]`).
pub fn component_member_is_axiomatic(kind: ComponentKind, atom: ComponentKind) -> bool {
    atom == ComponentKind::StdUnit && !kind.is_finite()
}

fn matches_items(comps: &[ComponentKind], items: &[Item]) -> bool {
    let Some((item, rest)) = items.split_first() else {
        return comps.is_empty();
    };
    match item {
        Item::Atom(a) => {
            matches_items(comps, rest)
                || (!comps.is_empty() && component_member(comps[0], a.kind) && matches_items(&comps[1..], rest))
        }
        Item::Star(a) => {
            matches_items(comps, rest)
                || (!comps.is_empty() && component_member(comps[0], a.kind) && matches_items(&comps[1..], items))
        }
        Item::Group(g) => {
            matches_items(comps, rest)
                || (!comps.is_empty()
                    && g.iter().any(|a| component_member(comps[0], a.kind))
                    && matches_items(&comps[1..], items))
        }
    }
}

fn member_sum(c: &Chain, s: &SumClass) -> bool {
    let comps = c.components();
    if s.is_bl() {
        let Some(Item::Atom(head)) = s.items.first() else { return false };
        match comps.split_first() {
            Some((first, rest)) => component_member(*first, head.kind) && matches_items(rest, &s.items[1..]),
            None => true,
        }
    } else {
        matches_items(comps, &s.items)
    }
}

fn check_modes(c: &Chain, e: &ClassExpr) -> Result<()> {
    if let Some(bl) = e.mode() {
        if !c.is_trivial() && bl != c.bottom_designated() {
            return Err(Error::Mismatch(format!(
                "{} chain tested against a {} class",
                if c.bottom_designated() { "BL" } else { "basic hoop" },
                if bl { "BL" } else { "basic hoop" }
            )));
        }
    }
    Ok(())
}

/// Regex-style membership: atoms match zero or one component, starred
/// items any number; the head of a BL class matches the first component.
pub fn member(c: &Chain, e: &ClassExpr) -> Result<bool> {
    if c.is_trivial() {
        return Ok(true);
    }
    check_modes(c, e)?;
    Ok(e.sums.iter().any(|s| member_sum(c, s)))
}

/// Input describing a variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VarietyInput {
    Generators(Vec<Chain>),
    Canonical(ClassExpr),
}

impl VarietyInput {
    /// `Some(true)` for BL input, `Some(false)` for basic hoops, `None`
    /// when only trivial chains are involved.
    pub fn mode(&self) -> Option<bool> {
        match self {
            VarietyInput::Generators(gs) => gs.iter().find(|g| !g.is_trivial()).map(|g| g.bottom_designated()),
            VarietyInput::Canonical(e) => e.mode(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            VarietyInput::Generators(gs) => gs.iter().all(Chain::is_trivial),
            VarietyInput::Canonical(e) => e.is_trivial_only(),
        }
    }
}

fn embeds_greedy(xs: &[ComponentKind], shape: &[ComponentKind]) -> bool {
    let mut j = 0;
    for x in xs {
        while j < shape.len() && !component_member(*x, shape[j]) {
            j += 1;
        }
        if j == shape.len() {
            return false;
        }
        j += 1;
    }
    true
}

fn embeds_into_shape(x: &Chain, shape: &Chain) -> bool {
    let xs = x.components();
    let ss = shape.components();
    if x.bottom_designated() {
        match (xs.split_first(), ss.split_first()) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((x0, xr)), Some((s0, sr))) => component_member(*x0, *s0) && embeds_greedy(xr, sr),
        }
    } else {
        embeds_greedy(xs, ss)
    }
}

/// Membership of a finite-index chain in the finite-index part of the
/// variety described by the input.
pub fn vfc_membership(x: &Chain, v: &VarietyInput) -> Result<bool> {
    if x.is_trivial() {
        return Ok(true);
    }
    match v {
        VarietyInput::Canonical(e) => member(x, e),
        VarietyInput::Generators(gs) => {
            for g in gs {
                if g.is_trivial() {
                    continue;
                }
                if g.bottom_designated() != x.bottom_designated() {
                    return Err(Error::Mismatch("generator and chain have different signatures".into()));
                }
                for f in filters(g).filters {
                    if embeds_into_shape(x, &quotient_by_filter(g, &f)?) {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
    }
}

fn words(atoms: &[Atom], max_len: usize) -> Vec<Vec<ComponentKind>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<ComponentKind>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in atoms {
                let mut v = w.clone();
                v.push(a.kind);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Finite set of members that separates the catalog classes from each
/// other and from finitely generated inputs. `reps` raises the number of
/// repetitions tried for starred items.
pub fn witness_basis(e: &ClassExpr, reps: usize) -> Result<Vec<Chain>> {
    let mut out: Vec<Chain> = Vec::new();
    for s in &e.sums {
        if s.is_trivial_only() {
            continue;
        }
        let tail = s.tail();
        let sole = tail.len() == 1;
        let mut options: Vec<Vec<Vec<ComponentKind>>> = Vec::new();
        for item in tail {
            options.push(match item {
                Item::Atom(a) if a.kind.is_trivial() => vec![Vec::new()],
                Item::Atom(a) => vec![vec![a.kind]],
                Item::Star(a) => {
                    let max = if sole { 3 } else { 2 }.max(reps);
                    (1..=max).map(|n| vec![a.kind; n]).collect()
                }
                Item::Group(g) => words(g, 3.max(reps)),
            });
        }
        for combo in crate::morphisms::cartesian(&options) {
            let mut comps: Vec<ComponentKind> = Vec::new();
            if let (true, Some(Item::Atom(h))) = (s.is_bl(), s.items.first()) {
                comps.push(h.kind);
            }
            comps.extend(combo.into_iter().flatten());
            let c = Chain::new(comps, s.is_bl())?;
            if !c.is_trivial() && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VfcRelation {
    Equal,
    /// The input is strictly contained in the class; the witness is in the
    /// class but not in the input.
    VStrictlySmaller(Chain),
    /// The input is not contained in the class; the witness is in the
    /// input but not in the class.
    VLargerOrIncomparable(Chain),
}

impl VfcRelation {
    pub fn witness(&self) -> Option<&Chain> {
        match self {
            VfcRelation::Equal => None,
            VfcRelation::VStrictlySmaller(w) | VfcRelation::VLargerOrIncomparable(w) => Some(w),
        }
    }
}

/// Compares the finite-index part of the input with a canonical class.
pub fn vfc_equals(v: &VarietyInput, e: &ClassExpr) -> Result<VfcRelation> {
    e.validate()?;
    if !e.is_canonical_shape() {
        return Err(Error::Invalid(format!("{e} is not a canonical class shape")));
    }
    if let (Some(a), Some(b)) = (v.mode(), e.mode()) {
        if a != b {
            return Err(Error::Mismatch("input and class have different signatures".into()));
        }
    }
    let outside = match v {
        VarietyInput::Generators(gs) => {
            let mut found = None;
            for g in gs {
                if !member(g, e)? {
                    found = Some(g.clone());
                    break;
                }
            }
            found
        }
        VarietyInput::Canonical(ve) => {
            let mut found = None;
            for w in witness_basis(ve, 0)? {
                if !member(&w, e)? {
                    found = Some(w);
                    break;
                }
            }
            found
        }
    };
    if let Some(w) = outside {
        return Ok(VfcRelation::VLargerOrIncomparable(w));
    }
    let reps = match v {
        VarietyInput::Generators(gs) => gs.iter().map(Chain::index).max().unwrap_or(0) + 1,
        VarietyInput::Canonical(_) => 0,
    };
    for w in witness_basis(e, reps)? {
        if !vfc_membership(&w, v)? {
            return Ok(VfcRelation::VStrictlySmaller(w));
        }
    }
    Ok(VfcRelation::Equal)
}
