//! Decision procedures for the amalgamation property of varieties of
//! MV-algebras, Wajsberg hoops, basic hoops and BL-algebras, and the
//! interval posets they are read off from.

use std::fmt;

use serde_json::json;

use crate::algebra::{Chain, ComponentKind};
use crate::dsl::{parse_class_expr, pretty_chain};
use crate::error::{Error, Result};
use crate::varieties::{component_member, vfc_equals, Atom, ClassExpr, Item, VarietyInput, VfcRelation};

/// Names one interval of the basic-hoop catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IntervalId {
    /// `I(A)` for `A` one of `W_n`, `Z`, `[0,1]`.
    Single(ComponentKind),
    /// `I(W_{n,ω})`.
    LexOmega(u32),
    /// `I(W_n, Z)`.
    FinZ(u32),
}

impl fmt::Display for IntervalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalId::Single(k) => write!(f, "I({})", k.label(false)),
            IntervalId::LexOmega(n) => write!(f, "I(Wo{n})"),
            IntervalId::FinZ(n) => write!(f, "I(W{n},Z)"),
        }
    }
}

impl IntervalId {
    /// Accepts `I(W2)`, `I(Z)`, `I(U)`, `I(Wo2)`, `I(W2,omega)`, `I(W2,ω)`
    /// and `I(W2,Z)`.
    pub fn parse(s: &str) -> Result<IntervalId> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("I(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, format!("expected I(...), got {s:?}")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        let kind = |p: &str| -> Result<ComponentKind> {
            let c = crate::dsl::parse_chain(p)?;
            match c.components() {
                [k] if !c.bottom_designated() => Ok(*k),
                _ => Err(Error::parse(0, format!("{p:?} is not a single Wajsberg kind"))),
            }
        };
        match parts.as_slice() {
            [a] => match kind(a)? {
                ComponentKind::LexOmega(n) => Ok(IntervalId::LexOmega(n)),
                k @ (ComponentKind::FinLuk(_) | ComponentKind::CancellativeZ | ComponentKind::StdUnit) => {
                    Ok(IntervalId::Single(k))
                }
                k => Err(Error::Invalid(format!("no interval for {k}"))),
            },
            [a, b] => match (kind(a)?, *b) {
                (ComponentKind::FinLuk(n), "Z") => Ok(IntervalId::FinZ(n)),
                (ComponentKind::FinLuk(n), "omega" | "ω") => Ok(IntervalId::LexOmega(n)),
                _ => Err(Error::Invalid(format!("unknown interval {s:?}"))),
            },
            _ => Err(Error::Invalid(format!("unknown interval {s:?}"))),
        }
    }

    /// Builds an id from a family name (`wn`, `wo`, `wnz`, `z`, `u`) and a
    /// parameter.
    pub fn from_name(name: &str, n: Option<u32>) -> Result<IntervalId> {
        let need = || n.filter(|&n| n >= 1).ok_or_else(|| Error::Invalid(format!("{name} needs a parameter n >= 1")));
        match name {
            "wn" => Ok(IntervalId::Single(ComponentKind::FinLuk(need()?))),
            "wo" => Ok(IntervalId::LexOmega(need()?)),
            "wnz" => Ok(IntervalId::FinZ(need()?)),
            "z" => Ok(IntervalId::Single(ComponentKind::CancellativeZ)),
            "u" => Ok(IntervalId::Single(ComponentKind::StdUnit)),
            _ => Err(Error::Invalid(format!("unknown interval family {name:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalPoset {
    pub id: IntervalId,
    pub nodes: Vec<ClassExpr>,
    /// `(lower, upper)` node indices.
    pub covers: Vec<(usize, usize)>,
}

fn classes(items: &[String]) -> Vec<ClassExpr> {
    items.iter().map(|s| parse_class_expr(s).expect("catalog expressions parse")).collect()
}

/// The interval of AP varieties between `[A]` and its top.
pub fn interval(id: IntervalId) -> IntervalPoset {
    match id {
        IntervalId::Single(k) => {
            let a = k.label(false);
            IntervalPoset { id, nodes: classes(&[format!("[{a}]"), format!("[{a}*]")]), covers: vec![(0, 1)] }
        }
        IntervalId::LexOmega(n) => IntervalPoset {
            id,
            nodes: classes(&[format!("[Wo{n}]"), format!("[W{n}* Wo{n}]"), format!("[Wo{n}*]")]),
            covers: vec![(0, 1), (1, 2)],
        },
        IntervalId::FinZ(n) => {
            let w = format!("W{n}");
            let nodes = classes(&[
                format!("[{w}]|[Z]"),
                format!("[{w} Z]"),
                format!("[Z {w}]"),
                format!("[{w}*]|[Z]"),
                format!("[{w}]|[Z*]"),
                format!("[{w}* Z]"),
                format!("[{w} Z*]"),
                format!("[Z* {w}]"),
                format!("[Z {w}*]"),
                format!("[{w}*]|[Z*]"),
                format!("[{w}* Z*]"),
                format!("[Z* {w}*]"),
                format!("[({w} Z)*]"),
            ]);
            let covers = vec![
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 5),
                (1, 6),
                (2, 7),
                (2, 8),
                (3, 5),
                (3, 8),
                (3, 9),
                (4, 6),
                (4, 7),
                (4, 9),
                (5, 10),
                (6, 10),
                (7, 11),
                (8, 11),
                (9, 10),
                (9, 11),
                (10, 12),
                (11, 12),
            ];
            IntervalPoset { id, nodes, covers }
        }
    }
}

/// Hasse diagram of the inclusion order among the nodes, computed from
/// pairwise comparisons.
pub fn derive_covers(nodes: &[ClassExpr]) -> Result<Vec<(usize, usize)>> {
    let n = nodes.len();
    let mut below = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let r = vfc_equals(&VarietyInput::Canonical(nodes[i].clone()), &nodes[j])?;
                match r {
                    VfcRelation::VStrictlySmaller(_) => below[i][j] = true,
                    VfcRelation::Equal => {
                        return Err(Error::Internal(format!("nodes {} and {} coincide", nodes[i], nodes[j])))
                    }
                    VfcRelation::VLargerOrIncomparable(_) => {}
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if below[i][j] && !(0..n).any(|k| below[i][k] && below[k][j]) {
                covers.push((i, j));
            }
        }
    }
    Ok(covers)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PosetFormat {
    Dot,
    Json,
}

impl PosetFormat {
    pub fn parse(s: &str) -> Result<PosetFormat> {
        match s {
            "dot" => Ok(PosetFormat::Dot),
            "json" => Ok(PosetFormat::Json),
            _ => Err(Error::Invalid(format!("unknown poset format {s:?}; expected dot or json"))),
        }
    }
}

pub fn emit_poset(p: &IntervalPoset, format: PosetFormat) -> String {
    match format {
        PosetFormat::Dot => {
            let mut out = format!("digraph \"{}\" {{\n  rankdir=BT;\n", p.id);
            for (i, node) in p.nodes.iter().enumerate() {
                out.push_str(&format!("  n{i} [label=\"{node}\"];\n"));
            }
            for (l, u) in &p.covers {
                out.push_str(&format!("  n{l} -> n{u};\n"));
            }
            out.push_str("}\n");
            out
        }
        PosetFormat::Json => {
            let v = json!({
                "schema": crate::SCHEMA,
                "interval": p.id.to_string(),
                "nodes": p.nodes.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "covers": p.covers,
            });
            format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable"))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlCase {
    /// `[A] ⊕ K`.
    Sum,
    /// `([L_m] ⊕ K) ∪ [L_{m,ω}]`.
    Split,
    /// `([L_{m,ω}] ⊕ K₁) ∪ ([L_m] ⊕ K₂)`.
    RadicalFin,
    /// `([L_m] ⊕ K₁) ∪ ([L_{m,ω}] ⊕ K₂)`.
    RadicalZ,
}

impl BlCase {
    pub fn number(self) -> u8 {
        match self {
            BlCase::Sum => 2,
            BlCase::Split => 3,
            BlCase::RadicalFin | BlCase::RadicalZ => 4,
        }
    }
}

/// Where an AP class sits in the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Position {
    Trivial,
    Node {
        interval: IntervalId,
        node: usize,
    },
    /// A BL class built from the MV head and a basic-hoop position.
    Bl {
        case: BlCase,
        head: Atom,
        basic: Box<Position>,
    },
    /// Generated by one MV-chain or one Wajsberg chain (or `{W_n, Z}`).
    OneChain,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Position::Trivial => f.write_str("Trivial"),
            Position::Node { interval, node } => write!(f, "{interval}[{node}]"),
            Position::Bl { case, head, basic } => {
                let variant = match case {
                    BlCase::RadicalFin => "a",
                    BlCase::RadicalZ => "b",
                    _ => "",
                };
                write!(f, "case {}{variant} head {} over {basic}", case.number(), head.kind.label(true))
            }
            Position::OneChain => f.write_str("one-chain"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub ap: bool,
    pub canonical: Option<ClassExpr>,
    pub position: Option<Position>,
    pub witness: Option<Chain>,
    pub reason: Option<String>,
}

impl Verdict {
    fn yes(canonical: ClassExpr, position: Position) -> Verdict {
        Verdict { ap: true, canonical: Some(canonical), position: Some(position), witness: None, reason: None }
    }

    fn no(reason: impl Into<String>, witness: Option<Chain>) -> Verdict {
        Verdict { ap: false, canonical: None, position: None, witness, reason: Some(reason.into()) }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "ap": self.ap,
            "canonical": self.canonical.as_ref().map(ToString::to_string),
            "interval": self.position.as_ref().map(ToString::to_string),
            "witness": self.witness.as_ref().map(pretty_chain),
            "reason": self.reason,
        })
    }
}

fn maximal(kinds: impl IntoIterator<Item = ComponentKind>) -> Vec<ComponentKind> {
    let mut all: Vec<ComponentKind> = kinds.into_iter().filter(|k| !k.is_trivial()).collect();
    all.sort();
    all.dedup();
    all.iter().copied().filter(|&k| !all.iter().any(|&o| o != k && component_member(k, o))).collect()
}

fn require_mode(v: &VarietyInput, bl: bool) -> Result<()> {
    match v.mode() {
        Some(m) if m != bl => {
            Err(Error::Mismatch(format!("expected {} input", if bl { "BL (bottom-designated)" } else { "basic hoop" })))
        }
        _ => Ok(()),
    }
}

/// Kinds of single-component members, for MV and Wajsberg inputs.
fn one_component_kinds(v: &VarietyInput, what: &str) -> Result<Vec<ComponentKind>> {
    let mut out = Vec::new();
    match v {
        VarietyInput::Generators(gs) => {
            for g in gs {
                if g.index() > 1 {
                    return Err(Error::Invalid(format!("{} is not {what}", pretty_chain(g))));
                }
                out.extend(g.components().iter().copied());
            }
        }
        VarietyInput::Canonical(e) => {
            for s in &e.sums {
                match s.items.as_slice() {
                    [Item::Atom(a)] => out.push(a.kind),
                    _ => return Err(Error::Invalid(format!("{e} is not a class of {what}s"))),
                }
            }
        }
    }
    Ok(out)
}

/// Varieties of MV-algebras have the AP iff they are generated by one chain.
pub fn classify_ap_mv(v: &VarietyInput) -> Result<Verdict> {
    require_mode(v, true)?;
    let kinds = maximal(one_component_kinds(v, "an MV-chain")?);
    Ok(match kinds.as_slice() {
        [] => Verdict::yes(ClassExpr::trivial(), Position::Trivial),
        [k] => Verdict::yes(ClassExpr::single(vec![Item::Atom(Atom::l(*k))]), Position::OneChain),
        _ => Verdict::no(
            format!(
                "not generated by one chain: {}",
                kinds.iter().map(|k| k.label(true)).collect::<Vec<_>>().join(", ")
            ),
            None,
        ),
    })
}

/// Varieties of Wajsberg hoops have the AP iff they are generated by one
/// chain or by `{W_n, Z}`.
pub fn classify_ap_wh(v: &VarietyInput) -> Result<Verdict> {
    require_mode(v, false)?;
    let kinds = maximal(one_component_kinds(v, "a Wajsberg chain")?);
    let atom = |k: ComponentKind| crate::varieties::SumClass::new(vec![Item::Atom(Atom::w(k))]);
    Ok(match kinds.as_slice() {
        [] => Verdict::yes(ClassExpr::trivial(), Position::Trivial),
        [k] => Verdict::yes(ClassExpr::new(vec![atom(*k)]), Position::OneChain),
        [ComponentKind::FinLuk(n), ComponentKind::CancellativeZ] => Verdict::yes(
            ClassExpr::new(vec![atom(ComponentKind::FinLuk(*n)), atom(ComponentKind::CancellativeZ)]),
            Position::OneChain,
        ),
        _ => Verdict::no(
            format!("not of an AP form: {}", kinds.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
            None,
        ),
    })
}

fn input_kinds(v: &VarietyInput) -> Vec<ComponentKind> {
    match v {
        VarietyInput::Generators(gs) => gs.iter().flat_map(|g| g.components().iter().copied()).collect(),
        VarietyInput::Canonical(e) => e.atoms().iter().map(|a| a.kind).collect(),
    }
}

/// The interval determined by the maximal component kinds, if any.
pub fn wajs_interval(kinds: &[ComponentKind]) -> Option<IntervalId> {
    match maximal(kinds.iter().copied()).as_slice() {
        [ComponentKind::LexOmega(n)] => Some(IntervalId::LexOmega(*n)),
        [k] => Some(IntervalId::Single(*k)),
        [ComponentKind::FinLuk(n), ComponentKind::CancellativeZ] => Some(IntervalId::FinZ(*n)),
        _ => None,
    }
}

pub fn classify_ap_bh(v: &VarietyInput) -> Result<Verdict> {
    require_mode(v, false)?;
    if v.is_trivial() {
        return Ok(Verdict::yes(ClassExpr::trivial(), Position::Trivial));
    }
    let kinds = input_kinds(v);
    let Some(id) = wajs_interval(&kinds) else {
        let max = maximal(kinds);
        return Ok(Verdict::no(
            format!(
                "maximal Wajsberg components {} do not generate an AP class",
                max.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
            ),
            None,
        ));
    };
    let poset = interval(id);
    let mut above = None;
    let mut outside = None;
    for (i, node) in poset.nodes.iter().enumerate() {
        match vfc_equals(v, node)? {
            VfcRelation::Equal => return Ok(Verdict::yes(node.clone(), Position::Node { interval: id, node: i })),
            VfcRelation::VStrictlySmaller(w) => {
                above.get_or_insert(w);
            }
            VfcRelation::VLargerOrIncomparable(w) => {
                outside.get_or_insert(w);
            }
        }
    }
    Ok(Verdict::no(format!("finite-index part matches no node of {id}"), above.or(outside)))
}

fn bl_candidates(head: Atom, k: &ClassExpr, k_pos: &Position) -> Vec<(BlCase, ClassExpr)> {
    let mut out = vec![(BlCase::Sum, k.prefixed(head))];
    if let ComponentKind::LexOmega(m) = head.kind {
        let lo = Atom::l(ComponentKind::LexOmega(m));
        let l = Atom::l(ComponentKind::FinLuk(m));
        let lo_alone = ClassExpr::single(vec![Item::Atom(lo)]);
        if !k.is_trivial_only() {
            out.push((BlCase::Split, k.prefixed(l).union(&lo_alone)));
        }
        if let Position::Node { interval: IntervalId::FinZ(_), .. } = k_pos {
            if k.sums.len() == 2 {
                let k1 = ClassExpr::new(vec![k.sums[0].clone()]);
                let k2 = ClassExpr::new(vec![k.sums[1].clone()]);
                out.push((BlCase::RadicalFin, k1.prefixed(lo).union(&k2.prefixed(l))));
                out.push((BlCase::RadicalZ, k1.prefixed(l).union(&k2.prefixed(lo))));
            }
        }
    }
    out
}

fn heads(v: &VarietyInput) -> Vec<ComponentKind> {
    match v {
        VarietyInput::Generators(gs) => gs.iter().filter_map(|g| g.components().first().copied()).collect(),
        VarietyInput::Canonical(e) => e
            .sums
            .iter()
            .filter_map(|s| match s.items.first() {
                Some(Item::Atom(a)) if a.designated => Some(a.kind),
                _ => None,
            })
            .collect(),
    }
}

/// The basic-hoop class of tails `X` with `A ⊕ X` in the input.
pub fn basic_part(v: &VarietyInput) -> Result<VarietyInput> {
    Ok(match v {
        VarietyInput::Generators(gs) => VarietyInput::Generators(
            gs.iter()
                .map(|g| Chain::new(g.components().iter().skip(1).copied().collect(), false))
                .collect::<Result<Vec<_>>>()?,
        ),
        VarietyInput::Canonical(e) => VarietyInput::Canonical(e.tails()),
    })
}

pub fn classify_ap_bl(v: &VarietyInput) -> Result<Verdict> {
    require_mode(v, true)?;
    if v.is_trivial() {
        return Ok(Verdict::yes(ClassExpr::trivial(), Position::Trivial));
    }
    let head = match maximal(heads(v)).as_slice() {
        [k] => Atom::l(*k),
        ks => {
            return Ok(Verdict::no(
                format!(
                    "MV part is not generated by one chain: {}",
                    ks.iter().map(|k| k.label(true)).collect::<Vec<_>>().join(", ")
                ),
                None,
            ))
        }
    };
    let basic = classify_ap_bh(&basic_part(v)?)?;
    let (Some(k), Some(k_pos)) = (basic.canonical.clone(), basic.position.clone()) else {
        return Ok(Verdict {
            reason: Some(format!("basic part fails: {}", basic.reason.unwrap_or_default())),
            ..basic
        });
    };
    let mut witness = None;
    for (case, e) in bl_candidates(head, &k, &k_pos) {
        match vfc_equals(v, &e)? {
            VfcRelation::Equal => {
                return Ok(Verdict::yes(e, Position::Bl { case, head, basic: Box::new(k_pos) }));
            }
            r => {
                if witness.is_none() {
                    witness = r.witness().cloned();
                }
            }
        }
    }
    Ok(Verdict::no(format!("no case shape over {k} matches"), witness))
}

/// Dispatches on the signature of the input.
pub fn classify(v: &VarietyInput) -> Result<Verdict> {
    match v.mode() {
        Some(true) => classify_ap_bl(v),
        _ => classify_ap_bh(v),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CatalogMode {
    Bh,
    Bl,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub class: ClassExpr,
    pub position: Position,
}

fn bh_catalog(n_max: u32) -> Vec<CatalogEntry> {
    let mut out = vec![CatalogEntry { class: ClassExpr::trivial(), position: Position::Trivial }];
    let mut ids = vec![IntervalId::Single(ComponentKind::CancellativeZ), IntervalId::Single(ComponentKind::StdUnit)];
    for n in 1..=n_max {
        ids.push(IntervalId::Single(ComponentKind::FinLuk(n)));
        ids.push(IntervalId::LexOmega(n));
        ids.push(IntervalId::FinZ(n));
    }
    for id in ids {
        for (i, node) in interval(id).nodes.into_iter().enumerate() {
            out.push(CatalogEntry { class: node, position: Position::Node { interval: id, node: i } });
        }
    }
    out
}

/// All AP classes with parameters up to the bounds (`m_max` bounds the MV
/// head in BL mode).
pub fn enumerate_catalog(mode: CatalogMode, n_max: u32, m_max: u32) -> Vec<CatalogEntry> {
    let bh = bh_catalog(n_max);
    match mode {
        CatalogMode::Bh => bh,
        CatalogMode::Bl => {
            let mut out = vec![CatalogEntry { class: ClassExpr::trivial(), position: Position::Trivial }];
            let mut head_kinds = Vec::new();
            for m in 1..=m_max {
                head_kinds.push(ComponentKind::FinLuk(m));
                head_kinds.push(ComponentKind::LexOmega(m));
            }
            head_kinds.push(ComponentKind::StdUnit);
            for h in head_kinds {
                let head = Atom::l(h);
                for entry in &bh {
                    for (case, class) in bl_candidates(head, &entry.class, &entry.position) {
                        out.push(CatalogEntry {
                            class,
                            position: Position::Bl { case, head, basic: Box::new(entry.position.clone()) },
                        });
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_chain;

    fn canon(s: &str) -> VarietyInput {
        VarietyInput::Canonical(parse_class_expr(s).unwrap())
    }

    fn gens(s: &[&str]) -> VarietyInput {
        VarietyInput::Generators(s.iter().map(|c| parse_chain(c).unwrap()).collect())
    }

    #[test]
    fn interval_sizes() {
        assert_eq!(interval(IntervalId::Single(ComponentKind::FinLuk(2))).nodes.len(), 2);
        assert_eq!(interval(IntervalId::LexOmega(1)).covers.len(), 2);
        let p = interval(IntervalId::FinZ(1));
        assert_eq!(p.nodes.len(), 13);
        assert_eq!(p.covers.len(), 22);
    }

    #[test]
    fn covers_rederive() {
        for id in [IntervalId::FinZ(1), IntervalId::LexOmega(2), IntervalId::Single(ComponentKind::CancellativeZ)] {
            let p = interval(id);
            let mut derived = derive_covers(&p.nodes).unwrap();
            let mut given = p.covers.clone();
            derived.sort();
            given.sort();
            assert_eq!(derived, given, "{id}");
        }
    }

    #[test]
    fn interval_names() {
        assert_eq!(IntervalId::parse("I(W1,Z)").unwrap(), IntervalId::FinZ(1));
        assert_eq!(IntervalId::parse("I(W2,ω)").unwrap(), IntervalId::LexOmega(2));
        assert_eq!(IntervalId::parse("I( Wo2 )").unwrap(), IntervalId::LexOmega(2));
        assert_eq!(IntervalId::parse("I(U)").unwrap(), IntervalId::Single(ComponentKind::StdUnit));
        assert!(IntervalId::parse("J(W1)").is_err());
        assert!(IntervalId::parse("I(L1)").is_err());
        assert_eq!(IntervalId::from_name("wnz", Some(3)).unwrap().to_string(), "I(W3,Z)");
        assert!(IntervalId::from_name("wn", None).is_err());
    }

    #[test]
    fn mv_and_wh() {
        let v = classify_ap_mv(&gens(&["L2", "L4"])).unwrap();
        assert!(v.ap);
        assert_eq!(v.canonical.unwrap().to_string(), "[L4]");
        assert!(!classify_ap_mv(&gens(&["L2", "L3"])).unwrap().ap);
        assert!(classify_ap_mv(&gens(&["L2", "Lo4"])).unwrap().ap);
        assert!(classify_ap_mv(&canon("[UM]")).unwrap().ap);
        assert!(classify_ap_mv(&gens(&["L1+W1"])).is_err());
        assert!(classify_ap_wh(&gens(&["W3", "Z"])).unwrap().ap);
        assert!(!classify_ap_wh(&gens(&["W2", "W3"])).unwrap().ap);
        assert!(classify_ap_wh(&gens(&["Wo2"])).unwrap().ap);
        assert!(classify_ap_wh(&gens(&["Wo2", "Z", "W1"])).unwrap().ap);
        assert!(classify_ap_wh(&gens(&["T"])).unwrap().ap);
    }

    #[test]
    fn bh_examples() {
        let v = classify_ap_bh(&canon("[(W1 Z)*]")).unwrap();
        assert!(v.ap);
        assert_eq!(v.position, Some(Position::Node { interval: IntervalId::FinZ(1), node: 12 }));
        let v = classify_ap_bh(&gens(&["W1+W1"])).unwrap();
        assert!(!v.ap);
        assert_eq!(v.witness, Some(parse_chain("W1+W1+W1").unwrap()));
        assert!(!classify_ap_bh(&canon("[W1 Z]|[Z W1]")).unwrap().ap);
        assert!(classify_ap_bh(&gens(&["W2", "Z"])).unwrap().ap);
        assert!(!classify_ap_bh(&gens(&["W2", "W3"])).unwrap().ap);
        assert!(classify_ap_bh(&gens(&["Wo2", "W1+Wo2"])).is_ok());
    }

    #[test]
    fn bl_examples() {
        for s in ["[UM U*]", "[UM]", "[L1 W1*]", "[L1 Z]", "[L3]", "[Lo1 Z]|[L1 W1]"] {
            assert!(classify_ap_bl(&canon(s)).unwrap().ap, "{s}");
        }
        assert!(!classify_ap_bl(&canon("[L1 W1 W1]")).unwrap().ap);
        assert!(!classify_ap_bl(&canon("[L1 W1]|[L2 Z]")).unwrap().ap);
        let v = classify_ap_bl(&canon("[L1 Z]|[Lo1]")).unwrap();
        assert!(matches!(v.position, Some(Position::Bl { case: BlCase::Split, .. })));
        assert!(classify_ap_bl(&gens(&["L1+Z"])).unwrap().ap);
    }

    #[test]
    fn catalog_counts() {
        assert_eq!(enumerate_catalog(CatalogMode::Bh, 1, 1).len(), 23);
        assert_eq!(enumerate_catalog(CatalogMode::Bh, 3, 1).len(), 59);
    }

    #[test]
    fn catalog_fixed_point() {
        for entry in enumerate_catalog(CatalogMode::Bh, 2, 1) {
            let v = classify_ap_bh(&VarietyInput::Canonical(entry.class.clone())).unwrap();
            assert!(v.ap, "{}", entry.class);
            assert_eq!(v.position, Some(entry.position), "{}", entry.class);
        }
    }

    #[test]
    fn bl_catalog_fixed_point() {
        let all = enumerate_catalog(CatalogMode::Bl, 1, 1);
        assert!(all.iter().any(|e| matches!(e.position, Position::Bl { case: BlCase::RadicalZ, .. })));
        for entry in all {
            let v = classify_ap_bl(&VarietyInput::Canonical(entry.class.clone())).unwrap();
            assert!(v.ap, "{}", entry.class);
            assert_eq!(v.position, Some(entry.position), "{}", entry.class);
        }
    }

    #[test]
    fn posets_emit() {
        let p = interval(IntervalId::FinZ(1));
        let dot = emit_poset(&p, PosetFormat::Dot);
        assert_eq!(dot.matches("->").count(), 22);
        assert!(dot.contains("[(W1 Z)*]"));
        let json = emit_poset(&p, PosetFormat::Json);
        assert!(json.contains("\"schema\": \"blcalc/1\""));
        assert!(PosetFormat::parse("").is_err());
    }
}
