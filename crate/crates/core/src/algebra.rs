//! Element model and exact operations for component kinds and whole chains.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// The representable Wajsberg components.
///
/// The derived order (finite kinds first, then by parameter) is the
/// enumeration order used by the amalgam search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    /// `W_k`, or `Ł_k` in first position of a bottom-designated chain.
    FinLuk(u32),
    /// `W_{k,ω}`, or `Ł_{k,ω}` when bottom-designated.
    LexOmega(u32),
    /// The negative cone of the integers.
    CancellativeZ,
    /// The unit interval with rational elements.
    StdUnit,
    Trivial,
}

impl ComponentKind {
    pub fn validate(self) -> Result<Self> {
        match self {
            ComponentKind::FinLuk(0) | ComponentKind::LexOmega(0) => {
                Err(Error::OutOfRange(format!("{self:?}: parameter must be at least 1")))
            }
            k => Ok(k),
        }
    }

    pub fn is_trivial(self) -> bool {
        self == ComponentKind::Trivial
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ComponentKind::FinLuk(_) | ComponentKind::Trivial)
    }

    /// Whether the kind has a least element (and so can start a BL-chain).
    pub fn is_bounded(self) -> bool {
        matches!(self, ComponentKind::FinLuk(_) | ComponentKind::LexOmega(_) | ComponentKind::StdUnit)
    }

    pub fn is_cancellative(self) -> bool {
        matches!(self, ComponentKind::CancellativeZ | ComponentKind::Trivial)
    }

    pub fn param(self) -> Option<u32> {
        match self {
            ComponentKind::FinLuk(k) | ComponentKind::LexOmega(k) => Some(k),
            _ => None,
        }
    }

    /// Number of elements including the top, for finite kinds.
    pub fn size(self) -> Option<usize> {
        match self {
            ComponentKind::FinLuk(k) => Some(k as usize + 1),
            ComponentKind::Trivial => Some(1),
            _ => None,
        }
    }

    pub fn top(self) -> LocalValue {
        match self {
            ComponentKind::FinLuk(k) => LocalValue::Fin(k as i64),
            ComponentKind::LexOmega(k) => LocalValue::Lex(k as i64, 0),
            ComponentKind::CancellativeZ => LocalValue::Neg(0),
            ComponentKind::StdUnit => LocalValue::Rat(Rational::from_integer(1)),
            ComponentKind::Trivial => LocalValue::Unit,
        }
    }

    pub fn bottom(self) -> Option<LocalValue> {
        match self {
            ComponentKind::FinLuk(_) => Some(LocalValue::Fin(0)),
            ComponentKind::LexOmega(_) => Some(LocalValue::Lex(0, 0)),
            ComponentKind::StdUnit => Some(LocalValue::Rat(Rational::from_integer(0))),
            ComponentKind::Trivial => Some(LocalValue::Unit),
            ComponentKind::CancellativeZ => None,
        }
    }

    pub fn check_value(self, v: &LocalValue) -> Result<()> {
        let ok = match (self, v) {
            (ComponentKind::FinLuk(k), LocalValue::Fin(i)) => (0..=k as i64).contains(i),
            (ComponentKind::LexOmega(k), LocalValue::Lex(a, b)) => {
                let k = k as i64;
                (0..=k).contains(a) && (*a != 0 || *b >= 0) && (*a != k || *b <= 0)
            }
            (ComponentKind::CancellativeZ, LocalValue::Neg(i)) => *i <= 0,
            (ComponentKind::StdUnit, LocalValue::Rat(q)) => {
                *q >= Rational::from_integer(0) && *q <= Rational::from_integer(1)
            }
            (ComponentKind::Trivial, LocalValue::Unit) => true,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutOfRange(format!("{v} is not an element of {self:?}")))
        }
    }

    /// Local order; both values must belong to this kind.
    pub fn le(self, a: &LocalValue, b: &LocalValue) -> bool {
        a <= b
    }

    /// Short DSL label, `W3`, `Wo2`, `Z`, `U`, `T`; `designated` selects the
    /// bottom-designated spelling.
    pub fn label(self, designated: bool) -> String {
        match (self, designated) {
            (ComponentKind::FinLuk(k), false) => format!("W{k}"),
            (ComponentKind::FinLuk(k), true) => format!("L{k}"),
            (ComponentKind::LexOmega(k), false) => format!("Wo{k}"),
            (ComponentKind::LexOmega(k), true) => format!("Lo{k}"),
            (ComponentKind::CancellativeZ, _) => "Z".to_string(),
            (ComponentKind::StdUnit, false) => "U".to_string(),
            (ComponentKind::StdUnit, true) => "UM".to_string(),
            (ComponentKind::Trivial, _) => "T".to_string(),
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label(false))
    }
}

/// A value inside one component, including that component's top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalValue {
    Fin(i64),
    Lex(i64, i64),
    Neg(i64),
    Rat(Rational),
    Unit,
}

impl fmt::Display for LocalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalValue::Fin(i) | LocalValue::Neg(i) => write!(f, "{i}"),
            LocalValue::Lex(a, b) => write!(f, "({a},{b})"),
            LocalValue::Rat(q) => write!(f, "{q}"),
            LocalValue::Unit => f.write_str("1"),
        }
    }
}

impl LocalValue {
    pub fn rat(n: i64, d: i64) -> Self {
        LocalValue::Rat(Rational::new(n, d))
    }

    /// Parses a value for the given kind: `3`, `1,-2`, `(1,-2)`, `2/5`.
    pub fn parse_for(kind: ComponentKind, s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("cannot read {s:?} as a value of {kind:?}"));
        let v = match kind {
            ComponentKind::FinLuk(_) => LocalValue::Fin(s.parse().map_err(|_| bad())?),
            ComponentKind::CancellativeZ => LocalValue::Neg(s.parse().map_err(|_| bad())?),
            ComponentKind::LexOmega(_) => {
                let inner = s.trim_start_matches('(').trim_end_matches(')');
                let (a, b) = inner.split_once(',').ok_or_else(bad)?;
                LocalValue::Lex(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)
            }
            ComponentKind::StdUnit => {
                let q = match s.split_once('/') {
                    Some((n, d)) => {
                        let n: i64 = n.trim().parse().map_err(|_| bad())?;
                        let d: i64 = d.trim().parse().map_err(|_| bad())?;
                        if d == 0 {
                            return Err(bad());
                        }
                        Rational::new(n, d)
                    }
                    None => Rational::from_integer(s.parse().map_err(|_| bad())?),
                };
                LocalValue::Rat(q)
            }
            ComponentKind::Trivial => LocalValue::Unit,
        };
        kind.check_value(&v)?;
        Ok(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Mul,
    Imp,
    Meet,
    Join,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Mul, Op::Imp, Op::Meet, Op::Join];

    pub fn parse(s: &str) -> Result<Op> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mul" | "*" | "." => Ok(Op::Mul),
            "imp" | "->" => Ok(Op::Imp),
            "meet" | "/\\" => Ok(Op::Meet),
            "join" | "\\/" => Ok(Op::Join),
            other => Err(Error::Invalid(format!("unknown operation {other:?}"))),
        }
    }
}

fn lex_max(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    x.max(y)
}

fn lex_min(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
    x.min(y)
}

/// Evaluates one operation inside a single component.
pub fn component_op(kind: ComponentKind, op: Op, a: &LocalValue, b: &LocalValue) -> Result<LocalValue> {
    kind.validate()?;
    kind.check_value(a)?;
    kind.check_value(b)?;
    match op {
        Op::Meet => return Ok(a.min(b).clone()),
        Op::Join => return Ok(a.max(b).clone()),
        _ => {}
    }
    let out = match (kind, a, b) {
        (ComponentKind::FinLuk(k), LocalValue::Fin(x), LocalValue::Fin(y)) => {
            let k = k as i64;
            match op {
                Op::Mul => LocalValue::Fin((x + y - k).max(0)),
                _ => LocalValue::Fin((k - x + y).min(k)),
            }
        }
        (ComponentKind::LexOmega(k), LocalValue::Lex(a1, b1), LocalValue::Lex(a2, b2)) => {
            let k = k as i64;
            let (a, b) = match op {
                Op::Mul => lex_max((a1 + a2 - k, b1 + b2), (0, 0)),
                _ => lex_min((k - a1 + a2, b2 - b1), (k, 0)),
            };
            LocalValue::Lex(a, b)
        }
        (ComponentKind::CancellativeZ, LocalValue::Neg(x), LocalValue::Neg(y)) => match op {
            Op::Mul => LocalValue::Neg(x + y),
            _ => LocalValue::Neg((y - x).min(0)),
        },
        (ComponentKind::StdUnit, LocalValue::Rat(x), LocalValue::Rat(y)) => {
            let zero = Rational::from_integer(0);
            let one = Rational::from_integer(1);
            match op {
                Op::Mul => LocalValue::Rat((x + y - one).max(zero)),
                _ => LocalValue::Rat((one - x + y).min(one)),
            }
        }
        (ComponentKind::Trivial, _, _) => LocalValue::Unit,
        _ => return Err(Error::Internal("value/kind mismatch after validation".into())),
    };
    Ok(out)
}

/// An element of a chain. The shared top is only ever represented as `Top`.
///
/// Variant order makes the derived `Ord` the chain order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    At { comp: usize, val: LocalValue },
    Top,
}

impl Element {
    pub fn at(comp: usize, val: LocalValue) -> Self {
        Element::At { comp, val }
    }

    pub fn comp(&self) -> Option<usize> {
        match self {
            Element::At { comp, .. } => Some(*comp),
            Element::Top => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Top => f.write_str("top"),
            Element::At { comp, val } => write!(f, "{comp}:{val}"),
        }
    }
}

/// Truncation bounds for enumerating symbolic components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Second coordinates of `W_{k,ω}` and values of `Z` range over `[-window, window]`.
    pub window: i64,
    /// Largest denominator for rational elements of the unit interval.
    pub denom: i64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { window: 3, denom: 4 }
    }
}

impl Caps {
    pub fn new(window: i64, denom: i64) -> Self {
        Caps { window: window.max(1), denom: denom.max(1) }
    }
}

/// A totally ordered basic hoop or BL-algebra given as an ordinal sum.
///
/// Trivial summands are absorbed on construction, so the trivial chain has
/// an empty component list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    components: Vec<ComponentKind>,
    bottom_designated: bool,
}

impl Chain {
    pub fn new(components: Vec<ComponentKind>, bottom_designated: bool) -> Result<Self> {
        let mut kept = Vec::with_capacity(components.len());
        for k in components {
            let k = k.validate()?;
            if !k.is_trivial() {
                kept.push(k);
            }
        }
        if bottom_designated {
            if let Some(first) = kept.first() {
                if !first.is_bounded() {
                    return Err(Error::Invalid(format!("{first:?} cannot be the first summand of a BL-chain")));
                }
            }
        }
        Ok(Chain { components: kept, bottom_designated })
    }

    pub fn hoop(components: Vec<ComponentKind>) -> Result<Self> {
        Chain::new(components, false)
    }

    pub fn bl(components: Vec<ComponentKind>) -> Result<Self> {
        Chain::new(components, true)
    }

    pub fn trivial(bottom_designated: bool) -> Self {
        Chain { components: Vec::new(), bottom_designated }
    }

    pub fn components(&self) -> &[ComponentKind] {
        &self.components
    }

    pub fn bottom_designated(&self) -> bool {
        self.bottom_designated
    }

    /// Number of non-trivial components.
    pub fn index(&self) -> usize {
        self.components.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.components.iter().all(|k| k.is_finite())
    }

    /// Cardinality for fully finite chains.
    pub fn size(&self) -> Option<usize> {
        let mut n = 1;
        for k in &self.components {
            n += k.size()? - 1;
        }
        Some(n)
    }

    /// Same components with the other mode flag. Fails when the first
    /// component cannot start a BL-chain.
    pub fn with_mode(&self, bottom_designated: bool) -> Result<Self> {
        Chain::new(self.components.clone(), bottom_designated)
    }

    pub fn check_element(&self, x: &Element) -> Result<()> {
        match x {
            Element::Top => Ok(()),
            Element::At { comp, val } => {
                let kind = self.components.get(*comp).ok_or_else(|| {
                    Error::Mismatch(format!("component {comp} does not exist in a chain of index {}", self.index()))
                })?;
                kind.check_value(val)?;
                if *val == kind.top() {
                    return Err(Error::Mismatch(format!("{x}: local tops are represented by the shared top")));
                }
                Ok(())
            }
        }
    }

    /// Builds an element, mapping a local top to the shared top.
    pub fn element(&self, comp: usize, val: LocalValue) -> Result<Element> {
        let kind = *self.components.get(comp).ok_or_else(|| Error::Mismatch(format!("no component {comp}")))?;
        kind.check_value(&val)?;
        Ok(if val == kind.top() { Element::Top } else { Element::At { comp, val } })
    }

    fn lift(&self, comp: usize, val: LocalValue) -> Element {
        if val == self.components[comp].top() {
            Element::Top
        } else {
            Element::At { comp, val }
        }
    }

    pub fn op(&self, op: Op, x: &Element, y: &Element) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.op_unchecked(op, x, y))
    }

    /// Operation on elements already known to belong to the chain.
    pub fn op_unchecked(&self, op: Op, x: &Element, y: &Element) -> Element {
        match op {
            Op::Meet => return x.min(y).clone(),
            Op::Join => return x.max(y).clone(),
            _ => {}
        }
        match (x, y) {
            (Element::Top, _) => y.clone(),
            (_, Element::Top) => match op {
                Op::Mul => x.clone(),
                _ => Element::Top,
            },
            (Element::At { comp: i, val: a }, Element::At { comp: j, val: b }) => match i.cmp(j) {
                Ordering::Equal => {
                    let kind = self.components[*i];
                    let v = component_op(kind, op, a, b).expect("validated operands");
                    self.lift(*i, v)
                }
                Ordering::Less => match op {
                    Op::Mul => x.clone(),
                    _ => Element::Top,
                },
                Ordering::Greater => y.clone(),
            },
        }
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.op(Op::Mul, x, y)
    }

    pub fn imp(&self, x: &Element, y: &Element) -> Result<Element> {
        self.op(Op::Imp, x, y)
    }

    pub fn le(&self, x: &Element, y: &Element) -> Result<bool> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(x <= y)
    }

    /// `x^n` with `x^0 = top`.
    pub fn power(&self, x: &Element, n: usize) -> Element {
        let mut acc = Element::Top;
        for _ in 0..n {
            acc = self.op_unchecked(Op::Mul, &acc, x);
        }
        acc
    }

    /// The least element, if the first component has one.
    pub fn least(&self) -> Option<Element> {
        match self.components.first() {
            None => Some(Element::Top),
            Some(k) => k.bottom().map(|v| Element::At { comp: 0, val: v }),
        }
    }

    /// The designated constant 0 of a BL-chain.
    pub fn zero(&self) -> Option<Element> {
        if self.bottom_designated {
            self.least()
        } else {
            None
        }
    }

    /// All elements of a fully finite chain, ascending.
    pub fn elements_finite(&self) -> Result<Vec<Element>> {
        if let Some(k) = self.components.iter().find(|k| !k.is_finite()) {
            return Err(Error::Symbolic(format!("{k:?}")));
        }
        Ok(enumerate_elements(self, Caps::default()))
    }

    pub fn elements(&self, caps: Caps) -> Vec<Element> {
        enumerate_elements(self, caps)
    }

    /// Reads `top` or `comp:value`.
    pub fn parse_element(&self, s: &str) -> Result<Element> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("top") || s == "1" && self.is_trivial() {
            return Ok(Element::Top);
        }
        let (c, v) =
            s.split_once(':').ok_or_else(|| Error::Invalid(format!("expected top or comp:value, got {s:?}")))?;
        let comp: usize = c.trim().parse().map_err(|_| Error::Invalid(format!("bad component index {c:?}")))?;
        let kind = *self.components.get(comp).ok_or_else(|| Error::Mismatch(format!("no component {comp}")))?;
        let val = LocalValue::parse_for(kind, v)?;
        self.element(comp, val)
    }
}

fn local_window(kind: ComponentKind, caps: Caps) -> Vec<LocalValue> {
    let top = kind.top();
    let mut out: Vec<LocalValue> = match kind {
        ComponentKind::FinLuk(k) => (0..k as i64).map(LocalValue::Fin).collect(),
        ComponentKind::LexOmega(k) => {
            let k = k as i64;
            let mut v = Vec::new();
            for a in 0..=k {
                for b in -caps.window..=caps.window {
                    let x = LocalValue::Lex(a, b);
                    if kind.check_value(&x).is_ok() && x != top {
                        v.push(x);
                    }
                }
            }
            v
        }
        ComponentKind::CancellativeZ => (-caps.window..0).map(LocalValue::Neg).collect(),
        ComponentKind::StdUnit => {
            let mut set = BTreeSet::new();
            for d in 1..=caps.denom {
                for n in 0..d {
                    set.insert(Rational::new(n, d));
                }
            }
            set.into_iter().map(LocalValue::Rat).collect()
        }
        ComponentKind::Trivial => Vec::new(),
    };
    out.sort();
    out
}

/// Ascending element list; complete for finite chains, a truncation window
/// otherwise. Always ends with `Top`.
pub fn enumerate_elements(c: &Chain, caps: Caps) -> Vec<Element> {
    let mut out = Vec::new();
    for (i, k) in c.components.iter().enumerate() {
        for v in local_window(*k, caps) {
            out.push(Element::At { comp: i, val: v });
        }
    }
    out.push(Element::Top);
    out
}

/// Free-function form of [`Chain::op`].
pub fn chain_op(c: &Chain, op: Op, x: &Element, y: &Element) -> Result<Element> {
    c.op(op, x, y)
}

/// Free-function form of [`Chain::le`].
pub fn order_le(c: &Chain, x: &Element, y: &Element) -> Result<bool> {
    c.le(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ComponentKind::*;

    fn fin(i: i64) -> LocalValue {
        LocalValue::Fin(i)
    }

    #[test]
    fn finite_lukasiewicz_product() {
        assert_eq!(component_op(FinLuk(2), Op::Mul, &fin(1), &fin(1)).unwrap(), fin(0));
        assert_eq!(component_op(FinLuk(3), Op::Imp, &fin(2), &fin(1)).unwrap(), fin(2));
    }

    #[test]
    fn top_is_unit_for_every_kind() {
        let samples = [
            (FinLuk(3), fin(2)),
            (LexOmega(2), LocalValue::Lex(1, 4)),
            (CancellativeZ, LocalValue::Neg(-7)),
            (StdUnit, LocalValue::rat(2, 3)),
        ];
        for (k, a) in samples {
            assert_eq!(component_op(k, Op::Mul, &a, &k.top()).unwrap(), a);
        }
    }

    #[test]
    fn lex_omega_product() {
        let r = component_op(LexOmega(1), Op::Mul, &LocalValue::Lex(0, 2), &LocalValue::Lex(1, -1)).unwrap();
        assert_eq!(r, LocalValue::Lex(0, 1));
    }

    #[test]
    fn cancellative_residual() {
        let r = component_op(CancellativeZ, Op::Imp, &LocalValue::Neg(-1), &LocalValue::Neg(-3)).unwrap();
        assert_eq!(r, LocalValue::Neg(-2));
    }

    #[test]
    fn out_of_range_values_are_rejected() {
        assert!(component_op(FinLuk(2), Op::Mul, &fin(3), &fin(0)).is_err());
        assert!(component_op(LexOmega(2), Op::Mul, &LocalValue::Lex(0, -1), &LocalValue::Lex(2, 0)).is_err());
        assert!(component_op(CancellativeZ, Op::Mul, &LocalValue::Neg(1), &LocalValue::Neg(0)).is_err());
        assert!(component_op(StdUnit, Op::Mul, &LocalValue::rat(3, 2), &LocalValue::rat(1, 2)).is_err());
    }

    #[test]
    fn cross_component_product_is_lower_argument() {
        let c = Chain::hoop(vec![FinLuk(1), FinLuk(1)]).unwrap();
        let x = Element::at(0, fin(0));
        let y = Element::at(1, fin(0));
        assert_eq!(c.mul(&x, &y).unwrap(), x);
        assert_eq!(c.imp(&x, &y).unwrap(), Element::Top);
        assert_eq!(c.imp(&y, &x).unwrap(), x);
    }

    #[test]
    fn cross_component_residual_to_lower() {
        let c = Chain::bl(vec![FinLuk(2), CancellativeZ]).unwrap();
        let x = Element::at(1, LocalValue::Neg(-3));
        let y = Element::at(0, fin(1));
        assert_eq!(c.imp(&x, &y).unwrap(), y);
    }

    #[test]
    fn reflexive_residual() {
        let c = Chain::hoop(vec![LexOmega(2), CancellativeZ]).unwrap();
        for x in c.elements(Caps::new(2, 2)) {
            assert_eq!(c.imp(&x, &x).unwrap(), Element::Top);
        }
    }

    #[test]
    fn order_is_component_then_local() {
        let c = Chain::hoop(vec![LexOmega(1), FinLuk(1)]).unwrap();
        let a = Element::at(0, LocalValue::Lex(0, 5));
        let b = Element::at(0, LocalValue::Lex(1, -9));
        assert!(c.le(&a, &b).unwrap());
        assert!(c.le(&b, &Element::at(1, fin(0))).unwrap());
        assert!(c.le(&Element::at(1, fin(0)), &Element::Top).unwrap());
    }

    #[test]
    fn enumeration_windows() {
        assert_eq!(Chain::hoop(vec![FinLuk(2)]).unwrap().elements(Caps::new(9, 9)).len(), 3);
        assert_eq!(Chain::trivial(false).elements(Caps::default()), vec![Element::Top]);
        let z = Chain::hoop(vec![CancellativeZ]).unwrap().elements(Caps::new(2, 1));
        assert_eq!(z, vec![Element::at(0, LocalValue::Neg(-2)), Element::at(0, LocalValue::Neg(-1)), Element::Top]);
    }

    #[test]
    fn mismatched_elements_are_errors() {
        let c = Chain::hoop(vec![FinLuk(2)]).unwrap();
        assert!(c.mul(&Element::at(1, fin(0)), &Element::Top).is_err());
        assert!(c.mul(&Element::at(0, fin(2)), &Element::Top).is_err());
        assert!(c.mul(&Element::at(0, LocalValue::Neg(0)), &Element::Top).is_err());
    }

    #[test]
    fn bl_chain_must_start_bounded() {
        assert!(Chain::bl(vec![CancellativeZ]).is_err());
        assert!(Chain::hoop(vec![FinLuk(0)]).is_err());
        let c = Chain::hoop(vec![Trivial, FinLuk(1), Trivial]).unwrap();
        assert_eq!(c.components(), &[FinLuk(1)]);
    }

    #[test]
    fn parse_elements() {
        let c = Chain::bl(vec![StdUnit, LexOmega(2)]).unwrap();
        assert_eq!(c.parse_element("0:1/3").unwrap(), Element::at(0, LocalValue::rat(1, 3)));
        assert_eq!(c.parse_element("1:(2,-1)").unwrap(), Element::at(1, LocalValue::Lex(2, -1)));
        assert_eq!(c.parse_element("1:2,0").unwrap(), Element::Top);
        assert!(c.parse_element("2:0").is_err());
    }
}
