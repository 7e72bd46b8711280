//! Embeddings between chains, filters, quotients and essential extensions.

use serde::Serialize;
use serde_json::json;

use crate::algebra::{Caps, Chain, ComponentKind, Element, LocalValue, Op, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_SCALE_BOUND: u32 = 4;

/// An injective homomorphism between two components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum LocalMap {
    /// `W_k → W_n`, `i ↦ i·mult`.
    FinToFin {
        mult: u32,
    },
    /// `W_k → W_{n,ω}`, `i ↦ (i·mult, 0)`.
    FinToLex {
        mult: u32,
    },
    /// `W_k → [0,1]`, `i ↦ i/k`.
    FinToUnit {
        k: u32,
    },
    /// `Z → Z`, `b ↦ scale·b`.
    ZToZ {
        scale: u32,
    },
    /// `Z → W_{n,ω}`, `b ↦ (n, scale·b)`.
    ZToLex {
        n: u32,
        scale: u32,
    },
    /// `W_{k,ω} → W_{n,ω}`, `(a,b) ↦ (a·mult, scale·b)`.
    LexToLex {
        mult: u32,
        scale: u32,
    },
    UnitToUnit,
}

impl LocalMap {
    pub fn apply(&self, v: &LocalValue) -> LocalValue {
        match (self, v) {
            (LocalMap::FinToFin { mult }, LocalValue::Fin(i)) => LocalValue::Fin(i * *mult as i64),
            (LocalMap::FinToLex { mult }, LocalValue::Fin(i)) => LocalValue::Lex(i * *mult as i64, 0),
            (LocalMap::FinToUnit { k }, LocalValue::Fin(i)) => LocalValue::Rat(Rational::new(*i, *k as i64)),
            (LocalMap::ZToZ { scale }, LocalValue::Neg(b)) => LocalValue::Neg(b * *scale as i64),
            (LocalMap::ZToLex { n, scale }, LocalValue::Neg(b)) => LocalValue::Lex(*n as i64, b * *scale as i64),
            (LocalMap::LexToLex { mult, scale }, LocalValue::Lex(a, b)) => {
                LocalValue::Lex(a * *mult as i64, b * *scale as i64)
            }
            (LocalMap::UnitToUnit, v) => v.clone(),
            (m, v) => panic!("local map {m:?} applied to foreign value {v}"),
        }
    }

    /// Scale on the cancellative part, if the map has one.
    pub fn scale(&self) -> Option<u32> {
        match self {
            LocalMap::ZToZ { scale } | LocalMap::ZToLex { scale, .. } | LocalMap::LexToLex { scale, .. } => {
                Some(*scale)
            }
            _ => None,
        }
    }

    /// Whether the image meets the radical of a `W_{n,ω}` target below its top.
    pub fn meets_radical(&self) -> bool {
        matches!(self, LocalMap::ZToLex { .. } | LocalMap::LexToLex { .. })
    }
}

fn divides(k: u32, n: u32) -> Option<u32> {
    n.is_multiple_of(k).then_some(n / k)
}

/// All local embeddings `src → tgt`, scales `1..=scale_bound`.
pub fn local_embeddings(src: ComponentKind, tgt: ComponentKind, scale_bound: u32) -> Vec<LocalMap> {
    use ComponentKind::*;
    let scales = 1..=scale_bound;
    match (src, tgt) {
        (FinLuk(k), FinLuk(n)) => divides(k, n).map(|m| LocalMap::FinToFin { mult: m }).into_iter().collect(),
        (FinLuk(k), LexOmega(n)) => divides(k, n).map(|m| LocalMap::FinToLex { mult: m }).into_iter().collect(),
        (FinLuk(k), StdUnit) => vec![LocalMap::FinToUnit { k }],
        (CancellativeZ, CancellativeZ) => scales.map(|s| LocalMap::ZToZ { scale: s }).collect(),
        (CancellativeZ, LexOmega(n)) => scales.map(|s| LocalMap::ZToLex { n, scale: s }).collect(),
        (LexOmega(k), LexOmega(n)) => match divides(k, n) {
            Some(m) => scales.map(|s| LocalMap::LexToLex { mult: m, scale: s }).collect(),
            None => Vec::new(),
        },
        (StdUnit, StdUnit) => vec![LocalMap::UnitToUnit],
        _ => Vec::new(),
    }
}

/// An embedding of chains: an order-embedding of component positions
/// together with one local embedding per source component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainMap {
    pub source: Chain,
    pub target: Chain,
    pub index_map: Vec<usize>,
    pub component_maps: Vec<LocalMap>,
}

impl ChainMap {
    pub fn identity(c: &Chain) -> ChainMap {
        let component_maps = c
            .components()
            .iter()
            .map(|k| match *k {
                ComponentKind::FinLuk(_) => LocalMap::FinToFin { mult: 1 },
                ComponentKind::LexOmega(_) => LocalMap::LexToLex { mult: 1, scale: 1 },
                ComponentKind::CancellativeZ => LocalMap::ZToZ { scale: 1 },
                _ => LocalMap::UnitToUnit,
            })
            .collect();
        ChainMap { source: c.clone(), target: c.clone(), index_map: (0..c.index()).collect(), component_maps }
    }

    pub fn apply(&self, x: &Element) -> Element {
        match x {
            Element::Top => Element::Top,
            Element::At { comp, val } => {
                Element::At { comp: self.index_map[*comp], val: self.component_maps[*comp].apply(val) }
            }
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        if self.target != other.source {
            return Err(Error::Mismatch("composition of maps with different middle chains".into()));
        }
        let mut index_map = Vec::new();
        let mut component_maps = Vec::new();
        for (i, &t) in self.index_map.iter().enumerate() {
            index_map.push(other.index_map[t]);
            component_maps.push(compose_local(self.component_maps[i], other.component_maps[t])?);
        }
        Ok(ChainMap { source: self.source.clone(), target: other.target.clone(), index_map, component_maps })
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "source": crate::dsl::pretty_chain(&self.source),
            "target": crate::dsl::pretty_chain(&self.target),
            "index_map": self.index_map.iter().enumerate().map(|(s, d)| [s, *d]).collect::<Vec<_>>(),
            "component_maps": self.component_maps,
            "embedding": true,
        })
    }
}

fn compose_local(f: LocalMap, g: LocalMap) -> Result<LocalMap> {
    use LocalMap::*;
    Ok(match (f, g) {
        (FinToFin { mult: a }, FinToFin { mult: b }) => FinToFin { mult: a * b },
        (FinToFin { mult: a }, FinToLex { mult: b }) => FinToLex { mult: a * b },
        (FinToFin { mult: a }, FinToUnit { k }) => FinToUnit { k: k / a },
        (FinToLex { mult: a }, LexToLex { mult: b, .. }) => FinToLex { mult: a * b },
        (ZToZ { scale: a }, ZToZ { scale: b }) => ZToZ { scale: a * b },
        (ZToZ { scale: a }, ZToLex { n, scale: b }) => ZToLex { n, scale: a * b },
        (ZToLex { n, scale: a }, LexToLex { mult, scale: b }) => ZToLex { n: n * mult, scale: a * b },
        (LexToLex { mult: a, scale: s }, LexToLex { mult: b, scale: t }) => LexToLex { mult: a * b, scale: s * t },
        (UnitToUnit, UnitToUnit) => UnitToUnit,
        (FinToUnit { k }, UnitToUnit) => FinToUnit { k },
        (f, g) => return Err(Error::Mismatch(format!("cannot compose {f:?} with {g:?}"))),
    })
}

fn increasing_maps(k: usize, n: usize, pin_first: bool) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for t in start..n {
            if n - t < k - cur.len() {
                break;
            }
            cur.push(t);
            rec(t + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        return vec![Vec::new()];
    }
    if k > n {
        return out;
    }
    if pin_first {
        let mut cur = vec![0];
        rec(1, k, n, &mut cur, &mut out);
    } else {
        rec(0, k, n, &mut Vec::new(), &mut out);
    }
    out
}

fn needs_scale(a: &Chain, b: &Chain) -> bool {
    let src = a.components().iter().any(|k| matches!(k, ComponentKind::CancellativeZ | ComponentKind::LexOmega(_)));
    let tgt = b.components().iter().any(|k| matches!(k, ComponentKind::CancellativeZ | ComponentKind::LexOmega(_)));
    src && tgt
}

/// Every embedding `a → b`, sorted by index map and then by local maps.
/// Cancellative parts are enumerated up to the scale bound.
pub fn enumerate_embeddings(a: &Chain, b: &Chain, scale_bound: Option<u32>) -> Result<Vec<ChainMap>> {
    let bound = match scale_bound {
        Some(s) if s >= 1 => s,
        _ if !needs_scale(a, b) => 1,
        _ => return Err(Error::Invalid("a scale bound is required for cancellative components".into())),
    };
    if a.is_trivial() {
        if a.bottom_designated() && b.bottom_designated() && !b.is_trivial() {
            return Ok(Vec::new());
        }
        return Ok(vec![ChainMap {
            source: a.clone(),
            target: b.clone(),
            index_map: Vec::new(),
            component_maps: Vec::new(),
        }]);
    }
    if a.bottom_designated() != b.bottom_designated() {
        return Err(Error::Mismatch("embeddings need chains of the same signature".into()));
    }
    let mut out = Vec::new();
    for idx in increasing_maps(a.index(), b.index(), a.bottom_designated()) {
        let options: Vec<Vec<LocalMap>> =
            a.components().iter().zip(&idx).map(|(s, &t)| local_embeddings(*s, b.components()[t], bound)).collect();
        for maps in cartesian(&options) {
            out.push(ChainMap { source: a.clone(), target: b.clone(), index_map: idx.clone(), component_maps: maps });
        }
    }
    Ok(out)
}

pub(crate) fn cartesian<T: Clone>(options: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut acc: Vec<Vec<T>> = vec![Vec::new()];
    for opts in options {
        let mut next = Vec::with_capacity(acc.len() * opts.len());
        for prefix in &acc {
            for o in opts {
                let mut v = prefix.clone();
                v.push(o.clone());
                next.push(v);
            }
        }
        acc = next;
    }
    acc
}

/// Checks injectivity and preservation of all operations (and 0) on a
/// window of the source.
pub fn verify_embedding(m: &ChainMap, caps: Caps) -> Result<()> {
    let elems = m.source.elements(caps);
    let img: Vec<Element> = elems.iter().map(|x| m.apply(x)).collect();
    for (x, fx) in elems.iter().zip(&img) {
        m.target.check_element(fx)?;
        for (y, fy) in elems.iter().zip(&img) {
            if (x == y) != (fx == fy) {
                return Err(Error::Invalid(format!("not injective at {x}, {y}")));
            }
            for op in Op::ALL {
                let lhs = m.apply(&m.source.op_unchecked(op, x, y));
                let rhs = m.target.op_unchecked(op, fx, fy);
                if lhs != rhs {
                    return Err(Error::Invalid(format!("{op:?} not preserved at {x}, {y}")));
                }
            }
        }
    }
    if m.source.bottom_designated() && m.target.bottom_designated() {
        if let (Some(z), Some(w)) = (m.source.zero(), m.target.zero()) {
            if m.apply(&z) != w {
                return Err(Error::Invalid("0 not preserved".into()));
            }
        }
    }
    Ok(())
}

/// A deductive filter of a structural chain. `cut` is the first component
/// that is (at least partly) inside; with `radical_only` only the radical
/// of that component is inside. `cut == index` is the filter `{top}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Filter {
    pub cut: usize,
    pub radical_only: bool,
}

impl Filter {
    pub fn top_only(c: &Chain) -> Filter {
        Filter { cut: c.index(), radical_only: false }
    }

    pub fn is_top_only(&self, c: &Chain) -> bool {
        self.cut >= c.index()
    }

    pub fn validate(&self, c: &Chain) -> Result<()> {
        if self.cut > c.index() || (self.cut == c.index() && self.radical_only) {
            return Err(Error::Invalid(format!("{self:?} is not a filter of an index-{} chain", c.index())));
        }
        if self.radical_only && !matches!(c.components()[self.cut], ComponentKind::LexOmega(_)) {
            return Err(Error::Invalid("radical filters only exist on W_{k,ω} components".into()));
        }
        Ok(())
    }

    pub fn contains(&self, c: &Chain, x: &Element) -> bool {
        match x {
            Element::Top => true,
            Element::At { comp, val } => {
                *comp > self.cut
                    || (*comp == self.cut
                        && (!self.radical_only
                            || matches!((c.components()[*comp], val),
                                (ComponentKind::LexOmega(k), LocalValue::Lex(a, _)) if *a == k as i64)))
            }
        }
    }

    /// Image of an element in the quotient chain.
    pub fn project(&self, c: &Chain, x: &Element) -> Element {
        if self.contains(c, x) {
            return Element::Top;
        }
        match x {
            Element::At { comp, val: LocalValue::Lex(a, _) } if *comp == self.cut => {
                Element::At { comp: *comp, val: LocalValue::Fin(*a) }
            }
            other => other.clone(),
        }
    }
}

/// The filters of a chain, ascending by inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterChain {
    pub filters: Vec<Filter>,
}

impl FilterChain {
    /// Least filter other than `{top}`.
    pub fn smallest_nontrivial(&self) -> Option<Filter> {
        self.filters.get(1).copied()
    }
}

pub fn filters(c: &Chain) -> FilterChain {
    let mut out = vec![Filter::top_only(c)];
    for i in (0..c.index()).rev() {
        if matches!(c.components()[i], ComponentKind::LexOmega(_)) {
            out.push(Filter { cut: i, radical_only: true });
        }
        out.push(Filter { cut: i, radical_only: false });
    }
    FilterChain { filters: out }
}

pub fn quotient_by_filter(c: &Chain, f: &Filter) -> Result<Chain> {
    f.validate(c)?;
    let mut comps = c.components()[..f.cut.min(c.index())].to_vec();
    if f.radical_only {
        if let ComponentKind::LexOmega(k) = c.components()[f.cut] {
            comps.push(ComponentKind::FinLuk(k));
        }
    }
    Chain::new(comps, c.bottom_designated())
}

/// A homomorphism factored as a quotient followed by an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    pub filter: Filter,
    pub embedding: ChainMap,
}

impl Homomorphism {
    pub fn apply(&self, domain: &Chain, x: &Element) -> Element {
        self.embedding.apply(&self.filter.project(domain, x))
    }
}

fn image_meets(m: &ChainMap, f: &Filter) -> bool {
    m.index_map
        .iter()
        .zip(&m.component_maps)
        .any(|(&t, lm)| t > f.cut || (t == f.cut && (!f.radical_only || lm.meets_radical())))
}

/// Structural test: the last source component lands in the last target
/// component, and inside the radical when that component is `W_{n,ω}`.
pub fn is_essential_embedding(m: &ChainMap) -> bool {
    match filters(&m.target).smallest_nontrivial() {
        None => true,
        Some(f) => image_meets(m, &f),
    }
}

/// Definition-level test on a window: some `x < y` in the image has
/// `y → x` in the least non-trivial filter of the target.
pub fn is_essential_by_filters(m: &ChainMap, caps: Caps) -> bool {
    let Some(fmin) = filters(&m.target).smallest_nontrivial() else {
        return true;
    };
    let img: Vec<Element> = m.source.elements(caps).iter().map(|x| m.apply(x)).collect();
    img.iter().any(|x| img.iter().any(|y| x < y && fmin.contains(&m.target, &m.target.op_unchecked(Op::Imp, y, x))))
}

/// The largest filter whose congruence is trivial on the image, and the
/// induced embedding into the quotient.
pub fn essentialize(m: &ChainMap) -> Result<(Filter, ChainMap)> {
    let fc = filters(&m.target);
    let theta = *fc
        .filters
        .iter()
        .rev()
        .find(|f| !image_meets(m, f))
        .expect("the filter {top} never meets the image below the top");
    let quotient = quotient_by_filter(&m.target, &theta)?;
    let component_maps = m
        .index_map
        .iter()
        .zip(&m.component_maps)
        .map(|(&t, lm)| match lm {
            LocalMap::FinToLex { mult } if t == theta.cut && theta.radical_only => LocalMap::FinToFin { mult: *mult },
            other => *other,
        })
        .collect();
    let q = ChainMap { source: m.source.clone(), target: quotient, index_map: m.index_map.clone(), component_maps };
    debug_assert!(is_essential_embedding(&q));
    Ok((theta, q))
}
