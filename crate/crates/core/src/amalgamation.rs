//! Spans, amalgams, brute-force amalgam search and the componentwise
//! construction.

use num_integer::Integer;
use serde_json::json;

use crate::algebra::{Caps, Chain, ComponentKind, Element, Op};
use crate::dsl::pretty_chain;
use crate::error::{Error, Result};
use crate::morphisms::{
    cartesian, enumerate_embeddings, essentialize, is_essential_embedding, verify_embedding, ChainMap, Filter,
    Homomorphism, LocalMap, DEFAULT_SCALE_BOUND,
};
use crate::varieties::{component_member, member, ClassExpr};

/// Two embeddings out of a common apex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub apex: Chain,
    pub left: ChainMap,
    pub right: ChainMap,
}

impl Span {
    pub fn new(left: ChainMap, right: ChainMap) -> Result<Span> {
        if left.source != right.source {
            return Err(Error::Mismatch("the two legs of a span need the same source".into()));
        }
        verify_embedding(&left, Caps::default())?;
        verify_embedding(&right, Caps::default())?;
        Ok(Span { apex: left.source.clone(), left, right })
    }

    /// Picks the legs by position in the deterministic embedding lists.
    pub fn from_indices(apex: &Chain, b: &Chain, c: &Chain, left: usize, right: usize) -> Result<Span> {
        let pick = |target: &Chain, i: usize| -> Result<ChainMap> {
            let all = enumerate_embeddings(apex, target, Some(DEFAULT_SCALE_BOUND))?;
            let n = all.len();
            all.into_iter().nth(i).ok_or_else(|| {
                Error::Invalid(format!(
                    "embedding index {i} out of range: {n} embeddings {} -> {}",
                    pretty_chain(apex),
                    pretty_chain(target)
                ))
            })
        };
        Span::new(pick(b, left)?, pick(c, right)?)
    }

    /// The identity span on a chain.
    pub fn identity(a: &Chain) -> Span {
        Span { apex: a.clone(), left: ChainMap::identity(a), right: ChainMap::identity(a) }
    }

    pub fn left_target(&self) -> &Chain {
        &self.left.target
    }

    pub fn right_target(&self) -> &Chain {
        &self.right.target
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "apex": pretty_chain(&self.apex),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "essential": is_essential_span(self),
        })
    }
}

pub fn is_essential_span(s: &Span) -> bool {
    is_essential_embedding(&s.right)
}

/// A target chain with completions of both legs. The right completion is
/// an embedding precomposed with a quotient; the quotient is `{top}`
/// unless the amalgam is one-sided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Amalgam {
    pub target: Chain,
    pub left_completion: ChainMap,
    pub right_completion: Homomorphism,
    pub one_sided: bool,
}

impl Amalgam {
    fn full(left: ChainMap, right: ChainMap) -> Amalgam {
        let filter = Filter::top_only(&right.source);
        Amalgam {
            target: left.target.clone(),
            left_completion: left,
            right_completion: Homomorphism { filter, embedding: right },
            one_sided: false,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "target": pretty_chain(&self.target),
            "left_completion": self.left_completion.to_json(),
            "right_completion": {
                "filter": self.right_completion.filter,
                "embedding": self.right_completion.embedding.to_json(),
            },
            "one_sided": self.one_sided,
        })
    }
}

/// Checks that the completions are morphisms and that the square commutes
/// on a window of the apex.
pub fn verify_amalgam(s: &Span, a: &Amalgam, caps: Caps) -> Result<()> {
    verify_embedding(&a.left_completion, caps)?;
    verify_embedding(&a.right_completion.embedding, caps)?;
    let c = s.right_target();
    let elems = c.elements(caps);
    for x in &elems {
        for y in &elems {
            for op in Op::ALL {
                let lhs = a.right_completion.apply(c, &c.op_unchecked(op, x, y));
                let rhs = a.target.op_unchecked(op, &a.right_completion.apply(c, x), &a.right_completion.apply(c, y));
                if lhs != rhs {
                    return Err(Error::Invalid(format!("right completion does not preserve {op:?} at {x}, {y}")));
                }
            }
        }
    }
    if !a.one_sided && !a.right_completion.filter.is_top_only(c) {
        return Err(Error::Invalid("full amalgam with a non-injective right completion".into()));
    }
    if !commutes(s, &a.left_completion, &a.right_completion, caps) {
        return Err(Error::Invalid("the amalgamation square does not commute".into()));
    }
    Ok(())
}

fn commutes(s: &Span, left: &ChainMap, right: &Homomorphism, caps: Caps) -> bool {
    s.apex.elements(caps).iter().all(|x| {
        let via_b: Element = left.apply(&s.left.apply(x));
        let via_c: Element = right.apply(&s.right.target, &s.right.apply(x));
        via_b == via_c
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Bounds {
    pub max_index: usize,
    pub max_k: u32,
    pub scale_cap: u32,
}

impl Bounds {
    pub fn new(max_index: usize, max_k: u32) -> Bounds {
        Bounds { max_index, max_k, scale_cap: DEFAULT_SCALE_BOUND }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Box<Amalgam>),
    /// Nothing commutes among the candidates. `exhaustive` holds when the
    /// candidates cover every member of the universe and no embedding
    /// family was cut off by the scale cap.
    NoneWithinBounds {
        bounds: Bounds,
        exhaustive: bool,
    },
}

impl SearchOutcome {
    pub fn amalgam(&self) -> Option<&Amalgam> {
        match self {
            SearchOutcome::Found(a) => Some(a),
            SearchOutcome::NoneWithinBounds { .. } => None,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            SearchOutcome::Found(a) => a.to_json(),
            SearchOutcome::NoneWithinBounds { bounds, exhaustive } => json!({
                "schema": crate::SCHEMA,
                "result": "none within bounds",
                "bounds": bounds,
                "exhaustive": exhaustive,
            }),
        }
    }
}

fn alphabet(universe: &ClassExpr, max_k: u32) -> Vec<ComponentKind> {
    let atoms = universe.atoms();
    let mut kinds: Vec<ComponentKind> = Vec::new();
    for k in 1..=max_k {
        kinds.push(ComponentKind::FinLuk(k));
        kinds.push(ComponentKind::LexOmega(k));
    }
    kinds.push(ComponentKind::CancellativeZ);
    kinds.push(ComponentKind::StdUnit);
    kinds.retain(|k| atoms.iter().any(|a| component_member(*k, a.kind)));
    kinds.sort();
    kinds
}

/// Candidate targets of a given index, in lexicographic kind order.
fn candidates(alphabet: &[ComponentKind], index: usize, bl: bool) -> Vec<Chain> {
    if index == 0 {
        return vec![Chain::trivial(bl)];
    }
    let options = vec![alphabet.to_vec(); index];
    cartesian(&options).into_iter().filter_map(|v| Chain::new(v, bl).ok()).filter(|c| c.index() == index).collect()
}

fn is_exhaustive(universe: &ClassExpr, bounds: &Bounds) -> bool {
    let params_ok = universe.atoms().iter().all(|a| match a.kind {
        ComponentKind::StdUnit => false,
        k => k.param().is_none_or(|p| p <= bounds.max_k),
    });
    let len_ok = universe.sums.iter().all(|s| s.items.len() <= bounds.max_index);
    !universe.has_star() && params_ok && len_ok
}

/// Exhaustive search over targets in the universe up to the bounds, in
/// order of index, then component kinds, then embedding choices.
pub fn find_amalgam_bruteforce(s: &Span, universe: &ClassExpr, bounds: Bounds) -> Result<SearchOutcome> {
    if bounds.max_k == 0 || bounds.scale_cap == 0 {
        return Err(Error::Invalid("bounds must be positive".into()));
    }
    universe.validate()?;
    let bl = s.apex.bottom_designated();
    let caps = Caps::default();
    let alpha = alphabet(universe, bounds.max_k);
    let mut truncated = false;
    for index in 0..=bounds.max_index {
        for d in candidates(&alpha, index, bl) {
            if !member(&d, universe)? {
                continue;
            }
            let lefts = enumerate_embeddings(s.left_target(), &d, Some(bounds.scale_cap))?;
            if lefts.is_empty() {
                continue;
            }
            let rights = enumerate_embeddings(s.right_target(), &d, Some(bounds.scale_cap))?;
            truncated |= lefts.iter().chain(&rights).any(|m| m.component_maps.iter().any(|l| l.scale().is_some()));
            for l in &lefts {
                for r in &rights {
                    let h = Homomorphism { filter: Filter::top_only(s.right_target()), embedding: r.clone() };
                    if commutes(s, l, &h, caps) {
                        return Ok(SearchOutcome::Found(Box::new(Amalgam::full(l.clone(), r.clone()))));
                    }
                }
            }
        }
    }
    Ok(SearchOutcome::NoneWithinBounds { bounds, exhaustive: !truncated && is_exhaustive(universe, &bounds) })
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// A target component for a pair of components glued over an apex
/// component (`f`, `g` are the legs) or over nothing (`None`), with the
/// completing local maps.
fn local_amalgam(
    b: ComponentKind,
    c: ComponentKind,
    legs: Option<(LocalMap, LocalMap)>,
) -> Option<(ComponentKind, LocalMap, LocalMap)> {
    use ComponentKind::*;
    use LocalMap::*;
    let (sf, sg) = match legs {
        Some((f, g)) => (f.scale().unwrap_or(1), g.scale().unwrap_or(1)),
        None => (1, 1),
    };
    let gcd = sf.gcd(&sg);
    let (tb, tc) = (sg / gcd, sf / gcd);
    let out = match (b, c) {
        (FinLuk(n1), FinLuk(n2)) => {
            let l = lcm(n1, n2);
            (FinLuk(l), FinToFin { mult: l / n1 }, FinToFin { mult: l / n2 })
        }
        (FinLuk(n1), LexOmega(n2)) => {
            let l = lcm(n1, n2);
            (LexOmega(l), FinToLex { mult: l / n1 }, LexToLex { mult: l / n2, scale: 1 })
        }
        (LexOmega(_), FinLuk(_)) => {
            let (d, g, f) = local_amalgam(c, b, legs.map(|(f, g)| (g, f)))?;
            return Some((d, f, g));
        }
        (LexOmega(n1), LexOmega(n2)) => {
            let l = lcm(n1, n2);
            (LexOmega(l), LexToLex { mult: l / n1, scale: tb }, LexToLex { mult: l / n2, scale: tc })
        }
        (CancellativeZ, CancellativeZ) => (CancellativeZ, ZToZ { scale: tb }, ZToZ { scale: tc }),
        (CancellativeZ, LexOmega(n)) => (LexOmega(n), ZToLex { n, scale: tb }, LexToLex { mult: 1, scale: tc }),
        (LexOmega(_), CancellativeZ) => {
            let (d, g, f) = local_amalgam(c, b, legs.map(|(f, g)| (g, f)))?;
            return Some((d, f, g));
        }
        (CancellativeZ, FinLuk(n)) if legs.is_none() => (LexOmega(n), ZToLex { n, scale: 1 }, FinToLex { mult: 1 }),
        (FinLuk(n), CancellativeZ) if legs.is_none() => (LexOmega(n), FinToLex { mult: 1 }, ZToLex { n, scale: 1 }),
        (FinLuk(n), StdUnit) => (StdUnit, FinToUnit { k: n }, UnitToUnit),
        (StdUnit, FinLuk(n)) => (StdUnit, UnitToUnit, FinToUnit { k: n }),
        (StdUnit, StdUnit) => (StdUnit, UnitToUnit, UnitToUnit),
        _ => return None,
    };
    Some(out)
}

/// One step of a merged gap: a component of B only, of C only, or both
/// glued into one target component.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Step {
    B(usize),
    C(usize),
    Both(usize, usize),
}

fn merges(bs: &[usize], cs: &[usize]) -> Vec<Vec<Step>> {
    fn rec(bs: &[usize], cs: &[usize], cur: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if bs.is_empty() && cs.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let (Some(&b), Some(&c)) = (bs.first(), cs.first()) {
            cur.push(Step::Both(b, c));
            rec(&bs[1..], &cs[1..], cur, out);
            cur.pop();
        }
        if let Some(&b) = bs.first() {
            cur.push(Step::B(b));
            rec(&bs[1..], cs, cur, out);
            cur.pop();
        }
        if let Some(&c) = cs.first() {
            cur.push(Step::C(c));
            rec(bs, &cs[1..], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bs, cs, &mut Vec::new(), &mut out);
    out
}

const MAX_LAYOUTS: usize = 100_000;

/// Componentwise amalgamation: apex components are glued to their images,
/// the components between consecutive images are interleaved (optionally
/// glued pairwise over the trivial algebra), and the first resulting
/// ordinal sum inside the universe is returned.
pub fn amalgamate_constructive(s: &Span, universe: &ClassExpr) -> Result<Amalgam> {
    universe.validate()?;
    let b = s.left_target();
    let c = s.right_target();
    for x in [b, c] {
        if !member(x, universe)? {
            return Err(Error::Invalid(format!("{} is not in {universe}", pretty_chain(x))));
        }
    }
    let bl = s.apex.bottom_designated();
    let m = s.apex.index();
    let mut paired: Vec<(ComponentKind, LocalMap, LocalMap)> = Vec::with_capacity(m);
    for j in 0..m {
        let (bi, ci) = (s.left.index_map[j], s.right.index_map[j]);
        let legs = (s.left.component_maps[j], s.right.component_maps[j]);
        match local_amalgam(b.components()[bi], c.components()[ci], Some(legs)) {
            Some(p) => paired.push(p),
            None => {
                return Err(Error::Unsupported(format!(
                    "no local amalgam for {} and {} over {}",
                    b.components()[bi],
                    c.components()[ci],
                    s.apex.components()[j]
                )))
            }
        }
    }
    let mut gaps: Vec<Vec<Vec<Step>>> = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let lo_b = if j == 0 { 0 } else { s.left.index_map[j - 1] + 1 };
        let lo_c = if j == 0 { 0 } else { s.right.index_map[j - 1] + 1 };
        let hi_b = if j == m { b.index() } else { s.left.index_map[j] };
        let hi_c = if j == m { c.index() } else { s.right.index_map[j] };
        gaps.push(merges(&(lo_b..hi_b).collect::<Vec<_>>(), &(lo_c..hi_c).collect::<Vec<_>>()));
    }
    let total: usize = gaps.iter().map(Vec::len).product();
    if total > MAX_LAYOUTS {
        return Err(Error::Unsupported(format!("{total} layouts exceed the construction limit")));
    }
    let mut layouts = cartesian(&gaps);
    layouts.sort_by_key(|l| l.iter().map(Vec::len).sum::<usize>());
    'layout: for layout in layouts {
        let mut kinds = Vec::new();
        let mut b_idx = vec![0; b.index()];
        let mut c_idx = vec![0; c.index()];
        let mut b_maps = vec![LocalMap::UnitToUnit; b.index()];
        let mut c_maps = vec![LocalMap::UnitToUnit; c.index()];
        for (j, gap) in layout.iter().enumerate() {
            for step in gap {
                let pos = kinds.len();
                match *step {
                    Step::B(i) => {
                        kinds.push(b.components()[i]);
                        b_idx[i] = pos;
                        b_maps[i] = ChainMap::identity(b).component_maps[i];
                    }
                    Step::C(i) => {
                        kinds.push(c.components()[i]);
                        c_idx[i] = pos;
                        c_maps[i] = ChainMap::identity(c).component_maps[i];
                    }
                    Step::Both(bi, ci) => {
                        let Some((d, fb, fc)) = local_amalgam(b.components()[bi], c.components()[ci], None) else {
                            continue 'layout;
                        };
                        kinds.push(d);
                        b_idx[bi] = pos;
                        c_idx[ci] = pos;
                        b_maps[bi] = fb;
                        c_maps[ci] = fc;
                    }
                }
            }
            if j < m {
                let pos = kinds.len();
                let (d, fb, fc) = paired[j];
                kinds.push(d);
                b_idx[s.left.index_map[j]] = pos;
                c_idx[s.right.index_map[j]] = pos;
                b_maps[s.left.index_map[j]] = fb;
                c_maps[s.right.index_map[j]] = fc;
            }
        }
        if bl && (kinds.first().is_none_or(|k| !k.is_bounded())) {
            continue;
        }
        let d = Chain::new(kinds, bl)?;
        if d.index() != layout.iter().map(Vec::len).sum::<usize>() + m || !member(&d, universe)? {
            continue;
        }
        let left = ChainMap { source: b.clone(), target: d.clone(), index_map: b_idx, component_maps: b_maps };
        let right = ChainMap { source: c.clone(), target: d, index_map: c_idx, component_maps: c_maps };
        let a = Amalgam::full(left, right);
        verify_amalgam(s, &a, Caps::default())
            .map_err(|e| Error::Internal(format!("constructed amalgam failed verification: {e}")))?;
        return Ok(a);
    }
    Err(Error::Unsupported(format!("no componentwise amalgam inside {universe}")))
}

/// Amalgamates through the essentialized right leg: the right completion
/// factors through the quotient by the largest filter the right image
/// avoids.
pub fn one_sided_amalgam(s: &Span, universe: &ClassExpr, bounds: Bounds) -> Result<Amalgam> {
    let (theta, q) = essentialize(&s.right)?;
    let essential = Span::new(s.left.clone(), q)?;
    let inner = match amalgamate_constructive(&essential, universe) {
        Ok(a) => a,
        Err(Error::Unsupported(_)) => match find_amalgam_bruteforce(&essential, universe, bounds)? {
            SearchOutcome::Found(a) => *a,
            SearchOutcome::NoneWithinBounds { .. } => {
                return Err(Error::Unsupported("the essential span has no amalgam within bounds".into()))
            }
        },
        Err(e) => return Err(e),
    };
    let a = Amalgam {
        target: inner.target,
        left_completion: inner.left_completion,
        right_completion: Homomorphism { filter: theta, embedding: inner.right_completion.embedding },
        one_sided: !theta.is_top_only(s.right_target()),
    };
    verify_amalgam(s, &a, Caps::default())?;
    Ok(a)
}
