//! Formulas, consequence over finitely generated varieties, and deductive
//! interpolants found in finite function algebras.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::Rng;
use serde_json::json;

use crate::algebra::{Chain, Element, Op};
use crate::classifier::{classify, Verdict};
use crate::dsl::pretty_chain;
use crate::error::{Error, Result};
use crate::raw::RawChain;
use crate::structure::flatten;
use crate::varieties::VarietyInput;

pub const DEFAULT_CLOSURE_LIMIT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    One,
    Zero,
    Not(Box<Formula>),
    Mul(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
    Meet(Box<Formula>, Box<Formula>),
    Join(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.to_string())
    }

    pub fn binary(op: Op, a: Formula, b: Formula) -> Formula {
        let (a, b) = (Box::new(a), Box::new(b));
        match op {
            Op::Mul => Formula::Mul(a, b),
            Op::Imp => Formula::Imp(a, b),
            Op::Meet => Formula::Meet(a, b),
            Op::Join => Formula::Join(a, b),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::One | Formula::Zero => {}
            Formula::Not(a) => a.collect_vars(out),
            Formula::Mul(a, b) | Formula::Imp(a, b) | Formula::Meet(a, b) | Formula::Join(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn uses_zero(&self) -> bool {
        match self {
            Formula::Zero | Formula::Not(_) => true,
            Formula::Var(_) | Formula::One => false,
            Formula::Mul(a, b) | Formula::Imp(a, b) | Formula::Meet(a, b) | Formula::Join(a, b) => {
                a.uses_zero() || b.uses_zero()
            }
        }
    }

    pub fn substitute(&self, x: &str, g: &Formula) -> Formula {
        match self {
            Formula::Var(v) if v == x => g.clone(),
            Formula::Var(_) | Formula::One | Formula::Zero => self.clone(),
            Formula::Not(a) => Formula::Not(Box::new(a.substitute(x, g))),
            Formula::Mul(a, b) => Formula::Mul(Box::new(a.substitute(x, g)), Box::new(b.substitute(x, g))),
            Formula::Imp(a, b) => Formula::Imp(Box::new(a.substitute(x, g)), Box::new(b.substitute(x, g))),
            Formula::Meet(a, b) => Formula::Meet(Box::new(a.substitute(x, g)), Box::new(b.substitute(x, g))),
            Formula::Join(a, b) => Formula::Join(Box::new(a.substitute(x, g)), Box::new(b.substitute(x, g))),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::One | Formula::Zero => 1,
            Formula::Not(a) => 1 + a.size(),
            Formula::Mul(a, b) | Formula::Imp(a, b) | Formula::Meet(a, b) | Formula::Join(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    fn level(&self) -> u8 {
        match self {
            Formula::Meet(..) | Formula::Join(..) => 0,
            Formula::Imp(..) => 1,
            Formula::Mul(..) => 2,
            _ => 3,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(f: &mut fmt::Formatter<'_>, x: &Formula, paren: bool) -> fmt::Result {
            if paren {
                write!(f, "({x})")
            } else {
                write!(f, "{x}")
            }
        }
        match self {
            Formula::Var(v) => f.write_str(v),
            Formula::One => f.write_str("1"),
            Formula::Zero => f.write_str("0"),
            Formula::Not(a) => {
                f.write_str("~")?;
                wrap(f, a, a.level() < 3)
            }
            Formula::Mul(a, b) => {
                wrap(f, a, a.level() < 2)?;
                f.write_str(" * ")?;
                wrap(f, b, b.level() <= 2)
            }
            Formula::Imp(a, b) => {
                wrap(f, a, a.level() <= 1)?;
                f.write_str(" -> ")?;
                wrap(f, b, b.level() < 1)
            }
            Formula::Meet(a, b) | Formula::Join(a, b) => {
                let sym = if matches!(self, Formula::Meet(..)) { " /\\ " } else { " \\/ " };
                wrap(f, a, false)?;
                f.write_str(sym)?;
                wrap(f, b, b.level() == 0)
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn lattice(&mut self) -> Result<Formula> {
        let mut lhs = self.implication()?;
        loop {
            if self.eat("/\\") {
                lhs = Formula::Meet(Box::new(lhs), Box::new(self.implication()?));
            } else if self.eat("\\/") {
                lhs = Formula::Join(Box::new(lhs), Box::new(self.implication()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn implication(&mut self) -> Result<Formula> {
        let lhs = self.product()?;
        if self.eat("->") {
            Ok(Formula::Imp(Box::new(lhs), Box::new(self.implication()?)))
        } else {
            Ok(lhs)
        }
    }

    fn product(&mut self) -> Result<Formula> {
        let mut lhs = self.unary()?;
        while self.eat("*") {
            lhs = Formula::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula> {
        if self.eat("~") {
            return Ok(Formula::Not(Box::new(self.unary()?)));
        }
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.lattice()?;
                if !self.eat(")") {
                    return Err(Error::parse(self.pos, "expected ')'"));
                }
                Ok(inner)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Formula::One)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Formula::Zero)
            }
            Some(c) if c.is_ascii_lowercase() => {
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(Formula::Var(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()))
            }
            Some(c) => Err(Error::parse(start, format!("unexpected '{}'", *c as char))),
            None => Err(Error::parse(start, "unexpected end of formula")),
        }
    }
}

/// Parses `*`, `->` (right associative), `/\`, `\/`, `~`, `0`, `1` and
/// lowercase variables. `*` binds tighter than `->`, which binds tighter
/// than the lattice connectives.
pub fn parse_formula(s: &str) -> Result<Formula> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let f = p.lattice()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(f)
}

/// Evaluates a formula in a chain under a valuation.
pub fn eval(f: &Formula, c: &Chain, valuation: &BTreeMap<String, Element>) -> Result<Element> {
    let zero = || c.zero().ok_or_else(|| Error::Invalid("constant 0 needs a bottom-designated chain".into()));
    Ok(match f {
        Formula::Var(v) => {
            let x = valuation.get(v).ok_or_else(|| Error::Invalid(format!("variable {v} is unassigned")))?;
            c.check_element(x)?;
            x.clone()
        }
        Formula::One => Element::Top,
        Formula::Zero => zero()?,
        Formula::Not(a) => c.op(Op::Imp, &eval(a, c, valuation)?, &zero()?)?,
        Formula::Mul(a, b) => c.op(Op::Mul, &eval(a, c, valuation)?, &eval(b, c, valuation)?)?,
        Formula::Imp(a, b) => c.op(Op::Imp, &eval(a, c, valuation)?, &eval(b, c, valuation)?)?,
        Formula::Meet(a, b) => c.op(Op::Meet, &eval(a, c, valuation)?, &eval(b, c, valuation)?)?,
        Formula::Join(a, b) => c.op(Op::Join, &eval(a, c, valuation)?, &eval(b, c, valuation)?)?,
    })
}

/// A finite generator as ascending tables.
struct Model {
    chain: Chain,
    elements: Vec<Element>,
    table: RawChain,
}

impl Model {
    fn new(c: &Chain) -> Result<Model> {
        Ok(Model { chain: c.clone(), elements: c.elements_finite()?, table: flatten(c)? })
    }

    fn top(&self) -> usize {
        self.table.size - 1
    }

    fn op(&self, op: Op, a: usize, b: usize) -> usize {
        match op {
            Op::Mul => self.table.mul[a][b],
            Op::Imp => self.table.imp[a][b],
            Op::Meet => a.min(b),
            Op::Join => a.max(b),
        }
    }

    fn power(&self, a: usize, n: usize) -> usize {
        (1..n).fold(a, |acc, _| self.table.mul[acc][a])
    }

    /// Exponent after which powers of every element are constant.
    fn stable_exponent(&self) -> usize {
        self.table.size.max(1)
    }

    fn eval(&self, f: &Formula, vars: &[String], val: &[usize]) -> Result<usize> {
        Ok(match f {
            Formula::Var(v) => val[vars.iter().position(|x| x == v).expect("variable listed")],
            Formula::One => self.top(),
            Formula::Zero => self.zero()?,
            Formula::Not(a) => self.op(Op::Imp, self.eval(a, vars, val)?, self.zero()?),
            Formula::Mul(a, b) => self.op(Op::Mul, self.eval(a, vars, val)?, self.eval(b, vars, val)?),
            Formula::Imp(a, b) => self.op(Op::Imp, self.eval(a, vars, val)?, self.eval(b, vars, val)?),
            Formula::Meet(a, b) => self.op(Op::Meet, self.eval(a, vars, val)?, self.eval(b, vars, val)?),
            Formula::Join(a, b) => self.op(Op::Join, self.eval(a, vars, val)?, self.eval(b, vars, val)?),
        })
    }

    fn zero(&self) -> Result<usize> {
        if self.chain.bottom_designated() {
            Ok(0)
        } else {
            Err(Error::Invalid(format!(
                "constant 0 needs a bottom-designated chain, got {}",
                pretty_chain(&self.chain)
            )))
        }
    }

    fn valuations(&self, n: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        let size = self.table.size;
        let total = size.pow(n as u32);
        (0..total).map(move |mut code| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = code % size;
                code /= size;
            }
            v
        })
    }
}

fn models(gens: &[Chain]) -> Result<Vec<Model>> {
    if gens.is_empty() {
        return Err(Error::Invalid("at least one generator chain is needed".into()));
    }
    gens.iter().map(Model::new).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Countermodel {
    pub chain: Chain,
    pub valuation: Vec<(String, Element)>,
    pub premise: Element,
    pub conclusion: Element,
}

impl Countermodel {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "chain": pretty_chain(&self.chain),
            "valuation": self.valuation.iter().map(|(v, e)| (v.clone(), e.to_string())).collect::<BTreeMap<_, _>>(),
            "premise": self.premise.to_string(),
            "conclusion": self.conclusion.to_string(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequenceReport {
    pub holds: bool,
    pub countermodel: Option<Countermodel>,
}

impl ConsequenceReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "holds": self.holds,
            "countermodel": self.countermodel.as_ref().map(Countermodel::to_json),
        })
    }
}

fn check_pointwise(
    premise: &Formula,
    conclusion: &Formula,
    gens: &[Chain],
    ok: impl Fn(&Model, usize, usize) -> bool,
) -> Result<ConsequenceReport> {
    let ms = models(gens)?;
    let vars: Vec<String> = premise.vars().union(&conclusion.vars()).cloned().collect();
    for m in &ms {
        for val in m.valuations(vars.len()) {
            let a = m.eval(premise, &vars, &val)?;
            let b = m.eval(conclusion, &vars, &val)?;
            if !ok(m, a, b) {
                let cm = Countermodel {
                    chain: m.chain.clone(),
                    valuation: vars.iter().cloned().zip(val.iter().map(|&i| m.elements[i].clone())).collect(),
                    premise: m.elements[a].clone(),
                    conclusion: m.elements[b].clone(),
                };
                return Ok(ConsequenceReport { holds: false, countermodel: Some(cm) });
            }
        }
    }
    Ok(ConsequenceReport { holds: true, countermodel: None })
}

/// `premise ⊢ conclusion` in the variety generated by the chains: some
/// power of the premise lies below the conclusion everywhere.
pub fn consequence(premise: &Formula, conclusion: &Formula, gens: &[Chain]) -> Result<ConsequenceReport> {
    check_pointwise(premise, conclusion, gens, |m, a, b| m.power(a, m.stable_exponent()) <= b)
}

/// `⊢ premise → conclusion` in the variety generated by the chains.
pub fn implication_valid(premise: &Formula, conclusion: &Formula, gens: &[Chain]) -> Result<ConsequenceReport> {
    check_pointwise(premise, conclusion, gens, |_, a, b| a <= b)
}

/// Term functions over the shared variables, as value tuples indexed by
/// (generator, valuation of the shared variables).
#[derive(Debug, Clone)]
pub struct FunctionAlgebra {
    pub vars: Vec<String>,
    /// Offsets of each generator's block in the value tuples.
    pub blocks: Vec<(usize, usize)>,
    pub elements: Vec<Vec<u8>>,
    pub terms: Vec<Formula>,
}

impl FunctionAlgebra {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

fn build_closure(ms: &[Model], vars: &[String], with_zero: bool, limit: usize) -> Result<FunctionAlgebra> {
    let mut blocks = Vec::new();
    let mut points: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        let start = points.len();
        points.extend(m.valuations(vars.len()).map(|v| (i, v)));
        blocks.push((start, points.len()));
    }
    let mut seeds: Vec<(Formula, Vec<u8>)> =
        vec![(Formula::One, points.iter().map(|(i, _)| ms[*i].top() as u8).collect())];
    if with_zero {
        seeds.push((Formula::Zero, vec![0; points.len()]));
    }
    for (k, v) in vars.iter().enumerate() {
        seeds.push((Formula::Var(v.clone()), points.iter().map(|(_, val)| val[k] as u8).collect()));
    }
    let mut index: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut elements = Vec::new();
    let mut terms = Vec::new();
    for (t, e) in seeds {
        if !index.contains_key(&e) {
            index.insert(e.clone(), elements.len());
            elements.push(e);
            terms.push(t);
        }
    }
    let mut frontier = 0;
    while frontier < elements.len() {
        let end = elements.len();
        for i in 0..end {
            for j in 0..end {
                if i < frontier && j < frontier {
                    continue;
                }
                for op in Op::ALL {
                    let e: Vec<u8> = (0..points.len())
                        .map(|p| ms[points[p].0].op(op, elements[i][p] as usize, elements[j][p] as usize) as u8)
                        .collect();
                    if !index.contains_key(&e) {
                        if elements.len() >= limit {
                            return Err(Error::ClosureTooLarge(limit));
                        }
                        index.insert(e.clone(), elements.len());
                        elements.push(e);
                        terms.push(Formula::binary(op, terms[i].clone(), terms[j].clone()));
                    }
                }
            }
        }
        frontier = end;
    }
    Ok(FunctionAlgebra { vars: vars.to_vec(), blocks, elements, terms })
}

/// The closure of the projections (and constants) under all connectives.
pub fn function_algebra(gens: &[Chain], vars: &[String], limit: usize) -> Result<FunctionAlgebra> {
    let ms = models(gens)?;
    let with_zero = gens.iter().all(Chain::bottom_designated);
    build_closure(&ms, vars, with_zero, limit)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpolation {
    pub shared: Vec<String>,
    pub interpolant: Option<Formula>,
    /// Size of the function algebra searched; 0 when a shortcut applied.
    pub closure_size: usize,
}

impl Interpolation {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "shared": self.shared,
            "interpolant": self.interpolant.as_ref().map(ToString::to_string),
            "closure_size": self.closure_size,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Bound {
    /// Largest stable power over all extensions of a shared valuation.
    Lower,
    /// Least value over all extensions of a shared valuation.
    Upper,
}

/// Per shared valuation (in closure point order), the bound a formula
/// places on any interpolant.
fn shared_profile(ms: &[Model], f: &Formula, shared: &[String], bound: Bound) -> Result<Vec<usize>> {
    let vars: Vec<String> = f.vars().union(&shared.iter().cloned().collect()).cloned().collect();
    let pos: Vec<usize> = shared.iter().map(|s| vars.iter().position(|a| a == s).expect("listed")).collect();
    let mut out = Vec::new();
    for m in ms {
        let size = m.table.size;
        let start = out.len();
        let init = if bound == Bound::Lower { 0 } else { usize::MAX };
        out.extend(std::iter::repeat_n(init, size.pow(shared.len() as u32)));
        for val in m.valuations(vars.len()) {
            let p = start + pos.iter().fold(0, |acc, &k| acc * size + val[k]);
            let x = m.eval(f, &vars, &val)?;
            out[p] = match bound {
                Bound::Lower => out[p].max(m.power(x, m.stable_exponent())),
                Bound::Upper => out[p].min(x),
            };
        }
    }
    Ok(out)
}

fn qualifying(ms: &[Model], fa: &FunctionAlgebra, lower: &[usize], upper: &[usize]) -> Option<usize> {
    let point_model: Vec<usize> =
        fa.blocks.iter().enumerate().flat_map(|(mi, (s, e))| std::iter::repeat_n(mi, e - s)).collect();
    fa.elements.iter().position(|g| {
        g.iter().enumerate().all(|(p, &x)| {
            let m = &ms[point_model[p]];
            let x = x as usize;
            x >= lower[p] && m.power(x, m.stable_exponent()) <= upper[p]
        })
    })
}

/// Searches the function algebra on the shared variables for `χ` with
/// `premise ⊢ χ` and `χ ⊢ conclusion`. A `None` interpolant means no
/// such formula exists in the generated variety.
pub fn find_interpolant(
    premise: &Formula,
    conclusion: &Formula,
    gens: &[Chain],
    limit: usize,
) -> Result<Interpolation> {
    if !consequence(premise, conclusion, gens)?.holds {
        return Err(Error::Invalid(format!("{premise} does not entail {conclusion}")));
    }
    let pv = premise.vars();
    let cv = conclusion.vars();
    let shared: Vec<String> = pv.intersection(&cv).cloned().collect();
    if cv.iter().all(|v| pv.contains(v)) {
        return Ok(Interpolation { shared, interpolant: Some(conclusion.clone()), closure_size: 0 });
    }
    if pv.iter().all(|v| cv.contains(v)) {
        return Ok(Interpolation { shared, interpolant: Some(premise.clone()), closure_size: 0 });
    }
    let ms = models(gens)?;
    let with_zero = gens.iter().all(Chain::bottom_designated);
    let fa = build_closure(&ms, &shared, with_zero, limit)?;
    let lower = shared_profile(&ms, premise, &shared, Bound::Lower)?;
    let upper = shared_profile(&ms, conclusion, &shared, Bound::Upper)?;
    let found = qualifying(&ms, &fa, &lower, &upper);
    Ok(Interpolation { shared, interpolant: found.map(|i| fa.terms[i].clone()), closure_size: fa.len() })
}

/// A random formula over the given variables with at most `depth` nested
/// connectives.
pub fn random_formula<R: Rng>(rng: &mut R, vars: &[String], depth: usize, with_zero: bool) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..10) {
            0 => Formula::One,
            1 if with_zero => Formula::Zero,
            _ => Formula::Var(vars[rng.gen_range(0..vars.len())].clone()),
        };
    }
    let a = random_formula(rng, vars, depth - 1, with_zero);
    let b = random_formula(rng, vars, depth - 1, with_zero);
    Formula::binary(Op::ALL[rng.gen_range(0..4)], a, b)
}

fn random_exact<R: Rng>(rng: &mut R, vars: &[String], depth: usize, with_zero: bool, tries: usize) -> Option<Formula> {
    let want: BTreeSet<String> = vars.iter().cloned().collect();
    (0..tries).map(|_| random_formula(rng, vars, depth, with_zero)).find(|f| f.vars() == want)
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// A random valid consequence `φ ⊢ ψ` where `φ` uses exactly the `left`
/// variables and `ψ` exactly the `right` ones.
pub fn random_consequence<R: Rng>(
    rng: &mut R,
    gens: &[Chain],
    left: &[&str],
    right: &[&str],
    depth: usize,
    tries: usize,
) -> Result<Option<(Formula, Formula)>> {
    let with_zero = gens.iter().all(Chain::bottom_designated);
    let (lv, rv) = (strings(left), strings(right));
    for _ in 0..tries {
        let (Some(phi), Some(psi)) =
            (random_exact(rng, &lv, depth, with_zero, 20), random_exact(rng, &rv, depth, with_zero, 20))
        else {
            continue;
        };
        if consequence(&phi, &psi, gens)?.holds {
            return Ok(Some((phi, psi)));
        }
    }
    Ok(None)
}

/// Samples `pool` random premises over `left` and conclusions over
/// `right`, and returns the smallest valid consequence among all their
/// pairings that has no interpolant.
pub fn mine_failing_pair<R: Rng>(
    rng: &mut R,
    gens: &[Chain],
    left: &[&str],
    right: &[&str],
    depth: usize,
    pool: usize,
) -> Result<Option<(Formula, Formula)>> {
    let ms = models(gens)?;
    let with_zero = gens.iter().all(Chain::bottom_designated);
    let (lv, rv) = (strings(left), strings(right));
    let shared: Vec<String> = lv.iter().filter(|v| rv.contains(v)).cloned().collect();
    let fa = build_closure(&ms, &shared, with_zero, DEFAULT_CLOSURE_LIMIT)?;
    let mut lows: BTreeMap<Vec<usize>, Formula> = BTreeMap::new();
    let mut ups: BTreeMap<Vec<usize>, Formula> = BTreeMap::new();
    for _ in 0..pool {
        for (vars, bound, table) in [(&lv, Bound::Lower, &mut lows), (&rv, Bound::Upper, &mut ups)] {
            if let Some(f) = random_exact(rng, vars, depth, with_zero, 20) {
                let prof = shared_profile(&ms, &f, &shared, bound)?;
                match table.get(&prof) {
                    Some(old) if old.size() <= f.size() => {}
                    _ => {
                        table.insert(prof, f);
                    }
                }
            }
        }
    }
    let mut best: Option<(Formula, Formula)> = None;
    for (lo, phi) in &lows {
        for (up, psi) in &ups {
            if lo.iter().zip(up).all(|(a, b)| a <= b) && qualifying(&ms, &fa, lo, up).is_none() {
                let size = phi.size() + psi.size();
                if best.as_ref().is_none_or(|(a, b)| a.size() + b.size() > size) {
                    best = Some((phi.clone(), psi.clone()));
                }
            }
        }
    }
    if let Some((phi, psi)) = &best {
        let check = find_interpolant(phi, psi, gens, DEFAULT_CLOSURE_LIMIT)?;
        if check.interpolant.is_some() {
            return Err(Error::Internal("mined pair has an interpolant".into()));
        }
    }
    Ok(best)
}

/// Seed for randomized mining, from `BLCALC_SEED` when set.
pub fn seed_from_env(default: u64) -> u64 {
    std::env::var("BLCALC_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(default)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DipReport {
    pub interpolation: bool,
    pub verdict: Verdict,
}

impl DipReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "deductive_interpolation": self.interpolation,
            "verdict": self.verdict.to_json(),
        })
    }

    pub fn summary(&self) -> String {
        let mut s = format!("deductive interpolation: {}", if self.interpolation { "yes" } else { "no" });
        if let Some(c) = &self.verdict.canonical {
            s.push_str(&format!("\ncanonical class: {c}"));
        }
        if let Some(p) = &self.verdict.position {
            s.push_str(&format!("\nposition: {p}"));
        }
        if let Some(w) = &self.verdict.witness {
            s.push_str(&format!("\nwitness: {}", pretty_chain(w)));
        }
        if self.interpolation {
            s.push_str("\nequivalently: amalgamation, strong deductive interpolation and the Robinson property hold");
        }
        s
    }
}

/// Deductive interpolation of the logic of a variety, read off the
/// amalgamation verdict.
pub fn dip_report(v: &VarietyInput) -> Result<DipReport> {
    let verdict = classify(v)?;
    Ok(DipReport { interpolation: verdict.ap, verdict })
}
