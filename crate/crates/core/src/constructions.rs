//! Γ instances, ordinal sums, disconnected rotations and radicals.

use std::fmt;

use crate::algebra::{Caps, Chain, ComponentKind, LocalValue, Op};
use crate::error::{Error, Result};
use crate::laws::{check_laws, AxiomReport, Structure};

/// Strong units accepted by [`gamma`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaUnit {
    /// `m` in the integers.
    Int(i64),
    /// `(m, b)` in the lexicographic product of the integers with itself.
    IntLexInt(i64, i64),
}

/// `Γ(ℤ, m)` is `W_m` and `Γ(ℤ ×_lex ℤ, (m, 0))` is `W_{m,ω}`.
pub fn gamma(unit: GammaUnit) -> Result<ComponentKind> {
    match unit {
        GammaUnit::Int(m) if m >= 1 => Ok(ComponentKind::FinLuk(to_param(m)?)),
        GammaUnit::IntLexInt(m, 0) if m >= 1 => Ok(ComponentKind::LexOmega(to_param(m)?)),
        GammaUnit::IntLexInt(_, b) if b != 0 => {
            Err(Error::Invalid(format!("strong unit must have second coordinate 0, got {b}")))
        }
        _ => Err(Error::Invalid("strong unit must be positive".into())),
    }
}

fn to_param(m: i64) -> Result<u32> {
    u32::try_from(m).map_err(|_| Error::OutOfRange(format!("parameter {m} too large")))
}

/// Concatenates summands. Only the first part may be bottom-designated.
pub fn ordinal_sum(parts: &[Chain]) -> Result<Chain> {
    let first = parts.first().ok_or_else(|| Error::Invalid("empty ordinal sum".into()))?;
    let mut comps = Vec::new();
    for (i, p) in parts.iter().enumerate() {
        if i > 0 && p.bottom_designated() && !p.is_trivial() {
            return Err(Error::Invalid(format!("summand {i} is bottom-designated")));
        }
        comps.extend_from_slice(p.components());
    }
    Chain::new(comps, first.bottom_designated())
}

/// Element of a disconnected rotation: `(sign, value)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotElem {
    pub sign: u8,
    pub val: LocalValue,
}

impl RotElem {
    pub fn new(sign: u8, val: LocalValue) -> Self {
        RotElem { sign, val }
    }
}

impl fmt::Display for RotElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.sign, self.val)
    }
}

/// The disconnected rotation `A^r` of a cancellative chain `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationChain {
    base: ComponentKind,
}

pub fn disconnected_rotation(base: &Chain) -> Result<RotationChain> {
    let kind = match base.components() {
        [] => ComponentKind::Trivial,
        [k] if k.is_cancellative() => *k,
        _ => {
            return Err(Error::Invalid(format!(
                "rotation needs a cancellative chain of index at most 1, got {:?}",
                base.components()
            )))
        }
    };
    Ok(RotationChain { base: kind })
}

impl RotationChain {
    pub fn base(&self) -> ComponentKind {
        self.base
    }

    pub fn top(&self) -> RotElem {
        RotElem::new(1, self.base.top())
    }

    pub fn bottom(&self) -> RotElem {
        RotElem::new(0, self.base.top())
    }

    fn check(&self, x: &RotElem) -> Result<()> {
        if x.sign > 1 {
            return Err(Error::OutOfRange(format!("sign {} in {x}", x.sign)));
        }
        self.base.check_value(&x.val)
    }

    fn base_op(&self, op: Op, a: &LocalValue, b: &LocalValue) -> LocalValue {
        crate::algebra::component_op(self.base, op, a, b).expect("validated rotation operands")
    }

    pub fn le_elems(&self, x: &RotElem, y: &RotElem) -> bool {
        match (x.sign, y.sign) {
            (0, 1) => true,
            (1, 0) => false,
            (1, _) => x.val <= y.val,
            _ => y.val <= x.val,
        }
    }

    pub fn op(&self, op: Op, x: &RotElem, y: &RotElem) -> Result<RotElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.op_unchecked(op, x, y))
    }

    fn op_unchecked(&self, op: Op, x: &RotElem, y: &RotElem) -> RotElem {
        let (i, j) = (x.sign, y.sign);
        let (a, b) = (&x.val, &y.val);
        match op {
            Op::Join => match (i, j) {
                (1, 1) => RotElem::new(1, self.base_op(Op::Join, a, b)),
                (0, 0) => RotElem::new(0, self.base_op(Op::Meet, a, b)),
                (1, _) => x.clone(),
                _ => y.clone(),
            },
            Op::Meet => match (i, j) {
                (1, 1) => RotElem::new(1, self.base_op(Op::Meet, a, b)),
                (0, 0) => RotElem::new(0, self.base_op(Op::Join, a, b)),
                (0, _) => x.clone(),
                _ => y.clone(),
            },
            Op::Mul => match (i, j) {
                (1, 1) => RotElem::new(1, self.base_op(Op::Mul, a, b)),
                (0, 0) => self.bottom(),
                (0, _) => RotElem::new(0, self.base_op(Op::Imp, b, a)),
                _ => RotElem::new(0, self.base_op(Op::Imp, a, b)),
            },
            Op::Imp => match (i, j) {
                (1, 1) => RotElem::new(1, self.base_op(Op::Imp, a, b)),
                (0, 0) => RotElem::new(1, self.base_op(Op::Imp, b, a)),
                (1, _) => RotElem::new(0, self.base_op(Op::Mul, a, b)),
                _ => self.top(),
            },
        }
    }

    /// Window of elements, ascending.
    pub fn elements(&self, caps: Caps) -> Vec<RotElem> {
        let base = Chain::hoop(vec![self.base]).expect("cancellative base");
        let locals: Vec<LocalValue> = base
            .elements(caps)
            .into_iter()
            .map(|e| match e {
                crate::algebra::Element::Top => self.base.top(),
                crate::algebra::Element::At { val, .. } => val,
            })
            .collect();
        let mut out: Vec<RotElem> = locals.iter().rev().map(|v| RotElem::new(0, v.clone())).collect();
        out.extend(locals.iter().map(|v| RotElem::new(1, v.clone())));
        out
    }

    pub fn check_window(&self, caps: Caps) -> AxiomReport {
        check_laws(self, &self.elements(caps), true)
    }
}

impl Structure for RotationChain {
    type E = RotElem;

    fn mul(&self, x: &RotElem, y: &RotElem) -> RotElem {
        self.op_unchecked(Op::Mul, x, y)
    }

    fn imp(&self, x: &RotElem, y: &RotElem) -> RotElem {
        self.op_unchecked(Op::Imp, x, y)
    }

    fn le(&self, x: &RotElem, y: &RotElem) -> bool {
        self.le_elems(x, y)
    }

    fn top(&self) -> RotElem {
        RotationChain::top(self)
    }

    fn meet(&self, x: &RotElem, y: &RotElem) -> RotElem {
        self.op_unchecked(Op::Meet, x, y)
    }

    fn join(&self, x: &RotElem, y: &RotElem) -> RotElem {
        self.op_unchecked(Op::Join, x, y)
    }
}

/// The radical of a bounded component, stored as its isomorphism type plus
/// a membership predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalView {
    pub parent: ComponentKind,
    pub kind_of_radical: ComponentKind,
}

impl RadicalView {
    pub fn contains(&self, v: &LocalValue) -> bool {
        match (self.parent, v) {
            (ComponentKind::LexOmega(k), LocalValue::Lex(a, _)) => *a == k as i64,
            (p, v) => *v == p.top(),
        }
    }

    /// The isomorphism onto the radical kind, for radical members.
    pub fn to_radical(&self, v: &LocalValue) -> Option<LocalValue> {
        if !self.contains(v) {
            return None;
        }
        Some(match (self.parent, v) {
            (ComponentKind::LexOmega(_), LocalValue::Lex(_, b)) => LocalValue::Neg(*b),
            _ => LocalValue::Unit,
        })
    }
}

pub fn radical(kind: ComponentKind) -> Result<RadicalView> {
    let kind_of_radical = match kind {
        ComponentKind::FinLuk(_) | ComponentKind::StdUnit | ComponentKind::Trivial => ComponentKind::Trivial,
        ComponentKind::LexOmega(_) => ComponentKind::CancellativeZ,
        ComponentKind::CancellativeZ => return Err(Error::Invalid("the radical is defined for bounded kinds".into())),
    };
    Ok(RadicalView { parent: kind, kind_of_radical })
}

/// A verified embedding of a rotation into `W_{k,ω}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationEmbedding {
    pub k: u32,
    pub base: ComponentKind,
    pub window: Caps,
}

impl RotationEmbedding {
    pub fn apply(&self, x: &RotElem) -> LocalValue {
        let k = self.k as i64;
        match (&x.val, x.sign) {
            (LocalValue::Neg(b), 1) => LocalValue::Lex(k, *b),
            (LocalValue::Neg(b), _) => LocalValue::Lex(0, -b),
            (_, 1) => LocalValue::Lex(k, 0),
            _ => LocalValue::Lex(0, 0),
        }
    }
}

/// The canonical extension of the radical inclusion: `(1,b) ↦ (k,b)`,
/// `(0,b) ↦ (0,-b)`. Verified on the window before it is returned.
pub fn rotation_embed_into(r: &RotationChain, k: u32, caps: Caps) -> Result<RotationEmbedding> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let emb = RotationEmbedding { k, base: r.base, window: caps };
    let target = ComponentKind::LexOmega(k);
    let elems = r.elements(caps);
    for x in &elems {
        for y in &elems {
            if r.le_elems(x, y) != (emb.apply(x) <= emb.apply(y)) {
                return Err(Error::Internal(format!("order not preserved at {x}, {y}")));
            }
            if x != y && emb.apply(x) == emb.apply(y) {
                return Err(Error::Internal(format!("not injective at {x}, {y}")));
            }
            for op in Op::ALL {
                let lhs = emb.apply(&r.op_unchecked(op, x, y));
                let rhs = crate::algebra::component_op(target, op, &emb.apply(x), &emb.apply(y))?;
                if lhs != rhs {
                    return Err(Error::Internal(format!("{op:?} not preserved at {x}, {y}")));
                }
            }
        }
    }
    if emb.apply(&r.bottom()) != LocalValue::Lex(0, 0) || emb.apply(&r.top()) != target.top() {
        return Err(Error::Internal("bounds not preserved".into()));
    }
    Ok(emb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ComponentKind::*;

    fn z() -> Chain {
        Chain::hoop(vec![CancellativeZ]).unwrap()
    }

    #[test]
    fn gamma_instances() {
        assert_eq!(gamma(GammaUnit::Int(1)).unwrap(), FinLuk(1));
        assert_eq!(gamma(GammaUnit::IntLexInt(1, 0)).unwrap(), LexOmega(1));
        assert!(gamma(GammaUnit::Int(0)).is_err());
        assert!(gamma(GammaUnit::IntLexInt(2, 1)).is_err());
    }

    #[test]
    fn gamma_formulas_match_component_ops() {
        // Γ(ℤ, 4): a·b = (a+b-4) ∨ 0, a→b = (4+b-a) ∧ 4
        let k = gamma(GammaUnit::Int(4)).unwrap();
        for a in 0..=4 {
            for b in 0..=4 {
                let m = crate::algebra::component_op(k, Op::Mul, &LocalValue::Fin(a), &LocalValue::Fin(b)).unwrap();
                let i = crate::algebra::component_op(k, Op::Imp, &LocalValue::Fin(a), &LocalValue::Fin(b)).unwrap();
                assert_eq!(m, LocalValue::Fin((a + b - 4).max(0)));
                assert_eq!(i, LocalValue::Fin((4 + b - a).min(4)));
            }
        }
    }

    #[test]
    fn sums_are_associative_and_absorb_trivial() {
        let a = Chain::bl(vec![FinLuk(2)]).unwrap();
        let b = Chain::hoop(vec![CancellativeZ]).unwrap();
        let c = Chain::hoop(vec![LexOmega(1)]).unwrap();
        let left = ordinal_sum(&[ordinal_sum(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let right = ordinal_sum(&[a.clone(), ordinal_sum(&[b, c]).unwrap()]).unwrap();
        assert_eq!(left, right);
        assert_eq!(ordinal_sum(&[a.clone(), Chain::trivial(false)]).unwrap(), a);
        assert!(ordinal_sum(&[Chain::hoop(vec![FinLuk(1)]).unwrap(), a]).is_err());
    }

    #[test]
    fn two_idempotent_summands() {
        let w1 = Chain::hoop(vec![FinLuk(1)]).unwrap();
        let c = ordinal_sum(&[w1.clone(), w1]).unwrap();
        assert_eq!(c.size(), Some(3));
        let mid = crate::algebra::Element::at(1, LocalValue::Fin(0));
        assert_eq!(c.mul(&mid, &mid).unwrap(), mid);
    }

    #[test]
    fn rotation_tables() {
        let r = disconnected_rotation(&z()).unwrap();
        let p = |s, v| RotElem::new(s, LocalValue::Neg(v));
        assert_eq!(r.op(Op::Mul, &p(1, -1), &p(1, -1)).unwrap(), p(1, -2));
        assert_eq!(r.op(Op::Mul, &p(0, -2), &p(1, -1)).unwrap(), p(0, -1));
        assert!(disconnected_rotation(&Chain::hoop(vec![FinLuk(1)]).unwrap()).is_err());
    }

    #[test]
    fn rotation_is_an_mv_chain_on_windows() {
        let rep = disconnected_rotation(&z()).unwrap().check_window(Caps::new(4, 1));
        assert!(rep.is_bl() && rep.mv_identity, "{:?}", rep.failures);
        let t = disconnected_rotation(&Chain::trivial(false)).unwrap();
        assert_eq!(t.elements(Caps::default()).len(), 2);
        assert!(t.check_window(Caps::default()).mv_identity);
    }

    #[test]
    fn base_embeds_into_positive_part() {
        let r = disconnected_rotation(&z()).unwrap();
        let base = z();
        for x in base.elements(Caps::new(4, 1)) {
            for y in base.elements(Caps::new(4, 1)) {
                let lift = |e: &crate::algebra::Element| match e {
                    crate::algebra::Element::Top => RotElem::new(1, LocalValue::Neg(0)),
                    crate::algebra::Element::At { val, .. } => RotElem::new(1, val.clone()),
                };
                for op in [Op::Mul, Op::Imp] {
                    let lhs = lift(&base.op(op, &x, &y).unwrap());
                    assert_eq!(lhs, r.op(op, &lift(&x), &lift(&y)).unwrap());
                }
            }
        }
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(FinLuk(3)).unwrap().kind_of_radical, Trivial);
        assert_eq!(radical(StdUnit).unwrap().kind_of_radical, Trivial);
        let r = radical(LexOmega(2)).unwrap();
        assert_eq!(r.kind_of_radical, CancellativeZ);
        assert!(radical(CancellativeZ).is_err());
        // (2,b)^n = (2, nb) never reaches the bottom
        let k = LexOmega(2);
        for b in -3..=0 {
            let x = LocalValue::Lex(2, b);
            let mut acc = k.top();
            for _ in 0..20 {
                acc = crate::algebra::component_op(k, Op::Mul, &acc, &x).unwrap();
                assert_ne!(acc, LocalValue::Lex(0, 0));
            }
            assert!(r.contains(&x));
        }
        assert!(!r.contains(&LocalValue::Lex(1, 5)));
    }

    #[test]
    fn radical_of_lex_omega_is_a_filter_on_windows() {
        let k = LexOmega(3);
        let r = radical(k).unwrap();
        let c = Chain::hoop(vec![k]).unwrap();
        let vals: Vec<LocalValue> = c
            .elements(Caps::new(3, 1))
            .into_iter()
            .map(|e| match e {
                crate::algebra::Element::Top => k.top(),
                crate::algebra::Element::At { val, .. } => val,
            })
            .collect();
        for x in vals.iter().filter(|v| r.contains(v)) {
            for y in &vals {
                if x <= y {
                    assert!(r.contains(y));
                }
                if r.contains(y) {
                    assert!(r.contains(&crate::algebra::component_op(k, Op::Mul, x, y).unwrap()));
                }
            }
        }
    }

    #[test]
    fn rotation_embeddings_verify() {
        let r = disconnected_rotation(&z()).unwrap();
        for k in 1..=3 {
            rotation_embed_into(&r, k, Caps::new(10, 1)).unwrap();
        }
        let t = disconnected_rotation(&Chain::trivial(false)).unwrap();
        let e = rotation_embed_into(&t, 2, Caps::default()).unwrap();
        assert_eq!(e.apply(&t.bottom()), LocalValue::Lex(0, 0));
        assert_eq!(e.apply(&t.top()), LocalValue::Lex(2, 0));
    }
}
