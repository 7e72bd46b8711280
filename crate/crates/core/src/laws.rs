//! Exhaustive checks of the residuated-lattice laws over a list of elements.

use std::fmt::Debug;

use serde::Serialize;

/// Minimal interface needed to test the laws: a totally ordered monoid
/// with a residual. Operation results need not lie in the checked list.
pub trait Structure {
    type E: Clone + Eq + Debug;
    fn mul(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn imp(&self, x: &Self::E, y: &Self::E) -> Self::E;
    fn le(&self, x: &Self::E, y: &Self::E) -> bool;
    fn top(&self) -> Self::E;

    fn meet(&self, x: &Self::E, y: &Self::E) -> Self::E {
        if self.le(x, y) {
            x.clone()
        } else {
            y.clone()
        }
    }

    fn join(&self, x: &Self::E, y: &Self::E) -> Self::E {
        if self.le(x, y) {
            y.clone()
        } else {
            x.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawFailure {
    pub law: String,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub commutative_monoid: bool,
    pub residuation: bool,
    pub integrality: bool,
    pub divisibility: bool,
    pub prelinearity: bool,
    pub mv_identity: bool,
    pub cancellative: bool,
    pub bounded: bool,
    pub elements_checked: usize,
    /// First counterexample found for each failing law.
    pub failures: Vec<LawFailure>,
}

impl AxiomReport {
    pub fn basic_hoop(&self) -> bool {
        self.commutative_monoid && self.residuation && self.integrality && self.divisibility && self.prelinearity
    }

    pub fn is_bl(&self) -> bool {
        self.basic_hoop() && self.bounded
    }

    pub fn is_wajsberg(&self) -> bool {
        self.basic_hoop() && self.mv_identity
    }
}

struct Recorder {
    failures: Vec<LawFailure>,
}

impl Recorder {
    fn fail<E: Debug>(&mut self, law: &str, w: &[&E]) -> bool {
        if !self.failures.iter().any(|f| f.law == law) {
            self.failures
                .push(LawFailure { law: law.to_string(), witness: w.iter().map(|e| format!("{e:?}")).collect() });
        }
        false
    }
}

pub fn check_laws<S: Structure>(s: &S, elems: &[S::E], bounded: bool) -> AxiomReport {
    let mut rec = Recorder { failures: Vec::new() };
    let top = s.top();
    let mut monoid = true;
    let mut residuation = true;
    let mut integrality = true;
    let mut divisibility = true;
    let mut prelinearity = true;
    let mut mv = true;
    let mut cancellative = true;

    for x in elems {
        if s.mul(x, &top) != *x || s.mul(&top, x) != *x {
            monoid = rec.fail("unit", &[x]);
        }
        if !s.le(x, &top) {
            integrality = rec.fail("integrality", &[x]);
        }
        for y in elems {
            let xy = s.mul(x, y);
            if xy != s.mul(y, x) {
                monoid = rec.fail("commutativity", &[x, y]);
            }
            let xy_imp = s.imp(x, y);
            if s.mul(x, &xy_imp) != s.meet(x, y) {
                divisibility = rec.fail("divisibility", &[x, y]);
            }
            if s.join(&xy_imp, &s.imp(y, x)) != top {
                prelinearity = rec.fail("prelinearity", &[x, y]);
            }
            if s.imp(&xy_imp, y) != s.join(x, y) {
                mv = rec.fail("mv_identity", &[x, y]);
            }
            if s.imp(x, &xy) != *y {
                cancellative = rec.fail("cancellativity", &[x, y]);
            }
            for z in elems {
                if s.mul(&xy, z) != s.mul(x, &s.mul(y, z)) {
                    monoid = rec.fail("associativity", &[x, y, z]);
                }
                if s.le(&xy, z) != s.le(x, &s.imp(y, z)) {
                    residuation = rec.fail("residuation", &[x, y, z]);
                }
            }
        }
    }

    AxiomReport {
        commutative_monoid: monoid,
        residuation,
        integrality,
        divisibility,
        prelinearity,
        mv_identity: mv,
        cancellative,
        bounded,
        elements_checked: elems.len(),
        failures: rec.failures,
    }
}

impl Structure for crate::algebra::Chain {
    type E = crate::algebra::Element;

    fn mul(&self, x: &Self::E, y: &Self::E) -> Self::E {
        self.op_unchecked(crate::algebra::Op::Mul, x, y)
    }

    fn imp(&self, x: &Self::E, y: &Self::E) -> Self::E {
        self.op_unchecked(crate::algebra::Op::Imp, x, y)
    }

    fn le(&self, x: &Self::E, y: &Self::E) -> bool {
        x <= y
    }

    fn top(&self) -> Self::E {
        crate::algebra::Element::Top
    }
}

/// Checks the laws on a truncation window of a structural chain.
pub fn check_chain_window(c: &crate::algebra::Chain, caps: crate::algebra::Caps) -> AxiomReport {
    let elems = c.elements(caps);
    check_laws(c, &elems, c.bottom_designated())
}
