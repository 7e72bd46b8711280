//! Decomposition of finite chain tables into ordinal sums of Wajsberg chains.

use serde::Serialize;
use serde_json::json;

use crate::algebra::{Chain, ComponentKind, Element, Op};
use crate::error::{Error, Result};
use crate::raw::{check_axioms, RawChain};

/// `(a→b)→b = (b→a)→a` on the tables. Both arguments must be below the top.
pub fn same_component(t: &RawChain, a: usize, b: usize) -> Result<bool> {
    t.check_shape()?;
    let top = t.top();
    if a >= t.size || b >= t.size {
        return Err(Error::Invalid(format!("element out of range 0..{}", t.size)));
    }
    if a == top || b == top {
        return Err(Error::Invalid("the top lies in every component".into()));
    }
    Ok(t.imp[t.imp[a][b]][b] == t.imp[t.imp[b][a]][a])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecomposedComponent {
    pub kind: ComponentKind,
    /// Table indices of the component, ascending, top excluded.
    pub elements: Vec<usize>,
}

impl DecomposedComponent {
    /// The isomorphism onto `W_k`: the i-th element goes to `i`, the top to `k`.
    pub fn iso(&self, table_index: usize) -> Option<i64> {
        self.elements.iter().position(|&e| e == table_index).map(|i| i as i64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub chain: Chain,
    pub components: Vec<DecomposedComponent>,
}

impl Decomposition {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": crate::SCHEMA,
            "order": "ascending",
            "bottom_designated": self.chain.bottom_designated(),
            "chain": crate::dsl::pretty_chain(&self.chain),
            "components": self.components.iter().map(|c| json!({
                "kind": "W",
                "k": c.kind.param().unwrap_or(0),
                "elements": c.elements,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Names the Wajsberg chain formed by a block plus the top.
pub fn classify_component(block: &RawChain) -> Result<ComponentKind> {
    let rep = check_axioms(block)?;
    if !rep.basic_hoop() {
        return Err(Error::Axioms(format!("block is not a basic hoop: {:?}", rep.failures)));
    }
    if !rep.mv_identity {
        return Err(Error::Axioms("block fails the MV identity".into()));
    }
    if block.size == 1 {
        return Ok(ComponentKind::Trivial);
    }
    let k = block.size - 1;
    for a in 0..block.size {
        for b in 0..block.size {
            if block.mul[a][b] != (a + b).saturating_sub(k) || block.imp[a][b] != (k + b - a).min(k) {
                return Err(Error::Axioms(format!("block is not isomorphic to W{k} at ({a},{b})")));
            }
        }
    }
    Ok(ComponentKind::FinLuk(k as u32))
}

pub fn decompose(t: &RawChain) -> Result<Decomposition> {
    let rep = check_axioms(t)?;
    if !rep.basic_hoop() {
        return Err(Error::Axioms(format!("not a basic hoop chain: {:?}", rep.failures)));
    }
    let top = t.top();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for e in 0..top {
        match blocks.last_mut() {
            Some(b) if same_component(t, b[0], e)? => b.push(e),
            _ => blocks.push(vec![e]),
        }
    }
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            for &y in b {
                if !same_component(t, x, y)? {
                    return Err(Error::Axioms(format!("same-component relation not transitive at {x}, {y}")));
                }
            }
            for other in &blocks[i + 1..] {
                for &y in other {
                    if same_component(t, x, y)? {
                        return Err(Error::Axioms(format!("blocks are not convex at {x}, {y}")));
                    }
                }
            }
        }
    }
    let mut components = Vec::with_capacity(blocks.len());
    for b in blocks {
        let mut with_top = b.clone();
        with_top.push(top);
        let kind = classify_component(&t.restrict(&with_top)?)?;
        components.push(DecomposedComponent { kind, elements: b });
    }
    let chain = Chain::new(components.iter().map(|c| c.kind).collect(), t.bottom_designated)?;
    Ok(Decomposition { chain, components })
}

/// Tables of a fully finite chain in ascending element order.
pub fn flatten(c: &Chain) -> Result<RawChain> {
    let elems = c.elements_finite()?;
    let n = elems.len();
    let pos = |e: &Element| elems.binary_search(e).expect("closed");
    let table = |op: Op| -> Vec<Vec<usize>> {
        elems.iter().map(|x| elems.iter().map(|y| pos(&c.op_unchecked(op, x, y))).collect()).collect()
    };
    Ok(RawChain { size: n, mul: table(Op::Mul), imp: table(Op::Imp), bottom_designated: c.bottom_designated() })
}
