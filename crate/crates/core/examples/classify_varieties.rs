//! Decides the amalgamation property for varieties given by generators or
//! by class expressions, and lists the catalog of varieties that have it.

use blcalc::classifier::{classify, enumerate_catalog, CatalogMode};
use blcalc::dsl::{parse_chain, parse_class_expr};
use blcalc::varieties::VarietyInput;

fn main() -> blcalc::Result<()> {
    let inputs = [
        VarietyInput::Canonical(parse_class_expr("[L1 W1*]")?),
        VarietyInput::Canonical(parse_class_expr("[L1 W1 W1]")?),
        VarietyInput::Generators(vec![parse_chain("W2+Z")?, parse_chain("W1")?]),
        VarietyInput::Generators(vec![parse_chain("L3")?, parse_chain("L2")?]),
    ];
    for v in &inputs {
        let verdict = classify(v)?;
        let detail = match (&verdict.canonical, &verdict.reason) {
            (Some(c), _) => c.to_string(),
            (None, Some(r)) => r.clone(),
            (None, None) => String::new(),
        };
        println!("ap: {:5} {detail}", verdict.ap);
    }

    let catalog = enumerate_catalog(CatalogMode::Bh, 2, 0);
    println!("{} basic hoop varieties with the property up to n = 2", catalog.len());
    for e in catalog.iter().take(8) {
        println!("  {} ({})", e.class, e.position);
    }
    Ok(())
}
