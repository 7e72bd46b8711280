//! Flattens a chain to raw tables, then recovers its ordinal summands.

use blcalc::dsl::{parse_chain, pretty_chain};
use blcalc::raw::check_axioms;
use blcalc::structure::{decompose, flatten};
use blcalc::RawChain;

fn main() -> blcalc::Result<()> {
    let table = flatten(&parse_chain("L2+W1+W3")?)?;
    println!("{} elements, axioms hold: {}", table.size, check_axioms(&table)?.is_bl());

    let d = decompose(&table)?;
    println!("decomposed: {}", pretty_chain(&d.chain));

    let goedel = r#"{"size":3,"mul":[[0,0,0],[0,1,1],[0,1,2]],"imp":[[2,2,2],[0,2,2],[0,1,2]]}"#;
    let d = decompose(&RawChain::from_json(goedel)?)?;
    println!("{}", serde_json::to_string_pretty(&d.to_json()).unwrap());
    Ok(())
}
