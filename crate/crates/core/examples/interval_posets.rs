//! Prints the subvariety intervals as Graphviz and JSON.

use blcalc::classifier::{emit_poset, interval, IntervalId, PosetFormat};

fn main() -> blcalc::Result<()> {
    let p = interval(IntervalId::parse("I(W1,Z)")?);
    println!("{} nodes, {} covers", p.nodes.len(), p.covers.len());
    print!("{}", emit_poset(&p, PosetFormat::Dot));

    let wo = interval(IntervalId::from_name("wo", Some(2))?);
    print!("{}", emit_poset(&wo, PosetFormat::Json));
    Ok(())
}
