//! Enumerates embeddings between chains, tests which are essential and
//! shrinks a non-essential one through a quotient.

use blcalc::dsl::{parse_chain, pretty_chain};
use blcalc::morphisms::{enumerate_embeddings, essentialize, filters, is_essential_embedding, quotient_by_filter};

fn main() -> blcalc::Result<()> {
    let a = parse_chain("W2")?;
    let b = parse_chain("W4+W2")?;
    let maps = enumerate_embeddings(&a, &b, None)?;
    println!("{} embeddings of {} into {}", maps.len(), pretty_chain(&a), pretty_chain(&b));
    for (i, m) in maps.iter().enumerate() {
        println!("  #{i} essential: {}", is_essential_embedding(m));
    }

    for f in &filters(&b).filters {
        println!("quotient by the filter from component {}: {}", f.cut, pretty_chain(&quotient_by_filter(&b, f)?));
    }

    if let Some(m) = maps.iter().find(|m| !is_essential_embedding(m)) {
        let (f, e) = essentialize(m)?;
        println!(
            "non-essential map factors through the quotient by the filter from component {}, into {}",
            f.cut,
            pretty_chain(&e.target)
        );
    }
    Ok(())
}
