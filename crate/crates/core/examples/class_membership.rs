//! Membership of chains in classes written in the class nomenclature, and in
//! varieties generated by finitely many chains.

use blcalc::dsl::{parse_chain, parse_class_expr};
use blcalc::varieties::{member, vfc_equals, vfc_membership, witness_basis, VarietyInput};

fn main() -> blcalc::Result<()> {
    let class = parse_class_expr("[L1 W2* Z]|[L3]")?;
    for c in ["L1+W2+W1+Z", "L1+Z", "L3", "L2+W2", "L1+Z+W1"] {
        println!("{c} in {class}: {}", member(&parse_chain(c)?, &class)?);
    }

    let gens = VarietyInput::Generators(vec![parse_chain("W2+Z")?, parse_chain("W3")?]);
    for c in ["W1+Z", "W2+W1", "W6", "Z+W2"] {
        println!("{c} in V(W2+Z, W3): {}", vfc_membership(&parse_chain(c)?, &gens)?);
    }

    let target = parse_class_expr("[W2* Z]")?;
    println!("basis: {:?}", witness_basis(&target, 1)?.iter().map(blcalc::dsl::pretty_chain).collect::<Vec<_>>());
    println!("V(W2+Z, W3) vs {target}: {:?}", vfc_equals(&gens, &target)?);
    Ok(())
}
