//! Consequence checking and interpolant search, including a pair with no
//! interpolant in the three-element Gödel chain.

use blcalc::dsl::parse_chain;
use blcalc::logic::{consequence, dip_report, find_interpolant, parse_formula, DEFAULT_CLOSURE_LIMIT};
use blcalc::varieties::VarietyInput;

fn main() -> blcalc::Result<()> {
    let l3 = vec![parse_chain("L2")?];
    let (phi, psi) = (parse_formula("p * (p -> q)")?, parse_formula("r -> q")?);
    println!("{phi} |- {psi}: {}", consequence(&phi, &psi, &l3)?.holds);
    let it = find_interpolant(&phi, &psi, &l3, DEFAULT_CLOSURE_LIMIT)?;
    println!("interpolant: {:?} (closure of {} terms)", it.interpolant.map(|f| f.to_string()), it.closure_size);

    let goedel = vec![parse_chain("L1+W1+W1")?];
    let phi = parse_formula("((q /\\ p) -> q -> 0 \\/ q * q -> p) -> q")?;
    let psi = parse_formula("r -> q \\/ r")?;
    let it = find_interpolant(&phi, &psi, &goedel, DEFAULT_CLOSURE_LIMIT)?;
    println!("{phi} |- {psi} in G3: interpolant {:?}", it.interpolant.map(|f| f.to_string()));

    println!("{}", dip_report(&VarietyInput::Generators(goedel))?.summary());
    Ok(())
}
