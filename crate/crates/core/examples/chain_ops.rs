//! Evaluates the four operations on a few chains and checks the laws on a
//! finite window of an infinite chain.

use blcalc::dsl::parse_chain;
use blcalc::laws::check_chain_window;
use blcalc::{Caps, Op};

fn main() -> blcalc::Result<()> {
    let c = parse_chain("L1+Z+W2")?;
    let x = c.parse_element("1:-3")?;
    let y = c.parse_element("2:1")?;
    for op in Op::ALL {
        println!("{x} {op:?} {y} = {}", c.op(op, &x, &y)?);
    }
    println!("{x}^3 = {}", c.power(&x, 3));

    let report = check_chain_window(&c, Caps::new(3, 2));
    println!("{} elements checked, BL: {}", report.elements_checked, report.is_bl());
    Ok(())
}
