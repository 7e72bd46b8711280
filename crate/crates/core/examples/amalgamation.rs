//! Builds amalgams of spans of chains, both by construction and by bounded
//! search, and shows a span that only has a one-sided amalgam.

use blcalc::amalgamation::{
    amalgamate_constructive, find_amalgam_bruteforce, one_sided_amalgam, verify_amalgam, Bounds, Span,
};
use blcalc::dsl::{parse_chain, parse_class_expr, pretty_chain};
use blcalc::Caps;

fn main() -> blcalc::Result<()> {
    let universe = parse_class_expr("[U]")?;
    let span = Span::from_indices(&parse_chain("W1")?, &parse_chain("W2")?, &parse_chain("W3")?, 0, 0)?;
    let built = amalgamate_constructive(&span, &universe)?;
    verify_amalgam(&span, &built, Caps::default())?;
    println!("constructed: {}", pretty_chain(&built.target));

    let found = find_amalgam_bruteforce(&span, &universe, Bounds::new(3, 8))?;
    println!("{}", serde_json::to_string_pretty(&found.to_json()).unwrap());

    let universe = parse_class_expr("[W1]|[Z]")?;
    let span = Span::from_indices(&parse_chain("T")?, &parse_chain("W1")?, &parse_chain("Z")?, 0, 0)?;
    let search = find_amalgam_bruteforce(&span, &universe, Bounds::new(3, 4))?;
    println!("full amalgam of T -> W1, T -> Z: {:?}", search.amalgam().map(|a| pretty_chain(&a.target)));
    let one = one_sided_amalgam(&span, &universe, Bounds::new(3, 4))?;
    println!("one-sided amalgam into {} (one_sided: {})", pretty_chain(&one.target), one.one_sided);
    Ok(())
}
