//! The disconnected rotation of a cancellative chain, its radical and the
//! embedding of its window into a finite Łukasiewicz chain.

use blcalc::constructions::{disconnected_rotation, radical, rotation_embed_into};
use blcalc::dsl::parse_chain;
use blcalc::{Caps, ComponentKind, LocalValue, Op};

fn main() -> blcalc::Result<()> {
    let r = disconnected_rotation(&parse_chain("Z")?)?;
    let caps = Caps::new(2, 1);
    let elems = r.elements(caps);
    println!("window: {}", elems.iter().map(ToString::to_string).collect::<Vec<_>>().join(" < "));
    let (a, b) = (&elems[1], &elems[elems.len() - 2]);
    println!("{a} * {b} = {}", r.op(Op::Mul, a, b)?);
    println!("window is MV: {}", r.check_window(caps).is_wajsberg());

    let kind = ComponentKind::LexOmega(2);
    let rad = radical(kind)?;
    let v = LocalValue::parse_for(kind, "(2,-4)")?;
    println!("{v} in the radical of {kind}: {} as {:?}", rad.contains(&v), rad.to_radical(&v));

    let emb = rotation_embed_into(&r, 6, caps)?;
    for x in &elems {
        println!("  {x} -> {}", emb.apply(x));
    }
    Ok(())
}
