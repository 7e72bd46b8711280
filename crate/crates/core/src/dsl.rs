//! Text syntax for chains (`L1+W2+Z`) and class expressions
//! (`[L1 W2* Z]|[L1 (W1 Z)*]`).

use crate::algebra::{Chain, ComponentKind};
use crate::error::{Error, Result};
use crate::varieties::{Atom, ClassExpr, Item, SumClass};

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { src: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a positive integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match s.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(Error::parse(start, format!("parameter must be a positive integer, got {s}"))),
        }
    }

    /// One component token. Returns the atom and its start position.
    fn component(&mut self) -> Result<(Atom, usize)> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let rest = &self.src[self.pos..];
        let atom = if rest.starts_with(b"Lo") {
            self.pos += 2;
            Atom::l(ComponentKind::LexOmega(self.int()?))
        } else if rest.starts_with(b"Wo") {
            self.pos += 2;
            Atom::w(ComponentKind::LexOmega(self.int()?))
        } else if rest.starts_with(b"UM") {
            self.pos += 2;
            Atom::l(ComponentKind::StdUnit)
        } else {
            match rest.first() {
                Some(b'L') => {
                    self.pos += 1;
                    Atom::l(ComponentKind::FinLuk(self.int()?))
                }
                Some(b'W') => {
                    self.pos += 1;
                    Atom::w(ComponentKind::FinLuk(self.int()?))
                }
                Some(b'Z') => {
                    self.pos += 1;
                    Atom::w(ComponentKind::CancellativeZ)
                }
                Some(b'U') => {
                    self.pos += 1;
                    Atom::w(ComponentKind::StdUnit)
                }
                Some(b'T') => {
                    self.pos += 1;
                    Atom::w(ComponentKind::Trivial)
                }
                Some(c) => return Err(Error::parse(start, format!("unexpected '{}'", *c as char))),
                None => return Err(Error::parse(start, "unexpected end of input")),
            }
        };
        Ok((atom, start))
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Parses `C1+C2+...`. `L k`, `Lo k` and `UM` may only appear first and
/// make the chain bottom-designated.
pub fn parse_chain(s: &str) -> Result<Chain> {
    let mut lx = Lexer::new(s);
    let mut kinds = Vec::new();
    let mut designated = false;
    loop {
        let (atom, pos) = lx.component()?;
        if atom.designated {
            if !kinds.is_empty() {
                return Err(Error::parse(pos, "bottom-designated component must come first"));
            }
            designated = true;
        }
        kinds.push(atom.kind);
        if lx.at_end() {
            break;
        }
        lx.expect(b'+')?;
    }
    Chain::new(kinds, designated).map_err(|e| Error::parse(0, e.to_string()))
}

fn parse_sum(lx: &mut Lexer<'_>) -> Result<SumClass> {
    lx.expect(b'[')?;
    let mut items = Vec::new();
    loop {
        match lx.peek() {
            Some(b']') => {
                lx.pos += 1;
                break;
            }
            Some(b'(') => {
                let open = lx.pos;
                lx.pos += 1;
                let mut group = Vec::new();
                while lx.peek() != Some(b')') {
                    let (a, pos) = lx.component()?;
                    if a.designated {
                        return Err(Error::parse(pos, "bottom-designated component inside a group"));
                    }
                    group.push(a);
                }
                lx.pos += 1;
                if group.len() < 2 {
                    return Err(Error::parse(open, "a group needs at least two components"));
                }
                if !lx.eat(b'*') {
                    return Err(Error::parse(lx.pos, "a group must be starred"));
                }
                items.push(Item::Group(group));
            }
            None => return Err(Error::parse(lx.pos, "unterminated sum class")),
            _ => {
                let (a, pos) = lx.component()?;
                if a.designated && !items.is_empty() {
                    return Err(Error::parse(pos, "bottom-designated component must come first"));
                }
                if lx.eat(b'*') {
                    if a.designated {
                        return Err(Error::parse(pos, "bottom-designated component cannot be starred"));
                    }
                    items.push(Item::Star(a));
                } else {
                    items.push(Item::Atom(a));
                }
            }
        }
    }
    if items.is_empty() {
        return Err(Error::parse(lx.pos, "empty sum class"));
    }
    Ok(SumClass::new(items))
}

/// Parses a union of sum classes separated by `|`.
pub fn parse_class_expr(s: &str) -> Result<ClassExpr> {
    let mut lx = Lexer::new(s);
    let mut sums = vec![parse_sum(&mut lx)?];
    while lx.eat(b'|') {
        sums.push(parse_sum(&mut lx)?);
    }
    if !lx.at_end() {
        return Err(Error::parse(lx.pos, "trailing input"));
    }
    let e = ClassExpr::new(sums);
    e.validate().map_err(|err| Error::parse(0, err.to_string()))?;
    Ok(e)
}

pub fn pretty_chain(c: &Chain) -> String {
    if c.is_trivial() {
        return "T".into();
    }
    c.components()
        .iter()
        .enumerate()
        .map(|(i, k)| k.label(i == 0 && c.bottom_designated()))
        .collect::<Vec<_>>()
        .join("+")
}

fn pretty_atom(a: &Atom) -> String {
    a.kind.label(a.designated)
}

pub fn pretty_sum(s: &SumClass) -> String {
    let items: Vec<String> = s
        .items
        .iter()
        .map(|i| match i {
            Item::Atom(a) => pretty_atom(a),
            Item::Star(a) => format!("{}*", pretty_atom(a)),
            Item::Group(g) => format!("({})*", g.iter().map(pretty_atom).collect::<Vec<_>>().join(" ")),
        })
        .collect();
    format!("[{}]", items.join(" "))
}

pub fn pretty_class(e: &ClassExpr) -> String {
    e.sums.iter().map(pretty_sum).collect::<Vec<_>>().join("|")
}
