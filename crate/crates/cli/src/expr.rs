//! Manifold expressions: `RP(n)`, `CP(n)`, `S(n)`, `G(k,m)`, `G~(k,m)` joined by `x`.
//!
//! Grassmannians take the ambient dimension, so `G(3,7)` is `G_3(R^7)`.
//! Whitespace between tokens is ignored.

use std::fmt;

use skewbound::Atom;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifoldExpr {
    pub factors: Vec<Atom>,
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {offset}: {message} (expected {})", expected.join(" | "))]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<String>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn error(&self, offset: usize, message: impl Into<String>, expected: &[&str]) -> ParseError {
        ParseError {
            offset,
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(self.pos, format!("expected `{token}`"), &[token]))
        }
    }

    fn integer(&mut self) -> Result<(u32, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error(start, "non-integer argument", &["integer"]));
        }
        self.pos += digits;
        let value = self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error(start, "integer out of range", &["integer"]))?;
        Ok((value, start))
    }

    /// `( n )` with `n >= 1`.
    fn single_argument(&mut self) -> Result<u32, ParseError> {
        self.expect("(")?;
        let (n, at) = self.integer()?;
        if n == 0 {
            return Err(self.error(at, "dimension must be at least 1", &["positive integer"]));
        }
        self.expect(")")?;
        Ok(n)
    }

    fn atom(&mut self) -> Result<(Atom, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        const ATOMS: [&str; 5] = ["RP", "CP", "S", "G", "G~"];
        let atom = if self.eat("RP") {
            let n = self.single_argument()?;
            Atom::RealProjective(n)
        } else if self.eat("CP") {
            let n = self.single_argument()?;
            Atom::ComplexProjective(n)
        } else if self.eat("S") {
            let n = self.single_argument()?;
            Atom::Sphere(n)
        } else if self.eat("G") {
            let oriented = self.eat("~");
            self.expect("(")?;
            let (k, k_at) = self.integer()?;
            self.expect(",")?;
            let (ambient, m_at) = self.integer()?;
            self.expect(")")?;
            if !(2..=3).contains(&k) {
                return Err(self.error(
                    k_at,
                    format!("unsupported Grassmannian rank {k}"),
                    &["2", "3"],
                ));
            }
            if ambient <= k {
                return Err(self.error(
                    m_at,
                    format!("ambient dimension must exceed k = {k}"),
                    &["integer > k"],
                ));
            }
            if oriented {
                Atom::OrientedGrassmannian { k, ambient }
            } else {
                Atom::Grassmannian { k, ambient }
            }
        } else {
            return Err(self.error(start, "unknown atom", &ATOMS));
        };
        Ok((atom, start))
    }
}

pub fn parse(text: &str) -> Result<ManifoldExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut factors = Vec::new();
    let mut oriented_at = None;
    loop {
        let (atom, at) = p.atom()?;
        if atom.is_oriented() && oriented_at.is_none() {
            oriented_at = Some(at);
        }
        factors.push(atom);
        if !p.eat("x") {
            break;
        }
    }
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error(p.pos, "unexpected trailing input", &["x", "end of input"]));
    }
    if factors.len() > 1 {
        if let Some(at) = oriented_at {
            return Err(p.error(
                at,
                "oriented Grassmannians cannot appear in a product",
                &["RP", "CP", "S", "G"],
            ));
        }
    }
    Ok(ManifoldExpr { factors })
}
