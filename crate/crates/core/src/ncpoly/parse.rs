//! Text syntax for polynomials.
//!
//! Grammar (whitespace allowed between tokens):
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! sign   := '+' | '-'
//! term   := coeff ('*' factor)*  |  factor ('*' factor)*
//! coeff  := nat ['/' nat]
//! factor := name ['[' nat ',' nat ']']
//! nat    := digit+                (arbitrary precision)
//! name   := alpha alnum*
//! ```
//!
//! A factor must spell a generator label of the presentation it is parsed
//! against, e.g. `X[1,2]`, `x[2,1]`, `y3`. Examples: `3/2*X[1,2]*X[3,4] + 1`,
//! `y1*y7 - y7*y1`, `0`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::NcPoly;
use super::word::{GenId, Word};
use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial syntax error at byte {}: {}", self.pos, self.msg)
    }
}

impl core::error::Error for PolyParseError {}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), PolyParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn err(&self, msg: String) -> PolyParseError {
        PolyParseError { pos: self.pos, msg }
    }

    fn nat(&mut self) -> Result<BigInt, PolyParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number".into()));
        }
        let text = core::str::from_utf8(&self.s[start..self.pos]).unwrap();
        text.parse().map_err(|_| self.err("bad number".into()))
    }

    fn name(&mut self) -> Result<&'a str, PolyParseError> {
        let start = self.pos;
        if !matches!(self.peek(), Some(b) if b.is_ascii_alphabetic()) {
            return Err(self.err("expected a generator name".into()));
        }
        while matches!(self.peek(), Some(b) if b.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Ok(core::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parses the documented polynomial syntax against a generator label list.
pub fn parse_poly(text: &str, labels: &[String]) -> Result<NcPoly, PolyParseError> {
    let map: BTreeMap<&str, u16> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i as u16))
        .collect();
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut terms: Vec<(Word, Rat)> = Vec::new();

    lx.skip_ws();
    if lx.peek().is_none() {
        return Err(lx.err("empty input".into()));
    }
    let mut negative = if lx.eat(b'-') {
        true
    } else {
        lx.eat(b'+');
        false
    };
    loop {
        lx.skip_ws();
        let (word, coeff) = parse_term(&mut lx, &map)?;
        terms.push((word, if negative { -coeff } else { coeff }));
        lx.skip_ws();
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(_) => return Err(lx.err("expected '+', '-', or end of input".into())),
        }
    }
    Ok(NcPoly::from_terms(terms))
}

fn parse_term(
    lx: &mut Lexer<'_>,
    map: &BTreeMap<&str, u16>,
) -> Result<(Word, Rat), PolyParseError> {
    let mut coeff = Rat::one();
    let mut gens: Vec<GenId> = Vec::new();
    let leading_number = matches!(lx.peek(), Some(b) if b.is_ascii_digit());
    if leading_number {
        let num = lx.nat()?;
        let den = if lx.eat(b'/') {
            let d = lx.nat()?;
            if d.is_zero() {
                return Err(lx.err("zero denominator".into()));
            }
            d
        } else {
            BigInt::one()
        };
        coeff = Rat::new(num, den);
    } else {
        gens.push(parse_factor(lx, map)?);
    }
    loop {
        lx.skip_ws();
        if !lx.eat(b'*') {
            break;
        }
        lx.skip_ws();
        gens.push(parse_factor(lx, map)?);
    }
    Ok((Word::from_ids(gens), coeff))
}

fn parse_factor(
    lx: &mut Lexer<'_>,
    map: &BTreeMap<&str, u16>,
) -> Result<GenId, PolyParseError> {
    let at = lx.pos;
    let name = lx.name()?;
    let label = if lx.peek() == Some(b'[') {
        lx.pos += 1;
        lx.skip_ws();
        let i = lx.nat()?;
        lx.skip_ws();
        lx.expect(b',')?;
        lx.skip_ws();
        let j = lx.nat()?;
        lx.skip_ws();
        lx.expect(b']')?;
        format!("{}[{},{}]", name, i, j)
    } else {
        String::from(name)
    };
    match map.get(label.as_str()) {
        Some(&idx) => Ok(GenId(idx)),
        None => Err(PolyParseError { pos: at, msg: format!("unknown generator `{}`", label) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn labels() -> Vec<String> {
        let mut v = Vec::new();
        for i in 1..=2u16 {
            for j in 1..=2u16 {
                v.push(format!("X[{},{}]", i, j));
            }
        }
        v.push("y3".to_string());
        v
    }

    #[test]
    fn parses_examples() {
        let ls = labels();
        let p = parse_poly("3/2*X[1,2]*X[2,1] + 1", &ls).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.display(&ls).to_string(), "3/2*X[1,2]*X[2,1] + 1");

        let q = parse_poly("y3", &ls).unwrap();
        assert_eq!(q.display(&ls).to_string(), "y3");

        let z = parse_poly("0", &ls).unwrap();
        assert!(z.is_zero());

        let r = parse_poly(" - X[1,1] + X[1,1] ", &ls).unwrap();
        assert!(r.is_zero());

        let s = parse_poly("X[ 1 , 2 ]*y3 - 2", &ls).unwrap();
        assert_eq!(s.display(&ls).to_string(), "X[1,2]*y3 - 2");
    }

    #[test]
    fn rejects_garbage() {
        let ls = labels();
        for bad in ["", "X[3,1]", "X[1,2] X[1,1]", "1/0", "&", "X[1", "2*", "X[1,2]*"] {
            assert!(parse_poly(bad, &ls).is_err(), "should reject {:?}", bad);
        }
    }

    #[test]
    fn display_signs() {
        let ls = labels();
        let p = parse_poly("-X[1,1] - 1/2", &ls).unwrap();
        assert_eq!(p.display(&ls).to_string(), "-X[1,1] - 1/2");
        let back = parse_poly("-X[1,1] - 1/2", &ls).unwrap();
        assert_eq!(p, back);
    }
}
