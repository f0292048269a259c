//! Text form of monoid-algebra elements.
//!
//! ```text
//! expr    := ['-'] term (('+' | '-') term)*
//! term    := factor (['*'] factor)*
//! factor  := INT | VAR ['^' INT] | '[' INT (',' INT)* ']' | 'X' ['^' key]
//! key     := ['-'] INT | '(' ['-'] INT (',' ['-'] INT)* ')'
//! ```
//!
//! `VAR` is a lowercase variable of a truncated polynomial ring, the
//! bracketed form gives raw additive coordinates, and `X^key` names the
//! monoid basis element (`X` alone is `X^1`). Whitespace is ignored.

use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::monoidring::{MonoidRing, MrElem};
use crate::monoids::{MonoidElem, MonoidKind};

pub fn render(b: &MonoidRing, f: &MrElem) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let ring = b.ring();
    let monoid = b.monoid();
    let identity = monoid.identity();
    let mut out = Vec::new();
    for (k, c) in f.terms() {
        let parts: Vec<String> = if ring.basis_names().is_some() {
            ring.basis_parts(*c)
                .into_iter()
                .map(|(i, m)| ring.fmt_part(i, m))
                .collect()
        } else {
            vec![ring.fmt_elem(*c)]
        };
        for p in parts {
            if *k == identity {
                out.push(p);
            } else if p == "1" {
                out.push(format!("X^{}", monoid.fmt_elem(k)));
            } else {
                out.push(format!("{p}*X^{}", monoid.fmt_elem(k)));
            }
        }
    }
    out.join(" + ")
}

pub fn parse(b: &MonoidRing, text: &str) -> Result<MrElem> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { b, s: &chars, pos: 0 };
    let f = p.expr()?;
    if p.pos != chars.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    b: &'a MonoidRing,
    s: &'a [char],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn expr(&mut self) -> Result<MrElem> {
        if self.s.is_empty() {
            return Err(self.err("empty expression"));
        }
        let mut negate = self.eat('-');
        let mut acc = self.b.zero();
        loop {
            let t = self.term()?;
            let t = if negate { self.b.neg(&t) } else { t };
            acc = self.b.add(&acc, &t);
            if self.eat('+') {
                negate = false;
            } else if self.eat('-') {
                negate = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MrElem> {
        let ring = self.b.ring();
        let monoid = self.b.monoid();
        let mut coeff = ring.one();
        let mut key = monoid.identity();
        let mut factors = 0;
        loop {
            match self.peek() {
                Some('X') => {
                    self.pos += 1;
                    let k = if self.eat('^') { self.key()? } else { self.unit_key()? };
                    key = monoid.combine(&key, &k);
                }
                Some(c) if c.is_ascii_digit() => {
                    let n = self.int()?;
                    coeff = ring.mul(coeff, ring.from_int(n));
                }
                Some('[') => {
                    let v = self.vector()?;
                    coeff = ring.mul(coeff, v);
                }
                Some(c) if c.is_ascii_lowercase() => {
                    let v = self.var()?;
                    coeff = ring.mul(coeff, v);
                }
                _ if factors == 0 => return Err(self.err("expected a term")),
                _ => return Err(self.err("expected a factor after '*'")),
            }
            factors += 1;
            if self.eat('*') {
                continue;
            }
            match self.peek() {
                Some(c) if c == 'X' || c == '[' || c.is_ascii_alphanumeric() => continue,
                _ => break,
            }
        }
        Ok(self.b.monomial(coeff, key))
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let digits: String = self.s[start..self.pos].iter().collect();
        digits.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "integer out of range".into(),
        })
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let n = self.int()?;
        Ok(if neg { -n } else { n })
    }

    fn var(&mut self) -> Result<Elem> {
        let ring = self.b.ring();
        let name = self.s[self.pos].to_string();
        let start = self.pos;
        self.pos += 1;
        let base = ring
            .basis_names()
            .and_then(|names| names.iter().position(|n| *n == name))
            .map(|i| ring.basis_elem(i))
            .ok_or(Error::Parse {
                pos: start,
                msg: format!("unknown variable '{name}' for {ring}"),
            })?;
        let exp = if self.eat('^') { self.int()? } else { 1 };
        Ok(ring.pow(base, exp as u64))
    }

    fn vector(&mut self) -> Result<Elem> {
        let ring = self.b.ring();
        self.expect('[')?;
        let mut v = vec![self.signed_int()?];
        while self.eat(',') {
            v.push(self.signed_int()?);
        }
        self.expect(']')?;
        if v.len() != ring.dims().len() {
            return Err(self.err(format!(
                "{ring} has {} coordinates, got {}",
                ring.dims().len(),
                v.len()
            )));
        }
        Ok(ring.from_coords(&v))
    }

    fn unit_key(&self) -> Result<MonoidElem> {
        let m = self.b.monoid();
        match m.kind() {
            MonoidKind::Table { .. } => self.canonical_key(vec![1]),
            _ if m.dim() == 1 => self.canonical_key(vec![1]),
            _ => Err(self.err("bare X needs an exponent vector in a multi-generator monoid")),
        }
    }

    fn key(&mut self) -> Result<MonoidElem> {
        let coords = if self.eat('(') {
            let mut v = vec![self.signed_int()?];
            while self.eat(',') {
                v.push(self.signed_int()?);
            }
            self.expect(')')?;
            v
        } else {
            vec![self.signed_int()?]
        };
        self.canonical_key(coords)
    }

    fn canonical_key(&self, coords: Vec<i64>) -> Result<MonoidElem> {
        let m = self.b.monoid();
        if coords.len() != m.dim() {
            return Err(self.err(format!(
                "{} expects exponents with {} coordinates",
                m,
                m.dim()
            )));
        }
        let mut reduced = Vec::with_capacity(coords.len());
        for (i, &c) in coords.iter().enumerate() {
            let c = match m.kind() {
                MonoidKind::Group { free_rank, torsion } if i >= *free_rank => {
                    c.rem_euclid(torsion[i - free_rank] as i64)
                }
                _ => c,
            };
            reduced.push(i32::try_from(c).map_err(|_| self.err("exponent out of range"))?);
        }
        let key = MonoidElem::new(&reduced);
        if !m.is_canonical(&key) {
            return Err(self.err(format!("exponent {} is not in {m}", m.fmt_elem(&key))));
        }
        Ok(key)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::finring::FiniteRing;
    use crate::monoids::Monoid;

    fn b(ring: FiniteRing, monoid: Monoid) -> MonoidRing {
        MonoidRing::new(Arc::new(ring), Arc::new(monoid))
    }

    #[test]
    fn roundtrip_truncated_poly() {
        let b = b(FiniteRing::trunc_poly(2, 2, 3).unwrap(), Monoid::free(1));
        let f = b.parse("a + b*X^1").unwrap();
        assert_eq!(render(&b, &f), "a + b*X^1");
        let g = b.parse("(1+a)").err();
        assert!(g.is_some());
        let h = b.parse("1 + a + a^2*X^2 + ab X").unwrap();
        assert_eq!(render(&b, &h), "1 + a + ab*X^1 + a^2*X^2");
        assert_eq!(b.parse(&render(&b, &h)).unwrap(), h);
    }

    #[test]
    fn integer_coefficients_and_signs() {
        let b = b(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        let f = b.parse("X^1 - X^2").unwrap();
        assert_eq!(render(&b, &f), "X^1 + 3*X^2");
        assert_eq!(b.parse("2 + 2X").unwrap(), b.parse("2*X^0+2*X^1").unwrap());
        assert!(b.parse("2 + 2 + 4X").unwrap().is_zero());
        assert_eq!(render(&b, &b.zero()), "0");
        assert!(b.parse("-1").is_ok());
    }

    #[test]
    fn monoid_keys() {
        let z2 = b(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap());
        assert_eq!(z2.parse("X^3").unwrap(), z2.parse("X").unwrap());
        let n2 = b(FiniteRing::zmod(3).unwrap(), Monoid::free(2));
        let f = n2.parse("2*X^(1,0) + X^(0,2)").unwrap();
        assert_eq!(render(&n2, &f), "X^(0,2) + 2*X^(1,0)");
        assert!(n2.parse("X").is_err());
        assert!(n2.parse("X^(-1,0)").is_err());
        let z = b(FiniteRing::zmod(3).unwrap(), Monoid::group(1, vec![]).unwrap());
        assert_eq!(render(&z, &z.parse("X^-1").unwrap()), "X^-1");
    }

    #[test]
    fn raw_coordinates() {
        let f2 = Arc::new(FiniteRing::zmod(2).unwrap());
        let f3 = Arc::new(FiniteRing::zmod(3).unwrap());
        let r = FiniteRing::product(&[f2, f3]).unwrap();
        let b = b(r, Monoid::free(1));
        let f = b.parse("[1,2]*X").unwrap();
        assert_eq!(b.parse(&render(&b, &f)).unwrap(), f);
        assert!(b.parse("[1]").is_err());
    }

    #[test]
    fn errors_carry_position() {
        let b = b(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        match b.parse("1 + + X") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(b.parse("").is_err());
        assert!(b.parse("y").is_err());
    }
}
