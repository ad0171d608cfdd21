//! Canonical text and JSON forms of [`MPoly`].
//!
//! Text: `2*x3*y3 + x2^2 - 1/2*q1`, terms in canonical monomial order.
//! JSON: `{"terms":[{"m":{"x3":1,"y3":1},"c":"2"}]}`, same order, variable
//! keys in `x < y < q` then index order, coefficients as decimal strings.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::Monomial;
use super::mpoly::{Coeff, MPoly};
use super::var::VarId;
use crate::error::{Error, Result};

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MPoly> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("trailing input"));
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
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

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn sum(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero();
        let mut neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let t = self.product()?;
            acc = if neg { &acc - &t } else { &acc + &t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            self.digits()?.parse().map_err(|_| self.err("bad exponent"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?.to_owned();
                let text = if self.eat(b'/') {
                    format!("{num}/{}", self.digits()?)
                } else {
                    num
                };
                let c: Coeff = text.parse().map_err(|_| self.err("bad number"))?;
                Ok(MPoly::constant(c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                let idx = self.digits()?;
                let v: VarId = format!("{}{}", c as char, idx).parse()?;
                let e = self.exponent()?;
                Ok(MPoly::term(Monomial::pow_of(v, e), Coeff::one()))
            }
            _ => Err(self.err("expected a number, variable or `(`")),
        }
    }
}

struct MonoJson<'a>(&'a Monomial);

impl Serialize for MonoJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (v, e) in self.0.iter() {
            map.serialize_entry(&v.to_string(), &e)?;
        }
        map.end()
    }
}

struct TermJson<'a>(&'a Monomial, &'a Coeff);

impl Serialize for TermJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("m", &MonoJson(self.0))?;
        st.serialize_field("c", &self.1.to_string())?;
        st.end()
    }
}

struct TermsJson<'a>(&'a MPoly);

impl Serialize for TermsJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for (m, c) in self.0.terms() {
            seq.serialize_element(&TermJson(m, c))?;
        }
        seq.end()
    }
}

impl Serialize for MPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MPoly", 1)?;
        st.serialize_field("terms", &TermsJson(self))?;
        st.end()
    }
}

#[derive(Deserialize)]
struct RawTerm {
    m: BTreeMap<String, u32>,
    c: String,
}

#[derive(Deserialize)]
struct RawPoly {
    terms: Vec<RawTerm>,
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPoly::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let mut pairs = Vec::with_capacity(t.m.len());
            for (k, e) in t.m {
                let v: VarId = k.parse().map_err(D::Error::custom)?;
                if e == 0 {
                    return Err(D::Error::custom(format!("zero exponent for {v}")));
                }
                pairs.push((v, e));
            }
            let c: Coeff = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{}`", t.c)))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient"));
            }
            terms.push((Monomial::from_pairs(pairs), c));
        }
        Ok(MPoly::from_terms(terms))
    }
}

impl MPoly {
    /// Canonical single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<MPoly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let p: MPoly = "y2*y3 + 2*x3*y3 + x2*y3 + x3*y2 + x2*x3".parse().unwrap();
        assert_eq!(p.to_string(), "x2*x3 + x2*y3 + x3*y2 + 2*x3*y3 + y2*y3");
        let q: MPoly = "-(1 + q1)^2*x2 + 3/2".parse().unwrap();
        assert_eq!(q.to_string(), "-x2*q1^2 - 2*x2*q1 - x2 + 3/2");
        assert_eq!(MPoly::zero().to_string(), "0");
        assert!("x1 +".parse::<MPoly>().is_err());
        assert!("x0".parse::<MPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let p: MPoly = "2*x3*y3 - 1/3".parse().unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"terms":[{"m":{"x3":1,"y3":1},"c":"2"},{"m":{},"c":"-1/3"}]}"#
        );
        assert_eq!(MPoly::from_json(&p.to_json()).unwrap(), p);
        assert!(MPoly::from_json(r#"{"terms":[{"m":{"x1":0},"c":"1"}]}"#).is_err());
    }
}
