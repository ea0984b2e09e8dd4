//! Text notation for diagram elements.
//!
//! * partial injection: `[2,-,3,5,-]` (1 ↦ 2, 2 undefined, ...)
//! * set partition: `{1,2,1'}|{3,2',3'}`, the empty partition is `{}`
//! * the adjoined zero of the hat carrier: `0`
//!
//! Formatting goes through the `Display` impls in [`crate::diagrams`]; parsing
//! accepts exactly what they print, plus insignificant whitespace.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagrams::{
    is_dual_element, is_partial_dual_element, BoundaryPoint, HatElement, PartialInjection,
    SetPartition,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at column {position}: {message}")]
pub struct ParseError {
    /// 0-based character offset into the input.
    pub position: usize,
    pub message: String,
}

/// Which semigroup an element is read as.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `IS_n`.
    Is,
    /// `I*_k`.
    Istar,
    /// `PI*_k` with the break-down product.
    Pistar,
    /// `PI*_k ∪ {0}` with the ⋆ product.
    Hat,
    /// `PI*_k` with the • product.
    Tilde,
    /// The composition semigroup `C_k` (partial input is completed with singletons).
    Composition,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Is => "is",
            Family::Istar => "istar",
            Family::Pistar => "pistar",
            Family::Hat => "hat",
            Family::Tilde => "tilde",
            Family::Composition => "composition",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "is" => Ok(Family::Is),
            "istar" => Ok(Family::Istar),
            "pistar" => Ok(Family::Pistar),
            "hat" => Ok(Family::Hat),
            "tilde" => Ok(Family::Tilde),
            "composition" | "ck" => Ok(Family::Composition),
            other => Err(format!("unknown semigroup `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    Injection(PartialInjection),
    Partition(SetPartition),
    Hat(HatElement),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Injection(x) => x.fmt(f),
            Element::Partition(x) => x.fmt(f),
            Element::Hat(x) => x.fmt(f),
        }
    }
}

/// Parses `text` as an element of `family`; `ambient` is `n` for `IS_n` and
/// `k` for the diagram families.
pub fn parse_element(text: &str, family: Family, ambient: usize) -> Result<Element> {
    match family {
        Family::Is => parse_injection(text, ambient).map(Element::Injection),
        Family::Istar => {
            let p = parse_partition(text, ambient)?;
            if is_dual_element(&p) {
                Ok(Element::Partition(p))
            } else {
                Err(Error::WrongFamily {
                    element: p.to_string(),
                    family: "I*_k",
                })
            }
        }
        Family::Pistar | Family::Tilde => {
            let p = parse_partition(text, ambient)?;
            if is_partial_dual_element(&p) {
                Ok(Element::Partition(p))
            } else {
                Err(Error::WrongFamily {
                    element: p.to_string(),
                    family: "PI*_k",
                })
            }
        }
        Family::Hat => parse_hat(text, ambient).map(Element::Hat),
        Family::Composition => {
            parse_partition(text, ambient).map(|p| Element::Partition(p.completed()))
        }
    }
}

pub fn parse_injection(text: &str, n: usize) -> Result<PartialInjection> {
    let mut cur = Cursor::new(text);
    cur.expect('[')?;
    let mut images = Vec::new();
    loop {
        cur.skip_ws();
        if cur.peek() == Some('-') {
            cur.bump();
            images.push(None);
        } else {
            images.push(Some(cur.number()?));
        }
        cur.skip_ws();
        match cur.peek() {
            Some(',') => cur.bump(),
            Some(']') => {
                cur.bump();
                break;
            }
            _ => return Err(cur.error("expected `,` or `]`").into()),
        }
    }
    cur.end()?;
    if images.len() != n {
        return Err(Error::SizeMismatch {
            left: images.len(),
            right: n,
        });
    }
    PartialInjection::new(images)
}

pub fn parse_partition(text: &str, k: usize) -> Result<SetPartition> {
    let mut cur = Cursor::new(text);
    let mut blocks = Vec::new();
    cur.skip_ws();
    let empty_start = cur.clone();
    cur.expect('{')?;
    cur.skip_ws();
    if cur.peek() == Some('}') {
        cur.bump();
        cur.end()?;
        return SetPartition::new(k, blocks);
    }
    cur = empty_start;
    loop {
        cur.expect('{')?;
        let mut block = Vec::new();
        loop {
            cur.skip_ws();
            let at = cur.pos;
            let index = cur.number()?;
            let point = if cur.peek() == Some('\'') {
                cur.bump();
                BoundaryPoint::bottom(index)
            } else {
                BoundaryPoint::top(index)
            };
            if index == 0 || index > k {
                return Err(ParseError {
                    position: at,
                    message: format!("point {point} out of range for k = {k}"),
                }
                .into());
            }
            block.push(point);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => cur.bump(),
                Some('}') => {
                    cur.bump();
                    break;
                }
                _ => return Err(cur.error("expected `,` or `}`").into()),
            }
        }
        blocks.push(block);
        cur.skip_ws();
        match cur.peek() {
            Some('|') => {
                cur.bump();
                cur.skip_ws();
            }
            None => break,
            _ => return Err(cur.error("expected `|` or end of input").into()),
        }
    }
    SetPartition::new(k, blocks)
}

pub fn parse_hat(text: &str, k: usize) -> Result<HatElement> {
    if text.trim() == "0" {
        return Ok(HatElement::Zero);
    }
    HatElement::diagram(parse_partition(text, k)?)
}

#[derive(Clone)]
struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> ParseError {
        let found = match self.peek() {
            Some(c) => format!("found `{c}`"),
            None => "found end of input".to_string(),
        };
        ParseError {
            position: self.pos,
            message: format!("{message}, {found}"),
        }
    }

    fn expect(&mut self, c: char) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn number(&mut self) -> std::result::Result<usize, ParseError> {
        let start = self.pos;
        let mut value: usize = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or(ParseError {
                    position: start,
                    message: "number too large".into(),
                })?;
            digits += 1;
            self.bump();
        }
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        Ok(value)
    }

    fn end(&mut self) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(self.error("unexpected trailing input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injection_round_trip() {
        let x = parse_injection("[2,-,3,5,-]", 5).unwrap();
        assert_eq!(x.apply(1), Some(2));
        assert_eq!(x.apply(2), None);
        assert_eq!(x.apply(4), Some(5));
        assert_eq!(x.to_string(), "[2,-,3,5,-]");
        assert_eq!(
            parse_injection(" [ 1 , - ] ", 2).unwrap().to_string(),
            "[1,-]"
        );
    }

    #[test]
    fn injection_errors() {
        assert!(matches!(
            parse_injection("[1,1]", 2),
            Err(Error::NotInjective(1))
        ));
        assert!(matches!(
            parse_injection("[1,2]", 3),
            Err(Error::SizeMismatch { .. })
        ));
        match parse_injection("[1;2]", 2) {
            Err(Error::Parse(e)) => assert_eq!(e.position, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_injection("[3,-]", 2),
            Err(Error::TargetOutOfRange { .. })
        ));
    }

    #[test]
    fn partition_round_trip() {
        let p = parse_partition("{1,2,1'}|{3,2',3'}", 3).unwrap();
        assert_eq!(p.block_count(), 2);
        assert_eq!(p.to_string(), "{1,2,1'}|{3,2',3'}");
        assert!(parse_partition("{}", 2).unwrap().is_empty());
        assert_eq!(
            parse_partition("{2',2} | {1',1}", 2).unwrap().to_string(),
            "{1,1'}|{2,2'}"
        );
    }

    #[test]
    fn partition_errors() {
        match parse_partition("{1,3'}", 2) {
            Err(Error::Parse(e)) => assert_eq!(e.position, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_partition("{1}|{1'}x", 2),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_partition("{1,1}", 2),
            Err(Error::DuplicatePoint(_))
        ));
        assert!(matches!(parse_partition("{1,}", 2), Err(Error::Parse(_))));
    }

    #[test]
    fn family_validation() {
        let id = parse_element("{1,1'}|{2,2'}", Family::Istar, 2).unwrap();
        assert_eq!(id, Element::Partition(SetPartition::identity(2)));
        assert!(matches!(
            parse_element("{1,2}", Family::Istar, 2),
            Err(Error::WrongFamily { .. })
        ));
        assert!(matches!(
            parse_element("{1,2}|{1',2'}", Family::Pistar, 2),
            Err(Error::WrongFamily { .. })
        ));
        assert_eq!(
            parse_element("0", Family::Hat, 2).unwrap(),
            Element::Hat(HatElement::Zero)
        );
        assert_eq!(
            parse_element("{1,1'}", Family::Composition, 2)
                .unwrap()
                .to_string(),
            "{1,1'}|{2}|{2'}"
        );
    }
}
