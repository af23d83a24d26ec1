//! Pattern text forms.
//!
//! Symbolic: `pattern := ["-"] term (("+"|"-") term)*`,
//! `term := [coeff] "x" index`, with positive decimal `coeff` (default 1)
//! and positive decimal `index`. Terms may appear in any order but every
//! `x1..xn` must occur exactly once. `0` is the zero pattern.
//!
//! Vector: comma-separated signed integers, e.g. `1,1,-1`.

use std::collections::BTreeMap;
use std::str::FromStr;

use super::Pattern;
use crate::error::{Error, Result};

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            None
        } else {
            // ASCII digits are valid UTF-8
            Some((
                start,
                std::str::from_utf8(&self.bytes[start..self.pos]).unwrap(),
            ))
        }
    }
}

fn parse_symbolic(text: &str) -> Result<Pattern> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut terms: BTreeMap<usize, i64> = BTreeMap::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            Some(b'+') if !first => {
                cur.pos += 1;
                false
            }
            Some(_) if first => false,
            Some(_) => return Err(syntax(cur.pos, "expected '+' or '-'")),
            None if first => return Err(syntax(cur.pos, "empty pattern")),
            None => break,
        };
        first = false;
        let magnitude: i64 = match cur.digits() {
            Some((at, d)) => d
                .parse()
                .map_err(|_| syntax(at, "coefficient out of range"))?,
            None => 1,
        };
        if cur.peek() != Some(b'x') {
            return Err(syntax(cur.pos, "expected 'x'"));
        }
        cur.pos += 1;
        if cur.bytes.get(cur.pos).is_some_and(u8::is_ascii_whitespace) {
            return Err(syntax(cur.pos, "expected a variable index right after 'x'"));
        }
        let (at, d) = cur
            .digits()
            .ok_or_else(|| syntax(cur.pos, "expected a variable index"))?;
        let index: usize = d.parse().map_err(|_| syntax(at, "index out of range"))?;
        if index == 0 {
            return Err(syntax(at, "variable indices start at 1"));
        }
        if magnitude == 0 {
            return Err(Error::ZeroCoefficient(index));
        }
        if terms
            .insert(index, if negative { -magnitude } else { magnitude })
            .is_some()
        {
            return Err(Error::DuplicateVariable(index));
        }
    }
    // BTreeMap iterates in index order; the first index that is not its
    // position is the smallest missing variable
    for (pos, &index) in terms.keys().enumerate() {
        if index != pos + 1 {
            return Err(Error::MissingVariable(pos + 1));
        }
    }
    Ok(Pattern {
        coeffs: terms.into_values().collect(),
    })
}

fn parse_vector(text: &str) -> Result<Pattern> {
    let mut coeffs = Vec::new();
    let mut pos = 0;
    for field in text.split(',') {
        let t = field.trim();
        let value: i64 = t
            .parse()
            .map_err(|_| syntax(pos, format!("invalid coefficient {t:?}")))?;
        coeffs.push(value);
        pos += field.len() + 1;
    }
    Pattern::new(coeffs)
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed == "0" {
            Ok(Pattern::zero())
        } else if trimmed.contains('x') {
            parse_symbolic(trimmed)
        } else if trimmed.is_empty() {
            Err(syntax(0, "empty pattern"))
        } else {
            parse_vector(trimmed)
        }
    }
}
