//! Text forms: a bare generator list `7,15`, or the printed form
//! `<gens=7,15; F=83; m=7; g=42>` (only `gens` is read).

use std::str::FromStr;

use super::NumericalSemigroup;
use crate::error::{Error, Result};

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn parse_generator_list(text: &str, offset: usize) -> Result<Vec<u32>> {
    let mut gens = Vec::new();
    let mut pos = offset;
    for field in text.split(',') {
        let trimmed = field.trim();
        if trimmed.is_empty() {
            return Err(syntax(pos, "expected a generator"));
        }
        let value: i64 = trimmed
            .parse()
            .map_err(|_| syntax(pos, format!("invalid integer {trimmed:?}")))?;
        if value <= 0 {
            return Err(Error::NonPositiveGenerator(value));
        }
        let value = u32::try_from(value).map_err(|_| Error::TooLarge(super::MAX_CONDUCTOR))?;
        gens.push(value);
        pos += field.len() + 1;
    }
    Ok(gens)
}

impl FromStr for NumericalSemigroup {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let gens = if let Some(inner) = text.strip_prefix('<') {
            let inner = inner
                .strip_suffix('>')
                .ok_or_else(|| syntax(text.len(), "missing closing '>'"))?;
            let first = inner.split(';').next().unwrap_or_default();
            let list = first
                .trim()
                .strip_prefix("gens=")
                .ok_or_else(|| syntax(1, "expected 'gens='"))?;
            parse_generator_list(list, 6)?
        } else {
            parse_generator_list(text, 0)?
        };
        NumericalSemigroup::from_generators(&gens)
    }
}
