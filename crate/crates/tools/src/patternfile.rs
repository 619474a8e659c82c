//! The one-pattern-per-line text format: `x=<bits> y=<bits>`.
//!
//! Whitespace around `=` and between fields is ignored, as are blank lines
//! and lines starting with `#`.

use hitomezashi_core::{Error as CoreError, FriezePattern};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: expected `x=<bits> y=<bits>`")]
    Syntax { line: usize },
    #[error("line {line}: {source}")]
    Pattern { line: usize, source: CoreError },
}

/// Parses a single `x=… y=…` record.
pub fn parse_line(text: &str) -> Result<FriezePattern, ParseError> {
    parse_record(text, 1)
}

fn parse_record(text: &str, line: usize) -> Result<FriezePattern, ParseError> {
    let syntax = || ParseError::Syntax { line };
    // collapse spaces around '=' so that "x = 01" and "x=01" read alike
    let compact: String = text.split('=').map(str::trim).collect::<Vec<_>>().join("=");
    let mut x = None;
    let mut y = None;
    for field in compact.split_whitespace() {
        let (key, value) = field.split_once('=').ok_or_else(syntax)?;
        let slot = match key {
            "x" => &mut x,
            "y" => &mut y,
            _ => return Err(syntax()),
        };
        if slot.replace(value).is_some() {
            return Err(syntax());
        }
    }
    let (x, y) = x.zip(y).ok_or_else(syntax)?;
    FriezePattern::parse(x, y).map_err(|source| ParseError::Pattern { line, source })
}

/// Parses every record in a file's contents.
pub fn parse_patterns(text: &str) -> Result<Vec<FriezePattern>, ParseError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let l = l.trim();
            !l.is_empty() && !l.starts_with('#')
        })
        .map(|(k, l)| parse_record(l, k + 1))
        .collect()
}

/// Formats a pattern as a record; the inverse of [`parse_line`].
pub fn format_line(p: &FriezePattern) -> String {
    p.to_string()
}
