//! Polynomial lists: ascending integer coefficients, one polynomial per
//! line, `#` starts a comment.

use num_bigint::BigInt;
use salem_core::IntPoly;

use crate::error::CliError;

/// Parses one coefficient list. `None` for a blank or comment-only line.
pub fn parse_line(line: &str) -> Result<Option<IntPoly>, String> {
    let body = line.split('#').next().unwrap_or("");
    let words: Vec<&str> = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|w| !w.is_empty())
        .collect();
    if words.is_empty() {
        return Ok(None);
    }
    let coeffs = words
        .iter()
        .map(|w| w.parse::<BigInt>().map_err(|_| format!("'{w}' is not an integer")))
        .collect::<Result<Vec<_>, _>>()?;
    let poly = IntPoly::new(coeffs);
    if poly.is_zero() {
        return Err("zero polynomial".into());
    }
    Ok(Some(poly))
}

/// All polynomials in `text`, in order. Errors name the 1-based line.
pub fn parse_list(text: &str) -> Result<Vec<IntPoly>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_line(line) {
            Ok(Some(p)) => out.push(p),
            Ok(None) => {}
            Err(msg) => return Err(CliError::Parse(format!("line {}: {msg}", i + 1))),
        }
    }
    Ok(out)
}

pub fn parse_inline(text: &str) -> Result<IntPoly, CliError> {
    match parse_line(text) {
        Ok(Some(p)) => Ok(p),
        Ok(None) => Err(CliError::Parse("no coefficients given".into())),
        Err(msg) => Err(CliError::Parse(msg)),
    }
}
