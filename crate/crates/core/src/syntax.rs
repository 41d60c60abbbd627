//! Line-oriented statement splitting shared by the three input languages.
//!
//! Every language uses one statement per line, terminated by `.`, with `#`
//! starting a comment that runs to the end of the line.

use crate::error::{Error, Result};

/// A statement body with its 1-based source line, terminator stripped.
pub(crate) struct RawStatement<'a> {
    pub line: usize,
    pub text: &'a str,
}

pub(crate) fn statements(text: &str) -> Result<Vec<RawStatement<'_>>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let code = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let code = code.trim();
        if code.is_empty() {
            continue;
        }
        let Some(body) = code.strip_suffix('.') else {
            return Err(Error::parse(line, "statement must end with `.`"));
        };
        out.push(RawStatement {
            line,
            text: body.trim(),
        });
    }
    Ok(out)
}

/// Splits `keyword rest` on the first run of whitespace.
pub(crate) fn keyword(text: &str) -> (&str, &str) {
    match text.find(|c: char| c.is_whitespace() || c == '(') {
        Some(pos) => (&text[..pos], text[pos..].trim_start()),
        None => (text, ""),
    }
}

/// Strips comments and all whitespace; two texts that normalize equally
/// carry the same statements in the same order.
pub fn normalize(text: &str) -> String {
    text.lines()
        .map(|l| match l.find('#') {
            Some(pos) => &l[..pos],
            None => l,
        })
        .flat_map(|l| l.chars().filter(|c| !c.is_whitespace()))
        .collect()
}
