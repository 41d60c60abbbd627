use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// A propositional literal: an atom, possibly negated with `~`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: String,
    pub negated: bool,
}

impl Literal {
    pub fn positive(atom: impl Into<String>) -> Self {
        Literal {
            atom: atom.into(),
            negated: false,
        }
    }

    pub fn negative(atom: impl Into<String>) -> Self {
        Literal {
            atom: atom.into(),
            negated: true,
        }
    }

    pub fn complement(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~{}", self.atom)
        } else {
            f.write_str(&self.atom)
        }
    }
}

impl FromStr for Literal {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (negated, atom) = match s.strip_prefix('~') {
            Some(rest) => (true, rest.trim()),
            None => (false, s),
        };
        if !is_identifier(atom) {
            return Err(format!("`{s}` is not a literal"));
        }
        Ok(Literal {
            atom: atom.to_string(),
            negated,
        })
    }
}

impl Serialize for Literal {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What an argument (or a rule head) concludes: a literal, or that a
/// named defeasible rule does not apply.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Conclusion {
    Literal(Literal),
    Undercut(String),
}

impl Conclusion {
    pub fn literal(&self) -> Option<&Literal> {
        match self {
            Conclusion::Literal(lit) => Some(lit),
            Conclusion::Undercut(_) => None,
        }
    }
}

impl From<Literal> for Conclusion {
    fn from(lit: Literal) -> Self {
        Conclusion::Literal(lit)
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Literal(lit) => lit.fmt(f),
            Conclusion::Undercut(rule) => write!(f, "!{rule}"),
        }
    }
}

impl FromStr for Conclusion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        match s.strip_prefix('!') {
            Some(rule) => {
                let rule = rule.trim();
                if is_identifier(rule) {
                    Ok(Conclusion::Undercut(rule.to_string()))
                } else {
                    Err(format!("`{s}` does not name a rule"))
                }
            }
            None => s.parse().map(Conclusion::Literal),
        }
    }
}

impl Serialize for Conclusion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

pub(crate) fn parse_literal(line: usize, s: &str) -> Result<Literal, Error> {
    s.parse().map_err(|msg| Error::parse(line, msg))
}
