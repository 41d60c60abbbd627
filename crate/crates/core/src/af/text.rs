//! Framework text format.
//!
//! ```text
//! # reinstatement chain
//! arg(A).
//! arg(B).
//! arg(C).
//! att(B, A).
//! att(C, B).
//! conc(A, flies).
//! ```
//!
//! One statement per line. Argument names are ASCII identifiers, optionally
//! using `~ [ ] + ' -` so that compiled argument names (`r1[bird]`) can be
//! written back. Conclusions are literals (`~` for negation) or `!rule` for
//! undercutting arguments.

use std::collections::BTreeSet;
use std::fmt;

use super::{ArgId, Framework};
use crate::error::{Error, Result};
use crate::literal::Conclusion;
use crate::syntax::{self, keyword};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameworkStatement {
    Arg(ArgId),
    Att(ArgId, ArgId),
    Sub(ArgId, ArgId),
    Conc(ArgId, Conclusion),
}

impl fmt::Display for FrameworkStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameworkStatement::Arg(a) => write!(f, "arg({a})."),
            FrameworkStatement::Att(a, b) => write!(f, "att({a}, {b})."),
            FrameworkStatement::Sub(c, p) => write!(f, "sub({c}, {p})."),
            FrameworkStatement::Conc(a, c) => write!(f, "conc({a}, {c})."),
        }
    }
}

pub(crate) fn is_arg_name(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b"_~[]+'-".contains(&b))
}

fn name(line: usize, s: &str) -> Result<ArgId> {
    let s = s.trim();
    if is_arg_name(s) {
        Ok(ArgId::new(s))
    } else {
        Err(Error::parse(line, format!("`{s}` is not an argument name")))
    }
}

fn pair(line: usize, s: &str) -> Result<(&str, &str)> {
    s.split_once(',')
        .ok_or_else(|| Error::parse(line, "expected two comma-separated arguments"))
}

fn parse_statement(line: usize, text: &str) -> Result<FrameworkStatement> {
    let (kw, rest) = keyword(text);
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line, format!("expected `{kw}(...)`")))?;
    match kw {
        "arg" => Ok(FrameworkStatement::Arg(name(line, inner)?)),
        "att" => {
            let (a, b) = pair(line, inner)?;
            Ok(FrameworkStatement::Att(name(line, a)?, name(line, b)?))
        }
        "sub" => {
            let (c, p) = pair(line, inner)?;
            Ok(FrameworkStatement::Sub(name(line, c)?, name(line, p)?))
        }
        "conc" => {
            let (a, c) = pair(line, inner)?;
            let conclusion = c.parse().map_err(|m| Error::parse(line, m))?;
            Ok(FrameworkStatement::Conc(name(line, a)?, conclusion))
        }
        other => Err(Error::parse(line, format!("unknown statement `{other}`"))),
    }
}

/// Parses statements, keeping their source lines.
pub fn parse_framework_statements(text: &str) -> Result<Vec<(usize, FrameworkStatement)>> {
    syntax::statements(text)?
        .into_iter()
        .map(|raw| Ok((raw.line, parse_statement(raw.line, raw.text)?)))
        .collect()
}

pub fn parse_framework(text: &str) -> Result<Framework> {
    Framework::from_statements(&parse_framework_statements(text)?)
}

pub fn write_statements(stmts: &[FrameworkStatement]) -> String {
    stmts.iter().map(|s| format!("{s}\n")).collect()
}

impl Framework {
    /// Builds a framework from parsed statements; references to undeclared
    /// arguments are reported with their line.
    pub fn from_statements(stmts: &[(usize, FrameworkStatement)]) -> Result<Framework> {
        let declared: BTreeSet<&ArgId> = stmts
            .iter()
            .filter_map(|(_, s)| match s {
                FrameworkStatement::Arg(a) => Some(a),
                _ => None,
            })
            .collect();
        let check = |line: usize, id: &ArgId| {
            if declared.contains(id) {
                Ok(())
            } else {
                Err(Error::parse(line, format!("unknown argument `{id}`")))
            }
        };
        let (mut args, mut defeats, mut subargs, mut conclusions) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (line, stmt) in stmts {
            match stmt {
                FrameworkStatement::Arg(a) => args.push(a.clone()),
                FrameworkStatement::Att(a, b) => {
                    check(*line, a)?;
                    check(*line, b)?;
                    defeats.push((a.clone(), b.clone()));
                }
                FrameworkStatement::Sub(c, p) => {
                    check(*line, c)?;
                    check(*line, p)?;
                    subargs.push((c.clone(), p.clone()));
                }
                FrameworkStatement::Conc(a, c) => {
                    check(*line, a)?;
                    conclusions.push((a.clone(), c.clone()));
                }
            }
        }
        Framework::new(args, defeats, subargs, conclusions)
    }

    /// Canonical statement list: arguments, conclusions, subarguments, then
    /// the closed defeat relation, each block sorted.
    pub fn to_statements(&self) -> Vec<FrameworkStatement> {
        let mut out: Vec<FrameworkStatement> = self
            .arguments()
            .iter()
            .cloned()
            .map(FrameworkStatement::Arg)
            .collect();
        out.extend(self.arguments().iter().filter_map(|id| {
            self.conclusion(id.as_str())
                .map(|c| FrameworkStatement::Conc(id.clone(), c.clone()))
        }));
        out.extend(
            self.subarguments()
                .into_iter()
                .map(|(c, p)| FrameworkStatement::Sub(c.clone(), p.clone())),
        );
        out.extend(
            self.defeats()
                .into_iter()
                .map(|(a, b)| FrameworkStatement::Att(a.clone(), b.clone())),
        );
        out
    }

    pub fn to_text(&self) -> String {
        write_statements(&self.to_statements())
    }
}
