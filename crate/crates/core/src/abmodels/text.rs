//! Theory text format.
//!
//! ```text
//! atom bird.
//! atom flies.
//! atom ab1.
//! fact bird.
//! rule bird & ~ab1 -> flies.
//! or ~flies | bird.
//! minimize ab1.
//! query flies.
//! ```
//!
//! One statement per line. Every atom must be declared with `atom`, in any
//! position in the file.

use std::collections::BTreeSet;
use std::fmt;

use super::{Clause, Theory};
use crate::error::{Error, Result};
use crate::literal::{is_identifier, parse_literal, Literal};
use crate::syntax::{self, keyword};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoryStatement {
    Atom(String),
    Fact(Literal),
    Rule { body: Vec<Literal>, head: Literal },
    Or(Vec<Literal>),
    Minimize(Vec<String>),
    Query(Literal),
}

impl TheoryStatement {
    fn literals(&self) -> Vec<&Literal> {
        match self {
            TheoryStatement::Fact(l) | TheoryStatement::Query(l) => vec![l],
            TheoryStatement::Rule { body, head } => body.iter().chain([head]).collect(),
            TheoryStatement::Or(lits) => lits.iter().collect(),
            TheoryStatement::Atom(_) | TheoryStatement::Minimize(_) => Vec::new(),
        }
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for TheoryStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryStatement::Atom(a) => write!(f, "atom {a}."),
            TheoryStatement::Fact(l) => write!(f, "fact {l}."),
            TheoryStatement::Rule { body, head } => write!(f, "rule {} -> {head}.", join(body, " & ")),
            TheoryStatement::Or(lits) => write!(f, "or {}.", join(lits, " | ")),
            TheoryStatement::Minimize(atoms) => write!(f, "minimize {}.", atoms.join(" ")),
            TheoryStatement::Query(l) => write!(f, "query {l}."),
        }
    }
}

fn atom_name(line: usize, s: &str) -> Result<String> {
    if is_identifier(s) {
        Ok(s.to_string())
    } else {
        Err(Error::parse(line, format!("`{s}` is not an atom")))
    }
}

fn literal_list(line: usize, s: &str, sep: char) -> Result<Vec<Literal>> {
    s.split(sep).map(|l| parse_literal(line, l)).collect()
}

fn parse_statement(line: usize, text: &str) -> Result<TheoryStatement> {
    let (kw, rest) = keyword(text);
    match kw {
        "atom" => Ok(TheoryStatement::Atom(atom_name(line, rest)?)),
        "fact" => Ok(TheoryStatement::Fact(parse_literal(line, rest)?)),
        "query" => Ok(TheoryStatement::Query(parse_literal(line, rest)?)),
        "rule" => {
            let (body, head) = rest
                .split_once("->")
                .ok_or_else(|| Error::parse(line, "expected `rule L1 & L2 -> L`"))?;
            if body.trim().is_empty() {
                return Err(Error::parse(line, "rule body is empty; use `fact`"));
            }
            Ok(TheoryStatement::Rule {
                body: literal_list(line, body, '&')?,
                head: parse_literal(line, head)?,
            })
        }
        "or" => Ok(TheoryStatement::Or(literal_list(line, rest, '|')?)),
        "minimize" => {
            let atoms = rest
                .split_whitespace()
                .map(|a| atom_name(line, a))
                .collect::<Result<Vec<_>>>()?;
            if atoms.is_empty() {
                return Err(Error::parse(line, "`minimize` needs at least one atom"));
            }
            Ok(TheoryStatement::Minimize(atoms))
        }
        other => Err(Error::parse(line, format!("unknown statement `{other}`"))),
    }
}

pub fn parse_theory_statements(text: &str) -> Result<Vec<(usize, TheoryStatement)>> {
    let stmts = syntax::statements(text)?
        .into_iter()
        .map(|raw| Ok((raw.line, parse_statement(raw.line, raw.text)?)))
        .collect::<Result<Vec<_>>>()?;
    let declared: BTreeSet<&str> = stmts
        .iter()
        .filter_map(|(_, s)| match s {
            TheoryStatement::Atom(a) => Some(a.as_str()),
            _ => None,
        })
        .collect();
    for (line, stmt) in &stmts {
        let used = stmt.literals().into_iter().map(|l| l.atom.as_str());
        let used: Vec<&str> = match stmt {
            TheoryStatement::Minimize(atoms) => atoms.iter().map(String::as_str).collect(),
            _ => used.collect(),
        };
        if let Some(a) = used.into_iter().find(|a| !declared.contains(a)) {
            return Err(Error::parse(*line, format!("atom `{a}` is not declared")));
        }
    }
    Ok(stmts)
}

pub fn parse_theory(text: &str) -> Result<Theory> {
    Theory::from_statements(parse_theory_statements(text)?.into_iter().map(|(_, s)| s))
}

pub fn write_statements(stmts: &[TheoryStatement]) -> String {
    stmts.iter().map(|s| format!("{s}\n")).collect()
}

impl Theory {
    pub fn from_statements(stmts: impl IntoIterator<Item = TheoryStatement>) -> Result<Theory> {
        let (mut atoms, mut clauses, mut minimized, mut queries) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for stmt in stmts {
            match stmt {
                TheoryStatement::Atom(a) => atoms.push(a),
                TheoryStatement::Fact(l) => clauses.push(Clause::Disjunction(vec![l])),
                TheoryStatement::Rule { body, head } => clauses.push(Clause::Implication { body, head }),
                TheoryStatement::Or(lits) => clauses.push(Clause::Disjunction(lits)),
                TheoryStatement::Minimize(a) => minimized.extend(a),
                TheoryStatement::Query(q) => queries.push(q),
            }
        }
        Theory::new(atoms, clauses, minimized, queries)
    }
}
