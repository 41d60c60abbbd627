//! Rule base text format.
//!
//! ```text
//! fact bird.
//! strict s1: penguin -> bird.
//! defeasible d1: bird => flies.
//! defeasible d2: penguin => ~flies.
//! defeasible u1: blizzard => !d2.
//! prefer d2 > d1.
//! query flies.
//! ```

use std::fmt;

use super::{Rule, RuleBase, RuleKind};
use crate::error::{Error, Result};
use crate::literal::{is_identifier, parse_literal, Conclusion, Literal};
use crate::syntax::{self, keyword};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleStatement {
    Fact(Literal),
    Rule(Rule),
    Prefer(String, String),
    Query(Literal),
}

impl fmt::Display for RuleStatement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleStatement::Fact(l) => write!(f, "fact {l}."),
            RuleStatement::Rule(r) => r.fmt(f),
            RuleStatement::Prefer(hi, lo) => write!(f, "prefer {hi} > {lo}."),
            RuleStatement::Query(l) => write!(f, "query {l}."),
        }
    }
}

fn rule_name(line: usize, s: &str) -> Result<String> {
    let s = s.trim();
    if is_identifier(s) {
        Ok(s.to_string())
    } else {
        Err(Error::parse(line, format!("`{s}` is not a rule name")))
    }
}

fn parse_rule(line: usize, kind: RuleKind, rest: &str) -> Result<Rule> {
    let (name, def) = rest
        .split_once(':')
        .ok_or_else(|| Error::parse(line, "expected `NAME: body ARROW head`"))?;
    let arrow = match kind {
        RuleKind::Strict => "->",
        RuleKind::Defeasible => "=>",
    };
    let (body, head) = def
        .split_once(arrow)
        .ok_or_else(|| Error::parse(line, format!("expected `{arrow}`")))?;
    let body = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',')
            .map(|l| parse_literal(line, l))
            .collect::<Result<Vec<_>>>()?
    };
    if body.is_empty() {
        return Err(Error::parse(line, "rule body is empty; use `fact`"));
    }
    let head: Conclusion = head.parse().map_err(|m| Error::parse(line, m))?;
    Ok(Rule {
        name: rule_name(line, name)?,
        body,
        head,
        kind,
    })
}

fn parse_statement(line: usize, text: &str) -> Result<RuleStatement> {
    let (kw, rest) = keyword(text);
    match kw {
        "fact" => Ok(RuleStatement::Fact(parse_literal(line, rest)?)),
        "query" => Ok(RuleStatement::Query(parse_literal(line, rest)?)),
        "strict" => Ok(RuleStatement::Rule(parse_rule(line, RuleKind::Strict, rest)?)),
        "defeasible" => Ok(RuleStatement::Rule(parse_rule(line, RuleKind::Defeasible, rest)?)),
        "prefer" => {
            let (hi, lo) = rest
                .split_once('>')
                .ok_or_else(|| Error::parse(line, "expected `prefer HIGHER > LOWER`"))?;
            Ok(RuleStatement::Prefer(rule_name(line, hi)?, rule_name(line, lo)?))
        }
        other => Err(Error::parse(line, format!("unknown statement `{other}`"))),
    }
}

pub fn parse_rule_statements(text: &str) -> Result<Vec<(usize, RuleStatement)>> {
    syntax::statements(text)?
        .into_iter()
        .map(|raw| Ok((raw.line, parse_statement(raw.line, raw.text)?)))
        .collect()
}

pub fn parse_rule_base(text: &str) -> Result<RuleBase> {
    RuleBase::from_statements(parse_rule_statements(text)?.into_iter().map(|(_, s)| s))
}

pub fn write_statements(stmts: &[RuleStatement]) -> String {
    stmts.iter().map(|s| format!("{s}\n")).collect()
}

impl RuleBase {
    pub fn from_statements(stmts: impl IntoIterator<Item = RuleStatement>) -> Result<RuleBase> {
        let (mut facts, mut rules, mut prefs, mut queries) =
            (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for stmt in stmts {
            match stmt {
                RuleStatement::Fact(l) => facts.push(l),
                RuleStatement::Rule(r) => rules.push(r),
                RuleStatement::Prefer(hi, lo) => prefs.push((hi, lo)),
                RuleStatement::Query(q) => queries.push(q),
            }
        }
        RuleBase::new(facts, rules, prefs, queries)
    }
}
