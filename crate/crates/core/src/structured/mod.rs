//! Structured argumentation over propositional strict and defeasible rules.
//!
//! Arguments are derivation trees built bottom-up from facts
//! ([`construct_arguments`]). Conflicts are turned into defeats by
//! [`compute_defeats`]:
//!
//! - *rebut*: the attacker concludes the complement of a conclusion drawn by a
//!   defeasible rule. It succeeds unless the attacker is strictly weaker,
//!   comparing last defeasible rules with the elitist weakest-link ordering.
//! - *undercut*: the attacker concludes `!r` and the target's top rule is `r`.
//!   Priorities are ignored.
//!
//! Priorities are declared, never computed.

mod analysis;
mod construct;
mod defeat;
pub mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::literal::{Conclusion, Literal};

pub use analysis::{
    conclusion_reports, conclusion_status, detect_floating_conclusions, detect_zombies,
    ConclusionReport,
};
pub use construct::{construct_arguments, construct_arguments_with, Argument, ConstructOptions, TopRule};
pub use defeat::{compile, compile_with, compute_defeats, Compiled};
pub use text::{parse_rule_base, parse_rule_statements, RuleStatement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleKind {
    Strict,
    Defeasible,
}

/// Rule heads share the conclusion type: a literal, or `!rule`.
pub type RuleHead = Conclusion;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rule {
    pub name: String,
    pub body: Vec<Literal>,
    pub head: RuleHead,
    pub kind: RuleKind,
}

impl Rule {
    pub fn strict(name: &str, body: &[Literal], head: impl Into<Conclusion>) -> Self {
        Rule {
            name: name.to_string(),
            body: body.to_vec(),
            head: head.into(),
            kind: RuleKind::Strict,
        }
    }

    pub fn defeasible(name: &str, body: &[Literal], head: impl Into<Conclusion>) -> Self {
        Rule {
            name: name.to_string(),
            body: body.to_vec(),
            head: head.into(),
            kind: RuleKind::Defeasible,
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kw, arrow) = match self.kind {
            RuleKind::Strict => ("strict", "->"),
            RuleKind::Defeasible => ("defeasible", "=>"),
        };
        let body: Vec<String> = self.body.iter().map(ToString::to_string).collect();
        write!(f, "{kw} {}: {} {arrow} {}.", self.name, body.join(", "), self.head)
    }
}

/// Facts, rules, a strict partial order over defeasible rules, and queries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RuleBase {
    facts: BTreeSet<Literal>,
    rules: BTreeMap<String, Rule>,
    /// (higher, lower), transitively closed.
    priorities: BTreeSet<(String, String)>,
    queries: Vec<Literal>,
}

impl RuleBase {
    pub fn new(
        facts: impl IntoIterator<Item = Literal>,
        rules: impl IntoIterator<Item = Rule>,
        priorities: impl IntoIterator<Item = (String, String)>,
        queries: impl IntoIterator<Item = Literal>,
    ) -> Result<Self> {
        let facts: BTreeSet<Literal> = facts.into_iter().collect();
        let mut by_name = BTreeMap::new();
        for rule in rules {
            if rule.body.is_empty() {
                return Err(Error::InvalidRuleBase(format!(
                    "rule `{}` has an empty body; state it as a fact",
                    rule.name
                )));
            }
            if let Some(prev) = by_name.insert(rule.name.clone(), rule) {
                return Err(Error::InvalidRuleBase(format!(
                    "rule name `{}` is declared twice",
                    prev.name
                )));
            }
        }
        let is_defeasible =
            |name: &str| matches!(by_name.get(name), Some(r) if r.kind == RuleKind::Defeasible);
        for rule in by_name.values() {
            if let Conclusion::Undercut(target) = &rule.head {
                if !is_defeasible(target) {
                    return Err(Error::InvalidRuleBase(format!(
                        "rule `{}` undercuts `{target}`, which is not a defeasible rule",
                        rule.name
                    )));
                }
            }
        }

        let mut order = BTreeSet::new();
        for (hi, lo) in priorities {
            for name in [&hi, &lo] {
                if !is_defeasible(name) {
                    return Err(Error::InvalidRuleBase(format!(
                        "priority mentions `{name}`, which is not a defeasible rule"
                    )));
                }
            }
            order.insert((hi, lo));
        }
        let priorities = transitive_closure(order);
        if let Some((name, _)) = priorities.iter().find(|(a, b)| a == b) {
            return Err(Error::PriorityCycle(name.clone()));
        }

        Ok(RuleBase {
            facts,
            rules: by_name,
            priorities,
            queries: queries.into_iter().collect(),
        })
    }

    pub fn facts(&self) -> impl Iterator<Item = &Literal> {
        self.facts.iter()
    }

    /// Rules in name order.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values()
    }

    pub fn rule(&self, name: &str) -> Option<&Rule> {
        self.rules.get(name)
    }

    pub fn queries(&self) -> &[Literal] {
        &self.queries
    }

    /// Closed priority pairs (higher, lower).
    pub fn priorities(&self) -> impl Iterator<Item = (&str, &str)> {
        self.priorities.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    pub fn prefers(&self, higher: &str, lower: &str) -> bool {
        self.priorities
            .contains(&(higher.to_string(), lower.to_string()))
    }

    /// Same facts, rules and queries without any priority.
    pub fn without_priorities(&self) -> RuleBase {
        RuleBase {
            priorities: BTreeSet::new(),
            ..self.clone()
        }
    }
}

fn transitive_closure(mut pairs: BTreeSet<(String, String)>) -> BTreeSet<(String, String)> {
    loop {
        let extra: Vec<(String, String)> = pairs
            .iter()
            .flat_map(|(a, b)| {
                pairs
                    .range((b.clone(), String::new())..)
                    .take_while(move |(c, _)| c == b)
                    .map(move |(_, d)| (a.clone(), d.clone()))
            })
            .filter(|p| !pairs.contains(p))
            .collect();
        if extra.is_empty() {
            return pairs;
        }
        pairs.extend(extra);
    }
}
