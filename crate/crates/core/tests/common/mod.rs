//! Proptest strategies shared by the property suites.
#![allow(dead_code)]

use defeasor_core::abmodels::{Clause, Theory};
use defeasor_core::structured::RuleStatement;
use defeasor_core::{Conclusion, Framework, Literal, Rule, RuleBase};
use proptest::prelude::*;

/// A framework over `a0..a{n-1}` together with its raw defeat pairs.
#[derive(Clone, Debug)]
pub struct Graph {
    pub n: usize,
    pub defeats: Vec<(usize, usize)>,
}

impl Graph {
    pub fn name(i: usize) -> String {
        format!("a{i}")
    }

    pub fn framework(&self) -> Framework {
        let names: Vec<String> = (0..self.n).map(Graph::name).collect();
        Framework::from_defeats(
            names.iter().map(String::as_str),
            self.defeats.iter().map(|&(a, b)| (names[a].as_str(), names[b].as_str())),
        )
        .unwrap()
    }

    pub fn attacks(&self, a: usize, b: usize) -> bool {
        self.defeats.contains(&(a, b))
    }
}

pub fn graph(max_args: usize) -> impl Strategy<Value = Graph> {
    (0..=max_args).prop_flat_map(|n| {
        proptest::collection::vec(any::<u8>(), n * n).prop_map(move |cells| Graph {
            n,
            defeats: cells
                .iter()
                .enumerate()
                .filter(|(_, &c)| c < 64)
                .map(|(k, _)| (k / n, k % n))
                .collect(),
        })
    })
}

fn literal(atom: usize, negated: bool) -> Literal {
    let name = format!("p{atom}");
    if negated {
        Literal::negative(name)
    } else {
        Literal::positive(name)
    }
}

#[derive(Clone, Debug)]
struct RuleSpec {
    strict: bool,
    head_atom: usize,
    head_negated: bool,
    body: Vec<(usize, bool)>,
    /// Undercut the defeasible rule at this index instead of concluding a literal.
    undercut: Option<usize>,
}

const ATOMS: usize = 6;

fn rule_spec() -> impl Strategy<Value = RuleSpec> {
    (
        prop::bool::weighted(0.25),
        1..ATOMS,
        any::<bool>(),
        proptest::collection::vec((0..ATOMS, any::<bool>()), 1..=2),
        prop::option::weighted(0.2, 0..8usize),
    )
        .prop_map(|(strict, head_atom, head_negated, body, undercut)| RuleSpec {
            strict,
            head_atom,
            head_negated,
            // Bodies only use smaller atoms, so every rule base is acyclic.
            body: body.into_iter().map(|(a, n)| (a % head_atom, n)).collect(),
            undercut,
        })
}

/// Statements of a random acyclic rule base over atoms `p0..p5`, with
/// undercutters and acyclic priorities. Always valid.
pub fn rule_statements() -> impl Strategy<Value = Vec<RuleStatement>> {
    (
        proptest::collection::vec((0..3usize, any::<bool>()), 1..=3),
        proptest::collection::vec(rule_spec(), 1..=7),
        proptest::collection::vec((0..8usize, 0..8usize), 0..=4),
    )
        .prop_map(|(facts, specs, prefs)| {
            let names: Vec<String> = (0..specs.len()).map(|i| format!("r{i}")).collect();
            let defeasible: Vec<usize> = (0..specs.len()).filter(|&i| !specs[i].strict).collect();
            let mut out: Vec<RuleStatement> = facts
                .into_iter()
                .map(|(a, n)| RuleStatement::Fact(literal(a, n)))
                .collect();
            out.sort_by_key(|s| s.to_string());
            out.dedup();
            for (i, spec) in specs.iter().enumerate() {
                let body: Vec<Literal> = spec.body.iter().map(|&(a, n)| literal(a, n)).collect();
                let head = match spec.undercut {
                    Some(k) if !defeasible.is_empty() && !spec.strict => {
                        Conclusion::Undercut(names[defeasible[k % defeasible.len()]].clone())
                    }
                    _ => Conclusion::Literal(literal(spec.head_atom, spec.head_negated)),
                };
                let rule = if spec.strict {
                    Rule::strict(&names[i], &body, head)
                } else {
                    Rule::defeasible(&names[i], &body, head)
                };
                out.push(RuleStatement::Rule(rule));
            }
            if defeasible.len() >= 2 {
                let mut seen = Vec::new();
                for (a, b) in prefs {
                    let (x, y) = (a % defeasible.len(), b % defeasible.len());
                    if x < y && !seen.contains(&(x, y)) {
                        seen.push((x, y));
                        out.push(RuleStatement::Prefer(
                            names[defeasible[x]].clone(),
                            names[defeasible[y]].clone(),
                        ));
                    }
                }
            }
            out
        })
}

pub fn rule_base(stmts: &[RuleStatement]) -> RuleBase {
    RuleBase::from_statements(stmts.iter().cloned()).expect("generated rule base is valid")
}

/// A rule base together with a shuffled copy of its statements.
pub fn rule_statements_and_shuffle() -> impl Strategy<Value = (Vec<RuleStatement>, Vec<RuleStatement>)> {
    rule_statements().prop_flat_map(|stmts| {
        let shuffled = Just(stmts.clone()).prop_shuffle();
        (Just(stmts), shuffled)
    })
}

fn theory_literal(n: usize) -> impl Strategy<Value = Literal> {
    (0..n, any::<bool>()).prop_map(|(a, neg)| {
        let name = format!("q{a:02}");
        if neg {
            Literal::negative(name)
        } else {
            Literal::positive(name)
        }
    })
}

fn clause(n: usize) -> impl Strategy<Value = Clause> {
    prop_oneof![
        (proptest::collection::vec(theory_literal(n), 1..=3), theory_literal(n))
            .prop_map(|(body, head)| Clause::Implication { body, head }),
        proptest::collection::vec(theory_literal(n), 1..=3).prop_map(Clause::Disjunction),
    ]
}

/// Random theory with at most `max_atoms` atoms; some atoms minimized.
pub fn theory(max_atoms: usize) -> impl Strategy<Value = Theory> {
    (1..=max_atoms).prop_flat_map(|n| {
        (
            proptest::collection::vec(clause(n), 0..=n + 2),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(clauses, min)| {
                let atoms: Vec<String> = (0..n).map(|i| format!("q{i:02}")).collect();
                let minimized: Vec<String> =
                    atoms.iter().zip(&min).filter(|(_, &m)| m).map(|(a, _)| a.clone()).collect();
                Theory::new(atoms, clauses, minimized, []).unwrap()
            })
    })
}
