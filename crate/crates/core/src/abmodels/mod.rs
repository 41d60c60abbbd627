//! Propositional theories with designated abnormality atoms.
//!
//! Models are enumerated by brute force. A model is *minimal* when no other
//! model makes a proper subset of the minimized atoms true; every other atom
//! varies freely. A literal follows when it holds in every minimal model.

pub mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::literal::Literal;

pub use text::{parse_theory, parse_theory_statements, TheoryStatement};

/// Largest theory that enumeration accepts.
pub const ATOM_LIMIT: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// The conjunction of `body` implies `head`.
    Implication { body: Vec<Literal>, head: Literal },
    /// At least one literal holds. A single literal is a fact.
    Disjunction(Vec<Literal>),
}

impl Clause {
    pub fn literals(&self) -> Box<dyn Iterator<Item = &Literal> + '_> {
        match self {
            Clause::Implication { body, head } => Box::new(body.iter().chain(std::iter::once(head))),
            Clause::Disjunction(lits) => Box::new(lits.iter()),
        }
    }

    /// Equivalent disjunction: negated body literals plus the head.
    fn as_disjunction(&self) -> Vec<Literal> {
        match self {
            Clause::Implication { body, head } => body
                .iter()
                .map(Literal::complement)
                .chain(std::iter::once(head.clone()))
                .collect(),
            Clause::Disjunction(lits) => lits.clone(),
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |lits: &[Literal], sep: &str| {
            lits.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
        };
        match self {
            Clause::Implication { body, head } => write!(f, "rule {} -> {head}.", join(body, " & ")),
            Clause::Disjunction(lits) if lits.len() == 1 => write!(f, "fact {}.", lits[0]),
            Clause::Disjunction(lits) => write!(f, "or {}.", join(lits, " | ")),
        }
    }
}

/// Atoms are kept sorted, so model order never depends on declaration order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Theory {
    atoms: Vec<String>,
    clauses: Vec<Clause>,
    minimized: BTreeSet<String>,
    queries: Vec<Literal>,
}

impl Theory {
    pub fn new(
        atoms: impl IntoIterator<Item = String>,
        clauses: impl IntoIterator<Item = Clause>,
        minimized: impl IntoIterator<Item = String>,
        queries: impl IntoIterator<Item = Literal>,
    ) -> Result<Self> {
        let atoms: Vec<String> = atoms.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let known = |a: &str| atoms.binary_search_by(|x| x.as_str().cmp(a)).is_ok();
        let clauses: Vec<Clause> = clauses.into_iter().collect();
        for clause in &clauses {
            if clause.literals().next().is_none() {
                return Err(Error::InvalidTheory("empty clause".into()));
            }
            if let Some(l) = clause.literals().find(|l| !known(&l.atom)) {
                return Err(Error::InvalidTheory(format!("undeclared atom `{}` in `{clause}`", l.atom)));
            }
        }
        let minimized: BTreeSet<String> = minimized.into_iter().collect();
        if let Some(a) = minimized.iter().find(|a| !known(a)) {
            return Err(Error::InvalidTheory(format!("minimized atom `{a}` is not declared")));
        }
        let queries: Vec<Literal> = queries.into_iter().collect();
        if let Some(q) = queries.iter().find(|q| !known(&q.atom)) {
            return Err(Error::InvalidTheory(format!("query `{q}` uses an undeclared atom")));
        }
        Ok(Theory {
            atoms,
            clauses,
            minimized,
            queries,
        })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn minimized(&self) -> &BTreeSet<String> {
        &self.minimized
    }

    pub fn queries(&self) -> &[Literal] {
        &self.queries
    }

    fn bit(&self, atom: &str) -> u32 {
        let i = self
            .atoms
            .binary_search_by(|x| x.as_str().cmp(atom))
            .expect("validated atom");
        1 << (self.atoms.len() - 1 - i)
    }

    fn model(&self, mask: u32) -> Model {
        Model {
            assignment: self
                .atoms
                .iter()
                .map(|a| (a.clone(), mask & self.bit(a) != 0))
                .collect(),
        }
    }

    /// Satisfying assignments as bit masks, the first atom in the highest bit.
    fn model_masks(&self) -> Result<Vec<u32>> {
        let n = self.atoms.len();
        if n > ATOM_LIMIT {
            return Err(Error::AtomLimit {
                atoms: n,
                max: ATOM_LIMIT,
            });
        }
        let compiled: Vec<(u32, u32)> = self
            .clauses
            .iter()
            .map(|c| {
                c.as_disjunction().iter().fold((0, 0), |(pos, neg), l| {
                    if l.negated {
                        (pos, neg | self.bit(&l.atom))
                    } else {
                        (pos | self.bit(&l.atom), neg)
                    }
                })
            })
            .collect();
        Ok((0..1u32 << n)
            .filter(|m| compiled.iter().all(|&(pos, neg)| m & pos != 0 || !m & neg != 0))
            .collect())
    }

    fn minimized_mask(&self) -> u32 {
        self.minimized.iter().fold(0, |acc, a| acc | self.bit(a))
    }
}

/// A total truth assignment, ordered by atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Model {
    assignment: BTreeMap<String, bool>,
}

impl Model {
    pub fn value(&self, atom: &str) -> Option<bool> {
        self.assignment.get(atom).copied()
    }

    pub fn satisfies(&self, lit: &Literal) -> bool {
        self.value(&lit.atom) == Some(!lit.negated)
    }

    pub fn true_atoms(&self) -> impl Iterator<Item = &str> {
        self.assignment.iter().filter(|(_, v)| **v).map(|(a, _)| a.as_str())
    }

    pub fn assignment(&self) -> &BTreeMap<String, bool> {
        &self.assignment
    }
}

/// Lists the true atoms: `{ab1, p}`.
impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.true_atoms().collect::<Vec<_>>().join(", "))
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.assignment.len()))?;
        for (atom, value) in &self.assignment {
            map.serialize_entry(atom, value)?;
        }
        map.end()
    }
}

/// All models: assignments counted upward with the first atom most
/// significant, so `false` comes before `true`.
pub fn enumerate_models(t: &Theory) -> Result<Vec<Model>> {
    Ok(t.model_masks()?.into_iter().map(|m| t.model(m)).collect())
}

/// Models whose set of true minimized atoms is inclusion-minimal.
pub fn minimal_models(t: &Theory) -> Result<Vec<Model>> {
    let masks = t.model_masks()?;
    let ab = t.minimized_mask();
    let distinct: BTreeSet<u32> = masks.iter().map(|m| m & ab).collect();
    let minimal: BTreeSet<u32> = distinct
        .iter()
        .copied()
        .filter(|&x| !distinct.iter().any(|&y| y != x && y & x == y))
        .collect();
    Ok(masks
        .into_iter()
        .filter(|m| minimal.contains(&(m & ab)))
        .map(|m| t.model(m))
        .collect())
}

/// Vacuously true for an unsatisfiable theory; see [`query`] for the flag.
pub fn holds_in_all_minimal(t: &Theory, lit: &Literal) -> Result<bool> {
    Ok(query(t, lit)?.holds)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryReport {
    pub query: Literal,
    pub holds: bool,
    /// The theory has no model, so `holds` is vacuous.
    pub unsatisfiable: bool,
    pub minimal_models: Vec<Model>,
}

pub fn query(t: &Theory, lit: &Literal) -> Result<QueryReport> {
    if t.atoms.binary_search(&lit.atom).is_err() {
        return Err(Error::InvalidTheory(format!("query `{lit}` uses an undeclared atom")));
    }
    let minimal_models = minimal_models(t)?;
    Ok(QueryReport {
        query: lit.clone(),
        holds: minimal_models.iter().all(|m| m.satisfies(lit)),
        unsatisfiable: minimal_models.is_empty(),
        minimal_models,
    })
}
