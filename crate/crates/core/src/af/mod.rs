//! Abstract argumentation frameworks.
//!
//! A [`Framework`] is a finite defeat graph over opaque argument names,
//! optionally carrying a subargument relation and conclusion labels. The
//! defeat relation is closed under subargument propagation when the
//! framework is built, so every semantics in [`semantics`] works on a plain
//! defeat graph.

pub mod semantics;
pub mod text;

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::literal::{Conclusion, Literal};

pub use semantics::{
    argument_status, characteristic_function, complete_extensions, complete_labellings,
    extensions, grounded_extension, preferred_extensions, stable_extensions, Evaluation,
};
pub use text::{parse_framework, parse_framework_statements, FrameworkStatement};

/// Opaque argument name. Ordering is lexicographic and is used for every
/// listing the engines produce.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArgId(String);

impl ArgId {
    pub fn new(name: impl Into<String>) -> Self {
        ArgId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for ArgId {
    fn from(s: &str) -> Self {
        ArgId(s.to_string())
    }
}

impl From<String> for ArgId {
    fn from(s: String) -> Self {
        ArgId(s)
    }
}

impl Borrow<str> for ArgId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// A set of arguments, e.g. an extension.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ArgSet(BTreeSet<ArgId>);

impl ArgSet {
    pub fn new() -> Self {
        ArgSet::default()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.0.contains(id)
    }

    pub fn insert(&mut self, id: ArgId) -> bool {
        self.0.insert(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgId> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

impl<T: Into<ArgId>> FromIterator<T> for ArgSet {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        ArgSet(iter.into_iter().map(Into::into).collect())
    }
}

impl<'a> IntoIterator for &'a ArgSet {
    type Item = &'a ArgId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArgId>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, id) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{id}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    In,
    Out,
    Undec,
}

/// Total assignment of labels to the arguments of a framework.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Labelling(BTreeMap<ArgId, Label>);

impl Labelling {
    pub fn get(&self, id: &str) -> Option<Label> {
        self.0.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ArgId, Label)> {
        self.0.iter().map(|(id, l)| (id, *l))
    }

    pub fn with_label(&self, label: Label) -> ArgSet {
        self.iter()
            .filter(|(_, l)| *l == label)
            .map(|(id, _)| id.clone())
            .collect()
    }

    pub fn in_set(&self) -> ArgSet {
        self.with_label(Label::In)
    }
}

impl FromIterator<(ArgId, Label)> for Labelling {
    fn from_iter<I: IntoIterator<Item = (ArgId, Label)>>(iter: I) -> Self {
        Labelling(iter.into_iter().collect())
    }
}

impl fmt::Display for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (id, label)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let label = match label {
                Label::In => "in",
                Label::Out => "out",
                Label::Undec => "undec",
            };
            write!(f, "{id}:{label}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SemanticsKind {
    Grounded,
    Complete,
    Preferred,
    Stable,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 4] = [
        SemanticsKind::Grounded,
        SemanticsKind::Complete,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
    ];

    pub fn is_multi_extension(self) -> bool {
        self != SemanticsKind::Grounded
    }

    pub fn name(self) -> &'static str {
        match self {
            SemanticsKind::Grounded => "grounded",
            SemanticsKind::Complete => "complete",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::Stable => "stable",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemanticsKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SemanticsKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown semantics `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Justified,
    Defensible,
    Overruled,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Justified => "justified",
            Status::Defensible => "defensible",
            Status::Overruled => "overruled",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Status {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Status::Justified, Status::Defensible, Status::Overruled]
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown status `{s}`"))
    }
}

/// A finite argumentation framework.
///
/// Arguments are stored in lexicographic order and addressed internally by
/// position. `defeats` is closed under subargument propagation: whoever
/// defeats a subargument defeats every argument built on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    ids: Vec<ArgId>,
    index: BTreeMap<ArgId, usize>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
    subargs: BTreeSet<(usize, usize)>,
    supers: Vec<Vec<usize>>,
    conclusions: Vec<Option<Conclusion>>,
}

impl Framework {
    pub fn empty() -> Self {
        Framework {
            ids: Vec::new(),
            index: BTreeMap::new(),
            attackers: Vec::new(),
            targets: Vec::new(),
            subargs: BTreeSet::new(),
            supers: Vec::new(),
            conclusions: Vec::new(),
        }
    }

    /// Builds a framework, validating references and closing defeats under
    /// the (transitive) subargument relation.
    pub fn new<A, D, S, C>(args: A, defeats: D, subargs: S, conclusions: C) -> Result<Self>
    where
        A: IntoIterator<Item = ArgId>,
        D: IntoIterator<Item = (ArgId, ArgId)>,
        S: IntoIterator<Item = (ArgId, ArgId)>,
        C: IntoIterator<Item = (ArgId, Conclusion)>,
    {
        let ids: Vec<ArgId> = args.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let index: BTreeMap<ArgId, usize> =
            ids.iter().enumerate().map(|(i, id)| (id.clone(), i)).collect();
        let n = ids.len();
        let lookup = |id: &ArgId| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::UnknownArgument(id.to_string()))
        };

        let mut subarg_pairs = BTreeSet::new();
        for (child, parent) in subargs {
            let (c, p) = (lookup(&child)?, lookup(&parent)?);
            if c == p {
                return Err(Error::InvalidFramework(format!(
                    "`{child}` is declared a subargument of itself"
                )));
            }
            subarg_pairs.insert((c, p));
        }
        let supers = transitive_supers(n, &subarg_pairs)
            .map_err(|i| Error::InvalidFramework(format!("subargument cycle through `{}`", ids[i])))?;

        let mut defeat_pairs = BTreeSet::new();
        for (attacker, target) in defeats {
            let (a, t) = (lookup(&attacker)?, lookup(&target)?);
            defeat_pairs.insert((a, t));
            defeat_pairs.extend(supers[t].iter().map(|&p| (a, p)));
        }

        let mut concl: Vec<Option<Conclusion>> = vec![None; n];
        for (id, c) in conclusions {
            let i = lookup(&id)?;
            match &concl[i] {
                Some(existing) if *existing != c => {
                    return Err(Error::InvalidFramework(format!(
                        "`{id}` has two conclusions: {existing} and {c}"
                    )))
                }
                _ => concl[i] = Some(c),
            }
        }

        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(a, t) in &defeat_pairs {
            attackers[t].push(a);
            targets[a].push(t);
        }

        Ok(Framework {
            ids,
            index,
            attackers,
            targets,
            subargs: subarg_pairs,
            supers,
            conclusions: concl,
        })
    }

    /// Convenience constructor for a bare defeat graph.
    pub fn from_defeats<'a>(
        args: impl IntoIterator<Item = &'a str>,
        defeats: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self> {
        Framework::new(
            args.into_iter().map(ArgId::from),
            defeats.into_iter().map(|(a, b)| (ArgId::from(a), ArgId::from(b))),
            std::iter::empty(),
            std::iter::empty(),
        )
    }

    pub fn arguments(&self) -> &[ArgId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.index.contains_key(id)
    }

    /// Closed defeat relation as (attacker, target), sorted.
    pub fn defeats(&self) -> Vec<(&ArgId, &ArgId)> {
        let mut out: Vec<_> = self
            .targets
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| ts.iter().map(move |&t| (a, t)))
            .map(|(a, t)| (&self.ids[a], &self.ids[t]))
            .collect();
        out.sort();
        out
    }

    pub fn defeats_pair(&self, attacker: &str, target: &str) -> bool {
        match (self.index.get(attacker), self.index.get(target)) {
            (Some(&a), Some(&t)) => self.targets[a].binary_search(&t).is_ok(),
            _ => false,
        }
    }

    pub fn defeaters(&self, id: &str) -> Result<Vec<&ArgId>> {
        let i = self.require(id)?;
        Ok(self.attackers[i].iter().map(|&a| &self.ids[a]).collect())
    }

    /// Declared (direct) subargument pairs as (child, parent).
    pub fn subarguments(&self) -> Vec<(&ArgId, &ArgId)> {
        self.subargs
            .iter()
            .map(|&(c, p)| (&self.ids[c], &self.ids[p]))
            .collect()
    }

    /// Every argument having `id` as a proper subargument, transitively.
    pub fn super_arguments(&self, id: &str) -> Result<Vec<&ArgId>> {
        let i = self.require(id)?;
        Ok(self.supers[i].iter().map(|&p| &self.ids[p]).collect())
    }

    pub fn conclusion(&self, id: &str) -> Option<&Conclusion> {
        self.index.get(id).and_then(|&i| self.conclusions[i].as_ref())
    }

    pub fn has_conclusions(&self) -> bool {
        self.conclusions.iter().any(Option::is_some)
    }

    /// Distinct literal conclusions, sorted.
    pub fn literals(&self) -> Vec<Literal> {
        self.conclusions
            .iter()
            .flatten()
            .filter_map(Conclusion::literal)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// Sub-framework induced by `keep`; defeats, subarguments and
    /// conclusions among the kept arguments are preserved.
    pub fn restrict(&self, keep: impl Fn(&ArgId) -> bool) -> Framework {
        let kept: Vec<bool> = self.ids.iter().map(&keep).collect();
        let ids = self.ids.iter().filter(|id| keep(id)).cloned();
        let defeats = self
            .targets
            .iter()
            .enumerate()
            .flat_map(|(a, ts)| ts.iter().map(move |&t| (a, t)))
            .filter(|&(a, t)| kept[a] && kept[t])
            .map(|(a, t)| (self.ids[a].clone(), self.ids[t].clone()))
            .collect::<Vec<_>>();
        let subargs = self
            .subargs
            .iter()
            .filter(|&&(c, p)| kept[c] && kept[p])
            .map(|&(c, p)| (self.ids[c].clone(), self.ids[p].clone()))
            .collect::<Vec<_>>();
        let conclusions = self
            .conclusions
            .iter()
            .enumerate()
            .filter(|&(i, _)| kept[i])
            .filter_map(|(i, c)| c.clone().map(|c| (self.ids[i].clone(), c)))
            .collect::<Vec<_>>();
        Framework::new(ids, defeats, subargs, conclusions)
            .expect("restriction of a valid framework is valid")
    }

    pub(crate) fn require(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(id.to_string()))
    }

    pub(crate) fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub(crate) fn id(&self, i: usize) -> &ArgId {
        &self.ids[i]
    }

    pub(crate) fn attackers_of(&self, i: usize) -> &[usize] {
        &self.attackers[i]
    }

    pub(crate) fn targets_of(&self, i: usize) -> &[usize] {
        &self.targets[i]
    }

    pub(crate) fn supers_of(&self, i: usize) -> &[usize] {
        &self.supers[i]
    }

    pub(crate) fn conclusion_at(&self, i: usize) -> Option<&Conclusion> {
        self.conclusions[i].as_ref()
    }

    pub(crate) fn mask_to_set(&self, mask: &[bool]) -> ArgSet {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.ids[i].clone())
            .collect()
    }

    pub(crate) fn set_to_mask(&self, set: &ArgSet) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.len()];
        for id in set {
            mask[self.require(id.as_str())?] = true;
        }
        Ok(mask)
    }
}

/// For every node, the sorted list of its transitive parents. Returns the
/// index of a node on a cycle if the relation is cyclic.
fn transitive_supers(n: usize, pairs: &BTreeSet<(usize, usize)>) -> Result<Vec<Vec<usize>>, usize> {
    let mut parents = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for &(c, p) in pairs {
        parents[c].push(p);
        indegree[p] += 1;
    }
    // Kahn order from leaves (children) upwards, then fold parents top-down.
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    while let Some(i) = ready.pop() {
        order.push(i);
        for &p in &parents[i] {
            indegree[p] -= 1;
            if indegree[p] == 0 {
                ready.push(p);
            }
        }
    }
    if order.len() < n {
        let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
        return Err(stuck);
    }
    let mut supers: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &i in order.iter().rev() {
        let mut acc = BTreeSet::new();
        for &p in &parents[i] {
            acc.insert(p);
            acc.extend(supers[p].iter().copied());
        }
        supers[i] = acc;
    }
    Ok(supers.into_iter().map(|s| s.into_iter().collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[(&ArgId, &ArgId)]) -> Vec<(String, String)> {
        v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    #[test]
    fn defeats_propagate_to_super_arguments() {
        let f = Framework::new(
            ["A", "A_minus", "AA", "C"].map(ArgId::from),
            [("C".into(), "A_minus".into())],
            [("A_minus".into(), "A".into()), ("A".into(), "AA".into())],
            [],
        )
        .unwrap();
        assert_eq!(
            ids(&f.defeats()),
            [("C", "A"), ("C", "AA"), ("C", "A_minus")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );
        assert_eq!(f.super_arguments("A_minus").unwrap().len(), 2);
    }

    #[test]
    fn rejects_unknown_and_cyclic_subarguments() {
        let unknown = Framework::from_defeats(["A"], [("A", "B")]);
        assert_eq!(unknown, Err(Error::UnknownArgument("B".into())));

        let cyclic = Framework::new(
            ["A", "B"].map(ArgId::from),
            [],
            [("A".into(), "B".into()), ("B".into(), "A".into())],
            [],
        );
        assert!(matches!(cyclic, Err(Error::InvalidFramework(_))));

        let reflexive = Framework::new(["A"].map(ArgId::from), [], [("A".into(), "A".into())], []);
        assert!(matches!(reflexive, Err(Error::InvalidFramework(_))));
    }

    #[test]
    fn restrict_keeps_induced_structure() {
        let f = Framework::new(
            ["A", "A_minus", "B"].map(ArgId::from),
            [("B".into(), "A_minus".into()), ("A_minus".into(), "B".into())],
            [("A_minus".into(), "A".into())],
            [("B".into(), Conclusion::Literal(Literal::negative("p")))],
        )
        .unwrap();
        let g = f.restrict(|id| id.as_str() != "A_minus");
        assert_eq!(g.arguments().len(), 2);
        assert_eq!(ids(&g.defeats()), [("B".to_string(), "A".to_string())]);
        assert!(g.subarguments().is_empty());
        assert_eq!(g.literals(), [Literal::negative("p")]);
    }

    #[test]
    fn argset_display_is_sorted() {
        let s: ArgSet = ["C", "A"].into_iter().collect();
        assert_eq!(s.to_string(), "{A, C}");
        assert_eq!(ArgSet::new().to_string(), "{}");
    }
}
