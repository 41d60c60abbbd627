//! Grounded, complete, preferred and stable semantics.
//!
//! Complete labellings are enumerated by backtracking over three-valued
//! assignments. The grounded labelling is fixed up front (its `in` and `out`
//! arguments carry the same label in every complete labelling), and each
//! assignment is checked against the legality conditions of the argument
//! itself and of every argument it defeats.

use super::{ArgId, ArgSet, Framework, Label, Labelling, SemanticsKind, Status};
use crate::error::Result;

/// Arguments acceptable with respect to `set`: every defeater is itself
/// defeated by a member of `set`.
pub fn characteristic_function(f: &Framework, set: &ArgSet) -> Result<ArgSet> {
    let mask = f.set_to_mask(set)?;
    Ok(f.mask_to_set(&characteristic_mask(f, &mask)))
}

pub(crate) fn characteristic_mask(f: &Framework, set: &[bool]) -> Vec<bool> {
    let defended_against: Vec<bool> = (0..f.len())
        .map(|b| f.attackers_of(b).iter().any(|&c| set[c]))
        .collect();
    (0..f.len())
        .map(|a| f.attackers_of(a).iter().all(|&b| defended_against[b]))
        .collect()
}

pub(crate) fn grounded_mask(f: &Framework) -> Vec<bool> {
    let mut current = vec![false; f.len()];
    loop {
        let next = characteristic_mask(f, &current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Least fixpoint of the characteristic function, iterated from the empty set.
pub fn grounded_extension(f: &Framework) -> ArgSet {
    f.mask_to_set(&grounded_mask(f))
}

pub(crate) fn complete_label_vectors(f: &Framework) -> Vec<Vec<Label>> {
    let grounded = grounded_mask(f);
    let mut labels: Vec<Option<Label>> = (0..f.len())
        .map(|i| {
            if grounded[i] {
                Some(Label::In)
            } else if f.attackers_of(i).iter().any(|&b| grounded[b]) {
                Some(Label::Out)
            } else {
                None
            }
        })
        .collect();
    let open: Vec<usize> = (0..f.len()).filter(|&i| labels[i].is_none()).collect();
    let mut out = Vec::new();
    search(f, &open, 0, &mut labels, &mut out);
    out.sort();
    out
}

fn search(
    f: &Framework,
    open: &[usize],
    depth: usize,
    labels: &mut Vec<Option<Label>>,
    out: &mut Vec<Vec<Label>>,
) {
    let Some(&arg) = open.get(depth) else {
        out.push(labels.iter().map(|l| l.expect("all labelled")).collect());
        return;
    };
    for label in [Label::In, Label::Out, Label::Undec] {
        labels[arg] = Some(label);
        if locally_legal(f, labels, arg)
            && f.targets_of(arg).iter().all(|&t| locally_legal(f, labels, t))
        {
            search(f, open, depth + 1, labels, out);
        }
    }
    labels[arg] = None;
}

/// Whether the label of `arg` can still be legal given the labels assigned
/// so far to its defeaters.
fn locally_legal(f: &Framework, labels: &[Option<Label>], arg: usize) -> bool {
    let Some(label) = labels[arg] else {
        return true;
    };
    let (mut any_in, mut any_undec, mut unassigned) = (false, false, false);
    for &b in f.attackers_of(arg) {
        match labels[b] {
            Some(Label::In) => any_in = true,
            Some(Label::Undec) => any_undec = true,
            Some(Label::Out) => {}
            None => unassigned = true,
        }
    }
    match label {
        Label::In => !any_in && !any_undec,
        Label::Out => any_in || unassigned,
        Label::Undec => !any_in && (any_undec || unassigned),
    }
}

fn to_labelling(f: &Framework, labels: &[Label]) -> Labelling {
    labels
        .iter()
        .enumerate()
        .map(|(i, &l)| (f.id(i).clone(), l))
        .collect()
}

/// All complete labellings, ordered by their label tuples over the sorted
/// argument names (`in` < `out` < `undec`).
pub fn complete_labellings(f: &Framework) -> Vec<Labelling> {
    complete_label_vectors(f)
        .iter()
        .map(|l| to_labelling(f, l))
        .collect()
}

fn in_mask(labels: &[Label]) -> Vec<bool> {
    labels.iter().map(|&l| l == Label::In).collect()
}

fn is_proper_subset(a: &[bool], b: &[bool]) -> bool {
    a != b && a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub(crate) fn extension_masks(f: &Framework, kind: SemanticsKind) -> Vec<Vec<bool>> {
    if kind == SemanticsKind::Grounded {
        return vec![grounded_mask(f)];
    }
    let labellings = complete_label_vectors(f);
    let mut masks: Vec<Vec<bool>> = match kind {
        SemanticsKind::Complete => labellings.iter().map(|l| in_mask(l)).collect(),
        SemanticsKind::Stable => labellings
            .iter()
            .filter(|l| !l.contains(&Label::Undec))
            .map(|l| in_mask(l))
            .collect(),
        SemanticsKind::Preferred => {
            let all: Vec<Vec<bool>> = labellings.iter().map(|l| in_mask(l)).collect();
            all.iter()
                .filter(|m| !all.iter().any(|other| is_proper_subset(m, other)))
                .cloned()
                .collect()
        }
        SemanticsKind::Grounded => unreachable!(),
    };
    masks.sort_by_key(|m| f.mask_to_set(m));
    masks.dedup();
    masks
}

pub fn complete_extensions(f: &Framework) -> Vec<ArgSet> {
    extensions(f, SemanticsKind::Complete)
}

/// Subset-maximal complete extensions; never empty.
pub fn preferred_extensions(f: &Framework) -> Vec<ArgSet> {
    extensions(f, SemanticsKind::Preferred)
}

/// Complete extensions without undecided arguments; possibly none.
pub fn stable_extensions(f: &Framework) -> Vec<ArgSet> {
    extensions(f, SemanticsKind::Stable)
}

/// Extensions of `kind` in lexicographic order. Grounded yields exactly one.
pub fn extensions(f: &Framework, kind: SemanticsKind) -> Vec<ArgSet> {
    extension_masks(f, kind)
        .iter()
        .map(|m| f.mask_to_set(m))
        .collect()
}

pub fn argument_status(f: &Framework, id: &str, kind: SemanticsKind) -> Result<Status> {
    let i = f.require(id)?;
    Ok(Evaluation::new(f, kind).status_at(i))
}

/// Extensions of one semantics computed once, with per-argument status
/// queries on top.
#[derive(Clone, Debug)]
pub struct Evaluation<'f> {
    framework: &'f Framework,
    kind: SemanticsKind,
    extensions: Vec<Vec<bool>>,
    statuses: Vec<Status>,
}

impl<'f> Evaluation<'f> {
    pub fn new(framework: &'f Framework, kind: SemanticsKind) -> Self {
        let extensions = extension_masks(framework, kind);
        let n = framework.len();
        let statuses = if kind == SemanticsKind::Grounded {
            let grounded = &extensions[0];
            (0..n)
                .map(|i| {
                    if grounded[i] {
                        Status::Justified
                    } else if framework.attackers_of(i).iter().any(|&b| grounded[b]) {
                        Status::Overruled
                    } else {
                        Status::Defensible
                    }
                })
                .collect()
        } else if extensions.is_empty() {
            vec![Status::Defensible; n]
        } else {
            (0..n)
                .map(|i| {
                    let count = extensions.iter().filter(|e| e[i]).count();
                    if count == extensions.len() {
                        Status::Justified
                    } else if count > 0 {
                        Status::Defensible
                    } else {
                        Status::Overruled
                    }
                })
                .collect()
        };
        Evaluation {
            framework,
            kind,
            extensions,
            statuses,
        }
    }

    pub fn framework(&self) -> &'f Framework {
        self.framework
    }

    pub fn kind(&self) -> SemanticsKind {
        self.kind
    }

    pub fn extensions(&self) -> Vec<ArgSet> {
        self.extensions
            .iter()
            .map(|m| self.framework.mask_to_set(m))
            .collect()
    }

    /// True only for stable semantics on a framework without stable
    /// extensions; every argument is then reported defensible.
    pub fn has_no_extension(&self) -> bool {
        self.extensions.is_empty()
    }

    pub fn status(&self, id: &str) -> Result<Status> {
        Ok(self.statuses[self.framework.require(id)?])
    }

    pub fn statuses(&self) -> Vec<(&'f ArgId, Status)> {
        self.framework
            .arguments()
            .iter()
            .zip(self.statuses.iter().copied())
            .collect()
    }

    pub(crate) fn status_at(&self, i: usize) -> Status {
        self.statuses[i]
    }

    pub(crate) fn extension_masks(&self) -> &[Vec<bool>] {
        &self.extensions
    }
}
