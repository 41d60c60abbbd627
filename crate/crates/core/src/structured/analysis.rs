//! Conclusion-level statuses, floating conclusions and zombie arguments.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::af::{ArgId, Evaluation, Framework, SemanticsKind, Status};
use crate::error::{Error, Result};
use crate::literal::{Conclusion, Literal};

impl Evaluation<'_> {
    fn supporters(&self, lit: &Literal) -> Vec<usize> {
        let f = self.framework();
        (0..f.len())
            .filter(|&i| matches!(f.conclusion_at(i), Some(Conclusion::Literal(l)) if l == lit))
            .collect()
    }

    /// Grounded: the best status among supporting arguments. Multi-extension
    /// kinds: justified when every extension contains some supporter (not
    /// necessarily the same one). Unsupported literals are overruled.
    pub fn conclusion_status(&self, lit: &Literal) -> Status {
        let supporters = self.supporters(lit);
        if supporters.is_empty() {
            return Status::Overruled;
        }
        if self.kind() == SemanticsKind::Grounded {
            return supporters
                .iter()
                .map(|&i| self.status_at(i))
                .min()
                .expect("nonempty");
        }
        let exts = self.extension_masks();
        if exts.is_empty() {
            return Status::Defensible;
        }
        let covered = exts
            .iter()
            .filter(|e| supporters.iter().any(|&s| e[s]))
            .count();
        if covered == exts.len() {
            Status::Justified
        } else if covered > 0 {
            Status::Defensible
        } else {
            Status::Overruled
        }
    }

    /// Literals supported in every extension although no single supporting
    /// argument is in all of them.
    pub fn floating_conclusions(&self) -> Result<Vec<Literal>> {
        if !self.kind().is_multi_extension() {
            return Err(Error::UnsupportedSemantics(self.kind().to_string()));
        }
        let exts = self.extension_masks();
        if exts.is_empty() {
            return Ok(Vec::new());
        }
        Ok(self
            .framework()
            .literals()
            .into_iter()
            .filter(|lit| {
                let supporters = self.supporters(lit);
                let everywhere = exts.iter().all(|e| supporters.iter().any(|&s| e[s]));
                let single = supporters.iter().any(|&s| exts.iter().all(|e| e[s]));
                everywhere && !single
            })
            .collect())
    }
}

pub fn conclusion_status(f: &Framework, lit: &Literal, kind: SemanticsKind) -> Status {
    Evaluation::new(f, kind).conclusion_status(lit)
}

pub fn detect_floating_conclusions(f: &Framework, kind: SemanticsKind) -> Result<Vec<Literal>> {
    Evaluation::new(f, kind).floating_conclusions()
}

/// Pairs (zombie, victim): the zombie is defensible, and removing it
/// together with every argument built on it changes the victim's status.
pub fn detect_zombies(f: &Framework, kind: SemanticsKind) -> Vec<(ArgId, ArgId)> {
    let base = Evaluation::new(f, kind);
    let mut out = Vec::new();
    for z in 0..f.len() {
        if base.status_at(z) != Status::Defensible {
            continue;
        }
        let removed: BTreeSet<&ArgId> = std::iter::once(z)
            .chain(f.supers_of(z).iter().copied())
            .map(|i| f.id(i))
            .collect();
        let reduced = f.restrict(|id| !removed.contains(id));
        let after = Evaluation::new(&reduced, kind);
        for (victim, status) in after.statuses() {
            let before = base.status(victim.as_str()).expect("victim is in the original");
            if before != status {
                out.push((f.id(z).clone(), victim.clone()));
            }
        }
    }
    out
}

/// Status of one literal under every semantics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConclusionReport {
    pub literal: Literal,
    pub statuses: BTreeMap<SemanticsKind, Status>,
    /// Floating under preferred semantics.
    pub floating: bool,
    pub supported: bool,
}

pub fn conclusion_reports(f: &Framework) -> Vec<ConclusionReport> {
    let evals: Vec<Evaluation<'_>> = SemanticsKind::ALL
        .into_iter()
        .map(|k| Evaluation::new(f, k))
        .collect();
    let floating: BTreeSet<Literal> = evals[2]
        .floating_conclusions()
        .expect("preferred is multi-extension")
        .into_iter()
        .collect();
    f.literals()
        .into_iter()
        .map(|lit| ConclusionReport {
            statuses: evals
                .iter()
                .map(|e| (e.kind(), e.conclusion_status(&lit)))
                .collect(),
            floating: floating.contains(&lit),
            supported: true,
            literal: lit,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::af::text::parse_framework;

    const BRYGT: &str = "\
arg(A_minus).\narg(A).\narg(B_minus).\narg(B).
sub(A_minus, A).\nsub(B_minus, B).
att(A_minus, B_minus).\natt(B_minus, A_minus).
conc(A_minus, dutch).\nconc(B_minus, ~dutch).
conc(A, likes_ice_skating).\nconc(B, likes_ice_skating).
";

    const DIXON: &str = "\
arg(A_minus).\narg(A).\narg(B).\narg(C).
sub(A_minus, A).
att(A_minus, B).\natt(B, A_minus).\natt(A, C).
conc(A_minus, pacifist).\nconc(B, ~pacifist).
conc(A, ~has_gun).\nconc(C, has_gun).
";

    const LARRY: &str = "\
arg(A).\narg(B).\narg(C).\narg(D).
att(B, A).\natt(D, C).\natt(A, D).\natt(D, A).\natt(B, C).\natt(C, B).
conc(A, rich).\nconc(B, ~rich).\nconc(C, rich).\nconc(D, ~rich).
";

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    #[test]
    fn floating_conclusion_is_justified_only_with_multiple_extensions() {
        let f = parse_framework(BRYGT).unwrap();
        let skate = lit("likes_ice_skating");
        assert_eq!(conclusion_status(&f, &skate, SemanticsKind::Preferred), Status::Justified);
        assert_eq!(conclusion_status(&f, &skate, SemanticsKind::Stable), Status::Justified);
        assert_eq!(conclusion_status(&f, &skate, SemanticsKind::Grounded), Status::Defensible);
        assert_eq!(
            detect_floating_conclusions(&f, SemanticsKind::Preferred).unwrap(),
            vec![skate.clone()]
        );
        assert_eq!(
            detect_floating_conclusions(&f, SemanticsKind::Grounded),
            Err(Error::UnsupportedSemantics("grounded".into()))
        );
    }

    #[test]
    fn opposite_extensions_do_not_float() {
        let f = parse_framework(LARRY).unwrap();
        assert!(detect_floating_conclusions(&f, SemanticsKind::Preferred).unwrap().is_empty());
        assert_eq!(
            conclusion_status(&f, &lit("~rich"), SemanticsKind::Preferred),
            Status::Defensible
        );
    }

    #[test]
    fn justified_argument_is_not_floating() {
        let f = parse_framework("arg(A).\nconc(A, p).\n").unwrap();
        assert!(detect_floating_conclusions(&f, SemanticsKind::Preferred).unwrap().is_empty());
        assert_eq!(conclusion_status(&f, &lit("p"), SemanticsKind::Grounded), Status::Justified);
        assert_eq!(conclusion_status(&f, &lit("q"), SemanticsKind::Grounded), Status::Overruled);
    }

    #[test]
    fn dixon_zombies() {
        let f = parse_framework(DIXON).unwrap();
        let zombies: Vec<String> = detect_zombies(&f, SemanticsKind::Preferred)
            .iter()
            .map(|(z, v)| format!("{z}>{v}"))
            .collect();
        assert_eq!(
            zombies,
            ["A>C", "A_minus>B", "A_minus>C", "B>A", "B>A_minus", "B>C"]
        );
        assert_eq!(
            conclusion_status(&f, &lit("has_gun"), SemanticsKind::Preferred),
            Status::Defensible
        );
    }

    #[test]
    fn no_zombies_without_defensible_arguments() {
        let chain = parse_framework("arg(A).\narg(B).\narg(C).\natt(B, A).\natt(C, B).\n").unwrap();
        for kind in SemanticsKind::ALL {
            assert!(detect_zombies(&chain, kind).is_empty());
        }
        assert!(detect_zombies(&Framework::empty(), SemanticsKind::Preferred).is_empty());
    }

    #[test]
    fn reports_flag_floating_literals() {
        let f = parse_framework(BRYGT).unwrap();
        let reports = conclusion_reports(&f);
        let skate = reports.iter().find(|r| r.literal == lit("likes_ice_skating")).unwrap();
        assert!(skate.floating);
        assert_eq!(skate.statuses[&SemanticsKind::Grounded], Status::Defensible);
        assert!(reports.iter().filter(|r| r.floating).count() == 1);
    }
}
