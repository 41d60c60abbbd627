//! Side-by-side conclusion statuses of one rule base under every engine.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::af::{Evaluation, SemanticsKind, Status};
use crate::error::Result;
use crate::horty::horty_evaluate_with;
use crate::literal::Literal;
use crate::structured::{compile_with, detect_zombies, ConstructOptions, RuleBase};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffRow {
    pub literal: Literal,
    pub grounded: Status,
    pub preferred: Status,
    pub stable: Status,
    pub horty: bool,
    pub floating_preferred: bool,
    pub floating_stable: bool,
    /// All three statuses coincide and the interleaved engine draws the
    /// literal exactly when it is justified.
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Zombie {
    pub zombie: String,
    pub victim: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub rows: Vec<DiffRow>,
    /// Zombie pairs under preferred semantics.
    pub zombies: Vec<Zombie>,
    pub no_stable_extension: bool,
}

impl DiffReport {
    pub fn row(&self, lit: &Literal) -> Option<&DiffRow> {
        self.rows.iter().find(|r| r.literal == *lit)
    }
}

pub fn diff(rb: &RuleBase) -> Result<DiffReport> {
    diff_with(rb, ConstructOptions::default())
}

/// Rows cover every concluded literal and every query, sorted.
pub fn diff_with(rb: &RuleBase, opts: ConstructOptions) -> Result<DiffReport> {
    let compiled = compile_with(rb, opts)?;
    let f = &compiled.framework;
    let horty = horty_evaluate_with(rb, opts)?;
    let grounded = Evaluation::new(f, SemanticsKind::Grounded);
    let preferred = Evaluation::new(f, SemanticsKind::Preferred);
    let stable = Evaluation::new(f, SemanticsKind::Stable);
    let floating_preferred: BTreeSet<Literal> = preferred.floating_conclusions()?.into_iter().collect();
    let floating_stable: BTreeSet<Literal> = stable.floating_conclusions()?.into_iter().collect();

    let literals: BTreeSet<Literal> = f
        .literals()
        .into_iter()
        .chain(rb.queries().iter().cloned())
        .collect();
    let rows = literals
        .into_iter()
        .map(|lit| {
            let (g, p, s) = (
                grounded.conclusion_status(&lit),
                preferred.conclusion_status(&lit),
                stable.conclusion_status(&lit),
            );
            let h = horty.conclusions.contains(&lit);
            DiffRow {
                grounded: g,
                preferred: p,
                stable: s,
                horty: h,
                floating_preferred: floating_preferred.contains(&lit),
                floating_stable: floating_stable.contains(&lit),
                agree: g == p && p == s && h == (g == Status::Justified),
                literal: lit,
            }
        })
        .collect();
    let zombies = detect_zombies(f, SemanticsKind::Preferred)
        .into_iter()
        .map(|(z, v)| Zombie {
            zombie: z.to_string(),
            victim: v.to_string(),
        })
        .collect();
    Ok(DiffReport {
        rows,
        zombies,
        no_stable_extension: stable.has_no_extension(),
    })
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .map(|r| r.literal.to_string().len())
            .chain(["literal".len()])
            .max()
            .unwrap_or(0);
        writeln!(
            f,
            "{:width$}  {:10}  {:10}  {:10}  {:5}  floating",
            "literal", "grounded", "preferred", "stable", "horty"
        )?;
        for r in &self.rows {
            let floating: Vec<&str> = [(r.floating_preferred, "preferred"), (r.floating_stable, "stable")]
                .into_iter()
                .filter_map(|(on, name)| on.then_some(name))
                .collect();
            let floating = if floating.is_empty() { "-".to_string() } else { floating.join(",") };
            writeln!(
                f,
                "{:width$}  {:10}  {:10}  {:10}  {:5}  {floating}",
                r.literal.to_string(),
                r.grounded.name(),
                r.preferred.name(),
                r.stable.name(),
                r.horty
            )?;
        }
        if self.no_stable_extension {
            writeln!(f, "no stable extension")?;
        }
        if self.zombies.is_empty() {
            writeln!(f, "zombies (preferred): none")?;
        } else {
            writeln!(f, "zombies (preferred):")?;
            for z in &self.zombies {
                writeln!(f, "  {} -> {}", z.zombie, z.victim)?;
            }
        }
        Ok(())
    }
}
