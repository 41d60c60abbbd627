//! Interleaved, deeply skeptical evaluation.
//!
//! Arguments are processed by increasing height. At each height:
//!
//! 1. every argument of that height whose subarguments are all alive is
//!    built; the rest are discarded as dead;
//! 2. *strict phase*: every live argument strictly defeated by a live
//!    argument is discarded, all at once;
//! 3. *tie phase*: every remaining live argument that is in mutual defeat
//!    with another remaining live argument is discarded, all at once.
//!
//! Discarding is permanent and discarded arguments defeat nothing
//! afterwards, so there is no reinstatement and no floating conclusion.
//! Defeat is the structured defeat relation, including propagation from
//! subarguments.
//!
//! When a strict defeater would itself be cut off in the tie phase of the
//! same height, its strict kill still lands first. This ordering is a
//! modelling commitment of this engine, not part of any published
//! definition.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::af::ArgId;
use crate::error::Result;
use crate::literal::{Conclusion, Literal};
use crate::structured::{compile_with, Argument, ConstructOptions, RuleBase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiscardReason {
    StrictlyDefeated,
    MutualTie,
    DeadSubargument,
}

impl DiscardReason {
    pub fn name(self) -> &'static str {
        match self {
            DiscardReason::StrictlyDefeated => "strictly_defeated",
            DiscardReason::MutualTie => "mutual_tie",
            DiscardReason::DeadSubargument => "dead_subargument",
        }
    }

    fn phase(self) -> &'static str {
        match self {
            DiscardReason::StrictlyDefeated => "strict",
            DiscardReason::MutualTie => "tie",
            DiscardReason::DeadSubargument => "build",
        }
    }
}

impl fmt::Display for DiscardReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discard {
    pub argument: Argument,
    pub reason: DiscardReason,
    pub height: usize,
    /// Defeaters, tie partners, or dead subarguments responsible.
    pub by: Vec<ArgId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HortyResult {
    pub survivors: Vec<Argument>,
    pub discarded: Vec<Discard>,
    pub conclusions: BTreeSet<Literal>,
}

impl HortyResult {
    /// Discard reason for an argument, `None` if it survived or is unknown.
    pub fn discard_reason(&self, id: &str) -> Option<DiscardReason> {
        self.discarded
            .iter()
            .find(|d| d.argument.id.as_str() == id)
            .map(|d| d.reason)
    }

    pub fn survived(&self, id: &str) -> bool {
        self.survivors.iter().any(|a| a.id.as_str() == id)
    }

    /// One line per discard: height, phase, argument, reason, culprits.
    pub fn trace(&self) -> String {
        let mut out = String::new();
        for d in &self.discarded {
            let by: Vec<&str> = d.by.iter().map(ArgId::as_str).collect();
            let _ = writeln!(
                out,
                "height {} {} {} {} by {}",
                d.height,
                d.reason.phase(),
                d.argument.id,
                d.reason,
                by.join(", ")
            );
        }
        out
    }
}

impl Serialize for Argument {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Argument", 4)?;
        s.serialize_field("id", &self.id)?;
        s.serialize_field("conclusion", &self.conclusion)?;
        s.serialize_field("top_rule", &self.top_rule.to_string())?;
        s.serialize_field("height", &self.height)?;
        s.end()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Fate {
    Pending,
    Live,
    Gone,
}

pub fn horty_evaluate(rb: &RuleBase) -> Result<HortyResult> {
    horty_evaluate_with(rb, ConstructOptions::default())
}

pub fn horty_evaluate_with(rb: &RuleBase, opts: ConstructOptions) -> Result<HortyResult> {
    let compiled = compile_with(rb, opts)?;
    let args = &compiled.arguments;
    let f = &compiled.framework;
    let n = args.len();
    debug_assert!(args.iter().zip(f.arguments()).all(|(a, id)| a.id == *id));

    let mut defeats = vec![vec![false; n]; n];
    for (x, y) in f.defeats() {
        defeats[f.index_of(x.as_str()).expect("known")][f.index_of(y.as_str()).expect("known")] = true;
    }
    let index_of = |id: &ArgId| f.index_of(id.as_str()).expect("subargument is constructed");

    let mut fate = vec![Fate::Pending; n];
    let mut discarded = Vec::new();
    let max_height = args.iter().map(|a| a.height).max().unwrap_or(0);

    for height in 0..=max_height {
        for i in (0..n).filter(|&i| args[i].height == height) {
            let dead: Vec<ArgId> = args[i]
                .subarguments
                .iter()
                .filter(|s| fate[index_of(&s.id)] != Fate::Live)
                .map(|s| s.id.clone())
                .collect();
            if dead.is_empty() {
                fate[i] = Fate::Live;
            } else {
                fate[i] = Fate::Gone;
                discarded.push(Discard {
                    argument: args[i].clone(),
                    reason: DiscardReason::DeadSubargument,
                    height,
                    by: dead,
                });
            }
        }

        let live: Vec<usize> = (0..n).filter(|&i| fate[i] == Fate::Live).collect();
        let strict: Vec<(usize, Vec<ArgId>)> = live
            .iter()
            .filter_map(|&y| {
                let by: Vec<ArgId> = live
                    .iter()
                    .filter(|&&x| defeats[x][y] && !defeats[y][x])
                    .map(|&x| args[x].id.clone())
                    .collect();
                (!by.is_empty()).then_some((y, by))
            })
            .collect();
        for (y, by) in strict {
            fate[y] = Fate::Gone;
            discarded.push(Discard {
                argument: args[y].clone(),
                reason: DiscardReason::StrictlyDefeated,
                height,
                by,
            });
        }

        let live: Vec<usize> = (0..n).filter(|&i| fate[i] == Fate::Live).collect();
        let ties: Vec<(usize, Vec<ArgId>)> = live
            .iter()
            .filter_map(|&y| {
                let by: Vec<ArgId> = live
                    .iter()
                    .filter(|&&x| defeats[x][y] && defeats[y][x])
                    .map(|&x| args[x].id.clone())
                    .collect();
                (!by.is_empty()).then_some((y, by))
            })
            .collect();
        for (y, by) in ties {
            fate[y] = Fate::Gone;
            discarded.push(Discard {
                argument: args[y].clone(),
                reason: DiscardReason::MutualTie,
                height,
                by,
            });
        }
    }

    let survivors: Vec<Argument> = (0..n)
        .filter(|&i| fate[i] == Fate::Live)
        .map(|i| args[i].clone())
        .collect();
    let conclusions = survivors
        .iter()
        .filter_map(|a| match &a.conclusion {
            Conclusion::Literal(l) => Some(l.clone()),
            Conclusion::Undercut(_) => None,
        })
        .collect();
    Ok(HortyResult {
        survivors,
        discarded,
        conclusions,
    })
}

pub fn horty_conclusion_holds(rb: &RuleBase, lit: &Literal) -> Result<bool> {
    Ok(horty_evaluate(rb)?.conclusions.contains(lit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured::parse_rule_base;

    fn lit(s: &str) -> Literal {
        s.parse().unwrap()
    }

    const TWEETY: &str = "fact bird.\nfact penguin.\nfact magic_penguin.\n\
        defeasible d1: bird => flies.\n\
        defeasible d2: penguin => ~flies.\n\
        defeasible d3: magic_penguin => flies.\n\
        prefer d3 > d2.\nprefer d2 > d1.\n";

    const LARRY: &str = "fact public_defender.\nfact brentwood_tenant.\n\
        strict r2: public_defender -> lawyer.\n\
        strict r6: brentwood_tenant -> brentwood_resident.\n\
        defeasible r1: lawyer => rich.\n\
        defeasible r3: public_defender => ~rich.\n\
        defeasible r5: brentwood_resident => rich.\n\
        defeasible r7: brentwood_tenant => ~rich.\n\
        prefer r3 > r1.\nprefer r7 > r5.\n";

    const DIXON: &str = "fact quaker.\nfact republican.\nfact lives_in_chicago.\n\
        defeasible quakers_pacifist: quaker => pacifist.\n\
        defeasible republicans_not_pacifist: republican => ~pacifist.\n\
        defeasible pacifists_unarmed: pacifist => ~has_gun.\n\
        defeasible chicago_armed: lives_in_chicago => has_gun.\n\
        prefer pacifists_unarmed > chicago_armed.\n";

    const BRYGT: &str = "fact born_in_holland.\nfact norwegian_name.\n\
        defeasible born_dutch: born_in_holland => dutch.\n\
        defeasible name_norwegian: norwegian_name => ~dutch.\n\
        defeasible dutch_skate: dutch => likes_ice_skating.\n\
        defeasible norwegian_skate: ~dutch => likes_ice_skating.\n";

    #[test]
    fn larry_concludes_not_rich() {
        let r = horty_evaluate(&parse_rule_base(LARRY).unwrap()).unwrap();
        assert!(r.conclusions.contains(&lit("~rich")));
        assert!(!r.conclusions.contains(&lit("rich")));
        for id in ["r1[r2[public_defender]]", "r5[r6[brentwood_tenant]]"] {
            assert_eq!(r.discard_reason(id), Some(DiscardReason::StrictlyDefeated), "{id}");
        }
        assert!(r.survived("r3[public_defender]"));
        assert!(r.survived("r7[brentwood_tenant]"));
    }

    #[test]
    fn dixon_concludes_has_gun() {
        let r = horty_evaluate(&parse_rule_base(DIXON).unwrap()).unwrap();
        assert!(r.conclusions.contains(&lit("has_gun")));
        assert_eq!(
            r.discard_reason("quakers_pacifist[quaker]"),
            Some(DiscardReason::MutualTie)
        );
        assert_eq!(
            r.discard_reason("republicans_not_pacifist[republican]"),
            Some(DiscardReason::MutualTie)
        );
        assert_eq!(
            r.discard_reason("pacifists_unarmed[quakers_pacifist[quaker]]"),
            Some(DiscardReason::DeadSubargument)
        );
        assert!(r.survived("chicago_armed[lives_in_chicago]"));
    }

    #[test]
    fn tweety_bird_argument_is_not_reinstated() {
        let r = horty_evaluate(&parse_rule_base(TWEETY).unwrap()).unwrap();
        assert!(r.conclusions.contains(&lit("flies")));
        assert_eq!(r.discard_reason("d1[bird]"), Some(DiscardReason::StrictlyDefeated));
        assert_eq!(r.discard_reason("d2[penguin]"), Some(DiscardReason::StrictlyDefeated));
        let flyers: Vec<&str> = r
            .survivors
            .iter()
            .filter(|a| a.conclusion == Conclusion::Literal(lit("flies")))
            .map(|a| a.id.as_str())
            .collect();
        assert_eq!(flyers, ["d3[magic_penguin]"]);
    }

    #[test]
    fn floating_conclusion_is_not_drawn() {
        let rb = parse_rule_base(BRYGT).unwrap();
        assert!(!horty_conclusion_holds(&rb, &lit("likes_ice_skating")).unwrap());
        assert!(!horty_conclusion_holds(&parse_rule_base(LARRY).unwrap(), &lit("rich")).unwrap());
    }

    #[test]
    fn facts_always_hold() {
        let rb = parse_rule_base("fact a.\nfact ~b.\n").unwrap();
        assert!(horty_conclusion_holds(&rb, &lit("a")).unwrap());
        assert!(horty_conclusion_holds(&rb, &lit("~b")).unwrap());
        assert!(!horty_conclusion_holds(&rb, &lit("b")).unwrap());
    }

    #[test]
    fn every_argument_is_accounted_for_once() {
        for src in [TWEETY, LARRY, DIXON, BRYGT] {
            let rb = parse_rule_base(src).unwrap();
            let r = horty_evaluate(&rb).unwrap();
            let total = crate::structured::construct_arguments(&rb).unwrap().len();
            let mut seen: BTreeSet<&str> = r.survivors.iter().map(|a| a.id.as_str()).collect();
            for d in &r.discarded {
                assert!(seen.insert(d.argument.id.as_str()), "{} twice", d.argument.id);
            }
            assert_eq!(seen.len(), total);
        }
    }

    #[test]
    fn trace_lists_each_discard() {
        let r = horty_evaluate(&parse_rule_base(DIXON).unwrap()).unwrap();
        let trace = r.trace();
        assert_eq!(trace.lines().count(), r.discarded.len());
        assert!(trace.contains(
            "height 2 build pacifists_unarmed[quakers_pacifist[quaker]] dead_subargument by quakers_pacifist[quaker]"
        ));
    }
}
