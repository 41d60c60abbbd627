use std::collections::BTreeSet;

use super::construct::{construct_arguments_with, Argument, ConstructOptions};
use super::RuleBase;
use crate::af::{ArgId, Framework};
use crate::error::Result;
use crate::literal::Conclusion;

/// Elitist weakest-link: `attacker` is strictly weaker than `target` when
/// one of its last defeasible rules is below every last defeasible rule of
/// the target. An attacker without defeasible rules is never weaker.
fn strictly_weaker(rb: &RuleBase, attacker: &BTreeSet<String>, target: &BTreeSet<String>) -> bool {
    !target.is_empty()
        && attacker
            .iter()
            .any(|x| target.iter().all(|y| rb.prefers(y, x)))
}

/// Whether `x` defeats `y` on `y`'s own top rule (no propagation).
pub(crate) fn defeats_directly(rb: &RuleBase, x: &Argument, y: &Argument) -> bool {
    let Some(top) = y.top_rule.defeasible_name() else {
        return false;
    };
    match (&x.conclusion, &y.conclusion) {
        (Conclusion::Undercut(rule), _) => rule == top,
        (Conclusion::Literal(a), Conclusion::Literal(b)) => {
            a.complement() == *b && !strictly_weaker(rb, &x.last_defeasible, &y.last_defeasible)
        }
        (Conclusion::Literal(_), Conclusion::Undercut(_)) => false,
    }
}

/// Compiles constructed arguments into a framework with subargument and
/// conclusion maps. Defeats on a subargument propagate to every argument
/// built on it.
pub fn compute_defeats(args: &[Argument], rb: &RuleBase) -> Result<Framework> {
    let mut defeats = Vec::new();
    for y in args {
        for x in args {
            if defeats_directly(rb, x, y) {
                defeats.push((x.id.clone(), y.id.clone()));
            }
        }
    }
    let subargs: Vec<(ArgId, ArgId)> = args
        .iter()
        .flat_map(|p| p.subarguments.iter().map(move |c| (c.id.clone(), p.id.clone())))
        .collect();
    Framework::new(
        args.iter().map(|a| a.id.clone()),
        defeats,
        subargs,
        args.iter().map(|a| (a.id.clone(), a.conclusion.clone())),
    )
}

/// Arguments of a rule base together with their compiled framework.
#[derive(Clone, Debug)]
pub struct Compiled {
    pub arguments: Vec<Argument>,
    pub framework: Framework,
}

impl Compiled {
    pub fn argument(&self, id: &str) -> Option<&Argument> {
        self.arguments
            .binary_search_by(|a| a.id.as_str().cmp(id))
            .ok()
            .map(|i| &self.arguments[i])
    }
}

pub fn compile(rb: &RuleBase) -> Result<Compiled> {
    compile_with(rb, ConstructOptions::default())
}

pub fn compile_with(rb: &RuleBase, opts: ConstructOptions) -> Result<Compiled> {
    let arguments = construct_arguments_with(rb, opts)?;
    let framework = compute_defeats(&arguments, rb)?;
    Ok(Compiled {
        arguments,
        framework,
    })
}
