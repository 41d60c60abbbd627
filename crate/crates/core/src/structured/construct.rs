use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use super::{Rule, RuleBase, RuleKind};
use crate::af::ArgId;
use crate::error::{Error, Result};
use crate::literal::{Conclusion, Literal};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TopRule {
    Fact,
    Strict(String),
    Defeasible(String),
}

impl TopRule {
    pub fn defeasible_name(&self) -> Option<&str> {
        match self {
            TopRule::Defeasible(name) => Some(name),
            _ => None,
        }
    }
}

impl fmt::Display for TopRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopRule::Fact => f.write_str("fact"),
            TopRule::Strict(n) | TopRule::Defeasible(n) => f.write_str(n),
        }
    }
}

/// A derivation tree. The id is a canonical rendering of the tree: a fact
/// is its literal (`bird`, `~bird`), a rule application is
/// `rule[sub1+sub2]` with subarguments in body order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Argument {
    pub id: ArgId,
    pub conclusion: Conclusion,
    pub top_rule: TopRule,
    pub subarguments: Vec<Arc<Argument>>,
    /// Rule applications on the longest branch; facts have height 0.
    pub height: usize,
    /// Defeasible rules applied last on each branch.
    pub last_defeasible: BTreeSet<String>,
}

impl Argument {
    pub fn fact(lit: &Literal) -> Self {
        Argument {
            id: ArgId::new(lit.to_string()),
            conclusion: Conclusion::Literal(lit.clone()),
            top_rule: TopRule::Fact,
            subarguments: Vec::new(),
            height: 0,
            last_defeasible: BTreeSet::new(),
        }
    }

    fn apply(rule: &Rule, subs: Vec<Arc<Argument>>) -> Self {
        let id = format!(
            "{}[{}]",
            rule.name,
            subs.iter().map(|a| a.id.as_str()).join("+")
        );
        let height = 1 + subs.iter().map(|a| a.height).max().unwrap_or(0);
        let (top_rule, last_defeasible) = match rule.kind {
            RuleKind::Defeasible => (
                TopRule::Defeasible(rule.name.clone()),
                BTreeSet::from([rule.name.clone()]),
            ),
            RuleKind::Strict => (
                TopRule::Strict(rule.name.clone()),
                subs.iter()
                    .flat_map(|a| a.last_defeasible.iter().cloned())
                    .collect(),
            ),
        };
        Argument {
            id: ArgId::new(id),
            conclusion: rule.head.clone(),
            top_rule,
            subarguments: subs,
            height,
            last_defeasible,
        }
    }

    /// No defeasible rule anywhere in the tree.
    pub fn is_strict(&self) -> bool {
        self.top_rule.defeasible_name().is_none()
            && self.subarguments.iter().all(|a| a.is_strict())
    }

    /// Proper subarguments, transitively.
    pub fn proper_subarguments(&self) -> Vec<&Argument> {
        let mut out = Vec::new();
        let mut stack: Vec<&Argument> = self.subarguments.iter().map(|a| a.as_ref()).collect();
        while let Some(a) = stack.pop() {
            out.push(a);
            stack.extend(a.subarguments.iter().map(|s| s.as_ref()));
        }
        out
    }

    /// Every rule name used in the tree.
    pub fn rules_used(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        if let TopRule::Strict(n) | TopRule::Defeasible(n) = &self.top_rule {
            out.insert(n.as_str());
        }
        for sub in &self.subarguments {
            out.extend(sub.rules_used());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructOptions {
    pub height_cap: usize,
    pub max_arguments: usize,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        ConstructOptions {
            height_cap: 32,
            max_arguments: 100_000,
        }
    }
}

fn admit(
    arg: Argument,
    all: &mut BTreeMap<ArgId, Arc<Argument>>,
    by_literal: &mut BTreeMap<Literal, Vec<Arc<Argument>>>,
) {
    let arg = Arc::new(arg);
    if let Conclusion::Literal(lit) = &arg.conclusion {
        by_literal.entry(lit.clone()).or_default().push(arg.clone());
    }
    all.insert(arg.id.clone(), arg);
}

pub fn construct_arguments(rb: &RuleBase) -> Result<Vec<Argument>> {
    construct_arguments_with(rb, ConstructOptions::default())
}

/// Least set of arguments closed under rule application, sorted by id.
/// Fails once an argument would exceed the height cap, which is how cyclic
/// rule bases surface.
pub fn construct_arguments_with(rb: &RuleBase, opts: ConstructOptions) -> Result<Vec<Argument>> {
    let mut all: BTreeMap<ArgId, Arc<Argument>> = BTreeMap::new();
    let mut by_literal: BTreeMap<Literal, Vec<Arc<Argument>>> = BTreeMap::new();

    for lit in rb.facts() {
        admit(Argument::fact(lit), &mut all, &mut by_literal);
    }

    loop {
        let mut fresh: BTreeMap<ArgId, Argument> = BTreeMap::new();
        for rule in rb.rules() {
            let Some(pools) = rule
                .body
                .iter()
                .map(|l| by_literal.get(l))
                .collect::<Option<Vec<_>>>()
            else {
                continue;
            };
            for combo in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                let arg = Argument::apply(rule, combo.into_iter().cloned().collect());
                if all.contains_key(&arg.id) || fresh.contains_key(&arg.id) {
                    continue;
                }
                if arg.height > opts.height_cap {
                    return Err(Error::CyclicRuleBase {
                        argument: arg.id.to_string(),
                        cap: opts.height_cap,
                    });
                }
                fresh.insert(arg.id.clone(), arg);
            }
        }
        if fresh.is_empty() {
            break;
        }
        for arg in fresh.into_values() {
            admit(arg, &mut all, &mut by_literal);
        }
        if all.len() > opts.max_arguments {
            return Err(Error::TooManyArguments(opts.max_arguments));
        }
    }

    Ok(all.into_values().map(|a| (*a).clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured::parse_rule_base;

    fn ids(args: &[Argument]) -> Vec<&str> {
        args.iter().map(|a| a.id.as_str()).collect()
    }

    #[test]
    fn tweety_has_six_arguments() {
        let rb = parse_rule_base(
            "fact bird.\nfact penguin.\nfact magic_penguin.\n\
             defeasible d1: bird => flies.\n\
             defeasible d2: penguin => ~flies.\n\
             defeasible d3: magic_penguin => flies.\n",
        )
        .unwrap();
        let args = construct_arguments(&rb).unwrap();
        assert_eq!(
            ids(&args),
            ["bird", "d1[bird]", "d2[penguin]", "d3[magic_penguin]", "magic_penguin", "penguin"]
        );
        let a = &args[1];
        assert_eq!(a.height, 1);
        assert_eq!(a.last_defeasible, BTreeSet::from(["d1".to_string()]));
        assert!(!a.is_strict());
        assert!(args[0].is_strict());
    }

    #[test]
    fn empty_rule_base_has_no_arguments() {
        assert!(construct_arguments(&RuleBase::default()).unwrap().is_empty());
    }

    #[test]
    fn witness_undercutters_are_built_per_instance() {
        let rb = parse_rule_base(
            "fact says_john_stabbed.\nfact says_bob_shot.\n\
             defeasible r1_john: says_john_stabbed => stabbed.\n\
             defeasible r1_bob: says_bob_shot => shot.\n\
             defeasible r2_bob_vs_john: says_bob_shot, says_john_stabbed => !r1_john.\n\
             defeasible r2_john_vs_bob: says_john_stabbed, says_bob_shot => !r1_bob.\n",
        )
        .unwrap();
        let args = construct_arguments(&rb).unwrap();
        assert_eq!(args.len(), 6);
        let facts = args.iter().filter(|a| a.top_rule == TopRule::Fact).count();
        let undercutters = args
            .iter()
            .filter(|a| matches!(a.conclusion, Conclusion::Undercut(_)))
            .count();
        assert_eq!((facts, undercutters), (2, 2));
        assert!(ids(&args).contains(&"r2_bob_vs_john[says_bob_shot+says_john_stabbed]"));
    }

    #[test]
    fn strict_rules_pass_last_defeasible_through() {
        let rb = parse_rule_base(
            "fact a.\ndefeasible d: a => b.\nstrict s: b, a -> c.\nstrict t: c -> e.\n",
        )
        .unwrap();
        let args = construct_arguments(&rb).unwrap();
        let top = args.iter().find(|x| x.id.as_str() == "t[s[d[a]+a]]").unwrap();
        assert_eq!(top.height, 3);
        assert_eq!(top.last_defeasible, BTreeSet::from(["d".to_string()]));
        assert_eq!(top.proper_subarguments().len(), 4);
        assert_eq!(top.rules_used(), BTreeSet::from(["d", "s", "t"]));
    }

    #[test]
    fn cyclic_rule_base_hits_height_cap() {
        let rb = parse_rule_base("fact a.\ndefeasible loop: a => a.\n").unwrap();
        let err = construct_arguments_with(
            &rb,
            ConstructOptions {
                height_cap: 5,
                ..ConstructOptions::default()
            },
        )
        .unwrap_err();
        assert!(matches!(err, Error::CyclicRuleBase { cap: 5, .. }));
        assert!(matches!(
            construct_arguments(&rb),
            Err(Error::CyclicRuleBase { cap: 32, .. })
        ));
    }
}
