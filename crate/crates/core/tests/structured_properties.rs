mod common;

use std::collections::BTreeSet;

use common::{rule_base, rule_statements, rule_statements_and_shuffle};
use defeasor_core::structured::{compile, parse_rule_base, Compiled};
use defeasor_core::{Conclusion, Evaluation, SemanticsKind, Status};
use proptest::prelude::*;

fn ids(c: &Compiled) -> Vec<String> {
    c.arguments.iter().map(|a| a.id.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn subarguments_are_constructed(stmts in rule_statements()) {
        let c = compile(&rule_base(&stmts)).unwrap();
        let all: BTreeSet<String> = ids(&c).into_iter().collect();
        for a in &c.arguments {
            for sub in a.proper_subarguments() {
                prop_assert!(all.contains(sub.id.as_str()), "{} missing for {}", sub.id, a.id);
            }
        }
    }

    #[test]
    fn defeats_propagate_to_super_arguments(stmts in rule_statements()) {
        let f = compile(&rule_base(&stmts)).unwrap().framework;
        let subs = f.subarguments();
        for (x, child) in f.defeats() {
            for &(c, parent) in &subs {
                if c == child {
                    prop_assert!(f.defeats_pair(x.as_str(), parent.as_str()), "{} -> {} not propagated to {}", x, child, parent);
                }
            }
        }
    }

    #[test]
    fn undercuts_ignore_priorities(stmts in rule_statements()) {
        let rb = rule_base(&stmts);
        let with = compile(&rb).unwrap();
        let without = compile(&rb.without_priorities()).unwrap().framework;
        for (x, y) in with.framework.defeats() {
            if matches!(with.framework.conclusion(x.as_str()), Some(Conclusion::Undercut(_))) {
                prop_assert!(without.defeats_pair(x.as_str(), y.as_str()), "undercut {} -> {} lost", x, y);
            }
        }
    }

    #[test]
    fn strict_arguments_are_never_defeated(stmts in rule_statements()) {
        let c = compile(&rule_base(&stmts)).unwrap();
        for a in c.arguments.iter().filter(|a| a.is_strict()) {
            prop_assert!(c.framework.defeaters(a.id.as_str()).unwrap().is_empty(), "{} is defeated", a.id);
        }
    }

    #[test]
    fn compilation_ignores_declaration_order((stmts, shuffled) in rule_statements_and_shuffle()) {
        let a = compile(&rule_base(&stmts)).unwrap();
        let b = compile(&rule_base(&shuffled)).unwrap();
        prop_assert_eq!(ids(&a), ids(&b));
        prop_assert_eq!(a.framework, b.framework);
    }

    #[test]
    fn framework_text_round_trips(stmts in rule_statements()) {
        let f = compile(&rule_base(&stmts)).unwrap().framework;
        let reparsed = defeasor_core::af::parse_framework(&f.to_text()).unwrap();
        prop_assert_eq!(reparsed, f);
    }
}

const TWEETY: &str = "\
fact bird.
fact penguin.
defeasible d1: bird => flies.
defeasible d2: penguin => ~flies.
prefer d2 > d1.
";

#[test]
fn reinstatement_regression() {
    let rb = parse_rule_base(&format!("{TWEETY}fact magic_penguin.\ndefeasible d3: magic_penguin => flies.\nprefer d3 > d2.\n")).unwrap();
    let c = compile(&rb).unwrap();
    let grounded = Evaluation::new(&c.framework, SemanticsKind::Grounded);
    assert_eq!(grounded.status("d1[bird]").unwrap(), Status::Justified);

    // Exceptions as undercutters of the general rule keep it out.
    let rb = parse_rule_base(
        "fact bird.\nfact penguin.\nfact magic_penguin.\n\
         defeasible d1: bird => flies.\n\
         defeasible d2: penguin => ~flies.\n\
         defeasible d3: magic_penguin => flies.\n\
         defeasible u1: penguin => !d1.\n\
         defeasible u2: magic_penguin => !d2.\n",
    )
    .unwrap();
    let c = compile(&rb).unwrap();
    let grounded = Evaluation::new(&c.framework, SemanticsKind::Grounded);
    assert_eq!(grounded.status("d1[bird]").unwrap(), Status::Overruled);
    assert_eq!(grounded.status("d3[magic_penguin]").unwrap(), Status::Justified);
}

#[test]
fn rebut_needs_defeasible_top_rule() {
    let rb = parse_rule_base("fact bird.\nfact ~flies.\ndefeasible d1: bird => flies.\n").unwrap();
    let c = compile(&rb).unwrap();
    assert!(c.framework.defeats_pair("~flies", "d1[bird]"));
    assert!(!c.framework.defeats_pair("d1[bird]", "~flies"));
}

#[test]
fn equal_rules_defeat_each_other() {
    let rb = parse_rule_base("fact a.\ndefeasible r1: a => p.\ndefeasible r2: a => ~p.\n").unwrap();
    let f = compile(&rb).unwrap().framework;
    assert!(f.defeats_pair("r1[a]", "r2[a]"));
    assert!(f.defeats_pair("r2[a]", "r1[a]"));
}
