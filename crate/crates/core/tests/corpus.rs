use std::fs;
use std::path::PathBuf;

use defeasor_core::corpus::{list_cases, run_all, Corpus, BUNDLED_CASES};
use defeasor_core::horty::horty_conclusion_holds;
use defeasor_core::structured::{compile, parse_rule_base};
use defeasor_core::{abmodels, af, normalize, structured, Evaluation, Literal, SemanticsKind, Status};

fn corpus_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn input_files() -> Vec<PathBuf> {
    let mut files = Vec::new();
    for case in fs::read_dir(corpus_root()).unwrap() {
        for file in fs::read_dir(case.unwrap().path()).unwrap() {
            let path = file.unwrap().path();
            if matches!(path.extension().and_then(|e| e.to_str()), Some("af" | "rb" | "ab")) {
                files.push(path);
            }
        }
    }
    files.sort();
    files
}

#[test]
fn bundled_inputs_round_trip() {
    let files = input_files();
    assert!(files.len() >= 20, "found only {} input files", files.len());
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let written = match path.extension().and_then(|e| e.to_str()) {
            Some("af") => {
                let stmts: Vec<_> = af::parse_framework_statements(&text).unwrap().into_iter().map(|(_, s)| s).collect();
                af::text::write_statements(&stmts)
            }
            Some("rb") => {
                let stmts: Vec<_> = structured::parse_rule_statements(&text).unwrap().into_iter().map(|(_, s)| s).collect();
                structured::text::write_statements(&stmts)
            }
            _ => {
                let stmts: Vec<_> = abmodels::parse_theory_statements(&text).unwrap().into_iter().map(|(_, s)| s).collect();
                abmodels::text::write_statements(&stmts)
            }
        };
        assert_eq!(normalize(&written), normalize(&text), "{}", path.display());
    }
}

#[test]
fn bundled_cases_are_listed() {
    assert_eq!(list_cases(), BUNDLED_CASES.to_vec());
    let on_disk = Corpus::open(corpus_root()).case_ids().unwrap();
    assert_eq!(on_disk, BUNDLED_CASES.map(String::from).to_vec());
}

#[test]
fn every_bundled_case_passes() {
    let summary = run_all();
    assert!(summary.all_passed(), "{}", summary.render(true));
    assert_eq!(summary.cases.len(), 11);
}

#[test]
fn prefix_selects_matching_cases() {
    let summary = Corpus::open(corpus_root()).run_all(Some("witness_"));
    let ids: Vec<&str> = summary.cases.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["witness_chain", "witness_conflict", "witness_reinstated"]);
}

#[test]
fn every_expectation_has_an_anchor() {
    for case in run_all().cases {
        for o in &case.outcomes {
            assert!(!o.expectation.anchor.is_empty(), "{} line {}", case.id, o.expectation.line);
        }
    }
}

fn load(case: &str, file: &str) -> String {
    fs::read_to_string(corpus_root().join(case).join(file)).unwrap()
}

#[test]
fn interleaving_diverges_on_four_cycle() {
    let rb = parse_rule_base(&load("larry_four_cycle", "rulebase.rb")).unwrap();
    assert!(horty_conclusion_holds(&rb, &"~rich".parse().unwrap()).unwrap());
    let f = compile(&rb).unwrap().framework;
    let grounded = Evaluation::new(&f, SemanticsKind::Grounded);
    for lit in ["rich", "~rich"] {
        let lit: Literal = lit.parse().unwrap();
        assert_ne!(grounded.conclusion_status(&lit), Status::Justified, "{lit}");
    }
}

#[test]
fn interleaving_diverges_on_zombie() {
    let rb = parse_rule_base(&load("dixon_zombie", "rulebase.rb")).unwrap();
    let has_gun: Literal = "has_gun".parse().unwrap();
    assert!(horty_conclusion_holds(&rb, &has_gun).unwrap());
    let f = compile(&rb).unwrap().framework;
    assert_eq!(
        Evaluation::new(&f, SemanticsKind::Preferred).conclusion_status(&has_gun),
        Status::Defensible
    );
}

#[test]
fn compiled_rule_bases_agree_with_frameworks() {
    for case in ["tweety_magic_penguin", "larry_four_cycle", "brygt_floating", "dixon_zombie"] {
        let f = af::parse_framework(&load(case, "framework.af")).unwrap();
        let compiled = compile(&parse_rule_base(&load(case, "rulebase.rb")).unwrap()).unwrap().framework;
        for kind in [SemanticsKind::Grounded, SemanticsKind::Preferred, SemanticsKind::Stable] {
            let direct = Evaluation::new(&f, kind);
            let via_rules = Evaluation::new(&compiled, kind);
            for lit in f.literals() {
                assert_eq!(direct.conclusion_status(&lit), via_rules.conclusion_status(&lit), "{case} {lit} {kind}");
            }
        }
    }
}
