//! Worked cases with expected outcomes, and a runner that checks them.
//!
//! A corpus is a directory with one subdirectory per case. A case holds its
//! input files (`*.af`, `*.rb`, `*.ab`) and an `expect.txt` (see
//! [`expect`]). The bundled corpus ships with this crate; the
//! `DEFEASOR_CORPUS_DIR` environment variable points the runner elsewhere.

pub mod expect;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::abmodels::{self, parse_theory, Theory};
use crate::af::{parse_framework, Evaluation, Framework, SemanticsKind};
use crate::error::{Error, Result};
use crate::horty::{horty_evaluate, HortyResult};
use crate::structured::{compile, detect_zombies, parse_rule_base, Compiled, RuleBase};

pub use expect::{parse_expectations, Engine, Expectation, Query};

pub const CORPUS_DIR_ENV: &str = "DEFEASOR_CORPUS_DIR";

/// Ids of the bundled cases, sorted.
pub const BUNDLED_CASES: [&str; 11] = [
    "brygt_floating",
    "dixon_zombie",
    "indirect_reinstatement",
    "larry_four_cycle",
    "microsoft",
    "punishment",
    "spies",
    "tweety_magic_penguin",
    "witness_chain",
    "witness_conflict",
    "witness_reinstated",
];

pub fn list_cases() -> Vec<&'static str> {
    BUNDLED_CASES.to_vec()
}

/// Runs one case of the bundled corpus.
pub fn run_case(id: &str) -> Result<CaseReport> {
    Corpus::bundled().run_case(id)
}

/// Runs every case of the bundled corpus.
pub fn run_all() -> Summary {
    Corpus::bundled().run_all(None)
}

#[derive(Clone, Debug)]
enum Input {
    Framework(Framework),
    RuleBase(RuleBase),
    Theory(Theory),
}

/// A loaded case: parsed inputs and expectations.
#[derive(Clone, Debug)]
pub struct Case {
    pub id: String,
    pub expectations: Vec<Expectation>,
    inputs: BTreeMap<String, Input>,
}

impl Case {
    pub fn load(dir: &Path, id: &str) -> Result<Case> {
        let err = |message: String| Error::Corpus {
            case: id.to_string(),
            message,
        };
        let read = |name: &str| {
            fs::read_to_string(dir.join(name)).map_err(|e| err(format!("{name}: {e}")))
        };
        let expectations = parse_expectations(&read("expect.txt")?)
            .map_err(|(line, m)| err(format!("expect.txt line {line}: {m}")))?;
        if expectations.is_empty() {
            return Err(err("expect.txt has no expectations".into()));
        }
        let mut files: BTreeSet<String> = expectations.iter().map(Expectation::input_file).collect();
        if expectations.iter().any(|e| e.query == Query::Crosscheck) {
            files.insert("framework.af".into());
        }
        let mut inputs = BTreeMap::new();
        for name in files {
            let text = read(&name)?;
            let parsed = match name.rsplit_once('.').map(|(_, ext)| ext) {
                Some("af") => parse_framework(&text).map(Input::Framework),
                Some("rb") => parse_rule_base(&text).map(Input::RuleBase),
                _ => parse_theory(&text).map(Input::Theory),
            }
            .map_err(|e| err(format!("{name}: {e}")))?;
            inputs.insert(name, parsed);
        }
        Ok(Case {
            id: id.to_string(),
            expectations,
            inputs,
        })
    }

    pub fn run(&self) -> CaseReport {
        let start = Instant::now();
        let mut ctx = Context::default();
        let outcomes = self
            .expectations
            .iter()
            .map(|e| {
                let (passed, actual) = match self.evaluate(&mut ctx, e) {
                    Ok(actual) => (matches(e, &actual), actual),
                    Err(err) => (false, format!("error: {err}")),
                };
                Outcome {
                    expectation: e.clone(),
                    passed,
                    actual,
                }
            })
            .collect();
        CaseReport {
            id: self.id.clone(),
            outcomes,
            runtime: start.elapsed(),
        }
    }

    fn framework_for<'c>(&'c self, ctx: &'c mut Context, e: &Expectation) -> Result<&'c Framework> {
        let name = e.input_file();
        match &self.inputs[&name] {
            Input::Framework(f) => Ok(f),
            Input::RuleBase(rb) => {
                if !ctx.compiled.contains_key(&name) {
                    ctx.compiled.insert(name.clone(), compile(rb)?);
                }
                Ok(&ctx.compiled[&name].framework)
            }
            Input::Theory(_) => unreachable!("engine and input kind agree"),
        }
    }

    fn evaluate(&self, ctx: &mut Context, e: &Expectation) -> Result<String> {
        let name = e.input_file();
        match (e.engine, &self.inputs[&name]) {
            (Engine::Horty, Input::RuleBase(rb)) => {
                if !ctx.horty.contains_key(&name) {
                    ctx.horty.insert(name.clone(), horty_evaluate(rb)?);
                }
                let result = &ctx.horty[&name];
                Ok(match &e.query {
                    Query::Arg(id) => {
                        if result.survived(id.as_str()) {
                            "survivor".to_string()
                        } else {
                            result
                                .discard_reason(id.as_str())
                                .ok_or_else(|| Error::UnknownArgument(id.to_string()))?
                                .to_string()
                        }
                    }
                    Query::Lit(lit) => result.conclusions.contains(lit).to_string(),
                    _ => unreachable!("checked when parsing"),
                })
            }
            (Engine::AbModels, Input::Theory(t)) => match &e.query {
                Query::Lit(lit) => Ok(abmodels::holds_in_all_minimal(t, lit)?.to_string()),
                _ => unreachable!("checked when parsing"),
            },
            (Engine::StructArg, Input::RuleBase(_)) if e.query == Query::Arguments => {
                self.framework_for(ctx, e)?;
                Ok(ctx.compiled[&name].arguments.len().to_string())
            }
            (Engine::StructArg, Input::RuleBase(_)) if e.query == Query::Crosscheck => {
                let Input::Framework(reference) = &self.inputs["framework.af"] else {
                    unreachable!("af input")
                };
                let compiled = self.framework_for(ctx, e)?;
                Ok(crosscheck(reference, compiled))
            }
            (Engine::AfCore | Engine::StructArg, _) => {
                let kind = e.semantics.expect("checked when parsing");
                let f = self.framework_for(ctx, e)?;
                framework_query(f, &e.query, kind)
            }
            (engine, _) => Err(Error::Corpus {
                case: self.id.clone(),
                message: format!("{engine} cannot read {name}"),
            }),
        }
    }
}

#[derive(Default)]
struct Context {
    compiled: BTreeMap<String, Compiled>,
    horty: BTreeMap<String, HortyResult>,
}

fn braces<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let items: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn framework_query(f: &Framework, query: &Query, kind: SemanticsKind) -> Result<String> {
    let eval = Evaluation::new(f, kind);
    Ok(match query {
        Query::Arg(id) => eval.status(id.as_str())?.to_string(),
        Query::Lit(lit) => eval.conclusion_status(lit).to_string(),
        Query::Extensions => {
            let exts: Vec<String> = eval.extensions().iter().map(ToString::to_string).collect();
            format!("[{}]", exts.join(", "))
        }
        Query::Floating => braces(eval.floating_conclusions()?),
        Query::Zombies => braces(
            detect_zombies(f, kind)
                .into_iter()
                .map(|(z, v)| format!("{z}>{v}")),
        ),
        Query::Arguments | Query::Crosscheck => unreachable!("handled by the caller"),
    })
}

/// Compares conclusion statuses for every literal labelled in `reference`.
fn crosscheck(reference: &Framework, compiled: &Framework) -> String {
    let mut mismatches = Vec::new();
    for kind in SemanticsKind::ALL {
        let (a, b) = (Evaluation::new(reference, kind), Evaluation::new(compiled, kind));
        for lit in reference.literals() {
            let (x, y) = (a.conclusion_status(&lit), b.conclusion_status(&lit));
            if x != y {
                mismatches.push(format!("{lit} {kind} framework={x} rulebase={y}"));
            }
        }
    }
    if mismatches.is_empty() {
        "agree".into()
    } else {
        format!("disagree: {}", mismatches.join("; "))
    }
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn set_items(s: &str) -> BTreeSet<String> {
    let inner = s.trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(squash)
        .filter(|x| !x.is_empty())
        .collect()
}

fn matches(e: &Expectation, actual: &str) -> bool {
    match (&e.query, e.expected.strip_prefix("has:")) {
        (Query::Zombies, Some(wanted)) => set_items(wanted).is_subset(&set_items(actual)),
        _ => squash(&e.expected) == squash(actual),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub expectation: Expectation,
    pub passed: bool,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub outcomes: Vec<Outcome>,
    /// Wall time; left out of every rendering so reports stay reproducible.
    #[serde(skip)]
    pub runtime: Duration,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }

    /// Failures always show the actual value and the anchor.
    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        let ok = self.outcomes.iter().filter(|o| o.passed).count();
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {} ({ok}/{})", self.id, self.outcomes.len());
        for o in &self.outcomes {
            let e = &o.expectation;
            if o.passed {
                if verbose {
                    let _ = writeln!(out, "  ok   line {}: {e}", e.line);
                }
            } else {
                let _ = writeln!(out, "  FAIL line {}: {e}", e.line);
                let _ = writeln!(out, "       actual: {}", o.actual);
                let _ = writeln!(out, "       anchor: {}", e.anchor);
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseError {
    pub case: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub cases: Vec<CaseReport>,
    pub errors: Vec<CaseError>,
    pub passed_cases: usize,
    pub failed_cases: usize,
    pub expectations: usize,
    pub failed_expectations: usize,
}

impl Summary {
    fn new(results: Vec<std::result::Result<CaseReport, CaseError>>) -> Summary {
        let (mut cases, mut errors) = (Vec::new(), Vec::new());
        for r in results {
            match r {
                Ok(c) => cases.push(c),
                Err(e) => errors.push(e),
            }
        }
        let passed_cases = cases.iter().filter(|c| c.passed()).count();
        Summary {
            failed_cases: cases.len() - passed_cases,
            passed_cases,
            expectations: cases.iter().map(|c| c.outcomes.len()).sum(),
            failed_expectations: cases.iter().map(|c| c.failures().count()).sum(),
            cases,
            errors,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.errors.is_empty() && self.failed_cases == 0
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut out: String = self.cases.iter().map(|c| c.render(verbose)).collect();
        for e in &self.errors {
            let _ = writeln!(out, "ERROR {}: {}", e.case, e.message);
        }
        let _ = writeln!(
            out,
            "{} cases, {} expectations: {} cases passed, {} failed, {} errors",
            self.cases.len() + self.errors.len(),
            self.expectations,
            self.passed_cases,
            self.failed_cases,
            self.errors.len()
        );
        out
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// A corpus directory.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    root: PathBuf,
}

impl Corpus {
    pub fn open(root: impl Into<PathBuf>) -> Corpus {
        Corpus { root: root.into() }
    }

    /// The bundled corpus, unless `DEFEASOR_CORPUS_DIR` is set.
    pub fn bundled() -> Corpus {
        match std::env::var_os(CORPUS_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Corpus::open(dir),
            _ => Corpus::open(concat!(env!("CARGO_MANIFEST_DIR"), "/corpus")),
        }
    }

    pub fn root(&self) -> &Path {
        &self.root
    }

    /// Subdirectories holding an `expect.txt`, sorted.
    pub fn case_ids(&self) -> Result<Vec<String>> {
        let entries = fs::read_dir(&self.root).map_err(|e| Error::io(&self.root, e))?;
        let mut ids = Vec::new();
        for entry in entries {
            let entry = entry.map_err(|e| Error::io(&self.root, e))?;
            if entry.path().join("expect.txt").is_file() {
                ids.push(entry.file_name().to_string_lossy().into_owned());
            }
        }
        ids.sort();
        Ok(ids)
    }

    pub fn load(&self, id: &str) -> Result<Case> {
        let dir = self.root.join(id);
        if !dir.join("expect.txt").is_file() {
            return Err(Error::Corpus {
                case: id.to_string(),
                message: format!("no such case in {}", self.root.display()),
            });
        }
        Case::load(&dir, id)
    }

    pub fn run_case(&self, id: &str) -> Result<CaseReport> {
        Ok(self.load(id)?.run())
    }

    /// Runs the cases whose id starts with `prefix` (all when `None`) in
    /// parallel; reports come back sorted by id.
    pub fn run_all(&self, prefix: Option<&str>) -> Summary {
        let ids = match self.case_ids() {
            Ok(ids) => ids,
            Err(e) => {
                return Summary::new(vec![Err(CaseError {
                    case: self.root.display().to_string(),
                    message: e.to_string(),
                })])
            }
        };
        let results = ids
            .into_par_iter()
            .filter(|id| prefix.is_none_or(|p| id.starts_with(p)))
            .map(|id| {
                self.run_case(&id).map_err(|e| CaseError {
                    message: match e {
                        Error::Corpus { message, .. } => message,
                        other => other.to_string(),
                    },
                    case: id,
                })
            })
            .collect();
        Summary::new(results)
    }
}
