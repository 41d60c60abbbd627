mod args;

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::Parser;
use defeasor_core::abmodels::{self, parse_theory, Model};
use defeasor_core::af::{complete_labellings, parse_framework};
use defeasor_core::corpus::Corpus;
use defeasor_core::diff::diff_with;
use defeasor_core::dot::to_dot;
use defeasor_core::horty::horty_evaluate_with;
use defeasor_core::structured::{compile_with, parse_rule_base, ConstructOptions};
use defeasor_core::{ArgSet, Evaluation, Framework, Literal, RuleBase, SemanticsKind, Status};
use serde::Serialize;

use args::{Args, Command};

/// Text to print and whether the run counts as a success.
struct Output {
    text: String,
    ok: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_rules(path: &Path) -> Result<RuleBase> {
    parse_rule_base(&read(path)?).with_context(|| path.display().to_string())
}

/// A framework read directly (`.af`) or compiled from a rule base (`.rb`).
fn load_framework(path: &Path, opts: ConstructOptions) -> Result<Framework> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("af") => parse_framework(&read(path)?).with_context(|| path.display().to_string()),
        Some("rb") => {
            let rb = load_rules(path)?;
            Ok(compile_with(&rb, opts)
                .with_context(|| path.display().to_string())?
                .framework)
        }
        _ => bail!("{}: expected a .af or .rb file", path.display()),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize)]
struct SemanticsReport<'a> {
    semantics: SemanticsKind,
    extensions: &'a [ArgSet],
}

fn cmd_semantics(
    path: &Path,
    kind: SemanticsKind,
    labellings: bool,
    json: bool,
    opts: ConstructOptions,
) -> Result<String> {
    let f = load_framework(path, opts)?;
    let mut out = String::new();
    if labellings {
        let ls = complete_labellings(&f);
        if json {
            return to_json(&ls);
        }
        for l in ls {
            let _ = writeln!(out, "{l}");
        }
        return Ok(out);
    }
    let extensions = Evaluation::new(&f, kind).extensions();
    if json {
        return to_json(&SemanticsReport {
            semantics: kind,
            extensions: &extensions,
        });
    }
    if extensions.is_empty() {
        let _ = writeln!(out, "no {kind} extension");
    }
    for ext in &extensions {
        let _ = writeln!(out, "{ext}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct ArgumentRow {
    id: String,
    status: Status,
    conclusion: Option<String>,
}

#[derive(Serialize)]
struct LiteralRow {
    literal: Literal,
    status: Status,
}

#[derive(Serialize)]
struct StatusReport {
    semantics: SemanticsKind,
    no_extension: bool,
    arguments: Vec<ArgumentRow>,
    conclusions: Vec<LiteralRow>,
}

fn cmd_status(path: &Path, kind: SemanticsKind, json: bool, opts: ConstructOptions) -> Result<String> {
    let f = load_framework(path, opts)?;
    let eval = Evaluation::new(&f, kind);
    let report = StatusReport {
        semantics: kind,
        no_extension: eval.has_no_extension(),
        arguments: eval
            .statuses()
            .into_iter()
            .map(|(id, status)| ArgumentRow {
                id: id.to_string(),
                status,
                conclusion: f.conclusion(id.as_str()).map(ToString::to_string),
            })
            .collect(),
        conclusions: f
            .literals()
            .into_iter()
            .map(|lit| LiteralRow {
                status: eval.conclusion_status(&lit),
                literal: lit,
            })
            .collect(),
    };
    if json {
        return to_json(&report);
    }
    let mut out = String::new();
    if report.no_extension {
        let _ = writeln!(out, "no {kind} extension");
    }
    let width = report.arguments.iter().map(|r| r.id.len()).max().unwrap_or(0);
    for r in &report.arguments {
        let _ = match &r.conclusion {
            Some(c) => writeln!(out, "{:width$}  {:10}  {c}", r.id, r.status.name()),
            None => writeln!(out, "{:width$}  {}", r.id, r.status.name()),
        };
    }
    if !report.conclusions.is_empty() {
        let _ = writeln!(out, "conclusions:");
        for r in &report.conclusions {
            let _ = writeln!(out, "  {}  {}", r.literal, r.status);
        }
    }
    Ok(out)
}

fn cmd_build(path: &Path, dot: Option<&Path>, kind: SemanticsKind, opts: ConstructOptions) -> Result<String> {
    let rb = load_rules(path)?;
    let compiled = compile_with(&rb, opts).with_context(|| path.display().to_string())?;
    if let Some(dot) = dot {
        write(dot, &to_dot(&compiled.framework, kind))?;
    }
    Ok(compiled.framework.to_text())
}

fn cmd_horty(path: &Path, json: bool, opts: ConstructOptions) -> Result<String> {
    let rb = load_rules(path)?;
    let result = horty_evaluate_with(&rb, opts).with_context(|| path.display().to_string())?;
    if json {
        return to_json(&result);
    }
    let mut out = String::new();
    let conclusions: Vec<String> = result.conclusions.iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "conclusions: {{{}}}", conclusions.join(", "));
    let _ = writeln!(out, "survivors:");
    for a in &result.survivors {
        let _ = writeln!(out, "  {}  {}", a.id, a.conclusion);
    }
    let _ = writeln!(out, "discarded:");
    for line in result.trace().lines() {
        let _ = writeln!(out, "  {line}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct QueryRow {
    query: Literal,
    holds: bool,
}

#[derive(Serialize)]
struct MinModelsReport {
    unsatisfiable: bool,
    queries: Vec<QueryRow>,
    minimal_models: Vec<Model>,
}

fn cmd_minmodels(path: &Path, query: Option<&str>, json: bool) -> Result<String> {
    let theory = parse_theory(&read(path)?).with_context(|| path.display().to_string())?;
    let queries: Vec<Literal> = match query {
        Some(q) => vec![q.parse().map_err(anyhow::Error::msg)?],
        None => theory.queries().to_vec(),
    };
    let minimal_models = abmodels::minimal_models(&theory)?;
    let mut rows = Vec::new();
    for q in queries {
        rows.push(QueryRow {
            holds: abmodels::query(&theory, &q)?.holds,
            query: q,
        });
    }
    let report = MinModelsReport {
        unsatisfiable: minimal_models.is_empty(),
        queries: rows,
        minimal_models,
    };
    if json {
        return to_json(&report);
    }
    let mut out = String::new();
    for r in &report.queries {
        let _ = writeln!(out, "{}: {}", r.query, r.holds);
    }
    if report.unsatisfiable {
        let _ = writeln!(out, "theory is unsatisfiable; queries hold vacuously");
    }
    let _ = writeln!(out, "minimal models ({}):", report.minimal_models.len());
    for m in &report.minimal_models {
        let _ = writeln!(out, "  {m}");
    }
    Ok(out)
}

fn cmd_diff(path: &Path, json: bool, opts: ConstructOptions) -> Result<String> {
    let rb = load_rules(path)?;
    let report = diff_with(&rb, opts).with_context(|| path.display().to_string())?;
    if json {
        return to_json(&report);
    }
    Ok(report.to_string())
}

fn cmd_corpus(prefix: Option<&str>, dir: Option<&Path>, verbose: bool, json: bool) -> Result<Output> {
    let corpus = match dir {
        Some(d) => Corpus::open(d),
        None => Corpus::bundled(),
    };
    let summary = corpus.run_all(prefix);
    let text = if json {
        to_json(&summary)?
    } else {
        summary.render(verbose)
    };
    Ok(Output {
        text,
        ok: summary.all_passed(),
    })
}

fn cmd_export(path: &Path, kind: SemanticsKind, dot: Option<&Path>, opts: ConstructOptions) -> Result<String> {
    let text = to_dot(&load_framework(path, opts)?, kind);
    match dot {
        Some(out) => write(out, &text).map(|()| String::new()),
        None => Ok(text),
    }
}

fn run(args: Args) -> Result<Output> {
    let opts = ConstructOptions {
        height_cap: args.height_cap,
        ..ConstructOptions::default()
    };
    let text = match &args.command {
        Command::Semantics {
            file,
            semantics,
            labellings,
            json,
        } => cmd_semantics(file, *semantics, *labellings, *json, opts)?,
        Command::Status { file, semantics, json } => cmd_status(file, *semantics, *json, opts)?,
        Command::Build { rules, dot, semantics } => cmd_build(rules, dot.as_deref(), *semantics, opts)?,
        Command::Horty { rules, json } => cmd_horty(rules, *json, opts)?,
        Command::Minmodels { theory, query, json } => cmd_minmodels(theory, query.as_deref(), *json)?,
        Command::Diff { rules, json } => cmd_diff(rules, *json, opts)?,
        Command::Corpus {
            prefix,
            dir,
            verbose,
            json,
        } => return cmd_corpus(prefix.as_deref(), dir.as_deref(), *verbose, *json),
        Command::Export { file, semantics, dot } => cmd_export(file, *semantics, dot.as_deref(), opts)?,
    };
    Ok(text.into())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            match stdout.write_all(output.text.as_bytes()).and_then(|()| stdout.flush()) {
                Ok(()) => {}
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            if output.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
