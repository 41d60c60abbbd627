//! `expect.txt`: one expectation per line.
//!
//! ```text
//! engine[:input] query semantics expected # anchor
//! afcore arg:A grounded justified # direct reinstatement
//! structarg:undercut lit:flies preferred overruled # undercut variant
//! horty arg:d1[bird] - strictly_defeated # bird argument never reinstated
//! afcore extensions preferred [{A, C}, {B, D}] # two stories about Larry
//! ```
//!
//! `input` names the input file stem; it defaults to `framework` (`.af`),
//! `rulebase` (`.rb`) or `theory` (`.ab`) by engine. `semantics` is `-` for
//! engines and queries without one. The expected value runs up to the `#`
//! and may contain spaces. The anchor is mandatory.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::af::{ArgId, SemanticsKind, Status};
use crate::literal::Literal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    AfCore,
    StructArg,
    Horty,
    AbModels,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::AfCore => "afcore",
            Engine::StructArg => "structarg",
            Engine::Horty => "horty",
            Engine::AbModels => "abmodels",
        }
    }

    /// Input file extension and default stem.
    pub fn input(self) -> (&'static str, &'static str) {
        match self {
            Engine::AfCore => ("framework", "af"),
            Engine::StructArg | Engine::Horty => ("rulebase", "rb"),
            Engine::AbModels => ("theory", "ab"),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Engine::AfCore, Engine::StructArg, Engine::Horty, Engine::AbModels]
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| format!("unknown engine `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Query {
    Arg(ArgId),
    Lit(Literal),
    Extensions,
    Floating,
    Zombies,
    /// Number of constructed arguments.
    Arguments,
    /// Conclusion statuses of the rule base agree with the case framework.
    Crosscheck,
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Arg(a) => write!(f, "arg:{a}"),
            Query::Lit(l) => write!(f, "lit:{l}"),
            Query::Extensions => f.write_str("extensions"),
            Query::Floating => f.write_str("floating"),
            Query::Zombies => f.write_str("zombies"),
            Query::Arguments => f.write_str("arguments"),
            Query::Crosscheck => f.write_str("crosscheck"),
        }
    }
}

impl FromStr for Query {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(id) = s.strip_prefix("arg:") {
            return Ok(Query::Arg(ArgId::new(id)));
        }
        if let Some(lit) = s.strip_prefix("lit:") {
            return lit.parse().map(Query::Lit);
        }
        match s {
            "extensions" => Ok(Query::Extensions),
            "floating" => Ok(Query::Floating),
            "zombies" => Ok(Query::Zombies),
            "arguments" => Ok(Query::Arguments),
            "crosscheck" => Ok(Query::Crosscheck),
            _ => Err(format!("unknown query `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expectation {
    pub line: usize,
    pub engine: Engine,
    /// Input file stem, when not the engine default.
    pub input: Option<String>,
    pub query: Query,
    pub semantics: Option<SemanticsKind>,
    pub expected: String,
    pub anchor: String,
}

impl Expectation {
    pub fn input_file(&self) -> String {
        let (stem, ext) = self.engine.input();
        format!("{}.{ext}", self.input.as_deref().unwrap_or(stem))
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.engine)?;
        if let Some(stem) = &self.input {
            write!(f, ":{stem}")?;
        }
        let sem = self.semantics.map_or("-", SemanticsKind::name);
        write!(f, " {} {sem} {}", self.query, self.expected)
    }
}

const HORTY_FATES: [&str; 4] = ["survivor", "strictly_defeated", "mutual_tie", "dead_subargument"];

fn check_shape(e: &Expectation) -> Result<(), String> {
    let needs_semantics = match (e.engine, &e.query) {
        (Engine::AfCore | Engine::StructArg, Query::Arguments | Query::Crosscheck) => {
            if e.engine == Engine::AfCore {
                return Err(format!("`{}` needs the structarg engine", e.query));
            }
            false
        }
        (Engine::AfCore | Engine::StructArg, _) => true,
        (Engine::Horty, Query::Arg(_) | Query::Lit(_)) => false,
        (Engine::AbModels, Query::Lit(_)) => false,
        (engine, q) => return Err(format!("query `{q}` is not supported by {engine}")),
    };
    match (needs_semantics, e.semantics) {
        (true, None) => return Err(format!("query `{}` needs a semantics", e.query)),
        (false, Some(k)) => return Err(format!("query `{}` takes `-`, not `{k}`", e.query)),
        _ => {}
    }
    let expected = e.expected.as_str();
    let valid = match (e.engine, &e.query) {
        (Engine::Horty, Query::Arg(_)) => HORTY_FATES.contains(&expected),
        (Engine::Horty | Engine::AbModels, Query::Lit(_)) => matches!(expected, "true" | "false"),
        (_, Query::Arg(_) | Query::Lit(_)) => expected.parse::<Status>().is_ok(),
        (_, Query::Arguments) => expected.parse::<usize>().is_ok(),
        (_, Query::Crosscheck) => expected == "agree",
        (_, Query::Extensions) => expected.starts_with('[') && expected.ends_with(']'),
        (_, Query::Floating) => expected.starts_with('{') && expected.ends_with('}'),
        (_, Query::Zombies) => {
            let set = expected.strip_prefix("has:").unwrap_or(expected);
            set.starts_with('{') && set.ends_with('}')
        }
    };
    if valid {
        Ok(())
    } else {
        Err(format!("`{expected}` is not a valid expected value for `{}`", e.query))
    }
}

fn parse_line(line: usize, raw: &str) -> Result<Option<Expectation>, String> {
    let (body, anchor) = match raw.split_once('#') {
        Some((body, anchor)) => (body.trim(), anchor.trim()),
        None => (raw.trim(), ""),
    };
    if body.is_empty() {
        return Ok(None);
    }
    if anchor.is_empty() {
        return Err("expectation has no `# anchor`".into());
    }
    let mut parts = body.splitn(4, char::is_whitespace);
    let (Some(engine), Some(query), Some(semantics), Some(expected)) =
        (parts.next(), parts.next(), parts.next(), parts.next())
    else {
        return Err("expected `engine query semantics expected # anchor`".into());
    };
    let (engine, input) = match engine.split_once(':') {
        Some((e, stem)) => (e, Some(stem.to_string())),
        None => (engine, None),
    };
    let semantics = match semantics {
        "-" => None,
        k => Some(k.parse()?),
    };
    let e = Expectation {
        line,
        engine: engine.parse()?,
        input,
        query: query.parse()?,
        semantics,
        expected: expected.trim().to_string(),
        anchor: anchor.to_string(),
    };
    check_shape(&e)?;
    Ok(Some(e))
}

/// Parses an expectation file; errors carry the 1-based line.
pub fn parse_expectations(text: &str) -> Result<Vec<Expectation>, (usize, String)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim_start().starts_with('#') {
            continue;
        }
        if let Some(e) = parse_line(line, raw).map_err(|m| (line, m))? {
            out.push(e);
        }
    }
    Ok(out)
}
