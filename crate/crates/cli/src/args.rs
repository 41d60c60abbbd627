use std::path::PathBuf;

use clap::{Parser, Subcommand};
use defeasor_core::SemanticsKind;

fn parse_semantics(s: &str) -> Result<SemanticsKind, String> {
    s.parse()
}

#[derive(Debug, Parser)]
#[command(name = "defeasor", version, about = "Defeasible reasoning engines")]
pub struct Args {
    /// Maximum argument height before a rule base is treated as cyclic.
    #[arg(long, global = true, default_value_t = 32, value_name = "N")]
    pub height_cap: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extensions of a framework (`.af`) or compiled rule base (`.rb`).
    Semantics {
        file: PathBuf,
        #[arg(long, value_parser = parse_semantics, default_value = "grounded")]
        semantics: SemanticsKind,
        /// Print complete labellings instead of extensions.
        #[arg(long)]
        labellings: bool,
        #[arg(long)]
        json: bool,
    },
    /// Status of every argument and concluded literal.
    Status {
        file: PathBuf,
        #[arg(long, value_parser = parse_semantics, default_value = "grounded")]
        semantics: SemanticsKind,
        #[arg(long)]
        json: bool,
    },
    /// Compile a rule base into framework text.
    Build {
        rules: PathBuf,
        /// Also write a DOT graph here.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Semantics used to color the DOT graph.
        #[arg(long, value_parser = parse_semantics, default_value = "grounded")]
        semantics: SemanticsKind,
    },
    /// Interleaved, deeply skeptical evaluation of a rule base.
    Horty {
        rules: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Minimal models of a theory (`.ab`) and skeptical queries.
    Minmodels {
        theory: PathBuf,
        /// Literal to check; defaults to the theory's own queries.
        #[arg(long, value_name = "LIT")]
        query: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Conclusion statuses of a rule base under every engine.
    Diff {
        rules: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the corpus; fails unless every expectation passes.
    Corpus {
        /// Only run cases whose id starts with this prefix.
        prefix: Option<String>,
        /// Corpus directory (default: bundled, or DEFEASOR_CORPUS_DIR).
        #[arg(long, value_name = "DIR")]
        dir: Option<PathBuf>,
        #[arg(long)]
        verbose: bool,
        #[arg(long)]
        json: bool,
    },
    /// Export a framework or compiled rule base as DOT.
    Export {
        file: PathBuf,
        #[arg(long, value_parser = parse_semantics, default_value = "grounded")]
        semantics: SemanticsKind,
        /// Output path; stdout when omitted.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
}
