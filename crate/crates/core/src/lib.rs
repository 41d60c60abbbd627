//! Defeasible reasoning engines.
//!
//! - [`af`]: abstract argumentation frameworks under grounded, complete,
//!   preferred and stable semantics.
//! - [`structured`]: argument construction from strict and defeasible rules
//!   with priorities and undercutters, compiled into a framework; conclusion
//!   statuses, floating conclusions and zombie arguments.
//! - [`horty`]: interleaved, deeply skeptical evaluation that discards
//!   defeated arguments level by level.
//! - [`abmodels`]: propositional models minimal in their abnormality atoms.
//! - [`corpus`]: bundled worked cases with expected outcomes and a runner.

pub mod abmodels;
pub mod af;
pub mod corpus;
pub mod diff;
pub mod dot;
pub mod error;
pub mod horty;
pub mod literal;
pub mod structured;
mod syntax;

pub use af::{ArgId, ArgSet, Evaluation, Framework, Label, Labelling, SemanticsKind, Status};
pub use error::{Error, Result};
pub use literal::{Conclusion, Literal};
pub use structured::{Argument, Rule, RuleBase, RuleKind};
pub use syntax::normalize;
