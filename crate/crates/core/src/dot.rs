//! Graphviz export of a framework, nodes filled by argument status.

use std::fmt::Write as _;

use crate::af::{Evaluation, Framework, SemanticsKind, Status};

/// Names never contain backslashes, so `\n` in labels stays a line break.
fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn status_color(status: Status) -> &'static str {
    match status {
        Status::Justified => "palegreen",
        Status::Defensible => "khaki",
        Status::Overruled => "lightcoral",
    }
}

/// Defeat edges are solid, subargument edges dashed (child to parent).
pub fn to_dot(f: &Framework, kind: SemanticsKind) -> String {
    let eval = Evaluation::new(f, kind);
    let mut out = String::new();
    let _ = writeln!(out, "digraph framework {{");
    let _ = writeln!(out, "  // {kind} semantics");
    let _ = writeln!(out, "  node [shape=box, style=\"rounded,filled\"];");
    for (id, status) in eval.statuses() {
        let label = match f.conclusion(id.as_str()) {
            Some(c) => format!("{id}\\n{c}"),
            None => id.to_string(),
        };
        let _ = writeln!(
            out,
            "  {} [label={}, fillcolor={}, tooltip={}];",
            quote(id.as_str()),
            quote(&label),
            status_color(status),
            quote(status.name())
        );
    }
    for (x, y) in f.defeats() {
        let _ = writeln!(out, "  {} -> {};", quote(x.as_str()), quote(y.as_str()));
    }
    for (child, parent) in f.subarguments() {
        let _ = writeln!(
            out,
            "  {} -> {} [style=dashed, arrowhead=empty];",
            quote(child.as_str()),
            quote(parent.as_str())
        );
    }
    out.push_str("}\n");
    out
}
