//! Graphviz export of community summary graphs.

use std::fmt::Write;

use crate::communities::{GroupKind, SummaryGraph};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per group (box for the club, diamond for a community, circle
/// for a singleton) and one edge per group pair labelled with its edge count.
pub fn export_dot(summary: &SummaryGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(&summary.title)).unwrap();
    writeln!(out, "  node [fontname=\"Helvetica\"];").unwrap();
    for (i, g) in summary.groups.iter().enumerate() {
        let (shape, label) = match g.kind {
            GroupKind::Club => ("box", format!("{} ({})", g.name, g.members.len())),
            GroupKind::Community => ("diamond", format!("{} ({})", g.name, g.members.len())),
            GroupKind::Singleton => ("circle", g.name.clone()),
        };
        writeln!(
            out,
            "  g{i} [shape={shape}, label={}, tooltip={}];",
            quote(&label),
            quote(&g.members.join(" "))
        )
        .unwrap();
    }
    for &(a, b, count) in &summary.edges {
        writeln!(out, "  g{a} -- g{b} [label=\"{count}\", penwidth={}];", 1 + count.ilog2()).unwrap();
    }
    out.push_str("}\n");
    out
}
