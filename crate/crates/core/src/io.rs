//! Edge-list and label-registry readers/writers.
//!
//! Edge lists are UTF-8, one `label<sep>label` pair per line, with `sep`
//! either a comma or a tab (detected from the first data line). Lines whose
//! first non-blank character is `#` are comments. Direction and repeated
//! citations are collapsed: every unordered pair becomes one undirected edge
//! and each repeat is counted as a duplicate.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeInsert, Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Separator {
    Comma,
    Tab,
}

impl Separator {
    fn as_char(self) -> char {
        match self {
            Separator::Comma => ',',
            Separator::Tab => '\t',
        }
    }
}

/// Raw rows of an edge-list file.
#[derive(Debug, Clone, Default)]
pub struct EdgeList {
    /// `(line number, source, target)` in file order.
    pub rows: Vec<(usize, String, String)>,
    pub source: Option<PathBuf>,
    pub separator: Option<Separator>,
}

/// One registry line: a label and an optional long name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryEntry {
    pub label: String,
    pub name: Option<String>,
}

/// Graph plus the bookkeeping produced while building it.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
    pub registry_only: Vec<String>,
    pub source: Option<PathBuf>,
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim_end_matches('\r');
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn detect_separator(line: &str) -> Separator {
    if line.contains('\t') {
        Separator::Tab
    } else {
        Separator::Comma
    }
}

pub fn parse_edge_rows(text: &str) -> Result<EdgeList> {
    let mut out = EdgeList::default();
    for (line_no, line) in data_lines(text) {
        let sep = *out.separator.get_or_insert_with(|| detect_separator(line));
        let fields: Vec<&str> = line.split(sep.as_char()).map(str::trim).collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        if fields.iter().any(|f| f.is_empty()) {
            return Err(Error::Parse {
                line: line_no,
                message: "empty label".into(),
            });
        }
        if fields[0] == fields[1] {
            return Err(Error::SelfLoop {
                line: line_no,
                label: fields[0].to_owned(),
            });
        }
        out.rows
            .push((line_no, fields[0].to_owned(), fields[1].to_owned()));
    }
    Ok(out)
}

pub fn parse_registry(text: &str) -> Result<Vec<RegistryEntry>> {
    let mut out = Vec::new();
    for (line_no, line) in data_lines(text) {
        let line = line.trim();
        let (label, name) = match line.find(['\t', ',']) {
            Some(pos) => (line[..pos].trim(), Some(line[pos + 1..].trim())),
            None => (line, None),
        };
        if label.is_empty() {
            return Err(Error::Parse {
                line: line_no,
                message: "empty label".into(),
            });
        }
        out.push(RegistryEntry {
            label: label.to_owned(),
            name: name.filter(|s| !s.is_empty()).map(str::to_owned),
        });
    }
    Ok(out)
}

impl EdgeList {
    /// Builds the simple graph. Ids follow first appearance in the edge
    /// list, then registry order for registry-only labels.
    pub fn into_graph(self, registry: &[RegistryEntry]) -> Result<LoadedGraph> {
        let mut b = GraphBuilder::new();
        let mut duplicates = 0;
        for (line, s, t) in &self.rows {
            match b.add_edge(s, t) {
                Ok(EdgeInsert::Added) => {}
                Ok(EdgeInsert::Duplicate) => duplicates += 1,
                Err(Error::SelfLoop { label, .. }) => {
                    return Err(Error::SelfLoop { line: *line, label })
                }
                Err(e) => return Err(e),
            }
        }
        let mut registry_only = Vec::new();
        for entry in registry {
            if !b.contains(&entry.label) {
                registry_only.push(entry.label.clone());
            }
            b.add_vertex(&entry.label);
        }
        Ok(LoadedGraph {
            graph: b.build(),
            duplicate_edges: duplicates,
            registry_only,
            source: self.source,
        })
    }
}

/// Parses edge-list text straight into a graph (no registry).
pub fn parse_edge_list(text: &str) -> Result<LoadedGraph> {
    parse_edge_rows(text)?.into_graph(&[])
}

pub fn load_graph(path: &Path, registry: Option<&Path>) -> Result<LoadedGraph> {
    let text = std::fs::read_to_string(path)?;
    let mut rows = parse_edge_rows(&text)?;
    rows.source = Some(path.to_owned());
    let entries = match registry {
        Some(p) => parse_registry(&std::fs::read_to_string(p)?)?,
        None => Vec::new(),
    };
    rows.into_graph(&entries)
}

/// Canonical comma-separated edge list (`u < v` in vertex order).
/// Isolated vertices are not representable here; see [`to_registry_text`].
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(g.label(u));
        s.push(',');
        s.push_str(g.label(v));
        s.push('\n');
    }
    s
}

pub fn to_registry_text(g: &Graph) -> String {
    g.labels().iter().map(|l| format!("{l}\n")).collect()
}
