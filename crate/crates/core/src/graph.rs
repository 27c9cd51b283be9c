//! Immutable undirected simple graph with stable string labels.
//!
//! Vertex ids are dense `0..n` indices assigned in insertion order, so every
//! downstream tie-break that falls back to "vertex order" is reproducible.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

pub type VertexId = usize;

/// Undirected simple graph. Neighbor lists are sorted and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
    edge_count: usize,
}

/// Incremental constructor for [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    labels: Vec<String>,
    index: HashMap<String, VertexId>,
    adj: Vec<Vec<VertexId>>,
}

/// What happened when an edge was offered to a [`GraphBuilder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeInsert {
    Added,
    Duplicate,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    /// Returns the id of `label`, creating the vertex if needed.
    pub fn add_vertex(&mut self, label: &str) -> VertexId {
        if let Some(&id) = self.index.get(label) {
            return id;
        }
        let id = self.labels.len();
        self.labels.push(label.to_owned());
        self.index.insert(label.to_owned(), id);
        self.adj.push(Vec::new());
        id
    }

    pub fn add_edge_by_id(&mut self, u: VertexId, v: VertexId) -> Result<EdgeInsert> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(Error::UnknownVertex(format!("#{}", u.max(v))));
        }
        if u == v {
            return Err(Error::SelfLoop {
                line: 0,
                label: self.labels[u].clone(),
            });
        }
        if self.adj[u].contains(&v) {
            return Ok(EdgeInsert::Duplicate);
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(EdgeInsert::Added)
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<EdgeInsert> {
        let u = self.add_vertex(a);
        let v = self.add_vertex(b);
        self.add_edge_by_id(u, v)
    }

    pub fn build(self) -> Graph {
        let mut adj = self.adj;
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            twice += list.len();
        }
        Graph {
            labels: self.labels,
            index: self.index,
            adj,
            edge_count: twice / 2,
        }
    }
}

impl Graph {
    /// Builds a graph from labels and id pairs. Duplicate pairs are ignored.
    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut b = GraphBuilder::new();
        for l in labels {
            let before = b.labels.len();
            b.add_vertex(l.as_ref());
            if b.labels.len() == before {
                return Err(Error::InvalidParameter(format!(
                    "duplicate vertex label `{}`",
                    l.as_ref()
                )));
            }
        }
        for &(u, v) in edges {
            b.add_edge_by_id(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph on `n` vertices labelled `v0 .. v{n-1}`, zero-padded so that
    /// label order equals id order.
    pub fn with_numbered_vertices(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let width = n.saturating_sub(1).to_string().len();
        let labels: Vec<String> = (0..n).map(|i| format!("v{i:0width$}")).collect();
        Self::from_edges(&labels, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.labels.len()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_id(&self, label: &str) -> Option<VertexId> {
        self.index.get(label).copied()
    }

    /// Resolves labels to ids, failing on the first unknown label.
    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<VertexId>> {
        labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex(l.as_ref().to_owned()))
            })
            .collect()
    }

    /// Sorted open neighborhood.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count();
        let mut a = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            a[u][v] = 1;
            a[v][u] = 1;
        }
        a
    }

    /// Subgraph induced by `subset`. Vertices keep the parent's relative order.
    pub fn induced_subgraph(&self, subset: &[VertexId]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut keep = vec![false; n];
        for &v in subset {
            if v >= n {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
            keep[v] = true;
        }
        let mut new_id = vec![usize::MAX; n];
        let mut b = GraphBuilder::new();
        for v in self.vertices().filter(|&v| keep[v]) {
            new_id[v] = b.add_vertex(&self.labels[v]);
        }
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                b.add_edge_by_id(new_id[u], new_id[v])?;
            }
        }
        Ok(b.build())
    }

    pub fn induced_subgraph_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Graph> {
        let ids = self.resolve(labels)?;
        self.induced_subgraph(&ids)
    }

    /// Maximal connected vertex sets, each sorted by id, ordered by size
    /// (descending) and then by smallest label.
    pub fn connected_components(&self) -> Vec<Vec<VertexId>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps.sort_by(|a, b| {
            b.len()
                .cmp(&a.len())
                .then_with(|| self.min_label(a).cmp(self.min_label(b)))
        });
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Largest connected component (ties broken by smallest label).
    pub fn largest_component(&self) -> Vec<VertexId> {
        self.connected_components().into_iter().next().unwrap_or_default()
    }

    /// Smallest label among `set`, used for deterministic ordering of vertex sets.
    pub fn min_label(&self, set: &[VertexId]) -> &str {
        set.iter().map(|&v| self.labels[v].as_str()).min().unwrap_or("")
    }
}
