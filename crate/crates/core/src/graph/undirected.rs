use std::collections::{BTreeSet, HashMap};

use super::GraphError;

/// A simple undirected graph over labelled vertices (no loops, no multi-edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<BTreeSet<usize>>,
}

impl UndirectedGraph {
    pub fn new<I, S>(labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(UndirectedGraph {
            labels,
            index,
            adj: vec![BTreeSet::new(); n],
        })
    }

    pub fn from_indices<I, S, E>(labels: I, edges: E) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = UndirectedGraph::new(labels)?;
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// Vertices labelled `1..=n`, edges as 1-based pairs.
    pub fn numbered(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        UndirectedGraph::from_indices(
            (1..=n).map(|i| i.to_string()),
            edges.iter().map(|&(a, b)| (a - 1, b - 1)),
        )
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(GraphError::Loop(self.labels[u].clone()));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn add_edge_by_label(&mut self, u: &str, v: &str) -> Result<bool, GraphError> {
        let a = self
            .index_of(u)
            .ok_or_else(|| GraphError::UnknownVertex(u.to_string()))?;
        let b = self
            .index_of(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.to_string()))?;
        self.add_edge(a, b)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter().copied()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`, same ordering as [`Self::edges`].
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |u| {
            (u + 1..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }
}
