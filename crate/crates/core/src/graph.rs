//! Immutable simple undirected graphs.
//!
//! Vertices are dense indices `0..n`. Every vertex also carries a label (its
//! identifier in the graph the user originally supplied) which survives
//! [`Graph::induced_subgraph`], so results computed on renumbered subgraphs can
//! be reported in terms of the input.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("label count {labels} does not match vertex count {n}")]
    LabelCountMismatch { labels: usize, n: usize },
    #[error("label {0} used by more than one vertex")]
    DuplicateLabel(usize),
}

/// The degree bound `d` of the deletion problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeBound(pub usize);

impl DegreeBound {
    pub fn get(self) -> usize {
        self.0
    }

    /// Number of leaves of a full star, `d + 1`.
    pub fn star_leaves(self) -> usize {
        self.0 + 1
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Indices of `0..n`.
    pub fn full(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Builds a set from a vector that is already strictly increasing.
    pub fn from_sorted(members: Vec<usize>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Self(members)
    }

    /// Indices `v` with `mask[v] == true`.
    pub fn from_mask(mask: &[bool]) -> Self {
        Self(
            mask.iter()
                .enumerate()
                .filter_map(|(v, &b)| b.then_some(v))
                .collect(),
        )
    }

    pub fn to_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.0 {
            mask[v] = true;
        }
        mask
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Fails with the first member that is not a vertex of a graph on `n` vertices.
    pub fn check_range(&self, n: usize) -> Result<(), GraphError> {
        match self.0.last() {
            Some(&vertex) if vertex >= n => Err(GraphError::VertexOutOfRange { vertex, n }),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self(members)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        members.into_iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(members: [usize; N]) -> Self {
        members.into_iter().collect()
    }
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    labels: Vec<usize>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`.
    ///
    /// Self-loops and repeated edges (in either orientation) are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::with_labels(n, edges, (0..n).collect())
    }

    pub fn with_labels(
        n: usize,
        edges: &[(usize, usize)],
        labels: Vec<usize>,
    ) -> Result<Self, GraphError> {
        if labels.len() != n {
            return Err(GraphError::LabelCountMismatch {
                labels: labels.len(),
                n,
            });
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateLabel(w[0]));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Self {
            adjacency,
            labels,
            edge_count: edges.len(),
        })
    }

    pub fn empty() -> Self {
        Self {
            adjacency: Vec::new(),
            labels: Vec::new(),
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adjacency.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `G[s]`, renumbered by ascending index of `s`, labels inherited.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        s.check_range(self.vertex_count())?;
        const ABSENT: usize = usize::MAX;
        let mut new_index = vec![ABSENT; self.vertex_count()];
        for (i, v) in s.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edge_count = 0;
        let adjacency: Vec<Vec<usize>> = s
            .iter()
            .map(|v| {
                let list: Vec<usize> = self.adjacency[v]
                    .iter()
                    .map(|&u| new_index[u])
                    .filter(|&u| u != ABSENT)
                    .collect();
                edge_count += list.len();
                list
            })
            .collect();
        Ok(Graph {
            adjacency,
            labels: s.iter().map(|v| self.labels[v]).collect(),
            edge_count: edge_count / 2,
        })
    }

    /// `G[V \ s]`.
    pub fn without(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        s.check_range(self.vertex_count())?;
        let mask = s.to_mask(self.vertex_count());
        let keep = VertexSet::from_sorted(self.vertices().filter(|&v| !mask[v]).collect());
        self.induced_subgraph(&keep)
    }

    /// `N(s)`: vertices outside `s` adjacent to some member of `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let inside = s.to_mask(self.vertex_count());
        let mut hit = vec![false; self.vertex_count()];
        for v in s {
            for &u in &self.adjacency[v] {
                if !inside[u] {
                    hit[u] = true;
                }
            }
        }
        VertexSet::from_mask(&hit)
    }

    /// `N[s] = N(s) ∪ s`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        self.open_neighborhood(s).union(s)
    }

    /// Degree of every vertex in `G[V \ removed]`; removed vertices get 0.
    pub fn residual_degrees(&self, removed: &[bool]) -> Vec<usize> {
        self.vertices()
            .map(|v| {
                if removed[v] {
                    0
                } else {
                    self.adjacency[v].iter().filter(|&&u| !removed[u]).count()
                }
            })
            .collect()
    }
}
