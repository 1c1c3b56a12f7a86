//! Bipartite machinery behind the star packings.
//!
//! A `≤(d+1)`-star packing from `X` to `Y` in the bipartite graph `H` is
//! exactly a matching in the auxiliary graph `H'` that holds `d + 1` copies of
//! `X`: a copy `x_i` matched to `y` says "`y` is a leaf of the star at `x`".
//! [`project_matching`] collapses the copies again.
//!
//! Vertices of [`BipartiteGraph`] are addressed two ways. Public constructors
//! and [`alternating_reachable`] speak in vertices of the source graph; the
//! adjacency lists, [`Matching`] and [`MarkedEdgeSet`] use *local* indices,
//! i.e. positions in `left()` and `right()`.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{DegreeBound, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("vertex {0} is on both sides of the bipartition")]
    OverlappingSides(usize),
    #[error("edge {0}-{1} does not run from the left side to the right side")]
    EdgeAcrossSides(usize, usize),
    #[error("matching does not belong to the auxiliary graph: {0}")]
    NotAMatchingOfAuxiliary(String),
    #[error("untagged vertex {0} is covered by a marked edge")]
    UntaggedVertexIsMatched(usize),
    #[error("vertex {0} is not on the right side")]
    NotOnRightSide(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Adjacency seen from the left side of a bipartite graph, in local indices.
pub trait BipartiteAdjacency {
    fn left_count(&self) -> usize;
    fn right_count(&self) -> usize;
    /// Ascending right-side neighbors of left vertex `l`.
    fn left_neighbors(&self, l: usize) -> &[usize];
}

/// `H = (X, Y, E_H)`: the edges of a graph that cross between `X` and `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: VertexSet,
    right: VertexSet,
    left_adj: Vec<Vec<usize>>,
    right_adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    /// Builds `H` from explicit cross edges `(x, y)` with `x ∈ left`, `y ∈ right`.
    pub fn new(
        left: VertexSet,
        right: VertexSet,
        edges: &[(usize, usize)],
    ) -> Result<Self, MatchingError> {
        if let Some(v) = left.iter().find(|&v| right.contains(v)) {
            return Err(MatchingError::OverlappingSides(v));
        }
        let mut left_adj = vec![Vec::new(); left.len()];
        let mut right_adj = vec![Vec::new(); right.len()];
        for &(x, y) in edges {
            let (Ok(lx), Ok(ry)) = (
                left.as_slice().binary_search(&x),
                right.as_slice().binary_search(&y),
            ) else {
                return Err(MatchingError::EdgeAcrossSides(x, y));
            };
            left_adj[lx].push(ry);
            right_adj[ry].push(lx);
        }
        for list in left_adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        for list in right_adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = left_adj.iter().map(Vec::len).sum();
        Ok(Self {
            left,
            right,
            left_adj,
            right_adj,
            edge_count,
        })
    }

    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    pub fn right(&self) -> &VertexSet {
        &self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Local index of graph vertex `v` on the left side.
    pub fn left_index(&self, v: usize) -> Option<usize> {
        self.left.as_slice().binary_search(&v).ok()
    }

    pub fn right_index(&self, v: usize) -> Option<usize> {
        self.right.as_slice().binary_search(&v).ok()
    }

    pub fn left_vertex(&self, l: usize) -> usize {
        self.left.as_slice()[l]
    }

    pub fn right_vertex(&self, r: usize) -> usize {
        self.right.as_slice()[r]
    }

    /// Ascending left-side neighbors of right vertex `r` (local indices).
    pub fn right_neighbors(&self, r: usize) -> &[usize] {
        &self.right_adj[r]
    }

    /// Cross edges as graph-vertex pairs `(x, y)`, ascending.
    pub fn cross_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.left_adj.iter().enumerate().flat_map(move |(l, list)| {
            list.iter()
                .map(move |&r| (self.left_vertex(l), self.right_vertex(r)))
        })
    }
}

impl BipartiteAdjacency for BipartiteGraph {
    fn left_count(&self) -> usize {
        self.left.len()
    }

    fn right_count(&self) -> usize {
        self.right.len()
    }

    fn left_neighbors(&self, l: usize) -> &[usize] {
        &self.left_adj[l]
    }
}

/// `H`: the edges of `g` with one endpoint in `x` and the other in `y`.
pub fn build_bipartite(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<BipartiteGraph, MatchingError> {
    let n = g.vertex_count();
    x.check_range(n)?;
    y.check_range(n)?;
    // 0 = neither, otherwise local index + 1 on the right side
    let mut right_slot = vec![0usize; n];
    for (r, v) in y.iter().enumerate() {
        right_slot[v] = r + 1;
    }
    if let Some(v) = x.iter().find(|&v| right_slot[v] != 0) {
        return Err(MatchingError::OverlappingSides(v));
    }
    let mut right_adj = vec![Vec::new(); y.len()];
    let left_adj: Vec<Vec<usize>> = x
        .iter()
        .enumerate()
        .map(|(l, v)| {
            g.neighbors(v)
                .iter()
                .filter_map(|&u| right_slot[u].checked_sub(1))
                .inspect(|&r| right_adj[r].push(l))
                .collect()
        })
        .collect();
    let edge_count = left_adj.iter().map(Vec::len).sum();
    Ok(BipartiteGraph {
        left: x.clone(),
        right: y.clone(),
        left_adj,
        right_adj,
        edge_count,
    })
}

/// `H'`: `d + 1` copies of the left side of `H`, each wired like the original.
///
/// Copy `i ∈ 1..=d+1` of local left vertex `x` is encoded as
/// `x * (d + 1) + (i - 1)`, so the copies of one vertex are contiguous.
#[derive(Debug, Clone, Copy)]
pub struct AuxiliaryGraph<'a> {
    base: &'a BipartiteGraph,
    copies: usize,
}

impl<'a> AuxiliaryGraph<'a> {
    pub fn base(&self) -> &'a BipartiteGraph {
        self.base
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Encoded index of copy `i` (1-based) of local left vertex `x`.
    pub fn copy_vertex(&self, x: usize, i: usize) -> usize {
        debug_assert!((1..=self.copies).contains(&i));
        x * self.copies + (i - 1)
    }

    /// `(x, i)` for an encoded copy vertex.
    pub fn split(&self, c: usize) -> (usize, usize) {
        (c / self.copies, c % self.copies + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count * self.copies
    }

    pub fn right_degree(&self, r: usize) -> usize {
        self.base.right_adj[r].len() * self.copies
    }

    /// Auxiliary edges as `(copy vertex, local right index)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.left_count())
            .flat_map(move |c| self.left_neighbors(c).iter().map(move |&r| (c, r)))
    }
}

impl BipartiteAdjacency for AuxiliaryGraph<'_> {
    fn left_count(&self) -> usize {
        self.base.left.len() * self.copies
    }

    fn right_count(&self) -> usize {
        self.base.right.len()
    }

    fn left_neighbors(&self, c: usize) -> &[usize] {
        &self.base.left_adj[c / self.copies]
    }
}

pub fn build_auxiliary(h: &BipartiteGraph, d: DegreeBound) -> AuxiliaryGraph<'_> {
    AuxiliaryGraph {
        base: h,
        copies: d.star_leaves(),
    }
}

const UNMATCHED: usize = usize::MAX;

/// A matching in some bipartite graph, in local indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_mate: Vec<usize>,
    right_mate: Vec<usize>,
    size: usize,
}

impl Matching {
    pub fn empty(left_count: usize, right_count: usize) -> Self {
        Self {
            left_mate: vec![UNMATCHED; left_count],
            right_mate: vec![UNMATCHED; right_count],
            size: 0,
        }
    }

    /// Builds a matching from explicit pairs, rejecting shared endpoints.
    pub fn from_pairs(
        left_count: usize,
        right_count: usize,
        pairs: &[(usize, usize)],
    ) -> Result<Self, MatchingError> {
        let mut m = Self::empty(left_count, right_count);
        for &(l, r) in pairs {
            if l >= left_count || r >= right_count {
                return Err(MatchingError::NotAMatchingOfAuxiliary(format!(
                    "pair ({l}, {r}) out of range"
                )));
            }
            if m.left_mate[l] != UNMATCHED || m.right_mate[r] != UNMATCHED {
                return Err(MatchingError::NotAMatchingOfAuxiliary(format!(
                    "pair ({l}, {r}) shares an endpoint"
                )));
            }
            m.left_mate[l] = r;
            m.right_mate[r] = l;
            m.size += 1;
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn left_count(&self) -> usize {
        self.left_mate.len()
    }

    pub fn right_count(&self) -> usize {
        self.right_mate.len()
    }

    pub fn mate_of_left(&self, l: usize) -> Option<usize> {
        (self.left_mate[l] != UNMATCHED).then_some(self.left_mate[l])
    }

    pub fn mate_of_right(&self, r: usize) -> Option<usize> {
        (self.right_mate[r] != UNMATCHED).then_some(self.right_mate[r])
    }

    /// Pairs `(left, right)` in ascending left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_mate
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != UNMATCHED)
            .map(|(l, &r)| (l, r))
            .collect()
    }
}

/// Maximum-cardinality matching by Hopcroft-Karp.
///
/// Free left vertices are tried in ascending order and adjacency lists are
/// scanned in ascending order, so the result is a pure function of the input.
pub fn maximum_matching<B: BipartiteAdjacency + ?Sized>(b: &B) -> Matching {
    let left_count = b.left_count();
    let mut m = Matching::empty(left_count, b.right_count());
    let mut dist = vec![u32::MAX; left_count];
    let mut next_edge = vec![0usize; left_count];
    let mut queue = VecDeque::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut via: Vec<usize> = Vec::new();

    loop {
        // Layer the graph from all free left vertices.
        queue.clear();
        for (l, dl) in dist.iter_mut().enumerate() {
            if m.left_mate[l] == UNMATCHED {
                *dl = 0;
                queue.push_back(l);
            } else {
                *dl = u32::MAX;
            }
        }
        let mut free_layer = u32::MAX;
        while let Some(l) = queue.pop_front() {
            if dist[l] >= free_layer {
                continue;
            }
            for &r in b.left_neighbors(l) {
                let next = m.right_mate[r];
                if next == UNMATCHED {
                    free_layer = free_layer.min(dist[l] + 1);
                } else if dist[next] == u32::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if free_layer == u32::MAX {
            break;
        }

        // Vertex-disjoint shortest augmenting paths, iterative DFS.
        next_edge.iter_mut().for_each(|e| *e = 0);
        for root in 0..left_count {
            if m.left_mate[root] != UNMATCHED {
                continue;
            }
            stack.clear();
            via.clear();
            stack.push(root);
            while let Some(&l) = stack.last() {
                let adj = b.left_neighbors(l);
                if next_edge[l] == adj.len() {
                    dist[l] = u32::MAX;
                    stack.pop();
                    via.pop();
                    continue;
                }
                let r = adj[next_edge[l]];
                next_edge[l] += 1;
                let next = m.right_mate[r];
                if next == UNMATCHED {
                    if dist[l] + 1 != free_layer {
                        continue;
                    }
                    via.push(r);
                    for (&pl, &pr) in stack.iter().zip(via.iter()) {
                        m.left_mate[pl] = pr;
                        m.right_mate[pr] = pl;
                    }
                    m.size += 1;
                    for &pl in &stack {
                        dist[pl] = u32::MAX;
                    }
                    break;
                } else if dist[next] != u32::MAX && dist[next] == dist[l] + 1 {
                    via.push(r);
                    stack.push(next);
                }
            }
        }
    }
    m
}

/// The marked edge set `M` of `H`, grouped into stars by center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedEdgeSet {
    leaves_of: Vec<Vec<usize>>,
    center_of: Vec<usize>,
    marked: Vec<(usize, usize)>,
}

impl MarkedEdgeSet {
    /// Marked edges as graph-vertex pairs `(x, y)`, ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.marked
    }

    pub fn len(&self) -> usize {
        self.marked.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marked.is_empty()
    }

    /// Local right indices of the leaves of the star at local left vertex `l`.
    pub fn leaves(&self, l: usize) -> &[usize] {
        &self.leaves_of[l]
    }

    pub fn marked_degree(&self, l: usize) -> usize {
        self.leaves_of[l].len()
    }

    /// Local left index of the center whose star holds local right vertex `r`.
    pub fn center_of(&self, r: usize) -> Option<usize> {
        (self.center_of[r] != UNMATCHED).then_some(self.center_of[r])
    }
}

/// Collapses a matching of `H'` to the marked edges of `H`.
pub fn project_matching(
    h: &BipartiteGraph,
    m_prime: &Matching,
    d: DegreeBound,
) -> Result<MarkedEdgeSet, MatchingError> {
    let aux = build_auxiliary(h, d);
    if m_prime.left_count() != aux.left_count() || m_prime.right_count() != aux.right_count() {
        return Err(MatchingError::NotAMatchingOfAuxiliary(format!(
            "dimensions {}x{} differ from auxiliary graph {}x{}",
            m_prime.left_count(),
            m_prime.right_count(),
            aux.left_count(),
            aux.right_count()
        )));
    }
    let mut leaves_of = vec![Vec::new(); h.left.len()];
    let mut center_of = vec![UNMATCHED; h.right.len()];
    for (c, r) in m_prime.pairs() {
        let (x, _) = aux.split(c);
        if h.left_adj[x].binary_search(&r).is_err() {
            return Err(MatchingError::NotAMatchingOfAuxiliary(format!(
                "pair ({c}, {r}) is not an edge"
            )));
        }
        leaves_of[x].push(r);
        center_of[r] = x;
    }
    let mut marked = Vec::with_capacity(m_prime.len());
    for (x, leaves) in leaves_of.iter_mut().enumerate() {
        leaves.sort_unstable();
        marked.extend(
            leaves
                .iter()
                .map(|&r| (h.left_vertex(x), h.right_vertex(r))),
        );
    }
    Ok(MarkedEdgeSet {
        leaves_of,
        center_of,
        marked,
    })
}

/// Left vertices reachable from `untagged` (local right indices) by
/// `M`-alternating paths that start with an unmarked edge.
///
/// Breadth-first search from a virtual source joined to every untagged vertex:
/// right-to-left along unmarked edges, left-to-right along marked edges.
pub(crate) fn alternating_reachable_local(
    h: &BipartiteGraph,
    m: &MarkedEdgeSet,
    untagged: &[usize],
) -> Vec<bool> {
    let mut left_seen = vec![false; h.left.len()];
    let mut right_seen = vec![false; h.right.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &r in untagged {
        if !right_seen[r] {
            right_seen[r] = true;
            queue.push_back(r);
        }
    }
    while let Some(r) = queue.pop_front() {
        let marked_center = m.center_of[r];
        for &l in &h.right_adj[r] {
            if l == marked_center || left_seen[l] {
                continue;
            }
            left_seen[l] = true;
            for &leaf in &m.leaves_of[l] {
                if !right_seen[leaf] {
                    right_seen[leaf] = true;
                    queue.push_back(leaf);
                }
            }
        }
    }
    left_seen
}

/// Graph vertices of `X` reachable from the untagged set by `M`-alternating paths.
pub fn alternating_reachable(
    h: &BipartiteGraph,
    m: &MarkedEdgeSet,
    untagged: &VertexSet,
) -> Result<VertexSet, MatchingError> {
    let mut local = Vec::with_capacity(untagged.len());
    for v in untagged {
        let r = h.right_index(v).ok_or(MatchingError::NotOnRightSide(v))?;
        if m.center_of(r).is_some() {
            return Err(MatchingError::UntaggedVertexIsMatched(v));
        }
        local.push(r);
    }
    let seen = alternating_reachable_local(h, m, &local);
    Ok(VertexSet::from_sorted(
        seen.iter()
            .enumerate()
            .filter(|&(_, &s)| s)
            .map(|(l, _)| h.left_vertex(l))
            .collect(),
    ))
}
