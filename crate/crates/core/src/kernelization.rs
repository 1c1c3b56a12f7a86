//! The kernelization loop and solution lifting.

use thiserror::Error;

use crate::decomposition::{decompose_with_stats, DecomposeStats};
use crate::graph::{DegreeBound, Graph, VertexSet};

/// Degree bounds above this are refused by [`bound_factor`].
pub const MAX_DEGREE_BOUND: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("degree bound {0} is too large (limit {MAX_DEGREE_BOUND})")]
    DegreeTooLarge(usize),
    #[error("kernel solution is not a {d}-degree deletion set of the kernel")]
    NotADeletionSetOfKernel { d: DegreeBound },
}

/// A set of vertices proposed for deletion, as indices of a particular graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct DeletionSet(pub VertexSet);

impl DeletionSet {
    pub fn members(&self) -> &VertexSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<VertexSet> for DeletionSet {
    fn from(s: VertexSet) -> Self {
        Self(s)
    }
}

/// `d³ + 4d² + 5d + 3`: the kernel has at most this many vertices per unit
/// of its optimum.
pub fn bound_factor(d: DegreeBound) -> Result<u64, KernelError> {
    if d.get() > MAX_DEGREE_BOUND {
        return Err(KernelError::DegreeTooLarge(d.get()));
    }
    let d = d.get() as u64;
    Ok(d * d * d + 4 * d * d + 5 * d + 3)
}

/// Whether deleting `s` leaves every vertex of `g` with degree at most `d`.
pub fn is_deletion_set(g: &Graph, d: DegreeBound, s: &DeletionSet) -> bool {
    if s.0.check_range(g.vertex_count()).is_err() {
        return false;
    }
    let removed = s.0.to_mask(g.vertex_count());
    g.residual_degrees(&removed)
        .into_iter()
        .all(|degree| degree <= d.get())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RoundStats {
    /// Vertices of the graph decomposed in this round.
    pub vertices: usize,
    pub c_added: usize,
    pub i_added: usize,
    pub decompose: DecomposeStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub d: DegreeBound,
    /// Vertices committed to the solution (indices of the input graph).
    pub c_total: VertexSet,
    /// Vertices safely discarded (indices of the input graph).
    pub i_total: VertexSet,
    /// `G[V \ (C ∪ I)]`, labels inherited from the input.
    pub kernel: Graph,
    /// Input index of each kernel vertex; kernel vertex `k` is `kernel_vertices[k]`.
    pub kernel_vertices: VertexSet,
    pub rounds: usize,
    pub stats: Vec<RoundStats>,
}

impl KernelResult {
    pub fn packing_upgrades(&self) -> usize {
        self.stats
            .iter()
            .map(|r| r.decompose.packing_upgrades)
            .sum()
    }

    pub fn repair_iterations(&self) -> usize {
        self.stats
            .iter()
            .map(|r| r.decompose.repair_iterations)
            .sum()
    }
}

/// Repeats [`decompose`](crate::decompose) on what is left of `g`, collecting
/// `C` and `I`, until a round discards nothing.
pub fn kernelize(g: &Graph, d: DegreeBound) -> KernelResult {
    let n = g.vertex_count();
    let mut taken = vec![false; n];
    let mut c_total = Vec::new();
    let mut i_total = Vec::new();
    let mut stats = Vec::new();
    let mut remaining = g.all_vertices();
    let mut current = g.clone();
    loop {
        let (dec, decompose) = decompose_with_stats(&current, d);
        let to_input = |k: usize| remaining.as_slice()[k];
        c_total.extend(dec.c.iter().map(to_input));
        i_total.extend(dec.i.iter().map(to_input));
        for v in dec.c.iter().chain(dec.i.iter()).map(to_input) {
            taken[v] = true;
        }
        stats.push(RoundStats {
            vertices: current.vertex_count(),
            c_added: dec.c.len(),
            i_added: dec.i.len(),
            decompose,
        });
        if dec.i.is_empty() {
            // C' is empty whenever I' is: a full star needs leaves.
            debug_assert!(dec.c.is_empty());
            break;
        }
        current = current
            .without(&dec.c.union(&dec.i))
            .expect("decomposition sets are in range");
        remaining = VertexSet::from_sorted(g.vertices().filter(|&v| !taken[v]).collect());
    }
    KernelResult {
        d,
        c_total: c_total.into_iter().collect(),
        i_total: i_total.into_iter().collect(),
        kernel: current,
        kernel_vertices: remaining,
        rounds: stats.len(),
        stats,
    }
}

/// `K' ∪ C` as a deletion set of the input graph.
pub fn lift_solution(
    result: &KernelResult,
    kernel_solution: &DeletionSet,
) -> Result<DeletionSet, KernelError> {
    if !is_deletion_set(&result.kernel, result.d, kernel_solution) {
        return Err(KernelError::NotADeletionSetOfKernel { d: result.d });
    }
    let lifted = kernel_solution
        .0
        .iter()
        .map(|k| result.kernel_vertices.as_slice()[k])
        .chain(result.c_total.iter())
        .collect();
    Ok(DeletionSet(lifted))
}
