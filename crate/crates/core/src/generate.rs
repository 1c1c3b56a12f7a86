//! Seeded random instances.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{m} edges requested but a simple graph on {n} vertices has at most {max}")]
pub struct TooManyEdges {
    pub n: usize,
    pub m: usize,
    pub max: usize,
}

pub fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Uniform random simple graph with exactly `m` edges (the `G(n, m)` model).
///
/// The same `(n, m, seed)` always yields the same graph.
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<Graph, TooManyEdges> {
    let max = max_edges(n);
    if m > max {
        return Err(TooManyEdges { n, m, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Sample whichever of the edge set or its complement is smaller.
    let complement = m > max / 2;
    let want = if complement { max - m } else { m };
    let mut chosen = HashSet::with_capacity(want);
    let mut order = Vec::with_capacity(want);
    while order.len() < want {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if chosen.insert(pair) {
            order.push(pair);
        }
    }
    let edges: Vec<(usize, usize)> = if complement {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|p| !chosen.contains(p))
            .collect()
    } else {
        order
    };
    Ok(Graph::new(n, &edges).expect("generated edges are simple"))
}
