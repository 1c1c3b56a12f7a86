//! Exact minimum `d`-degree deletion sets for small graphs.
//!
//! This is the oracle that optimality and kernel-size checks are measured
//! against. It is exponential and refuses graphs above a hard vertex cap.

use thiserror::Error;

use crate::graph::{DegreeBound, Graph, VertexSet};
use crate::kernelization::DeletionSet;

/// Largest `max_vertices` an [`ExactConfig`] may carry.
pub const HARD_VERTEX_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("graph has {n} vertices, exact solving is capped at {max}")]
    TooLarge { n: usize, max: usize },
    #[error("optimum exceeds the budget of {0}")]
    BudgetExceeded(usize),
    #[error("vertex cap {0} exceeds the hard limit of {HARD_VERTEX_CAP}")]
    CapTooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Try all vertex subsets by increasing size.
    Subsets,
    /// Branch on a vertex of degree above `d` and `d + 1` of its neighbors.
    #[default]
    Branching,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub max_vertices: usize,
    pub budget_k: Option<usize>,
    pub strategy: Strategy,
}

impl Default for ExactConfig {
    fn default() -> Self {
        Self {
            max_vertices: 24,
            budget_k: None,
            strategy: Strategy::Branching,
        }
    }
}

impl ExactConfig {
    pub fn with_strategy(strategy: Strategy) -> Self {
        Self {
            strategy,
            ..Self::default()
        }
    }
}

/// A minimum `d`-degree deletion set of `g`; among all minimum sets, the
/// lexicographically smallest.
pub fn solve_exact(g: &Graph, d: DegreeBound, cfg: ExactConfig) -> Result<DeletionSet, ExactError> {
    if cfg.max_vertices > HARD_VERTEX_CAP {
        return Err(ExactError::CapTooLarge(cfg.max_vertices));
    }
    if g.vertex_count() > cfg.max_vertices {
        return Err(ExactError::TooLarge {
            n: g.vertex_count(),
            max: cfg.max_vertices,
        });
    }
    let mut solution = Vec::new();
    for component in components(g) {
        let sub = g
            .induced_subgraph(&component)
            .expect("component vertices are in range");
        let masks = Masks::new(&sub, d);
        let budget = cfg.budget_k.map(|k| k.saturating_sub(solution.len()));
        let local = match cfg.strategy {
            Strategy::Subsets => masks.by_subsets(budget),
            Strategy::Branching => masks.by_branching(budget),
        }
        .ok_or(ExactError::BudgetExceeded(cfg.budget_k.unwrap_or(0)))?;
        solution.extend(
            (0..sub.vertex_count())
                .filter(|&k| local >> k & 1 == 1)
                .map(|k| component.as_slice()[k]),
        );
    }
    Ok(DeletionSet(solution.into_iter().collect()))
}

/// `α(G)`, the size of a minimum `d`-degree deletion set.
pub fn optimum_size(g: &Graph, d: DegreeBound, cfg: ExactConfig) -> Result<usize, ExactError> {
    solve_exact(g, d, cfg).map(|s| s.len())
}

fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = vec![false; g.vertex_count()];
    let mut out = Vec::new();
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        out.push(VertexSet::from(members));
    }
    out
}

/// Bitmask view of a graph with at most 30 vertices.
struct Masks {
    adj: Vec<u32>,
    d: u32,
}

impl Masks {
    fn new(g: &Graph, d: DegreeBound) -> Self {
        let adj = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
            .collect();
        Self {
            adj,
            d: d.get().min(u32::MAX as usize) as u32,
        }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    /// Lowest vertex outside `deleted` whose remaining degree exceeds `d`.
    fn violator(&self, deleted: u32) -> Option<usize> {
        (0..self.n())
            .find(|&v| deleted >> v & 1 == 0 && (self.adj[v] & !deleted).count_ones() > self.d)
    }

    fn by_subsets(&self, budget: Option<usize>) -> Option<u32> {
        let n = self.n();
        let max_k = budget.map_or(n, |b| b.min(n));
        for k in 0..=max_k {
            // Index combinations in lexicographic order.
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let set = idx.iter().fold(0u32, |m, &v| m | 1 << v);
                if self.violator(set).is_none() {
                    return Some(set);
                }
                let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
                    break;
                };
                idx[pos] += 1;
                for i in pos + 1..k {
                    idx[i] = idx[i - 1] + 1;
                }
            }
        }
        None
    }

    /// Whether some set `D ⊇ deleted`, disjoint from `forbidden`, with
    /// `|D \ deleted| ≤ k`, leaves maximum degree `≤ d`.
    fn completes(&self, deleted: u32, mut forbidden: u32, k: usize) -> bool {
        let Some(v) = self.violator(deleted) else {
            return true;
        };
        if k == 0 {
            return false;
        }
        // Any solution avoiding v deletes one of any d+1 of its neighbors.
        let mut branch = vec![v];
        let mut alive = self.adj[v] & !deleted;
        while branch.len() < self.d as usize + 2 && alive != 0 {
            let u = alive.trailing_zeros() as usize;
            branch.push(u);
            alive &= alive - 1;
        }
        for u in branch {
            if forbidden >> u & 1 == 1 {
                continue;
            }
            if self.completes(deleted | 1 << u, forbidden, k - 1) {
                return true;
            }
            forbidden |= 1 << u;
        }
        false
    }

    fn by_branching(&self, budget: Option<usize>) -> Option<u32> {
        let n = self.n();
        let max_k = budget.map_or(n, |b| b.min(n));
        let opt = (0..=max_k).find(|&k| self.completes(0, 0, k))?;
        // Lexicographically smallest optimum: take each vertex when possible.
        let (mut deleted, mut forbidden, mut left) = (0u32, 0u32, opt);
        for v in 0..n {
            if left == 0 {
                break;
            }
            if self.completes(deleted | 1 << v, forbidden, left - 1) {
                deleted |= 1 << v;
                left -= 1;
            } else {
                forbidden |= 1 << v;
            }
        }
        debug_assert!(self.violator(deleted).is_none());
        Some(deleted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernelization::is_deletion_set;

    fn both(g: &Graph, d: usize) -> (DeletionSet, DeletionSet) {
        let d = DegreeBound(d);
        (
            solve_exact(g, d, ExactConfig::with_strategy(Strategy::Subsets)).unwrap(),
            solve_exact(g, d, ExactConfig::with_strategy(Strategy::Branching)).unwrap(),
        )
    }

    #[test]
    fn already_feasible() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let (a, b) = both(&path, 2);
        assert!(a.is_empty() && b.is_empty());
        assert_eq!(
            optimum_size(&Graph::empty(), DegreeBound(0), ExactConfig::default()),
            Ok(0)
        );
    }

    #[test]
    fn five_cycle_cover() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (a, b) = both(&c5, 0);
        assert_eq!(a.len(), 3);
        assert_eq!(a, b);
        assert_eq!(a.members(), &VertexSet::from([0, 1, 3]));
        assert!(is_deletion_set(&c5, DegreeBound(0), &a));
    }

    #[test]
    fn star_and_two_stars() {
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (a, b) = both(&star, 1);
        assert_eq!(a.members(), &VertexSet::from([0]));
        assert_eq!(a, b);

        let two = Graph::new(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        assert_eq!(
            optimum_size(&two, DegreeBound(1), ExactConfig::default()),
            Ok(2)
        );
    }

    #[test]
    fn caps_and_budgets() {
        let big = Graph::new(25, &[]).unwrap();
        assert_eq!(
            solve_exact(&big, DegreeBound(0), ExactConfig::default()),
            Err(ExactError::TooLarge { n: 25, max: 24 })
        );
        let cfg = ExactConfig {
            max_vertices: 31,
            ..ExactConfig::default()
        };
        assert_eq!(
            solve_exact(&big, DegreeBound(0), cfg),
            Err(ExactError::CapTooLarge(31))
        );

        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        for strategy in [Strategy::Subsets, Strategy::Branching] {
            let cfg = ExactConfig {
                budget_k: Some(2),
                strategy,
                ..ExactConfig::default()
            };
            assert_eq!(
                solve_exact(&c5, DegreeBound(0), cfg),
                Err(ExactError::BudgetExceeded(2))
            );
            let cfg = ExactConfig {
                budget_k: Some(3),
                strategy,
                ..ExactConfig::default()
            };
            assert_eq!(optimum_size(&c5, DegreeBound(0), cfg), Ok(3));
        }
    }
}
