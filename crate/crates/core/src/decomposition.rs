//! d-bounded decompositions.
//!
//! A partition `(I, C, T, J)` of `V` is a d-bounded decomposition when
//!
//! 1. every vertex of `I ∪ T` has degree at most `d` in `G[V \ C]`,
//! 2. no edge joins `I` and `J`,
//! 3. there is a full `(d+1)`-star packing from `C` to `I`.
//!
//! Any such `(I, C)` is locally optimal: `C` plus a minimum solution of
//! `G[V \ (I ∪ C)]` is a minimum solution of `G`. [`decompose`] finds one in
//! three phases: a maximal `(d+1)`-star packing splits `V` into `X = V(S)` and
//! `Y`; a maximum matching in the auxiliary graph picks `C' ⊆ X`, `I' ⊆ Y`
//! satisfying the Basic Condition; and a repair loop evicts bad vertices
//! from `I'` until condition 1 holds for `T' = N(I') \ C'` too.

use std::fmt;

use thiserror::Error;

use crate::graph::{DegreeBound, Graph, VertexSet};
use crate::matching::{
    alternating_reachable_local, build_auxiliary, build_bipartite, maximum_matching,
    project_matching,
};
use crate::star_packing::{
    extend_to_maximal, full_star_packing_exists, maximal_star_packing, projected_stars,
    untagged_local, Star, StarPacking,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("sides do not partition the vertex set: {0}")]
    PartitionInvalid(String),
    #[error("vertex {vertex} has degree {degree} > d inside Y")]
    DegreeBoundViolatedInY { vertex: usize, degree: usize },
}

/// Output of [`basic`]: `C' ⊆ X`, `I' ⊆ Y` and the full stars from `C'` to `I'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicResult {
    pub c_prime: VertexSet,
    pub i_prime: VertexSet,
    pub witness_packing: StarPacking,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DBoundedDecomposition {
    pub i: VertexSet,
    pub c: VertexSet,
    pub t: VertexSet,
    pub j: VertexSet,
    /// Full `(d+1)`-stars from `c` to `i`; empty when the sets came from outside.
    pub witness_packing: StarPacking,
}

impl DBoundedDecomposition {
    /// Completes `(I, C)` with `T = N(I) \ C` and `J = V \ (I ∪ C ∪ T)`.
    pub fn from_sets(g: &Graph, c: VertexSet, i: VertexSet) -> Self {
        let in_range =
            |s: &VertexSet| -> VertexSet { s.iter().filter(|&v| v < g.vertex_count()).collect() };
        let t = g.open_neighborhood(&in_range(&i)).difference(&c);
        let mut taken = vec![false; g.vertex_count()];
        for v in i.iter().chain(c.iter()).chain(t.iter()) {
            if v < taken.len() {
                taken[v] = true;
            }
        }
        let j = VertexSet::from_mask(&taken.iter().map(|&b| !b).collect::<Vec<_>>());
        Self {
            i,
            c,
            t,
            j,
            witness_packing: StarPacking::default(),
        }
    }
}

/// Working sets of the repair loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepairState {
    pub c_prime: VertexSet,
    pub i_prime: VertexSet,
    /// `N(I') \ C'` in the full graph.
    pub t_prime: VertexSet,
    /// Bad vertices `N(B) ∩ I'` of the current sets.
    pub bad_frontier: VertexSet,
    pub iteration: usize,
}

impl RepairState {
    pub fn new(g: &Graph, d: DegreeBound, c_prime: VertexSet, i_prime: VertexSet) -> Self {
        let mut state = Self {
            t_prime: VertexSet::new(),
            bad_frontier: VertexSet::new(),
            c_prime,
            i_prime,
            iteration: 0,
        };
        state.refresh(g, d);
        state
    }

    fn refresh(&mut self, g: &Graph, d: DegreeBound) {
        self.t_prime = g.open_neighborhood(&self.i_prime).difference(&self.c_prime);
        self.bad_frontier = bad_vertices(g, self, d);
    }
}

/// Per-run counters of [`decompose_with_stats`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DecomposeStats {
    /// Stars in the first maximal packing.
    pub initial_stars: usize,
    /// Times a larger packing of full stars replaced `S`.
    pub packing_upgrades: usize,
    /// `|S|` after the last upgrade.
    pub final_stars: usize,
    /// `|X| = |V(S)|`, a `d`-degree deletion set of size `≤ (d+2)·α(G)`.
    pub special_deletion_set_size: usize,
    pub initial_c_prime: usize,
    pub initial_i_prime: usize,
    pub repair_iterations: usize,
    /// `|C'|` at the start of each repair iteration.
    pub c_prime_before_repair: Vec<usize>,
    pub bad_vertices_removed: usize,
    /// Vertices reached by an alternating path whose marked degree was not
    /// `d + 1`. Always zero for a maximum matching.
    pub reachable_not_fully_tagged: usize,
}

struct PhaseTwo {
    c_prime: VertexSet,
    i_prime: VertexSet,
    witness: StarPacking,
    full_stars: Vec<Star>,
    reachable_not_fully_tagged: usize,
}

/// Matching, projection, tagging and the choice of `C'`, `I'` for disjoint
/// sides `x` and `y` of `g`. Only edges between the sides are looked at.
fn phase_two(g: &Graph, x: &VertexSet, y: &VertexSet, d: DegreeBound) -> PhaseTwo {
    let h = build_bipartite(g, x, y).expect("sides are disjoint vertex sets of g");
    let m = maximum_matching(&build_auxiliary(&h, d));
    let marked = project_matching(&h, &m, d).expect("matching was computed on the auxiliary graph");

    let untagged = untagged_local(&h, &marked);
    let reached = if untagged.is_empty() {
        vec![false; x.len()]
    } else {
        alternating_reachable_local(&h, &marked, &untagged)
    };
    let reachable_not_fully_tagged = reached
        .iter()
        .enumerate()
        .filter(|&(l, &r)| r && marked.marked_degree(l) != d.star_leaves())
        .count();

    let mut in_y_prime = vec![false; y.len()];
    for l in (0..x.len()).filter(|&l| !reached[l]) {
        for &r in marked.leaves(l) {
            in_y_prime[r] = true;
        }
    }
    let c_prime = VertexSet::from_sorted(
        (0..x.len())
            .filter(|&l| reached[l])
            .map(|l| h.left_vertex(l))
            .collect(),
    );
    let i_prime = VertexSet::from_sorted(
        (0..y.len())
            .filter(|&r| !in_y_prime[r])
            .map(|r| h.right_vertex(r))
            .collect(),
    );
    PhaseTwo {
        c_prime,
        i_prime,
        witness: StarPacking::new(projected_stars(&h, &marked, |l| reached[l])),
        full_stars: projected_stars(&h, &marked, |l| marked.marked_degree(l) == d.star_leaves()),
        reachable_not_fully_tagged,
    }
}

/// Computes `C' ⊆ X` and `I' ⊆ Y` satisfying the Basic Condition: a full
/// `(d+1)`-star packing runs from `C'` to `I'` and no edge joins `I'` to
/// `X \ C'`.
///
/// `(x, y)` must partition the vertices of `g` and `G[y]` must have maximum
/// degree at most `d`.
pub fn basic(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    d: DegreeBound,
) -> Result<BasicResult, DecompositionError> {
    let n = g.vertex_count();
    if x.check_range(n).is_err() || y.check_range(n).is_err() {
        return Err(DecompositionError::PartitionInvalid(
            "vertex out of range".into(),
        ));
    }
    if x.len() + y.len() != n || !x.is_disjoint(y) {
        return Err(DecompositionError::PartitionInvalid(format!(
            "|X| = {}, |Y| = {}, n = {n}",
            x.len(),
            y.len()
        )));
    }
    let in_x = x.to_mask(n);
    for v in y {
        let degree = g.neighbors(v).iter().filter(|&&u| !in_x[u]).count();
        if degree > d.get() {
            return Err(DecompositionError::DegreeBoundViolatedInY { vertex: v, degree });
        }
    }
    let p = phase_two(g, x, y, d);
    Ok(BasicResult {
        c_prime: p.c_prime,
        i_prime: p.i_prime,
        witness_packing: p.witness,
    })
}

/// Bad vertices `N(B) ∩ I'`, where `B` holds the vertices of
/// `T' = N(I') \ C'` whose degree in `G* = G[V \ C']` exceeds `d`.
pub fn bad_vertices(g: &Graph, state: &RepairState, d: DegreeBound) -> VertexSet {
    let n = g.vertex_count();
    let in_c = state.c_prime.to_mask(n);
    let in_i = state.i_prime.to_mask(n);
    let mut bad = vec![false; n];
    let mut checked = vec![false; n];
    for v in &state.i_prime {
        for &t in g.neighbors(v) {
            if in_c[t] || in_i[t] || checked[t] {
                continue;
            }
            checked[t] = true;
            let degree = g.neighbors(t).iter().filter(|&&u| !in_c[u]).count();
            if degree > d.get() {
                for &u in g.neighbors(t) {
                    if in_i[u] {
                        bad[u] = true;
                    }
                }
            }
        }
    }
    VertexSet::from_mask(&bad)
}

/// Finds a d-bounded decomposition of `g`. `I` and `C` may both be empty.
pub fn decompose(g: &Graph, d: DegreeBound) -> DBoundedDecomposition {
    decompose_with_stats(g, d).0
}

pub fn decompose_with_stats(g: &Graph, d: DegreeBound) -> (DBoundedDecomposition, DecomposeStats) {
    let mut stats = DecomposeStats::default();
    let mut packing = maximal_star_packing(g, d);
    stats.initial_stars = packing.len();

    let (x, mut p) = loop {
        let x = packing.covered();
        let y = g.all_vertices().difference(&x);
        let p = phase_two(g, &x, &y, d);
        stats.reachable_not_fully_tagged += p.reachable_not_fully_tagged;
        if p.full_stars.len() > packing.len() {
            // A bare S_{d+1} need not be maximal; Y must stay of degree <= d.
            packing = extend_to_maximal(g, d, StarPacking::new(p.full_stars));
            stats.packing_upgrades += 1;
            continue;
        }
        break (x, p);
    };
    stats.final_stars = packing.len();
    stats.special_deletion_set_size = x.len();
    stats.initial_c_prime = p.c_prime.len();
    stats.initial_i_prime = p.i_prime.len();

    let mut state = RepairState::new(g, d, p.c_prime, p.i_prime);
    let mut witness = std::mem::take(&mut p.witness);
    while !state.bad_frontier.is_empty() {
        stats.c_prime_before_repair.push(state.c_prime.len());
        stats.bad_vertices_removed += state.bad_frontier.len();
        let shrunk = state.i_prime.difference(&state.bad_frontier);
        let next = phase_two(g, &state.c_prime, &shrunk, d);
        stats.reachable_not_fully_tagged += next.reachable_not_fully_tagged;
        witness = next.witness;
        state.c_prime = next.c_prime;
        state.i_prime = next.i_prime;
        state.iteration += 1;
        state.refresh(g, d);
    }
    stats.repair_iterations = state.iteration;

    let mut dec = DBoundedDecomposition::from_sets(g, state.c_prime, state.i_prime);
    dec.witness_packing = witness;
    (dec, stats)
}

/// `I` = vertices whose whole closed neighborhood has degree at most `d`.
pub fn trivial_reduction(g: &Graph, d: DegreeBound) -> DBoundedDecomposition {
    let small: Vec<bool> = g.vertices().map(|v| g.degree(v) <= d.get()).collect();
    let r = VertexSet::from_sorted(
        g.vertices()
            .filter(|&v| small[v] && g.neighbors(v).iter().all(|&u| small[u]))
            .collect(),
    );
    DBoundedDecomposition::from_sets(g, VertexSet::new(), r)
}

/// A failed condition of [`validate_decomposition`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    OutOfRange(usize),
    Overlap(usize),
    Missing(usize),
    DegreeExceeded { vertex: usize, degree: usize },
    EdgeBetweenIAndJ(usize, usize),
    NoFullStarPacking { centers: usize, leaves_found: usize },
    EdgeInsideI(usize, usize),
    EdgeBetweenIAndRest(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange(v) => write!(f, "vertex {v} is out of range"),
            Violation::Overlap(v) => write!(f, "vertex {v} is in more than one set"),
            Violation::Missing(v) => write!(f, "vertex {v} is in no set"),
            Violation::DegreeExceeded { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} in G[V \\ C]")
            }
            Violation::EdgeBetweenIAndJ(u, v) => write!(f, "edge {u}-{v} joins I and J"),
            Violation::NoFullStarPacking {
                centers,
                leaves_found,
            } => write!(
                f,
                "no full star packing from C to I: {leaves_found} leaves matched for {centers} centers"
            ),
            Violation::EdgeInsideI(u, v) => write!(f, "edge {u}-{v} lies inside I"),
            Violation::EdgeBetweenIAndRest(u, v) => {
                write!(f, "edge {u}-{v} joins I and J ∪ T")
            }
        }
    }
}

pub type Verdict = Result<(), Violation>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub partition: Verdict,
    /// Condition 1.
    pub degree_bound: Verdict,
    /// Condition 2.
    pub no_i_j_edges: Verdict,
    /// Condition 3.
    pub star_packing: Verdict,
    /// For `d = 0`: whether `(I, C, J ∪ T)` is a crown decomposition.
    pub crown: Option<Verdict>,
}

impl ValidationReport {
    /// Partition and the three decomposition conditions all hold.
    pub fn passed(&self) -> bool {
        self.partition.is_ok()
            && self.degree_bound.is_ok()
            && self.no_i_j_edges.is_ok()
            && self.star_packing.is_ok()
    }

    pub fn verdicts(&self) -> Vec<(&'static str, &Verdict)> {
        let mut out = vec![
            ("partition", &self.partition),
            ("degree_bound", &self.degree_bound),
            ("no_i_j_edges", &self.no_i_j_edges),
            ("full_star_packing", &self.star_packing),
        ];
        if let Some(crown) = &self.crown {
            out.push(("crown", crown));
        }
        out
    }
}

pub fn validate_decomposition(
    g: &Graph,
    d: DegreeBound,
    dec: &DBoundedDecomposition,
) -> ValidationReport {
    const NONE: u8 = 0;
    const I: u8 = 1;
    const C: u8 = 2;
    const T: u8 = 3;
    const J: u8 = 4;
    let n = g.vertex_count();
    let mut part = vec![NONE; n];
    let mut partition = Ok(());
    for (tag, set) in [(I, &dec.i), (C, &dec.c), (T, &dec.t), (J, &dec.j)] {
        for v in set {
            if v >= n {
                partition = partition.and(Err(Violation::OutOfRange(v)));
            } else if part[v] != NONE {
                partition = partition.and(Err(Violation::Overlap(v)));
            } else {
                part[v] = tag;
            }
        }
    }
    if let Some(v) = part.iter().position(|&p| p == NONE) {
        partition = partition.and(Err(Violation::Missing(v)));
    }

    let mut degree_bound = Ok(());
    for v in g.vertices().filter(|&v| part[v] == I || part[v] == T) {
        let degree = g.neighbors(v).iter().filter(|&&u| part[u] != C).count();
        if degree > d.get() {
            degree_bound = Err(Violation::DegreeExceeded { vertex: v, degree });
            break;
        }
    }

    let first_edge = |pred: &dyn Fn(u8) -> bool| {
        g.vertices().filter(|&v| part[v] == I).find_map(|v| {
            g.neighbors(v)
                .iter()
                .find(|&&u| pred(part[u]))
                .map(|&u| (v.min(u), v.max(u)))
        })
    };
    let no_i_j_edges = match first_edge(&|p| p == J) {
        Some((u, v)) => Err(Violation::EdgeBetweenIAndJ(u, v)),
        None => Ok(()),
    };

    let c: VertexSet = dec.c.iter().filter(|&v| v < n).collect();
    let i: VertexSet = dec.i.iter().filter(|&v| v < n && !c.contains(v)).collect();
    let star_packing = star_packing_verdict(g, &c, &i, d);

    let crown = (d.get() == 0).then(|| {
        if let Some((u, v)) = first_edge(&|p| p == I) {
            Err(Violation::EdgeInsideI(u, v))
        } else if let Some((u, v)) = first_edge(&|p| p == J || p == T) {
            Err(Violation::EdgeBetweenIAndRest(u, v))
        } else {
            star_packing.clone()
        }
    });

    ValidationReport {
        partition,
        degree_bound,
        no_i_j_edges,
        star_packing,
        crown,
    }
}

fn star_packing_verdict(g: &Graph, c: &VertexSet, i: &VertexSet, d: DegreeBound) -> Verdict {
    if full_star_packing_exists(g, c, i, d) {
        return Ok(());
    }
    let leaves_found = build_bipartite(g, c, i)
        .map(|h| maximum_matching(&build_auxiliary(&h, d)).len())
        .unwrap_or(0);
    Err(Violation::NoFullStarPacking {
        centers: c.len(),
        leaves_found,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star3() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    fn sets(dec: &DBoundedDecomposition) -> [Vec<usize>; 4] {
        [
            dec.i.as_slice().to_vec(),
            dec.c.as_slice().to_vec(),
            dec.t.as_slice().to_vec(),
            dec.j.as_slice().to_vec(),
        ]
    }

    /// The ten-vertex instance with a hub `x`, five leaves `y1..y5`, a path
    /// `y3 - t - z` and two pendants on `z`.
    fn bad_vertex_instance() -> Graph {
        let (x, z, t, w1, w2) = (0, 1, 9, 7, 8);
        let y = [2, 3, 4, 5, 6];
        let mut edges: Vec<_> = y.iter().map(|&yi| (x, yi)).collect();
        edges.extend([(y[2], t), (t, z), (z, w1), (z, w2)]);
        Graph::new(10, &edges).unwrap()
    }

    #[test]
    fn basic_without_left_side() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let r = basic(&g, &VertexSet::new(), &g.all_vertices(), DegreeBound(2)).unwrap();
        assert!(r.c_prime.is_empty());
        assert_eq!(r.i_prime, g.all_vertices());
    }

    #[test]
    fn basic_on_star() {
        let g = star3();
        let r = basic(
            &g,
            &VertexSet::from([0]),
            &VertexSet::from([1, 2, 3]),
            DegreeBound(1),
        )
        .unwrap();
        assert_eq!(r.c_prime, VertexSet::from([0]));
        assert_eq!(r.i_prime, VertexSet::from([1, 2, 3]));
        assert!(r
            .witness_packing
            .is_full_from(&g, &r.c_prime, &r.i_prime, DegreeBound(1)));

        let r = basic(
            &g,
            &VertexSet::from([0, 1]),
            &VertexSet::from([2, 3]),
            DegreeBound(0),
        )
        .unwrap();
        assert_eq!(r.c_prime, VertexSet::from([0]));
        assert_eq!(r.i_prime, VertexSet::from([2, 3]));
    }

    #[test]
    fn basic_rejects_bad_inputs() {
        let g = star3();
        assert!(matches!(
            basic(
                &g,
                &VertexSet::from([0]),
                &VertexSet::from([1, 2]),
                DegreeBound(1)
            ),
            Err(DecompositionError::PartitionInvalid(_))
        ));
        assert_eq!(
            basic(&g, &VertexSet::new(), &g.all_vertices(), DegreeBound(1)),
            Err(DecompositionError::DegreeBoundViolatedInY {
                vertex: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn bad_vertex_detection() {
        let g = bad_vertex_instance();
        let d = DegreeBound(1);
        let empty = RepairState::new(&g, d, VertexSet::from([0]), VertexSet::new());
        assert!(empty.bad_frontier.is_empty());

        let state = RepairState::new(&g, d, VertexSet::from([0]), VertexSet::from([4, 5, 6]));
        assert_eq!(state.t_prime, VertexSet::from([9]));
        assert_eq!(bad_vertices(&g, &state, d), VertexSet::from([4]));
    }

    #[test]
    fn decompose_small_cases() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let dec = decompose(&path, DegreeBound(2));
        assert_eq!(sets(&dec), [vec![0, 1, 2], vec![], vec![], vec![]]);

        let dec = decompose(&star3(), DegreeBound(0));
        assert_eq!(sets(&dec), [vec![2, 3], vec![0], vec![], vec![1]]);
        assert!(validate_decomposition(&star3(), DegreeBound(0), &dec).passed());

        let dec = decompose(&star3(), DegreeBound(1));
        assert!(dec.i.is_empty());
        assert!(dec.c.is_empty());

        let dec = decompose(&Graph::empty(), DegreeBound(1));
        assert!(dec.i.is_empty() && dec.c.is_empty() && dec.t.is_empty() && dec.j.is_empty());
    }

    #[test]
    fn decompose_runs_repair_loop() {
        let g = bad_vertex_instance();
        let d = DegreeBound(1);
        let (dec, stats) = decompose_with_stats(&g, d);
        let report = validate_decomposition(&g, d, &dec);
        assert!(report.passed(), "{report:?}");
        assert!(dec.witness_packing.is_full_from(&g, &dec.c, &dec.i, d));
        assert_eq!(stats.reachable_not_fully_tagged, 0);
    }

    #[test]
    fn trivial_reductions() {
        let edge = Graph::new(2, &[(0, 1)]).unwrap();
        let dec = trivial_reduction(&edge, DegreeBound(1));
        assert_eq!(dec.i, VertexSet::from([0, 1]));
        assert!(dec.t.is_empty());

        assert!(trivial_reduction(&star3(), DegreeBound(1)).i.is_empty());

        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            trivial_reduction(&path, DegreeBound(2)).i,
            VertexSet::from([0, 1, 2])
        );

        let g = bad_vertex_instance();
        let dec = trivial_reduction(&g, DegreeBound(2));
        assert!(validate_decomposition(&g, DegreeBound(2), &dec).passed());
    }

    #[test]
    fn validator_verdicts() {
        let path = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let all = DBoundedDecomposition::from_sets(&path, VertexSet::new(), path.all_vertices());
        assert!(validate_decomposition(&path, DegreeBound(2), &all).passed());

        let g = star3();
        let crown =
            DBoundedDecomposition::from_sets(&g, VertexSet::from([0]), VertexSet::from([2, 3]));
        let report = validate_decomposition(&g, DegreeBound(0), &crown);
        assert!(report.passed());
        assert_eq!(report.crown, Some(Ok(())));

        let broken = DBoundedDecomposition {
            i: VertexSet::from([1]),
            c: VertexSet::new(),
            t: VertexSet::new(),
            j: VertexSet::from([0, 2, 3]),
            witness_packing: StarPacking::default(),
        };
        let report = validate_decomposition(&g, DegreeBound(0), &broken);
        assert!(!report.passed());
        assert_eq!(report.no_i_j_edges, Err(Violation::EdgeBetweenIAndJ(0, 1)));

        let overlap = DBoundedDecomposition {
            i: VertexSet::from([1]),
            c: VertexSet::from([1]),
            t: VertexSet::new(),
            j: VertexSet::from([0, 2, 3, 7]),
            witness_packing: StarPacking::default(),
        };
        let report = validate_decomposition(&g, DegreeBound(0), &overlap);
        assert!(report.partition.is_err());
    }

    #[test]
    fn validator_star_packing_condition() {
        let g = star3();
        let dec = DBoundedDecomposition::from_sets(&g, VertexSet::from([0]), VertexSet::from([1]));
        let report = validate_decomposition(&g, DegreeBound(1), &dec);
        assert_eq!(
            report.star_packing,
            Err(Violation::NoFullStarPacking {
                centers: 1,
                leaves_found: 1
            })
        );
    }
}
