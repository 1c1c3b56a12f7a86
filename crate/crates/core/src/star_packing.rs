//! Star packings.
//!
//! A `d'`-star has one center and `d'` leaves. Phase one of the decomposition
//! needs a maximal `(d+1)`-star packing of the whole graph; phase two reads a
//! `≤(d+1)`-star packing off the projected matching and splits its centers
//! into fully tagged ones (exactly `d + 1` leaves) and the rest.

use crate::graph::{DegreeBound, Graph, VertexSet};
use crate::matching::{
    build_auxiliary, build_bipartite, maximum_matching, BipartiteGraph, MarkedEdgeSet,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: usize,
    pub leaves: VertexSet,
}

impl Star {
    pub fn vertex_count(&self) -> usize {
        1 + self.leaves.len()
    }

    /// Center not among the leaves and joined to each of them.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        !self.leaves.is_empty()
            && !self.leaves.contains(self.center)
            && self.leaves.iter().all(|leaf| g.has_edge(self.center, leaf))
    }
}

/// Vertex-disjoint stars, kept in ascending center order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StarPacking {
    stars: Vec<Star>,
}

impl StarPacking {
    pub fn new(mut stars: Vec<Star>) -> Self {
        stars.sort_by_key(|s| s.center);
        Self { stars }
    }

    pub fn stars(&self) -> &[Star] {
        &self.stars
    }

    pub fn len(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn centers(&self) -> VertexSet {
        VertexSet::from_sorted(self.stars.iter().map(|s| s.center).collect())
    }

    /// All centers and leaves, `V(S)`.
    pub fn covered(&self) -> VertexSet {
        self.stars
            .iter()
            .flat_map(|s| std::iter::once(s.center).chain(s.leaves.iter()))
            .collect()
    }

    /// Every star valid in `g` and no vertex shared between stars.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let total: usize = self.stars.iter().map(Star::vertex_count).sum();
        self.stars.iter().all(|s| s.is_valid_in(g)) && self.covered().len() == total
    }

    /// Certifies a full `(d+1)`-star packing from `c` to `i`: one star per
    /// member of `c`, each with exactly `d + 1` leaves, all leaves in `i`.
    pub fn is_full_from(&self, g: &Graph, c: &VertexSet, i: &VertexSet, d: DegreeBound) -> bool {
        self.is_valid_in(g)
            && self.centers() == *c
            && self
                .stars
                .iter()
                .all(|s| s.leaves.len() == d.star_leaves() && s.leaves.is_subset(i))
    }
}

/// Greedily extends `packing` to a maximal `(d+1)`-star packing of `g`.
///
/// Vertices are scanned in ascending order; a vertex with at least `d + 1`
/// uncovered neighbors becomes a center with its `d + 1` lowest-index
/// uncovered neighbors as leaves. Passes repeat until one adds nothing.
pub(crate) fn extend_to_maximal(g: &Graph, d: DegreeBound, packing: StarPacking) -> StarPacking {
    let want = d.star_leaves();
    let mut covered = packing.covered().to_mask(g.vertex_count());
    let mut stars = packing.stars;
    let mut leaves = Vec::with_capacity(want);
    loop {
        let mut changed = false;
        for v in g.vertices() {
            if covered[v] {
                continue;
            }
            leaves.clear();
            leaves.extend(
                g.neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| !covered[u])
                    .take(want),
            );
            if leaves.len() == want {
                covered[v] = true;
                for &u in &leaves {
                    covered[u] = true;
                }
                stars.push(Star {
                    center: v,
                    leaves: VertexSet::from_sorted(leaves.clone()),
                });
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    StarPacking::new(stars)
}

/// A maximal `(d+1)`-star packing; its vertex set is a `d`-degree deletion set.
pub fn maximal_star_packing(g: &Graph, d: DegreeBound) -> StarPacking {
    extend_to_maximal(g, d, StarPacking::default())
}

/// Centers of full stars and uncovered-but-attached `Y` vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TagClassification {
    pub fully_tagged: VertexSet,
    pub untagged: VertexSet,
}

pub fn classify(
    h: &BipartiteGraph,
    projected: &MarkedEdgeSet,
    d: DegreeBound,
) -> TagClassification {
    let fully_tagged = VertexSet::from_sorted(
        (0..h.left().len())
            .filter(|&l| projected.marked_degree(l) == d.star_leaves())
            .map(|l| h.left_vertex(l))
            .collect(),
    );
    TagClassification {
        fully_tagged,
        untagged: VertexSet::from_sorted(
            untagged_local(h, projected)
                .into_iter()
                .map(|r| h.right_vertex(r))
                .collect(),
        ),
    }
}

/// Local right indices with an `H`-neighbor but no marked edge.
pub(crate) fn untagged_local(h: &BipartiteGraph, projected: &MarkedEdgeSet) -> Vec<usize> {
    (0..h.right().len())
        .filter(|&r| !h.right_neighbors(r).is_empty() && projected.center_of(r).is_none())
        .collect()
}

/// Stars of the projected packing whose centers satisfy `keep` (local index).
pub(crate) fn projected_stars(
    h: &BipartiteGraph,
    projected: &MarkedEdgeSet,
    keep: impl Fn(usize) -> bool,
) -> Vec<Star> {
    (0..h.left().len())
        .filter(|&l| projected.marked_degree(l) > 0 && keep(l))
        .map(|l| Star {
            center: h.left_vertex(l),
            leaves: projected
                .leaves(l)
                .iter()
                .map(|&r| h.right_vertex(r))
                .collect(),
        })
        .collect()
}

/// Whether `|c|` disjoint `(d+1)`-stars exist with centers exactly `c` and
/// leaves in `i`, decided by a maximum matching in the auxiliary graph.
pub fn full_star_packing_exists(g: &Graph, c: &VertexSet, i: &VertexSet, d: DegreeBound) -> bool {
    if c.is_empty() {
        return true;
    }
    let Ok(h) = build_bipartite(g, c, i) else {
        return false;
    };
    maximum_matching(&build_auxiliary(&h, d)).len() == d.star_leaves() * c.len()
}
