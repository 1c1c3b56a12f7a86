//! Property tests against brute-force oracles on small graphs.

use bdd_core::matching::BipartiteAdjacency;
use bdd_core::{
    build_auxiliary, build_bipartite, decompose_with_stats, full_star_packing_exists,
    is_deletion_set, kernelize, lift_solution, maximal_star_packing, maximum_matching,
    optimum_size, project_matching, solve_exact, validate_decomposition, BipartiteGraph,
    DegreeBound, DeletionSet, ExactConfig, Graph, Strategy as SolveStrategy, VertexSet,
};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let len = pairs.len();
        (
            Just(pairs),
            proptest::collection::vec(any::<bool>(), len),
            0.0f64..1.0,
        )
            .prop_map(move |(pairs, keep, density)| {
                // Thin the edge set to get a spread of densities.
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(keep.iter())
                    .enumerate()
                    .filter(|(k, (_, &b))| b && ((*k as f64 * 0.618).fract() < density))
                    .map(|(_, (&p, _))| p)
                    .collect();
                Graph::new(n, &edges).unwrap()
            })
    })
}

/// Smallest deletion set size by trying every subset.
fn brute_force_alpha(g: &Graph, d: DegreeBound) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&mask| {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            is_deletion_set(g, d, &DeletionSet(s))
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Largest number of edges in a `≤(d+1)`-star packing from left to right:
/// every right vertex picks one neighbor or nothing, centers take ≤ d+1 leaves.
fn brute_force_star_edges(h: &BipartiteGraph, d: DegreeBound) -> usize {
    fn go(h: &BipartiteGraph, d: usize, r: usize, load: &mut Vec<usize>) -> usize {
        if r == h.right().len() {
            return 0;
        }
        let mut best = go(h, d, r + 1, load);
        for &l in h.right_neighbors(r) {
            if load[l] <= d {
                load[l] += 1;
                best = best.max(1 + go(h, d, r + 1, load));
                load[l] -= 1;
            }
        }
        best
    }
    go(h, d.get(), 0, &mut vec![0; h.left().len()])
}

/// Full `(d+1)`-star packing from `c` to `i` by trying all leaf choices.
fn brute_force_full_packing(
    g: &Graph,
    c: &[usize],
    i: &VertexSet,
    d: usize,
    used: &mut Vec<bool>,
) -> bool {
    let Some((&center, rest)) = c.split_first() else {
        return true;
    };
    let options: Vec<usize> = g
        .neighbors(center)
        .iter()
        .copied()
        .filter(|&u| i.contains(u) && !used[u])
        .collect();
    fn choose(
        g: &Graph,
        rest: &[usize],
        i: &VertexSet,
        d: usize,
        used: &mut Vec<bool>,
        options: &[usize],
        need: usize,
    ) -> bool {
        if need == 0 {
            return brute_force_full_packing(g, rest, i, d, used);
        }
        for (k, &u) in options.iter().enumerate() {
            used[u] = true;
            let ok = choose(g, rest, i, d, used, &options[k + 1..], need - 1);
            used[u] = false;
            if ok {
                return true;
            }
        }
        false
    }
    choose(g, rest, i, d, used, &options, d + 1)
}

proptest! {
    #[test]
    fn graph_invariants(g in graph_strategy(12), pick in proptest::collection::vec(any::<bool>(), 12)) {
        let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        for v in g.vertices() {
            for &u in g.neighbors(v) {
                prop_assert!(g.has_edge(u, v));
            }
        }
        let s: VertexSet = g.vertices().filter(|&v| pick[v]).collect();
        let sub = g.induced_subgraph(&s).unwrap();
        prop_assert!(sub.max_degree() <= g.max_degree());
        prop_assert_eq!(sub.induced_subgraph(&sub.all_vertices()).unwrap(), sub.clone());
        let expected = g.edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).count();
        prop_assert_eq!(sub.edge_count(), expected);
    }

    #[test]
    fn maximal_packing_is_deletion_set(g in graph_strategy(14), d in 0usize..4) {
        let d = DegreeBound(d);
        let s = maximal_star_packing(&g, d);
        prop_assert!(s.is_valid_in(&g));
        prop_assert_eq!(s.covered().len(), (d.get() + 2) * s.len());
        prop_assert!(s.stars().iter().all(|st| st.leaves.len() == d.star_leaves()));
        prop_assert!(g.without(&s.covered()).unwrap().max_degree() <= d.get());
    }

    #[test]
    fn full_packing_matches_enumeration(g in graph_strategy(12), d in 0usize..3, split in any::<u64>()) {
        let n = g.vertex_count();
        let c: Vec<usize> = (0..n).filter(|&v| split >> (2 * v) & 3 == 0).take(3).collect();
        let i: VertexSet = (0..n).filter(|&v| split >> (2 * v) & 3 >= 2 && !c.contains(&v)).take(9).collect();
        let c_set: VertexSet = c.iter().copied().collect();
        let expected = brute_force_full_packing(&g, &c, &i, d, &mut vec![false; n]);
        prop_assert_eq!(full_star_packing_exists(&g, &c_set, &i, DegreeBound(d)), expected);
    }

    #[test]
    fn auxiliary_matching_is_star_packing(g in graph_strategy(8), d in 0usize..3, split in any::<u8>()) {
        let d = DegreeBound(d);
        let x: VertexSet = g.vertices().filter(|&v| split >> v & 1 == 1).collect();
        let y = g.all_vertices().difference(&x);
        let h = build_bipartite(&g, &x, &y).unwrap();
        let aux = build_auxiliary(&h, d);
        for r in 0..aux.right_count() {
            prop_assert_eq!(aux.right_degree(r), d.star_leaves() * h.right_neighbors(r).len());
        }
        let m = maximum_matching(&aux);
        prop_assert_eq!(&m, &maximum_matching(&aux));
        let marked = project_matching(&h, &m, d).unwrap();
        prop_assert_eq!(marked.len(), m.len());
        prop_assert_eq!(m.len(), brute_force_star_edges(&h, d));
        for l in 0..h.left().len() {
            prop_assert!(marked.marked_degree(l) <= d.star_leaves());
        }
    }

    #[test]
    fn decomposition_is_sound_and_locally_optimal(g in graph_strategy(11), d in 0usize..3) {
        let d = DegreeBound(d);
        let (dec, stats) = decompose_with_stats(&g, d);
        let report = validate_decomposition(&g, d, &dec);
        prop_assert!(report.passed(), "{:?}", report);
        prop_assert!(dec.witness_packing.is_full_from(&g, &dec.c, &dec.i, d));
        prop_assert_eq!(stats.reachable_not_fully_tagged, 0);
        prop_assert!(stats.c_prime_before_repair.windows(2).all(|w| w[1] < w[0]));
        if d.get() == 0 {
            prop_assert_eq!(stats.repair_iterations, 0);
            if !dec.i.is_empty() {
                prop_assert_eq!(report.crown, Some(Ok(())));
            }
        }
        let rest = g.without(&dec.i.union(&dec.c)).unwrap();
        prop_assert_eq!(brute_force_alpha(&g, d), dec.c.len() + brute_force_alpha(&rest, d));
    }

    #[test]
    fn kernel_preserves_optimum(g in graph_strategy(12), d in 0usize..3) {
        let d = DegreeBound(d);
        let r = kernelize(&g, d);
        prop_assert_eq!(r.c_total.len() + r.i_total.len() + r.kernel.vertex_count(), g.vertex_count());
        prop_assert!(r.c_total.is_disjoint(&r.i_total));
        prop_assert!(r.rounds <= g.vertex_count() + 1);
        prop_assert!(r.stats[..r.rounds - 1].iter().all(|s| s.i_added >= 1));

        let cfg = ExactConfig::default();
        let alpha = optimum_size(&g, d, cfg).unwrap();
        let k_solution = solve_exact(&r.kernel, d, cfg).unwrap();
        prop_assert_eq!(alpha, r.c_total.len() + k_solution.len());
        let factor = bdd_core::bound_factor(d).unwrap() as usize;
        prop_assert!(r.kernel.vertex_count() <= factor * k_solution.len());

        let lifted = lift_solution(&r, &k_solution).unwrap();
        prop_assert!(is_deletion_set(&g, d, &lifted));
        prop_assert_eq!(lifted.len(), alpha);

        let again = kernelize(&r.kernel, d);
        prop_assert!(again.c_total.is_empty() && again.i_total.is_empty());
        prop_assert_eq!(again.kernel, r.kernel);
    }

    #[test]
    fn exact_strategies_agree(g in graph_strategy(12), d in 0usize..3) {
        let d = DegreeBound(d);
        let subsets = solve_exact(&g, d, ExactConfig::with_strategy(SolveStrategy::Subsets)).unwrap();
        let branching = solve_exact(&g, d, ExactConfig::with_strategy(SolveStrategy::Branching)).unwrap();
        prop_assert_eq!(&subsets, &branching);
        prop_assert!(is_deletion_set(&g, d, &subsets));
        prop_assert_eq!(subsets.len(), brute_force_alpha(&g, d));
    }

    #[test]
    fn exact_is_additive_over_components(a in graph_strategy(7), b in graph_strategy(7), d in 0usize..3) {
        let d = DegreeBound(d);
        let shift = a.vertex_count();
        let edges: Vec<_> = a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift))).collect();
        let union = Graph::new(shift + b.vertex_count(), &edges).unwrap();
        let cfg = ExactConfig::default();
        prop_assert_eq!(
            optimum_size(&union, d, cfg).unwrap(),
            optimum_size(&a, d, cfg).unwrap() + optimum_size(&b, d, cfg).unwrap()
        );
    }
}
