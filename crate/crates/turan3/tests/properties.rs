//! Randomized invariants. Each property pits a fast implementation against
//! an independent brute-force reading of the same definition, or checks a
//! round trip, across arbitrary graphs.

use proptest::prelude::*;

use turan3::graph::Graph64;
use turan3::graph6::{from_graph6, to_graph6};
use turan3::pattern::{contains, find, Pattern};
use turan3::search::{
    edge_triangle_inequality_holds, exact_extremal, ExtremalOptions, SmallGraph,
};

/// Graph on `n` vertices whose edge set is read off a bit per vertex pair.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph64 {
    let mut edges = Vec::new();
    let mut idx = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph64::from_edges(n, edges)
}

fn arb_graph(n_max: usize) -> impl Strategy<Value = Graph64> {
    (1..=n_max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

fn arb_graph_with_perm(n_max: usize) -> impl Strategy<Value = (Graph64, Vec<usize>)> {
    (1..=n_max).prop_flat_map(|n| {
        let bits = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (bits, perm).prop_map(move |(bits, perm)| (graph_from_bits(n, &bits), perm))
    })
}

/// Injective map of the pattern's vertices into `g` sending pattern edges to
/// edges, by plain backtracking. The definition the matcher must agree with.
fn embeds_brute(p: &Graph64, g: &Graph64) -> bool {
    fn go(p: &Graph64, g: &Graph64, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == p.n() {
            return true;
        }
        for v in 0..g.n() {
            if used[v] {
                continue;
            }
            if (0..i).all(|j| !p.has_edge(i, j) || g.has_edge(map[j], v)) {
                used[v] = true;
                map.push(v);
                if go(p, g, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    p.n() <= g.n() && go(p, g, &mut Vec::new(), &mut vec![false; g.n()])
}

fn induced(g: &Graph64, vs: &[usize]) -> Graph64 {
    let mut edges = Vec::new();
    for (i, &a) in vs.iter().enumerate() {
        for (j, &b) in vs.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                edges.push((i, j));
            }
        }
    }
    Graph64::from_edges(vs.len(), edges)
}

fn small_patterns() -> Vec<Pattern> {
    vec![
        Pattern::Complete(3),
        Pattern::Complete(4),
        Pattern::Complete(5),
        Pattern::Path(2),
        Pattern::Path(3),
        Pattern::Path(4),
        Pattern::Cycle(3),
        Pattern::Cycle(4),
        Pattern::Cycle(5),
        Pattern::Cycle(6),
        Pattern::K122,
        Pattern::Book(2),
        Pattern::CompleteBipartite(2, 2),
    ]
}

proptest! {
    #[test]
    fn graph6_round_trips(g in arb_graph(40)) {
        let code = to_graph6(&g);
        let back = from_graph6(&code).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn edge_triangle_inequality_on_arbitrary_graphs(g in arb_graph(40)) {
        prop_assert!(edge_triangle_inequality_holds(&g));
    }

    #[test]
    fn matcher_agrees_with_brute_force(
        g in arb_graph(7),
        pat in proptest::sample::select(small_patterns()),
    ) {
        let expected = embeds_brute(&pat.realize(), &g);
        prop_assert_eq!(contains(&g, &pat), expected);
        match find(&g, &pat) {
            Some(w) => {
                prop_assert!(expected);
                let p = pat.realize();
                prop_assert_eq!(w.len(), p.n());
                let mut seen = vec![false; g.n()];
                for &v in &w {
                    prop_assert!(!seen[v], "witness repeats a vertex");
                    seen[v] = true;
                }
                for (i, j) in p.edges() {
                    prop_assert!(g.has_edge(w[i], w[j]), "witness misses an edge");
                }
            }
            None => prop_assert!(!expected),
        }
    }

    #[test]
    fn suspension_means_pattern_in_a_neighborhood(
        g in arb_graph(8),
        inner in proptest::sample::select(vec![
            Pattern::Path(2),
            Pattern::Path(3),
            Pattern::Path(4),
            Pattern::Cycle(3),
            Pattern::Cycle(4),
            Pattern::Cycle(5),
            Pattern::Complete(3),
            Pattern::Complete(4),
        ]),
    ) {
        let hat = Pattern::Suspension(Box::new(inner.clone()));
        let by_neighborhoods = g.vertices().any(|v| {
            let nb: Vec<usize> = g.neighbors(v).iter().collect();
            contains(&induced(&g, &nb), &inner)
        });
        prop_assert_eq!(contains(&g, &hat), by_neighborhoods);
    }

    #[test]
    fn canonical_key_ignores_labeling((g, perm) in arb_graph_with_perm(8)) {
        let relabeled = Graph64::from_edges(
            g.n(),
            g.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>(),
        );
        prop_assert_eq!(
            SmallGraph::from_graph(&g).canonical_key(),
            SmallGraph::from_graph(&relabeled).canonical_key()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn pruning_never_changes_the_extremal_answer(
        n in 3usize..=6,
        forbidden in proptest::sample::select(vec![
            vec![Pattern::Suspension(Box::new(Pattern::Path(3)))],
            vec![Pattern::Suspension(Box::new(Pattern::Path(4)))],
            vec![Pattern::Complete(4)],
            vec![Pattern::K122],
            vec![Pattern::Cycle(4)],
        ]),
    ) {
        let pruned = exact_extremal(
            n,
            &forbidden,
            &ExtremalOptions { prune: true, seed: 7, local_budget: 2_000 },
        )
        .unwrap();
        let full = exact_extremal(
            n,
            &forbidden,
            &ExtremalOptions { prune: false, seed: 7, local_budget: 0 },
        )
        .unwrap();
        prop_assert_eq!(pruned.max_triangles, full.max_triangles);
        prop_assert_eq!(&pruned.witness, &full.witness);
        let w: Graph64 = from_graph6(&pruned.witness).unwrap();
        prop_assert_eq!(w.triangle_count(), full.max_triangles);
    }
}
