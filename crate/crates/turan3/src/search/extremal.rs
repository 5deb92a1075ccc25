//! Exact maximum triangle counts over all graphs on n vertices avoiding a
//! forbidden list, by exhaustive isomorph-free extension with an admissible
//! potential bound.
//!
//! A graph on k vertices that will gain n-k more can pick up at most
//! (n-k) e(G) triangles with one new vertex, C(n-k,2) k with two, and
//! C(n-k,3) inside the new set, so
//!
//!   pot(G) = t(G) + (n-k) e(G) + C(n-k,2) k + C(n-k,3)
//!
//! bounds every completion. Prefixes of an extremal graph (under any vertex
//! order) keep pot at or above the extremal value, so discarding graphs with
//! pot strictly below a known attained lower bound never loses the optimum
//! or all of its witnesses. The lower bound is seeded by local search, whose
//! witness makes it attained by construction.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph6::to_graph6;
use crate::pattern::{self, Pattern};

use super::canon::SmallGraph;
use super::enumerate::{admissible, check_size, extend_level};
use super::local::{local_search_lower_bound, sorted_names};

/// Knobs for [`exact_extremal`]. `prune: false` disables both the potential
/// bound and its local-search seed, for cross-validation; the answer must
/// not change.
#[derive(Clone, Debug)]
pub struct ExtremalOptions {
    pub prune: bool,
    pub seed: u64,
    pub local_budget: u64,
}

impl Default for ExtremalOptions {
    fn default() -> Self {
        ExtremalOptions { prune: true, seed: 1, local_budget: 60 }
    }
}

/// An exact or heuristic extremal value, with its witness graph in graph6
/// form. `method` is "exhaustive" for proven values, "local-search" for
/// lower bounds.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub forbidden: Vec<String>,
    pub max_triangles: usize,
    pub witness: String,
    pub graphs_scanned: u64,
    pub method: String,
}

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

fn binom3(x: usize) -> usize {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

fn potential(g: &SmallGraph, n: usize) -> usize {
    let k = g.n();
    let rest = n - k;
    g.triangle_count() + rest * g.edge_count() + binom2(rest) * k + binom3(rest)
}

/// Running maximum over one shard of the final level: best triangle count,
/// smallest canonical key among its achievers, and how many admissible
/// graphs were examined. `hit` distinguishes "no admissible graph seen"
/// from a genuine best of zero.
struct Acc {
    best: usize,
    key: u64,
    seen: u64,
    hit: bool,
}

impl Acc {
    fn empty() -> Acc {
        Acc { best: 0, key: u64::MAX, seen: 0, hit: false }
    }

    fn merge(a: Acc, b: Acc) -> Acc {
        let seen = a.seen + b.seen;
        let (mut hi, lo) = match (a.hit, b.hit) {
            (true, true) => {
                if b.best > a.best {
                    (b, a)
                } else {
                    (a, b)
                }
            }
            (false, true) => (b, a),
            _ => (a, b),
        };
        if lo.hit && lo.best == hi.best {
            hi.key = hi.key.min(lo.key);
        }
        hi.seen = seen;
        hi
    }
}

/// The maximum triangle count over all `forbidden`-free graphs on `n`
/// vertices, with a canonical witness, by exhaustive search.
pub fn exact_extremal(
    n: usize,
    forbidden: &[Pattern],
    opts: &ExtremalOptions,
) -> Result<ExtremalRecord> {
    check_size(n)?;
    let incumbent = if opts.prune && n > 2 {
        let ls = local_search_lower_bound(n, forbidden, opts.local_budget, opts.seed)?;
        ls.best_triangles
    } else {
        0
    };

    let mut level = vec![SmallGraph::empty(1)];
    let mut scanned: u64 = 1;
    for k in 1..n.saturating_sub(1) {
        let keys = extend_level(&level, forbidden);
        level = keys
            .into_iter()
            .map(|key| SmallGraph::from_key(k + 1, key))
            .filter(|g| !opts.prune || potential(g, n) >= incumbent)
            .collect();
        scanned += level.len() as u64;
    }

    // final level: no canonicalization is needed to take a maximum; the
    // witness is canonicalized only among the achievers
    let final_acc = if n == 1 {
        Acc { best: 0, key: 0, seen: 1, hit: true }
    } else {
        let k = level.first().map(|g| g.n()).unwrap_or(0);
        level
            .par_iter()
            .fold(Acc::empty, |mut acc, g| {
                for mask in 0u16..1 << k {
                    let child = g.with_vertex(mask);
                    if !admissible(&child, forbidden) {
                        continue;
                    }
                    acc.seen += 1;
                    let t = child.triangle_count();
                    if !acc.hit || t > acc.best {
                        acc.best = t;
                        acc.key = child.canonical_key();
                        acc.hit = true;
                    } else if t == acc.best {
                        acc.key = acc.key.min(child.canonical_key());
                    }
                }
                acc
            })
            .reduce(Acc::empty, Acc::merge)
    };
    scanned += final_acc.seen;

    if !final_acc.hit {
        return Err(Error::PropertyFalsified(
            "no admissible graph at the final level; even the empty graph should qualify".into(),
        ));
    }
    if final_acc.best < incumbent {
        return Err(Error::PropertyFalsified(format!(
            "exhaustive maximum {} fell below the attained lower bound {incumbent}",
            final_acc.best
        )));
    }
    let witness_graph = SmallGraph::from_key(n, final_acc.key).to_graph();
    debug_assert!(pattern::is_free(&witness_graph, forbidden));
    debug_assert_eq!(witness_graph.triangle_count(), final_acc.best);
    Ok(ExtremalRecord {
        n,
        forbidden: sorted_names(forbidden),
        max_triangles: final_acc.best,
        witness: to_graph6(&witness_graph),
        graphs_scanned: scanned,
        method: "exhaustive".into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6::from_graph6;
    use crate::graph::Graph64;

    fn p_hat(k: usize) -> Pattern {
        Pattern::Suspension(Box::new(Pattern::Path(k)))
    }

    fn exact(n: usize, forbidden: &[Pattern]) -> ExtremalRecord {
        exact_extremal(n, forbidden, &ExtremalOptions::default()).unwrap()
    }

    #[test]
    fn suspended_short_path_values_are_exact() {
        let p3 = [p_hat(3)];
        assert_eq!(exact(4, &p3).max_triangles, 4);
        assert_eq!(exact(5, &p3).max_triangles, 4);
        assert_eq!(exact(6, &p3).max_triangles, 5);
        let p4 = [p_hat(4)];
        assert_eq!(exact(5, &p4).max_triangles, 10);
        assert_eq!(exact(6, &p4).max_triangles, 10);
    }

    #[test]
    fn witnesses_decode_free_and_attain_the_value() {
        for (n, pats) in [(5, vec![p_hat(3)]), (6, vec![p_hat(4)]), (6, vec![Pattern::Complete(4)])]
        {
            let rec = exact(n, &pats);
            let g: Graph64 = from_graph6(&rec.witness).unwrap();
            assert_eq!(g.n(), n);
            assert!(pattern::is_free(&g, &pats));
            assert_eq!(g.triangle_count(), rec.max_triangles);
        }
    }

    #[test]
    fn pruning_does_not_change_answers() {
        let no_prune = ExtremalOptions { prune: false, ..Default::default() };
        for pats in [
            vec![p_hat(3)],
            vec![Pattern::Complete(4)],
            vec![Pattern::Cycle(4)],
            vec![Pattern::K122],
        ] {
            for n in 2..=6 {
                let a = exact_extremal(n, &pats, &ExtremalOptions::default()).unwrap();
                let b = exact_extremal(n, &pats, &no_prune).unwrap();
                assert_eq!(a.max_triangles, b.max_triangles, "n={n} {pats:?}");
                assert_eq!(a.witness, b.witness, "n={n} {pats:?}");
            }
        }
    }

    #[test]
    fn mask_brute_force_agrees_on_small_sizes() {
        for pats in [vec![p_hat(3)], vec![Pattern::Complete(4)]] {
            for n in 3..=5usize {
                let bits = n * (n - 1) / 2;
                let mut best = 0;
                for mask in 0u32..1 << bits {
                    let mut edges = Vec::new();
                    let mut bit = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if mask >> bit & 1 == 1 {
                                edges.push((u, v));
                            }
                            bit += 1;
                        }
                    }
                    let g = Graph64::from_edges(n, edges);
                    if pattern::is_free(&g, &pats) {
                        best = best.max(g.triangle_count());
                    }
                }
                assert_eq!(exact(n, &pats).max_triangles, best, "n={n} {pats:?}");
            }
        }
    }

    #[test]
    fn forbidding_triangles_gives_zero_with_empty_witness_triangles() {
        let rec = exact(6, &[Pattern::Complete(3)]);
        assert_eq!(rec.max_triangles, 0);
        let g: Graph64 = from_graph6(&rec.witness).unwrap();
        assert_eq!(g.triangle_count(), 0);
    }

    #[test]
    fn octahedron_is_the_four_clique_free_optimum_at_six() {
        let rec = exact(6, &[Pattern::Complete(4)]);
        assert_eq!(rec.max_triangles, 8);
        let g: Graph64 = from_graph6(&rec.witness).unwrap();
        let oct = SmallGraph::from_graph(&Pattern::K222.realize()).canonical_key();
        assert_eq!(SmallGraph::from_graph(&g).canonical_key(), oct);
    }
}
