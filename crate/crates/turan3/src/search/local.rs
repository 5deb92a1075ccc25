//! Randomized hill climbing for triangle-rich graphs avoiding forbidden
//! subgraphs. Produces certified lower bounds: the witness graph is concrete
//! and re-checked free, so its triangle count is attained.
//!
//! The climb starts from the best admissible seed among the empty graph and
//! the two closed-form constructions, greedily adds the edge that creates
//! the most triangles while staying free, then alternates random edge
//! removals with greedy refills, keeping the best graph seen.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions;
use crate::error::{Error, Result};
use crate::graph::{Graph, Graph64};
use crate::pattern::{self, Pattern};

/// Outcome of a local search run: `best_triangles` is witnessed by the
/// returned graph.
#[derive(Clone, Debug)]
pub struct LocalSearchResult {
    pub n: usize,
    pub forbidden: Vec<String>,
    pub best_triangles: usize,
    pub witness: Graph64,
    pub rounds: u64,
}

/// Greedy-plus-restarts lower bound for the maximum triangle count among
/// `forbidden`-free graphs on `n` vertices. `budget` counts perturbation
/// rounds; the same seed always reproduces the same result.
pub fn local_search_lower_bound(
    n: usize,
    forbidden: &[Pattern],
    budget: u64,
    seed: u64,
) -> Result<LocalSearchResult> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidArgument(format!(
            "local search handles 1 to 64 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = seed_graph(n, forbidden);
    greedy_fill(&mut best, forbidden);
    let mut best_t = best.triangle_count();
    let mut rounds = 0;
    let mut work = best.clone();
    while rounds < budget {
        rounds += 1;
        let edges = work.edges();
        if edges.is_empty() {
            break;
        }
        let removals = 1 + rng.gen_range(0..3.min(edges.len()));
        let mut g = work.clone();
        for _ in 0..removals {
            let es = g.edges();
            let (u, v) = es[rng.gen_range(0..es.len())];
            g = g.without_edge(u, v);
        }
        greedy_fill(&mut g, forbidden);
        let t = g.triangle_count();
        if t > best_t {
            best_t = t;
            best = g.clone();
        }
        // walk from the perturbed graph even on ties, to keep moving
        if t >= work.triangle_count() {
            work = g;
        }
    }
    debug_assert!(pattern::is_free(&best, forbidden));
    Ok(LocalSearchResult {
        n,
        forbidden: sorted_names(forbidden),
        best_triangles: best_t,
        witness: best,
        rounds,
    })
}

/// A pattern-free graph sampled by adding uniformly random admissible edges
/// until a random stopping point. Used to produce varied test inputs rather
/// than extremal ones.
pub fn random_free_graph(n: usize, forbidden: &[Pattern], seed: u64) -> Result<Graph64> {
    if n == 0 || n > 64 {
        return Err(Error::InvalidArgument(format!(
            "random sampling handles 1 to 64 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph64::empty(n);
    let mut candidates: Vec<(usize, usize)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            candidates.push((u, v));
        }
    }
    // shuffle by index draws; stop early with probability growing as the
    // graph fills
    let total = candidates.len();
    let mut placed = 0usize;
    while !candidates.is_empty() {
        let i = rng.gen_range(0..candidates.len());
        let (u, v) = candidates.swap_remove(i);
        let next = g.with_edge(u, v);
        if pattern::is_free_with_edge(&next, forbidden, (u, v)) {
            g = next;
            placed += 1;
        }
        if placed > 2 && rng.gen_range(0..total) < placed / 2 {
            break;
        }
    }
    debug_assert!(pattern::is_free(&g, forbidden));
    Ok(g)
}

pub(crate) fn sorted_names(forbidden: &[Pattern]) -> Vec<String> {
    let mut names: Vec<String> = forbidden.iter().map(|p| p.name()).collect();
    names.sort();
    names.dedup();
    names
}

/// Best admissible starting point: empty, the matched doubled-bipartite
/// construction, or a bipartite-plus-blocks construction, whichever has the
/// most triangles while avoiding every forbidden pattern.
fn seed_graph(n: usize, forbidden: &[Pattern]) -> Graph64 {
    let mut best = Graph64::empty(n);
    let mut best_t = 0;
    let mut consider = |g: Graph64| {
        if pattern::is_free(&g, forbidden) {
            let t = g.triangle_count();
            if t > best_t {
                best_t = t;
                best = g;
            }
        }
    };
    if let Ok(h) = constructions::build_hn(n) {
        consider(h);
    }
    for k in 3..=9 {
        if let Ok(f) = constructions::build_fnk(n, k) {
            consider(f);
        }
    }
    best
}

/// Repeatedly add the admissible edge creating the most triangles (ties to
/// the smallest edge) until no edge can be added.
fn greedy_fill<const W: usize>(g: &mut Graph<W>, forbidden: &[Pattern]) {
    loop {
        let mut pick: Option<(usize, (usize, usize))> = None;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) {
                    continue;
                }
                let gain = g.codegree(u, v);
                if let Some((best_gain, _)) = pick {
                    if gain <= best_gain {
                        continue;
                    }
                }
                let next = g.with_edge(u, v);
                if pattern::is_free_with_edge(&next, forbidden, (u, v)) {
                    pick = Some((gain, (u, v)));
                }
            }
        }
        match pick {
            Some((_, (u, v))) => *g = g.with_edge(u, v),
            None => break,
        }
    }
}
