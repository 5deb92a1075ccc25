//! Structural analysis of how triangles sit inside a graph: triangle blocks,
//! book recognition, light/heavy edge classification, BFS levels with edge
//! density checks, a shared-edge counting identity, edge-disjoint triangle
//! packing, independence-number lower bounds, and chorded long cycle search.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};

// ---------------------------------------------------------------------------
// Triangle blocks and books
// ---------------------------------------------------------------------------

/// Partition of the edge set induced by chaining triangles: two triangles
/// belong to the same block when they are connected through shared edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge sets of the blocks, each sorted; blocks ordered by smallest edge.
    pub blocks: Vec<Vec<(usize, usize)>>,
    /// Edges lying in no triangle, sorted.
    pub uncovered: Vec<(usize, usize)>,
}

/// Group the triangles of `g` into blocks: the connected components of the
/// relation "shares an edge". Every edge in a triangle lands in exactly one
/// block; the remaining edges are reported as uncovered.
pub fn triangle_blocks<const W: usize>(g: &Graph<W>) -> BlockDecomposition {
    let tris = g.triangles();
    let mut parent: Vec<usize> = (0..tris.len()).collect();
    fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut by_edge: std::collections::HashMap<(usize, usize), usize> =
        std::collections::HashMap::new();
    for (idx, t) in tris.iter().enumerate() {
        for e in t.edges() {
            match by_edge.entry(e) {
                std::collections::hash_map::Entry::Occupied(prev) => {
                    let a = root(&mut parent, *prev.get());
                    let b = root(&mut parent, idx);
                    if a != b {
                        parent[a] = b;
                    }
                }
                std::collections::hash_map::Entry::Vacant(slot) => {
                    slot.insert(idx);
                }
            }
        }
    }
    let mut edge_sets: std::collections::HashMap<usize, std::collections::BTreeSet<(usize, usize)>> =
        std::collections::HashMap::new();
    for (idx, t) in tris.iter().enumerate() {
        let r = root(&mut parent, idx);
        edge_sets.entry(r).or_default().extend(t.edges());
    }
    let mut blocks: Vec<Vec<(usize, usize)>> = edge_sets
        .into_values()
        .map(|s| s.into_iter().collect::<Vec<_>>())
        .collect();
    blocks.sort();
    let covered: std::collections::BTreeSet<(usize, usize)> =
        blocks.iter().flatten().copied().collect();
    let uncovered: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|e| !covered.contains(e)).collect();
    if cfg!(debug_assertions) {
        let total: usize = blocks.iter().map(Vec::len).sum::<usize>() + uncovered.len();
        debug_assert_eq!(total, g.edge_count(), "blocks must partition the edge set");
    }
    BlockDecomposition { blocks, uncovered }
}

/// A block recognized as a book: one spine edge shared by every triangle,
/// plus one page vertex per triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Book {
    pub spine: (usize, usize),
    pub pages: Vec<usize>,
}

/// Decide whether one block (given by its edge set) is a book. The block's
/// triangles must all share a common edge, and the block must consist of
/// exactly that spine plus two edges per page, so `2s + 1` edges in total.
pub fn is_book<const W: usize>(g: &Graph<W>, block: &[(usize, usize)]) -> Option<Book> {
    let edge_set: std::collections::BTreeSet<(usize, usize)> = block.iter().copied().collect();
    let tris: Vec<Triangle> = g
        .triangles()
        .into_iter()
        .filter(|t| t.edges().iter().all(|e| edge_set.contains(e)))
        .collect();
    if tris.is_empty() {
        return None;
    }
    let mut common: Vec<(usize, usize)> = tris[0].edges().to_vec();
    for t in &tris[1..] {
        let es = t.edges();
        common.retain(|e| es.contains(e));
        if common.is_empty() {
            return None;
        }
    }
    let spine = common[0];
    let mut pages: Vec<usize> = tris
        .iter()
        .map(|t| {
            *t.vertices()
                .iter()
                .find(|&&v| v != spine.0 && v != spine.1)
                .expect("triangle has a vertex off its spine")
        })
        .collect();
    pages.sort_unstable();
    pages.dedup();
    if block.len() != 2 * pages.len() + 1 {
        return None;
    }
    Some(Book { spine, pages })
}

// ---------------------------------------------------------------------------
// Edge classification
// ---------------------------------------------------------------------------

/// Which codegree counts as light.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LightMode {
    /// Light means the edge lies in exactly one triangle.
    UniqueTriangle,
    /// Light means the edge's endpoints have exactly two common neighbors.
    CodegreeTwo,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    pub edge: (usize, usize),
    /// Common neighbors of the endpoints; equals the number of triangles
    /// through the edge.
    pub codegree: usize,
    pub light: bool,
}

/// Classify every edge of `g` under the chosen mode, in lexicographic order.
pub fn classify_edges<const W: usize>(g: &Graph<W>, mode: LightMode) -> Vec<EdgeClass> {
    g.edges()
        .into_iter()
        .map(|(u, v)| {
            let codegree = g.codegree(u, v);
            let light = match mode {
                LightMode::UniqueTriangle => codegree == 1,
                LightMode::CodegreeTwo => codegree == 2,
            };
            EdgeClass { edge: (u, v), codegree, light }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// BFS levels
// ---------------------------------------------------------------------------

/// Distance layers around a root, with edge counts inside and between
/// consecutive layers. The layers partition the root's component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    pub root: usize,
    /// `levels[i]` holds the vertices at distance exactly i, sorted.
    pub levels: Vec<Vec<usize>>,
    /// `within[i]` = number of edges with both ends in level i.
    pub within: Vec<usize>,
    /// `between[i]` = number of edges from level i to level i+1.
    pub between: Vec<usize>,
}

pub fn bfs_levels<const W: usize>(g: &Graph<W>, root: usize) -> LevelDecomposition {
    assert!(root < g.n(), "root out of range");
    let mut level_masks: Vec<Bits<W>> = Vec::new();
    let mut seen = Bits::<W>::singleton(root);
    let mut frontier = Bits::<W>::singleton(root);
    while !frontier.is_empty() {
        level_masks.push(frontier);
        let mut next = Bits::<W>::empty();
        for v in frontier.iter() {
            next = next.or(&g.neighbors(v));
        }
        next = next.minus(&seen);
        seen = seen.or(&next);
        frontier = next;
    }
    let levels: Vec<Vec<usize>> = level_masks.iter().map(|m| m.iter().collect()).collect();
    let within: Vec<usize> = level_masks.iter().map(|m| g.induced_edge_count(m)).collect();
    let between: Vec<usize> = level_masks
        .windows(2)
        .map(|pair| {
            let mut count = 0;
            for v in pair[0].iter() {
                count += g.neighbors(v).and(&pair[1]).count();
            }
            count
        })
        .collect();
    LevelDecomposition { root, levels, within, between }
}

/// One row of the level density report: the two inequalities at level i.
#[derive(Clone, Debug, serde::Serialize)]
pub struct LevelRow {
    pub level: usize,
    pub size: usize,
    pub within_edges: usize,
    pub within_bound: usize,
    pub between_edges: usize,
    pub between_bound: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct LevelReport {
    pub root: usize,
    pub k: usize,
    pub rows: Vec<LevelRow>,
    pub all_hold: bool,
}

/// For a graph free of the suspended k-edge path, levels 1 through k-1 obey
/// e(L_i) <= (k-1)|L_i| and e(L_i, L_{i+1}) <= (k-1)(|L_i| + |L_{i+1}|).
/// This check only reports; it never concludes anything from a failure.
pub fn check_level_inequalities<const W: usize>(
    g: &Graph<W>,
    root: usize,
    k: usize,
) -> LevelReport {
    let dec = bfs_levels(g, root);
    let mut rows = Vec::new();
    for i in 1..k {
        if i >= dec.levels.len() {
            break;
        }
        let size = dec.levels[i].len();
        let next_size = dec.levels.get(i + 1).map_or(0, Vec::len);
        let within_edges = dec.within[i];
        let between_edges = dec.between.get(i).copied().unwrap_or(0);
        let within_bound = (k - 1) * size;
        let between_bound = (k - 1) * (size + next_size);
        let holds = within_edges <= within_bound && between_edges <= between_bound;
        rows.push(LevelRow {
            level: i,
            size,
            within_edges,
            within_bound,
            between_edges,
            between_bound,
            holds,
        });
    }
    let all_hold = rows.iter().all(|r| r.holds);
    LevelReport { root, k, rows, all_hold }
}

// ---------------------------------------------------------------------------
// Shared-edge counting identity
// ---------------------------------------------------------------------------

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut out: u64 = 1;
    for i in 0..k {
        out = out * (n - i) as u64 / (i + 1) as u64;
    }
    out
}

/// Left side: sum over edges of C(codegree, a).
pub fn shared_edge_count_by_edges<const W: usize>(g: &Graph<W>, a: usize) -> u64 {
    g.edges().into_iter().map(|(u, v)| binomial(g.codegree(u, v), a)).sum()
}

/// Right side: sum over all a-subsets S of the vertex set of the number of
/// edges inside the common neighborhood of S.
pub fn shared_edge_count_by_subsets<const W: usize>(g: &Graph<W>, a: usize) -> u64 {
    let mut total: u64 = 0;
    let mut subset: Vec<usize> = Vec::with_capacity(a);
    fn rec<const W: usize>(
        g: &Graph<W>,
        a: usize,
        start: usize,
        subset: &mut Vec<usize>,
        total: &mut u64,
    ) {
        if subset.len() == a {
            let mut common = Bits::<W>::all_below(g.n());
            for &s in subset.iter() {
                common = common.and(&g.neighbors(s));
            }
            *total += g.induced_edge_count(&common) as u64;
            return;
        }
        for v in start..g.n() {
            subset.push(v);
            rec(g, a, v + 1, subset, total);
            subset.pop();
        }
    }
    rec(g, a, 0, &mut subset, &mut total);
    total
}

/// Both sides of the identity: pairs (edge, a-subset of its common
/// neighborhood) counted edge-first and subset-first. The two counts are
/// equal on every graph; the pair is returned for reporting.
pub fn shared_edge_identity<const W: usize>(g: &Graph<W>, a: usize) -> (u64, u64) {
    let by_edges = shared_edge_count_by_edges(g, a);
    let by_subsets = shared_edge_count_by_subsets(g, a);
    debug_assert_eq!(by_edges, by_subsets, "shared-edge identity must hold");
    (by_edges, by_subsets)
}

// ---------------------------------------------------------------------------
// Edge-disjoint triangle packing
// ---------------------------------------------------------------------------

/// Result of a packing computation: a set of pairwise edge-disjoint
/// triangles. `optimal` records whether the exact search completed; a greedy
/// fallback reports `optimal == false`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingResult {
    pub size: usize,
    pub triangles: Vec<Triangle>,
    pub optimal: bool,
}

/// Default cap on the number of triangles the exact packing search accepts.
pub const DEFAULT_EXACT_PACKING_LIMIT: usize = 10_000;

/// Adjacency of the conflict graph: triangle i conflicts with j when they
/// share an edge. A maximum independent set of the conflict graph is exactly
/// a maximum edge-disjoint packing.
pub fn triangle_conflict_adjacency(tris: &[Triangle]) -> Vec<Vec<usize>> {
    let mut by_edge: std::collections::HashMap<(usize, usize), Vec<usize>> =
        std::collections::HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for e in t.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut adj = vec![Vec::new(); tris.len()];
    for group in by_edge.values() {
        for (x, &i) in group.iter().enumerate() {
            for &j in &group[x + 1..] {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for row in &mut adj {
        row.sort_unstable();
        row.dedup();
    }
    adj
}

/// Greedy packing: scan triangles in sorted order, keeping each one that is
/// edge-disjoint from those already kept.
pub fn greedy_packing<const W: usize>(g: &Graph<W>) -> Vec<Triangle> {
    let mut used: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut out = Vec::new();
    for t in g.triangles() {
        if t.edges().iter().all(|e| !used.contains(e)) {
            used.extend(t.edges());
            out.push(t);
        }
    }
    out
}

struct MisSearch<'a> {
    adj: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl MisSearch<'_> {
    fn run(&mut self, avail: &mut Vec<bool>, chosen: &mut Vec<usize>) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let live: Vec<usize> = (0..avail.len()).filter(|&i| avail[i]).collect();
        if chosen.len() + live.len() <= self.best.len() {
            return true;
        }
        if live.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen.clone();
            }
            return true;
        }
        // pick the live vertex with the most live conflicts
        let mut pivot = live[0];
        let mut pivot_deg = 0;
        for &i in &live {
            let d = self.adj[i].iter().filter(|&&j| avail[j]).count();
            if d > pivot_deg {
                pivot = i;
                pivot_deg = d;
            }
        }
        if pivot_deg <= 1 {
            // every component is a matching of conflicts: count it directly
            let mut take = Vec::new();
            let mut local = avail.clone();
            for &i in &live {
                if local[i] {
                    take.push(i);
                    local[i] = false;
                    for &j in &self.adj[i] {
                        local[j] = false;
                    }
                }
            }
            if chosen.len() + take.len() > self.best.len() {
                let mut full = chosen.clone();
                full.extend(take);
                self.best = full;
            }
            return true;
        }
        // branch: include pivot
        let mut removed = vec![pivot];
        avail[pivot] = false;
        for &j in &self.adj[pivot] {
            if avail[j] {
                avail[j] = false;
                removed.push(j);
            }
        }
        chosen.push(pivot);
        let ok_a = self.run(avail, chosen);
        chosen.pop();
        for &j in &removed {
            avail[j] = true;
        }
        // branch: exclude pivot
        avail[pivot] = false;
        let ok_b = self.run(avail, chosen);
        avail[pivot] = true;
        ok_a && ok_b
    }
}

/// Maximum edge-disjoint triangle packing. Runs the exact branch-and-bound
/// when the triangle count is within `exact_limit` and the search finishes
/// inside its node budget; otherwise returns the greedy packing flagged as
/// non-optimal. The exact optimum size is deterministic.
pub fn max_edge_disjoint_triangles<const W: usize>(
    g: &Graph<W>,
    exact_limit: usize,
) -> PackingResult {
    let tris = g.triangles();
    let greedy: Vec<usize> = {
        let mut used: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
        let mut idx = Vec::new();
        for (i, t) in tris.iter().enumerate() {
            if t.edges().iter().all(|e| !used.contains(e)) {
                used.extend(t.edges());
                idx.push(i);
            }
        }
        idx
    };
    if tris.len() > exact_limit {
        let triangles: Vec<Triangle> = greedy.iter().map(|&i| tris[i]).collect();
        return PackingResult { size: triangles.len(), triangles, optimal: false };
    }
    let adj = triangle_conflict_adjacency(&tris);
    let mut search = MisSearch { adj: &adj, best: greedy, nodes: 0, budget: 50_000_000 };
    let mut avail = vec![true; tris.len()];
    let mut chosen = Vec::new();
    let complete = search.run(&mut avail, &mut chosen);
    let mut picked = search.best;
    picked.sort_unstable();
    let triangles: Vec<Triangle> = picked.iter().map(|&i| tris[i]).collect();
    debug_assert!(pairwise_edge_disjoint(&triangles));
    PackingResult { size: triangles.len(), triangles, optimal: complete }
}

pub fn pairwise_edge_disjoint(tris: &[Triangle]) -> bool {
    let mut seen = std::collections::HashSet::new();
    for t in tris {
        for e in t.edges() {
            if !seen.insert(e) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Independence lower bounds
// ---------------------------------------------------------------------------

/// Lower bound for independent sets in an r-uniform hypergraph on n vertices
/// with average degree d: ((r-1)/r) * n / d^(1/(r-1)). With d = 0 the whole
/// vertex set is independent, so the bound is n.
pub fn spencer_lower_bound(n: usize, r: usize, d: f64) -> Result<f64> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "hypergraph uniformity must be at least 2, got {r}"
        )));
    }
    if d < 0.0 {
        return Err(Error::InvalidArgument(format!("average degree must be nonnegative, got {d}")));
    }
    if d == 0.0 {
        return Ok(n as f64);
    }
    let r = r as f64;
    Ok(((r - 1.0) / r) * n as f64 / d.powf(1.0 / (r - 1.0)))
}

/// Greedy bound: any graph with maximum degree `max_degree` has an
/// independent set of at least n / (max_degree + 1) vertices.
pub fn greedy_independence_bound(n: usize, max_degree: usize) -> f64 {
    n as f64 / (max_degree + 1) as f64
}

// ---------------------------------------------------------------------------
// Chorded long cycles
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordedCycle {
    /// Cycle vertices in order; consecutive entries (and last-first) are
    /// adjacent.
    pub cycle: Vec<usize>,
    /// An edge between two non-consecutive cycle vertices.
    pub chord: (usize, usize),
}

/// Exhaustively search for a simple cycle with at least `k + 1` vertices
/// carrying a chord. Supported on up to 16 vertices; `node_budget` caps the
/// number of search-tree nodes.
///
/// For `k >= 3`, a witness is guaranteed whenever the minimum degree is at
/// least `k` (walk a longest path from its far end: all neighbors of the
/// endpoint lie on the path, the farthest one closes a long cycle, and a
/// third one chords it).
/// Average degree at least `k` is not enough: in a complete bipartite graph
/// with one side of two every cycle alternates sides, so a chord would need
/// two same-side vertices to be adjacent, and the search correctly returns
/// `None` there.
pub fn find_long_cycle_with_chord<const W: usize>(
    g: &Graph<W>,
    k: usize,
    node_budget: u64,
) -> Result<Option<ChordedCycle>> {
    if g.n() > 16 {
        return Err(Error::InvalidArgument(format!(
            "chorded cycle search supports at most 16 vertices, got {}",
            g.n()
        )));
    }
    let min_len = (k + 1).max(3);
    let mut nodes: u64 = 0;
    for start in g.vertices() {
        let mut walk = vec![start];
        let mut used = Bits::<W>::singleton(start);
        if let Some(found) =
            chord_dfs(g, start, &mut walk, &mut used, min_len, &mut nodes, node_budget)?
        {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn chord_dfs<const W: usize>(
    g: &Graph<W>,
    start: usize,
    walk: &mut Vec<usize>,
    used: &mut Bits<W>,
    min_len: usize,
    nodes: &mut u64,
    budget: u64,
) -> Result<Option<ChordedCycle>> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::BudgetExhausted(format!(
            "chorded cycle search exceeded {budget} nodes"
        )));
    }
    let last = *walk.last().unwrap();
    if walk.len() >= min_len && g.has_edge(last, start) {
        if let Some(chord) = find_chord(g, walk) {
            return Ok(Some(ChordedCycle { cycle: walk.clone(), chord }));
        }
    }
    // only extend with vertices above the start so each cycle is explored
    // from its smallest vertex
    for v in g.neighbors(last).minus(used).iter() {
        if v <= start {
            continue;
        }
        walk.push(v);
        used.insert(v);
        let found = chord_dfs(g, start, walk, used, min_len, nodes, budget)?;
        used.remove(v);
        walk.pop();
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn find_chord<const W: usize>(g: &Graph<W>, cycle: &[usize]) -> Option<(usize, usize)> {
    let len = cycle.len();
    for i in 0..len {
        for j in i + 1..len {
            let consecutive = j == i + 1 || (i == 0 && j == len - 1);
            if consecutive {
                continue;
            }
            if g.has_edge(cycle[i], cycle[j]) {
                let (a, b) = (cycle[i].min(cycle[j]), cycle[i].max(cycle[j]));
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, Graph64};
    use crate::pattern::Pattern;

    #[test]
    fn blocks_of_disjoint_triangles() {
        let g = Graph64::from_edges(7, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (5, 6)]);
        let dec = triangle_blocks(&g);
        assert_eq!(dec.blocks.len(), 2);
        assert_eq!(dec.blocks[0], vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(dec.blocks[1], vec![(3, 4), (3, 5), (4, 5)]);
        assert_eq!(dec.uncovered, vec![(5, 6)]);
    }

    #[test]
    fn blocks_partition_edges() {
        for g in [complete(5), Pattern::K222.realize(), Pattern::Q32.realize()] {
            let dec = triangle_blocks(&g);
            let mut all: Vec<(usize, usize)> =
                dec.blocks.iter().flatten().copied().chain(dec.uncovered.iter().copied()).collect();
            all.sort_unstable();
            assert_eq!(all, g.edges());
            for i in 0..dec.blocks.len() {
                for j in i + 1..dec.blocks.len() {
                    assert!(dec.blocks[i].iter().all(|e| !dec.blocks[j].contains(e)));
                }
            }
        }
    }

    #[test]
    fn book_recognition() {
        let b3 = Pattern::Book(3).realize();
        let dec = triangle_blocks(&b3);
        assert_eq!(dec.blocks.len(), 1);
        let book = is_book(&b3, &dec.blocks[0]).unwrap();
        assert_eq!(book.spine, (0, 1));
        assert_eq!(book.pages, vec![2, 3, 4]);
        assert_eq!(dec.blocks[0].len(), 2 * book.pages.len() + 1);

        let k4 = complete(4);
        let dec = triangle_blocks(&k4);
        assert_eq!(dec.blocks.len(), 1);
        assert!(is_book(&k4, &dec.blocks[0]).is_none());

        // a single triangle is the one-page book
        let t = complete(3);
        let dec = triangle_blocks(&t);
        let book = is_book(&t, &dec.blocks[0]).unwrap();
        assert_eq!(book.spine, (0, 1));
        assert_eq!(book.pages, vec![2]);
    }

    #[test]
    fn edge_classification_modes() {
        let b2 = Pattern::Book(2).realize();
        let unique = classify_edges(&b2, LightMode::UniqueTriangle);
        let spine: Vec<_> = unique.iter().filter(|c| !c.light).collect();
        assert_eq!(spine.len(), 1);
        assert_eq!(spine[0].edge, (0, 1));
        assert_eq!(spine[0].codegree, 2);
        let co2 = classify_edges(&b2, LightMode::CodegreeTwo);
        assert!(co2.iter().all(|c| c.light == (c.edge == (0, 1))));
    }

    #[test]
    fn bfs_level_structure() {
        let g = cycle(6);
        let dec = bfs_levels(&g, 0);
        assert_eq!(dec.levels, vec![vec![0], vec![1, 5], vec![2, 4], vec![3]]);
        assert_eq!(dec.within, vec![0, 0, 0, 0]);
        assert_eq!(dec.between, vec![2, 2, 2]);
        // levels partition the component
        let total: usize = dec.levels.iter().map(Vec::len).sum();
        assert_eq!(total, 6);

        let rep = check_level_inequalities(&g, 0, 3);
        assert!(rep.all_hold);
        assert_eq!(rep.rows.len(), 2);
    }

    #[test]
    fn shared_edge_identity_matches() {
        for g in [complete(5), Pattern::K222.realize(), cycle(7), complete_bipartite(3, 3)] {
            for a in 1..=3 {
                let (lhs, rhs) = shared_edge_identity(&g, a);
                assert_eq!(lhs, rhs, "identity at a={a}");
            }
        }
        // a = 1 specializes to three times the triangle count
        let g = complete(6);
        assert_eq!(shared_edge_count_by_edges(&g, 1), 3 * g.triangle_count() as u64);
    }

    #[test]
    fn packing_examples() {
        assert_eq!(max_edge_disjoint_triangles(&complete(4), 100).size, 1);
        let k5 = complete(5);
        let r = max_edge_disjoint_triangles(&k5, 100);
        assert_eq!(r.size, 2);
        assert!(r.optimal);
        assert!(pairwise_edge_disjoint(&r.triangles));
        let h8 = crate::constructions::build_hn(8).unwrap();
        assert_eq!(max_edge_disjoint_triangles(&h8, 100).size, 4);
    }

    #[test]
    fn packing_conflict_graph_of_k4_is_complete() {
        let adj = triangle_conflict_adjacency(&complete(4).triangles());
        assert_eq!(adj.len(), 4);
        assert!(adj.iter().all(|row| row.len() == 3));
    }

    #[test]
    fn packing_matches_brute_force_on_smalls() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..30 {
            let n = 6;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_ratio(3, 5) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph64::from_edges(n, edges);
            let tris = g.triangles();
            if tris.len() > 18 {
                continue;
            }
            let mut brute = 0usize;
            for mask in 0u32..(1 << tris.len()) {
                let chosen: Vec<Triangle> = (0..tris.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| tris[i])
                    .collect();
                if pairwise_edge_disjoint(&chosen) {
                    brute = brute.max(chosen.len());
                }
            }
            let exact = max_edge_disjoint_triangles(&g, 100);
            assert!(exact.optimal);
            assert_eq!(exact.size, brute, "graph {:?}", g.edges());
        }
    }

    #[test]
    fn independence_bound_values() {
        assert!((spencer_lower_bound(100, 2, 4.0).unwrap() - 12.5).abs() < 1e-9);
        assert!((spencer_lower_bound(81, 3, 9.0).unwrap() - 18.0).abs() < 1e-9);
        assert!((spencer_lower_bound(10, 3, 0.0).unwrap() - 10.0).abs() < 1e-9);
        assert!(spencer_lower_bound(10, 1, 1.0).is_err());
        assert!((greedy_independence_bound(12, 3) - 3.0).abs() < 1e-9);
    }

    #[test]
    fn chorded_cycle_in_k33() {
        let g = complete_bipartite(3, 3);
        let found = find_long_cycle_with_chord(&g, 3, 1_000_000).unwrap().unwrap();
        assert_eq!(found.cycle, vec![0, 3, 1, 4, 2, 5]);
        assert_eq!(found.chord, (0, 4));
        // validity: cycle edges plus chord are present, chord not on cycle
        let len = found.cycle.len();
        for i in 0..len {
            assert!(g.has_edge(found.cycle[i], found.cycle[(i + 1) % len]));
        }
        assert!(g.has_edge(found.chord.0, found.chord.1));
    }

    #[test]
    fn chordless_graphs_give_nothing() {
        assert!(find_long_cycle_with_chord(&cycle(8), 3, 1_000_000).unwrap().is_none());
        assert!(find_long_cycle_with_chord(&complete_bipartite(2, 2), 3, 1_000_000)
            .unwrap()
            .is_none());
        assert!(find_long_cycle_with_chord(&complete(8), 17, 1_000_000).is_err() == false);
        // oversized input is rejected
        let big = Graph64::from_edges(17, [(0, 1)]);
        assert!(find_long_cycle_with_chord(&big, 3, 1000).is_err());
    }
}
