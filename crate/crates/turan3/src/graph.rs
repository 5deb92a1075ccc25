//! Immutable simple undirected graphs with bitset adjacency.
//!
//! Graphs are values: every mutator returns a fresh graph, so pipelines can
//! keep before/after snapshots without defensive copying. The default width
//! (one 64-bit word per adjacency row) covers every hot path; `Graph<4>`
//! raises the cap to 256 vertices for large formula checks.

use crate::bitset::Bits;
use crate::error::{Error, Result};

/// A triangle as a sorted vertex triple.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triangle(pub usize, pub usize, pub usize);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        debug_assert!(v[0] < v[1] && v[1] < v[2], "triangle vertices must be distinct");
        Triangle(v[0], v[1], v[2])
    }

    pub fn vertices(&self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }

    pub fn edges(&self) -> [(usize, usize); 3] {
        [(self.0, self.1), (self.0, self.2), (self.1, self.2)]
    }

    /// True if the two triangles have a common edge.
    pub fn shares_edge(&self, other: &Triangle) -> bool {
        let a = self.edges();
        other.edges().iter().any(|e| a.contains(e))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph<const W: usize = 1> {
    n: usize,
    adj: Vec<Bits<W>>,
    edge_count: usize,
}

/// The common single-word instantiation (up to 64 vertices).
pub type Graph64 = Graph<1>;
/// Wide instantiation for cold large-n paths (up to 256 vertices).
pub type BigGraph = Graph<4>;

impl<const W: usize> Graph<W> {
    pub fn empty(n: usize) -> Self {
        assert!(n <= Bits::<W>::CAPACITY, "vertex count {n} over cap {}", Bits::<W>::CAPACITY);
        Graph { n, adj: vec![Bits::empty(); n], edge_count: 0 }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge_mut(u, v);
        }
        debug_assert!(g.invariants_ok());
        g
    }

    fn add_edge_mut(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v}) for n={}", self.n);
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    fn remove_edge_mut(&mut self, u: usize, v: usize) {
        if self.adj[u].contains(v) {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
            self.edge_count -= 1;
        }
    }

    /// Adjacency symmetry, no loops, and the cached edge count all agree.
    pub fn invariants_ok(&self) -> bool {
        let mut deg_sum = 0;
        for u in 0..self.n {
            if self.adj[u].contains(u) {
                return false;
            }
            deg_sum += self.adj[u].count();
            for v in self.adj[u].iter() {
                if v >= self.n || !self.adj[v].contains(u) {
                    return false;
                }
            }
        }
        deg_sum == 2 * self.edge_count
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Bits<W> {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Number of common neighbors of u and v (the edge's triangle count when uv is an edge).
    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.adj[u].and(&self.adj[v]).count()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// t(G), the number of triangles.
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    // count w > v adjacent to both, so each triangle lands on its least edge
                    let common = self.adj[u].and(&self.adj[v]);
                    t += common.count() - common.count_below(v + 1);
                }
            }
        }
        t
    }

    /// All triangles, lexicographically sorted.
    pub fn triangles(&self) -> Vec<Triangle> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    let common = self.adj[u].and(&self.adj[v]);
                    for w in common.iter() {
                        if w > v {
                            out.push(Triangle(u, v, w));
                        }
                    }
                }
            }
        }
        debug_assert!(out.windows(2).all(|p| p[0] < p[1]));
        out
    }

    /// Triangles through the given edge, as the set of common neighbors.
    pub fn triangle_apexes(&self, u: usize, v: usize) -> Bits<W> {
        self.adj[u].and(&self.adj[v])
    }

    /// Number of edges inside the vertex set x.
    pub fn induced_edge_count(&self, x: &Bits<W>) -> usize {
        let mut twice = 0;
        for v in x.iter() {
            twice += self.adj[v].and(x).count();
        }
        twice / 2
    }

    /// Number of ordered simple paths with k edges (each unordered path counts twice).
    pub fn path_count(&self, k: usize) -> u64 {
        assert!(k >= 1, "path length must be positive");
        let mut total = 0u64;
        for s in 0..self.n {
            total += self.count_paths_from(s, Bits::singleton(s), k);
        }
        total
    }

    fn count_paths_from(&self, last: usize, used: Bits<W>, remaining: usize) -> u64 {
        let next = self.adj[last].minus(&used);
        if remaining == 1 {
            return next.count() as u64;
        }
        let mut total = 0;
        for v in next.iter() {
            total += self.count_paths_from(v, used.or(&Bits::singleton(v)), remaining - 1);
        }
        total
    }

    /// Fresh graph with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.add_edge_mut(u, v);
        g
    }

    /// Fresh graph with the listed edges removed. Every listed edge must be present;
    /// duplicates in the list are ignored.
    pub fn delete_edges(&self, edges: &[(usize, usize)]) -> Self {
        let mut g = self.clone();
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            let key = (u.min(v), u.max(v));
            if seen.insert(key) {
                debug_assert!(g.has_edge(u, v), "deleting absent edge ({u},{v})");
                g.remove_edge_mut(u, v);
            }
        }
        debug_assert!(g.invariants_ok());
        g
    }

    /// Fresh graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        self.delete_edges(&[(u, v)])
    }

    /// Fresh graph on the same vertex set keeping only edges inside x.
    pub fn induced(&self, x: &Bits<W>) -> Self {
        let mut g = Self::empty(self.n);
        for u in x.iter() {
            for v in self.adj[u].and(x).iter() {
                if v > u {
                    g.add_edge_mut(u, v);
                }
            }
        }
        g
    }

    /// Vertices reachable from start (including it).
    pub fn component_of(&self, start: usize) -> Bits<W> {
        let mut seen = Bits::singleton(start);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for w in self.adj[v].minus(&seen).iter() {
                seen.insert(w);
                frontier.push(w);
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_of(0).count() == self.n
    }

    /// Relabel vertices: vertex v of self becomes perm[v] of the result.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_mut(perm[u], perm[v]);
        }
        g
    }

    /// Copy into a graph with a different bitset width (e.g. to cross the 64-vertex cap).
    pub fn resize<const W2: usize>(&self) -> Result<Graph<W2>> {
        if self.n > Bits::<W2>::CAPACITY {
            return Err(Error::InvalidArgument(format!(
                "graph on {} vertices exceeds target capacity {}",
                self.n,
                Bits::<W2>::CAPACITY
            )));
        }
        Ok(Graph::<W2>::from_edges(self.n, self.edges()))
    }
}

impl<const W: usize> std::fmt::Debug for Graph<W> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, e={}, edges={:?})", self.n, self.edge_count, self.edges())
    }
}

/// K_r on r vertices.
pub fn complete(r: usize) -> Graph64 {
    let mut edges = Vec::new();
    for u in 0..r {
        for v in u + 1..r {
            edges.push((u, v));
        }
    }
    Graph64::from_edges(r, edges)
}

/// Path with k edges on vertices 0..=k in order.
pub fn path(k: usize) -> Graph64 {
    Graph64::from_edges(k + 1, (0..k).map(|i| (i, i + 1)))
}

/// Cycle with k edges on vertices 0..k in order.
pub fn cycle(k: usize) -> Graph64 {
    assert!(k >= 3);
    Graph64::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// Complete bipartite K_{a,b}; part A is 0..a, part B is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph64 {
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            edges.push((u, v));
        }
    }
    Graph64::from_edges(a + b, edges)
}
