//! Compact graphs on at most 11 vertices with a canonical labeling key.
//!
//! The key of a labeled graph is its upper-triangle adjacency bit string
//! read column by column: pairs (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
//! with the first pair in the most significant position. The canonical key
//! is the maximum of that value over all vertex orderings. Reading columns
//! means the pairs among the first k labels form a prefix of the string, so
//! the search over orderings can compare its partial prefix against the best
//! complete key found so far and prune whole branches.

use crate::graph::{Graph, Graph64};

/// Hard cap for the compact representation: C(11,2) = 55 key bits fit a u64
/// and each adjacency row fits a u16.
pub const MAX_SMALL_N: usize = 11;

/// A graph on at most [`MAX_SMALL_N`] vertices, one u16 adjacency mask per
/// vertex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SmallGraph {
    n: u8,
    adj: [u16; MAX_SMALL_N],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_SMALL_N, "at most {MAX_SMALL_N} vertices");
        SmallGraph { n: n as u8, adj: [0; MAX_SMALL_N] }
    }

    pub fn from_graph<const W: usize>(g: &Graph<W>) -> Self {
        let mut s = Self::empty(g.n());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        s
    }

    pub fn to_graph(&self) -> Graph64 {
        Graph64::from_edges(self.n(), self.edges())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj[..self.n()].iter().map(|m| m.count_ones()).sum();
        (total / 2) as usize
    }

    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    let common = self.adj[u] & self.adj[v];
                    t += (common >> (v + 1)).count_ones() as usize;
                }
            }
        }
        t
    }

    /// The graph on n+1 vertices obtained by appending a vertex whose
    /// neighborhood among the old vertices is `mask`.
    pub fn with_vertex(&self, mask: u16) -> Self {
        let n = self.n();
        assert!(n < MAX_SMALL_N);
        debug_assert_eq!(mask >> n, 0, "mask may only use existing vertices");
        let mut s = *self;
        s.n += 1;
        s.adj[n] = mask;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            s.adj[u] |= 1 << n;
            m &= m - 1;
        }
        s
    }

    /// Edges and triangles gained by [`Self::with_vertex`], without building
    /// the extension.
    pub fn extension_gain(&self, mask: u16) -> (usize, usize) {
        let de = mask.count_ones() as usize;
        let mut dt = 0;
        let mut m = mask;
        while m != 0 {
            let u = m.trailing_zeros() as usize;
            m &= m - 1;
            dt += (self.adj[u] & m).count_ones() as usize;
        }
        (de, dt)
    }

    fn key_bits(&self) -> usize {
        self.n().saturating_sub(1) * self.n() / 2
    }

    /// The key of the graph as labeled, no canonicalization.
    pub fn labeled_key(&self) -> u64 {
        let mut key = 0u64;
        for v in 1..self.n() {
            for u in 0..v {
                key = key << 1 | self.has_edge(u, v) as u64;
            }
        }
        key
    }

    /// Rebuild a graph from a key produced by [`Self::labeled_key`] or
    /// [`Self::canonical_key`].
    pub fn from_key(n: usize, key: u64) -> Self {
        let mut s = Self::empty(n);
        let t = s.key_bits();
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if key >> (t - 1 - idx) & 1 == 1 {
                    s.add_edge(u, v);
                }
                idx += 1;
            }
        }
        s
    }

    fn key_under(&self, perm: &[usize]) -> u64 {
        let mut key = 0u64;
        for k in 1..perm.len() {
            key = key << k | self.column_bits(&perm[..k], perm[k]);
        }
        key
    }

    /// Bits for the pairs (perm[0], v), ..., (perm[k-1], v), first pair in
    /// the most significant position.
    fn column_bits(&self, placed: &[usize], v: usize) -> u64 {
        let mut b = 0u64;
        for &u in placed {
            b = b << 1 | self.has_edge(u, v) as u64;
        }
        b
    }

    /// The canonical key: the maximum labeled key over all vertex orderings.
    /// Equal for isomorphic graphs, distinct otherwise.
    pub fn canonical_key(&self) -> u64 {
        let n = self.n();
        if n < 2 {
            return 0;
        }
        let t = self.key_bits();
        // high-degree-first is a good ordering heuristic; seeding best with
        // it makes the prefix pruning bite immediately
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let mut best = self.key_under(&order);
        let mut perm = [0usize; MAX_SMALL_N];
        self.search(&order, &mut perm, 0, 0, 0, 0, t, &mut best);
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        order: &[usize],
        perm: &mut [usize; MAX_SMALL_N],
        depth: usize,
        used: u16,
        cur: u64,
        cur_len: usize,
        t: usize,
        best: &mut u64,
    ) {
        if depth == self.n() {
            if cur > *best {
                *best = cur;
            }
            return;
        }
        for &v in order {
            if used >> v & 1 == 1 {
                continue;
            }
            let nb = cur << depth | self.column_bits(&perm[..depth], v);
            let len = cur_len + depth;
            if len < t && nb < *best >> (t - len) {
                continue;
            }
            perm[depth] = v;
            self.search(order, perm, depth + 1, used | 1 << v, nb, len, t, best);
        }
    }
}
