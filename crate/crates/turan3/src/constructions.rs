//! The two extremal lower-bound constructions.
//!
//! Both start from the complete bipartite graph on sides A = 0..n/2 and
//! B = n/2..n and add edges inside the sides. Every added edge inside a side
//! closes a triangle with each vertex of the opposite side, and since the
//! added edges form bipartite (hence triangle-free) graphs themselves, the
//! triangle counts have exact closed forms.

use crate::error::{Error, Result};
use crate::graph::Graph64;

/// Largest supported construction size (the 64-bit adjacency row limit).
pub const MAX_CONSTRUCTION_N: usize = 64;

/// Doubled bipartite construction: perfect matchings of size n/4 inside both
/// sides. Matched pairs are consecutive: (0,1), (2,3), ... on A and likewise
/// on B. Requires 4 | n. It has n^2/4 + n/2 edges and n^2/4 triangles, and
/// stays free of the suspended 4-cycle and 6-cycle.
pub fn build_hn(n: usize) -> Result<Graph64> {
    if n == 0 || n % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "the matched doubling construction needs n divisible by 4, got {n}"
        )));
    }
    if n > MAX_CONSTRUCTION_N {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the supported maximum {MAX_CONSTRUCTION_N}"
        )));
    }
    let half = n / 2;
    let mut edges = Vec::with_capacity(hn_edges(n));
    for a in 0..half {
        for b in half..n {
            edges.push((a, b));
        }
    }
    for i in (0..half).step_by(2) {
        edges.push((i, i + 1));
        edges.push((half + i, half + i + 1));
    }
    let g = Graph64::from_edges(n, edges);
    debug_assert_eq!(g.edge_count(), hn_edges(n));
    Ok(g)
}

/// Edge count of the matched doubling construction.
pub fn hn_edges(n: usize) -> usize {
    n * n / 4 + n / 2
}

/// Triangle count of the matched doubling construction.
pub fn hn_triangles(n: usize) -> usize {
    n * n / 4
}

/// Block parameter of the path-suspension-free construction: the inner
/// bicliques are K_{m,m} with m = floor((k-1)/2).
pub fn fnk_block_size(k: usize) -> usize {
    (k - 1) / 2
}

/// Path-suspension-free construction: side A carries vertex-disjoint copies
/// of K_{m,m} with m = floor((k-1)/2) on consecutive blocks of 2m vertices
/// (each block's first m vertices joined to its last m); side B stays
/// internally empty. Requires 4m | n. Every neighborhood then misses a path
/// with k edges, so the suspension of that path never occurs. It has
/// n^2/4 + m*n/4 edges and m*n^2/8 triangles.
pub fn build_fnk(n: usize, k: usize) -> Result<Graph64> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "the blocked construction needs a path length of at least 3, got {k}"
        )));
    }
    let m = fnk_block_size(k);
    if n == 0 || n % (4 * m) != 0 {
        return Err(Error::InvalidArgument(format!(
            "the blocked construction for path length {k} needs n divisible by {}, got {n}",
            4 * m
        )));
    }
    if n > MAX_CONSTRUCTION_N {
        return Err(Error::InvalidArgument(format!(
            "n = {n} exceeds the supported maximum {MAX_CONSTRUCTION_N}"
        )));
    }
    let half = n / 2;
    let mut edges = Vec::with_capacity(fnk_edges(n, k));
    for a in 0..half {
        for b in half..n {
            edges.push((a, b));
        }
    }
    for block in (0..half).step_by(2 * m) {
        for i in 0..m {
            for j in 0..m {
                edges.push((block + i, block + m + j));
            }
        }
    }
    let g = Graph64::from_edges(n, edges);
    debug_assert_eq!(g.edge_count(), fnk_edges(n, k));
    Ok(g)
}

/// Edge count of the blocked construction.
pub fn fnk_edges(n: usize, k: usize) -> usize {
    n * n / 4 + fnk_block_size(k) * n / 4
}

/// Triangle count of the blocked construction.
pub fn fnk_triangles(n: usize, k: usize) -> usize {
    fnk_block_size(k) * n * n / 8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::{contains, is_free, Pattern};

    #[test]
    fn matched_doubling_counts() {
        for n in [4, 8, 12, 16] {
            let g = build_hn(n).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.edge_count(), hn_edges(n));
            assert_eq!(g.triangle_count(), hn_triangles(n));
        }
        assert_eq!(build_hn(8).unwrap().triangle_count(), 16);
        assert_eq!(build_hn(12).unwrap().triangle_count(), 36);
        assert!(build_hn(10).is_err());
        assert!(build_hn(0).is_err());
        assert!(build_hn(68).is_err());
    }

    #[test]
    fn blocked_construction_counts() {
        assert_eq!(build_fnk(12, 4).unwrap().triangle_count(), 18);
        assert_eq!(build_fnk(8, 5).unwrap().triangle_count(), 16);
        assert_eq!(build_fnk(24, 7).unwrap().triangle_count(), 216);
        for (n, k) in [(4, 3), (8, 3), (8, 4), (8, 5), (16, 5), (24, 6), (16, 9)] {
            let g = build_fnk(n, k).unwrap();
            assert_eq!(g.edge_count(), fnk_edges(n, k), "edges at n={n} k={k}");
            assert_eq!(g.triangle_count(), fnk_triangles(n, k), "triangles at n={n} k={k}");
        }
        assert!(build_fnk(12, 5).is_err());
        assert!(build_fnk(8, 2).is_err());
        assert!(build_fnk(66, 3).is_err());
    }

    #[test]
    fn matched_doubling_freeness() {
        let g = build_hn(8).unwrap();
        let c4hat = Pattern::parse("suspension:cycle:4").unwrap();
        let c6hat = Pattern::parse("suspension:cycle:6").unwrap();
        assert!(is_free(&g, &[Pattern::K122, c4hat, c6hat]));
        assert!(contains(&g, &Pattern::Complete(4)));
        assert!(contains(&g, &Pattern::parse("suspension:path:4").unwrap()));
    }

    #[test]
    fn blocked_construction_freeness() {
        let g = build_fnk(8, 5).unwrap();
        assert!(is_free(&g, &[Pattern::parse("suspension:path:5").unwrap()]));
        assert!(contains(&g, &Pattern::parse("suspension:path:4").unwrap()));
        let g = build_fnk(8, 3).unwrap();
        assert!(is_free(&g, &[Pattern::parse("suspension:path:3").unwrap()]));
    }
}
