//! Closed-form upper and lower bounds on the maximum triangle count of a
//! graph avoiding a forbidden list, for the families where such bounds are
//! known, plus the unconditional edge-triangle inequality.
//!
//! For a single forbidden suspended path on k + 1 vertices (k >= 3 path
//! vertices plus the apex), every neighborhood has no path on k vertices,
//! so its average degree is below k - 1 and each neighborhood spans fewer
//! than (k-1) deg(v) / 2 edges. Summing over vertices gives
//!
//!   12 t(G) <= (k-1) n (n+k-1),
//!
//! and sharper counting closes the gap further for k = 3 and k = 5. The
//! matching lower bound comes from the disjoint block construction, which
//! exists whenever its block size divides the side length.
//!
//! Forbidding any pattern that a matched bipartite construction avoids - the
//! suspended four-cycle in any of its guises, longer suspended even cycles,
//! suspended complete bipartite patterns with both sides of size two or
//! more - allows n^2/4 triangles whenever 4 | n, with no general matching
//! upper bound at this level of the theory.

use crate::constructions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::Pattern;

use super::local::sorted_names;

/// Closed-form bounds for one (n, forbidden list) instance. `upper` and
/// `lower` are in triangles; `inequalities` lists each bound applied, in
/// human-readable form, tightest last for uppers.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub forbidden: Vec<String>,
    pub upper: Option<u64>,
    pub lower: Option<u64>,
    pub inequalities: Vec<String>,
}

/// Every graph satisfies 3 n t >= e (4e - n^2); equality needs each edge to
/// lie in exactly (4e - n^2) / n triangles. Inputs small enough to build are
/// far inside i128 range.
pub fn edge_triangle_inequality_holds<const W: usize>(g: &Graph<W>) -> bool {
    let n = g.n() as i128;
    let e = g.edge_count() as i128;
    let t = g.triangle_count() as i128;
    3 * n * t >= e * (4 * e - n * n)
}

fn matched_bipartite_avoids(p: &Pattern) -> bool {
    match p {
        Pattern::K122 => true,
        Pattern::Suspension(inner) => match **inner {
            Pattern::Cycle(m) => m >= 4 && m % 2 == 0,
            Pattern::CompleteBipartite(a, b) => a >= 2 && b >= 2,
            _ => false,
        },
        _ => false,
    }
}

fn suspended_path_bounds(n: usize, k: usize, forbidden: Vec<String>) -> BoundReport {
    let n64 = n as u64;
    let k64 = k as u64;
    let mut inequalities = Vec::new();

    let general = (k64 - 1) * n64 * (n64 + k64 - 1) / 12;
    inequalities.push(format!(
        "12t <= (k-1)n(n+k-1) with k = {k}: t <= {general}"
    ));
    let mut upper = general;
    if k == 3 {
        let strict = (n64 * n64 + 24 * n64).saturating_sub(1) / 8;
        inequalities.push(format!("8t < n^2 + 24n: t <= {strict}"));
        upper = upper.min(strict);
    }
    if k == 5 {
        let quad = (n64 * n64 + 20 * n64) / 4;
        inequalities.push(format!("4t <= n^2 + 20n: t <= {quad}"));
        upper = upper.min(quad);
    }

    let m = (k - 1) / 2;
    let mut lower = None;
    if n % (4 * m) == 0 && n > 0 {
        let attained = m as u64 * n64 * n64 / 8;
        inequalities.push(format!("disjoint block construction: t >= {attained}"));
        lower = Some(attained);
        #[cfg(debug_assertions)]
        if n <= constructions::MAX_CONSTRUCTION_N && k <= 9 {
            let g = constructions::build_fnk(n, k).expect("divisibility was checked");
            debug_assert_eq!(g.triangle_count() as u64, attained);
        }
    }

    BoundReport { n, forbidden, upper: Some(upper), lower, inequalities }
}

fn matched_bipartite_bounds(n: usize, forbidden: Vec<String>) -> BoundReport {
    let mut inequalities = Vec::new();
    let mut lower = None;
    if n % 4 == 0 && n > 0 {
        let attained = (n as u64) * (n as u64) / 4;
        inequalities.push(format!("matched bipartite construction: t >= {attained}"));
        lower = Some(attained);
        #[cfg(debug_assertions)]
        if n <= constructions::MAX_CONSTRUCTION_N {
            let g = constructions::build_hn(n).expect("divisibility was checked");
            debug_assert_eq!(g.triangle_count() as u64, attained);
        }
    }
    BoundReport { n, forbidden, upper: None, lower, inequalities }
}

/// Closed-form bounds on the maximum triangle count over `forbidden`-free
/// graphs on `n` vertices, for the supported families: a single suspended
/// path on at least three path vertices, or a list of patterns all avoided
/// by the matched bipartite construction. Anything else is refused rather
/// than answered loosely.
pub fn verify_bounds(n: usize, forbidden: &[Pattern]) -> Result<BoundReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("bounds need at least one vertex".into()));
    }
    let names = sorted_names(forbidden);
    if forbidden.len() == 1 {
        if let Pattern::Suspension(inner) = &forbidden[0] {
            if let Pattern::Path(k) = **inner {
                if k >= 3 {
                    return Ok(suspended_path_bounds(n, k, names));
                }
            }
        }
    }
    if !forbidden.is_empty() && forbidden.iter().all(matched_bipartite_avoids) {
        return Ok(matched_bipartite_bounds(n, names));
    }
    Err(Error::UnsupportedBound(format!(
        "no closed-form bounds for {{{}}}",
        names.join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, Graph64};
    use crate::pattern::is_free;

    fn hat_path(k: usize) -> Pattern {
        Pattern::Suspension(Box::new(Pattern::Path(k)))
    }

    #[test]
    fn suspended_path_bounds_match_hand_values() {
        let r = verify_bounds(5, &[hat_path(4)]).unwrap();
        assert_eq!(r.upper, Some(10));
        assert_eq!(r.lower, None);

        let r = verify_bounds(4, &[hat_path(3)]).unwrap();
        assert_eq!(r.upper, Some(4));
        assert_eq!(r.lower, Some(2));
        assert_eq!(r.inequalities.len(), 3);

        let r = verify_bounds(8, &[hat_path(5)]).unwrap();
        assert_eq!(r.upper, Some(32));
        assert_eq!(r.lower, Some(16));
        assert!(r.inequalities.iter().any(|s| s.contains("4t <= n^2 + 20n")));
    }

    #[test]
    fn upper_bounds_dominate_known_exact_values() {
        let exact = [
            (4, 3, 4u64),
            (5, 3, 4),
            (6, 3, 5),
            (5, 4, 10),
            (6, 4, 10),
        ];
        for (n, k, value) in exact {
            let r = verify_bounds(n, &[hat_path(k)]).unwrap();
            assert!(r.upper.unwrap() >= value, "n = {n}, k = {k}");
        }
    }

    #[test]
    fn matched_bipartite_class_normalizes_together() {
        let via_k122 = verify_bounds(8, &[Pattern::K122]).unwrap();
        let via_cycle =
            verify_bounds(8, &[Pattern::Suspension(Box::new(Pattern::Cycle(4)))]).unwrap();
        assert_eq!(via_k122.upper, None);
        assert_eq!(via_k122.lower, Some(16));
        assert_eq!(via_cycle.lower, via_k122.lower);

        let both = verify_bounds(12, &[
            Pattern::K122,
            Pattern::Suspension(Box::new(Pattern::Cycle(6))),
            Pattern::Suspension(Box::new(Pattern::CompleteBipartite(2, 3))),
        ])
        .unwrap();
        assert_eq!(both.lower, Some(36));

        let off_divisor = verify_bounds(6, &[Pattern::K122]).unwrap();
        assert_eq!(off_divisor.lower, None);
        assert!(off_divisor.inequalities.is_empty());
    }

    #[test]
    fn unsupported_lists_are_refused() {
        assert!(matches!(
            verify_bounds(6, &[Pattern::Cycle(5)]),
            Err(Error::UnsupportedBound(_))
        ));
        assert!(matches!(
            verify_bounds(6, &[hat_path(4), Pattern::Complete(4)]),
            Err(Error::UnsupportedBound(_))
        ));
        assert!(matches!(verify_bounds(6, &[]), Err(Error::UnsupportedBound(_))));
        assert!(matches!(
            verify_bounds(0, &[hat_path(3)]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            verify_bounds(6, &[Pattern::Suspension(Box::new(Pattern::Cycle(5)))]),
            Err(Error::UnsupportedBound(_))
        ));
    }

    #[test]
    fn edge_triangle_inequality_is_tight_on_cliques() {
        // K4: 3*4*4 = 48 equals 6*(24 - 16) = 48
        assert!(edge_triangle_inequality_holds(&complete(4)));
        let g = complete(4).without_edge(0, 1);
        assert!(edge_triangle_inequality_holds(&g));
    }

    #[test]
    fn edge_triangle_inequality_holds_for_every_five_vertex_graph() {
        for mask in 0u32..1 << 10 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..5 {
                for v in u + 1..5 {
                    if mask >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph64::from_edges(5, edges);
            assert!(edge_triangle_inequality_holds(&g), "mask {mask}");
        }
    }

    #[test]
    fn lower_bounds_are_attained_by_free_graphs() {
        let pats = [hat_path(5)];
        let r = verify_bounds(8, &pats).unwrap();
        let g = constructions::build_fnk(8, 5).unwrap();
        assert!(is_free(&g, &pats));
        assert_eq!(g.triangle_count() as u64, r.lower.unwrap());
    }
}
