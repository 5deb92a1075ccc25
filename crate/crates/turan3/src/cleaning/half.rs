//! Certifier for 2t <= e on graphs free of the suspended 4-edge path, the
//! 4-clique, and the suspended 4-cycle.
//!
//! The trace alternates two moves, each destroying at most one triangle per
//! two removed edges: dropping an edge that lies in no triangle, and removing
//! both light edges of a triangle that has at least two (an edge is light
//! when it lies in exactly one triangle). When neither move applies, the
//! leftover graph pairs its triangles with its edges exactly two to one, so
//! the inequality closes.

use crate::error::Result;
use crate::graph::Graph;
use crate::pattern::Pattern;

use super::{CertStep, Certificate, KIND_LIGHT_PAIR};

/// Establish 2t(G) <= e(G) by an explicit deletion trace.
pub fn certify_half<const W: usize>(g: &Graph<W>) -> Result<Certificate> {
    super::ensure_free(
        g,
        &[
            Pattern::Suspension(Box::new(Pattern::Path(4))),
            Pattern::Complete(4),
            Pattern::K122,
        ],
    )?;
    let mut cert =
        Certificate::start(KIND_LIGHT_PAIR, g.n(), g.edge_count(), g.triangle_count());
    let mut work = g.clone();

    'outer: loop {
        // move 1: an edge in no triangle costs one edge, zero triangles
        if let Some((u, v)) = work.edges().into_iter().find(|&(u, v)| work.codegree(u, v) == 0) {
            work = work.without_edge(u, v);
            cert.steps.push(CertStep {
                rule: "isolated-edge".into(),
                witness: vec![u, v],
                edges: vec![(u, v)],
                dt: 0,
                de: 1,
            });
            continue;
        }
        // move 2: a triangle with two light edges loses both, costing two
        // edges and exactly the one triangle they share
        for t in work.triangles() {
            let mut light: Vec<(usize, usize)> = t
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| work.codegree(u, v) == 1)
                .collect();
            if light.len() < 2 {
                continue;
            }
            light.sort_unstable();
            let pair = [light[0], light[1]];
            let t0 = work.triangle_count();
            work = work.delete_edges(&pair);
            let dt = t0 - work.triangle_count();
            if dt != 1 {
                cert.counterexample = Some(format!(
                    "two light edges of {t:?} destroyed {dt} triangles instead of 1 in {}",
                    super::dump_graph(g)
                ));
                break 'outer;
            }
            cert.steps.push(CertStep {
                rule: "light-pair".into(),
                witness: t.vertices().to_vec(),
                edges: pair.to_vec(),
                dt: 1,
                de: 2,
            });
            continue 'outer;
        }
        // terminal: every edge in 1 or 2 triangles, every triangle with
        // exactly one light edge, hence e = 2t
        let t_term = work.triangle_count();
        let mut light_count = 0usize;
        for (u, v) in work.edges() {
            match work.codegree(u, v) {
                1 => light_count += 1,
                2 => {}
                c => {
                    cert.counterexample = Some(format!(
                        "terminal edge ({u}, {v}) has codegree {c} in {}",
                        super::dump_graph(g)
                    ));
                    break 'outer;
                }
            }
        }
        if cert.counterexample.is_none() {
            for t in work.triangles() {
                let lights = t
                    .edges()
                    .iter()
                    .filter(|&&(u, v)| work.codegree(u, v) == 1)
                    .count();
                if lights != 1 {
                    cert.counterexample = Some(format!(
                        "terminal triangle {t:?} has {lights} light edges in {}",
                        super::dump_graph(g)
                    ));
                    break;
                }
            }
        }
        if cert.counterexample.is_none() && light_count != t_term {
            cert.counterexample = Some(format!(
                "terminal state pairs {light_count} light edges with {t_term} triangles in {}",
                super::dump_graph(g)
            ));
        }
        if cert.counterexample.is_none() && work.edge_count() != 2 * t_term {
            cert.counterexample = Some(format!(
                "terminal state has e={} but t={} in {}",
                work.edge_count(),
                t_term,
                super::dump_graph(g)
            ));
        }
        break;
    }

    cert.terminal_edges = work.edge_count();
    cert.terminal_triangles = work.triangle_count();
    cert.removed_edges = cert.initial_edges - cert.terminal_edges;
    cert.removed_triangles = cert.initial_triangles - cert.terminal_triangles;
    if cert.counterexample.is_none() {
        // per step 2*dt <= de, and terminally 2t = e, so 2t(G) <= e(G)
        debug_assert!(cert.steps.iter().all(|s| 2 * s.dt <= s.de));
        debug_assert!(2 * cert.initial_triangles <= cert.initial_edges);
        cert.verified = true;
        cert.conclusion = format!(
            "2t <= e: 2*{} <= {}",
            cert.initial_triangles, cert.initial_edges
        );
    } else {
        cert.conclusion = "counterexample found".into();
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{complete, cycle};

    #[test]
    fn three_page_book_certifies() {
        let b3 = Pattern::Book(3).realize();
        let cert = certify_half(&b3).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.conclusion, "2t <= e: 2*3 <= 7");
        let light_pairs = cert.steps.iter().filter(|s| s.rule == "light-pair").count();
        assert_eq!(light_pairs, 3);
        // the spine is left and dropped as an isolated edge
        let drops = cert.steps.iter().filter(|s| s.rule == "isolated-edge").count();
        assert_eq!(drops, 1);
        assert_eq!(cert.terminal_edges, 0);
        super::super::replay(&b3, &cert).unwrap();
    }

    #[test]
    fn dense_construction_is_rejected() {
        let h8 = crate::constructions::build_hn(8).unwrap();
        match certify_half(&h8) {
            Err(Error::Precondition { pattern, .. }) => {
                // this construction contains the 4-clique (and more)
                assert!(pattern == "suspension:path:4" || pattern == "complete:4");
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn triangle_free_graphs_certify_trivially() {
        let cert = certify_half(&cycle(7)).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.removed_triangles, 0);
        assert_eq!(cert.terminal_edges, 0);
        assert_eq!(cert.steps.len(), 7);
    }

    #[test]
    fn single_triangle_certifies() {
        let cert = certify_half(&complete(3)).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.conclusion, "2t <= e: 2*1 <= 3");
        // terminal state is the triangle itself: one light pair then cleanup
        super::super::replay(&complete(3), &cert).unwrap();
    }

    #[test]
    fn every_qualifying_six_vertex_graph_certifies() {
        use crate::graph::Graph64;
        let forbidden = [
            Pattern::Suspension(Box::new(Pattern::Path(4))),
            Pattern::Complete(4),
            Pattern::K122,
        ];
        let mut checked = 0usize;
        for mask in 0u32..1 << 15 {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..6 {
                for v in u + 1..6 {
                    if mask >> bit & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            let g = Graph64::from_edges(6, edges);
            if forbidden.iter().any(|p| crate::pattern::contains(&g, p)) {
                continue;
            }
            let cert = certify_half(&g).unwrap();
            assert!(cert.verified, "mask {mask}: {:?}", cert.counterexample);
            super::super::replay(&g, &cert).unwrap();
            checked += 1;
        }
        assert!(checked > 10_000);
    }
}
