//! Cleaning pipeline for graphs free of the suspended 4-edge path.
//!
//! Given such a graph, six stages run in order, each deleting one carefully
//! chosen edge from one copy of its target pattern until that pattern is
//! gone. Deleting edges can never create a subgraph copy, so finished stages
//! stay finished. The output is free of all six targets while every deletion
//! is logged with its witness.

use crate::bitset::Bits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{self, Pattern};

use super::{min_witness_set, norm_edge, CleanStep, CleanTotals, CleaningReport};

/// How each stage picks the edge to delete from the witness copy.
enum EdgeRule {
    /// Lexicographically smallest edge inside the copy.
    SmallestOfCopy,
    /// Smallest copy edge whose endpoints have exactly two common neighbors
    /// in the whole graph. Such an edge must exist at this stage.
    SmallestCodegreeTwo,
    /// Smallest edge of the outer 4-cycle (path ends and wings).
    SmallestOuterCycle,
    /// Smallest rim edge whose endpoints have exactly one common neighbor.
    /// Such an edge must exist at this stage.
    SmallestRimCodegreeOne,
}

/// The forbidden list the output is guaranteed to avoid (beyond the suspended
/// 4-edge path the input already avoided).
fn cleaning_targets() -> Vec<(Pattern, EdgeRule)> {
    vec![
        (Pattern::Complete(5), EdgeRule::SmallestOfCopy),
        (Pattern::K5Minus, EdgeRule::SmallestOfCopy),
        (Pattern::Complete(4), EdgeRule::SmallestCodegreeTwo),
        (Pattern::K222, EdgeRule::SmallestOfCopy),
        (Pattern::Q32, EdgeRule::SmallestOuterCycle),
        (Pattern::K122, EdgeRule::SmallestRimCodegreeOne),
    ]
}

fn copy_edges<const W: usize>(g: &Graph<W>, witness: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &u) in witness.iter().enumerate() {
        for &v in &witness[i + 1..] {
            if g.has_edge(u, v) {
                out.push(norm_edge(u, v));
            }
        }
    }
    out.sort_unstable();
    out
}

fn witness_mask<const W: usize>(witness: &[usize]) -> Bits<W> {
    let mut m = Bits::<W>::empty();
    for &v in witness {
        m.insert(v);
    }
    m
}

fn pick_edge<const W: usize>(
    g: &Graph<W>,
    pat: &Pattern,
    rule: &EdgeRule,
    witness: &[usize],
) -> Result<(usize, usize)> {
    match rule {
        EdgeRule::SmallestOfCopy => Ok(copy_edges(g, witness)[0]),
        EdgeRule::SmallestCodegreeTwo => {
            for (u, v) in copy_edges(g, witness) {
                if g.codegree(u, v) == 2 {
                    return Ok((u, v));
                }
            }
            Err(Error::PropertyFalsified(format!(
                "every {} copy must carry an edge of codegree exactly 2 here; none in {:?} of {}",
                pat.name(),
                witness,
                super::dump_graph(g)
            )))
        }
        EdgeRule::SmallestOuterCycle => {
            let mask = witness_mask::<W>(witness);
            let im = pattern::induced_embedding(g, &pat.realize(), &mask).ok_or_else(|| {
                Error::PropertyFalsified(format!(
                    "witness {witness:?} is not an exact copy of {} in {}",
                    pat.name(),
                    super::dump_graph(g)
                ))
            })?;
            // outer cycle: both path ends with both wings
            let mut outer = [
                norm_edge(im[0], im[4]),
                norm_edge(im[3], im[4]),
                norm_edge(im[0], im[5]),
                norm_edge(im[3], im[5]),
            ];
            outer.sort_unstable();
            Ok(outer[0])
        }
        EdgeRule::SmallestRimCodegreeOne => {
            let mask = witness_mask::<W>(witness);
            let im = pattern::induced_embedding(g, &pat.realize(), &mask).ok_or_else(|| {
                Error::PropertyFalsified(format!(
                    "witness {witness:?} is not an exact copy of {} in {}",
                    pat.name(),
                    super::dump_graph(g)
                ))
            })?;
            let mut rim = [
                norm_edge(im[0], im[1]),
                norm_edge(im[1], im[2]),
                norm_edge(im[2], im[3]),
                norm_edge(im[0], im[3]),
            ];
            rim.sort_unstable();
            for (u, v) in rim {
                if g.codegree(u, v) == 1 {
                    return Ok((u, v));
                }
            }
            Err(Error::PropertyFalsified(format!(
                "every {} copy must carry a rim edge of codegree exactly 1 here; none in {:?} of {}",
                pat.name(),
                witness,
                super::dump_graph(g)
            )))
        }
    }
}

/// Repeatedly delete edges until the graph is free of the five-clique, the
/// five-clique minus an edge, the four-clique, the octahedron, the winged
/// path, and the suspended 4-cycle. Requires the input to be free of the
/// suspended 4-edge path; that freeness survives because deletions never add
/// subgraphs.
pub fn clean_for_p4hat<const W: usize>(g: &Graph<W>) -> Result<(Graph<W>, CleaningReport)> {
    let p4hat = Pattern::Suspension(Box::new(Pattern::Path(4)));
    super::ensure_free(g, std::slice::from_ref(&p4hat))?;

    let mut work = g.clone();
    let mut steps = Vec::new();
    for (stage, (pat, rule)) in cleaning_targets().iter().enumerate() {
        while let Some(witness) = min_witness_set(&work, pat) {
            let (u, v) = pick_edge(&work, pat, rule, &witness)?;
            let t_before = work.triangle_count();
            work = work.without_edge(u, v);
            let t_after = work.triangle_count();
            steps.push(CleanStep {
                step: stage + 1,
                pattern: pat.name(),
                witness,
                edges: vec![(u, v)],
                t_before,
                t_after,
            });
        }
    }

    debug_assert!(pattern::is_free(
        &work,
        &[
            p4hat,
            Pattern::Complete(5),
            Pattern::K5Minus,
            Pattern::Complete(4),
            Pattern::K222,
            Pattern::Q32,
            Pattern::K122,
        ]
    ));
    let totals = CleanTotals {
        steps: steps.len(),
        initial_edges: g.edge_count(),
        final_edges: work.edge_count(),
        initial_triangles: g.triangle_count(),
        final_triangles: work.triangle_count(),
    };
    Ok((work, CleaningReport { steps, totals }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, Graph64};

    #[test]
    fn rejects_input_with_suspended_path() {
        let h8 = crate::constructions::build_hn(8).unwrap();
        // this construction contains the suspended 4-edge path
        match clean_for_p4hat(&h8) {
            Err(Error::Precondition { pattern, .. }) => {
                assert_eq!(pattern, "suspension:path:4");
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn k5_cleans_to_a_three_page_book() {
        let (out, report) = clean_for_p4hat(&complete(5)).unwrap();
        let kinds: Vec<(usize, &str, (usize, usize), usize, usize)> = report
            .steps
            .iter()
            .map(|s| (s.step, s.pattern.as_str(), s.edges[0], s.t_before, s.t_after))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (1, "complete:5", (0, 1), 10, 7),
                (2, "k5-minus", (0, 2), 7, 5),
                (3, "complete:4", (1, 2), 5, 3),
            ]
        );
        assert_eq!(report.steps[0].witness, vec![0, 1, 2, 3, 4]);
        assert_eq!(report.steps[2].witness, vec![1, 2, 3, 4]);
        assert_eq!(out.triangle_count(), 3);
        // the survivor is the 3-page book with spine (3, 4)
        let dec = crate::structure::triangle_blocks(&out);
        assert_eq!(dec.blocks.len(), 1);
        let book = crate::structure::is_book(&out, &dec.blocks[0]).unwrap();
        assert_eq!(book.spine, (3, 4));
        assert_eq!(book.pages, vec![0, 1, 2]);
        assert_eq!(report.totals.final_triangles, 3);
        assert_eq!(report.totals.initial_triangles, 10);
    }

    #[test]
    fn suspended_square_loses_one_rim_edge() {
        let g = Pattern::K122.realize();
        let (out, report) = clean_for_p4hat(&g).unwrap();
        assert_eq!(report.steps.len(), 1);
        let s = &report.steps[0];
        assert_eq!(s.pattern, "k122");
        assert_eq!(s.edges, vec![(0, 1)]);
        assert_eq!((s.t_before, s.t_after), (4, 3));
        assert_eq!(out.triangle_count(), 3);
    }

    #[test]
    fn pentagon_needs_no_cleaning() {
        let (out, report) = clean_for_p4hat(&cycle(5)).unwrap();
        assert!(report.steps.is_empty());
        assert_eq!(out.edge_count(), 5);
        assert_eq!(report.totals.steps, 0);
    }

    #[test]
    fn per_step_losses_match_recount() {
        let g = Graph64::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 3),
                (2, 3),
                (3, 4),
                (4, 5),
                (3, 5),
                (5, 6),
            ],
        );
        let (out, report) = clean_for_p4hat(&g).unwrap();
        let mut replay = g.clone();
        for s in &report.steps {
            assert_eq!(replay.triangle_count(), s.t_before);
            replay = replay.delete_edges(&s.edges);
            assert_eq!(replay.triangle_count(), s.t_after);
        }
        assert_eq!(replay.edges(), out.edges());
    }

    #[test]
    fn every_qualifying_six_vertex_graph_cleans() {
        let guard = Pattern::Suspension(Box::new(Pattern::Path(4)));
        let mut targets: Vec<Pattern> = vec![
            Pattern::Complete(5),
            Pattern::K5Minus,
            Pattern::Complete(4),
            Pattern::K222,
            Pattern::Q32,
            Pattern::K122,
        ];
        targets.push(guard.clone());
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
            if crate::pattern::contains(&g, &guard) {
                continue;
            }
            let (out, report) = clean_for_p4hat(&g).unwrap();
            for pat in &targets {
                assert!(
                    !crate::pattern::contains(&out, pat),
                    "mask {mask} still holds {} after cleaning",
                    pat.name()
                );
            }
            assert_eq!(
                report.totals.final_triangles,
                out.triangle_count(),
                "mask {mask} report totals disagree"
            );
            checked += 1;
        }
        assert!(checked > 10_000);
    }
}
