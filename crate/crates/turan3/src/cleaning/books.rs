//! Certifier for t <= e/2 via the block structure: in a graph free of the
//! suspended 3-edge path and the 4-clique, every triangle block is a book.
//! A book with s pages holds s triangles on 2s + 1 edges, so summing over
//! blocks gives e = 2t + (number of blocks) + (edges in no triangle).

use crate::error::Result;
use crate::graph::Graph;
use crate::pattern::Pattern;
use crate::structure::{is_book, triangle_blocks};

use super::{CertStep, Certificate, KIND_BOOK_DECOMPOSITION};

/// Establish 2t(G) <= e(G) by decomposing the triangle blocks into books.
pub fn certify_books<const W: usize>(g: &Graph<W>) -> Result<Certificate> {
    super::ensure_free(
        g,
        &[
            Pattern::Suspension(Box::new(Pattern::Path(3))),
            Pattern::Complete(4),
        ],
    )?;
    let mut cert =
        Certificate::start(KIND_BOOK_DECOMPOSITION, g.n(), g.edge_count(), g.triangle_count());
    let dec = triangle_blocks(g);
    let mut pages_total = 0usize;
    for block in &dec.blocks {
        match is_book(g, block) {
            Some(book) => {
                let mut witness = vec![book.spine.0, book.spine.1];
                witness.extend(&book.pages);
                pages_total += book.pages.len();
                cert.steps.push(CertStep {
                    rule: "book-block".into(),
                    witness,
                    edges: block.clone(),
                    dt: book.pages.len(),
                    de: block.len(),
                });
            }
            None => {
                cert.counterexample = Some(format!(
                    "block {:?} is not a book in {}",
                    block,
                    super::dump_graph(g)
                ));
                break;
            }
        }
    }
    // nothing is deleted by this certificate; the counts are structural
    cert.terminal_edges = g.edge_count();
    cert.terminal_triangles = g.triangle_count();
    if cert.counterexample.is_none() && pages_total != g.triangle_count() {
        cert.counterexample = Some(format!(
            "books carry {pages_total} pages but the graph has {} triangles in {}",
            g.triangle_count(),
            super::dump_graph(g)
        ));
    }
    if cert.counterexample.is_none() {
        let blocks = dec.blocks.len();
        let uncovered = dec.uncovered.len();
        let e = g.edge_count();
        let t = g.triangle_count();
        if e != 2 * t + blocks + uncovered {
            cert.counterexample = Some(format!(
                "edge accounting failed: e={e}, 2t+blocks+uncovered={}",
                2 * t + blocks + uncovered
            ));
        } else {
            cert.verified = true;
            cert.conclusion = format!(
                "e = 2t + blocks + uncovered: {e} = 2*{t} + {blocks} + {uncovered}, so 2t <= e"
            );
        }
    }
    if !cert.verified && cert.conclusion.is_empty() {
        cert.conclusion = "counterexample found".into();
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{complete, Graph64};

    #[test]
    fn books_and_stray_edges_account_exactly() {
        // two disjoint books (1 and 2 pages) plus a pendant edge
        let g = Graph64::from_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (3, 5),
                (4, 5),
                (3, 6),
                (4, 6),
                (7, 8),
            ],
        );
        let cert = certify_books(&g).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.steps.len(), 2);
        assert_eq!(cert.conclusion, "e = 2t + blocks + uncovered: 9 = 2*3 + 2 + 1, so 2t <= e");
        super::super::replay(&g, &cert).unwrap();
    }

    #[test]
    fn four_clique_is_rejected() {
        match certify_books(&complete(4)) {
            Err(Error::Precondition { pattern, .. }) => {
                assert_eq!(pattern, "complete:4");
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
        match certify_books(&complete(6)) {
            Err(Error::Precondition { pattern, .. }) => {
                assert_eq!(pattern, "suspension:path:3");
            }
            other => panic!("expected precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn triangle_free_graph_is_all_uncovered() {
        let g = Graph64::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let cert = certify_books(&g).unwrap();
        assert!(cert.verified);
        assert!(cert.steps.is_empty());
        assert_eq!(cert.conclusion, "e = 2t + blocks + uncovered: 3 = 2*0 + 0 + 3, so 2t <= e");
    }

    #[test]
    fn every_qualifying_six_vertex_graph_decomposes() {
        let forbidden = [
            Pattern::Suspension(Box::new(Pattern::Path(3))),
            Pattern::Complete(4),
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
            let cert = certify_books(&g).unwrap();
            assert!(cert.verified, "mask {mask}: {:?}", cert.counterexample);
            checked += 1;
        }
        assert!(checked > 10_000);
    }
}
