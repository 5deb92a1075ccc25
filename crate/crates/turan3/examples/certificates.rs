//! Step-by-step certificates. Each certifier runs an edge-deletion
//! induction on a concrete graph and records every step; `replay` then
//! re-executes the certificate against the original graph, so a claimed
//! inequality can be checked independently of the code that found it.

use turan3::cleaning::{certify_books, certify_half, certify_unit, replay};
use turan3::graph::{complete, Graph64};
use turan3::pattern::Pattern;
use turan3::search::verify_bounds;

fn main() {
    // Books: with no suspended 3-edge path and no 4-clique, the triangle
    // blocks are books and 3t <= 2e follows by counting pages.
    let book_plus_triangle = Graph64::from_edges(
        8,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (5, 6),
            (5, 7),
            (6, 7),
        ],
    );
    let cert = certify_books(&book_plus_triangle).unwrap();
    replay(&book_plus_triangle, &cert).unwrap();
    println!(
        "books: {} steps, {} (verified: {})",
        cert.steps.len(),
        cert.conclusion,
        cert.verified
    );

    // Half: with the suspended 4-edge path, the 4-clique, and the suspended
    // 4-cycle all absent, light edge pairs drain the graph and 2t <= e.
    let bowtie = Graph64::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]);
    let cert = certify_half(&bowtie).unwrap();
    replay(&bowtie, &cert).unwrap();
    println!(
        "half: {} steps, {} (verified: {})",
        cert.steps.len(),
        cert.conclusion,
        cert.verified
    );

    // Unit: with no K6 missing one edge and no suspended 5-edge path, a
    // family of local reductions proves t <= e. K5 falls in one step.
    let cert = certify_unit(&complete(5)).unwrap();
    replay(&complete(5), &cert).unwrap();
    println!(
        "unit on K5: rule {:?}, {} (verified: {})",
        cert.steps[0].rule, cert.conclusion, cert.verified
    );

    // The wheel on five spokes drains edge by edge instead.
    let mut edges = vec![];
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, 5));
    }
    let w5 = Graph64::from_edges(6, edges);
    let cert = certify_unit(&w5).unwrap();
    replay(&w5, &cert).unwrap();
    println!(
        "unit on the 5-wheel: {} steps, all {:?}, {}",
        cert.steps.len(),
        cert.steps[0].rule,
        cert.conclusion
    );

    // Bounds: closed forms for the suspended path families.
    println!();
    for (n, k) in [(8usize, 3usize), (8, 5), (20, 5), (12, 7)] {
        let pat = Pattern::Suspension(Box::new(Pattern::Path(k)));
        let report = verify_bounds(n, &[pat]).unwrap();
        println!(
            "n = {n:2}, suspended {k}-edge path: upper {:?}, lower {:?}",
            report.upper, report.lower
        );
    }
}
