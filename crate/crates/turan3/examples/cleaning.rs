//! The cleaning pipeline: starting from a graph with no suspended 4-edge
//! path, delete one carefully chosen edge of a forbidden configuration at a
//! time, in six stages from densest to sparsest, until the leftover graph
//! avoids the whole list. The report logs every deletion so the run can be
//! audited step by step.

use turan3::cleaning::clean_for_p4hat;
use turan3::pattern::{is_free, Pattern};
use turan3::search::random_free_graph;

fn hat_path(k: usize) -> Pattern {
    Pattern::Suspension(Box::new(Pattern::Path(k)))
}

fn main() {
    let forbidden = [hat_path(4)];
    let targets = [
        Pattern::Complete(5),
        Pattern::K5Minus,
        Pattern::Complete(4),
        Pattern::K222,
        Pattern::Q32,
        Pattern::K122,
    ];

    for seed in 0..4u64 {
        let g = random_free_graph(14, &forbidden, seed).unwrap();
        let (cleaned, report) = clean_for_p4hat(&g).unwrap();

        assert!(is_free(&cleaned, &targets));
        assert_eq!(report.totals.final_triangles, cleaned.triangle_count());
        println!(
            "seed {seed}: {:2} edges {:2} triangles -> {:2} steps -> {:2} edges {:2} triangles",
            report.totals.initial_edges,
            report.totals.initial_triangles,
            report.totals.steps,
            report.totals.final_edges,
            report.totals.final_triangles,
        );
        for step in report.steps.iter().take(3) {
            println!(
                "    step {}: {} at {:?} deleted {:?}, triangles {} -> {}",
                step.step, step.pattern, step.witness, step.edges, step.t_before, step.t_after
            );
        }
        if report.steps.len() > 3 {
            println!("    ... {} more steps", report.steps.len() - 3);
        }
    }

    println!();
    println!("after cleaning, every graph avoids:");
    for t in &targets {
        println!("  {}", t.name());
    }
}
