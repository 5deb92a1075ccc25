//! Exact answers for small instances: isomorph-free enumeration with
//! hereditary filtering, and the exhaustive extremal search with potential
//! pruning. Every value comes with a canonical witness in graph6 form.

use turan3::graph6::from_graph6;
use turan3::pattern::{is_free, Pattern};
use turan3::search::{enumerate, exact_extremal, ExtremalOptions, GRAPH_COUNTS};

fn hat_path(k: usize) -> Pattern {
    Pattern::Suspension(Box::new(Pattern::Path(k)))
}

fn main() {
    println!("nonisomorphic graphs by vertex count:");
    for n in 1..=8usize {
        let all = enumerate(n, &[]).unwrap();
        assert_eq!(all.len() as u64, GRAPH_COUNTS[n - 1]);
        let triangle_free = enumerate(n, &[Pattern::Cycle(3)]).unwrap();
        println!(
            "  n = {n}: {:6} total, {:4} triangle-free",
            all.len(),
            triangle_free.len()
        );
    }

    println!();
    println!("exact extremal values (max triangles avoiding the pattern):");
    let opts = ExtremalOptions::default();
    let instances: Vec<(usize, Pattern)> = vec![
        (4, hat_path(3)),
        (5, hat_path(3)),
        (6, hat_path(3)),
        (5, hat_path(4)),
        (6, hat_path(4)),
        (6, Pattern::Complete(4)),
        (7, Pattern::K122),
    ];
    for (n, pat) in instances {
        let record = exact_extremal(n, std::slice::from_ref(&pat), &opts).unwrap();
        let witness = from_graph6::<1>(&record.witness).unwrap();
        assert!(is_free(&witness, std::slice::from_ref(&pat)));
        assert_eq!(witness.triangle_count(), record.max_triangles);
        println!(
            "  n = {n}, avoiding {:18}: {:2} triangles, witness {} \
             ({} graphs scanned)",
            pat.name(),
            record.max_triangles,
            record.witness,
            record.graphs_scanned
        );
    }

    // The 4-clique-free optimum on six vertices is the octahedron.
    let record = exact_extremal(6, &[Pattern::Complete(4)], &opts).unwrap();
    let witness = from_graph6::<1>(&record.witness).unwrap();
    assert_eq!(record.max_triangles, 8);
    assert_eq!(witness.edge_count(), 12);
    println!();
    println!(
        "the 4-clique-free optimum on 6 vertices is the octahedron: {}",
        record.witness
    );
}
