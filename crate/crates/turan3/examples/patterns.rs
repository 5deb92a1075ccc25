//! Tour of the pattern catalog: parse the named and parametric spellings,
//! realize each pattern as a concrete graph, and run the containment
//! detectors, including the suspension shortcut that looks for a pattern
//! inside a single neighborhood.

use turan3::graph::complete;
use turan3::pattern::{contains, find, named_catalog, Pattern};

fn main() {
    println!("named patterns (vertices / edges / triangles):");
    for pat in named_catalog() {
        let g = pat.realize();
        println!(
            "  {:24} {:2} / {:2} / {:2}",
            pat.name(),
            g.n(),
            g.edge_count(),
            g.triangle_count()
        );
    }

    println!();
    let spellings = [
        "path:4",
        "cycle:5",
        "complete:4",
        "complete-bipartite:2,3",
        "book:3",
        "suspension:path:3",
        "suspension:cycle:4",
        "w4",
    ];
    println!("parametric spellings round-trip through parse and name:");
    for s in spellings {
        let pat = Pattern::parse(s).unwrap();
        let back = Pattern::parse(&pat.name()).unwrap();
        assert_eq!(pat, back);
        println!("  {s:24} -> {}", pat.name());
    }

    // The suspended 4-cycle and the wheel on 4 spokes are the same graph.
    let w4 = Pattern::parse("w4").unwrap();
    let sc4 = Pattern::parse("suspension:cycle:4").unwrap();
    assert_eq!(w4.realize().n(), sc4.realize().n());
    assert!(contains(&w4.realize(), &sc4));
    assert!(contains(&sc4.realize(), &w4));

    // Containment is subgraph containment: K6 holds everything on at most
    // six vertices that is not too dense anywhere it cannot be.
    let k6 = complete(6);
    for pat in named_catalog() {
        assert!(
            contains(&k6, &pat),
            "K6 should contain {} as a subgraph",
            pat.name()
        );
    }
    println!();
    println!("K6 contains every named pattern; a witness for k222:");
    let witness = find(&k6, &Pattern::K222).unwrap();
    println!("  vertices {witness:?} in role order");

    // The octahedron contains the suspended 4-cycle but no 4-clique.
    let octahedron = Pattern::K222.realize();
    assert!(contains(&octahedron, &Pattern::K122));
    assert!(!contains(&octahedron, &Pattern::Complete(4)));
    println!();
    println!("octahedron: has the suspended 4-cycle, no 4-clique");
}
