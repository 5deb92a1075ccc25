//! Edge-disjoint triangle packings: greedy gives a fast lower bound, and a
//! branch and bound over the conflict graph settles small instances
//! exactly.

use turan3::constructions::build_hn;
use turan3::graph::complete;
use turan3::structure::{
    greedy_packing, max_edge_disjoint_triangles, pairwise_edge_disjoint, spencer_lower_bound,
    DEFAULT_EXACT_PACKING_LIMIT,
};

fn main() {
    // K5 has ten triangles but only two can be edge-disjoint: each uses
    // three of the ten edges and every pair of triangles meets.
    let k5 = complete(5);
    let packing = max_edge_disjoint_triangles(&k5, DEFAULT_EXACT_PACKING_LIMIT);
    assert!(packing.optimal);
    assert_eq!(packing.size, 2);
    assert!(pairwise_edge_disjoint(&packing.triangles));
    println!("K5: maximum packing {} of {} triangles", packing.size, 10);

    // The octahedron decomposes perfectly: four triangles cover its twelve
    // edges exactly once each.
    let octahedron = turan3::pattern::Pattern::K222.realize();
    let packing = max_edge_disjoint_triangles(&octahedron, DEFAULT_EXACT_PACKING_LIMIT);
    assert!(packing.optimal);
    assert_eq!(packing.size, 4);
    println!("octahedron: perfect packing into {} triangles:", packing.size);
    for t in &packing.triangles {
        println!("  {:?}", t.vertices());
    }

    // The matched bipartite construction on 8 vertices also packs
    // perfectly: 16 triangles, 4 edge-disjoint.
    let h8 = build_hn(8).unwrap();
    let exact = max_edge_disjoint_triangles(&h8, DEFAULT_EXACT_PACKING_LIMIT);
    let greedy = greedy_packing(&h8);
    println!(
        "matched bipartite on 8 vertices: greedy {} vs exact {}",
        greedy.len(),
        exact.size
    );
    assert_eq!(exact.size, 4);
    assert!(greedy.len() <= exact.size);

    // A probabilistic lower bound on independent sets in the conflict
    // graph, useful far beyond the exact range.
    let bound = spencer_lower_bound(1000, 3, 9.0).unwrap();
    println!(
        "a 3-uniform conflict system on 1000 nodes of average degree 9 \
         has an independent set of size at least {bound:.1}"
    );
}
