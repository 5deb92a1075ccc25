//! BFS level decompositions and the density inequalities they obey in
//! graphs of high girth: with no 4-cycle, each level spans few edges and
//! consecutive levels are joined sparsely.

use turan3::graph::Graph64;
use turan3::structure::{bfs_levels, check_level_inequalities};

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
/// Girth 5, so it has no 4-cycle.
fn petersen() -> Graph64 {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph64::from_edges(10, edges)
}

fn main() {
    let g = petersen();
    let dec = bfs_levels(&g, 0);
    println!("petersen graph from root 0:");
    for (i, level) in dec.levels.iter().enumerate() {
        println!(
            "  level {i}: {:?}, {} internal edges",
            level, dec.within[i]
        );
    }

    // With k = 2 the bounds say each level has at most |L| internal edges
    // and at most |L_i| + |L_{i+1}| edges to the next level; both hold at
    // every root because the graph has no 4-cycle.
    let all_roots_hold = (0..g.n()).all(|r| check_level_inequalities(&g, r, 2).all_hold);
    assert!(all_roots_hold);
    println!("level inequalities with k = 2 hold from every root");

    // A complete bipartite graph is dense with 4-cycles and the same
    // inequalities detect it immediately.
    let k44 = turan3::graph::complete_bipartite(4, 4);
    let report = check_level_inequalities(&k44, 0, 2);
    assert!(!report.all_hold);
    println!();
    println!("K(4,4) from root 0 violates them:");
    for row in &report.rows {
        if !row.holds {
            println!(
                "  level {}: between-level edges {} exceed the bound {}",
                row.level, row.between_edges, row.between_bound
            );
        }
    }
}
