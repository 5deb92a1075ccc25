//! Triangle blocks and books. The triangles of a graph split into blocks
//! under the relation "shares an edge"; in graphs with sparse neighborhoods
//! every block is a book: a spine edge plus pages hanging off it.

use turan3::graph::Graph64;
use turan3::structure::{classify_edges, is_book, triangle_blocks, LightMode};

fn main() {
    // A 3-page book on spine (0,1), a separate triangle, and one bare edge.
    let g = Graph64::from_edges(
        10,
        [
            (0, 1),
            (0, 2),
            (1, 2),
            (0, 3),
            (1, 3),
            (0, 4),
            (1, 4),
            (5, 6),
            (5, 7),
            (6, 7),
            (8, 9),
        ],
    );

    let dec = triangle_blocks(&g);
    println!("{} blocks, {} uncovered edges", dec.blocks.len(), dec.uncovered.len());
    for (i, block) in dec.blocks.iter().enumerate() {
        match is_book(&g, block) {
            Some(book) => println!(
                "  block {i}: book with spine {:?} and pages {:?}",
                book.spine, book.pages
            ),
            None => println!("  block {i}: {} edges, not a book", block.len()),
        }
    }
    assert_eq!(dec.blocks.len(), 2);
    assert_eq!(dec.uncovered, vec![(8, 9)]);

    // The octahedron is one block and not a book: its triangles share edges
    // all the way around without a common spine.
    let octahedron = turan3::pattern::Pattern::K222.realize();
    let dec = triangle_blocks(&octahedron);
    assert_eq!(dec.blocks.len(), 1);
    assert!(is_book(&octahedron, &dec.blocks[0]).is_none());
    println!();
    println!("octahedron: one 12-edge block, not a book");

    // Edge classification under the two light-edge notions. In the book,
    // every page edge lies in exactly one triangle, while the spine lies
    // in three.
    println!();
    println!("edge classes of the book graph (unique-triangle mode):");
    for class in classify_edges(&g, LightMode::UniqueTriangle) {
        if class.codegree > 0 {
            println!(
                "  edge {:?}: codegree {}, light = {}",
                class.edge, class.codegree, class.light
            );
        }
    }
    let spine = classify_edges(&g, LightMode::UniqueTriangle)
        .into_iter()
        .find(|c| c.edge == (0, 1))
        .unwrap();
    assert_eq!(spine.codegree, 3);
    assert!(!spine.light);
}
