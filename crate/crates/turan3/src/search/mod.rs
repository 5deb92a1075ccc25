//! Exhaustive and heuristic search for extremal triangle counts: canonical
//! forms for small graphs, isomorph-free enumeration, randomized local
//! search for lower bounds, exact extremal values with witnesses, and
//! closed-form bound certification.

pub mod bounds;
pub mod canon;
pub mod enumerate;
pub mod extremal;
pub mod local;

pub use bounds::{edge_triangle_inequality_holds, verify_bounds, BoundReport};
pub use canon::SmallGraph;
pub use enumerate::{enumerate, GRAPH_COUNTS};
pub use extremal::{exact_extremal, ExtremalOptions, ExtremalRecord};
pub use local::{local_search_lower_bound, random_free_graph, LocalSearchResult};
