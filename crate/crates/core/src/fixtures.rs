//! Small reference graphs with known QUBO landscapes.
//!
//! Both eight-vertex graphs use terminals 0 and 7 (labels 1 and 8 when
//! displayed 1-indexed) and unit weights.

use crate::graph::{Graph, VertexId};

pub const FIXTURE_START: VertexId = 0;
pub const FIXTURE_END: VertexId = 7;

/// 8 vertices, 14 edges; the only two-edge route from 0 to 7 is 0–6–7 and
/// 0, 7 are not adjacent. Under the default coefficients its unique minimum
/// is −6 at {0, 6, 7}, with {0, 7}, {0, 2, 6, 7} and {0, 4, 6, 7} at −5.
pub fn graph_one() -> Graph {
    Graph::from_edges(
        8,
        [
            (0, 2, 1),
            (0, 4, 1),
            (0, 6, 1),
            (1, 3, 1),
            (1, 4, 1),
            (1, 5, 1),
            (2, 3, 1),
            (2, 4, 1),
            (2, 5, 1),
            (2, 6, 1),
            (3, 7, 1),
            (4, 6, 1),
            (5, 6, 1),
            (6, 7, 1),
        ],
    )
    .expect("static fixture")
}

/// 8 vertices, 12 edges; two vertex-disjoint shortest routes 0–1–7 and
/// 0–2–7, with 1 and 2 not adjacent.
pub fn graph_two() -> Graph {
    Graph::from_edges(
        8,
        [
            (0, 1, 1),
            (0, 2, 1),
            (0, 5, 1),
            (1, 4, 1),
            (1, 6, 1),
            (1, 7, 1),
            (2, 3, 1),
            (2, 5, 1),
            (2, 6, 1),
            (2, 7, 1),
            (3, 5, 1),
            (4, 6, 1),
        ],
    )
    .expect("static fixture")
}

/// Path `0 – 1 – … – (n−1)` with unit weights.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v, 1))).expect("valid path")
}

/// Complete graph with unit weights.
pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v, 1))))
        .expect("valid clique")
}
