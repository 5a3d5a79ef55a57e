//! Small worked datasets used by tests, docs, and the bundled example data.

use crate::complex::SimplicialComplex;
use crate::labeling::ClassLabeling;
use crate::simplex::Simplex;

/// Edge list of the eight-node example: a complete graph on the first class
/// plus one triangle hanging off each of two of its nodes into the second
/// class.
pub const EIGHT_NODE_EDGES: [(u32, u32); 12] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 2),
    (1, 3),
    (2, 3),
    (0, 4),
    (0, 5),
    (4, 5),
    (1, 6),
    (1, 7),
    (6, 7),
];

/// Filled triangles of the eight-node example.
pub const EIGHT_NODE_TRIANGLES: [(u32, u32, u32); 3] = [(0, 1, 2), (0, 2, 3), (0, 4, 5)];

/// An 8-node complex with a balanced two-class split (nodes 0-3 vs 4-7)
/// whose group structure mirrors its edge structure exactly:
///
/// * 6 closed triangles, 4 of them homogeneous (skeleton baseline 2/3);
/// * 3 filled triangles, 2 of them homogeneous (affinity 2/3);
/// * node baseline for triples 1/7.
///
/// The triangle homophily score against the node baseline is therefore
/// (2/3)/(1/7) = 14/3, while the 2-simplicial score is exactly 1: the
/// filled triangles are homogeneous precisely as often as a random
/// placement into the closed triangles would be.
pub fn eight_node_example() -> (SimplicialComplex, ClassLabeling) {
    let mut simplices: Vec<Simplex> = EIGHT_NODE_EDGES
        .iter()
        .map(|&(u, v)| Simplex::from_ids([u, v]).expect("static fixture"))
        .collect();
    simplices.extend(
        EIGHT_NODE_TRIANGLES
            .iter()
            .map(|&(a, b, c)| Simplex::from_ids([a, b, c]).expect("static fixture")),
    );
    let complex = SimplicialComplex::from_simplices(simplices).expect("static fixture");
    let labeling = ClassLabeling::new(vec![0, 0, 0, 0, 1, 1, 1, 1], 2).expect("static fixture");
    (complex, labeling)
}
