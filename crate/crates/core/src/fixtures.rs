//! Small named graphs used throughout the tests and examples.
//!
//! Vertices of the four-vertex fixtures are labeled `a, b, c, d` = `0, 1, 2, 3`.

use crate::graph::{Graph, GraphBuilder};
use crate::Vertex;

pub const A: Vertex = 0;
pub const B: Vertex = 1;
pub const C: Vertex = 2;
pub const D: Vertex = 3;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

/// `a - b - c - d`.
pub fn p4() -> Graph {
    path(4)
}

/// Triangle `{a, b, c}` with a pendant vertex `d` attached at `a`.
pub fn paw() -> Graph {
    Graph::from_edges(4, [(A, B), (B, C), (A, C), (A, D)]).unwrap()
}

pub fn k2() -> Graph {
    complete(2)
}

pub fn k4() -> Graph {
    complete(4)
}
