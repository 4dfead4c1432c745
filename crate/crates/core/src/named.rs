//! Small named graphs used throughout tests and examples.

use alloc::vec::Vec;

use crate::graph::{build_graph, Graph};

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    build_graph(n, &edges).expect("complete graph")
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build_graph(n, &edges).expect("cycle graph")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build_graph(n, &edges).expect("path graph")
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    build_graph(10, &edges).expect("petersen graph")
}

/// K3,3 with parts `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    build_graph(6, &edges).expect("k33")
}

/// Triangular prism: triangles `012`, `345` and rungs `i - i+3`.
pub fn prism() -> Graph {
    build_graph(
        6,
        &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
    )
    .expect("prism")
}

/// Two copies of K4 minus an edge (on `0..4` missing `0-3`, on `4..8` missing `4-7`)
/// joined by the edges `3-4` and `0-7`. Cubic and 2-connected, not 3-connected.
pub fn double_diamond() -> Graph {
    build_graph(
        8,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (4, 5),
            (4, 6),
            (5, 6),
            (5, 7),
            (6, 7),
            (3, 4),
            (0, 7),
        ],
    )
    .expect("double diamond")
}
