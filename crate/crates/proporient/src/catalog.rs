//! Constructors for the small named graphs used throughout the tests and
//! examples.

use crate::graph::Graph;

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("complete graph is simple")
}

/// Cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle is simple")
}

/// Path P_n on n vertices (n - 1 edges).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path is simple")
}

/// Star K_{1,t} with center 0 and `t` leaves.
pub fn star(t: usize) -> Graph {
    let edges: Vec<_> = (1..=t).map(|v| (0, v)).collect();
    Graph::new(t + 1, &edges).expect("star is simple")
}

/// Complete bipartite graph K_{a,b}; side X is 0..a, side Y is a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, &edges).expect("complete bipartite graph is simple")
}

/// The Petersen graph: outer 5-cycle 0..4, spokes, inner pentagram 5..9.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, &edges).expect("Petersen graph is simple")
}

/// Prism C_n x K_2 (3-regular on 2n vertices, n >= 3). `prism(3)` is the
/// 3-prism and `prism(4)` the cube.
pub fn prism(n: usize) -> Graph {
    assert!(n >= 3, "a prism needs rings of at least 3 vertices");
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..n {
        edges.push((i, (i + 1) % n));
        edges.push((n + i, n + (i + 1) % n));
        edges.push((i, n + i));
    }
    Graph::new(2 * n, &edges).expect("prism is simple")
}

/// Moebius ladder on 2n vertices: C_{2n} plus the n long chords. `moebius_ladder(4)`
/// is the Wagner graph V8 (3-regular, non-bipartite).
pub fn moebius_ladder(n: usize) -> Graph {
    assert!(n >= 2, "a Moebius ladder needs at least 4 vertices");
    let m = 2 * n;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 0..m {
        edges.push((i, (i + 1) % m));
    }
    for i in 0..n {
        edges.push((i, i + n));
    }
    Graph::new(m, &edges).expect("Moebius ladder is simple")
}
