//! Small named graphs: paths, cycles, matchings and friends.

use crate::graph::{Bipartition, Graph};

/// `P_n`: the path on `n` vertices, `0 - 1 - ... - n-1`.
pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// `C_n` on `0..n` in cyclic order. Needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

/// `mK2`: edges `(2i, 2i+1)`.
pub fn matching(m: usize) -> Graph {
    Graph::from_edges(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1))).unwrap()
}

/// `K_{a,b}` with X = `0..a`, Y = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> (Graph, Bipartition) {
    let g = Graph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)))).unwrap();
    (g, Bipartition::new((0..a).collect(), (a..a + b).collect()))
}

/// `K_{1,3}`, centre 0.
pub fn claw() -> Graph {
    complete_bipartite(1, 3).0
}
