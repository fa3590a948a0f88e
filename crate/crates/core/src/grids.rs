//! The grid families and their relatives.
//!
//! Grid vertex `(i, j)` (column `i` in `1..=cols`, row `j` in `1..=rows`,
//! row 1 at the bottom) has index `(i - 1) * rows + (j - 1)`, so columns are
//! contiguous blocks of indices.
//!
//! In the antichain graphs `S_k` and `T_k`, `x_i` is vertex `2(i - 1)` and
//! `y_i` is vertex `2(i - 1) + 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Embedding, Graph};
use crate::label::{LabelledGraph, BLACK, WHITE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    X,
    Y,
    Z,
    ZSplit,
}

impl Family {
    /// Whether grid vertices `a` and `b` (as `(column, row)`) are adjacent.
    pub fn adjacent(self, a: (usize, usize), b: (usize, usize)) -> bool {
        if a == b {
            return false;
        }
        let ((i, j), (i2, j2)) = if a.0 <= b.0 { (a, b) } else { (b, a) };
        let odd = i % 2 == 1;
        let next = i2 == i + 1;
        let diagonal = !odd && i2 % 2 == 1 && i2 >= i + 3;
        match self {
            Family::X => next && j >= j2,
            Family::Z => (odd && next && j > j2) || (!odd && next && j <= j2) || diagonal,
            Family::Y => {
                (odd && next && j >= j2)
                    || (!odd && next && j < j2)
                    || diagonal
                    || (i2 % 2 == 1 && i2 >= 3 && next && j2 == 1)
            }
            Family::ZSplit => Family::Z.adjacent(a, b) || (!odd && i2 % 2 == 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::ZSplit => "zsplit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridGraph {
    pub graph: Graph,
    pub family: Family,
    pub cols: usize,
    pub rows: usize,
}

impl GridGraph {
    pub fn new(family: Family, cols: usize, rows: usize) -> Self {
        assert!(cols >= 1 && rows >= 1, "grids need at least one row and column");
        let mut graph = Graph::empty(cols * rows);
        let coords: Vec<(usize, usize)> = (0..cols * rows).map(|v| (v / rows + 1, v % rows + 1)).collect();
        for u in 0..coords.len() {
            for v in u + 1..coords.len() {
                if family.adjacent(coords[u], coords[v]) {
                    graph.add_edge(u, v);
                }
            }
        }
        GridGraph {
            graph,
            family,
            cols,
            rows,
        }
    }

    pub fn vertex(&self, col: usize, row: usize) -> usize {
        assert!((1..=self.cols).contains(&col) && (1..=self.rows).contains(&row));
        (col - 1) * self.rows + (row - 1)
    }

    pub fn coord(&self, v: usize) -> (usize, usize) {
        (v / self.rows + 1, v % self.rows + 1)
    }

    pub fn coords(&self) -> Vec<(usize, usize)> {
        (0..self.graph.order()).map(|v| self.coord(v)).collect()
    }

    pub fn column(&self, col: usize) -> Vec<usize> {
        (1..=self.rows).map(|r| self.vertex(col, r)).collect()
    }

    /// Odd columns on side X, even columns on side Y.
    pub fn bipartition(&self) -> Bipartition {
        let sides: Vec<bool> = (0..self.graph.order())
            .map(|v| self.coord(v).0 % 2 == 0)
            .collect();
        Bipartition::from_sides(&sides)
    }
}

/// `m` columns, `n` rows; `x_{i,j} ~ x_{i+1,j'}` iff `j >= j'`.
pub fn x_grid(m: usize, n: usize) -> GridGraph {
    GridGraph::new(Family::X, m, n)
}

pub fn y_grid(n: usize, k: usize) -> GridGraph {
    GridGraph::new(Family::Y, n, k)
}

pub fn z_grid(n: usize, k: usize) -> GridGraph {
    GridGraph::new(Family::Z, n, k)
}

/// `z_grid` with all even-column vertices made pairwise adjacent.
pub fn zsplit_grid(n: usize, k: usize) -> GridGraph {
    GridGraph::new(Family::ZSplit, n, k)
}

/// The chain graph with `a_k ~ b_j` iff `k >= j`. `a_k` is vertex `k - 1`,
/// `b_j` is vertex `n + j - 1`; the `a`s form side X.
pub fn chain_universal(n: usize) -> (Graph, Bipartition) {
    assert!(n >= 1);
    let edges = (1..=n).flat_map(|k| (1..=k).map(move |j| (k - 1, n + j - 1)));
    let g = Graph::from_edges(2 * n, edges).unwrap();
    (g, Bipartition::new((0..n).collect(), (n..2 * n).collect()))
}

pub fn s_x(i: usize) -> usize {
    2 * (i - 1)
}

pub fn s_y(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// `x_i ~ y_j` iff `j == i` or `j >= i + 2`.
pub fn s_graph(k: usize) -> Graph {
    assert!(k >= 1);
    let edges = (1..=k).flat_map(|i| {
        (1..=k)
            .filter(move |&j| j == i || j >= i + 2)
            .map(move |j| (s_x(i), s_y(j)))
    });
    Graph::from_edges(2 * k, edges).unwrap()
}

/// The x side of `s_graph` and then the y side.
pub fn s_bipartition(k: usize) -> Bipartition {
    Bipartition::new((1..=k).map(s_x).collect(), (1..=k).map(s_y).collect())
}

/// `s_graph(k)` with the x side turned into a clique.
pub fn t_graph(k: usize) -> Graph {
    let mut g = s_graph(k);
    for a in 1..=k {
        for b in a + 1..=k {
            g.add_edge(s_x(a), s_x(b));
        }
    }
    g
}

fn end_pairs_white(g: Graph, k: usize) -> LabelledGraph {
    let mut labels = vec![BLACK; 2 * k];
    for v in [s_x(1), s_y(1), s_x(k), s_y(k)] {
        labels[v] = WHITE;
    }
    LabelledGraph::new(g, labels).unwrap()
}

/// `s_graph(k)` with `x_1, y_1, x_k, y_k` white and the rest black, over
/// [`crate::label::LabelPoset::black_white`].
pub fn s_circ(k: usize) -> LabelledGraph {
    end_pairs_white(s_graph(k), k)
}

pub fn t_circ(k: usize) -> LabelledGraph {
    end_pairs_white(t_graph(k), k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossDirection {
    ZIntoY,
    YIntoZ,
}

/// An induced embedding of `z_grid(n, n)` into `y_grid(2n, 2n)` avoiding the
/// bottom row, or of `y_grid(n, n)` into `z_grid(2n, 2n)`.
///
/// Z into Y: `z(i, j) -> y(i, i + j)`.
/// Y into Z: `y(c, j) -> z(c, n - c + j)` for `j >= 2`; the bottom vertex of
/// an even column stays at `z(c, 1)` and that of an odd column moves to
/// `z(c + 2, 1)`.
pub fn zy_cross_embedding(n: usize, direction: CrossDirection) -> Result<Embedding> {
    assert!(n >= 1);
    let (pattern, host, map) = match direction {
        CrossDirection::ZIntoY => {
            let (z, y) = (z_grid(n, n), y_grid(2 * n, 2 * n));
            let map = (0..z.graph.order())
                .map(|v| {
                    let (i, j) = z.coord(v);
                    y.vertex(i, i + j)
                })
                .collect();
            (z, y, map)
        }
        CrossDirection::YIntoZ => {
            let (y, z) = (y_grid(n, n), z_grid(2 * n, 2 * n));
            let map = (0..y.graph.order())
                .map(|v| match y.coord(v) {
                    _ if n == 1 => z.vertex(1, 1),
                    (c, 1) if c % 2 == 0 => z.vertex(c, 1),
                    (c, 1) => z.vertex(c + 2, 1),
                    (c, j) => z.vertex(c, n - c + j),
                })
                .collect();
            (y, z, map)
        }
    };
    let e = Embedding::new(map);
    if !e.is_induced(&pattern.graph, &host.graph) {
        return Err(Error::Internal(format!(
            "cross embedding {direction:?} at n = {n} is not induced"
        )));
    }
    if direction == CrossDirection::ZIntoY && e.map.iter().any(|&w| host.coord(w).1 == 1) {
        return Err(Error::Internal(format!("cross embedding at n = {n} uses the bottom row")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_grid_orientation() {
        let g = x_grid(2, 2);
        let v = |i, j| g.vertex(i, j);
        assert!(g.graph.has_edge(v(2, 1), v(1, 1)) && g.graph.has_edge(v(2, 1), v(1, 2)));
        assert!(g.graph.has_edge(v(1, 1), v(2, 1)) && !g.graph.has_edge(v(1, 1), v(2, 2)));
        assert_eq!(x_grid(6, 6).graph.order(), 36);
        assert_eq!(x_grid(1, 5).graph.edge_count(), 0);
    }

    #[test]
    fn z_grid_diagonals_and_isolated_corner() {
        let g = z_grid(7, 6);
        for (a, b) in [(2, 5), (2, 7), (4, 7)] {
            for r in 1..=6 {
                for s in 1..=6 {
                    assert!(g.graph.has_edge(g.vertex(a, r), g.vertex(b, s)));
                }
            }
        }
        // no long edges leave an odd column to the right
        assert!(!g.graph.has_edge(g.vertex(3, 2), g.vertex(6, 2)));
        assert_eq!(g.graph.degree(g.vertex(1, 1)), 0);
        g.bipartition().validate(&g.graph).unwrap();
    }

    #[test]
    fn small_y_equals_small_x() {
        assert_eq!(y_grid(2, 2).graph, x_grid(2, 2).graph);
        assert_eq!(y_grid(2, 2).graph.edge_count(), 3);
        assert_eq!(y_grid(1, 4).graph.edge_count(), 0);
    }

    #[test]
    fn y_bottom_rule() {
        let g = y_grid(3, 3);
        for r in 1..=3 {
            assert!(g.graph.has_edge(g.vertex(3, 1), g.vertex(2, r)));
        }
    }

    #[test]
    fn zsplit_adds_even_clique() {
        let (z, s) = (z_grid(2, 2), zsplit_grid(2, 2));
        assert_eq!(s.graph.edge_count(), z.graph.edge_count() + 1);
        let s = zsplit_grid(5, 3);
        let evens: Vec<usize> = [2, 4].iter().flat_map(|&c| s.column(c)).collect();
        assert_eq!(evens.len(), 6);
        assert!(s.graph.is_clique(&evens));
    }

    #[test]
    fn chain_universal_counts() {
        assert_eq!(chain_universal(5).0.edge_count(), 15);
        assert_eq!(chain_universal(1).0, crate::named::complete(2));
    }

    #[test]
    fn s_graph_edges() {
        let g = s_graph(5);
        assert_eq!((g.order(), g.edge_count()), (10, 11));
        s_bipartition(5).validate(&g).unwrap();
        assert!(g.has_edge(s_x(1), s_y(3)) && !g.has_edge(s_x(1), s_y(2)));
        let white: Vec<usize> = (0..14).filter(|&v| s_circ(7).labels[v] == WHITE).collect();
        assert_eq!(white, vec![s_x(1), s_y(1), s_x(7), s_y(7)]);
    }

    #[test]
    fn t_graph_minus_clique_is_s_graph() {
        let mut t = t_graph(5);
        for a in 1..=5 {
            for b in a + 1..=5 {
                t.remove_edge(s_x(a), s_x(b));
            }
        }
        assert_eq!(t, s_graph(5));
    }

    #[test]
    fn cross_embeddings_validate() {
        for n in 1..=6 {
            zy_cross_embedding(n, CrossDirection::ZIntoY).unwrap();
            zy_cross_embedding(n, CrossDirection::YIntoZ).unwrap();
        }
    }
}
