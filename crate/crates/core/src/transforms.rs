//! Local complementation, pivoting and the split/bipartite correspondence.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::grids::{x_grid, GridGraph};

/// Complement the subgraph induced by the neighbourhood of `v`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut h = g.clone();
    let nbhd = g.neighbor_list(v);
    for (i, &a) in nbhd.iter().enumerate() {
        for &b in &nbhd[i + 1..] {
            h.toggle_edge(a, b);
        }
    }
    Ok(h)
}

/// Pivot on the edge `uv`: complement every adjacency between two of the
/// sets `N(u) ∩ N(v)`, `N(u) \ N(v)` and `N(v) \ N(u)` (with `u`, `v`
/// themselves left out).
///
/// This agrees with `G*u*v*u` up to exchanging the names of `u` and `v`;
/// the result is checked against that route before it is returned.
pub fn pivot(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let by_sets = pivot_by_sets(g, u, v)?;
    let mut by_lc = pivot_by_local_complements(g, u, v)?;
    by_lc = swap_vertices(&by_lc, u, v);
    if by_sets != by_lc {
        return Err(Error::Internal(format!(
            "pivot on {u}-{v}: set complementation and local complementation disagree"
        )));
    }
    Ok(by_sets)
}

pub fn pivot_by_sets(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    // class 0: both, 1: only u, 2: only v
    let class: Vec<Option<u8>> = (0..g.order())
        .map(|w| {
            if w == u || w == v {
                return None;
            }
            match (g.has_edge(w, u), g.has_edge(w, v)) {
                (true, true) => Some(0),
                (true, false) => Some(1),
                (false, true) => Some(2),
                (false, false) => None,
            }
        })
        .collect();
    let mut h = g.clone();
    for a in 0..g.order() {
        for b in a + 1..g.order() {
            if let (Some(ca), Some(cb)) = (class[a], class[b]) {
                if ca != cb {
                    h.toggle_edge(a, b);
                }
            }
        }
    }
    Ok(h)
}

/// `G*u*v*u`, literally.
pub fn pivot_by_local_complements(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let h = local_complement(g, u)?;
    let h = local_complement(&h, v)?;
    local_complement(&h, u)
}

/// The same graph with the names of `a` and `b` exchanged.
pub fn swap_vertices(g: &Graph, a: usize, b: usize) -> Graph {
    let order: Vec<usize> = (0..g.order())
        .map(|w| if w == a { b } else if w == b { a } else { w })
        .collect();
    g.induced_subgraph(&order).unwrap()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotTrace {
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    pub steps: Vec<Graph>,
}

/// Apply pivots in order, keeping intermediate graphs if `keep` is set.
pub fn pivot_sequence(g: &Graph, edges: &[(usize, usize)], keep: bool) -> Result<(Graph, PivotTrace)> {
    let mut cur = g.clone();
    let mut trace = PivotTrace::default();
    for &(u, v) in edges {
        cur = pivot(&cur, u, v)?;
        trace.edges.push((u, v));
        if keep {
            trace.steps.push(cur.clone());
        }
    }
    Ok((cur, trace))
}

/// Bottom-row edges `(2t-1, 1)(2t, 1)` of the `2n`-column grid, right to
/// left.
pub fn x_to_y_schedule(n: usize) -> Vec<(usize, usize)> {
    let grid = x_grid(2 * n, 2 * n);
    (1..=n)
        .rev()
        .map(|t| (grid.vertex(2 * t - 1, 1), grid.vertex(2 * t, 1)))
        .collect()
}

/// Pivot `x_grid(2n, 2n)` along [`x_to_y_schedule`]; the result is
/// `y_grid(2n, 2n)` on the same coordinates.
pub fn pivot_x_to_y(n: usize) -> Result<(Graph, PivotTrace)> {
    assert!(n >= 1);
    pivot_sequence(&x_grid(2 * n, 2 * n).graph, &x_to_y_schedule(n), false)
}

/// The schedule run backwards, which undoes [`pivot_x_to_y`].
pub fn pivot_y_to_x(n: usize) -> Result<(Graph, PivotTrace)> {
    let mut schedule = x_to_y_schedule(n);
    schedule.reverse();
    pivot_sequence(&crate::grids::y_grid(2 * n, 2 * n).graph, &schedule, false)
}

/// A clique and an independent set covering the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitPartition {
    pub fn new(mut clique: Vec<usize>, mut independent: Vec<usize>) -> Self {
        clique.sort_unstable();
        independent.sort_unstable();
        SplitPartition { clique, independent }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut seen = vec![false; g.order()];
        for &v in self.clique.iter().chain(&self.independent) {
            if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidSplitPartition(format!("vertex {v} out of range or repeated")));
            }
        }
        if seen.contains(&false) {
            return Err(Error::InvalidSplitPartition("not every vertex is covered".into()));
        }
        if !g.is_clique(&self.clique) {
            return Err(Error::InvalidSplitPartition("clique side has a non-edge".into()));
        }
        if !g.is_independent(&self.independent) {
            return Err(Error::InvalidSplitPartition("independent side has an edge".into()));
        }
        Ok(())
    }

    /// Clique side as X.
    pub fn as_bipartition(&self) -> Bipartition {
        Bipartition::new(self.clique.clone(), self.independent.clone())
    }
}

/// `G*`: delete the edges inside the clique. The clique becomes side X.
pub fn split_to_bipartite(g: &Graph, p: &SplitPartition) -> Result<(Graph, Bipartition)> {
    p.validate(g)?;
    let mut h = g.clone();
    for (i, &a) in p.clique.iter().enumerate() {
        for &b in &p.clique[i + 1..] {
            h.remove_edge(a, b);
        }
    }
    Ok((h, p.as_bipartition()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// Turn side `side` of a bipartite graph into a clique.
pub fn bipartite_to_split(g: &Graph, b: &Bipartition, side: Side) -> Result<(Graph, SplitPartition)> {
    b.validate(g)?;
    let (clique, independent) = match side {
        Side::X => (&b.x, &b.y),
        Side::Y => (&b.y, &b.x),
    };
    let mut h = g.clone();
    for (i, &a) in clique.iter().enumerate() {
        for &c in &clique[i + 1..] {
            h.add_edge(a, c);
        }
    }
    Ok((h, SplitPartition::new(clique.clone(), independent.clone())))
}

/// Grid variant of [`pivot_x_to_y`] used where coordinates are wanted.
pub fn pivoted_grid(n: usize) -> Result<GridGraph> {
    let (graph, _) = pivot_x_to_y(n)?;
    Ok(GridGraph {
        graph,
        ..crate::grids::y_grid(2 * n, 2 * n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{x_grid, y_grid};
    use crate::named;
    use crate::small;

    #[test]
    fn local_complement_examples() {
        let p3 = named::path(3);
        assert_eq!(local_complement(&p3, 1).unwrap(), named::complete(3));
        assert_eq!(local_complement(&p3, 0).unwrap(), p3);
        assert!(local_complement(&p3, 3).is_err());
    }

    #[test]
    fn pivot_on_k2_and_non_edges() {
        let k2 = named::complete(2);
        assert_eq!(pivot(&k2, 0, 1).unwrap(), k2);
        assert!(matches!(pivot(&named::path(3), 0, 2), Err(Error::NotAnEdge { .. })));
    }

    #[test]
    fn both_pivot_routes_agree_exhaustively() {
        // every labelled graph on up to 5 vertices and every edge
        for n in 2..=5 {
            for g in small::labelled_graphs(n) {
                for (u, v) in g.edges().collect::<Vec<_>>() {
                    let p = pivot(&g, u, v).unwrap();
                    assert_eq!(p, pivot(&g, v, u).unwrap());
                    assert_eq!(pivot(&p, u, v).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn pivot_keeps_bipartite_graphs_bipartite() {
        for n in 2..=6 {
            for g in small::graphs(n).into_iter().filter(Graph::is_bipartite) {
                for (u, v) in g.edges().collect::<Vec<_>>() {
                    assert!(pivot(&g, u, v).unwrap().is_bipartite());
                }
            }
        }
    }

    #[test]
    fn x_to_y_small_cases() {
        let (g, trace) = pivot_x_to_y(1).unwrap();
        assert_eq!(g, x_grid(2, 2).graph);
        assert_eq!(trace.edges.len(), 1);
        for n in 1..=4 {
            assert_eq!(pivot_x_to_y(n).unwrap().0, y_grid(2 * n, 2 * n).graph);
            assert_eq!(pivot_y_to_x(n).unwrap().0, x_grid(2 * n, 2 * n).graph);
        }
    }

    #[test]
    fn split_transform_round_trip() {
        let c6 = named::cycle(6);
        let b = Bipartition::of(&c6).unwrap();
        let (s, p) = bipartite_to_split(&c6, &b, Side::Y).unwrap();
        let (back, bb) = split_to_bipartite(&s, &p).unwrap();
        assert_eq!(back, c6);
        assert_eq!(bb, b.swapped());
        assert!(split_to_bipartite(&c6, &SplitPartition::new(vec![0, 2], vec![1, 3, 4, 5])).is_err());
    }
}
