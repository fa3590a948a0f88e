//! Canonical decomposition of bipartite graphs by disjoint union, join and
//! skew join.
//!
//! At every node the vertex set `W` is split in a fixed order: disjoint
//! union if `G[W]` is disconnected, join if its bipartite complement is
//! disconnected, skew join otherwise if one exists. Union and join split off
//! the component holding the least vertex. For skew joins, `A` may be the
//! left operand exactly when it is closed under the implications "`x ∈ A`
//! and `xy` a non-edge forces `y ∈ A`" and "`y ∈ A` and `xy` an edge forces
//! `x ∈ A`" (`x` in X, `y` in Y); the left operand taken is the set reached
//! from the least vertex whose reach is a proper subset of `W`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::transforms::{split_to_bipartite, SplitPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    /// No edges between the operands.
    Union,
    /// All of `X1 × Y2` and `X2 × Y1`.
    Join,
    /// All of `X1 × Y2` and nothing of `X2 × Y1`; the left operand is first.
    Skew,
}

impl Op {
    pub fn symbol(self) -> &'static str {
        match self {
            Op::Union => "+",
            Op::Join => "x",
            Op::Skew => "/",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf(usize),
    /// A canonically prime induced subgraph on two or more vertices, kept
    /// whole with its edges as `(x, y)` pairs.
    Prime {
        vertices: Vec<usize>,
        edges: Vec<(usize, usize)>,
    },
    Node {
        op: Op,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn vertices(&self) -> Vec<usize> {
        match self {
            DecompositionTree::Leaf(v) => vec![*v],
            DecompositionTree::Prime { vertices, .. } => vertices.clone(),
            DecompositionTree::Node { left, right, .. } => {
                let mut vs = left.vertices();
                vs.extend(right.vertices());
                vs.sort_unstable();
                vs
            }
        }
    }

    /// `{"op": "+", "children": [...]}` with leaves as vertex ids; a prime
    /// piece is `{"op": "prime", "children": [ids], "edges": [[x, y], ...]}`.
    pub fn to_json(&self) -> Value {
        match self {
            DecompositionTree::Leaf(v) => json!(v),
            DecompositionTree::Prime { vertices, edges } => {
                json!({"op": "prime", "children": vertices, "edges": edges})
            }
            DecompositionTree::Node { op, left, right } => {
                json!({"op": op.symbol(), "children": [left.to_json(), right.to_json()]})
            }
        }
    }

    pub fn op(&self) -> Option<Op> {
        match self {
            DecompositionTree::Node { op, .. } => Some(*op),
            _ => None,
        }
    }

    /// The prime pieces (single vertices included), left to right.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        match self {
            DecompositionTree::Leaf(v) => vec![vec![*v]],
            DecompositionTree::Prime { vertices, .. } => vec![vertices.clone()],
            DecompositionTree::Node { left, right, .. } => {
                let mut p = left.pieces();
                p.extend(right.pieces());
                p
            }
        }
    }
}

/// A bipartite graph on explicitly named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Pairs `(x, y)`.
    pub edges: Vec<(usize, usize)>,
}

impl Piece {
    pub fn single_x(v: usize) -> Piece {
        Piece {
            x: vec![v],
            y: vec![],
            edges: vec![],
        }
    }

    pub fn single_y(v: usize) -> Piece {
        Piece {
            x: vec![],
            y: vec![v],
            edges: vec![],
        }
    }

    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.x.iter().chain(&self.y).copied()
    }

    /// As a graph on `n` vertices.
    pub fn graph(&self, n: usize) -> Result<Graph> {
        Graph::from_edges(n, self.edges.iter().copied())
    }
}

pub fn compose(op: Op, a: &Piece, b: &Piece) -> Result<Piece> {
    if let Some(v) = a.vertices().find(|v| b.vertices().any(|w| w == *v)) {
        return Err(Error::Input(format!("vertex {v} appears in both operands")));
    }
    let mut edges: Vec<(usize, usize)> = a.edges.iter().chain(&b.edges).copied().collect();
    if op != Op::Union {
        edges.extend(a.x.iter().flat_map(|&x| b.y.iter().map(move |&y| (x, y))));
    }
    if op == Op::Join {
        edges.extend(b.x.iter().flat_map(|&x| a.y.iter().map(move |&y| (x, y))));
    }
    let cat = |p: &[usize], q: &[usize]| {
        let mut v = [p, q].concat();
        v.sort_unstable();
        v
    };
    edges.sort_unstable();
    Ok(Piece {
        x: cat(&a.x, &b.x),
        y: cat(&a.y, &b.y),
        edges,
    })
}

/// Rebuild the graph described by `tree`.
pub fn recompose(tree: &DecompositionTree, b: &Bipartition, n: usize) -> Result<Graph> {
    fn piece(t: &DecompositionTree, side: &[bool]) -> Result<Piece> {
        match t {
            DecompositionTree::Leaf(v) => Ok(if side[*v] {
                Piece::single_y(*v)
            } else {
                Piece::single_x(*v)
            }),
            DecompositionTree::Prime { vertices, edges } => {
                let (y, x): (Vec<usize>, Vec<usize>) = vertices.iter().partition(|&&v| side[v]);
                Ok(Piece {
                    x,
                    y,
                    edges: edges.clone(),
                })
            }
            DecompositionTree::Node { op, left, right } => {
                compose(*op, &piece(left, side)?, &piece(right, side)?)
            }
        }
    }
    piece(tree, &b.sides(n))?.graph(n)
}

struct Decomposer<'g> {
    g: &'g Graph,
    side: Vec<bool>,
}

impl Decomposer<'_> {
    fn cross(&self, a: usize, b: usize) -> bool {
        self.side[a] != self.side[b]
    }

    /// Components of the graph on `w` whose edges are the cross pairs with
    /// adjacency `want`.
    fn component_of_first(&self, w: &[usize], want: bool) -> Vec<usize> {
        let mut inside = vec![false; w.len()];
        inside[0] = true;
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..w.len() {
                if !inside[j] && self.cross(w[i], w[j]) && self.g.has_edge(w[i], w[j]) == want {
                    inside[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..w.len()).filter(|&j| inside[j]).map(|j| w[j]).collect()
    }

    /// Vertices of `w` forced into a left operand containing `w[start]`.
    fn reach(&self, w: &[usize], start: usize) -> Vec<usize> {
        let mut inside = vec![false; w.len()];
        inside[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let u = w[i];
            for j in 0..w.len() {
                let v = w[j];
                if inside[j] || !self.cross(u, v) {
                    continue;
                }
                let edge = self.g.has_edge(u, v);
                // x -> y along non-edges, y -> x along edges
                let forced = if self.side[u] { edge } else { !edge };
                if forced {
                    inside[j] = true;
                    stack.push(j);
                }
            }
        }
        (0..w.len()).filter(|&j| inside[j]).map(|j| w[j]).collect()
    }

    /// The top-level split of `w`, if any.
    fn split(&self, w: &[usize]) -> Option<(Op, Vec<usize>)> {
        if w.len() < 2 {
            return None;
        }
        for (op, want) in [(Op::Union, true), (Op::Join, false)] {
            let c = self.component_of_first(w, want);
            if c.len() < w.len() {
                return Some((op, c));
            }
        }
        (0..w.len())
            .map(|s| self.reach(w, s))
            .find(|a| a.len() < w.len())
            .map(|a| (Op::Skew, a))
    }

    fn decompose(&self, w: &[usize]) -> DecompositionTree {
        match self.split(w) {
            None if w.len() == 1 => DecompositionTree::Leaf(w[0]),
            None => {
                let mut edges = Vec::new();
                for &u in w {
                    for &v in w {
                        if !self.side[u] && self.side[v] && self.g.has_edge(u, v) {
                            edges.push((u, v));
                        }
                    }
                }
                DecompositionTree::Prime {
                    vertices: w.to_vec(),
                    edges,
                }
            }
            Some((op, a)) => {
                let b: Vec<usize> = w.iter().copied().filter(|v| a.binary_search(v).is_err()).collect();
                DecompositionTree::Node {
                    op,
                    left: Box::new(self.decompose(&a)),
                    right: Box::new(self.decompose(&b)),
                }
            }
        }
    }
}

/// Decompose `g` until every piece is a single vertex or canonically prime.
pub fn canonical_decompose(g: &Graph, b: &Bipartition) -> Result<DecompositionTree> {
    b.validate(g)?;
    if g.order() == 0 {
        return Err(Error::Input("cannot decompose the empty graph".into()));
    }
    let d = Decomposer {
        g,
        side: b.sides(g.order()),
    };
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(d.decompose(&all))
}

/// No top-level split exists; graphs on at most one vertex are prime.
pub fn is_canonically_prime(g: &Graph, b: &Bipartition) -> Result<bool> {
    b.validate(g)?;
    let d = Decomposer {
        g,
        side: b.sides(g.order()),
    };
    let all: Vec<usize> = (0..g.order()).collect();
    Ok(d.split(&all).is_none())
}

/// Decompose a split graph through its bipartite counterpart.
pub fn decompose_split(g: &Graph, p: &SplitPartition) -> Result<DecompositionTree> {
    let (star, b) = split_to_bipartite(g, p)?;
    canonical_decompose(&star, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn parts(g: &Graph) -> Bipartition {
        Bipartition::of(g).unwrap()
    }

    #[test]
    fn compose_examples() {
        let k2 = |a, b| Piece {
            x: vec![a],
            y: vec![b],
            edges: vec![(a, b)],
        };
        let two = compose(Op::Union, &k2(0, 1), &k2(2, 3)).unwrap();
        assert_eq!(two.graph(4).unwrap(), named::matching(2));
        let j = compose(Op::Join, &Piece::single_x(0), &Piece::single_y(1)).unwrap();
        assert_eq!(j.graph(2).unwrap(), named::complete(2));
        let one = compose(Op::Skew, &Piece::single_x(0), &Piece::single_y(1)).unwrap();
        let other = compose(Op::Skew, &Piece::single_y(1), &Piece::single_x(0)).unwrap();
        assert_eq!(one.edges, vec![(0, 1)]);
        assert!(other.edges.is_empty());
        assert!(compose(Op::Union, &Piece::single_x(0), &Piece::single_y(0)).is_err());
    }

    #[test]
    fn primality_examples() {
        let m = named::matching(2);
        assert!(!is_canonically_prime(&m, &parts(&m)).unwrap());
        let c6 = named::cycle(6);
        let b = parts(&c6);
        assert!(!is_canonically_prime(&c6, &b).unwrap());
        assert_eq!(canonical_decompose(&c6, &b).unwrap().op(), Some(Op::Join));
        let p7 = named::path(7);
        assert!(is_canonically_prime(&p7, &parts(&p7)).unwrap());
        assert!(is_canonically_prime(&Graph::empty(1), &parts(&Graph::empty(1))).unwrap());
    }

    #[test]
    fn recomposition_is_exact() {
        for g in [named::cycle(6), named::path(7), named::path(5).disjoint_union(&named::cycle(4))] {
            let b = parts(&g);
            let t = canonical_decompose(&g, &b).unwrap();
            assert_eq!(recompose(&t, &b, g.order()).unwrap(), g);
            assert_eq!(t.vertices(), (0..g.order()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn prime_pieces_stay_whole() {
        let p7 = named::path(7);
        let t = canonical_decompose(&p7, &parts(&p7)).unwrap();
        assert!(matches!(t, DecompositionTree::Prime { ref vertices, .. } if vertices.len() == 7));
        assert_eq!(t.to_json()["op"], "prime");
    }
}
