//! The simple graph value used everywhere in the crate.
//!
//! Vertices are always `0..n`. Adjacency is stored as one bitset row per
//! vertex, kept symmetric and loop-free by every constructor.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbor_list(&self, v: usize) -> Vec<usize> {
        self.rows[v].ones().collect()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].set(v, false);
        self.rows[v].set(u, false);
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.rows[u].toggle(v);
        self.rows[v].toggle(u);
    }

    /// Adjacency rows packed into `u64` masks. Only for graphs on at most
    /// 64 vertices; the exact width and decomposition routines work on these.
    pub fn masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "mask view needs at most 64 vertices");
        self.rows
            .iter()
            .map(|r| r.ones().fold(0u64, |m, v| m | (1 << v)))
            .collect()
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        for &v in vertices {
            self.check_vertex(v)?;
            if seen.put(v) {
                return Err(Error::Input(format!("vertex {v} listed twice")));
            }
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut g = Graph::empty(shift + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.rows[u].ones() {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A proper 2-colouring (`false` = side X) in which the least vertex of
    /// every component is on side X, or `None` if the graph has an odd cycle.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let n = self.order();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for w in self.rows[u].ones() {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Vertices of a shortest odd cycle, in cycle order, or `None` when the
    /// graph is bipartite. A shortest odd cycle is always induced.
    pub fn shortest_odd_cycle(&self) -> Option<Vec<usize>> {
        let n = self.order();
        let mut best: Option<Vec<usize>> = None;
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            let mut found = None;
            'bfs: while let Some(u) = queue.pop_front() {
                for w in self.rows[u].ones() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if dist[w] == dist[u] && u < w {
                        found = Some((u, w));
                        break 'bfs;
                    }
                }
            }
            let Some((a, b)) = found else { continue };
            let len = 2 * dist[a] + 1;
            if best.as_ref().is_some_and(|c| c.len() <= len) {
                continue;
            }
            let path = |mut v: usize| {
                let mut p = vec![v];
                while v != root {
                    v = parent[v];
                    p.push(v);
                }
                p
            };
            let mut cycle = path(a);
            cycle.reverse();
            let mut back = path(b);
            back.pop();
            cycle.extend(back);
            // the BFS paths may merge before the root; only a simple cycle
            // of the minimal length is kept
            let mut sorted = cycle.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() == cycle.len() {
                best = Some(cycle);
            }
        }
        best
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Swap edges and non-edges between the two parts of `b`.
    pub fn bipartite_complement(&self, b: &Bipartition) -> Result<Graph> {
        b.validate(self)?;
        let mut g = Graph::empty(self.order());
        for &x in &b.x {
            for &y in &b.y {
                if !self.has_edge(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        Ok(g)
    }

    /// Degree sequence, sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Two disjoint independent sets covering the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    pub fn new(mut x: Vec<usize>, mut y: Vec<usize>) -> Self {
        x.sort_unstable();
        y.sort_unstable();
        Bipartition { x, y }
    }

    /// From a side vector, `false` meaning X.
    pub fn from_sides(sides: &[bool]) -> Self {
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for (v, &s) in sides.iter().enumerate() {
            if s {
                y.push(v)
            } else {
                x.push(v)
            }
        }
        Bipartition { x, y }
    }

    /// The canonical 2-colouring of a bipartite graph.
    pub fn of(g: &Graph) -> Option<Self> {
        g.two_colouring().map(|s| Bipartition::from_sides(&s))
    }

    pub fn swapped(&self) -> Self {
        Bipartition {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// `sides()[v]` is `true` when `v` lies in Y.
    pub fn sides(&self, n: usize) -> Vec<bool> {
        let mut s = vec![false; n];
        for &v in &self.y {
            s[v] = true;
        }
        s
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut seen = vec![false; n];
        for &v in self.x.iter().chain(&self.y) {
            g.check_vertex(v)
                .map_err(|_| Error::InvalidBipartition(format!("vertex {v} out of range")))?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidBipartition(format!("vertex {v} listed twice")));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidBipartition(format!("vertex {v} not covered")));
        }
        for part in [&self.x, &self.y] {
            for (i, &u) in part.iter().enumerate() {
                if let Some(&v) = part[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                    return Err(Error::InvalidBipartition(format!("edge {u}-{v} inside a part")));
                }
            }
        }
        Ok(())
    }

    /// Every proper 2-colouring of `g`: each component independently in
    /// either orientation. Empty if `g` is not bipartite.
    pub fn all_of(g: &Graph) -> Vec<Bipartition> {
        let Some(base) = g.two_colouring() else {
            return Vec::new();
        };
        let comps = g.components();
        assert!(comps.len() < 24, "too many components to enumerate colourings");
        (0u32..1 << comps.len())
            .map(|flips| {
                let mut s = base.clone();
                for (c, comp) in comps.iter().enumerate() {
                    if flips >> c & 1 == 1 {
                        for &v in comp {
                            s[v] = !s[v];
                        }
                    }
                }
                Bipartition::from_sides(&s)
            })
            .collect()
    }
}

/// An induced embedding: pattern vertex `i` goes to host vertex `map[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Embedding { map }
    }

    pub fn identity(n: usize) -> Self {
        Embedding {
            map: (0..n).collect(),
        }
    }

    pub fn pattern_order(&self) -> usize {
        self.map.len()
    }

    /// Host vertices hit, sorted.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }

    /// Injective, in range, and edge-preserving in both directions.
    pub fn is_induced(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(host.order());
        for &w in &self.map {
            if w >= host.order() || seen.put(w) {
                return false;
            }
        }
        (0..pattern.order()).all(|u| {
            (u + 1..pattern.order())
                .all(|v| pattern.has_edge(u, v) == host.has_edge(self.map[u], self.map[v]))
        })
    }

    /// `other ∘ self`: first this embedding, then `other`.
    pub fn then(&self, other: &Embedding) -> Embedding {
        Embedding {
            map: self.map.iter().map(|&w| other.map[w]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn induced_subgraph_of_c6_is_2k2() {
        let c6 = named::cycle(6);
        let h = c6.induced_subgraph(&[0, 1, 3, 4]).unwrap();
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn induced_subgraph_identity_and_empty() {
        let p = named::path(5);
        assert_eq!(p.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), p);
        assert_eq!(p.induced_subgraph(&[]).unwrap().order(), 0);
    }

    #[test]
    fn induced_subgraph_rejects_bad_vertices() {
        let p = named::path(3);
        assert!(matches!(
            p.induced_subgraph(&[0, 7]),
            Err(Error::InvalidVertex { vertex: 7, order: 3 })
        ));
        assert!(p.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert!(Graph::from_edges(2, [(1, 1)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn shortest_odd_cycle_is_induced() {
        let g = named::cycle(7).disjoint_union(&named::cycle(5));
        let cyc = g.shortest_odd_cycle().unwrap();
        assert_eq!(cyc.len(), 5);
        let h = g.induced_subgraph(&cyc).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(named::cycle(6).shortest_odd_cycle().is_none());
    }

    #[test]
    fn bipartite_complement_examples() {
        let (k23, b) = named::complete_bipartite(2, 3);
        assert_eq!(k23.bipartite_complement(&b).unwrap(), Graph::empty(5));
        let c6 = named::cycle(6);
        let b = Bipartition::of(&c6).unwrap();
        let m = c6.bipartite_complement(&b).unwrap();
        assert_eq!(m.edge_count(), 3);
        assert!((0..6).all(|v| m.degree(v) == 1));
        assert_eq!(m.bipartite_complement(&b).unwrap(), c6);
        assert!(named::path(3)
            .bipartite_complement(&Bipartition::new(vec![0, 1], vec![2]))
            .is_err());
    }

    #[test]
    fn bipartition_validation() {
        let p = named::path(3);
        assert!(Bipartition::new(vec![0, 2], vec![1]).validate(&p).is_ok());
        assert!(Bipartition::new(vec![0, 1], vec![2]).validate(&p).is_err());
        assert!(Bipartition::new(vec![0], vec![1]).validate(&p).is_err());
        assert_eq!(Bipartition::all_of(&p).len(), 2);
        assert!(Bipartition::all_of(&named::cycle(3)).is_empty());
    }
}
