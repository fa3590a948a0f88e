//! Enumeration of small graphs up to isomorphism.
//!
//! The canonical form is the lexicographically largest upper-triangle code
//! over all vertex orders compatible with a colour-refined partition. That
//! is exponential in the worst case but fine below ten vertices, which is
//! all the exhaustive checks need.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Graphs up to this order have a canonical form.
pub const CANONICAL_LIMIT: usize = 16;

/// Stable colour refinement, seeded with degrees. Colour ids depend only on
/// isomorphism-invariant data.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).ones().map(|w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let classes = |c: &[usize]| {
            let mut d = c.to_vec();
            d.sort_unstable();
            d.dedup();
            d.len()
        };
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

/// Canonical code of `g`, plus the vertex order realising it.
pub fn canonical_form(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.order();
    assert!(n <= CANONICAL_LIMIT, "canonical form needs at most {CANONICAL_LIMIT} vertices");
    let colour = refine(g);
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colour[v]).or_default().push(v);
    }
    // slot i may hold any vertex of the cell covering position i
    let slots: Vec<Vec<usize>> = cells
        .values()
        .flat_map(|cell| std::iter::repeat_n(cell.clone(), cell.len()))
        .collect();
    let total_bits = n * n.saturating_sub(1) / 2;

    struct Search<'a> {
        g: &'a Graph,
        slots: &'a [Vec<usize>],
        total_bits: usize,
        order: Vec<usize>,
        used: Vec<bool>,
        best: Option<(u128, Vec<usize>)>,
    }
    impl Search<'_> {
        fn go(&mut self, code: u128, bits: usize) {
            let pos = self.order.len();
            if pos == self.slots.len() {
                if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                    self.best = Some((code, self.order.clone()));
                }
                return;
            }
            for i in 0..self.slots[pos].len() {
                let v = self.slots[pos][i];
                if self.used[v] {
                    continue;
                }
                let mut c = code;
                for &u in &self.order {
                    c = c << 1 | self.g.has_edge(u, v) as u128;
                }
                let nb = bits + pos;
                if let Some((best, _)) = &self.best {
                    let prefix = best >> (self.total_bits - nb);
                    if c < prefix {
                        continue;
                    }
                }
                self.used[v] = true;
                self.order.push(v);
                self.go(c, nb);
                self.order.pop();
                self.used[v] = false;
            }
        }
    }
    let mut s = Search {
        g,
        slots: &slots,
        total_bits,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    s.go(0, 0);
    s.best.unwrap_or((0, Vec::new()))
}

/// `g` relabelled into its canonical vertex order.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    g.induced_subgraph(&order).unwrap()
}

/// One representative of each isomorphism class on exactly `n` vertices,
/// sorted by canonical code.
pub fn graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive generation is limited to nine vertices");
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut next: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            for nbhd in 0u32..1 << (m - 1) {
                let mut h = Graph::empty(m);
                for (u, v) in g.edges() {
                    h.add_edge(u, v);
                }
                for u in 0..m - 1 {
                    if nbhd >> u & 1 == 1 {
                        h.add_edge(u, m - 1);
                    }
                }
                let (code, order) = canonical_form(&h);
                next.entry(code)
                    .or_insert_with(|| h.induced_subgraph(&order).unwrap());
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Representatives for every order `1..=max_n`.
pub fn graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(graphs).collect()
}

/// Every labelled graph on `n` vertices (`2^(n choose 2)` of them), ordered
/// by edge mask.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() < 32, "too many labelled graphs");
    (0u32..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// A `G(n, p)` random graph drawn from `rng`.
pub fn random_graph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::are_isomorphic;
    use crate::named;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=6).map(|n| graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_is_invariant() {
        let c = named::cycle(6);
        let shuffled = c.induced_subgraph(&[3, 0, 5, 1, 4, 2]).unwrap();
        assert_eq!(canonical_form(&c).0, canonical_form(&shuffled).0);
        assert_ne!(
            canonical_form(&named::path(4)).0,
            canonical_form(&named::claw()).0
        );
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let reps = graphs(5);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!are_isomorphic(a, b));
            }
        }
    }
}
