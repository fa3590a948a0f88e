//! Cut-rank over GF(2) and exact rank-width by subset dynamic programming.

use fixedbitset::FixedBitSet;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order accepted by [`rank_width`]; the table has `3^n`
/// work and `2^n` entries.
pub const RANK_WIDTH_LIMIT: usize = 14;

/// GF(2) rank of a set of 64-bit rows.
pub fn rank_u64(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut r in rows {
        while r != 0 {
            let top = 63 - r.leading_zeros() as usize;
            if basis[top] == 0 {
                basis[top] = r;
                rank += 1;
                break;
            }
            r ^= basis[top];
        }
    }
    rank
}

/// Rank of the adjacency matrix between `side` and the other vertices.
pub fn cut_rank(g: &Graph, side: &[usize]) -> Result<usize> {
    let n = g.order();
    let mut in_a = FixedBitSet::with_capacity(n);
    for &v in side {
        g.check_vertex(v)?;
        in_a.insert(v);
    }
    let mut outside = in_a.clone();
    outside.toggle_range(..);
    let mut rows: Vec<FixedBitSet> = in_a
        .ones()
        .map(|v| {
            let mut r = g.neighbors(v).clone();
            r.intersect_with(&outside);
            r
        })
        .collect();
    // plain elimination on bitset rows
    let mut rank = 0;
    for col in outside.ones() {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i].contains(col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row.contains(col) {
                row.symmetric_difference_with(&pivot);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

/// Cut-rank of `a` given adjacency masks, with `all` the full vertex mask.
pub fn cut_rank_mask(adj: &[u64], all: u64, a: u64) -> usize {
    let out = all & !a;
    rank_u64(BitIter(a).map(|v| adj[v] & out))
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A rooted binary tree whose leaves are the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitTree {
    Leaf(usize),
    Node(Box<SplitTree>, Box<SplitTree>),
}

impl SplitTree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<usize>) {
        match self {
            SplitTree::Leaf(v) => out.push(*v),
            SplitTree::Node(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }

    /// Leaves are numbers, internal nodes two-element arrays.
    pub fn to_json(&self) -> Value {
        match self {
            SplitTree::Leaf(v) => json!(v),
            SplitTree::Node(a, b) => json!([a.to_json(), b.to_json()]),
        }
    }
}

/// Largest cut-rank over the leaf sets of all non-root nodes of `tree`,
/// which must have every vertex as exactly one leaf.
pub fn layout_width(g: &Graph, tree: &SplitTree) -> Result<usize> {
    let mut leaves = tree.leaves();
    leaves.sort_unstable();
    if leaves != (0..g.order()).collect::<Vec<_>>() {
        return Err(Error::Input("layout leaves are not the vertex set".into()));
    }
    fn walk(g: &Graph, t: &SplitTree, root: bool, best: &mut usize) -> Result<()> {
        if !root {
            *best = (*best).max(cut_rank(g, &t.leaves())?);
        }
        if let SplitTree::Node(a, b) = t {
            walk(g, a, false, best)?;
            walk(g, b, false, best)?;
        }
        Ok(())
    }
    let mut best = 0;
    walk(g, tree, true, &mut best)?;
    Ok(best)
}

#[derive(Clone, Debug)]
pub struct RankWidth {
    pub width: usize,
    /// `None` for the empty graph.
    pub layout: Option<SplitTree>,
}

pub fn rank_width(g: &Graph) -> Result<RankWidth> {
    rank_width_with_limit(g, RANK_WIDTH_LIMIT)
}

pub fn rank_width_with_limit(g: &Graph, limit: usize) -> Result<RankWidth> {
    let n = g.order();
    if n > limit.min(26) {
        return Err(Error::Capacity {
            what: "rank-width vertex count",
            limit: limit.min(26),
            got: n,
        });
    }
    if n == 0 {
        return Ok(RankWidth {
            width: 0,
            layout: None,
        });
    }
    let adj = g.masks();
    let size = 1usize << n;
    let all = (size - 1) as u64;
    let mut best = vec![0u8; size];
    let mut choice = vec![0u32; size];
    for s in 1..size {
        let cr = cut_rank_mask(&adj, all, s as u64) as u8;
        if s.is_power_of_two() {
            best[s] = cr;
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut min = u8::MAX;
        let mut arg = 0;
        // A = low | sub for every proper submask `sub` of `rest`
        let mut sub = (rest - 1) & rest;
        loop {
            let a = low | sub;
            let w = best[a].max(best[s ^ a]);
            if w < min {
                min = w;
                arg = a;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[s] = cr.max(min);
        choice[s] = arg as u32;
    }
    fn build(s: usize, choice: &[u32]) -> SplitTree {
        if s.is_power_of_two() {
            return SplitTree::Leaf(s.trailing_zeros() as usize);
        }
        let a = choice[s] as usize;
        SplitTree::Node(Box::new(build(a, choice)), Box::new(build(s ^ a, choice)))
    }
    let full = size - 1;
    // a single vertex has no tree edges
    let width = if n == 1 { 0 } else { best[full] as usize };
    Ok(RankWidth {
        width,
        layout: Some(build(full, &choice)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cut_rank_examples() {
        let k5 = named::complete(5);
        assert_eq!(cut_rank(&k5, &[]).unwrap(), 0);
        assert_eq!(cut_rank(&k5, &[0, 3]).unwrap(), 1);
        assert_eq!(cut_rank(&named::cycle(4), &[0, 2]).unwrap(), 1);
        assert_eq!(cut_rank(&named::matching(3), &[0, 2, 4]).unwrap(), 3);
    }

    #[test]
    fn mask_and_bitset_ranks_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let mut g = Graph::empty(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        g.add_edge(u, v);
                    }
                }
            }
            let a: u64 = rng.gen_range(0..1u64 << n);
            let side: Vec<usize> = (0..n).filter(|v| a >> v & 1 == 1).collect();
            let other: Vec<usize> = (0..n).filter(|v| a >> v & 1 == 0).collect();
            let r = cut_rank(&g, &side).unwrap();
            assert_eq!(r, cut_rank_mask(&g.masks(), (1 << n) - 1, a));
            assert_eq!(r, cut_rank(&g, &other).unwrap());
        }
    }

    #[test]
    fn rank_width_examples() {
        assert_eq!(rank_width(&Graph::empty(1)).unwrap().width, 0);
        assert_eq!(rank_width(&Graph::empty(0)).unwrap().width, 0);
        for n in 2..=7 {
            assert_eq!(rank_width(&named::complete(n)).unwrap().width, 1);
        }
        assert_eq!(rank_width(&Graph::empty(5)).unwrap().width, 0);
        assert_eq!(rank_width(&named::cycle(5)).unwrap().width, 2);
        assert!(rank_width(&Graph::empty(15)).is_err());
    }

    #[test]
    fn layout_witness_achieves_the_width() {
        for g in [named::cycle(6), named::path(7), named::cycle(5).disjoint_union(&named::claw())] {
            let rw = rank_width(&g).unwrap();
            assert_eq!(layout_width(&g, rw.layout.as_ref().unwrap()).unwrap(), rw.width);
        }
    }
}
