//! Labelled embeddings, antichain certificates and the column-structure
//! checks on grid embeddings.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::is_canonically_prime;
use crate::embed::Matcher;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Embedding, Graph};
use crate::grids::{s_graph, x_grid, z_grid, GridGraph};
use crate::label::{LabelPoset, LabelledGraph};

/// An induced embedding of `h` into `g` in which every pattern label is
/// below the label it lands on.
pub fn labelled_embeds(h: &LabelledGraph, g: &LabelledGraph, poset: &LabelPoset) -> Result<Option<Embedding>> {
    h.check_labels(poset)?;
    g.check_labels(poset)?;
    let allowed = label_filter(h, g, poset);
    Ok(Matcher::new(&h.graph, &g.graph).restricted(&allowed).first())
}

fn label_filter(h: &LabelledGraph, g: &LabelledGraph, poset: &LabelPoset) -> Vec<FixedBitSet> {
    h.labels
        .iter()
        .map(|&a| {
            let mut s = FixedBitSet::with_capacity(g.graph.order());
            for (w, &b) in g.labels.iter().enumerate() {
                if poset.leq(a, b) {
                    s.insert(w);
                }
            }
            s
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntichainCertificate {
    /// `embeds[i][j]`: graph `i` labelled-embeds into graph `j`.
    pub embeds: Vec<Vec<bool>>,
    pub valid: bool,
}

pub fn verify_antichain(graphs: &[LabelledGraph], poset: &LabelPoset) -> Result<AntichainCertificate> {
    for g in graphs {
        g.check_labels(poset)?;
    }
    let m = graphs.len();
    let cells: Vec<bool> = (0..m * m)
        .into_par_iter()
        .map(|c| {
            let (i, j) = (c / m, c % m);
            let allowed = label_filter(&graphs[i], &graphs[j], poset);
            Matcher::new(&graphs[i].graph, &graphs[j].graph)
                .restricted(&allowed)
                .exists()
        })
        .collect();
    let embeds: Vec<Vec<bool>> = cells.chunks(m.max(1)).map(<[bool]>::to_vec).take(m).collect();
    let valid = (0..m).all(|i| (0..m).all(|j| i == j || !embeds[i][j]));
    Ok(AntichainCertificate { embeds, valid })
}

/// Host columns hit by `e`, given the host's coordinates.
pub fn columns_occupied(e: &Embedding, coords: Option<&[(usize, usize)]>) -> Result<BTreeSet<usize>> {
    let coords = coords.ok_or_else(|| Error::Input("host graph has no coordinates".into()))?;
    e.map
        .iter()
        .map(|&w| {
            coords
                .get(w)
                .map(|c| c.0)
                .ok_or_else(|| Error::Input(format!("vertex {w} has no coordinate")))
        })
        .collect()
}

pub fn is_interval(columns: &BTreeSet<usize>) -> bool {
    match (columns.first(), columns.last()) {
        (Some(a), Some(b)) => b - a + 1 == columns.len(),
        _ => true,
    }
}

/// Search `z_grid(width, rows)` for `rows = 1..=max_rows`; the first hit and
/// its row count.
pub fn embed_in_bounded_columns(g: &Graph, width: usize, max_rows: usize) -> Option<(usize, Embedding)> {
    (1..=max_rows).find_map(|rows| {
        Matcher::new(g, &z_grid(width, rows).graph)
            .first()
            .map(|e| (rows, e))
    })
}

/// Default row bound for [`embed_in_bounded_columns`].
pub fn default_max_rows(g: &Graph) -> usize {
    (2 * g.order()).max(1)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ColumnStructureReport {
    pub checked: usize,
    pub failures: usize,
    pub first_failure: Option<Embedding>,
    /// Stopped at the budget rather than exhausting the embeddings.
    pub truncated: bool,
}

impl ColumnStructureReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Whether the image of `e` (an embedding of `x_grid(n, rows)` into `host`)
/// contains a copy of `x_grid(n, n)` spread over `n` consecutive host
/// columns, one pattern column per host column, in either direction.
pub fn has_aligned_square(n: usize, e: &Embedding, host: &GridGraph) -> bool {
    let square = x_grid(n, n);
    let image: Vec<usize> = e.image();
    (1..=host.cols.saturating_sub(n - 1)).any(|start| {
        [false, true].into_iter().any(|reversed| {
            let allowed: Vec<FixedBitSet> = (0..square.graph.order())
                .map(|v| {
                    let t = square.coord(v).0;
                    let col = if reversed { start + n - t } else { start + t - 1 };
                    let mut s = FixedBitSet::with_capacity(host.graph.order());
                    for &w in &image {
                        if host.coord(w).0 == col {
                            s.insert(w);
                        }
                    }
                    s
                })
                .collect();
            Matcher::new(&square.graph, &host.graph).restricted(&allowed).exists()
        })
    })
}

/// Enumerate up to `budget` embeddings of `x_grid(n, 4n - 1)` into
/// `x_grid(cols, rows)` and check each with [`has_aligned_square`].
pub fn x_embedding_column_structure(n: usize, cols: usize, rows: usize, budget: usize) -> ColumnStructureReport {
    let pattern = x_grid(n, 4 * n - 1);
    let host = x_grid(cols, rows);
    let mut report = ColumnStructureReport::default();
    report.truncated = Matcher::new(&pattern.graph, &host.graph).for_each(|e| {
        if report.checked >= budget {
            return ControlFlow::Break(());
        }
        report.checked += 1;
        if !has_aligned_square(n, e, &host) {
            report.failures += 1;
            report.first_failure.get_or_insert_with(|| e.clone());
        }
        ControlFlow::Continue(())
    });
    report
}

/// Check that every embedding of `g` into `host` occupies an interval of
/// columns; the first offending embedding is returned.
pub fn all_embeddings_on_intervals(g: &Graph, host: &GridGraph) -> (usize, Option<Embedding>) {
    let coords = host.coords();
    let mut count = 0;
    let mut bad = None;
    Matcher::new(g, &host.graph).for_each(|e| {
        count += 1;
        if !is_interval(&columns_occupied(e, Some(&coords)).unwrap()) {
            bad = Some(e.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    (count, bad)
}

/// Connected bipartite graphs that are canonically prime, from a list.
pub fn canonically_prime(graphs: &[Graph]) -> Vec<Graph> {
    graphs
        .iter()
        .filter(|g| {
            Bipartition::of(g).is_some_and(|b| g.is_connected() && is_canonically_prime(g, &b).unwrap())
        })
        .cloned()
        .collect()
}

/// The pair index `i` of an `S_k` vertex (`x_i` or `y_i`).
pub fn pair_of(v: usize) -> usize {
    v / 2 + 1
}

/// Whether `e` (an embedding of `s_graph(j)` into `s_graph(k)`) sends each
/// pair `{x_i, y_i}` onto a pair `{x_t, y_t}` and consecutive pairs onto
/// consecutive pairs.
pub fn on_consecutive_pairs(j: usize, e: &Embedding) -> bool {
    let pairs: Vec<Option<usize>> = (1..=j)
        .map(|i| {
            let (a, b) = (e.map[2 * (i - 1)], e.map[2 * (i - 1) + 1]);
            (pair_of(a) == pair_of(b) && a != b).then(|| pair_of(a))
        })
        .collect();
    if pairs.iter().any(Option::is_none) {
        return false;
    }
    let p: Vec<usize> = pairs.into_iter().map(Option::unwrap).collect();
    let up = p.windows(2).all(|w| w[1] == w[0] + 1);
    let down = p.windows(2).all(|w| w[0] == w[1] + 1);
    up || down
}

/// The first embedding of `s_graph(j)` into `s_graph(k)` that does not sit
/// on consecutive pairs, and how many embeddings were examined.
pub fn s_embedding_counterexample(j: usize, k: usize) -> (usize, Option<Embedding>) {
    let (sj, sk) = (s_graph(j), s_graph(k));
    let mut count = 0;
    let mut bad = None;
    Matcher::new(&sj, &sk).for_each(|e| {
        count += 1;
        if !on_consecutive_pairs(j, e) {
            bad = Some(e.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    (count, bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{chain_universal, s_circ, t_circ};
    use crate::label::LabelPoset;
    use crate::named;

    #[test]
    fn labelled_examples() {
        let p = LabelPoset::black_white();
        let s5 = s_circ(5);
        assert!(labelled_embeds(&s5, &s5, &p).unwrap().is_some());
        assert!(labelled_embeds(&s_circ(3), &s5, &p).unwrap().is_none());
        let t = LabelPoset::trivial();
        let plain = |k| LabelledGraph::uniform(s_graph(k));
        assert!(labelled_embeds(&plain(3), &plain(5), &t).unwrap().is_some());
    }

    #[test]
    fn antichain_examples() {
        let p = LabelPoset::black_white();
        let s: Vec<LabelledGraph> = (3..=6).map(s_circ).collect();
        assert!(verify_antichain(&s, &p).unwrap().valid);
        let t: Vec<LabelledGraph> = (3..=5).map(t_circ).collect();
        assert!(verify_antichain(&t, &p).unwrap().valid);
        let twice = vec![s_circ(4), s_circ(4)];
        assert!(!verify_antichain(&twice, &p).unwrap().valid);
    }

    #[test]
    fn interval_examples() {
        let z = z_grid(3, 3);
        let cols = columns_occupied(&Embedding::identity(9), Some(&z.coords())).unwrap();
        assert_eq!(cols, BTreeSet::from([1, 2, 3]));
        assert!(is_interval(&cols));
        assert!(!is_interval(&BTreeSet::from([1, 3])));
        assert!(columns_occupied(&Embedding::identity(1), None).is_err());
    }

    #[test]
    fn bounded_columns_examples() {
        assert!(embed_in_bounded_columns(&chain_universal(3).0, 2, 6).is_some());
        let (rows, _) = embed_in_bounded_columns(&Graph::empty(4), 1, 8).unwrap();
        assert_eq!(rows, 4);
        assert!(embed_in_bounded_columns(&named::cycle(3), 4, 4).is_none());
    }

    #[test]
    fn aligned_squares_small() {
        let r = x_embedding_column_structure(1, 3, 4, 1000);
        assert!(r.passed() && r.checked > 0);
        let host = x_grid(4, 9);
        let pattern = x_grid(2, 7);
        let ident = Embedding::new(
            (0..pattern.graph.order())
                .map(|v| {
                    let (c, r) = pattern.coord(v);
                    host.vertex(c, r)
                })
                .collect(),
        );
        assert!(ident.is_induced(&pattern.graph, &host.graph));
        assert!(has_aligned_square(2, &ident, &host));
    }

    #[test]
    fn matchings_in_s5_beyond_consecutive_pairs() {
        let s5 = s_graph(5);
        let two = named::matching(2);
        let mut images: BTreeSet<Vec<usize>> = BTreeSet::new();
        Matcher::new(&two, &s5).for_each(|e| {
            let mut im = e.image();
            im.sort_unstable();
            images.insert(im);
            ControlFlow::Continue(())
        });
        // oracle: 4-subsets with exactly two disjoint edges
        let mut scan = BTreeSet::new();
        for mask in 0u32..1 << 10 {
            if mask.count_ones() != 4 {
                continue;
            }
            let vs: Vec<usize> = (0..10).filter(|&v| mask >> v & 1 == 1).collect();
            let h = s5.induced_subgraph(&vs).unwrap();
            if h.edge_count() == 2 && h.degree_sequence().iter().all(|&d| d == 1) {
                scan.insert(vs);
            }
        }
        assert_eq!(images, scan);
        for i in 0..4 {
            assert!(images.contains(&vec![2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3]));
        }
        // x1 y3 and x2 y2 form a copy across non-consecutive pairs
        assert!(images.contains(&vec![0, 2, 3, 5]));
        assert!(images.len() > 4);
    }
}
