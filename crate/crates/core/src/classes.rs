//! Recognisers for chain, bichain, split and split permutation graphs.
//!
//! Each class is recognised two ways, once by forbidden induced subgraphs
//! and once structurally, and the public recognisers refuse to answer if
//! the two disagree.

use serde::Serialize;

use crate::embed::Matcher;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Embedding, Graph};
use crate::named;
use crate::transforms::{bipartite_to_split, Side, SplitPartition};

/// `x ⪯ y` iff `N(x) ⊆ N(y) ∪ {y}`.
pub fn below(g: &Graph, x: usize, y: usize) -> bool {
    let mut nx = g.neighbors(x).clone();
    nx.set(y, false);
    nx.is_subset(g.neighbors(y))
}

/// Size of a largest set of pairwise `⪯`-incomparable vertices.
///
/// Mutually comparable vertices are identified first; on the resulting
/// partial order the answer is the number of elements minus a maximum
/// matching between strictly comparable pairs.
pub fn dilworth_number(g: &Graph) -> usize {
    let n = g.order();
    let mut rep: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if let Some(u) = (0..v).find(|&u| rep[u] == u && below(g, u, v) && below(g, v, u)) {
            rep[v] = u;
        }
    }
    let elems: Vec<usize> = (0..n).filter(|&v| rep[v] == v).collect();
    let m = elems.len();
    let less: Vec<Vec<usize>> = elems
        .iter()
        .map(|&a| {
            (0..m)
                .filter(|&j| elems[j] != a && below(g, a, elems[j]))
                .collect()
        })
        .collect();
    // Kuhn's augmenting paths
    let mut owner: Vec<Option<usize>> = vec![None; m];
    fn augment(a: usize, less: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &b in &less[a] {
            if !seen[b] {
                seen[b] = true;
                if owner[b].is_none_or(|o| augment(o, less, seen, owner)) {
                    owner[b] = Some(a);
                    return true;
                }
            }
        }
        false
    }
    let mut matched = 0;
    for a in 0..m {
        let mut seen = vec![false; m];
        if augment(a, &less, &mut seen, &mut owner) {
            matched += 1;
        }
    }
    m - matched
}

fn nested(g: &Graph, x: usize, y: usize) -> bool {
    g.neighbors(x).is_subset(g.neighbors(y)) || g.neighbors(y).is_subset(g.neighbors(x))
}

/// The vertices of `part` ordered by neighbourhood inclusion, if their
/// neighbourhoods form a chain.
pub fn is_chain_part(g: &Graph, part: &[usize]) -> Option<Vec<usize>> {
    let mut order = part.to_vec();
    order.sort_by_key(|&v| (g.degree(v), v));
    order
        .windows(2)
        .all(|w| g.neighbors(w[0]).is_subset(g.neighbors(w[1])))
        .then_some(order)
}

/// Why a recogniser accepted or rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A forbidden graph, by name, and where it sits.
    Forbidden { name: String, embedding: Embedding },
    OddCycle { cycle: Vec<usize> },
    /// Pairwise incomparable neighbourhoods inside one part.
    Antichain { vertices: Vec<usize> },
    /// Each part covered by chains, each chain listed by inclusion.
    Chains {
        bipartition: Bipartition,
        x_chains: Vec<Vec<usize>>,
        y_chains: Vec<Vec<usize>>,
    },
    Split { partition: SplitPartition },
    SplitPermutation { partition: SplitPartition, dilworth: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub verdict: bool,
    pub witness: Witness,
}

fn find_forbidden(g: &Graph, forbidden: &[(&'static str, Graph)]) -> Option<(String, Embedding)> {
    forbidden.iter().find_map(|(name, h)| {
        Matcher::new(h, g).first().map(|e| (name.to_string(), e))
    })
}

/// Cover `part` with at most `k` chains (`k` is 1 or 2), or return an
/// antichain of size `k + 1`.
fn chains_of_part(g: &Graph, part: &[usize], k: usize) -> std::result::Result<Vec<Vec<usize>>, Vec<usize>> {
    assert!(k == 1 || k == 2, "only 1- and 2-chain covers are supported");
    let m = part.len();
    let incomparable = |a: usize, b: usize| !nested(g, part[a], part[b]);
    if k == 1 {
        for a in 0..m {
            if let Some(b) = (a + 1..m).find(|&b| incomparable(a, b)) {
                return Err(vec![part[a], part[b]]);
            }
        }
        return Ok(if m == 0 { Vec::new() } else { vec![is_chain_part(g, part).unwrap()] });
    }
    let mut conflict = Graph::empty(m);
    for a in 0..m {
        for b in a + 1..m {
            if incomparable(a, b) {
                conflict.add_edge(a, b);
            }
        }
    }
    match conflict.two_colouring() {
        Some(side) => {
            let pick = |s: bool| -> Vec<usize> { (0..m).filter(|&a| side[a] == s).map(|a| part[a]).collect() };
            Ok([pick(false), pick(true)]
                .into_iter()
                .filter(|c| !c.is_empty())
                .map(|c| is_chain_part(g, &c).expect("colour classes are chains"))
                .collect())
        }
        None => {
            // incomparability graphs are perfect, so an odd cycle means a triangle
            for a in 0..m {
                for b in conflict.neighbors(a).ones().filter(|&b| b > a) {
                    if let Some(c) = conflict.neighbors(b).ones().find(|&c| c > b && conflict.has_edge(a, c)) {
                        return Err(vec![part[a], part[b], part[c]]);
                    }
                }
            }
            unreachable!("non-bipartite incomparability graph without a triangle")
        }
    }
}

/// Whether both parts of `b` split into at most `k` chains (`k` = 1 or 2).
pub fn is_k_chain(g: &Graph, b: &Bipartition, k: usize) -> Result<Report> {
    b.validate(g)?;
    if !(1..=2).contains(&k) {
        return Err(Error::Input(format!("chain covers with {k} chains are not supported")));
    }
    let x = chains_of_part(g, &b.x, k);
    let y = chains_of_part(g, &b.y, k);
    Ok(match (x, y) {
        (Ok(x_chains), Ok(y_chains)) => Report {
            verdict: true,
            witness: Witness::Chains {
                bipartition: b.clone(),
                x_chains,
                y_chains,
            },
        },
        (Err(vertices), _) | (_, Err(vertices)) => Report {
            verdict: false,
            witness: Witness::Antichain { vertices },
        },
    })
}

/// Search the bipartitions of `g` for one whose parts are `k`-chain.
///
/// Isolated vertices are comparable with everything, so they are kept on
/// side X; more than `k` components with edges force an antichain of size
/// `k + 1` and fail at once.
pub fn k_chain_structure(g: &Graph, k: usize) -> Result<Report> {
    let Some(base) = g.two_colouring() else {
        return Ok(Report {
            verdict: false,
            witness: Witness::OddCycle {
                cycle: g.shortest_odd_cycle().unwrap(),
            },
        });
    };
    let big: Vec<Vec<usize>> = g.components().into_iter().filter(|c| c.len() > 1).collect();
    if big.len() > k {
        let vertices = big[..=k]
            .iter()
            .map(|c| *c.iter().find(|&&v| !base[v]).unwrap())
            .collect();
        return Ok(Report {
            verdict: false,
            witness: Witness::Antichain { vertices },
        });
    }
    let mut last = None;
    for flips in 0u32..1 << big.len() {
        let mut side = base.clone();
        for (c, comp) in big.iter().enumerate() {
            if flips >> c & 1 == 1 {
                for &v in comp {
                    side[v] = !side[v];
                }
            }
        }
        let report = is_k_chain(g, &Bipartition::from_sides(&side), k)?;
        if report.verdict {
            return Ok(report);
        }
        last = Some(report);
    }
    Ok(last.expect("at least one colouring is tried"))
}

pub fn forbidden_bichain() -> Vec<(&'static str, Graph)> {
    vec![("3K2", named::matching(3)), ("C6", named::cycle(6)), ("P7", named::path(7))]
}

/// Sun3: 3K2 with one side made a clique (a triangle with a pendant edge
/// at every corner).
pub fn sun3() -> Graph {
    let m = named::matching(3);
    let b = Bipartition::new(vec![0, 2, 4], vec![1, 3, 5]);
    bipartite_to_split(&m, &b, Side::X).unwrap().0
}

/// Co-sun3: C6 with one side made a clique.
pub fn co_sun3() -> Graph {
    let c = named::cycle(6);
    let b = Bipartition::of(&c).unwrap();
    bipartite_to_split(&c, &b, Side::X).unwrap().0
}

fn p7_split(side: Side) -> Graph {
    let p = named::path(7);
    let b = Bipartition::new(vec![0, 2, 4, 6], vec![1, 3, 5]);
    bipartite_to_split(&p, &b, side).unwrap().0
}

/// P7 with its three inner vertices `1, 3, 5` made a clique.
pub fn rising_sun() -> Graph {
    p7_split(Side::Y)
}

/// P7 with its four vertices `0, 2, 4, 6` made a clique.
pub fn co_rising_sun() -> Graph {
    p7_split(Side::X)
}

pub fn forbidden_split_permutation() -> Vec<(&'static str, Graph)> {
    vec![
        ("2K2", named::matching(2)),
        ("C4", named::cycle(4)),
        ("C5", named::cycle(5)),
        ("Sun3", sun3()),
        ("Co-sun3", co_sun3()),
        ("Rising-sun", rising_sun()),
        ("Co-rising-sun", co_rising_sun()),
    ]
}

pub fn forbidden_split() -> Vec<(&'static str, Graph)> {
    forbidden_split_permutation().into_iter().take(3).collect()
}

/// First forbidden bichain subgraph, or the odd cycle if `g` is not
/// bipartite.
pub fn bichain_by_forbidden(g: &Graph) -> Option<Witness> {
    if let Some(cycle) = g.shortest_odd_cycle() {
        return Some(Witness::OddCycle { cycle });
    }
    find_forbidden(g, &forbidden_bichain()).map(|(name, embedding)| Witness::Forbidden { name, embedding })
}

/// Bipartite and P7, C6, 3K2-free; cross-checked against the 2-chain cover.
pub fn is_bichain(g: &Graph) -> Result<Report> {
    let forbidden = bichain_by_forbidden(g);
    let chains = k_chain_structure(g, 2)?;
    if forbidden.is_none() != chains.verdict {
        return Err(Error::Internal(format!(
            "bichain recognisers disagree on {g:?}: forbidden-free {}, 2-chain {}",
            forbidden.is_none(),
            chains.verdict
        )));
    }
    Ok(match forbidden {
        Some(witness) => Report { verdict: false, witness },
        None => chains,
    })
}

/// Chain graphs: bipartite with a bipartition whose parts are chains.
pub fn is_chain_graph(g: &Graph) -> Result<Report> {
    k_chain_structure(g, 1)
}

/// Split partition from the degree sequence: with degrees `d_1 >= d_2 >= ...`
/// and `m` the largest `i` with `d_i >= i - 1`, the graph is split iff
/// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the top `m` vertices
/// form a clique.
pub fn split_by_degrees(g: &Graph) -> Option<SplitPartition> {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let d: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = (1..=n).filter(|&i| d[i - 1] >= i - 1).max().unwrap_or(0);
    let top: usize = d[..m].iter().sum();
    let bottom: usize = d[m..].iter().sum();
    (top == m * m.saturating_sub(1) + bottom)
        .then(|| SplitPartition::new(order[..m].to_vec(), order[m..].to_vec()))
}

/// A split partition, checked against the {2K2, C4, C5} characterisation.
pub fn is_split(g: &Graph) -> Result<Option<SplitPartition>> {
    let by_degrees = split_by_degrees(g);
    let forbidden = find_forbidden(g, &forbidden_split());
    if by_degrees.is_some() == forbidden.is_some() {
        return Err(Error::Internal(format!("split recognisers disagree on {g:?}")));
    }
    if let Some(p) = &by_degrees {
        p.validate(g)
            .map_err(|e| Error::Internal(format!("degree split partition invalid: {e}")))?;
    }
    Ok(by_degrees)
}

/// Every split partition of `g`, by brute force over clique sides.
pub fn split_partitions(g: &Graph) -> Vec<SplitPartition> {
    let n = g.order();
    assert!(n <= 20, "split partition enumeration is limited to 20 vertices");
    (0u32..1 << n)
        .filter_map(|mask| {
            let clique: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            let indep: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
            (g.is_clique(&clique) && g.is_independent(&indep)).then(|| SplitPartition::new(clique, indep))
        })
        .collect()
}

pub fn split_permutation_by_forbidden(g: &Graph) -> Option<(String, Embedding)> {
    find_forbidden(g, &forbidden_split_permutation())
}

/// Split with Dilworth number at most two.
pub fn split_permutation_by_dilworth(g: &Graph) -> bool {
    split_by_degrees(g).is_some() && dilworth_number(g) <= 2
}

pub fn is_split_permutation(g: &Graph) -> Result<Report> {
    let forbidden = split_permutation_by_forbidden(g);
    let split = is_split(g)?;
    let dilworth = dilworth_number(g);
    let structural = split.is_some() && dilworth <= 2;
    if forbidden.is_none() != structural {
        return Err(Error::Internal(format!(
            "split permutation recognisers disagree on {g:?}"
        )));
    }
    Ok(match (forbidden, split) {
        (Some((name, embedding)), _) => Report {
            verdict: false,
            witness: Witness::Forbidden { name, embedding },
        },
        (None, Some(partition)) => Report {
            verdict: true,
            witness: Witness::SplitPermutation { partition, dilworth },
        },
        (None, None) => unreachable!("structural test passed without a split partition"),
    })
}

/// Report form of [`is_split`].
pub fn split_report(g: &Graph) -> Result<Report> {
    Ok(match is_split(g)? {
        Some(partition) => Report {
            verdict: true,
            witness: Witness::Split { partition },
        },
        None => {
            let (name, embedding) = find_forbidden(g, &forbidden_split()).unwrap();
            Report {
                verdict: false,
                witness: Witness::Forbidden { name, embedding },
            }
        }
    })
}

/// Check a witness without trusting the recogniser that produced it.
pub fn witness_is_valid(g: &Graph, report: &Report) -> bool {
    let all_forbidden: Vec<(&str, Graph)> = forbidden_bichain()
        .into_iter()
        .chain(forbidden_split_permutation())
        .collect();
    match &report.witness {
        Witness::Forbidden { name, embedding } => {
            !report.verdict
                && all_forbidden
                    .iter()
                    .any(|(n, h)| n == name && embedding.is_induced(h, g))
        }
        Witness::OddCycle { cycle } => {
            cycle.len() % 2 == 1
                && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        }
        Witness::Antichain { vertices } => vertices.iter().enumerate().all(|(i, &a)| {
            vertices[i + 1..].iter().all(|&b| !nested(g, a, b))
        }),
        Witness::Chains {
            bipartition,
            x_chains,
            y_chains,
        } => {
            let covers = |part: &[usize], chains: &[Vec<usize>]| {
                let mut all: Vec<usize> = chains.concat();
                all.sort_unstable();
                all == part
                    && chains.iter().all(|c| {
                        c.windows(2)
                            .all(|w| g.neighbors(w[0]).is_subset(g.neighbors(w[1])))
                    })
            };
            bipartition.validate(g).is_ok()
                && covers(&bipartition.x, x_chains)
                && covers(&bipartition.y, y_chains)
        }
        Witness::Split { partition } => partition.validate(g).is_ok(),
        Witness::SplitPermutation { partition, dilworth } => {
            partition.validate(g).is_ok() && *dilworth <= 2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::are_isomorphic;
    use crate::grids::{chain_universal, s_graph, z_grid, zsplit_grid};
    use crate::transforms::split_to_bipartite;

    #[test]
    fn dilworth_examples() {
        assert_eq!(dilworth_number(&named::complete(5)), 1);
        assert_eq!(dilworth_number(&named::matching(2)), 2);
        assert_eq!(dilworth_number(&Graph::empty(4)), 1);
        assert!(dilworth_number(&zsplit_grid(4, 4).graph) <= 2);
    }

    #[test]
    fn chain_examples() {
        let (g, b) = chain_universal(5);
        assert!(is_k_chain(&g, &b, 1).unwrap().verdict);
        let z = z_grid(4, 4);
        let r = is_k_chain(&z.graph, &z.bipartition(), 2).unwrap();
        assert!(r.verdict && witness_is_valid(&z.graph, &r));
        let m = named::matching(3);
        let r = is_k_chain(&m, &Bipartition::of(&m).unwrap(), 2).unwrap();
        assert!(!r.verdict);
        assert!(matches!(&r.witness, Witness::Antichain { vertices } if vertices.len() == 3));
    }

    #[test]
    fn bichain_examples() {
        assert!(is_bichain(&z_grid(6, 6).graph).unwrap().verdict);
        let c6 = named::cycle(6);
        let r = is_bichain(&c6).unwrap();
        assert!(!r.verdict && witness_is_valid(&c6, &r));
        assert!(matches!(&r.witness, Witness::Forbidden { name, .. } if name == "C6"));
        for k in 1..=10 {
            assert!(is_bichain(&s_graph(k)).unwrap().verdict);
        }
        assert!(!is_bichain(&named::cycle(5)).unwrap().verdict);
    }

    #[test]
    fn split_examples() {
        assert!(is_split(&named::complete(4)).unwrap().is_some());
        assert!(is_split(&named::cycle(4)).unwrap().is_none());
        assert!(is_split(&Graph::empty(0)).unwrap().is_some());
        assert!(is_split_permutation(&zsplit_grid(4, 4).graph).unwrap().verdict);
        let r = is_split_permutation(&sun3()).unwrap();
        assert!(matches!(&r.witness, Witness::Forbidden { name, .. } if name == "Sun3"));
        assert!(is_split_permutation(&named::complete(6)).unwrap().verdict);
    }

    #[test]
    fn forbidden_split_graphs_are_split_and_map_back() {
        let cases = [
            (sun3(), named::matching(3)),
            (co_sun3(), named::cycle(6)),
            (rising_sun(), named::path(7)),
            (co_rising_sun(), named::path(7)),
        ];
        for (g, star) in cases {
            let p = is_split(&g).unwrap().unwrap();
            let (h, _) = split_to_bipartite(&g, &p).unwrap();
            assert!(are_isomorphic(&h, &star));
        }
        assert!(are_isomorphic(&rising_sun(), &co_rising_sun().complement()));
        assert!(!are_isomorphic(&rising_sun(), &co_rising_sun()));
    }
}
