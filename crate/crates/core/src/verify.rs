//! Named batteries of exhaustive checks, shared by the command line and the
//! acceptance tests.

use std::time::Instant;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{
    bichain_by_forbidden, dilworth_number, is_bichain, is_k_chain, is_split_permutation, k_chain_structure,
    split_by_degrees, split_partitions, split_permutation_by_forbidden,
};
use crate::decomposition::{canonical_decompose, is_canonically_prime, recompose};
use crate::embed::{find_embedding, Matcher};
use crate::error::Result;
use crate::graph::{Bipartition, Graph};
use crate::grids::{
    chain_universal, s_circ, s_graph, t_circ, x_grid, y_grid, z_grid, zsplit_grid, zy_cross_embedding, CrossDirection,
};
use crate::label::LabelPoset;
use crate::letters::{decodes_to, z_letter_encoding, zsplit_letter_encoding};
use crate::small::{graphs_up_to, random_graph};
use crate::transforms::{local_complement, pivot, pivot_x_to_y, pivot_y_to_x, split_to_bipartite};
use crate::width::{chain_3expression, clique_width, clique_width_at_most, rank_width, sandwich_holds};
use crate::wqo::{
    all_embeddings_on_intervals, canonically_prime, default_max_rows, embed_in_bounded_columns, s_embedding_counterexample,
    verify_antichain, x_embedding_column_structure,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub millis: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Size knob shared by all suites; `None` means the documented default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub max_n: Option<usize>,
}

pub struct Suite {
    pub name: &'static str,
    pub about: &'static str,
    run: fn(&Options) -> Vec<Check>,
}

impl Suite {
    pub fn run(&self, opts: &Options) -> SuiteReport {
        SuiteReport {
            suite: self.name.to_string(),
            checks: (self.run)(opts),
        }
    }
}

pub fn suites() -> &'static [Suite] {
    &SUITES
}

pub fn find_suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

static SUITES: [Suite; 14] = [
    Suite {
        name: "pivot-lemma",
        about: "pivoting X(2n,2n) along the bottom row gives Y(2n,2n), n = 1..5",
        run: pivot_lemma,
    },
    Suite {
        name: "zy-embedding",
        about: "explicit Z(n,n) -> Y(2n,2n) and Y(n,n) -> Z(2n,2n) embeddings, n = 2..4",
        run: zy_embedding,
    },
    Suite {
        name: "universality",
        about: "every bichain graph on at most 5 vertices embeds in Z(5,5)",
        run: universality,
    },
    Suite {
        name: "x-universality",
        about: "sampled 5-vertex induced subgraphs of X(10,10) embed in X(5,5)",
        run: x_universality,
    },
    Suite {
        name: "letters",
        about: "letter encodings decode to Z(n,k) for n,k <= 8 and Z*(n,k) for n,k <= 6",
        run: letters,
    },
    Suite {
        name: "rank-invariance",
        about: "rank-width is unchanged by every pivot and local complementation",
        run: rank_invariance,
    },
    Suite {
        name: "sandwich",
        about: "rwd <= cwd <= 2^(rwd+1) - 1 on all graphs up to 5 vertices and random 6-vertex graphs",
        run: sandwich,
    },
    Suite {
        name: "chain-cwd",
        about: "chain graphs have clique-width at most 3",
        run: chain_cwd,
    },
    Suite {
        name: "recognizers",
        about: "forbidden-subgraph and structural recognisers agree",
        run: recognizers,
    },
    Suite {
        name: "antichain",
        about: "labelled antichains of S_k and T_k, and how S_j sits inside S_k",
        run: antichain,
    },
    Suite {
        name: "column-intervals",
        about: "prime bichain graphs occupy consecutive columns of Z(6,6)",
        run: column_intervals,
    },
    Suite {
        name: "aligned-squares",
        about: "embeddings of X(2,7) in X(4,9) contain a column-aligned X(2,2)",
        run: aligned_squares,
    },
    Suite {
        name: "decomposition",
        about: "canonical decomposition recomposes exactly and primality matches brute force",
        run: decomposition,
    },
    Suite {
        name: "bounded-columns",
        about: "small prime bichain graphs without S_k fit in 2k columns",
        run: bounded_columns,
    },
];

fn check(name: impl Into<String>, f: impl FnOnce() -> Result<(bool, Option<String>)>) -> Check {
    let start = Instant::now();
    let (pass, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, Some(format!("error: {e}"))),
    };
    Check {
        name: name.into(),
        pass,
        millis: start.elapsed().as_millis(),
        detail,
    }
}

/// Isomorphism classes up to `n` vertices, as a capacity error past nine.
fn classes_up_to(n: usize) -> Result<Vec<Graph>> {
    if n > 9 {
        return Err(crate::Error::Capacity {
            what: "isomorphism class enumeration",
            limit: 9,
            got: n,
        });
    }
    Ok(graphs_up_to(n))
}

fn verdict(failures: Vec<String>, total: usize) -> Result<(bool, Option<String>)> {
    Ok(match failures.first() {
        None => (true, Some(format!("{total} cases"))),
        Some(first) => (false, Some(format!("{} of {total} failed; first: {first}", failures.len()))),
    })
}

fn pivot_lemma(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(5);
    (1..=max)
        .flat_map(|n| {
            [
                check(format!("x-to-y n={n}"), || {
                    let (g, _) = pivot_x_to_y(n)?;
                    Ok((g == y_grid(2 * n, 2 * n).graph, None))
                }),
                check(format!("y-to-x n={n}"), || {
                    let (g, _) = pivot_y_to_x(n)?;
                    Ok((g == x_grid(2 * n, 2 * n).graph, None))
                }),
            ]
        })
        .collect()
}

fn zy_embedding(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(4);
    let mut out = Vec::new();
    for n in 2..=max {
        out.push(check(format!("z-into-y n={n}"), || {
            let e = zy_cross_embedding(n, CrossDirection::ZIntoY)?;
            let (z, y) = (z_grid(n, n), y_grid(2 * n, 2 * n));
            let off_bottom = e.map.iter().all(|&w| y.coord(w).1 >= 2);
            Ok((e.is_induced(&z.graph, &y.graph) && off_bottom, None))
        }));
        out.push(check(format!("y-into-z n={n}"), || {
            let e = zy_cross_embedding(n, CrossDirection::YIntoZ)?;
            Ok((e.is_induced(&y_grid(n, n).graph, &z_grid(2 * n, 2 * n).graph), None))
        }));
    }
    out
}

fn universality(opts: &Options) -> Vec<Check> {
    let n = opts.max_n.unwrap_or(5);
    vec![check(format!("bichain graphs up to {n} vertices embed in Z({n},{n})"), || {
        let host = z_grid(n, n);
        let members: Vec<Graph> = classes_up_to(n)?
            .into_par_iter()
            .filter(|g| is_bichain(g).map(|r| r.verdict).unwrap_or(true))
            .collect();
        let failures: Vec<String> = members
            .par_iter()
            .filter(|g| find_embedding(g, &host.graph).is_none())
            .map(|g| format!("{g:?}"))
            .collect();
        verdict(failures, members.len())
    })]
}

fn x_universality(opts: &Options) -> Vec<Check> {
    let samples = opts.max_n.map_or(600, |n| n.max(1) * 100);
    vec![check(format!("{samples} sampled subsets"), || {
        let big = x_grid(10, 10);
        let small = x_grid(5, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let subsets: Vec<Vec<usize>> = (0..samples)
            .map(|_| {
                let mut s = sample(&mut rng, 100, 5).into_vec();
                s.sort_unstable();
                s
            })
            .collect();
        let failures: Vec<String> = subsets
            .par_iter()
            .filter(|s| {
                let h = big.graph.induced_subgraph(s).unwrap();
                find_embedding(&h, &small.graph).is_none()
            })
            .map(|s| format!("{s:?}"))
            .collect();
        verdict(failures, samples)
    })]
}

fn letters(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(8);
    let split_max = max.min(6);
    vec![
        check(format!("Z(n,k) for n,k <= {max}"), || {
            let mut failures = Vec::new();
            for n in 1..=max {
                for k in 1..=max {
                    if !decodes_to(&z_letter_encoding(n, k), &z_grid(n, k))? {
                        failures.push(format!("n={n} k={k}"));
                    }
                }
            }
            verdict(failures, max * max)
        }),
        check(format!("Z*(n,k) for n,k <= {split_max}"), || {
            let mut failures = Vec::new();
            for n in 1..=split_max {
                for k in 1..=split_max {
                    if !decodes_to(&zsplit_letter_encoding(n, k), &zsplit_grid(n, k))? {
                        failures.push(format!("n={n} k={k}"));
                    }
                }
            }
            verdict(failures, split_max * split_max)
        }),
    ]
}

/// Seeded random graphs on 2..=max_n vertices.
fn random_graphs(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.2..0.8);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

/// The first local complement or pivot of `g` with a different rank-width.
fn rank_changes(g: &Graph) -> Result<Option<String>> {
    let base = rank_width(g)?.width;
    for v in 0..g.order() {
        if rank_width(&local_complement(g, v)?)?.width != base {
            return Ok(Some(format!("{g:?} at vertex {v}")));
        }
    }
    for (u, v) in g.edges() {
        if rank_width(&pivot(g, u, v)?)?.width != base {
            return Ok(Some(format!("{g:?} on edge {u}-{v}")));
        }
    }
    Ok(None)
}

fn rank_invariance(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(7);
    vec![check(format!("200 random graphs up to {max} vertices"), || {
        let gs = random_graphs(41, 200, 2, max);
        let failures: Vec<String> = gs
            .par_iter()
            .filter_map(|g| rank_changes(g).unwrap_or_else(|e| Some(format!("{g:?}: {e}"))))
            .collect();
        verdict(failures, gs.len())
    })]
}

fn sandwich_failures(gs: &[Graph]) -> Vec<String> {
    gs.par_iter()
        .filter_map(|g| {
            let (rw, cw) = match (rank_width(g), clique_width(g)) {
                (Ok(r), Ok(c)) => (r.width, c.width),
                (Err(e), _) | (_, Err(e)) => return Some(format!("{g:?}: {e}")),
            };
            (!sandwich_holds(rw, cw)).then(|| format!("{g:?}: rwd {rw}, cwd {cw}"))
        })
        .collect()
}

fn sandwich(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(5);
    vec![
        check(format!("all graphs up to {max} vertices"), || {
            let gs = classes_up_to(max)?;
            verdict(sandwich_failures(&gs), gs.len())
        }),
        check("150 random 6-vertex graphs", || {
            let gs = random_graphs(6, 150, 6, 6);
            verdict(sandwich_failures(&gs), gs.len())
        }),
    ]
}

fn chain_cwd(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(12);
    vec![
        check(format!("3-expressions for n <= {max}"), || {
            let mut failures = Vec::new();
            for n in 1..=max {
                let e = chain_3expression(n);
                let (g, _) = e.term.evaluate()?;
                if g != chain_universal(n).0 || e.labels > 3 || (n >= 2 && e.labels != 3) {
                    failures.push(format!("n={n}"));
                }
            }
            verdict(failures, max)
        }),
        check("exact clique-width <= 3 for n <= 4", || {
            let mut failures = Vec::new();
            for n in 1..=4 {
                if clique_width_at_most(&chain_universal(n).0, 3, 8)?.is_none() {
                    failures.push(format!("n={n}"));
                }
            }
            verdict(failures, 4)
        }),
    ]
}

fn recognizers(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(7);
    let all = match classes_up_to(max) {
        Ok(all) => all,
        Err(e) => return vec![check(format!("graphs up to {max} vertices"), || Err(e))],
    };
    let split: Vec<Graph> = all.iter().filter(|g| split_by_degrees(g).is_some()).cloned().collect();
    let bipartite: Vec<Graph> = all.iter().filter(|g| g.is_bipartite()).cloned().collect();
    vec![
        check(format!("split graphs up to {max}: seven forbidden graphs vs Dilworth"), || {
            let failures: Vec<String> = split
                .par_iter()
                .filter(|g| split_permutation_by_forbidden(g).is_none() != (dilworth_number(g) <= 2))
                .map(|g| format!("{g:?}"))
                .collect();
            verdict(failures, split.len())
        }),
        check(format!("bipartite graphs up to {max}: forbidden graphs vs 2-chain covers"), || {
            let failures: Vec<String> = bipartite
                .par_iter()
                .filter_map(|g| {
                    let free = bichain_by_forbidden(g).is_none();
                    match k_chain_structure(g, 2) {
                        Ok(r) if r.verdict == free => {}
                        Ok(_) => return Some(format!("{g:?}")),
                        Err(e) => return Some(format!("{g:?}: {e}")),
                    }
                    Bipartition::all_of(g)
                        .iter()
                        .find(|b| is_k_chain(g, b, 2).map_or(true, |r| r.verdict != free))
                        .map(|b| format!("{g:?} with {b:?}"))
                })
                .collect();
            verdict(failures, bipartite.len())
        }),
        check(format!("split graphs up to {max}: split permutation vs bichain G*"), || {
            let failures: Vec<String> = split
                .par_iter()
                .filter_map(|g| {
                    let sp = match is_split_permutation(g) {
                        Ok(r) => r.verdict,
                        Err(e) => return Some(format!("{g:?}: {e}")),
                    };
                    for p in split_partitions(g) {
                        let star = match split_to_bipartite(g, &p) {
                            Ok((star, _)) => star,
                            Err(e) => return Some(format!("{g:?}: {e}")),
                        };
                        match is_bichain(&star) {
                            Ok(r) if r.verdict == sp => {}
                            Ok(_) => return Some(format!("{g:?} with {p:?}")),
                            Err(e) => return Some(format!("{g:?}: {e}")),
                        }
                    }
                    None
                })
                .collect();
            verdict(failures, split.len())
        }),
    ]
}

fn antichain(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(8);
    let poset = LabelPoset::black_white();
    let top = max.min(7);
    let consecutive = |lo: usize| {
        move || {
            let mut failures = Vec::new();
            let mut total = 0;
            for k in 2..=top {
                for j in lo..k {
                    let (count, bad) = s_embedding_counterexample(j, k);
                    total += count;
                    if let Some(e) = bad {
                        failures.push(format!("S_{j} into S_{k}: {:?}", e.map));
                    }
                }
            }
            verdict(failures, total)
        }
    };
    vec![
        check(format!("S_k labelled antichain, 3 <= k <= {max}"), || {
            let gs: Vec<_> = (3..=max).map(s_circ).collect();
            let cert = verify_antichain(&gs, &poset)?;
            Ok((cert.valid, None))
        }),
        check(format!("T_k labelled antichain, 3 <= k <= {}", max.min(6)), || {
            let gs: Vec<_> = (3..=max.min(6)).map(t_circ).collect();
            let cert = verify_antichain(&gs, &poset)?;
            Ok((cert.valid, None))
        }),
        check(format!("S_j embeds in S_k, j <= k <= {max}"), || {
            let mut failures = Vec::new();
            for k in 1..=max {
                for j in 1..=k {
                    if Matcher::new(&s_graph(j), &s_graph(k)).first().is_none() {
                        failures.push(format!("S_{j} into S_{k}"));
                    }
                }
            }
            verdict(failures, max * (max + 1) / 2)
        }),
        check(format!("all embeddings S_j -> S_k on consecutive pairs, 1 <= j < k <= {top}"), consecutive(1)),
        check(format!("all embeddings S_j -> S_k on consecutive pairs, 3 <= j < k <= {top}"), consecutive(3)),
    ]
}

fn column_intervals(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(6);
    // every bichain graph on at most six vertices but K1 is decomposable, so
    // a second pass two sizes up gives the check real cases
    [max, max + 2].into_iter().map(intervals_check).collect()
}

fn intervals_check(n: usize) -> Check {
    check(format!("prime bichain graphs up to {n} vertices in Z({n},{n})"), || {
        let host = z_grid(n, n);
        let bichain: Vec<Graph> = classes_up_to(n)?
            .into_par_iter()
            .filter(|g| g.is_bipartite() && is_bichain(g).map(|r| r.verdict).unwrap_or(false))
            .collect();
        let primes = canonically_prime(&bichain);
        let results: Vec<(usize, Option<String>)> = primes
            .par_iter()
            .map(|g| {
                let (count, bad) = all_embeddings_on_intervals(g, &host);
                (count, bad.map(|e| format!("{g:?} via {:?}", e.map)))
            })
            .collect();
        let total: usize = results.iter().map(|r| r.0).sum();
        let failures: Vec<String> = results.into_iter().filter_map(|r| r.1).collect();
        let (pass, detail) = verdict(failures, total)?;
        Ok((pass, detail.map(|d| format!("{} prime graphs; {d}", primes.len()))))
    })
}

fn aligned_squares(opts: &Options) -> Vec<Check> {
    let budget = opts.max_n.unwrap_or(100_000);
    vec![
        check("n=1, host X(3,4), all embeddings", || {
            let r = x_embedding_column_structure(1, 3, 4, usize::MAX);
            Ok((r.passed(), Some(format!("{} embeddings", r.checked))))
        }),
        check(format!("n=2, host X(4,9), first {budget} embeddings"), || {
            let r = x_embedding_column_structure(2, 4, 9, budget);
            let detail = match &r.first_failure {
                None => format!("{} embeddings", r.checked),
                Some(e) => format!("{} of {} failed; first {:?}", r.failures, r.checked, e.map),
            };
            Ok((r.passed() && r.checked > 0, Some(detail)))
        }),
    ]
}

/// Independent primality oracle: try every 2-partition of the vertex set.
fn brute_force_split(g: &Graph, b: &Bipartition) -> bool {
    let n = g.order();
    let side = b.sides(n);
    (1u32..(1 << n) - 1).filter(|m| m & 1 == 1).any(|mask| {
        let in_a = |v: usize| mask >> v & 1 == 1;
        let mut union = true;
        let mut join = true;
        let mut skew_ab = true;
        let mut skew_ba = true;
        for u in 0..n {
            for v in 0..n {
                if side[u] || !side[v] || in_a(u) == in_a(v) {
                    continue;
                }
                // u in X, v in Y, on different operands
                let e = g.has_edge(u, v);
                union &= !e;
                join &= e;
                if in_a(u) {
                    skew_ab &= e;
                    skew_ba &= !e;
                } else {
                    skew_ab &= !e;
                    skew_ba &= e;
                }
            }
        }
        union || join || skew_ab || skew_ba
    })
}

fn decomposition(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(7);
    let all = match classes_up_to(max) {
        Ok(all) => all,
        Err(e) => return vec![check(format!("graphs up to {max} vertices"), || Err(e))],
    };
    let cases: Vec<(Graph, Bipartition)> = all
        .into_iter()
        .filter(Graph::is_bipartite)
        .flat_map(|g| Bipartition::all_of(&g).into_iter().map(move |b| (g.clone(), b)))
        .collect();
    vec![
        check(format!("recomposition identity up to {max} vertices"), || {
            let failures: Vec<String> = cases
                .par_iter()
                .filter(|(g, b)| {
                    canonical_decompose(g, b)
                        .and_then(|t| recompose(&t, b, g.order()))
                        .map_or(true, |h| h != *g)
                })
                .map(|(g, b)| format!("{g:?} with {b:?}"))
                .collect();
            verdict(failures, cases.len())
        }),
        check(format!("primality vs brute force up to {max} vertices"), || {
            let failures: Vec<String> = cases
                .par_iter()
                .filter(|(g, b)| {
                    let prime = g.order() <= 1 || !brute_force_split(g, b);
                    is_canonically_prime(g, b).map_or(true, |p| p != prime)
                })
                .map(|(g, b)| format!("{g:?} with {b:?}"))
                .collect();
            verdict(failures, cases.len())
        }),
    ]
}

fn bounded_columns(opts: &Options) -> Vec<Check> {
    let max = opts.max_n.unwrap_or(8);
    [2usize, 3, 4]
        .into_iter()
        .map(|k| {
            check(format!("S_{k}-free prime bichain graphs up to {max} fit in {} columns", 2 * k), move || {
                let members: Vec<Graph> = classes_up_to(max)?
                    .into_par_iter()
                    .filter(|g| g.is_bipartite() && is_bichain(g).map(|r| r.verdict).unwrap_or(false))
                    .filter(|g| (k..=g.order() / 2).all(|j| find_embedding(&s_graph(j), g).is_none()))
                    .collect();
                let primes = canonically_prime(&members);
                let failures: Vec<String> = primes
                    .par_iter()
                    .filter(|g| embed_in_bounded_columns(g, 2 * k, default_max_rows(g)).is_none())
                    .map(|g| format!("{g:?}"))
                    .collect();
                verdict(failures, primes.len())
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_found() {
        let mut names: Vec<&str> = suites().iter().map(|s| s.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), suites().len());
        assert!(find_suite("pivot-lemma").is_some());
        assert!(find_suite("all").is_none());
    }

    #[test]
    fn small_runs_pass() {
        let opts = Options { max_n: Some(3) };
        for name in ["pivot-lemma", "zy-embedding", "universality", "letters", "sandwich", "decomposition"] {
            let r = find_suite(name).unwrap().run(&opts);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn brute_force_split_examples() {
        let g = crate::named::path(7);
        assert!(!brute_force_split(&g, &Bipartition::of(&g).unwrap()));
        let m = crate::named::matching(2);
        assert!(brute_force_split(&m, &Bipartition::of(&m).unwrap()));
    }

    #[test]
    fn errors_become_failed_checks() {
        let c = check("x", || Err(crate::Error::Input("nope".into())));
        assert!(!c.pass);
        assert!(c.detail.unwrap().contains("nope"));
        let json = serde_json::to_value(SuiteReport { suite: "s".into(), checks: vec![] }).unwrap();
        assert_eq!(json, serde_json::json!({"suite": "s", "checks": []}));
    }
}
