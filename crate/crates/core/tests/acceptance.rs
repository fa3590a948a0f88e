//! The thirteen acceptance criteria, each decided exactly at default sizes.
//! Prints one PASS/FAIL line per criterion and fails if any is red.

use std::time::Instant;

use bichain::verify::{find_suite, Check, Options};

/// Criterion number, label, suite, and the checks of that suite it covers
/// (`None` covers all of them).
const CRITERIA: [(u32, &str, &str, Option<&[usize]>); 13] = [
    (1, "pivot lemma, n = 1..5", "pivot-lemma", None),
    (2, "Z/Y grid cross embeddings, n = 2..4", "zy-embedding", None),
    (3, "bichain graphs on <= 5 vertices embed in Z(5,5)", "universality", None),
    (4, "600 sampled X(10,10) subsets embed in X(5,5)", "x-universality", None),
    (5, "letter encodings of Z and Z* grids", "letters", None),
    (6, "rank-width invariant under pivots and local complements", "rank-invariance", None),
    (7, "rank-width / clique-width sandwich", "sandwich", None),
    (8, "chain graphs have clique-width <= 3", "chain-cwd", None),
    (9, "recogniser equivalences", "recognizers", None),
    (10, "S_k and T_k antichains; S_j in S_k on consecutive pairs", "antichain", Some(&[0, 1, 2, 3])),
    (11, "prime bichain graphs occupy column intervals of Z(6,6)", "column-intervals", Some(&[0])),
    (12, "X(2,7) embeddings in X(4,9) contain an aligned X(2,2)", "aligned-squares", Some(&[1])),
    (13, "decomposition recomposes and primality matches brute force", "decomposition", None),
];

fn line(c: &Check) -> String {
    let detail = c.detail.as_deref().unwrap_or("");
    format!("    {} {} ({} ms) {}", if c.pass { "ok  " } else { "FAIL" }, c.name, c.millis, detail)
}

#[test]
fn acceptance() {
    let opts = Options::default();
    let mut red = Vec::new();
    for (num, label, suite, only) in CRITERIA {
        let start = Instant::now();
        let report = find_suite(suite).expect("suite registered").run(&opts);
        let checks: Vec<&Check> = match only {
            None => report.checks.iter().collect(),
            Some(idx) => idx.iter().map(|&i| &report.checks[i]).collect(),
        };
        let pass = checks.iter().all(|c| c.pass);
        println!(
            "criterion {num:>2} {}: {label} [{suite}, {:.1} s]",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for c in &checks {
            println!("{}", line(c));
        }
        if !pass {
            red.push(num);
        }
    }
    assert!(red.is_empty(), "failing criteria: {red:?}");
}
