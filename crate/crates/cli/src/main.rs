use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use bichain::classes::{is_bichain, is_chain_graph, is_split_permutation, split_report, Report};
use bichain::decomposition::{canonical_decompose, DecompositionTree};
use bichain::grids::{self, GridGraph};
use bichain::io::{to_dot, GraphDoc};
use bichain::letters::{z_letter_encoding, zsplit_letter_encoding, LetterSystem};
use bichain::transforms::{local_complement, pivot, pivot_x_to_y, split_to_bipartite, SplitPartition};
use bichain::verify::{find_suite, suites, Options, SuiteReport};
use bichain::width::{clique_width_at_most, rank_width, CLIQUE_WIDTH_LIMIT};
use bichain::wqo::{verify_antichain, x_embedding_column_structure};
use bichain::{Bipartition, Graph, LabelPoset, LabelledGraph};

#[derive(Parser)]
#[command(version, about = "Bichain graphs, grids and their width and order properties")]
struct Args {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from one of the named families.
    Generate {
        family: GenFamily,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Rows for the grid families.
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Graphviz instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Decide class membership; exits 1 when the graph is not in the class.
    Recognize { class: Class, graph: PathBuf },
    #[command(subcommand)]
    Transform(Transform),
    #[command(subcommand)]
    Width(Width),
    /// Canonical decomposition by union, join and skew join.
    Decompose { graph: PathBuf },
    #[command(subcommand)]
    Letters(Letters),
    #[command(subcommand)]
    Wqo(Wqo),
    /// Run a named check suite, or `all`.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    X,
    Y,
    Z,
    Zsplit,
    Chain,
    S,
    Scirc,
    T,
    Tcirc,
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Bichain,
    Splitperm,
    Split,
    Chain,
}

#[derive(Subcommand)]
enum Transform {
    /// Pivot on an edge, given as `u,v`.
    Pivot {
        graph: PathBuf,
        #[arg(long, value_parser = parse_edge)]
        edge: (usize, usize),
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Local complementation at a vertex.
    Lc {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Pivot X(2n,2n) along its bottom row.
    X2y {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Split graph to bipartite by deleting the clique edges. The clique is
    /// the first stored part if present, otherwise one is found.
    Star {
        graph: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Width {
    Rank {
        graph: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exact clique-width up to `--max-k`; exits 1 if it is larger.
    Clique {
        graph: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Letters {
    /// Decode a letter system to a graph.
    Decode {
        system: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The letter system of Z(n,k), or of Z*(n,k) with `--split`.
    EncodeZ {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        split: bool,
    },
}

#[derive(Subcommand)]
enum Wqo {
    /// Check that a range of coloured graphs is a labelled antichain.
    Antichain {
        #[arg(long, value_enum, default_value = "scirc")]
        family: AntichainFamily,
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long, default_value_t = 8)]
        to: usize,
    },
    /// Prime bichain graphs sit on column intervals of the Z grid.
    #[command(alias = "lemma55")]
    ColumnIntervals {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Embeddings of X(n,4n-1) contain a column-aligned X(n,n).
    #[command(alias = "lemma33")]
    AlignedSquares {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
        /// Host columns, default 2n.
        #[arg(long)]
        cols: Option<usize>,
        /// Host rows, default 4n+1.
        #[arg(long)]
        rows: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AntichainFamily {
    Scirc,
    Tcirc,
}

fn parse_edge(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn read_graph(path: &Path) -> Result<(GraphDoc, Graph)> {
    let doc = GraphDoc::read(path).with_context(|| format!("reading {}", path.display()))?;
    let g = doc.graph().with_context(|| format!("invalid graph in {}", path.display()))?;
    Ok((doc, g))
}

fn emit_text(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn emit_doc(doc: &GraphDoc, out: Option<&Path>) -> Result<()> {
    emit_text(&doc.to_json(), out)
}

fn labelled_doc(g: &LabelledGraph, poset: &LabelPoset) -> GraphDoc {
    GraphDoc {
        labels: Some(g.labels.iter().map(|&l| poset.name(l).to_string()).collect()),
        ..GraphDoc::from_graph(&g.graph)
    }
}

fn generate(family: GenFamily, n: usize, k: Option<usize>) -> Result<GraphDoc> {
    if n == 0 {
        bail!("--n must be at least 1");
    }
    let rows = k.unwrap_or(n);
    let grid = |g: GridGraph| GraphDoc::from_grid(&g);
    let bw = LabelPoset::black_white();
    Ok(match family {
        GenFamily::X => grid(grids::x_grid(n, rows)),
        GenFamily::Y => grid(grids::y_grid(n, rows)),
        GenFamily::Z => grid(grids::z_grid(n, rows)),
        GenFamily::Zsplit => grid(grids::zsplit_grid(n, rows)),
        GenFamily::Chain => {
            let (g, b) = grids::chain_universal(n);
            GraphDoc::from_graph(&g).with_parts(&b)
        }
        GenFamily::S => GraphDoc::from_graph(&grids::s_graph(n)).with_parts(&grids::s_bipartition(n)),
        GenFamily::Scirc => labelled_doc(&grids::s_circ(n), &bw).with_parts(&grids::s_bipartition(n)),
        GenFamily::T => GraphDoc::from_graph(&grids::t_graph(n)),
        GenFamily::Tcirc => labelled_doc(&grids::t_circ(n), &bw),
    })
}

fn recognize(class: Class, g: &Graph) -> Result<Report> {
    Ok(match class {
        Class::Bichain => is_bichain(g)?,
        Class::Splitperm => is_split_permutation(g)?,
        Class::Split => split_report(g)?,
        Class::Chain => is_chain_graph(g)?,
    })
}

/// `(a x (b + c))` with prime pieces as `prime[...]`.
fn tree_text(t: &DecompositionTree) -> String {
    match t {
        DecompositionTree::Leaf(v) => v.to_string(),
        DecompositionTree::Prime { vertices, .. } => format!("prime{vertices:?}"),
        DecompositionTree::Node { op, left, right } => {
            format!("({} {} {})", tree_text(left), op.symbol(), tree_text(right))
        }
    }
}

fn suite_text(r: &SuiteReport) -> String {
    let mut s = format!("{} {}\n", r.suite, if r.passed() { "PASS" } else { "FAIL" });
    for c in &r.checks {
        s += &format!("  {} {} ({} ms)", if c.pass { "ok  " } else { "FAIL" }, c.name, c.millis);
        if let Some(d) = &c.detail {
            s += &format!(" {d}");
        }
        s.push('\n');
    }
    s.pop();
    s
}

fn print_value(json: bool, value: &Value, text: impl FnOnce() -> String) {
    if json {
        println!("{value}");
    } else {
        println!("{}", text());
    }
}

/// Returns whether the verdict was positive.
fn run(args: Args) -> Result<bool> {
    let json = args.json;
    match args.command {
        Command::Generate { family, n, k, out, dot } => {
            let doc = generate(family, n, k)?;
            if dot {
                emit_text(&to_dot(&doc.graph()?, doc.coords().as_deref()), out.as_deref())?;
            } else {
                emit_doc(&doc, out.as_deref())?;
            }
        }
        Command::Recognize { class, graph } => {
            let (_, g) = read_graph(&graph)?;
            let report = recognize(class, &g)?;
            let value = serde_json::to_value(&report)?;
            print_value(json, &value, || report.verdict.to_string());
            return Ok(report.verdict);
        }
        Command::Transform(t) => match t {
            Transform::Pivot { graph, edge, out } => {
                let (_, g) = read_graph(&graph)?;
                emit_doc(&GraphDoc::from_graph(&pivot(&g, edge.0, edge.1)?), out.as_deref())?;
            }
            Transform::Lc { graph, vertex, out } => {
                let (_, g) = read_graph(&graph)?;
                emit_doc(&GraphDoc::from_graph(&local_complement(&g, vertex)?), out.as_deref())?;
            }
            Transform::X2y { n, out } => {
                if n == 0 {
                    bail!("--n must be at least 1");
                }
                let (g, _) = pivot_x_to_y(n)?;
                let grid = grids::y_grid(2 * n, 2 * n);
                let doc = GraphDoc {
                    coords: GraphDoc::from_grid(&grid).coords,
                    ..GraphDoc::from_graph(&g)
                };
                emit_doc(&doc, out.as_deref())?;
            }
            Transform::Star { graph, out } => {
                let (doc, g) = read_graph(&graph)?;
                let partition = match &doc.parts {
                    Some([clique, independent]) => SplitPartition::new(clique.clone(), independent.clone()),
                    None => match bichain::classes::is_split(&g)? {
                        Some(p) => p,
                        None => bail!("{} is not a split graph", graph.display()),
                    },
                };
                let (star, b) = split_to_bipartite(&g, &partition)?;
                emit_doc(&GraphDoc::from_graph(&star).with_parts(&b), out.as_deref())?;
            }
        },
        Command::Width(w) => match w {
            Width::Rank { graph, witness } => {
                let (_, g) = read_graph(&graph)?;
                let r = rank_width(&g)?;
                let layout = r.layout.as_ref().map_or(Value::Null, |t| t.to_json());
                if let Some(p) = witness {
                    emit_text(&layout.to_string(), Some(&p))?;
                }
                print_value(json, &json!({"width": r.width, "layout": layout}), || r.width.to_string());
            }
            Width::Clique { graph, max_k, witness } => {
                let (_, g) = read_graph(&graph)?;
                let found = clique_width_at_most(&g, max_k, CLIQUE_WIDTH_LIMIT)?;
                let value = match &found {
                    Some(c) => json!({"width": c.width, "expression": c.expression.to_json()}),
                    None => json!({"width": null, "exceeds": max_k}),
                };
                if let (Some(p), Some(c)) = (witness, &found) {
                    emit_text(&c.expression.to_json().to_string(), Some(&p))?;
                }
                print_value(json, &value, || match &found {
                    Some(c) => c.width.to_string(),
                    None => format!("> {max_k}"),
                });
                return Ok(found.is_some());
            }
        },
        Command::Decompose { graph } => {
            let (doc, g) = read_graph(&graph)?;
            let b = match doc.bipartition()? {
                Some(b) => b,
                None => match Bipartition::of(&g) {
                    Some(b) => b,
                    None => bail!("{} is not bipartite", graph.display()),
                },
            };
            let tree = canonical_decompose(&g, &b)?;
            print_value(json, &tree.to_json(), || tree_text(&tree));
        }
        Command::Letters(l) => match l {
            Letters::Decode { system, out } => {
                let text = std::fs::read_to_string(&system).with_context(|| format!("reading {}", system.display()))?;
                let sys: LetterSystem = serde_json::from_str(&text).context("invalid letter system")?;
                emit_doc(&GraphDoc::from_graph(&sys.decode()?), out.as_deref())?;
            }
            Letters::EncodeZ { n, k, split } => {
                if n == 0 || k == 0 {
                    bail!("--n and --k must be at least 1");
                }
                let sys = if split { zsplit_letter_encoding(n, k) } else { z_letter_encoding(n, k) };
                println!("{}", serde_json::to_string(&sys)?);
            }
        },
        Command::Wqo(w) => return wqo(w, json),
        Command::Verify { suite, max_n } => {
            let opts = Options { max_n };
            let reports: Vec<SuiteReport> = if suite == "all" {
                suites().iter().map(|s| s.run(&opts)).collect()
            } else {
                match find_suite(&suite) {
                    Some(s) => vec![s.run(&opts)],
                    None => {
                        let names: Vec<&str> = suites().iter().map(|s| s.name).collect();
                        bail!("unknown suite {suite}; known: all, {}", names.join(", "));
                    }
                }
            };
            let passed = reports.iter().all(SuiteReport::passed);
            let value = if reports.len() == 1 {
                serde_json::to_value(&reports[0])?
            } else {
                json!({"passed": passed, "suites": reports})
            };
            print_value(json, &value, || reports.iter().map(suite_text).collect::<Vec<_>>().join("\n"));
            return Ok(passed);
        }
    }
    Ok(true)
}

fn wqo(w: Wqo, json: bool) -> Result<bool> {
    match w {
        Wqo::Antichain { family, from, to } => {
            if from == 0 || from > to {
                bail!("need 1 <= --from <= --to");
            }
            let make = match family {
                AntichainFamily::Scirc => grids::s_circ,
                AntichainFamily::Tcirc => grids::t_circ,
            };
            let graphs: Vec<LabelledGraph> = (from..=to).map(make).collect();
            let cert = verify_antichain(&graphs, &LabelPoset::black_white())?;
            let value = json!({"from": from, "to": to, "valid": cert.valid, "embeds": cert.embeds});
            print_value(json, &value, || cert.valid.to_string());
            Ok(cert.valid)
        }
        Wqo::ColumnIntervals { max_n } => {
            let report = find_suite("column-intervals").expect("registered").run(&Options { max_n: Some(max_n) });
            print_value(json, &serde_json::to_value(&report)?, || suite_text(&report));
            Ok(report.passed())
        }
        Wqo::AlignedSquares { n, budget, cols, rows } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            let (cols, rows) = (cols.unwrap_or(2 * n), rows.unwrap_or(4 * n + 1));
            let r = x_embedding_column_structure(n, cols, rows, budget);
            let value = json!({
                "n": n, "cols": cols, "rows": rows, "budget": budget,
                "checked": r.checked, "failures": r.failures, "truncated": r.truncated,
                "first_failure": r.first_failure, "pass": r.passed(),
            });
            print_value(json, &value, || {
                format!(
                    "{} ({} embeddings checked{})",
                    if r.passed() { "pass" } else { "fail" },
                    r.checked,
                    if r.truncated { ", budget reached" } else { "" }
                )
            });
            Ok(r.passed())
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    match run(args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_parse() {
        assert_eq!(parse_edge("3,5"), Ok((3, 5)));
        assert_eq!(parse_edge(" 0 , 1"), Ok((0, 1)));
        assert!(parse_edge("3").is_err());
        assert!(parse_edge("a,1").is_err());
    }

    #[test]
    fn tree_text_nests() {
        let t = DecompositionTree::Node {
            op: bichain::decomposition::Op::Join,
            left: Box::new(DecompositionTree::Leaf(0)),
            right: Box::new(DecompositionTree::Leaf(1)),
        };
        assert_eq!(tree_text(&t), "(0 x 1)");
    }
}
