//! Exact clique-width for small graphs.
//!
//! A state is a vertex set `S` together with a partition of `S` into label
//! classes. Only states whose built graph is exactly `G[S]` are kept: any
//! expression can be rewritten to join two classes as soon as every edge
//! between them is present in `G`, and edges inside a class or between
//! classes that are not completely joined in `G` can never be added later.
//! For the same reason every class must have one common neighbourhood
//! outside `S`.
//!
//! The search grows states by increasing `|S|` using three moves: create a
//! vertex, merge two classes (a relabel), and take the disjoint union of two
//! states while identifying some pairs of classes (shared labels). For a
//! fixed number of labels `k` this enumerates every reachable state, so the
//! first `k` for which the whole vertex set is reachable is the clique-width.

use std::collections::HashMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default largest order accepted by [`clique_width`].
pub const CLIQUE_WIDTH_LIMIT: usize = 8;

/// A clique-width term. Labels start at 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Create { vertex: usize, label: usize },
    Join { a: usize, b: usize, term: Box<Term> },
    Relabel { from: usize, to: usize, term: Box<Term> },
    Union(Box<Term>, Box<Term>),
}

impl Term {
    pub fn create(vertex: usize, label: usize) -> Term {
        Term::Create { vertex, label }
    }

    pub fn join(self, a: usize, b: usize) -> Term {
        Term::Join {
            a,
            b,
            term: Box::new(self),
        }
    }

    pub fn relabel(self, from: usize, to: usize) -> Term {
        Term::Relabel {
            from,
            to,
            term: Box::new(self),
        }
    }

    pub fn union(self, other: Term) -> Term {
        Term::Union(Box::new(self), Box::new(other))
    }

    /// Largest label mentioned anywhere in the term.
    pub fn max_label(&self) -> usize {
        match self {
            Term::Create { label, .. } => *label,
            Term::Join { a, b, term } => (*a).max(*b).max(term.max_label()),
            Term::Relabel { from, to, term } => (*from).max(*to).max(term.max_label()),
            Term::Union(l, r) => l.max_label().max(r.max_label()),
        }
    }

    /// The graph and the final labels. Created vertex ids must be distinct
    /// and together form `0..m`.
    pub fn evaluate(&self) -> Result<(Graph, Vec<usize>)> {
        let mut labels: HashMap<usize, usize> = HashMap::new();
        let mut edges = Vec::new();
        self.eval_into(&mut labels, &mut edges)?;
        let m = labels.len();
        let mut lab = vec![0; m];
        for (&v, &l) in &labels {
            if v >= m {
                return Err(Error::Input(format!("vertex ids are not 0..{m}")));
            }
            lab[v] = l;
        }
        let g = Graph::from_edges(m, edges)?;
        Ok((g, lab))
    }

    // returns the vertices of this subterm
    fn eval_into(
        &self,
        labels: &mut HashMap<usize, usize>,
        edges: &mut Vec<(usize, usize)>,
    ) -> Result<Vec<usize>> {
        match self {
            Term::Create { vertex, label } => {
                if *label == 0 {
                    return Err(Error::Input("labels start at 1".into()));
                }
                if labels.insert(*vertex, *label).is_some() {
                    return Err(Error::Input(format!("vertex {vertex} created twice")));
                }
                Ok(vec![*vertex])
            }
            Term::Join { a, b, term } => {
                if a == b {
                    return Err(Error::Input(format!("join of label {a} with itself")));
                }
                let vs = term.eval_into(labels, edges)?;
                for (i, &u) in vs.iter().enumerate() {
                    for &w in &vs[i + 1..] {
                        let (lu, lw) = (labels[&u], labels[&w]);
                        if (lu == *a && lw == *b) || (lu == *b && lw == *a) {
                            edges.push((u, w));
                        }
                    }
                }
                Ok(vs)
            }
            Term::Relabel { from, to, term } => {
                if *to == 0 {
                    return Err(Error::Input("labels start at 1".into()));
                }
                let vs = term.eval_into(labels, edges)?;
                for v in &vs {
                    let l = labels.get_mut(v).unwrap();
                    if *l == *from {
                        *l = *to;
                    }
                }
                Ok(vs)
            }
            Term::Union(l, r) => {
                let mut vs = l.eval_into(labels, edges)?;
                vs.extend(r.eval_into(labels, edges)?);
                Ok(vs)
            }
        }
    }

    /// `["create", v, l]`, `["join", a, b, t]`, `["relabel", from, to, t]`,
    /// `["union", t1, t2]`.
    pub fn to_json(&self) -> Value {
        match self {
            Term::Create { vertex, label } => json!(["create", vertex, label]),
            Term::Join { a, b, term } => json!(["join", a, b, term.to_json()]),
            Term::Relabel { from, to, term } => json!(["relabel", from, to, term.to_json()]),
            Term::Union(l, r) => json!(["union", l.to_json(), r.to_json()]),
        }
    }

    pub fn from_json(v: &Value) -> Result<Term> {
        let bad = || Error::Input(format!("malformed term {v}"));
        let arr = v.as_array().ok_or_else(bad)?;
        let num = |i: usize| -> Result<usize> {
            arr.get(i)
                .and_then(Value::as_u64)
                .map(|x| x as usize)
                .ok_or_else(bad)
        };
        let sub = |i: usize| -> Result<Box<Term>> { Ok(Box::new(Term::from_json(arr.get(i).ok_or_else(bad)?)?)) };
        match (arr.first().and_then(Value::as_str), arr.len()) {
            (Some("create"), 3) => Ok(Term::create(num(1)?, num(2)?)),
            (Some("join"), 4) => Ok(Term::Join {
                a: num(1)?,
                b: num(2)?,
                term: sub(3)?,
            }),
            (Some("relabel"), 4) => Ok(Term::Relabel {
                from: num(1)?,
                to: num(2)?,
                term: sub(3)?,
            }),
            (Some("union"), 3) => Ok(Term::Union(sub(1)?, sub(2)?)),
            _ => Err(bad()),
        }
    }
}

/// A term together with the size of its label alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub labels: usize,
    pub term: Term,
}

impl Expression {
    pub fn to_json(&self) -> Value {
        json!({"labels": self.labels, "term": self.term.to_json()})
    }
}

#[derive(Clone, Debug)]
pub struct CliqueWidth {
    pub width: usize,
    pub expression: Expression,
}

/// Label classes as sorted vertex masks.
type State = Vec<u32>;

#[derive(Clone, Debug)]
enum Origin {
    Create(usize),
    Merge { parent: State, a: u32, b: u32 },
    // pairs: (block of left, block of right) sharing a label
    Union { left: State, right: State, shared: Vec<(u32, u32)> },
}

struct Search<'g> {
    adj: &'g [u32],
    all: u32,
    k: usize,
    // states grouped by their vertex set
    by_set: HashMap<u32, Vec<State>>,
    origin: HashMap<State, Origin>,
}

impl Search<'_> {
    fn outside(&self, v: usize, s: u32) -> u32 {
        self.adj[v] & !s & self.all
    }

    fn homogeneous(&self, block: u32, s: u32) -> bool {
        let first = block.trailing_zeros() as usize;
        let want = self.outside(first, s);
        bits(block).all(|v| self.outside(v, s) == want)
    }

    fn no_edges_between(&self, a: u32, b: u32) -> bool {
        bits(a).all(|v| self.adj[v] & b == 0)
    }

    fn complete_between(&self, a: u32, b: u32) -> bool {
        bits(a).all(|v| self.adj[v] & b == b)
    }

    fn has_edge_between(&self, a: u32, b: u32) -> bool {
        !self.no_edges_between(a, b)
    }

    fn insert(&mut self, state: State, origin: Origin) -> bool {
        if self.origin.contains_key(&state) {
            return false;
        }
        let s = state.iter().fold(0, |m, b| m | b);
        self.by_set.entry(s).or_default().push(state.clone());
        self.origin.insert(state, origin);
        true
    }

    /// Close the states on vertex set `s` under merging two classes.
    fn close_under_merges(&mut self, s: u32) {
        let mut queue: Vec<State> = self.by_set.get(&s).cloned().unwrap_or_default();
        while let Some(state) = queue.pop() {
            for i in 0..state.len() {
                for j in i + 1..state.len() {
                    let merged = state[i] | state[j];
                    if !self.homogeneous(merged, s) {
                        continue;
                    }
                    let mut next: State = state
                        .iter()
                        .enumerate()
                        .filter(|&(t, _)| t != i && t != j)
                        .map(|(_, &b)| b)
                        .chain([merged])
                        .collect();
                    next.sort_unstable();
                    let origin = Origin::Merge {
                        parent: state.clone(),
                        a: state[i],
                        b: state[j],
                    };
                    if self.insert(next.clone(), origin) {
                        queue.push(next);
                    }
                }
            }
        }
    }

    /// All unions of `l` and `r` (disjoint vertex sets) with at most `k`
    /// resulting classes.
    fn unions(&self, l: &State, r: &State, out: &mut Vec<(State, Vec<(u32, u32)>)>) {
        let s = l.iter().chain(r).fold(0, |m, b| m | b);
        let need = (l.len() + r.len()).saturating_sub(self.k);
        let mut used = vec![false; r.len()];
        let mut shared = Vec::new();
        self.match_blocks(l, r, s, 0, need, &mut used, &mut shared, out);
    }

    #[allow(clippy::too_many_arguments)]
    fn match_blocks(
        &self,
        l: &State,
        r: &State,
        s: u32,
        i: usize,
        need: usize,
        used: &mut Vec<bool>,
        shared: &mut Vec<(u32, u32)>,
        out: &mut Vec<(State, Vec<(u32, u32)>)>,
    ) {
        if shared.len() + (l.len() - i) < need {
            return;
        }
        if i == l.len() {
            let mut blocks: State = shared.iter().map(|&(a, b)| a | b).collect();
            blocks.extend(l.iter().copied().filter(|a| !shared.iter().any(|p| p.0 == *a)));
            blocks.extend(r.iter().copied().filter(|b| !shared.iter().any(|p| p.1 == *b)));
            let side_l = l.iter().fold(0, |m, b| m | b);
            // every new edge must come from a full join of two classes
            for x in 0..blocks.len() {
                for y in x + 1..blocks.len() {
                    let (bx, by) = (blocks[x], blocks[y]);
                    let crossing = self.has_edge_between(bx & side_l, by & !side_l)
                        || self.has_edge_between(bx & !side_l, by & side_l);
                    if crossing && !self.complete_between(bx, by) {
                        return;
                    }
                }
            }
            blocks.sort_unstable();
            out.push((blocks, shared.clone()));
            return;
        }
        // leave l[i] unmatched
        self.match_blocks(l, r, s, i + 1, need, used, shared, out);
        for j in 0..r.len() {
            if used[j] {
                continue;
            }
            let (a, b) = (l[i], r[j]);
            if !self.no_edges_between(a, b) || !self.homogeneous(a | b, s) {
                continue;
            }
            used[j] = true;
            shared.push((a, b));
            self.match_blocks(l, r, s, i + 1, need, used, shared, out);
            shared.pop();
            used[j] = false;
        }
    }

    fn run(&mut self, n: usize) -> Option<State> {
        let all = self.all;
        for v in 0..n {
            let s = 1u32 << v;
            if self.homogeneous(s, s) {
                self.insert(vec![s], Origin::Create(v));
            }
        }
        let mut sets_by_size: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
        for s in 1..=all {
            sets_by_size[s.count_ones() as usize].push(s);
        }
        for size in 2..=n {
            for &s in &sets_by_size[size] {
                let low = s & s.wrapping_neg();
                let rest = s ^ low;
                // left part holds the lowest vertex
                let mut sub = (rest - 1) & rest;
                let mut found = Vec::new();
                loop {
                    let a = low | sub;
                    let b = s ^ a;
                    if let (Some(ls), Some(rs)) = (self.by_set.get(&a), self.by_set.get(&b)) {
                        for l in ls {
                            for r in rs {
                                let mut made = Vec::new();
                                self.unions(l, r, &mut made);
                                for (state, shared) in made {
                                    found.push((state, l.clone(), r.clone(), shared));
                                }
                            }
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & rest;
                }
                for (state, left, right, shared) in found {
                    self.insert(state, Origin::Union { left, right, shared });
                }
                self.close_under_merges(s);
            }
            if size == n && self.by_set.contains_key(&all) {
                break;
            }
        }
        self.by_set.get(&all).and_then(|v| v.first().cloned())
    }

    /// A term building `state` in which class `state[i]` carries `labels[i]`.
    fn term(&self, state: &State, labels: &[usize]) -> Term {
        let label_of = |block: u32| labels[state.iter().position(|&b| b == block).unwrap()];
        match &self.origin[state] {
            Origin::Create(v) => Term::create(*v, labels[0]),
            Origin::Merge { parent, a, b } => {
                let merged = label_of(a | b);
                let free = (1..=self.k).find(|l| !labels.contains(l)).unwrap();
                let parent_labels: Vec<usize> = parent
                    .iter()
                    .map(|&blk| {
                        if blk == *a {
                            merged
                        } else if blk == *b {
                            free
                        } else {
                            label_of(blk)
                        }
                    })
                    .collect();
                self.term(parent, &parent_labels).relabel(free, merged)
            }
            Origin::Union { left, right, shared } => {
                let result_label = |blk: u32| {
                    let whole = shared
                        .iter()
                        .find(|p| p.0 == blk || p.1 == blk)
                        .map_or(blk, |p| p.0 | p.1);
                    label_of(whole)
                };
                let ll: Vec<usize> = left.iter().map(|&b| result_label(b)).collect();
                let rl: Vec<usize> = right.iter().map(|&b| result_label(b)).collect();
                let mut t = self.term(left, &ll).union(self.term(right, &rl));
                let side_l = left.iter().fold(0, |m, b| m | b);
                for x in 0..state.len() {
                    for y in x + 1..state.len() {
                        let (bx, by) = (state[x], state[y]);
                        if self.has_edge_between(bx & side_l, by & !side_l)
                            || self.has_edge_between(bx & !side_l, by & side_l)
                        {
                            t = t.join(labels[x], labels[y]);
                        }
                    }
                }
                t
            }
        }
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

fn check_order(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(20);
    if g.order() > limit {
        return Err(Error::Capacity {
            what: "clique-width vertex count",
            limit,
            got: g.order(),
        });
    }
    if g.order() == 0 {
        return Err(Error::Input("the empty graph has no expression".into()));
    }
    Ok(())
}

/// A `k`-expression for `g`, if one exists.
pub fn k_expression(g: &Graph, k: usize, limit: usize) -> Result<Option<Expression>> {
    check_order(g, limit)?;
    if k == 0 {
        return Ok(None);
    }
    let adj: Vec<u32> = g.masks().into_iter().map(|m| m as u32).collect();
    let n = g.order();
    let mut search = Search {
        adj: &adj,
        all: ((1u64 << n) - 1) as u32,
        k,
        by_set: HashMap::new(),
        origin: HashMap::new(),
    };
    let Some(goal) = search.run(n) else {
        return Ok(None);
    };
    let labels: Vec<usize> = (1..=goal.len()).collect();
    let term = search.term(&goal, &labels);
    let (built, _) = term.evaluate()?;
    if built != *g {
        return Err(Error::Internal("clique-width witness does not rebuild the graph".into()));
    }
    if term.max_label() > k {
        return Err(Error::Internal("clique-width witness uses too many labels".into()));
    }
    Ok(Some(Expression { labels: k, term }))
}

/// Least `k <= max_k` admitting a `k`-expression, by trying `k = 1, 2, ...`.
pub fn clique_width_at_most(g: &Graph, max_k: usize, limit: usize) -> Result<Option<CliqueWidth>> {
    check_order(g, limit)?;
    for k in 1..=max_k {
        if let Some(expression) = k_expression(g, k, limit)? {
            return Ok(Some(CliqueWidth { width: k, expression }));
        }
    }
    Ok(None)
}

pub fn clique_width(g: &Graph) -> Result<CliqueWidth> {
    let found = clique_width_at_most(g, g.order(), CLIQUE_WIDTH_LIMIT)?;
    found.ok_or_else(|| Error::Internal("no expression with one label per vertex".into()))
}

/// A 3-expression for the chain graph `chain_universal(n)` (2 labels when
/// `n = 1`). Vertex ids follow that generator.
pub fn chain_3expression(n: usize) -> Expression {
    assert!(n >= 1);
    let a = |k: usize| k - 1;
    let b = |j: usize| n + j - 1;
    let mut t = Term::create(a(n), 1).union(Term::create(b(n), 2)).join(1, 2);
    for j in (1..n).rev() {
        t = t.union(Term::create(a(j), 1));
        t = t.union(Term::create(b(j), 3)).join(3, 1).relabel(3, 2);
    }
    Expression {
        labels: t.max_label(),
        term: t,
    }
}
