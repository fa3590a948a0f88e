//! Induced subgraph search.
//!
//! A plain backtracking matcher. Pattern vertices are placed in a fixed
//! most-constrained-first order (see [`search_order`]) and the candidates for
//! each are tried in increasing host index, so "the first embedding" and the
//! order of an enumeration are both reproducible.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};

/// Host size above which a full, unbudgeted enumeration is refused.
pub const FULL_ENUMERATION_LIMIT: usize = 40;

/// The order in which pattern vertices are placed.
///
/// Start with a vertex of maximum degree, then repeatedly take the unplaced
/// vertex with the most placed neighbours; ties go to higher degree, then to
/// the smaller index.
pub fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                (links[a], pattern.degree(a))
                    .cmp(&(links[b], pattern.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
        for w in pattern.neighbors(next).ones() {
            links[w] += 1;
        }
    }
    order
}

pub struct Matcher<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    allowed: Option<&'a [FixedBitSet]>,
}

struct Plan {
    order: Vec<usize>,
    // for each depth: (earlier depth, adjacent in the pattern)
    constraints: Vec<Vec<(usize, bool)>>,
    base: Vec<FixedBitSet>,
}

impl<'a> Matcher<'a> {
    pub fn new(pattern: &'a Graph, host: &'a Graph) -> Self {
        Matcher {
            pattern,
            host,
            allowed: None,
        }
    }

    /// Restrict pattern vertex `v` to the host vertices in `allowed[v]`.
    pub fn restricted(mut self, allowed: &'a [FixedBitSet]) -> Self {
        assert_eq!(allowed.len(), self.pattern.order());
        self.allowed = Some(allowed);
        self
    }

    fn plan(&self) -> Plan {
        let (p, h) = (self.pattern, self.host);
        let order = search_order(p);
        let mut depth_of = vec![0; p.order()];
        for (d, &v) in order.iter().enumerate() {
            depth_of[v] = d;
        }
        let constraints = order
            .iter()
            .enumerate()
            .map(|(d, &v)| {
                order[..d]
                    .iter()
                    .map(|&u| (depth_of[u], p.has_edge(u, v)))
                    .collect()
            })
            .collect();
        let host_n = h.order();
        let base = order
            .iter()
            .map(|&v| {
                let deg = p.degree(v);
                let non = p.order() - 1 - deg;
                let mut set = FixedBitSet::with_capacity(host_n);
                for w in 0..host_n {
                    let hd = h.degree(w);
                    if hd >= deg && host_n - 1 - hd >= non {
                        set.insert(w);
                    }
                }
                if let Some(allowed) = self.allowed {
                    set.intersect_with(&allowed[v]);
                }
                set
            })
            .collect();
        Plan {
            order,
            constraints,
            base,
        }
    }

    /// Visit embeddings in search order until `visit` breaks.
    /// Returns `true` if the visitor stopped the search.
    pub fn for_each<F>(&self, mut visit: F) -> bool
    where
        F: FnMut(&Embedding) -> ControlFlow<()>,
    {
        let m = self.pattern.order();
        if m > self.host.order() {
            return false;
        }
        let plan = self.plan();
        let mut state = State {
            host: self.host,
            plan: &plan,
            at_depth: vec![0; m],
            used: FixedBitSet::with_capacity(self.host.order()),
            scratch: FixedBitSet::with_capacity(self.host.order()),
            out: Embedding::new(vec![0; m]),
        };
        state.extend(0, &mut visit).is_break()
    }

    pub fn first(&self) -> Option<Embedding> {
        let mut found = None;
        self.for_each(|e| {
            found = Some(e.clone());
            ControlFlow::Break(())
        });
        found
    }

    pub fn exists(&self) -> bool {
        self.for_each(|_| ControlFlow::Break(()))
    }

    /// Up to `limit` embeddings (all of them for `None`).
    pub fn collect(&self, limit: Option<usize>) -> Vec<Embedding> {
        let mut out = Vec::new();
        if limit == Some(0) {
            return out;
        }
        self.for_each(|e| {
            out.push(e.clone());
            if limit.is_some_and(|l| out.len() >= l) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        out
    }

    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each(|_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }
}

struct State<'s> {
    host: &'s Graph,
    plan: &'s Plan,
    // host vertex chosen at each depth
    at_depth: Vec<usize>,
    used: FixedBitSet,
    scratch: FixedBitSet,
    out: Embedding,
}

impl State<'_> {
    fn extend<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&Embedding) -> ControlFlow<()>,
    {
        let plan = self.plan;
        if depth == plan.order.len() {
            for (d, &v) in plan.order.iter().enumerate() {
                self.out.map[v] = self.at_depth[d];
            }
            return visit(&self.out);
        }
        self.scratch.clone_from(&plan.base[depth]);
        self.scratch.difference_with(&self.used);
        for &(earlier, adjacent) in &plan.constraints[depth] {
            let row = self.host.neighbors(self.at_depth[earlier]);
            if adjacent {
                self.scratch.intersect_with(row);
            } else {
                self.scratch.difference_with(row);
            }
        }
        let candidates: Vec<usize> = self.scratch.ones().collect();
        for w in candidates {
            self.at_depth[depth] = w;
            self.used.insert(w);
            let flow = self.extend(depth + 1, visit);
            self.used.set(w, false);
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Some induced embedding of `pattern` into `host`, if one exists.
pub fn find_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    Matcher::new(pattern, host).first()
}

/// All induced embeddings of `pattern` into `host` in search order, cut off
/// after `budget` of them. An unbounded enumeration (`None`) is refused for
/// hosts above [`FULL_ENUMERATION_LIMIT`] vertices.
pub fn enumerate_embeddings(
    pattern: &Graph,
    host: &Graph,
    budget: Option<usize>,
) -> Result<Vec<Embedding>> {
    if budget.is_none() && host.order() > FULL_ENUMERATION_LIMIT {
        return Err(Error::Capacity {
            what: "unbudgeted enumeration host size",
            limit: FULL_ENUMERATION_LIMIT,
            got: host.order(),
        });
    }
    Ok(Matcher::new(pattern, host).collect(budget))
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    Matcher::new(pattern, host).exists()
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && g.degree_sequence() == h.degree_sequence()
        && Matcher::new(g, h).exists()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    #[test]
    fn k1_into_k3_three_ways() {
        let all = enumerate_embeddings(&Graph::empty(1), &named::complete(3), None).unwrap();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn k2_into_2k2_four_ways() {
        let all = enumerate_embeddings(&named::complete(2), &named::matching(2), None).unwrap();
        assert_eq!(all.len(), 4);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 4);
    }

    #[test]
    fn budget_truncates() {
        let all = enumerate_embeddings(&Graph::empty(1), &named::complete(3), Some(2)).unwrap();
        assert_eq!(all.len(), 2);
        assert!(enumerate_embeddings(&Graph::empty(1), &Graph::empty(41), None).is_err());
        assert_eq!(
            enumerate_embeddings(&Graph::empty(1), &Graph::empty(41), Some(5))
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn induced_not_just_subgraph() {
        // P3 sits in K3 as a subgraph but not as an induced one
        assert!(find_embedding(&named::path(3), &named::complete(3)).is_none());
        assert!(find_embedding(&named::path(3), &named::cycle(4)).is_some());
    }

    #[test]
    fn isomorphism_basics() {
        assert!(are_isomorphic(&named::cycle(5), &named::cycle(5).complement()));
        assert!(!are_isomorphic(&named::path(4), &named::claw()));
        assert!(!are_isomorphic(&named::path(4), &named::path(5)));
    }

    #[test]
    fn empty_pattern_has_one_embedding() {
        assert_eq!(Matcher::new(&Graph::empty(0), &named::path(3)).count(), 1);
        assert!(find_embedding(&named::path(4), &named::path(3)).is_none());
    }

    #[test]
    fn search_order_is_most_constrained_first() {
        // the claw's centre goes first, then leaves by index
        assert_eq!(search_order(&named::claw()), vec![0, 1, 2, 3]);
        // on P4 the inner vertex 2 outranks the end 0 on degree
        assert_eq!(search_order(&named::path(4)), vec![1, 2, 0, 3]);
    }
}
