//! Quasi-ordered label sets and labelled graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A finite quasi-order on named labels. Label `a` may sit on a vertex that
/// receives a label-`a'` pattern vertex iff `a' <= a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelPoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl LabelPoset {
    /// Checks reflexivity and transitivity of `leq`.
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Input("order matrix does not match the label count".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::Input(format!("label {} is not below itself", names[a])));
            }
            for b in 0..n {
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::Input(format!(
                            "order is not transitive at {}, {}, {}",
                            names[a], names[b], names[c]
                        )));
                    }
                }
            }
        }
        Ok(LabelPoset { names, leq })
    }

    /// Pairwise incomparable labels.
    pub fn antichain<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let n = names.len();
        let leq = (0..n).map(|a| (0..n).map(|b| a == b).collect()).collect();
        LabelPoset { names, leq }
    }

    /// A single label; labelled embedding degenerates to plain embedding.
    pub fn trivial() -> Self {
        LabelPoset::antichain(["*"])
    }

    /// `{black, white}` with neither below the other.
    pub fn black_white() -> Self {
        LabelPoset::antichain(["black", "white"])
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

pub const BLACK: usize = 0;
pub const WHITE: usize = 1;

/// A graph with one label index per vertex. The poset is supplied separately
/// wherever labels are compared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl LabelledGraph {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<Self> {
        if labels.len() != graph.order() {
            return Err(Error::Input(format!(
                "{} labels for {} vertices",
                labels.len(),
                graph.order()
            )));
        }
        Ok(LabelledGraph { graph, labels })
    }

    /// Every vertex labelled 0.
    pub fn uniform(graph: Graph) -> Self {
        let labels = vec![0; graph.order()];
        LabelledGraph { graph, labels }
    }

    pub fn check_labels(&self, poset: &LabelPoset) -> Result<()> {
        match self.labels.iter().find(|&&l| l >= poset.len()) {
            Some(l) => Err(Error::Input(format!(
                "label {l} outside a set of {} labels",
                poset.len()
            ))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_transitive_order() {
        let names = vec!["a".to_string(), "b".into(), "c".into()];
        let leq = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(LabelPoset::new(names.clone(), leq).is_err());
        let chain = vec![
            vec![true, true, true],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(LabelPoset::new(names, chain).is_ok());
    }

    #[test]
    fn black_and_white_are_incomparable() {
        let p = LabelPoset::black_white();
        assert!(!p.leq(BLACK, WHITE) && !p.leq(WHITE, BLACK));
        assert_eq!(p.index_of("white"), Some(WHITE));
    }

    #[test]
    fn label_range_is_checked() {
        let g = LabelledGraph::new(Graph::empty(2), vec![0, 2]).unwrap();
        assert!(g.check_labels(&LabelPoset::black_white()).is_err());
        assert!(LabelledGraph::new(Graph::empty(2), vec![0]).is_err());
    }
}
