//! JSON and DOT serialisation.
//!
//! A graph file is `{"n": 4, "edges": [[0, 1], ...]}` with optional
//! `"parts": [[x...], [y...]]`, `"labels": ["white", ...]` and
//! `"coords": [[col, row], ...]`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::grids::{Family, GridGraph};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<[Vec<usize>; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coords: Option<Vec<[usize; 2]>>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            ..Default::default()
        }
    }

    /// Bipartite grids store their two sides; the split grid stores its
    /// clique (the even columns) first and its independent set second.
    pub fn from_grid(grid: &GridGraph) -> Self {
        let [odd, even] = bipartition_parts(&grid.bipartition());
        let parts = if grid.family == Family::ZSplit { [even, odd] } else { [odd, even] };
        GraphDoc {
            coords: Some(grid.coords().into_iter().map(|(c, r)| [c, r]).collect()),
            parts: Some(parts),
            ..GraphDoc::from_graph(&grid.graph)
        }
    }

    pub fn with_parts(mut self, b: &Bipartition) -> Self {
        self.parts = Some(bipartition_parts(b));
        self
    }

    /// Validates vertices, loops and the optional fields' lengths.
    pub fn graph(&self) -> Result<Graph> {
        let g = Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.n {
                return Err(Error::Input(format!("{} labels for {} vertices", labels.len(), self.n)));
            }
        }
        if let Some(coords) = &self.coords {
            if coords.len() != self.n {
                return Err(Error::Input(format!("{} coords for {} vertices", coords.len(), self.n)));
            }
        }
        Ok(g)
    }

    /// The stored bipartition, checked against the graph.
    pub fn bipartition(&self) -> Result<Option<Bipartition>> {
        let Some([x, y]) = &self.parts else {
            return Ok(None);
        };
        let b = Bipartition::new(x.clone(), y.clone());
        b.validate(&self.graph()?)?;
        Ok(Some(b))
    }

    pub fn coords(&self) -> Option<Vec<(usize, usize)>> {
        self.coords
            .as_ref()
            .map(|c| c.iter().map(|&[col, row]| (col, row)).collect())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph documents always serialise")
    }

    pub fn read(path: &Path) -> Result<Self> {
        GraphDoc::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}

fn bipartition_parts(b: &Bipartition) -> [Vec<usize>; 2] {
    [b.x.clone(), b.y.clone()]
}

/// Graphviz source. Vertices with coordinates are named `c{col}r{row}` and
/// pinned at their grid position.
pub fn to_dot(g: &Graph, coords: Option<&[(usize, usize)]>) -> String {
    let name = |v: usize| match coords {
        Some(c) => format!("c{}r{}", c[v].0, c[v].1),
        None => v.to_string(),
    };
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match coords {
            Some(c) => writeln!(out, "  \"{}\" [pos=\"{},{}!\"];", name(v), c[v].0, c[v].1),
            None => writeln!(out, "  \"{}\";", name(v)),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", name(u), name(v)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{z_grid, zsplit_grid};
    use crate::named;

    #[test]
    fn json_round_trip() {
        let grid = z_grid(3, 2);
        let doc = GraphDoc::from_grid(&grid);
        let back = GraphDoc::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.graph().unwrap(), grid.graph);
        assert_eq!(back.bipartition().unwrap().unwrap(), grid.bipartition());
    }

    #[test]
    fn split_grid_stores_clique_first() {
        let grid = zsplit_grid(4, 2);
        let [clique, independent] = GraphDoc::from_grid(&grid).parts.unwrap();
        assert!(grid.graph.is_clique(&clique));
        assert!(grid.graph.is_independent(&independent));
    }

    #[test]
    fn field_names_are_fixed() {
        let text = GraphDoc::from_graph(&named::path(3)).to_json();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    }

    #[test]
    fn bad_documents_are_rejected() {
        assert!(GraphDoc::from_json(r#"{"n":2,"edges":[[0,2]]}"#).unwrap().graph().is_err());
        assert!(GraphDoc::from_json(r#"{"n":2,"edges":[[1,1]]}"#).unwrap().graph().is_err());
        assert!(GraphDoc::from_json(r#"{"edges":[]}"#).is_err());
        let doc = GraphDoc::from_json(r#"{"n":2,"edges":[[0,1]],"parts":[[0,1],[]]}"#).unwrap();
        assert!(doc.bipartition().is_err());
    }

    #[test]
    fn dot_uses_grid_names() {
        let grid = z_grid(2, 1);
        let dot = to_dot(&grid.graph, Some(&grid.coords()));
        assert!(dot.contains("\"c1r1\""));
        assert!(dot.contains("\"c2r1\""));
    }
}
