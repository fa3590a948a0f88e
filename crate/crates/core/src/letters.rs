//! Letter graphs: a word over `{1..k}` and a set `S` of ordered letter
//! pairs. Positions `p < q` are adjacent iff `(w_p, w_q)` is in `S`.
//!
//! The grid encodings spell the grid row by row from the top: with `n`
//! columns the word is `(n, n-1, ..., 1)` repeated once per row, so
//! position `p` (from 0) carries letter `n - p % n`, which is its column,
//! and sits in row `rows - p / n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Embedding, Graph};
use crate::grids::GridGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterSystem {
    pub k: usize,
    #[serde(rename = "S")]
    pub pairs: Vec<(usize, usize)>,
    pub word: Vec<usize>,
}

impl LetterSystem {
    pub fn validate(&self) -> Result<()> {
        let ok = |a: usize| (1..=self.k).contains(&a);
        if let Some(a) = self.word.iter().find(|&&a| !ok(a)) {
            return Err(Error::Input(format!("letter {a} outside 1..={}", self.k)));
        }
        if let Some((a, b)) = self.pairs.iter().find(|&&(a, b)| !ok(a) || !ok(b)) {
            return Err(Error::Input(format!("pair ({a}, {b}) outside 1..={}", self.k)));
        }
        Ok(())
    }

    /// Positions become vertices `0..len`. A pair `(a, a)` joins distinct
    /// positions carrying `a`; there are no loops.
    pub fn decode(&self) -> Result<Graph> {
        self.validate()?;
        let k = self.k;
        let mut rel = vec![false; (k + 1) * (k + 1)];
        for &(a, b) in &self.pairs {
            rel[a * (k + 1) + b] = true;
        }
        let w = &self.word;
        let mut g = Graph::empty(w.len());
        for p in 0..w.len() {
            for q in p + 1..w.len() {
                if rel[w[p] * (k + 1) + w[q]] {
                    g.add_edge(p, q);
                }
            }
        }
        Ok(g)
    }

    /// The same system with position `p` deleted from the word.
    pub fn without_position(&self, p: usize) -> LetterSystem {
        let mut word = self.word.clone();
        word.remove(p);
        LetterSystem { word, ..self.clone() }
    }
}

fn grid_word(cols: usize, rows: usize) -> Vec<usize> {
    (0..rows).flat_map(|_| (1..=cols).rev()).collect()
}

/// `R1 ∪ R2 ∪ D` over an alphabet of `cols` letters, one per column:
/// `R1 = {(2i-1, 2i)}`, `R2 = {(2i+1, 2i)}` and `D` all `(2i, 2j+1)`,
/// `(2j+1, 2i)` with `i < j`.
fn z_pairs(cols: usize) -> Vec<(usize, usize)> {
    let half_up = cols.div_ceil(2);
    let mut s = Vec::new();
    for i in 1..=cols / 2 {
        s.push((2 * i - 1, 2 * i));
    }
    for i in 1..half_up {
        s.push((2 * i + 1, 2 * i));
    }
    for i in 1..half_up {
        for j in i + 1..half_up {
            s.push((2 * i, 2 * j + 1));
            s.push((2 * j + 1, 2 * i));
        }
    }
    s
}

/// A letter system decoding to `z_grid(n, k)`: `n` letters, one per
/// column, and `k` copies of `(n, ..., 1)`, one per row.
pub fn z_letter_encoding(n: usize, k: usize) -> LetterSystem {
    assert!(n >= 1 && k >= 1);
    LetterSystem {
        k: n,
        pairs: z_pairs(n),
        word: grid_word(n, k),
    }
}

/// [`z_letter_encoding`] plus every pair of even letters, both orders and
/// equal letters included; decodes to `zsplit_grid(n, k)`.
pub fn zsplit_letter_encoding(n: usize, k: usize) -> LetterSystem {
    let mut sys = z_letter_encoding(n, k);
    for a in (2..=n).step_by(2) {
        for b in (2..=n).step_by(2) {
            sys.pairs.push((a, b));
        }
    }
    sys
}

/// Position `p` of a grid word to its grid vertex.
pub fn position_to_grid(grid: &GridGraph) -> Embedding {
    let (cols, rows) = (grid.cols, grid.rows);
    Embedding::new(
        (0..cols * rows)
            .map(|p| grid.vertex(cols - p % cols, rows - p / cols))
            .collect(),
    )
}

/// Whether the decoded word is the grid itself under [`position_to_grid`].
pub fn decodes_to(sys: &LetterSystem, grid: &GridGraph) -> Result<bool> {
    let g = sys.decode()?;
    let map = position_to_grid(grid);
    Ok(g.order() == grid.graph.order() && map.is_induced(&g, &grid.graph))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grids::{z_grid, zsplit_grid};
    use crate::named;

    #[test]
    fn trivial_systems() {
        let none = LetterSystem {
            k: 2,
            pairs: vec![],
            word: vec![1, 2, 1],
        };
        assert_eq!(none.decode().unwrap(), Graph::empty(3));
        let all = LetterSystem {
            k: 1,
            pairs: vec![(1, 1)],
            word: vec![1; 5],
        };
        assert_eq!(all.decode().unwrap(), named::complete(5));
        let bad = LetterSystem {
            k: 1,
            pairs: vec![],
            word: vec![2],
        };
        assert!(bad.decode().is_err());
    }

    #[test]
    fn seven_letter_pairs() {
        let mut s = z_pairs(7);
        s.sort_unstable();
        let mut want = vec![(1, 2), (3, 4), (5, 6), (3, 2), (5, 4), (7, 6), (2, 5), (5, 2), (2, 7), (7, 2), (4, 7), (7, 4)];
        want.sort_unstable();
        assert_eq!(s, want);
    }

    #[test]
    fn grids_decode_exactly() {
        for n in 1..=6 {
            for k in 1..=6 {
                assert!(decodes_to(&z_letter_encoding(n, k), &z_grid(n, k)).unwrap());
                assert!(decodes_to(&zsplit_letter_encoding(n, k), &zsplit_grid(n, k)).unwrap());
            }
        }
    }

    #[test]
    fn single_column_is_edgeless() {
        assert_eq!(z_letter_encoding(1, 5).decode().unwrap(), Graph::empty(5));
    }

    #[test]
    fn split_even_letters_join() {
        let g = zsplit_letter_encoding(2, 2).decode().unwrap();
        // word 2 1 2 1: positions 0 and 2 carry the even letter
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn json_uses_capital_s() {
        let text = serde_json::to_string(&z_letter_encoding(2, 1)).unwrap();
        assert_eq!(text, r#"{"k":2,"S":[[1,2]],"word":[2,1]}"#);
    }
}
