//! Lorenz braids obtained by desingularising the grid of a hanging diagram.
//!
//! The diagram has `r + 1` horizontal and `c + 1` vertical grid lines. Hung
//! from its corner they become the NW–SE and NE–SW strands of a positive braid
//! on `r + c + 2` strands; every lattice vertex touching a cell becomes one
//! positive crossing. Vertex `(i, j)` sits at height `i + j` and horizontal
//! offset `j - i`; the word lists vertices top to bottom, left to right on ties.

use serde::Serialize;

use crate::diagram::YoungDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LorenzBraid {
    /// Strand count.
    pub n: usize,
    /// Positive Artin generators, 1-based: `i` crosses positions `i` and `i + 1`.
    pub word: Vec<usize>,
    /// `permutation[s]` is the bottom position (0-based) of the strand that
    /// starts at top position `s`.
    pub permutation: Vec<usize>,
}

/// Lattice vertices `(i, j)` incident to at least one cell, in sweep order.
pub fn grid_vertices(d: &YoungDiagram) -> Vec<(usize, usize)> {
    let rows = d.height();
    let cols = d.width();
    let mut verts = Vec::new();
    for i in 0..=rows {
        for j in 0..=cols {
            // cell (row, col) has corners (row-1, col-1) .. (row, col)
            let touches = [(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)]
                .into_iter()
                .any(|(r, c)| r >= 1 && c >= 1 && d.contains(crate::diagram::Cell::new(r, c)));
            if touches {
                verts.push((i, j));
            }
        }
    }
    verts.sort_by_key(|&(i, j)| (i + j, j as isize - i as isize));
    verts
}

/// Generator index of the crossing at vertex `(i, j)` of a diagram with `rows` rows.
pub fn vertex_generator(rows: usize, (i, j): (usize, usize)) -> usize {
    rows + 1 + j - i
}

pub fn build_braid(d: &YoungDiagram) -> LorenzBraid {
    let rows = d.height();
    let n = rows + d.width() + 2;
    let word: Vec<usize> = grid_vertices(d)
        .into_iter()
        .map(|v| vertex_generator(rows, v))
        .collect();
    LorenzBraid::from_word(n, word)
}

impl LorenzBraid {
    pub fn from_word(n: usize, word: Vec<usize>) -> Self {
        debug_assert!(word.iter().all(|&g| g >= 1 && g < n));
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (0..n).collect();
        for &g in &word {
            at.swap(g - 1, g);
        }
        let mut permutation = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            permutation[strand] = pos;
        }
        LorenzBraid {
            n,
            word,
            permutation,
        }
    }

    pub fn crossings(&self) -> usize {
        self.word.len()
    }

    /// Euler characteristic of the canonical surface (discs minus bands).
    pub fn euler_characteristic(&self) -> i64 {
        self.n as i64 - self.word.len() as i64
    }
}

/// Number of cycles of a permutation given as an image vector.
pub fn permutation_cycles(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
        }
    }
    cycles
}

pub fn closure_components(b: &LorenzBraid) -> usize {
    permutation_cycles(&b.permutation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn d(cols: &[usize]) -> YoungDiagram {
        YoungDiagram::from_columns(cols.to_vec()).unwrap()
    }

    #[test]
    fn hopf() {
        let b = build_braid(&d(&[1]));
        assert_eq!(b.n, 4);
        assert_eq!(b.word, vec![2, 1, 3, 2]);
        // (1 3)(2 4) in 1-based notation
        assert_eq!(b.permutation, vec![2, 3, 0, 1]);
        assert_eq!(closure_components(&b), 2);
        assert_eq!(b.euler_characteristic(), 0);
    }

    #[test]
    fn trefoil_and_square() {
        let t = build_braid(&d(&[2]));
        assert_eq!((t.n, t.crossings()), (5, 6));
        assert_eq!(closure_components(&t), 1);
        let s = build_braid(&d(&[2, 2]));
        assert_eq!((s.n, s.crossings()), (6, 9));
        assert_eq!(closure_components(&s), 3);
    }

    #[test]
    fn identity_has_n_components() {
        let b = LorenzBraid::from_word(4, vec![]);
        assert_eq!(closure_components(&b), 4);
    }

    #[test]
    fn rectangles_are_torus_links() {
        for r in 1..=5 {
            for c in 1..=5 {
                let b = build_braid(&YoungDiagram::rectangle(r, c).unwrap());
                assert_eq!(b.crossings(), (r + 1) * (c + 1));
                assert_eq!(closure_components(&b), (r + 1).gcd(&(c + 1)), "{r}x{c}");
            }
        }
    }

    #[test]
    fn euler_formula_on_grid() {
        for dg in crate::diagram::enumerate_all(9) {
            let b = build_braid(&dg);
            assert_eq!(b.crossings() + 1, b.n + dg.cell_count(), "{dg}");
            // every generator occurs, so the canonical surface is connected
            for g in 1..b.n {
                assert!(b.word.contains(&g));
            }
        }
    }

    #[test]
    fn permutation_matches_transpositions() {
        let b = build_braid(&d(&[3, 2, 2]));
        let mut strands: Vec<usize> = (0..b.n).collect();
        for &g in &b.word {
            strands.swap(g - 1, g);
        }
        for (pos, &s) in strands.iter().enumerate() {
            assert_eq!(b.permutation[s], pos);
        }
    }
}
