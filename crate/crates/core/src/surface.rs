//! The canonical fiber surface of a Lorenz braid: one disc per strand, one
//! twisted band per crossing. Its first homology has a basis of elementary
//! curves, one around each cell, realised as "bricks": the cycle running
//! through two consecutive crossings of the same generator.

use serde::Serialize;

use crate::braid::{build_braid, closure_components, vertex_generator, LorenzBraid};
use crate::diagram::{Cell, YoungDiagram};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurfaceStats {
    pub euler: i64,
    pub betti1: usize,
    pub boundary_components: usize,
    /// Only for knots.
    pub genus: Option<usize>,
}

pub fn surface_stats(d: &YoungDiagram) -> SurfaceStats {
    stats_of_braid(&build_braid(d))
}

pub fn stats_of_braid(b: &LorenzBraid) -> SurfaceStats {
    let euler = b.euler_characteristic();
    let betti1 = (1 - euler) as usize;
    let boundary_components = closure_components(b);
    let genus = (boundary_components == 1).then_some(betti1 / 2);
    SurfaceStats {
        euler,
        betti1,
        boundary_components,
        genus,
    }
}

/// Two consecutive occurrences of one generator in the braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Brick {
    pub generator: usize,
    pub first: usize,
    pub second: usize,
}

impl Brick {
    /// Whether the two brick cycles meet on the surface (intersect once).
    pub fn links(&self, other: &Brick) -> bool {
        if self.generator == other.generator {
            self.second == other.first || other.second == self.first
        } else if self.generator.abs_diff(other.generator) == 1 {
            let interleaved = |a: &Brick, b: &Brick| {
                a.first < b.first && b.first < a.second && a.second < b.second
            };
            interleaved(self, other) || interleaved(other, self)
        } else {
            false
        }
    }
}

/// Homology basis in canonical cell order, each cell paired with its brick.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleBasis {
    pub cells: Vec<Cell>,
    pub bricks: Vec<Brick>,
}

impl CycleBasis {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }
}

/// Bricks of a word, grouped by generator (index `g - 1`), each group in word order.
pub fn bricks_by_generator(b: &LorenzBraid) -> Vec<Vec<Brick>> {
    let mut last: Vec<Option<usize>> = vec![None; b.n];
    let mut groups = vec![Vec::new(); b.n.saturating_sub(1)];
    for (pos, &g) in b.word.iter().enumerate() {
        if let Some(prev) = last[g] {
            groups[g - 1].push(Brick {
                generator: g,
                first: prev,
                second: pos,
            });
        }
        last[g] = Some(pos);
    }
    groups
}

pub fn cycle_basis(b: &LorenzBraid, d: &YoungDiagram) -> Result<CycleBasis> {
    let groups = bricks_by_generator(b);
    let brick_count: usize = groups.iter().map(Vec::len).sum();
    if brick_count != d.cell_count() {
        return Err(Error::BasisMismatch {
            bricks: brick_count,
            cells: d.cell_count(),
        });
    }
    // cells on one diagonal share a generator; pair them with bricks by depth
    let rows = d.height();
    let mut per_diag: Vec<Vec<Cell>> = vec![Vec::new(); groups.len()];
    for cell in d.cells() {
        let g = vertex_generator(rows, (cell.row - 1, cell.col - 1));
        match per_diag.get_mut(g - 1) {
            Some(v) => v.push(cell),
            None => {
                return Err(Error::BasisMismatch {
                    bricks: brick_count,
                    cells: d.cell_count(),
                })
            }
        }
    }
    let cells = d.cells();
    let mut bricks = Vec::with_capacity(cells.len());
    for &cell in &cells {
        let g = vertex_generator(rows, (cell.row - 1, cell.col - 1));
        let diag = &mut per_diag[g - 1];
        diag.sort_by_key(|c| c.row + c.col);
        let depth = diag
            .iter()
            .position(|&c| c == cell)
            .expect("cell on its diagonal");
        let brick = groups[g - 1]
            .get(depth)
            .copied()
            .ok_or(Error::BasisMismatch {
                bricks: brick_count,
                cells: d.cell_count(),
            })?;
        bricks.push(brick);
    }
    if per_diag
        .iter()
        .zip(&groups)
        .any(|(c, g)| c.len() != g.len())
    {
        return Err(Error::BasisMismatch {
            bricks: brick_count,
            cells: d.cell_count(),
        });
    }
    Ok(CycleBasis { cells, bricks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub basis: CycleBasis,
    /// Seifert linking form `V[x][y] = lk(x, y⁺)`.
    pub v: IntMatrix,
    /// Intersection form `V - Vᵀ`.
    pub j: IntMatrix,
}

/// Seifert matrix of the canonical surface in the brick basis.
///
/// A positive band gives self-linking −1. Two linked bricks contribute −1 in
/// the row of the brick that starts earlier in the word and 0 in the other.
pub fn seifert_matrix(basis: CycleBasis) -> SeifertData {
    let m = basis.len();
    let mut v = IntMatrix::zeros(m, m);
    for x in 0..m {
        v[(x, x)] = -1;
        for y in 0..m {
            let (bx, by) = (&basis.bricks[x], &basis.bricks[y]);
            if x != y && bx.first < by.first && bx.links(by) {
                v[(x, y)] = -1;
            }
        }
    }
    let j = v
        .checked_sub(&v.transpose())
        .expect("entries in {-1, 0, 1}");
    SeifertData { basis, v, j }
}

/// Braid, basis and Seifert data of a diagram in one go.
pub fn seifert_data(d: &YoungDiagram) -> Result<(LorenzBraid, SeifertData)> {
    let braid = build_braid(d);
    let basis = cycle_basis(&braid, d)?;
    Ok((braid, seifert_matrix(basis)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate_all;
    use num_bigint::BigInt;

    fn d(cols: &[usize]) -> YoungDiagram {
        YoungDiagram::from_columns(cols.to_vec()).unwrap()
    }

    #[test]
    fn stats_examples() {
        let hopf = surface_stats(&d(&[1]));
        assert_eq!(
            (hopf.euler, hopf.betti1, hopf.boundary_components),
            (0, 1, 2)
        );
        let tref = surface_stats(&d(&[2]));
        assert_eq!(
            (
                tref.euler,
                tref.betti1,
                tref.boundary_components,
                tref.genus
            ),
            (-1, 2, 1, Some(1))
        );
        let sq = surface_stats(&d(&[2, 2]));
        assert_eq!((sq.euler, sq.betti1, sq.boundary_components), (-3, 4, 3));
    }

    #[test]
    fn bricks_match_cells() {
        let hopf = build_braid(&d(&[1]));
        let basis = cycle_basis(&hopf, &d(&[1])).unwrap();
        assert_eq!(
            basis.bricks,
            vec![Brick {
                generator: 2,
                first: 0,
                second: 3
            }]
        );

        for r in 1..=4 {
            for c in 1..=4 {
                let dg = YoungDiagram::rectangle(r, c).unwrap();
                let basis = cycle_basis(&build_braid(&dg), &dg).unwrap();
                assert_eq!(basis.len(), r * c);
            }
        }
    }

    #[test]
    fn brick_spans_the_cell_corners() {
        let dg = d(&[4, 3, 3, 1]);
        let braid = build_braid(&dg);
        let verts = crate::braid::grid_vertices(&dg);
        let basis = cycle_basis(&braid, &dg).unwrap();
        for (cell, brick) in basis.cells.iter().zip(&basis.bricks) {
            assert_eq!(verts[brick.first], (cell.row - 1, cell.col - 1));
            assert_eq!(verts[brick.second], (cell.row, cell.col));
        }
    }

    #[test]
    fn mismatched_diagram_is_rejected() {
        let braid = build_braid(&d(&[2]));
        assert!(matches!(
            cycle_basis(&braid, &d(&[1])),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn hopf_and_trefoil_matrices() {
        let (_, s) = seifert_data(&d(&[1])).unwrap();
        assert_eq!(s.v.to_rows(), vec![vec![-1]]);
        assert_eq!(s.j.to_rows(), vec![vec![0]]);
        let (_, s) = seifert_data(&d(&[2])).unwrap();
        // basis order: (2,1) then (1,1); the (1,1) brick starts first
        assert_eq!(s.v.to_rows(), vec![vec![-1, 0], vec![-1, -1]]);
        assert_eq!(s.j.to_rows(), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(s.v.determinant(), BigInt::from(1));
    }

    #[test]
    fn unimodular_and_local() {
        for dg in enumerate_all(9) {
            let (braid, s) = seifert_data(&dg).unwrap();
            let det = s.v.determinant();
            assert!(det == BigInt::from(1) || det == BigInt::from(-1), "{dg}");
            assert!(s.j.is_antisymmetric());
            assert!(s.j.max_abs() <= 1);
            let cells = &s.basis.cells;
            for x in 0..cells.len() {
                for y in 0..cells.len() {
                    if s.j[(x, y)] != 0 {
                        let (a, b) = (cells[x], cells[y]);
                        let dr = a.row as i64 - b.row as i64;
                        let dc = a.col as i64 - b.col as i64;
                        // edge neighbours or the diagonal along one generator
                        assert!(
                            (dr.abs() + dc.abs() == 1) || (dr == dc && dr.abs() == 1),
                            "{dg}: {a} meets {b}"
                        );
                    }
                }
            }
            let stats = stats_of_braid(&braid);
            if stats.boundary_components == 1 {
                assert_eq!(stats.betti1 % 2, 0);
                assert_ne!(s.j.determinant(), BigInt::from(0));
            }
        }
    }
}
