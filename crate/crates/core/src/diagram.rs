//! Hanging Young diagrams, stored as column lengths.
//!
//! Cells use matrix coordinates `(row, col)`, both 1-based: row 1 is the row
//! touching the corner, column 1 the leftmost column. In hanging position the
//! corner points up, so `(row - 1, col - 1)` is the cell right above a cell.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The diagonal neighbour towards the corner, if it has valid coordinates.
    pub fn north_west(self) -> Option<Cell> {
        (self.row > 1 && self.col > 1).then(|| Cell::new(self.row - 1, self.col - 1))
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct YoungDiagram {
    columns: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    columns: Vec<usize>,
}

impl TryFrom<RawDiagram> for YoungDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        YoungDiagram::from_columns(raw.columns)
    }
}

impl From<YoungDiagram> for RawDiagram {
    fn from(d: YoungDiagram) -> Self {
        RawDiagram { columns: d.columns }
    }
}

impl YoungDiagram {
    pub fn from_columns(columns: impl Into<Vec<usize>>) -> Result<Self> {
        let columns = columns.into();
        if columns.is_empty() {
            return Err(Error::EmptyDiagram);
        }
        if let Some((index, &value)) = columns.iter().enumerate().find(|(_, &c)| c == 0) {
            return Err(Error::ZeroColumn { index, value });
        }
        if let Some(i) = columns.windows(2).position(|w| w[1] > w[0]) {
            return Err(Error::NotAPartition {
                index: i + 1,
                prev: columns[i],
                next: columns[i + 1],
            });
        }
        Ok(YoungDiagram { columns })
    }

    /// Single column of the given height.
    pub fn column(height: usize) -> Result<Self> {
        Self::from_columns(vec![height])
    }

    /// `rows × cols` rectangle (`cols` columns of height `rows`).
    pub fn rectangle(rows: usize, cols: usize) -> Result<Self> {
        Self::from_columns(vec![rows; cols])
    }

    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// Number of columns.
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    /// Number of rows (length of the first column).
    pub fn height(&self) -> usize {
        self.columns[0]
    }

    pub fn cell_count(&self) -> usize {
        self.columns.iter().sum()
    }

    pub fn row_length(&self, row: usize) -> usize {
        self.columns.iter().take_while(|&&c| c >= row).count()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col >= 1
            && cell.row >= 1
            && cell.col <= self.columns.len()
            && cell.row <= self.columns[cell.col - 1]
    }

    /// Cells in canonical order: columns right to left, and within a column
    /// from the bottom (largest row) to the top.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.cell_count());
        for (ci, &h) in self.columns.iter().enumerate().rev() {
            for row in (1..=h).rev() {
                out.push(Cell::new(row, ci + 1));
            }
        }
        out
    }

    /// Position of `cell` in [`cells`](Self::cells).
    pub fn cell_index(&self, cell: Cell) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let before: usize = self.columns[cell.col..].iter().sum();
        Some(before + self.columns[cell.col - 1] - cell.row)
    }

    pub fn transpose(&self) -> YoungDiagram {
        let columns = (1..=self.height()).map(|r| self.row_length(r)).collect();
        YoungDiagram { columns }
    }

    /// Minimal column length, the height of the main rectangle.
    pub fn min_column(&self) -> usize {
        *self.columns.last().expect("non-empty")
    }

    pub fn is_rectangle(&self) -> bool {
        self.height() == self.min_column()
    }

    /// The NW neighbour of `cell` when it lies in the diagram.
    pub fn nw_neighbor(&self, cell: Cell) -> Option<Cell> {
        cell.north_west().filter(|&c| self.contains(c))
    }

    pub fn classify_cells(&self) -> CellClass {
        let entries = self
            .cells()
            .into_iter()
            .map(|cell| match self.nw_neighbor(cell) {
                Some(nw) => (cell, CellKind::Internal { nw }),
                None => (cell, CellKind::External),
            })
            .collect();
        CellClass { entries }
    }

    pub fn decompose(&self) -> FamilyDecomposition {
        let b = self.width();
        let l = self.min_column();
        let k = self.cell_count() - b * l;
        let mixing_cells = self.cells().into_iter().filter(|c| c.row > l).collect();
        FamilyDecomposition {
            b,
            l,
            k,
            mixing_cells,
        }
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Internal { nw: Cell },
    External,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellClass {
    /// In canonical cell order.
    pub entries: Vec<(Cell, CellKind)>,
}

impl CellClass {
    pub fn internal(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.entries.iter().filter_map(|&(c, k)| match k {
            CellKind::Internal { nw } => Some((c, nw)),
            CellKind::External => None,
        })
    }

    pub fn external(&self) -> impl Iterator<Item = Cell> + '_ {
        self.entries
            .iter()
            .filter(|(_, k)| matches!(k, CellKind::External))
            .map(|&(c, _)| c)
    }

    pub fn internal_count(&self) -> usize {
        self.internal().count()
    }

    pub fn external_count(&self) -> usize {
        self.entries.len() - self.internal_count()
    }
}

/// A diagram viewed as a `b × l` rectangle plus a mixing zone of `k` cells hanging below it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyDecomposition {
    pub b: usize,
    pub l: usize,
    pub k: usize,
    pub mixing_cells: Vec<Cell>,
}

impl FamilyDecomposition {
    pub fn in_mixing_zone(&self, cell: Cell) -> bool {
        cell.row > self.l
    }

    /// The mixing zone as a diagram of its own (rows re-indexed from 1), if non-empty.
    pub fn mixing_diagram(&self, d: &YoungDiagram) -> Option<YoungDiagram> {
        let cols: Vec<usize> = d
            .columns()
            .iter()
            .map(|&c| c - self.l)
            .filter(|&c| c > 0)
            .collect();
        YoungDiagram::from_columns(cols).ok()
    }

    /// Whether the diagram belongs to `Lorenz_{b, k_max}`.
    pub fn member_of(&self, b: usize, k_max: usize) -> bool {
        self.b == b && self.k <= k_max
    }
}

/// Partitions of `n` into at most `max_parts` parts, each at most `max_part`,
/// in descending lexicographic order.
fn partitions_bounded(n: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(
        n: usize,
        max_parts: usize,
        max_part: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        if max_parts == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            prefix.push(p);
            rec(n - p, max_parts - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}

/// Diagrams of width `b` with minimal column `l ∈ [l_min, l_max]` and at most
/// `k_max` cells below the rectangle, ordered by `(l, k, columns)`.
pub fn enumerate_family(
    b: usize,
    k_max: usize,
    l_min: usize,
    l_max: usize,
) -> impl Iterator<Item = YoungDiagram> {
    let mut out = Vec::new();
    if b >= 1 && l_min >= 1 {
        for l in l_min..=l_max {
            for k in 0..=k_max {
                // the last column has length exactly l, so the extra cells
                // spread over the first b - 1 columns
                let mut level: Vec<YoungDiagram> = partitions_bounded(k, b - 1, k)
                    .into_iter()
                    .map(|extra| {
                        let columns = (0..b)
                            .map(|i| l + extra.get(i).copied().unwrap_or(0))
                            .collect();
                        YoungDiagram { columns }
                    })
                    .collect();
                level.sort();
                out.extend(level);
            }
        }
    }
    out.into_iter()
}

/// Every diagram with at most `n_max` cells, by size and then in descending
/// lexicographic order of the columns.
pub fn enumerate_all(n_max: usize) -> impl Iterator<Item = YoungDiagram> {
    (1..=n_max).flat_map(|n| {
        partitions_bounded(n, n, n)
            .into_iter()
            .map(|columns| YoungDiagram { columns })
    })
}
