//! Orbits of elementary classes under `H⁻¹` and the homological shadows of
//! the dynamical arguments: the NW shift on internal cells, the collapse of
//! external cells into the mixing zone, and the dilatation bound.
//!
//! Lengths are ℓ¹ norms in the elementary-curve basis, so every basis class
//! has length 1.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::diagram::{Cell, CellKind};
use crate::error::{Error, Result};
use crate::linalg::{l1_norm, IntMatrix};
use crate::link::LorenzLink;
use crate::poly::ln_big;
use crate::spectra::Certified;

/// Orbit length used by the sweeps: several traversals of the rectangle.
pub fn default_orbit_length(l: usize) -> usize {
    200.max(20 * l)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitTrace {
    pub start_cell: Cell,
    /// `(H⁻¹)ⁿ·e_c` for `n = 0..=N`.
    pub vectors: Vec<Vec<BigInt>>,
    pub l1_norms: Vec<BigInt>,
    pub supports: Vec<Vec<Cell>>,
    /// `log ℓ¹(v_N) / N`.
    pub est_growth_rate: f64,
    /// Leading steps during which the orbit stays a single `±e_x`.
    pub transit_length: usize,
}

impl OrbitTrace {
    pub fn steps(&self) -> usize {
        self.vectors.len() - 1
    }
}

pub fn orbit_trace(
    h_inv: &IntMatrix,
    cells: &[Cell],
    start: Cell,
    steps: usize,
) -> Result<OrbitTrace> {
    if steps == 0 {
        return Err(Error::InvalidArgument("orbit length must be ≥ 1".into()));
    }
    if h_inv.rows() != cells.len() || !h_inv.is_square() {
        return Err(Error::Dimension(format!(
            "{}x{} matrix for {} cells",
            h_inv.rows(),
            h_inv.cols(),
            cells.len()
        )));
    }
    let idx = cells
        .iter()
        .position(|&c| c == start)
        .ok_or(Error::NoSuchCell {
            row: start.row,
            col: start.col,
        })?;
    let mut v = vec![BigInt::zero(); cells.len()];
    v[idx] = BigInt::one();
    let mut vectors = Vec::with_capacity(steps + 1);
    vectors.push(v);
    for n in 0..steps {
        let next = h_inv.mul_big_vec(&vectors[n]);
        vectors.push(next);
    }
    let l1_norms: Vec<BigInt> = vectors.iter().map(|v| l1_norm(v)).collect();
    let supports: Vec<Vec<Cell>> = vectors
        .iter()
        .map(|v| {
            cells
                .iter()
                .zip(v)
                .filter(|(_, x)| !x.is_zero())
                .map(|(&c, _)| c)
                .collect()
        })
        .collect();
    let transit_length = vectors
        .iter()
        .take_while(|v| {
            let mut nz = v.iter().filter(|x| !x.is_zero());
            nz.next().is_some_and(|x| x.abs().is_one()) && nz.next().is_none()
        })
        .count();
    let est_growth_rate = ln_big(&l1_norms[steps]) / steps as f64;
    Ok(OrbitTrace {
        start_cell: start,
        vectors,
        l1_norms,
        supports,
        est_growth_rate,
        transit_length,
    })
}

/// Windowed estimate `log(ℓ¹_N / ℓ¹_{N/2}) / (N − N/2)`.
pub fn growth_rate(trace: &OrbitTrace) -> Result<f64> {
    let n = trace.steps();
    if n < 50 {
        return Err(Error::InvalidArgument(format!(
            "growth rate needs at least 50 steps, got {n}"
        )));
    }
    let half = n / 2;
    Ok((ln_big(&trace.l1_norms[n]) - ln_big(&trace.l1_norms[half])) / (n - half) as f64)
}

/// Steps `n` at which `ℓ¹(v_{n+l}) > k·ℓ¹(v_n)`.
pub fn blockwise_violations(trace: &OrbitTrace, l: usize, k: usize) -> Vec<usize> {
    let k = BigInt::from(k);
    (0..trace.l1_norms.len().saturating_sub(l))
        .filter(|&n| trace.l1_norms[n + l] > &k * &trace.l1_norms[n])
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InternalViolation {
    pub cell: Cell,
    pub nw: Cell,
    pub image: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InternalReport {
    pub checks: usize,
    pub violations: Vec<InternalViolation>,
}

impl InternalReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `H⁻¹·e_d = e_{NW(d)}` for every internal cell `d`.
pub fn internal_lemma_check(link: &LorenzLink) -> InternalReport {
    let cells = &link.seifert.basis.cells;
    let h_inv = &link.monodromy.h_inv;
    let mut checks = 0;
    let mut violations = Vec::new();
    for (cell, kind) in link.diagram.classify_cells().entries {
        let CellKind::Internal { nw } = kind else {
            continue;
        };
        checks += 1;
        let (d, a) = (index(cells, cell), index(cells, nw));
        let image = h_inv.column(d);
        let ok = image
            .iter()
            .enumerate()
            .all(|(i, &x)| x == i64::from(i == a));
        if !ok {
            violations.push(InternalViolation { cell, nw, image });
        }
    }
    InternalReport { checks, violations }
}

fn index(cells: &[Cell], c: Cell) -> usize {
    cells
        .iter()
        .position(|&x| x == c)
        .expect("cell of the basis")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExternalCheck {
    pub cell: Cell,
    /// Cells in the support of `H⁻²·e_c`.
    pub support: Vec<Cell>,
    pub l1: i64,
    pub in_mixing_zone: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExternalReport {
    pub b: usize,
    pub l: usize,
    pub k: usize,
    pub checks: Vec<ExternalCheck>,
}

impl ExternalReport {
    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| !c.ok).count()
    }

    pub fn ok(&self) -> bool {
        self.violations() == 0
    }
}

/// Checks that `H⁻²·e_c` lies in the mixing zone with ℓ¹ norm at most `k`,
/// for every external cell `c`.
pub fn external_lemma_check(link: &LorenzLink) -> Result<ExternalReport> {
    let fam = link.diagram.decompose();
    if fam.k == 0 || fam.l < 2 {
        return Err(Error::NotInFamilyRegime { k: fam.k, l: fam.l });
    }
    let cells = &link.seifert.basis.cells;
    let h_inv2 = link.monodromy.h_inv.checked_mul(&link.monodromy.h_inv)?;
    let checks = link
        .diagram
        .classify_cells()
        .external()
        .map(|cell| {
            let image = h_inv2.column(index(cells, cell));
            let support: Vec<Cell> = cells
                .iter()
                .zip(&image)
                .filter(|(_, &x)| x != 0)
                .map(|(&c, _)| c)
                .collect();
            let l1 = image.iter().map(|x| x.abs()).sum::<i64>();
            let in_mixing_zone = support.iter().all(|&c| fam.in_mixing_zone(c));
            let ok = in_mixing_zone && l1 <= fam.k as i64;
            ExternalCheck {
                cell,
                support,
                l1,
                in_mixing_zone,
                ok,
            }
        })
        .collect();
    Ok(ExternalReport {
        b: fam.b,
        l: fam.l,
        k: fam.k,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub b: usize,
    pub k: usize,
    pub l: usize,
    pub cells: usize,
    pub rho: f64,
    pub rho_err: f64,
    pub log_rho: f64,
    /// `b·log k / (cells − k)`, i.e. `log k / l`.
    pub bound: f64,
    /// The same bound with the surface Euler characteristic `|1 − cells|` in
    /// place of the cell count, when its denominator is positive.
    pub bound_surface_chi: Option<f64>,
    /// `bound − log ρ`.
    pub margin: f64,
    pub holds: bool,
}

/// Compares `log ρ(H)` against `b·log k / (cells − k)`.
pub fn theorem_bound_check(link: &LorenzLink, rho: Certified) -> Result<BoundReport> {
    let fam = link.diagram.decompose();
    if fam.k <= 1 {
        return Err(Error::BoundDegenerate { k: fam.k });
    }
    let cells = link.diagram.cell_count();
    let log_k = (fam.k as f64).ln();
    let bound = fam.b as f64 * log_k / (cells - fam.k) as f64;
    let chi_denominator = cells as i64 - 1 - fam.k as i64;
    let bound_surface_chi =
        (chi_denominator > 0).then(|| fam.b as f64 * log_k / chi_denominator as f64);
    let log_rho = rho.value.ln();
    // error of log ρ from the certified interval of ρ
    let log_err = if rho.err == 0.0 {
        0.0
    } else {
        rho.hi().ln() - rho.lo().max(f64::MIN_POSITIVE).ln()
    };
    let margin = bound - log_rho;
    Ok(BoundReport {
        b: fam.b,
        k: fam.k,
        l: fam.l,
        cells,
        rho: rho.value,
        rho_err: rho.err,
        log_rho,
        bound,
        bound_surface_chi,
        margin,
        holds: margin >= -log_err,
    })
}
