//! The whole construction for one diagram, computed once and shared.

use crate::braid::{build_braid, LorenzBraid};
use crate::diagram::YoungDiagram;
use crate::error::Result;
use crate::homology::{monodromy_seifert_route, MonodromyMatrix};
use crate::surface::{cycle_basis, seifert_matrix, stats_of_braid, SeifertData, SurfaceStats};

#[derive(Debug, Clone)]
pub struct LorenzLink {
    pub diagram: YoungDiagram,
    pub braid: LorenzBraid,
    pub stats: SurfaceStats,
    pub seifert: SeifertData,
    pub monodromy: MonodromyMatrix,
}

impl LorenzLink {
    pub fn new(diagram: &YoungDiagram) -> Result<Self> {
        let braid = build_braid(diagram);
        let stats = stats_of_braid(&braid);
        let seifert = seifert_matrix(cycle_basis(&braid, diagram)?);
        let monodromy = monodromy_seifert_route(&seifert)?;
        Ok(LorenzLink {
            diagram: diagram.clone(),
            braid,
            stats,
            seifert,
            monodromy,
        })
    }

    /// Homology vector of the elementary class of `cell`, if it is a cell.
    pub fn basis_index(&self, cell: crate::diagram::Cell) -> Option<usize> {
        self.diagram.cell_index(cell)
    }
}
