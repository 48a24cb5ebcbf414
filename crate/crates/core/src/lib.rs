//! Lorenz links from hanging Young diagrams: braids, canonical fiber
//! surfaces, the homological monodromy as a product of Dehn-twist
//! transvections, and certified spectral data for dilatation bounds.
//!
//! ```
//! use lorenz_fiber::{analyze, YoungDiagram};
//!
//! let trefoil = YoungDiagram::from_columns(vec![2]).unwrap();
//! let rec = analyze(&trefoil).unwrap();
//! assert_eq!(rec.char_poly.to_i64_vec().unwrap(), vec![1, -1, 1]);
//! assert!(rec.cyclotomic);
//! ```

pub mod braid;
pub mod diagram;
pub mod dynamics;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod link;
pub mod poly;
pub mod record;
pub mod spectra;
pub mod surface;
pub mod sweep;

pub use braid::{build_braid, closure_components, LorenzBraid};
pub use diagram::{
    enumerate_all, enumerate_family, Cell, CellClass, CellKind, FamilyDecomposition, YoungDiagram,
};
pub use error::{Error, Result};
pub use homology::{
    alexander_polynomial, char_poly, monodromy_seifert_route, monodromy_twist_route,
    MonodromyMatrix,
};
pub use linalg::IntMatrix;
pub use link::LorenzLink;
pub use poly::IntPolynomial;
pub use record::{analyze, AnalysisRecord};
pub use spectra::{cyclotomic_test, mahler_measure, spectral_radius, Certified, SpectrumReport};
pub use surface::{
    cycle_basis, seifert_matrix, surface_stats, CycleBasis, SeifertData, SurfaceStats,
};
