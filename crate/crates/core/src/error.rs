use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("columns must be non-empty")]
    EmptyDiagram,
    #[error("columns must be ≥ 1 (found {value} at position {index})")]
    ZeroColumn { index: usize, value: usize },
    #[error("columns must be non-increasing (column {index} has length {next} > {prev})")]
    NotAPartition {
        index: usize,
        prev: usize,
        next: usize,
    },
    #[error("brick count {bricks} does not match cell count {cells}")]
    BasisMismatch { bricks: usize, cells: usize },
    #[error("Seifert matrix is not unimodular (det = {det})")]
    NotUnimodular { det: String },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix inverse is not integral")]
    NotIntegral,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("polynomial has degree zero")]
    DegreeZero,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("root isolation reached error {achieved:e}, above tolerance {tol:e}")]
    ToleranceNotMet { achieved: f64, tol: f64 },
    #[error("diagram is outside the family regime (k = {k}, l = {l})")]
    NotInFamilyRegime { k: usize, l: usize },
    #[error("bound is degenerate for k = {k} (needs k ≥ 2)")]
    BoundDegenerate { k: usize },
    #[error("cell ({row}, {col}) is not in the diagram")]
    NoSuchCell { row: usize, col: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
