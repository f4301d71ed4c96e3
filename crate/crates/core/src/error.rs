use thiserror::Error;

/// Errors reported by geometric constructions and evaluations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("homogeneous coordinates must be finite and not all zero")]
    InvalidHomogeneous,

    #[error("lines are proportional; intersection undefined")]
    ProportionalLines,

    #[error("point at infinity has no affine image")]
    PointAtInfinity,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("duplicate consecutive vertices at index {0}")]
    DuplicateVertex(usize),

    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(usize),

    #[error("point is not strictly interior; dual unbounded or degenerate")]
    NotInterior,

    #[error("point lies outside the polygon")]
    OutsidePolygon,

    #[error("degenerate simplex (zero vertex bracket)")]
    DegenerateSimplex,

    #[error("base vertex index {index} out of range for {len} vertices")]
    BadVertexIndex { index: usize, len: usize },

    #[error("facet index {index} out of range for {len} facets")]
    BadFacetIndex { index: usize, len: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    #[error("conic matrix is not symmetric")]
    AsymmetricConic,

    #[error("conic matrix is degenerate (zero determinant)")]
    DegenerateConic,

    #[error("adjoint fit residual {residual:.3e} exceeds tolerance {tol:.1e}")]
    AdjointResidual { residual: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
