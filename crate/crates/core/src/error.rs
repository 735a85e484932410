use thiserror::Error;

/// Errors raised by the geometric kernel and the solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported ambient dimension {0} (supported: 2..=4)")]
    UnsupportedDimension(usize),

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("recession cone contains a line")]
    NonPointed,

    #[error("set is unbounded")]
    Unbounded,

    #[error("face has dimension {got}, expected {expected}")]
    WrongFaceDimension { expected: usize, got: usize },

    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    #[error("origin-in-K: the origin satisfies every halfspace")]
    OriginInK,

    #[error("recession-cone-mismatch: rec K differs from the given cone")]
    RecessionConeMismatch,

    #[error("not-contained-in-C: the set is not contained in the cone")]
    NotContainedInCone,

    #[error("empty-intersection: the halfspaces have no common point")]
    EmptyIntersection,

    #[error("origin-in-hull: the origin lies in the convex hull of the points")]
    OriginInHull,

    #[error("direction lies outside the interior of the polar cone")]
    OutsideDomain,

    #[error("point lies outside the interior of the cone")]
    OutsideCone,

    #[error("truncation level must be positive")]
    NonPositiveLevel,

    #[error("not a face of the given pseudo-cone")]
    NotAFace,

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("solver did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("pipeline stage {stage} failed: {source}")]
    Stage {
        stage: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable name of the violated invariant.
    pub fn reason(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::UnsupportedDimension(_) => "unsupported-dimension",
            Error::DependentBasis => "dependent-basis",
            Error::EmptyPolyhedron => "empty-polyhedron",
            Error::NonPointed => "non-pointed",
            Error::Unbounded => "unbounded",
            Error::WrongFaceDimension { .. } => "wrong-face-dimension",
            Error::NotFullDimensional => "not-full-dimensional",
            Error::OriginInK => "origin-in-K",
            Error::RecessionConeMismatch => "recession-cone-mismatch",
            Error::NotContainedInCone => "not-contained-in-C",
            Error::EmptyIntersection => "empty-intersection",
            Error::OriginInHull => "origin-in-hull",
            Error::OutsideDomain => "outside-domain",
            Error::OutsideCone => "outside-cone",
            Error::NonPositiveLevel => "non-positive-level",
            Error::NotAFace => "not-a-face",
            Error::InvalidMeasure(_) => "invalid-measure",
            Error::InvalidInput(_) => "invalid-input",
            Error::NonConvergence { .. } => "non-convergence",
            Error::Stage { source, .. } => source.reason(),
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
