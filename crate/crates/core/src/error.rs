use num_bigint::BigInt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(i64),
    #[error("interpolation needs at least one point")]
    EmptyInterpolation,
    #[error("expected a polynomial of degree <= {expected}, got degree {got}")]
    DegreeTooHigh { expected: usize, got: usize },
    #[error("sum of roots is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("row has length {got}, ambient dimension is {want}")]
    BadRowLength { want: usize, got: usize },
    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("infeasible inequality system")]
    Infeasible,
    #[error("invalid rational literal `{0}`")]
    BadRational(String),
    #[error("affine span generators must be lattice points")]
    NonLatticeGenerator,
    #[error("vertex {0} is not a lattice point; Ehrhart interpolation needs an integral polytope")]
    NonIntegralVertex(usize),
    #[error("count at dilation 0 is {0}, expected 1; input is not a bounded integral polytope")]
    DilationZeroMismatch(BigInt),
    #[error("interpolated polynomial fails an Ehrhart sanity check: {0}")]
    NotEhrhart(String),
    #[error("h*-transform produced a negative or non-integral entry at index {0}")]
    InvalidHStar(usize),
    #[error("coefficients or right-hand sides exceed the supported magnitude for exact counting")]
    MagnitudeLimit,
    #[error("{0}")]
    InvalidInput(String),
    #[error("exact cross-checks disagree: {0}")]
    IntegrityCheck(String),
    #[error("numeric root finding did not converge")]
    RootFindingStalled,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
