use thiserror::Error;

/// Errors raised anywhere in the elimination and solving pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("Dixon determinant vanishes identically; elimination degenerates for this input")]
    DegenerateSystem,
    #[error("kernel of the numeric Dixon matrix has dimension {0}")]
    AmbiguousKernel(usize),
    #[error("quaternion norm {0} is not within 1e-6 of 1")]
    NotUnit(f64),
    #[error("polynomial contains odd powers of its unknown")]
    NotEven,
    #[error("expected degree {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("system has no real non-extraneous solutions")]
    NoRealSolutions,
    #[error("determinant-derived G disagrees with the closed form")]
    CrossCheckMismatch,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
