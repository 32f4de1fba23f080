use thiserror::Error;

/// Errors raised by the operators, closed forms and oracles of this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operator is not Hermitian: max |A - A^dagger| = {max_asymmetry:e} at ({row}, {col})")]
    NotHermitian {
        max_asymmetry: f64,
        row: usize,
        col: usize,
    },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("site index {site} out of range for {sites} sites")]
    InvalidSite { site: usize, sites: usize },

    #[error("site {0} listed more than once")]
    DuplicateSite(usize),

    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("state too large: {sites} sites would need {amplitudes} amplitudes (limit {limit})")]
    StateTooLarge {
        sites: usize,
        amplitudes: usize,
        limit: usize,
    },

    #[error("cubic has complex roots (p = {p:e}, arccos argument {argument})")]
    ComplexCubicRoots { p: f64, argument: f64 },

    #[error("eigendecomposition failed to converge")]
    EigenFailure,

    #[error("identity check failed: {0}")]
    IdentityMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
