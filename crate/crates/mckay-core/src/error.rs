//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors raised by exact arithmetic, linear algebra and group machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u64, u64),

    #[error("cannot embed conductor {from} into {to}: {to} is not a multiple of {from}")]
    BadEmbedding { from: u64, to: u64 },

    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("invalid symplectic form: {0}")]
    InvalidSymplecticForm(&'static str),

    #[error("generator {index} is not invertible")]
    SingularGenerator { index: usize },

    #[error("group closure exceeded the cap of {cap} elements (at least {found})")]
    ClosureCapExceeded { cap: usize, found: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element order exceeded the cap of {cap}")]
    OrderCapExceeded { cap: u64 },

    #[error("matrix does not satisfy g^{order} = 1")]
    WrongOrder { order: u64 },

    #[error("group does not preserve volume (a determinant differs from 1); ages are undefined")]
    NotSpecialLinear,

    #[error("operation requires a symplectic group, but an element fails to preserve omega")]
    NotSymplectic,

    #[error(
        "age of element {element} is not an integer ({weighted}/{order}); \
         the group is not volume-preserving"
    )]
    NonIntegralAge {
        element: usize,
        weighted: u64,
        order: u64,
    },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
