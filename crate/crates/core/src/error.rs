use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },

    #[error("index error: {0}")]
    Index(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("linear map is singular")]
    SingularMap,

    #[error("invalid quadratic Lie algebra: {0}")]
    InvalidAlgebra(String),

    #[error("not a Lie algebra: {0}")]
    NotLieAlgebra(String),

    #[error("subspace is not closed under the bracket")]
    NotClosed,

    #[error("subspace is not totally isotropic")]
    NotIsotropic,

    #[error("bilinear form is degenerate or not symmetric")]
    DegenerateForm,

    #[error("no square root of {0} in Q(i)")]
    NoSquareRoot(String),

    #[error("not a skew-symmetric derivation: {0}")]
    NotSkewDerivation(String),

    #[error("derivation is not inner")]
    NotInner,

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("algebra is not reduced")]
    NotReduced,

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("no central isotropic vector yields a double-extension frame")]
    NoFrame,

    #[error("map is not skew-symmetric for the given form")]
    NotSkew,

    #[error("kernel of the map is not contained in its image")]
    KernelNotInImage,

    #[error("unexpected orbit type: {0}")]
    UnexpectedOrbit(String),

    #[error("bad catalog parameter: {0}")]
    BadParameter(String),

    #[error("random isometry resampling exhausted after {0} attempts")]
    ResampleExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
