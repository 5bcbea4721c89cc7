use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A brute-force request is larger than the configured feasibility limit.
    #[error("{what} = {value} exceeds the feasibility bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid whirlpool matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("index {index} is out of range (maximum {max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("coefficient ({i}, {j}) is beyond the truncation order {order}")]
    BeyondOrder { i: usize, j: usize, order: usize },

    #[error("series is not invertible: its constant term is zero")]
    NotInvertible,

    #[error("unknown elementary series `{0}`")]
    UnknownSeries(String),

    /// A coefficient that must be an integer multiple of a power of two was not.
    #[error("coefficient {value} at {at} is not divisible by {divisor}")]
    NonIntegral {
        at: String,
        value: String,
        divisor: String,
    },

    #[error("seed violates the sign condition a(0,i) = (-1)^i a(i,0) first at i = {0}")]
    SymmetryViolation(usize),

    #[error("identity `{identity}` fails at ({i}, {j})")]
    IdentityFailure {
        identity: &'static str,
        i: usize,
        j: usize,
    },
}
