use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("unknown built-in code `{0}`")]
    UnknownCode(String),

    #[error("malformed generator matrix: {0}")]
    MalformedMatrix(String),

    #[error("generator rows are linearly dependent (rank {rank} of {rows})")]
    DependentRows { rank: usize, rows: usize },

    #[error("code is not self-dual: {0}")]
    NotSelfDual(String),

    #[error("coordinate {coordinate} out of range 1..={n}")]
    CoordinateOutOfRange { coordinate: usize, n: usize },

    #[error("derivative order {t} out of range 0..={n}")]
    OrderOutOfRange { t: usize, n: usize },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("indicator entries must be 0 or 1")]
    NotZeroOne,

    #[error("indicator is the zero vector")]
    ZeroIndicator,

    #[error("support has {found} words, expected {expected}")]
    WrongSupportSize { found: usize, expected: usize },

    #[error("support is not closed under addition")]
    NotClosed,

    #[error("invalid design profile: {0}")]
    InvalidProfile(String),

    #[error("not a 5-design: lambda({i},{j}) for weight {w} is {value}, not an integer")]
    DesignViolation {
        w: usize,
        i: usize,
        j: usize,
        value: String,
    },

    #[error("invalid candidate distribution: {0}")]
    InvalidCandidate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
