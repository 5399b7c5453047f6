use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("genus {0} is too small (need at least {1})")]
    GenusTooSmall(usize, usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("wrong degree: expected {expected}, found {found}")]
    WrongDegree { expected: usize, found: usize },

    #[error("degree overflow: {left} + {right} exceeds the supported maximum of 3")]
    DegreeOverflow { left: usize, right: usize },

    #[error("element is not primitive: contraction is {0}")]
    NotPrimitive(String),

    #[error("invalid subsurface: {pairing} = {found}, expected {expected}")]
    InvalidSubsurface {
        pairing: String,
        expected: String,
        found: String,
    },

    #[error("invalid bounding pair: {0}")]
    InvalidBoundingPair(String),

    #[error("identity failed: {identity} ({detail})")]
    IdentityFailure { identity: String, detail: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error in {input:?}: {message}")]
    Parse { input: String, message: String },

    #[error("config error at {location}: {message}")]
    Config { location: String, message: String },

    #[error("unknown command {0:?}")]
    UnknownCommand(String),

    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
}
