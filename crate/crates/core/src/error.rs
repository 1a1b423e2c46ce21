use thiserror::Error;

/// Errors produced by the library. Each variant corresponds to one failure
/// mode of the public operations; the CLI maps them onto exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("residue {residue} is out of range for modulus {modulus}")]
    Range { residue: i64, modulus: i64 },

    #[error("classes {first} and {second} intersect: gcd {gcd} divides {difference}")]
    NotDisjoint {
        first: String,
        second: String,
        gcd: i64,
        difference: i64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("class transposition {0} is not horizontal")]
    NotHorizontal(String),

    #[error("component was truncated at the traversal budget and has no certified cycle lengths")]
    NotClassified,

    #[error("component matches no catalogue shape: {0}")]
    ShapeViolation(String),

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("degree {degree} exceeds the configured limit {limit}")]
    ResourceLimit { degree: usize, limit: usize },

    #[error("integer overflow while evaluating {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
