use thiserror::Error;

/// Errors produced by context construction, algebraic operations, and verification inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1")]
    DegreeOutOfRange,

    #[error("cardinality {0} exceeds the supported limit {1}")]
    CardinalityTooLarge(u64, u64),

    #[error("polynomial is zero or constant; need degree >= 1")]
    BadPolynomial,

    #[error("polynomial {0:?} is not irreducible mod {1}")]
    NotIrreducible(Vec<u64>, u64),

    #[error("polynomial {0:?} is not primitive mod 2")]
    NotPrimitive(Vec<u64>),

    #[error("modulus degree {0} does not match requested degree {1}")]
    DegreeMismatch(usize, usize),

    #[error("element label {0} out of range for cardinality {1}")]
    LabelOutOfRange(u64, u64),

    #[error("inverse of zero (or of a non-unit ring element)")]
    NonInvertible,

    #[error("element {0} is not primitive: its order is not {1}")]
    GeneratorNotPrimitive(u64, u64),

    #[error("character index {0} out of range [0, {1})")]
    CharacterIndexOutOfRange(u64, u64),

    #[error("multiplicative character is undefined at zero")]
    CharacterAtZero,

    #[error("characteristic 2 has no field quadratic-phase bases; build the ring variant (CLI: gen-ring --m M) instead")]
    EvenCharacteristic,

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("basis index {0} out of range for {1} bases")]
    BasisIndexOutOfRange(usize, usize),

    #[error("operator dimension {0} exceeds the dense-operator limit {1}")]
    OperatorTooLarge(u64, u64),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("shift index {0} out of range [0, {1})")]
    ShiftOutOfRange(u64, u64),

    #[error("{0} is not an odd prime power")]
    NotOddPrimePower(u64),

    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
