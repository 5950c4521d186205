use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not monic")]
    NonMonicModulus(String),

    #[error("the zero polynomial has no reciprocal")]
    ZeroPolynomial,

    #[error("{0} and {1} are not coprime modulo 2")]
    NotCoprime(String, String),

    #[error("factor product mismatch: expected {expected}, got {got}")]
    ProductMismatch { expected: String, got: String },

    #[error("({a}, {b}) is not a Bezout pair modulo 2")]
    NotBezoutPair { a: String, b: String },

    #[error("length parameter n must be odd and positive, got {0}")]
    InvalidLength(i64),

    #[error("{0} is not irreducible modulo 2")]
    Reducible(String),

    #[error("index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("component {index}: parameter degree {degree} does not fit residue field of degree {m}")]
    DegreeMismatch { index: usize, degree: usize, m: usize },

    #[error("ring with {size} elements exceeds the materialization bound {bound}")]
    TooLarge { size: u64, bound: u64 },

    #[error("search space of 2^{bits} codewords exceeds the budget 2^{max_bits}")]
    OverBudget { bits: u32, max_bits: u32 },

    #[error("module is not closed under (a, b) -> (0, a + 2b)")]
    ConditionUnmet,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
