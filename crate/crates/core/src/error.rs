use thiserror::Error;

/// Errors raised by the combinatorics, decider, approximator and gadget layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HamError {
    #[error("unequal lengths: {left} vs {right}")]
    UnequalLengths { left: usize, right: usize },

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("prefix of length {prefix} exceeds string length {len}")]
    PrefixTooLong { prefix: usize, len: usize },

    #[error("rank out of bounds: {rank} not in 1..={count}")]
    RankOutOfBounds { rank: String, count: String },

    #[error("not a member of the universe: {0}")]
    NotAMember(String),

    #[error("empty restriction: no string of the universe lies in the ball")]
    EmptyRestriction,

    #[error("cannot shrink universe of size {0} beyond the enumeration cap")]
    CannotShrink(String),

    #[error("malformed oracle answer: expected {expected} bits, got {got}")]
    MalformedOracleAnswer { expected: usize, got: usize },

    #[error("tracking broken: planted witness {0} is not in the current universe")]
    TrackingBroken(String),

    #[error("enumeration cap exceeded: {needed} candidates > cap {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = HamError> = std::result::Result<T, E>;
