use crate::rational::Rational;

/// Errors raised by the exact engine and its analyses.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("empty list has no gcd/lcm")]
    EmptyList,

    #[error("lcm overflows 64 bits")]
    LcmOverflow,

    #[error("speeds must be positive")]
    ZeroSpeed,

    #[error("speed {0} exceeds the supported bound 2^62")]
    SpeedTooLarge(u64),

    #[error("duplicate speed {0}")]
    DuplicateSpeed(u64),

    #[error("speed set must be nonempty")]
    EmptySpeedSet,

    #[error("operation requires at least {required} runners, got {got}")]
    TooFewRunners { required: usize, got: usize },

    #[error("operation requires gcd 1, but the speeds have gcd {0}")]
    GcdNotOne(u64),

    #[error("pair indices ({i}, {j}) invalid for {n} speeds")]
    InvalidPair { i: usize, j: usize, n: usize },

    #[error("profiles undefined at maximum loneliness 1/2")]
    MaxLonelinessHalf,

    #[error("equality time {time} has no runner at position {side}")]
    MissingProfileSide { time: Rational, side: Rational },

    #[error("residue {q} is not admissible modulo {modulus}")]
    ResidueNotAdmissible { q: i64, modulus: u64 },

    #[error("{vn} is not equivalent to {q} modulo {modulus}")]
    ResidueMismatch { vn: u64, q: i64, modulus: u64 },

    #[error("new speed {vn} must exceed the largest existing speed {max}")]
    FastSpeedNotLargest { vn: u64, max: u64 },

    #[error(
        "no stabilization up to cap {cap}: tried {tried} starting points, \
         last mismatch at v_n = {mismatch_vn} (predicted {predicted}, exact {exact})"
    )]
    NoStabilization {
        cap: u64,
        tried: u64,
        mismatch_vn: u64,
        predicted: Rational,
        exact: Rational,
    },

    #[error("speeds are not a tight set: ML = {ml}, expected {expected}")]
    NotTight { ml: Rational, expected: Rational },

    #[error("equality-time denominator lcm {0} is too large to enumerate residues")]
    ResidueRangeTooLarge(u64),

    #[error("{0}")]
    InvalidParameter(String),
}
