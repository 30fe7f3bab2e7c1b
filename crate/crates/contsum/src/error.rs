use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
///
/// Variants that are marked "internal invariant" below are defensive: they
/// signal that a mathematical identity the algorithms rely on failed to hold,
/// which would indicate a bug rather than bad input. They are surfaced as
/// errors instead of panics so that callers (and the CLI) can report them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The requested operation is not defined for this ring
    /// (e.g. a Euclidean division of 2x2 integer matrices).
    #[error("operation not supported for ring {0}")]
    UnsupportedRing(String),

    /// Division by the zero element.
    #[error("division by zero")]
    DivisionByZero,

    /// Text could not be parsed as an element of the requested ring.
    #[error("parse error at byte {position}: {message}")]
    ParseError { position: usize, message: String },

    /// An inverse was requested for an element that is not a unit.
    #[error("element is not a unit")]
    NotAUnit,

    /// A sequence exceeded the length cap of an exponential-time routine.
    #[error("sequence of length {length} exceeds the limit {limit}")]
    LengthLimitExceeded { length: usize, limit: usize },

    /// A routine that requires a commutative ring was handed matrices.
    #[error("ring is not commutative")]
    NoncommutativeRing,

    /// The input sequence is not quasi-palindromic.
    #[error("sequence is not quasi-palindromic")]
    NotQuasiPalindromic,

    /// The Euclidean algorithm was started on (0, 0).
    #[error("both inputs are zero")]
    BothZero,

    /// No square root of -1 exists modulo the given prime.
    #[error("no solution: -1 is not a square modulo {0}")]
    NoSolution(u64),

    /// The integer admits no representation of the requested shape.
    #[error("not representable: {0}")]
    NotRepresentable(String),

    /// Internal invariant: a quotient sequence expected to be an
    /// even-length palindrome was not.
    #[error("quotient sequence is not an even-length palindrome")]
    PalindromeViolation,

    /// The two inputs are not coprime (their gcd is not a unit).
    #[error("inputs are not coprime")]
    NotCoprime,

    /// A documented precondition of the operation was violated.
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// An exact division was requested but the divisor does not divide.
    #[error("not a divisor: the division leaves a remainder")]
    NotADivisor,

    /// A polynomial input violates a degree constraint.
    #[error("degree constraint violated: {0}")]
    DegreeError(String),

    /// The coefficient field does not satisfy the requirements of the
    /// algorithm (characteristic 2, or -1 is a square).
    #[error("unsuitable field: {0}")]
    BadField(String),

    /// The recorded unit is not a sum of two squares in the coefficient
    /// field, or a required exact halving does not exist.
    #[error("unit is not a sum of two squares")]
    UnitNotSumOfSquares,

    /// No multiplier z with N(z) + 1 divisible by m exists (or was found
    /// within the search bound).
    #[error("no multiplier found for {0}")]
    NoMultiplier(String),

    /// Internal invariant: a descent step could not escape the stalled
    /// configuration by re-selecting a quotient.
    #[error("descent chain stalled")]
    ChainStall,

    /// Internal invariant: a descent chain failed to reach a unit within
    /// the step bound.
    #[error("descent chain did not terminate within {0} steps")]
    NonTermination(usize),

    /// Internal invariant: a reconstructed value disagrees with the input
    /// it was derived from.
    #[error("reconstruction mismatch")]
    ReconstructionMismatch,
}

pub type Result<T> = std::result::Result<T, Error>;
