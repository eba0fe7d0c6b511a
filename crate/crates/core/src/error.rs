use thiserror::Error;

use crate::halfint::HalfInt;

/// Errors raised for malformed inputs or broken internal invariants.
///
/// Selection-rule failures (triangle violations, projection sums, empty
/// summation ranges) are *not* errors: the corresponding symbol is exactly
/// zero and the evaluation functions return the zero value for them. Errors
/// are reserved for inputs that do not describe a symbol at all, plus a few
/// internal conditions that indicate a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WignerError {
    #[error("angular momentum must be nonnegative, got {0}")]
    NegativeMomentum(HalfInt),

    #[error("projection {m} must differ from momentum {j} by an integer")]
    ProjectionMismatch { j: HalfInt, m: HalfInt },

    #[error("momenta ({a}, {b}, {c}) do not satisfy the triangle condition")]
    TriangleViolation { a: HalfInt, b: HalfInt, c: HalfInt },

    #[error("{kind} takes {expected} arguments, got {got}")]
    WrongArity {
        kind: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("chain length {0} is outside the supported range")]
    ChainLength(usize),

    #[error("division by zero")]
    DivisionByZero,

    #[error("square root of the nonpositive rational {0}")]
    NonPositiveRadicand(String),

    #[error("cannot factor {0}: outside the builtin trial-division range")]
    RadicandTooLarge(String),

    #[error("cannot parse {0:?} as a half-integer")]
    ParseHalfInt(String),

    #[error("internal: phase exponent with doubled value {0} is not an integer")]
    HalfIntegerPhase(i32),

    #[error("internal: sum left a single quadratic field: {0}")]
    MixedRadicands(String),
}
