//! Error type shared across the crate.
//!
//! Errors come in two flavours: parameter errors (bad user input, excluded
//! family parameters, out-of-range indices) and internal-consistency errors
//! (an exact polynomial division that failed to be exact, a curve-family
//! constructor whose torsion-order validation did not come out as expected,
//! a transcription mistake in a built-in exponent table). The CLI maps the
//! former to exit code 2 and the latter to exit code 1.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `isqrt` of a negative integer.
    NegativeSquareRoot,
    /// Pell modulus D must be positive.
    PellNonPositive,
    /// Pell modulus D must not be a perfect square.
    PellPerfectSquare,
    /// Weierstrass coefficients with vanishing discriminant.
    SingularCurve,
    /// An affine point that does not satisfy the curve equation.
    PointOffCurve,
    /// The point at infinity where an affine point is required.
    InfinitePointInput,
    /// Sequence index outside the computed range.
    IndexOutOfRange { n: usize, n_max: usize },
    /// A sequence too short for the requested check.
    SequenceTooShort { needed: usize, got: usize },
    /// A family parameter excluded by the parametrization.
    ExcludedParameter { family: u32, detail: String },
    /// The H-sequence has no closed form for the order-2 family (F2 = 0).
    HUndefinedForOrderTwo,
    /// An operation restricted to curves y^2 = x^3 + ax + b.
    ShortWeierstrassRequired,
    /// The base point is 2- or 3-torsion, so F2*F3 = 0 and the curve
    /// coefficients cannot be recovered from G1, G2, H1, H2.
    TorsionObstruction,
    /// An exact division in the coordinate ring left a remainder.
    /// Always a bug: the division-polynomial recursions divide exactly.
    InexactPolynomialDivision,
    /// A family constructor produced a point of the wrong order.
    OrderValidationFailed { family: u32, detail: String },
    /// The division-polynomial memo hit the configured cap.
    MemoLimitExceeded { limit: usize, requested: usize },
    /// A built-in exponent table failed its load-time consistency check.
    TableTranscription(String),
    /// Catch-all for malformed arguments.
    InvalidParameter(String),
}

impl Error {
    /// True for errors that indicate a bug in the crate rather than bad
    /// input; the CLI reports these with exit code 1 instead of 2.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InexactPolynomialDivision
                | Error::OrderValidationFailed { .. }
                | Error::TableTranscription(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeSquareRoot => write!(f, "integer square root of a negative number"),
            Error::PellNonPositive => write!(f, "Pell modulus D must be positive"),
            Error::PellPerfectSquare => {
                write!(f, "Pell modulus D must not be a perfect square")
            }
            Error::SingularCurve => write!(f, "curve is singular (discriminant is zero)"),
            Error::PointOffCurve => write!(f, "point does not satisfy the curve equation"),
            Error::InfinitePointInput => {
                write!(f, "the point at infinity is not accepted here")
            }
            Error::IndexOutOfRange { n, n_max } => {
                write!(f, "index {} outside computed range 0..={}", n, n_max)
            }
            Error::SequenceTooShort { needed, got } => {
                write!(f, "sequence needs at least {} terms, got {}", needed, got)
            }
            Error::ExcludedParameter { family, detail } => {
                write!(f, "parameter excluded for order {}: {}", family, detail)
            }
            Error::HUndefinedForOrderTwo => {
                write!(f, "H has no general term for the order-2 family (F2 = 0)")
            }
            Error::ShortWeierstrassRequired => {
                write!(f, "operation requires a curve of the form y^2 = x^3 + ax + b")
            }
            Error::TorsionObstruction => {
                write!(f, "base point is 2- or 3-torsion (F2*F3 = 0)")
            }
            Error::InexactPolynomialDivision => {
                write!(f, "internal error: exact polynomial division left a remainder")
            }
            Error::OrderValidationFailed { family, detail } => {
                write!(f, "internal error: order-{} construction failed validation: {}", family, detail)
            }
            Error::MemoLimitExceeded { limit, requested } => {
                write!(f, "division-polynomial memo limit {} exceeded (requested {})", limit, requested)
            }
            Error::TableTranscription(msg) => {
                write!(f, "internal error: exponent table rejected: {}", msg)
            }
            Error::InvalidParameter(msg) => write!(f, "{}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
