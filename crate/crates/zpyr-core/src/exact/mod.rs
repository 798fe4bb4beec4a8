//! Exact arithmetic substrate: rationals, Gaussian rationals, dense
//! polynomials, truncated power series and Lagrange interpolation.
//!
//! Every value is canonical after every operation, so equality of results is
//! plain structural equality.

mod gauss;
mod interp;
mod poly;
mod series;

pub use gauss::{big_rat, rat_from_str, rat_to_string, GaussRat};
pub use interp::lagrange_interpolate;
pub use poly::ZPoly;
pub use series::{SeriesCoeff, TruncSeries};

/// Arbitrary-precision rational; always stored reduced with positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Errors raised by the arithmetic substrate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid numeric literal `{0}`")]
    BadLiteral(String),
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("series requires zero constant term")]
    NonzeroConstantTerm,
    #[error("series requires constant term one")]
    ConstantTermNotOne,
    #[error("interpolation nodes must be pairwise distinct")]
    DuplicateNodes,
    #[error("nodes and values have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}
