//! Exact truncated formal power series in `q` (and the `(z, q)` bivariate case).
//!
//! Coefficients are `i128` and every arithmetic step is checked: overflow is
//! reported as [`SeriesError::Overflow`] and never wraps. At the default order
//! 500 the largest coefficients in this crate stay below `10^25`, far from the
//! `1.7 × 10^38` ceiling.

mod bivariate;
mod dual;
mod series;

use thiserror::Error;

pub use bivariate::BivariateSeries;
pub use dual::{dual_product, DualSeries};
pub use series::{Sign, TruncatedSeries};

/// Exact series coefficient.
pub type Coeff = i128;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient overflow (exceeds 128-bit signed range)")]
    Overflow,
    #[error("series is not invertible: constant term is {0}, expected ±1")]
    NonUnitConstant(Coeff),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

#[inline]
pub(crate) fn mul_add(acc: Coeff, x: Coeff, y: Coeff) -> Result<Coeff, SeriesError> {
    x.checked_mul(y).and_then(|p| acc.checked_add(p)).ok_or(SeriesError::Overflow)
}

#[inline]
pub(crate) fn add(x: Coeff, y: Coeff) -> Result<Coeff, SeriesError> {
    x.checked_add(y).ok_or(SeriesError::Overflow)
}

#[inline]
pub(crate) fn sub(x: Coeff, y: Coeff) -> Result<Coeff, SeriesError> {
    x.checked_sub(y).ok_or(SeriesError::Overflow)
}
