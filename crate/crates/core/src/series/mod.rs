//! Truncated formal power series in EGF normalization, generic over the
//! coefficient ring.

mod bivariate;
mod univariate;

pub use bivariate::BivariateEgf;
pub use univariate::TaylorEgf;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("order {needed} requested but the series is only known through order {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("series has no compositional inverse (needs g_0 = 0 and a unit g_1)")]
    NotInvertible,
    #[error("domain error: {0}")]
    Domain(String),
}
