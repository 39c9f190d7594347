//! Exact scalar and symbolic arithmetic.

mod poly;
mod rational;
mod ring;

pub use poly::{EvalError, Indeterminate, LaurentPoly, Monomial, PolyError};
pub use rational::{
    binomial, factorial, format_rational, parse_rational, rat, ratio, ParseRationalError, Rational,
};
pub use ring::Coeff;
