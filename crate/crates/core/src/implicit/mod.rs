//! Expansion of the implicit solution `y(x) = sum_{n>=1} y_n x^n / n!` of
//! `f(x, y) = 0`.
//!
//! Three independent paths produce the same coefficients:
//!
//! - [`expand_direct`]: partial Bell polynomials of the `f[j,0]` combined
//!   with the Taylor coefficients of `A_{k,1}(phi_1, ..., phi_k)`, each a sum
//!   over partition vectors and weak compositions.
//! - [`expand_compose`]: series arithmetic on
//!   `sum_k (-1)^k A_{k,1}(phi_1, ..., phi_k) phi_0^k / k!`.
//! - [`expand_newton`]: order-by-order solving of the substitution residual.
//!
//! All three are generic over the coefficient ring, so the same code runs on
//! rational tables and on the symbolic table whose entries are the
//! indeterminates `f[m,n]`.

mod census;
mod compose;
mod direct;
mod newton;
mod table;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

pub use census::{census, expand_bell_recurrence, monomial_count, CensusEntry, REFERENCE_COUNTS};
pub use compose::expand_compose;
pub use direct::{a_coeff, expand_direct, y_coeff_direct, DirectExpander};
pub use newton::expand_newton;
pub use table::{CoeffTable, Violation};

use crate::algebra::Coeff;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ImplicitError {
    #[error("table is not expandable: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    InvalidTable(Vec<Violation>),
    #[error("order {needed} needed but the table has order {available}")]
    InsufficientOrder { needed: usize, available: usize },
    #[error("entry ({m},{n}) lies outside a table of order {order}")]
    OutOfRange { m: usize, n: usize, order: usize },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Direct,
    Compose,
    Newton,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Direct, Method::Compose, Method::Newton];

    pub fn name(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Compose => "compose",
            Method::Newton => "newton",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// Per-coefficient work counts and wall time.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Diagnostics {
    pub terms: Vec<usize>,
    pub elapsed: Vec<Duration>,
}

impl Diagnostics {
    fn push(&mut self, terms: usize, elapsed: Duration) {
        self.terms.push(terms);
        self.elapsed.push(elapsed);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionResult<R> {
    pub order: usize,
    /// `y[i]` is `y_{i+1}`.
    pub y: Vec<R>,
    pub method: Method,
    pub diagnostics: Diagnostics,
}

pub fn expand<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
    method: Method,
) -> Result<ExpansionResult<R>, ImplicitError> {
    match method {
        Method::Direct => expand_direct(table, order),
        Method::Compose => expand_compose(table, order),
        Method::Newton => expand_newton(table, order),
    }
}

/// First disagreement between two coefficient lists: `(m, left, right)`.
pub fn first_mismatch<'a, R: Coeff>(a: &'a [R], b: &'a [R]) -> Option<(usize, &'a R, &'a R)> {
    a.iter()
        .zip(b)
        .enumerate()
        .find(|(_, (x, y))| x != y)
        .map(|(i, (x, y))| (i + 1, x, y))
}
