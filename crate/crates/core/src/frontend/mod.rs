//! Closed-form input: parse an expression for `f(x, y)` and expand it into a
//! coefficient table.

mod eval;
mod parser;

pub use eval::{eval_series, eval_to_table};
pub use parser::{parse, Expr, Func, ParseError};

use crate::implicit::Violation;
use crate::series::SeriesError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FrontendError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("cannot expand expression: {0}")]
    Series(#[from] SeriesError),
    #[error("expression is not expandable: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))]
    NotExpandable(Vec<Violation>),
}
