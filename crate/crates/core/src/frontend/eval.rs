use super::parser::{Expr, Func};
use super::FrontendError;
use crate::algebra::Rational;
use crate::implicit::CoeffTable;
use crate::series::BivariateEgf;

/// Evaluates `expr` in truncated bivariate series arithmetic of the given
/// order.
pub fn eval_series(expr: &Expr, order: usize) -> Result<BivariateEgf<Rational>, FrontendError> {
    let s = match expr {
        Expr::X => BivariateEgf::x(order),
        Expr::Y => BivariateEgf::y(order),
        Expr::Lit(q) => BivariateEgf::constant(order, q.clone()),
        Expr::Neg(e) => eval_series(e, order)?.neg(),
        Expr::Add(a, b) => eval_series(a, order)?.add(&eval_series(b, order)?)?,
        Expr::Sub(a, b) => eval_series(a, order)?.sub(&eval_series(b, order)?)?,
        Expr::Mul(a, b) => eval_series(a, order)?.mul(&eval_series(b, order)?)?,
        Expr::Div(a, b) => eval_series(a, order)?.mul(&eval_series(b, order)?.recip()?)?,
        Expr::Pow(a, e) => eval_series(a, order)?.pow(*e)?,
        Expr::Call(Func::Exp, a) => eval_series(a, order)?.exp()?,
        Expr::Call(Func::Log, a) => eval_series(a, order)?.log()?,
    };
    Ok(s)
}

/// Coefficient table of `expr`, checked for `f[0,0] = 0` and `f[0,1] != 0`.
pub fn eval_to_table(expr: &Expr, order: usize) -> Result<CoeffTable<Rational>, FrontendError> {
    let table = CoeffTable::from_series(eval_series(expr, order)?);
    table.validate().map_err(FrontendError::NotExpandable)?;
    Ok(table)
}
