//! Coefficient matching on `f(x, y(x)) = 0`, order by order. With
//! `y_1..y_{m-1}` fixed, the x^m coefficient of the residual is
//! `r_m + f[0,1] y_m`, so `y_m = -r_m / f[0,1]`.

use std::time::Instant;

use super::{CoeffTable, Diagnostics, ExpansionResult, ImplicitError, Method};
use crate::algebra::Coeff;
use crate::series::TaylorEgf;

pub fn expand_newton<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
) -> Result<ExpansionResult<R>, ImplicitError> {
    table.require_valid()?;
    if order > table.order() {
        return Err(ImplicitError::InsufficientOrder { needed: order, available: table.order() });
    }
    let f01_inv = table
        .get(0, 1)
        .unit_inverse()
        .ok_or_else(|| ImplicitError::Internal("f[0,1] lost invertibility".into()))?;
    let mut y: Vec<R> = Vec::with_capacity(order);
    let mut diagnostics = Diagnostics::default();
    for m in 1..=order {
        let start = Instant::now();
        let local = table.as_series().truncate(m)?;
        let u = TaylorEgf::from_fn(m, |n| match n {
            0 => R::zero_elem(),
            n if n < m => y[n - 1].clone(),
            _ => R::zero_elem(),
        });
        let residual = local.substitute_y(&u)?;
        let r = residual.coeff(m);
        y.push(r.times(&f01_inv).negated());
        diagnostics.push(m + 1, start.elapsed());
    }
    let check = table.truncate(order)?.residual(&y)?;
    if !check.is_zero() {
        return Err(ImplicitError::Internal("nonzero residual after coefficient matching".into()));
    }
    Ok(ExpansionResult { order, y, method: Method::Newton, diagnostics })
}
