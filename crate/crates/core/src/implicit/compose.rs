//! Composition path: `y(x) = sum_k (-1)^k inv_k(x) phi_0(x)^k / k!`, where
//! `inv_k(x) = A_{k,1}(phi_1(x), ..., phi_k(x))` is evaluated in series
//! arithmetic (negative powers of `phi_1` are fine because `f[0,1]` is a
//! unit).

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::time::Instant;

use super::{CoeffTable, Diagnostics, ExpansionResult, ImplicitError, Method};
use crate::algebra::{factorial, Coeff, Indeterminate, LaurentPoly, Rational};
use crate::combinatorics::stirling_a;
use crate::series::TaylorEgf;

/// Evaluates a polynomial in `X[i]` at series arguments `X[i] -> args[i-1]`.
fn eval_at_series<R: Coeff>(
    poly: &LaurentPoly,
    args: &[TaylorEgf<R>],
    powers: &mut HashMap<(usize, i32), TaylorEgf<R>>,
) -> Result<TaylorEgf<R>, ImplicitError> {
    let order = args[0].order();
    let mut acc = TaylorEgf::zero(order);
    for (monomial, c) in poly.terms() {
        let mut term = TaylorEgf::constant(order, R::from_rational(c.clone()));
        for &(var, exp) in monomial.factors() {
            let Indeterminate::X(i) = var else {
                return Err(ImplicitError::Internal(format!("unexpected symbol {var}")));
            };
            let i = i as usize;
            let power = match powers.entry((i, exp)) {
                Entry::Occupied(e) => e.into_mut(),
                Entry::Vacant(e) => {
                    let base = args
                        .get(i - 1)
                        .ok_or_else(|| ImplicitError::Internal(format!("no series for X[{i}]")))?;
                    e.insert(base.pow(exp as i64)?)
                }
            };
            term = term.mul(power)?;
        }
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

pub fn expand_compose<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
) -> Result<ExpansionResult<R>, ImplicitError> {
    table.require_valid()?;
    if order > table.order() {
        return Err(ImplicitError::InsufficientOrder { needed: order, available: table.order() });
    }
    let phis: Vec<TaylorEgf<R>> =
        (0..=order).map(|nu| table.phi_series(nu, order)).collect::<Result<_, _>>()?;
    let mut powers = HashMap::new();
    let mut y = TaylorEgf::zero(order);
    let mut phi0_power = TaylorEgf::one(order);
    // entry k of the diagnostics describes the k-th summand
    let mut diagnostics = Diagnostics::default();
    for k in 1..=order {
        let start = Instant::now();
        // phi_0^k / k!, valuation >= k
        phi0_power = phi0_power.mul(&phis[0])?;
        let divided = phi0_power.scale(&Rational::new(1.into(), factorial(k)));
        let a_k1 = stirling_a(k, 1);
        let inv_k = eval_at_series(&a_k1, &phis[1..], &mut powers)?;
        let term = inv_k.mul(&divided)?;
        y = if k % 2 == 1 { y.sub(&term)? } else { y.add(&term)? };
        diagnostics.push(a_k1.len(), start.elapsed());
    }
    Ok(ExpansionResult {
        order,
        y: y.into_coeffs().into_iter().skip(1).collect(),
        method: Method::Compose,
        diagnostics,
    })
}
