//! Closed-form path: `y_m` from the partial Bell polynomials of the
//! `f[j,0]` and the Taylor coefficients `a_{k,l}` of `A_{k,1}(phi_1..phi_k)`.
//!
//! `a_{k,l}` is the sum, over block-size vectors `r` of partitions of
//! `2k-2` elements into `k-1` blocks, of the `A_{k,1}` weight times the
//! Leibniz expansion `D^l(phi_1^(r_1-2k+1) phi_2^r_2 ... phi_k^r_k)(0)`.
//! Each Leibniz factor is the exact EGF coefficient of a (possibly negative)
//! series power. Since `phi_nu(0) = f[0,nu]` need not vanish, the factor is
//! not `r! B_{j,r}(f[1,nu], ...)` in general; it reduces to that only when
//! the constant term is zero.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use super::{CoeffTable, Diagnostics, ExpansionResult, ImplicitError, Method};
use crate::algebra::{binomial, factorial, Coeff, Rational};
use crate::combinatorics::{compositions, partition_sequences, BellTable};
use crate::series::TaylorEgf;

/// Evaluates `a_{k,l}` and `y_m` for one table, reusing series powers.
pub struct DirectExpander<'a, R> {
    table: &'a CoeffTable<R>,
    powers: HashMap<(usize, i64), TaylorEgf<R>>,
    a_cache: HashMap<(usize, usize), R>,
    bell: BellTable<R>,
    terms: usize,
}

impl<'a, R: Coeff> DirectExpander<'a, R> {
    pub fn new(table: &'a CoeffTable<R>) -> Result<Self, ImplicitError> {
        table.require_valid()?;
        let order = table.order();
        let args: Vec<R> = (1..=order).map(|j| table.get(j, 0)).collect();
        Ok(DirectExpander {
            table,
            powers: HashMap::new(),
            a_cache: HashMap::new(),
            bell: BellTable::new(order, &args),
            terms: 0,
        })
    }

    /// `D^j(phi_nu^s)(0)`.
    fn power_coeff(&mut self, nu: usize, s: i64, j: usize) -> Result<R, ImplicitError> {
        if s == 0 {
            return Ok(if j == 0 { R::one_elem() } else { R::zero_elem() });
        }
        if !self.powers.contains_key(&(nu, s)) {
            let phi = self.table.phi_series(nu, self.table.order())?;
            self.powers.insert((nu, s), phi.pow(s)?);
        }
        Ok(self.powers[&(nu, s)].coeff(j).clone())
    }

    /// `a_{k,l} = D^l(A_{k,1}(phi_1, ..., phi_k))(0)`.
    pub fn a_coeff(&mut self, k: usize, l: usize) -> Result<R, ImplicitError> {
        if k == 0 {
            return Err(ImplicitError::Internal("a_{k,l} needs k >= 1".into()));
        }
        let order = self.table.order();
        if k > order || l > order {
            return Err(ImplicitError::InsufficientOrder { needed: k.max(l), available: order });
        }
        if let Some(v) = self.a_cache.get(&(k, l)) {
            return Ok(v.clone());
        }
        let l_fact = factorial(l);
        let mut total = R::zero_elem();
        for r in partition_sequences(2 * k - 2, k - 1, k) {
            let r1 = r.r(1);
            let mut denom = BigInt::one();
            for nu in 2..=k {
                let rn = r.r(nu);
                denom *= factorial(rn) * factorial(nu).pow(rn as u32);
            }
            let mut numer = factorial(2 * k - 2 - r1);
            if (k - 1 - r1) % 2 == 1 {
                numer = -numer;
            }
            let weight = Rational::new(numer, denom);

            // exponent of phi_nu; only nonzero exponents can absorb derivatives
            let exps: Vec<(usize, i64)> = (1..=k)
                .map(|nu| {
                    let e = if nu == 1 { r1 as i64 - 2 * k as i64 + 1 } else { r.r(nu) as i64 };
                    (nu, e)
                })
                .filter(|&(_, e)| e != 0)
                .collect();

            let mut inner = R::zero_elem();
            for comp in compositions(l, exps.len()) {
                self.terms += 1;
                let mut prod = R::one_elem();
                let mut multinomial_denom = BigInt::one();
                for (&(nu, e), &j) in exps.iter().zip(comp.parts()) {
                    let c = self.power_coeff(nu, e, j)?;
                    if c.is_zero_elem() {
                        prod = R::zero_elem();
                        break;
                    }
                    prod = prod.times(&c);
                    multinomial_denom *= factorial(j);
                }
                if prod.is_zero_elem() {
                    continue;
                }
                let multinomial = Rational::new(l_fact.clone(), multinomial_denom);
                inner = inner.plus(&prod.scale(&multinomial));
            }
            total = total.plus(&inner.scale(&weight));
        }
        self.a_cache.insert((k, l), total.clone());
        Ok(total)
    }

    /// `y_m = sum_{n=1}^m C(m,n) sum_{k=1}^n (-1)^k a_{k,m-n} B_{n,k}(f[1,0], ...)`.
    pub fn y_coeff(&mut self, m: usize) -> Result<R, ImplicitError> {
        if m == 0 {
            return Ok(R::zero_elem());
        }
        if m > self.table.order() {
            return Err(ImplicitError::InsufficientOrder { needed: m, available: self.table.order() });
        }
        let mut total = R::zero_elem();
        for n in 1..=m {
            let mut inner = R::zero_elem();
            for k in 1..=n {
                let b = self.bell.get(n, k);
                if b.is_zero_elem() {
                    continue;
                }
                let term = self.a_coeff(k, m - n)?.times(&b);
                inner = if k % 2 == 1 { inner.minus(&term) } else { inner.plus(&term) };
            }
            total = total.plus(&inner.scale_int(&binomial(m, n)));
        }
        Ok(total)
    }

    fn take_terms(&mut self) -> usize {
        std::mem::take(&mut self.terms)
    }
}

pub fn a_coeff<R: Coeff>(table: &CoeffTable<R>, k: usize, l: usize) -> Result<R, ImplicitError> {
    DirectExpander::new(table)?.a_coeff(k, l)
}

pub fn y_coeff_direct<R: Coeff>(table: &CoeffTable<R>, m: usize) -> Result<R, ImplicitError> {
    DirectExpander::new(table)?.y_coeff(m)
}

pub fn expand_direct<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
) -> Result<ExpansionResult<R>, ImplicitError> {
    if order > table.order() {
        return Err(ImplicitError::InsufficientOrder { needed: order, available: table.order() });
    }
    let mut ex = DirectExpander::new(table)?;
    let mut y = Vec::with_capacity(order);
    let mut diagnostics = Diagnostics::default();
    for m in 1..=order {
        let start = Instant::now();
        y.push(ex.y_coeff(m)?);
        diagnostics.push(ex.take_terms(), start.elapsed());
    }
    Ok(ExpansionResult { order, y, method: Method::Direct, diagnostics })
}
