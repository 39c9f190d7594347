use std::collections::BTreeMap;
use std::fmt;

use super::ImplicitError;
use crate::algebra::{rat, Coeff, Indeterminate, LaurentPoly, Rational};
use crate::series::{BivariateEgf, TaylorEgf};

/// Taylor coefficients `f[m,n]`, `0 <= m, n <= order`, of `f(x, y)` in
/// EGF normalization. Entries not given explicitly are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable<R> {
    series: BivariateEgf<R>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `f[0,0] != 0`: the origin is not on the curve.
    NonzeroF00,
    /// `f[0,1]` vanishes (or, symbolically, is not a unit).
    VanishingF01,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NonzeroF00 => write!(f, "nonzero f[0,0]"),
            Violation::VanishingF01 => write!(f, "vanishing f[0,1]"),
        }
    }
}

impl<R: Coeff> CoeffTable<R> {
    /// Builds a table of the given order from sparse entries.
    pub fn from_entries(
        order: usize,
        entries: impl IntoIterator<Item = ((usize, usize), R)>,
    ) -> Result<Self, ImplicitError> {
        let mut map = BTreeMap::new();
        for ((m, n), v) in entries {
            if m > order || n > order {
                return Err(ImplicitError::OutOfRange { m, n, order });
            }
            map.insert((m, n), v);
        }
        Ok(CoeffTable {
            series: BivariateEgf::from_fn(order, |m, n| {
                map.get(&(m, n)).cloned().unwrap_or_else(R::zero_elem)
            }),
        })
    }

    pub fn from_series(series: BivariateEgf<R>) -> Self {
        CoeffTable { series }
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn get(&self, m: usize, n: usize) -> R {
        if m > self.order() || n > self.order() {
            return R::zero_elem();
        }
        self.series.coeff(m, n).clone()
    }

    pub fn as_series(&self) -> &BivariateEgf<R> {
        &self.series
    }

    /// Checks `f[0,0] = 0` and that `f[0,1]` is invertible.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        if !self.get(0, 0).is_zero_elem() {
            v.push(Violation::NonzeroF00);
        }
        if self.get(0, 1).unit_inverse().is_none() {
            v.push(Violation::VanishingF01);
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub(crate) fn require_valid(&self) -> Result<(), ImplicitError> {
        self.validate().map_err(ImplicitError::InvalidTable)
    }

    /// `phi_nu(x) = sum_m f[m,nu] x^m / m!`, through `order`.
    pub fn phi_series(&self, nu: usize, order: usize) -> Result<TaylorEgf<R>, ImplicitError> {
        if nu > self.order() || order > self.order() {
            return Err(ImplicitError::OutOfRange { m: order, n: nu, order: self.order() });
        }
        Ok(TaylorEgf::from_fn(order, |m| self.series.coeff(m, nu).clone()))
    }

    pub fn truncate(&self, order: usize) -> Result<Self, ImplicitError> {
        Ok(CoeffTable { series: self.series.truncate(order)? })
    }

    /// Every entry multiplied by `lambda`.
    pub fn scaled(&self, lambda: &Rational) -> Self {
        CoeffTable { series: self.series.scale(lambda) }
    }

    /// Residual `f(x, y(x))` for `y = [y_1, ..., y_M]`, at the table order.
    pub fn residual(&self, y: &[R]) -> Result<TaylorEgf<R>, ImplicitError> {
        let order = self.order();
        let u = TaylorEgf::from_fn(order, |n| {
            if n == 0 {
                R::zero_elem()
            } else {
                y.get(n - 1).cloned().unwrap_or_else(R::zero_elem)
            }
        });
        Ok(self.series.substitute_y(&u)?)
    }
}

impl CoeffTable<Rational> {
    /// `f = y - x - x y`, solved by `y = x / (1 - x)`.
    pub fn geometric(order: usize) -> Self {
        let entries = [((0, 1), rat(1)), ((1, 0), rat(-1)), ((1, 1), rat(-1))];
        Self::from_entries(order.max(1), entries).expect("entries inside box")
    }

    /// `f = y e^y - x`, whose solution is the Lambert W series.
    pub fn lambert(order: usize) -> Self {
        let order = order.max(1);
        let mut entries = vec![((1, 0), rat(-1))];
        entries.extend((1..=order).map(|n| ((0, n), rat(n as i64))));
        Self::from_entries(order, entries).expect("entries inside box")
    }
}

impl CoeffTable<LaurentPoly> {
    /// The generic table: `f[m,n]` is the symbol `F(m,n)`, except
    /// `f[0,0] = 0`.
    pub fn symbolic(order: usize) -> Self {
        CoeffTable {
            series: BivariateEgf::from_fn(order, |m, n| {
                if (m, n) == (0, 0) {
                    LaurentPoly::zero()
                } else {
                    LaurentPoly::var(Indeterminate::F(m as u32, n as u32), 1)
                        .expect("positive exponent")
                }
            }),
        }
    }

    /// Substitutes rational values for the symbols of a symbolic value.
    pub fn specialize(value: &LaurentPoly, table: &CoeffTable<Rational>) -> Result<Rational, ImplicitError> {
        value
            .eval_with(|v| match v {
                Indeterminate::F(m, n) => Some(table.get(m as usize, n as usize)),
                Indeterminate::X(_) => None,
            })
            .map_err(|e| ImplicitError::Internal(e.to_string()))
    }
}
