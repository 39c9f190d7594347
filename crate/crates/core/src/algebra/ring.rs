use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;

/// Coefficient ring shared by series, Bell evaluation and the expansion paths.
///
/// Implemented by [`Rational`] (numeric mode) and
/// [`LaurentPoly`](super::LaurentPoly) (symbolic mode). All operations are
/// exact; `unit_inverse` returns `None` for elements that are not units.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn from_rational(q: Rational) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scale(&self, q: &Rational) -> Self;
    fn unit_inverse(&self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn scale_int(&self, n: &BigInt) -> Self {
        self.scale(&Rational::from_integer(n.clone()))
    }

    /// Integer power; negative exponents require a unit.
    fn pow_int(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.unit_inverse()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one_elem();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.times(&sq);
            }
        }
        Some(acc)
    }
}

impl Coeff for Rational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scale(&self, q: &Rational) -> Self {
        self * q
    }
    fn unit_inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}
