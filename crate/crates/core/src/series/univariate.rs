use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::SeriesError;
use crate::algebra::{binomial, factorial, Coeff, Rational};
use crate::combinatorics::BellTable;

/// Truncated univariate series stored by EGF coefficients: `coeffs[n]` is
/// the n-th derivative at the origin, so the value is `sum c_n x^n / n!`.
/// Exact through `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorEgf<R> {
    coeffs: Vec<R>,
}

impl<R: Coeff> TaylorEgf<R> {
    /// `coeffs` must be non-empty; its length fixes the order.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        TaylorEgf { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        TaylorEgf::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| R::zero_elem())
    }

    pub fn constant(order: usize, c: R) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, R::one_elem())
    }

    /// The series `x`.
    pub fn identity(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one_elem();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero_elem)
    }

    /// Drops coefficients above `order`; an error if that would extend.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order() {
            return Err(SeriesError::InsufficientOrder { needed: order, available: self.order() });
        }
        Ok(TaylorEgf::new(self.coeffs[..=order].to_vec()))
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch { left: self.order(), right: other.order() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| self.coeffs[n].plus(&other.coeffs[n])))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order(), |n| self.coeffs[n].minus(&other.coeffs[n])))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].negated())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].scale(q))
    }

    pub fn scale_by(&self, c: &R) -> Self {
        Self::from_fn(self.order(), |n| self.coeffs[n].times(c))
    }

    /// Binomial convolution `c_n = sum_i C(n,i) a_i b_{n-i}`.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        Self::from_fn(self.order(), |n| {
            let mut acc = R::zero_elem();
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if a.is_zero_elem() || b.is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&a.times(b).scale_int(&binomial(n, i)));
            }
            acc
        })
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0]
            .unit_inverse()
            .ok_or(SeriesError::NonInvertibleConstant)?;
        let mut out: Vec<R> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = R::zero_elem();
            for i in 1..=n {
                let a = &self.coeffs[i];
                if a.is_zero_elem() || out[n - i].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&a.times(&out[n - i]).scale_int(&binomial(n, i)));
            }
            out.push(acc.times(&inv0).negated());
        }
        Ok(TaylorEgf::new(out))
    }

    /// `self^s`; negative `s` goes through [`recip`](Self::recip).
    pub fn pow(&self, s: i64) -> Result<Self, SeriesError> {
        let base = if s < 0 { self.recip()? } else { self.clone() };
        let mut e = s.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// `D^j(self^s)(0)`, computed at truncation order `j`.
    pub fn power_coeff(&self, s: i64, j: usize) -> Result<R, SeriesError> {
        let head = self.truncate(j)?;
        Ok(head.pow(s)?.coeffs[j].clone())
    }

    /// `outer(inner(x))` by Faa di Bruno: `c_n = sum_k outer_k B_{n,k}(inner_1, ...)`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self, SeriesError> {
        outer.check_order(inner)?;
        if !inner.coeffs[0].is_zero_elem() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let order = outer.order();
        let bell = BellTable::new(order, &inner.coeffs[1..]);
        Ok(Self::from_fn(order, |n| {
            if n == 0 {
                return outer.coeffs[0].clone();
            }
            let mut acc = R::zero_elem();
            for k in 1..=n {
                if outer.coeffs[k].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&outer.coeffs[k].times(&bell.get(n, k)));
            }
            acc
        }))
    }

    /// Compositional inverse, solved order by order: the coefficient of
    /// `x^n/n!` in `inv(g(x))` is linear in `inv_n` with pivot `g_1^n`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_elem() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        if self.order() == 0 {
            return Err(SeriesError::NotInvertible);
        }
        let pivot_inv = self.coeffs[1].unit_inverse().ok_or(SeriesError::NotInvertible)?;
        let order = self.order();
        let bell = BellTable::new(order, &self.coeffs[1..]);
        let mut out = vec![R::zero_elem(); order + 1];
        let mut pivot_inv_pow = R::one_elem();
        for n in 1..=order {
            pivot_inv_pow = pivot_inv_pow.times(&pivot_inv);
            let mut rhs = if n == 1 { R::one_elem() } else { R::zero_elem() };
            for (k, gk) in out.iter().enumerate().take(n).skip(1) {
                if !gk.is_zero_elem() {
                    rhs = rhs.minus(&gk.times(&bell.get(n, k)));
                }
            }
            out[n] = rhs.times(&pivot_inv_pow);
        }
        Ok(TaylorEgf::new(out))
    }

    /// Shift-down derivative (order drops by one).
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::InsufficientOrder { needed: 1, available: 0 });
        }
        Ok(TaylorEgf::new(self.coeffs[1..].to_vec()))
    }

    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_elem() {
            return Err(SeriesError::Domain("exp needs a zero constant term".into()));
        }
        // E' = a' E
        let mut out = vec![R::one_elem()];
        for n in 0..self.order() {
            let mut acc = R::zero_elem();
            for i in 0..=n {
                let a = &self.coeffs[i + 1];
                if a.is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&a.times(&out[n - i]).scale_int(&binomial(n, i)));
            }
            out.push(acc);
        }
        Ok(TaylorEgf::new(out))
    }

    /// `log(self)`; the constant term must be one.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one_elem() {
            return Err(SeriesError::Domain("log needs constant term 1".into()));
        }
        let mut out = vec![R::zero_elem()];
        if self.order() > 0 {
            // L' = a' / a
            let head = self.truncate(self.order() - 1)?;
            let quotient = self.derivative()?.mul_unchecked(&head.recip()?);
            out.extend(quotient.coeffs);
        }
        Ok(TaylorEgf::new(out))
    }

    /// `self^alpha` for rational `alpha`. Integer exponents defer to
    /// [`pow`](Self::pow); otherwise the constant term must be one.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if alpha.is_integer() {
            let e: i64 = i64::try_from(alpha.to_integer())
                .map_err(|_| SeriesError::Domain("exponent too large".into()))?;
            return self.pow(e);
        }
        if self.coeffs[0] != R::one_elem() {
            return Err(SeriesError::Domain(
                "fractional power needs constant term 1".into(),
            ));
        }
        // a P' = alpha a' P with a_0 = 1
        let mut out = vec![R::one_elem()];
        for n in 0..self.order() {
            let mut acc = R::zero_elem();
            for i in 0..=n {
                let t = self.coeffs[i + 1].times(&out[n - i]).scale_int(&binomial(n, i));
                acc = acc.plus(&t.scale(alpha));
            }
            for i in 1..=n {
                let t = self.coeffs[i].times(&out[n + 1 - i]).scale_int(&binomial(n, i));
                acc = acc.minus(&t);
            }
            out.push(acc);
        }
        Ok(TaylorEgf::new(out))
    }

    /// `self^k / k!`.
    pub fn divided_power(&self, k: usize) -> Result<Self, SeriesError> {
        let p = self.pow(k as i64)?;
        Ok(p.scale(&Rational::new(BigInt::one(), factorial(k))))
    }
}

impl TaylorEgf<Rational> {
    /// `exp(x)`, all coefficients one.
    pub fn exp_x(order: usize) -> Self {
        Self::from_fn(order, |_| Rational::one())
    }

    pub fn is_identity(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(n, c)| {
            if n == 1 {
                c.is_one()
            } else {
                c.is_zero()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::combinatorics::bell_eval;

    fn series(v: &[i64]) -> TaylorEgf<Rational> {
        TaylorEgf::new(v.iter().map(|&c| rat(c)).collect())
    }

    fn log1p(order: usize) -> TaylorEgf<Rational> {
        TaylorEgf::from_fn(order, |n| {
            if n == 0 {
                rat(0)
            } else {
                let f = Rational::from_integer(factorial(n - 1));
                if n % 2 == 1 { f } else { -f }
            }
        })
    }

    fn expm1(order: usize) -> TaylorEgf<Rational> {
        TaylorEgf::from_fn(order, |n| if n == 0 { rat(0) } else { rat(1) })
    }

    #[test]
    fn x_times_x() {
        let x = TaylorEgf::<Rational>::identity(4);
        assert_eq!(x.mul(&x).unwrap(), series(&[0, 0, 2, 0, 0]));
    }

    #[test]
    fn unit_and_exp_square() {
        let a = series(&[3, -1, 4, 1, -5]);
        assert_eq!(a.mul(&TaylorEgf::one(4)).unwrap(), a);
        let e = TaylorEgf::exp_x(6);
        assert_eq!(e.mul(&e).unwrap(), TaylorEgf::from_fn(6, |n| rat(1 << n)));
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let a = TaylorEgf::<Rational>::one(3);
        let b = TaylorEgf::<Rational>::one(4);
        assert_eq!(a.mul(&b), Err(SeriesError::OrderMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn geometric_inverse() {
        let one_plus_x = series(&[1, 1, 0, 0, 0, 0]);
        let inv = one_plus_x.pow(-1).unwrap();
        let expect = TaylorEgf::from_fn(5, |j| {
            let f = Rational::from_integer(factorial(j));
            if j % 2 == 0 { f } else { -f }
        });
        assert_eq!(inv, expect);
        assert_eq!(one_plus_x.power_coeff(-1, 2).unwrap(), rat(2));
        assert_eq!(one_plus_x.pow(0).unwrap(), TaylorEgf::one(5));
    }

    #[test]
    fn non_unit_constant() {
        let a = series(&[0, 1, 2]);
        assert_eq!(a.pow(-1), Err(SeriesError::NonInvertibleConstant));
    }

    #[test]
    fn power_coefficient_matches_bell() {
        let phi = series(&[0, 1, 1, 0]);
        assert_eq!(phi.power_coeff(2, 3).unwrap(), rat(6));
        assert_eq!(
            phi.power_coeff(2, 3).unwrap(),
            rat(2) * bell_eval(3, 2, &[rat(1), rat(1)])
        );
        let a = series(&[2, -3, 5, 7]);
        assert_eq!(a.power_coeff(1, 3).unwrap(), rat(7));
    }

    #[test]
    fn compose_inverse_pair() {
        let id = TaylorEgf::<Rational>::identity(8);
        assert!(TaylorEgf::compose(&expm1(8), &log1p(8)).unwrap().is_identity());
        let a = series(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(TaylorEgf::compose(&a, &id).unwrap(), a);
        let inner = series(&[0, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(TaylorEgf::compose(&id, &inner).unwrap(), inner);
        assert_eq!(
            TaylorEgf::compose(&a, &a),
            Err(SeriesError::NonzeroConstantTerm)
        );
    }

    #[test]
    fn comp_inverse_of_expm1_is_log1p() {
        let inv = expm1(8).comp_inverse().unwrap();
        assert_eq!(inv, log1p(8));
        assert!(TaylorEgf::compose(&inv, &expm1(8)).unwrap().is_identity());
        let id = TaylorEgf::<Rational>::identity(5);
        assert_eq!(id.comp_inverse().unwrap(), id);
        assert_eq!(series(&[1, 1, 0]).comp_inverse(), Err(SeriesError::NonzeroConstantTerm));
        assert_eq!(series(&[0, 0, 1]).comp_inverse(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn elementary_functions() {
        let x = TaylorEgf::<Rational>::identity(7);
        assert_eq!(x.exp().unwrap(), TaylorEgf::exp_x(7));
        let one_plus_x = series(&[1, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(one_plus_x.log().unwrap(), log1p(7));
        assert_eq!(one_plus_x.log().unwrap().exp().unwrap(), one_plus_x);
        assert!(series(&[2, 1]).log().is_err());
        assert!(series(&[1, 1]).exp().is_err());
    }

    #[test]
    fn square_root_squares_back() {
        let a = series(&[1, 3, -2, 5, 1, 0]);
        let root = a.pow_rational(&ratio(1, 2)).unwrap();
        assert_eq!(root.mul(&root).unwrap(), a);
        let third = a.pow_rational(&ratio(-1, 3)).unwrap();
        assert_eq!(third.pow(-3).unwrap(), a);
        assert_eq!(a.pow_rational(&rat(3)).unwrap(), a.pow(3).unwrap());
        assert!(series(&[4, 1]).pow_rational(&ratio(1, 2)).is_err());
    }
}
