use super::{SeriesError, TaylorEgf};
use crate::algebra::{binomial, factorial, Coeff, Rational};

use num_bigint::BigInt;
use num_traits::One;

/// Truncated bivariate series `sum c_{m,n} x^m y^n / (m! n!)` on the box
/// `0 <= m, n <= order`; `c_{m,n}` is the mixed partial at the origin.
#[derive(Debug, Clone, PartialEq)]
pub struct BivariateEgf<R> {
    order: usize,
    coeffs: Vec<R>,
}

impl<R: Coeff> BivariateEgf<R> {
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut coeffs = Vec::with_capacity((order + 1) * (order + 1));
        for m in 0..=order {
            for n in 0..=order {
                coeffs.push(f(m, n));
            }
        }
        BivariateEgf { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_, _| R::zero_elem())
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
    pub fn x(order: usize) -> Self {
        Self::from_fn(order, |m, n| if (m, n) == (1, 0) { R::one_elem() } else { R::zero_elem() })
    }

    /// The series `y`.
    pub fn y(order: usize) -> Self {
        Self::from_fn(order, |m, n| if (m, n) == (0, 1) { R::one_elem() } else { R::zero_elem() })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, m: usize, n: usize) -> &R {
        &self.coeffs[m * (self.order + 1) + n]
    }

    /// Column `n` as a series in `x`: `phi_n(x) = sum_m c_{m,n} x^m/m!`.
    pub fn column(&self, n: usize) -> TaylorEgf<R> {
        TaylorEgf::from_fn(self.order, |m| self.coeff(m, n).clone())
    }

    /// Restriction to the box of a smaller order.
    pub fn truncate(&self, order: usize) -> Result<Self, SeriesError> {
        if order > self.order {
            return Err(SeriesError::InsufficientOrder { needed: order, available: self.order });
        }
        Ok(Self::from_fn(order, |m, n| self.coeff(m, n).clone()))
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order, |m, n| self.coeff(m, n).plus(other.coeff(m, n))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(Self::from_fn(self.order, |m, n| self.coeff(m, n).minus(other.coeff(m, n))))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.order, |m, n| self.coeff(m, n).negated())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::from_fn(self.order, |m, n| self.coeff(m, n).scale(q))
    }

    /// Double binomial convolution.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let binoms: Vec<Vec<BigInt>> =
            (0..=self.order).map(|n| (0..=n).map(|i| binomial(n, i)).collect()).collect();
        Self::from_fn(self.order, |m, n| {
            let mut acc = R::zero_elem();
            for i in 0..=m {
                for j in 0..=n {
                    let a = self.coeff(i, j);
                    let b = other.coeff(m - i, n - j);
                    if a.is_zero_elem() || b.is_zero_elem() {
                        continue;
                    }
                    let w = &binoms[m][i] * &binoms[n][j];
                    acc = acc.plus(&a.times(b).scale_int(&w));
                }
            }
            acc
        })
    }

    fn without_constant(&self) -> Self {
        let mut s = self.clone();
        s.coeffs[0] = R::zero_elem();
        s
    }

    /// `sum_k weight(k) * b^k` for `b` without constant term. Powers of `b`
    /// vanish on the box once `k > 2 * order`.
    fn nilpotent_sum(b: &Self, mut weight: impl FnMut(usize) -> Rational) -> Self {
        let mut acc = Self::zero(b.order);
        let mut power = Self::one(b.order);
        for k in 0..=2 * b.order {
            let w = weight(k);
            acc = acc.add(&power.scale(&w)).expect("same order");
            power = power.mul_unchecked(b);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0].unit_inverse().ok_or(SeriesError::NonInvertibleConstant)?;
        // c0 (1 + b) with b = (self - c0) / c0
        let b = Self::from_fn(self.order, |m, n| self.coeff(m, n).times(&c0_inv)).without_constant();
        let sum = Self::nilpotent_sum(&b, |k| if k % 2 == 0 { Rational::one() } else { -Rational::one() });
        Ok(Self::from_fn(self.order, |m, n| sum.coeff(m, n).times(&c0_inv)))
    }

    pub fn pow(&self, s: i64) -> Result<Self, SeriesError> {
        let base = if s < 0 { self.recip()? } else { self.clone() };
        let mut e = s.unsigned_abs();
        let mut acc = Self::one(self.order);
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

    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_elem() {
            return Err(SeriesError::Domain("exp needs a zero constant term".into()));
        }
        Ok(Self::nilpotent_sum(self, |k| Rational::new(BigInt::one(), factorial(k))))
    }

    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one_elem() {
            return Err(SeriesError::Domain("log needs constant term 1".into()));
        }
        let b = self.without_constant();
        Ok(Self::nilpotent_sum(&b, |k| match k {
            0 => Rational::from_integer(0.into()),
            _ if k % 2 == 1 => Rational::new(BigInt::one(), BigInt::from(k)),
            _ => -Rational::new(BigInt::one(), BigInt::from(k)),
        }))
    }

    /// `self^alpha`; fractional exponents need constant term one.
    pub fn pow_rational(&self, alpha: &Rational) -> Result<Self, SeriesError> {
        if alpha.is_integer() {
            let e = i64::try_from(alpha.to_integer())
                .map_err(|_| SeriesError::Domain("exponent too large".into()))?;
            return self.pow(e);
        }
        if self.coeffs[0] != R::one_elem() {
            return Err(SeriesError::Domain("fractional power needs constant term 1".into()));
        }
        let b = self.without_constant();
        // generalized binomial coefficients alpha choose k
        let mut binom = Rational::one();
        let mut weights = Vec::new();
        for k in 0..=2 * self.order {
            weights.push(binom.clone());
            binom = binom * (alpha - Rational::from_integer(k.into()))
                / Rational::from_integer((k + 1).into());
        }
        Ok(Self::nilpotent_sum(&b, |k| weights[k].clone()))
    }

    /// `f(x, u(x)) = sum_n phi_n(x) u(x)^n / n!`, truncated at the common
    /// order.
    pub fn substitute_y(&self, u: &TaylorEgf<R>) -> Result<TaylorEgf<R>, SeriesError> {
        if u.order() != self.order {
            return Err(SeriesError::OrderMismatch { left: self.order, right: u.order() });
        }
        if !u.coeff(0).is_zero_elem() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let mut acc = TaylorEgf::zero(self.order);
        let mut power = TaylorEgf::one(self.order);
        for n in 0..=self.order {
            let term = self.column(n).mul(&power)?;
            let scaled = term.scale(&Rational::new(BigInt::one(), factorial(n)));
            acc = acc.add(&scaled)?;
            power = power.mul(u)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    type B = BivariateEgf<Rational>;

    fn only(order: usize, entries: &[((usize, usize), Rational)]) -> B {
        B::from_fn(order, |m, n| {
            entries
                .iter()
                .find(|(k, _)| *k == (m, n))
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| rat(0))
        })
    }

    #[test]
    fn products() {
        let x = B::x(3);
        let y = B::y(3);
        assert_eq!(x.mul(&y).unwrap(), only(3, &[((1, 1), rat(1))]));
        let f = B::from_fn(3, |m, n| rat((m * 4 + n) as i64 - 3));
        assert_eq!(f.mul(&B::one(3)).unwrap(), f);
        let s = x.add(&y).unwrap();
        assert_eq!(
            s.mul(&s).unwrap(),
            only(3, &[((2, 0), rat(2)), ((1, 1), rat(2)), ((0, 2), rat(2))])
        );
    }

    #[test]
    fn recip_and_powers() {
        let f = B::from_fn(3, |m, n| rat(((m + 2 * n) % 5) as i64 + 1));
        let inv = f.recip().unwrap();
        assert_eq!(f.mul(&inv).unwrap(), B::one(3));
        assert_eq!(f.pow(-2).unwrap().mul(&f.pow(2).unwrap()).unwrap(), B::one(3));
        assert!(B::x(2).recip().is_err());
    }

    #[test]
    fn exp_log_roundtrip() {
        let a = B::from_fn(4, |m, n| if m + n == 0 { rat(0) } else { ratio((m as i64) - (n as i64), 3) });
        let e = a.exp().unwrap();
        assert_eq!(e.log().unwrap(), a);
        let b = a.add(&B::one(4)).unwrap();
        let root = b.pow_rational(&ratio(1, 2)).unwrap();
        assert_eq!(root.mul(&root).unwrap(), b);
        assert!(b.exp().is_err());
        assert!(a.log().is_err());
    }

    #[test]
    fn substitution() {
        let y = B::y(5);
        let u = TaylorEgf::new(vec![rat(0), rat(3), rat(-1), rat(2), rat(0), rat(7)]);
        assert_eq!(y.substitute_y(&u).unwrap(), u);
        assert!(y.substitute_y(&TaylorEgf::zero(5)).unwrap().is_zero());

        // f = y - x - x y vanishes on y = x/(1-x), whose EGF coefficients are n!
        let f = only(5, &[((0, 1), rat(1)), ((1, 0), rat(-1)), ((1, 1), rat(-1))]);
        let geometric = TaylorEgf::from_fn(5, |n| {
            if n == 0 { rat(0) } else { Rational::from_integer(factorial(n)) }
        });
        assert!(f.substitute_y(&geometric).unwrap().is_zero());

        let bad = TaylorEgf::new(vec![rat(1); 6]);
        assert_eq!(f.substitute_y(&bad), Err(SeriesError::NonzeroConstantTerm));
    }
}
