//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Indeterminates are either Taylor coefficients `f[m,n]` or Bell/Stirling
//! variables `X[i]`. Only `f[0,1]` and `X[1]` are invertible and may carry
//! negative exponents. Terms live in a `BTreeMap` keyed by [`Monomial`],
//! whose `Ord` is the canonical (graded lexicographic) order used for
//! serialization, so a `LaurentPoly` is always in normal form.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational, Rational};
use super::ring::Coeff;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Indeterminate {
    /// Taylor coefficient `f_{m,n}`.
    F(u32, u32),
    /// Bell/Stirling indeterminate `X_i`, `i >= 1`.
    X(u32),
}

impl Indeterminate {
    pub fn is_invertible(self) -> bool {
        matches!(self, Indeterminate::F(0, 1) | Indeterminate::X(1))
    }
}

impl fmt::Display for Indeterminate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indeterminate::F(m, n) => write!(f, "f[{m},{n}]"),
            Indeterminate::X(i) => write!(f, "X[{i}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("negative exponent {exp} on non-invertible indeterminate {var}")]
    NegativeExponent { var: Indeterminate, exp: i32 },
    #[error("indeterminate X[0] does not exist")]
    InvalidIndex,
    #[error("malformed polynomial serialization: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no value assigned to {0}")]
    MissingAssignment(Indeterminate),
    #[error("division by zero: {0} occurs with a negative exponent but its value is not invertible")]
    DivisionByZero(Indeterminate),
}

/// Product of indeterminate powers; factors sorted by indeterminate, no zero
/// exponents. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(Indeterminate, i32)>,
    degree: u32,
}

impl Monomial {
    pub fn unit() -> Self {
        Self::default()
    }

    /// Builds a monomial, merging repeated indeterminates and dropping zero
    /// exponents.
    pub fn new(
        factors: impl IntoIterator<Item = (Indeterminate, i32)>,
    ) -> Result<Self, PolyError> {
        let mut merged: BTreeMap<Indeterminate, i32> = BTreeMap::new();
        for (var, exp) in factors {
            if var == Indeterminate::X(0) {
                return Err(PolyError::InvalidIndex);
            }
            *merged.entry(var).or_insert(0) += exp;
        }
        let factors: Vec<_> = merged.into_iter().filter(|&(_, e)| e != 0).collect();
        for &(var, exp) in &factors {
            if exp < 0 && !var.is_invertible() {
                return Err(PolyError::NegativeExponent { var, exp });
            }
        }
        Ok(Self::from_sorted(factors))
    }

    fn from_sorted(factors: Vec<(Indeterminate, i32)>) -> Self {
        let degree = factors.iter().map(|&(_, e)| e.unsigned_abs()).sum();
        Monomial { factors, degree }
    }

    pub fn var(var: Indeterminate, exp: i32) -> Result<Self, PolyError> {
        Self::new([(var, exp)])
    }

    pub fn factors(&self) -> &[(Indeterminate, i32)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree, counting negative exponents by absolute value.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponent(&self, var: Indeterminate) -> i32 {
        self.factors
            .binary_search_by(|(v, _)| v.cmp(&var))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn is_invertible(&self) -> bool {
        self.factors.iter().all(|(v, _)| v.is_invertible())
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial::from_sorted(out)
    }

    fn inverse(&self) -> Option<Monomial> {
        if !self.is_invertible() {
            return None;
        }
        Some(Monomial::from_sorted(
            self.factors.iter().map(|&(v, e)| (v, -e)).collect(),
        ))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (var, exp)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *exp == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Sparse Laurent polynomial with rational coefficients, always normalized.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::unit())
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    /// The polynomial `var^exp`.
    pub fn var(var: Indeterminate, exp: i32) -> Result<Self, PolyError> {
        Ok(Self::term(Rational::one(), Monomial::var(var, exp)?))
    }

    /// Collects arbitrary (possibly repeated or zero) terms into normal form.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Merges like monomials and drops zero coefficients. Values of this
    /// type are kept normalized by every constructor, so this is the identity
    /// on them; it exists for raw term lists.
    pub fn normalize(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Returns the rational value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_unit())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            match big.terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        big.terms.remove(m);
                    }
                }
                None => {
                    big.terms.insert(m.clone(), c.clone());
                }
            }
        }
        big
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale_by(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
        }
    }

    /// Evaluates with values supplied by `value`, in any coefficient ring.
    ///
    /// Negative exponents are realized through `Coeff::unit_inverse`; a
    /// non-unit value there is reported as division by zero.
    pub fn eval_with<R: Coeff>(
        &self,
        mut value: impl FnMut(Indeterminate) -> Option<R>,
    ) -> Result<R, EvalError> {
        let mut powers: HashMap<(Indeterminate, i32), R> = HashMap::new();
        let mut bases: HashMap<Indeterminate, R> = HashMap::new();
        let mut total = R::zero_elem();
        for (m, c) in &self.terms {
            let mut prod = R::from_rational(c.clone());
            for &(var, exp) in m.factors() {
                let p = match powers.entry((var, exp)) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => {
                        let base = match bases.entry(var) {
                            Entry::Occupied(b) => b.into_mut(),
                            Entry::Vacant(b) => {
                                b.insert(value(var).ok_or(EvalError::MissingAssignment(var))?)
                            }
                        };
                        e.insert(base.pow_int(exp as i64).ok_or(EvalError::DivisionByZero(var))?)
                    }
                };
                prod = prod.times(p);
            }
            total = total.plus(&prod);
        }
        Ok(total)
    }

    /// Rational evaluation at an explicit assignment.
    pub fn eval(&self, sigma: &HashMap<Indeterminate, Rational>) -> Result<Rational, EvalError> {
        self.eval_with(|v| sigma.get(&v).cloned())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                c: format_rational(c),
                factors: m
                    .factors()
                    .iter()
                    .map(|&(v, e)| match v {
                        Indeterminate::F(m, n) => FactorJson { sym: "F".into(), m, n: Some(n), e },
                        Indeterminate::X(i) => FactorJson { sym: "X".into(), m: i, n: None, e },
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(terms).expect("term list serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, PolyError> {
        let terms: Vec<TermJson> = serde_json::from_value(value.clone())
            .map_err(|e| PolyError::Format(e.to_string()))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let c = parse_rational(&t.c).map_err(|e| PolyError::Format(e.to_string()))?;
            let mut factors = Vec::with_capacity(t.factors.len());
            for f in t.factors {
                let var = match (f.sym.as_str(), f.n) {
                    ("F", Some(n)) => Indeterminate::F(f.m, n),
                    ("X", None) => Indeterminate::X(f.m),
                    _ => return Err(PolyError::Format(format!("bad factor symbol `{}`", f.sym))),
                };
                factors.push((var, f.e));
            }
            out.push((Monomial::new(factors)?, c));
        }
        Ok(Self::from_terms(out))
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    c: String,
    factors: Vec<FactorJson>,
}

#[derive(Debug, Serialize, Deserialize)]
struct FactorJson {
    sym: String,
    m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<u32>,
    e: i32,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_unit() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}

impl Coeff for LaurentPoly {
    fn zero_elem() -> Self {
        LaurentPoly::zero()
    }
    fn one_elem() -> Self {
        LaurentPoly::constant(Rational::one())
    }
    fn from_rational(q: Rational) -> Self {
        LaurentPoly::constant(q)
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add_poly(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add_poly(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
    fn negated(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
    fn scale(&self, q: &Rational) -> Self {
        self.scale_by(q)
    }
    /// Units are nonzero rational multiples of a monomial in invertible
    /// indeterminates.
    fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(LaurentPoly::term(c.recip(), m.inverse()?))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_poly(rhs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.minus(rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.negated()
    }
}
