//! Partial Bell polynomials `B_{n,k}`.
//!
//! Two constructions are kept on purpose: [`bell_partial`] builds the
//! polynomial from the partition sum, [`bell_eval`] / [`BellTable`] evaluate
//! through the triangular recurrence. Each is the other's oracle.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use super::partitions::partition_sequences;
use crate::algebra::{binomial, factorial, Coeff, Indeterminate, LaurentPoly, Monomial, Rational};

type Cache = Mutex<HashMap<(usize, usize), Arc<LaurentPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `B_{n,k}` as a polynomial in `X[1..=n-k+1]`, memoized per `(n, k)`.
pub fn bell_partial(n: usize, k: usize) -> Arc<LaurentPoly> {
    if let Some(p) = cache().lock().expect("bell cache").get(&(n, k)) {
        return Arc::clone(p);
    }
    let p = Arc::new(bell_partition_sum(n, k));
    let mut guard = cache().lock().expect("bell cache");
    Arc::clone(guard.entry((n, k)).or_insert(p))
}

fn bell_partition_sum(n: usize, k: usize) -> LaurentPoly {
    if n == 0 {
        return if k == 0 { LaurentPoly::one_elem() } else { LaurentPoly::zero() };
    }
    if k == 0 || k > n {
        return LaurentPoly::zero();
    }
    let n_fact = factorial(n);
    let terms = partition_sequences(n, k, n).into_iter().map(|r| {
        let mut denom = BigInt::one();
        let mut factors = Vec::new();
        for i in 1..=n {
            let ri = r.r(i);
            if ri > 0 {
                denom *= factorial(ri) * factorial(i).pow(ri as u32);
                factors.push((Indeterminate::X(i as u32), ri as i32));
            }
        }
        let monomial = Monomial::new(factors).expect("nonnegative exponents");
        (monomial, Rational::new(n_fact.clone(), denom))
    });
    LaurentPoly::from_terms(terms)
}

/// Values `B_{j,c}(args)` for all `0 <= c <= j <= n`, by the recurrence
/// `B_{j,c} = sum_{i>=1} C(j-1, i-1) args_i B_{j-i,c-1}`.
#[derive(Debug, Clone)]
pub struct BellTable<R> {
    rows: Vec<Vec<R>>,
}

impl<R: Coeff> BellTable<R> {
    /// `args[i - 1]` plays the role of `X_i`; entries past `args.len()` are
    /// treated as zero.
    pub fn new(n: usize, args: &[R]) -> Self {
        let mut rows: Vec<Vec<R>> = Vec::with_capacity(n + 1);
        rows.push(vec![R::one_elem()]);
        for j in 1..=n {
            let mut row = vec![R::zero_elem(); j + 1];
            for (c, slot) in row.iter_mut().enumerate().skip(1) {
                let mut acc = R::zero_elem();
                for i in 1..=(j + 1 - c) {
                    let Some(x) = args.get(i - 1) else { break };
                    let prev = &rows[j - i];
                    if c > prev.len() || x.is_zero_elem() || prev[c - 1].is_zero_elem() {
                        continue;
                    }
                    let term = x.times(&prev[c - 1]).scale_int(&binomial(j - 1, i - 1));
                    acc = acc.plus(&term);
                }
                *slot = acc;
            }
            rows.push(row);
        }
        BellTable { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> R {
        match self.rows.get(n).and_then(|row| row.get(k)) {
            Some(v) => v.clone(),
            None => R::zero_elem(),
        }
    }
}

/// `B_{n,k}(args)` via the recurrence; `args` beyond index `n-k+1` are
/// ignored.
pub fn bell_eval<R: Coeff>(n: usize, k: usize, args: &[R]) -> R {
    if k > n {
        return R::zero_elem();
    }
    BellTable::new(n, &args[..args.len().min(n + 1 - k)]).get(n, k)
}
