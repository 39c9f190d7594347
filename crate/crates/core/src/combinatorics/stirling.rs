//! Multivariable Stirling polynomials `A_{n,k}` (the family inverse to the
//! partial Bell polynomials) and the classical Stirling numbers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::bell::bell_partial;
use super::partitions::partition_sequences;
use crate::algebra::{factorial, Coeff, Indeterminate, LaurentPoly, Monomial, Rational};

/// Closed form of `A_{n,1}` as a sum over block-size vectors of partitions
/// of `2n-2` elements into `n-1` blocks:
///
/// `X1^-(2n-1) * sum (-1)^(n-1-r1) (2n-2-r1)! / prod_{i>=2} (r_i! (i!)^r_i) * prod X_i^r_i`
///
/// # Panics
/// Panics if `n == 0`.
pub fn stirling_a_n1(n: usize) -> LaurentPoly {
    assert!(n >= 1, "A_{{n,1}} needs n >= 1");
    let terms = partition_sequences(2 * n - 2, n - 1, n).into_iter().map(|r| {
        let r1 = r.r(1);
        let mut denom = BigInt::one();
        let mut factors = vec![(Indeterminate::X(1), r1 as i32 - (2 * n as i32 - 1))];
        for i in 2..=n {
            let ri = r.r(i);
            if ri > 0 {
                denom *= factorial(ri) * factorial(i).pow(ri as u32);
                factors.push((Indeterminate::X(i as u32), ri as i32));
            }
        }
        let mut numer = factorial(2 * n - 2 - r1);
        if (n - 1 - r1) % 2 == 1 {
            numer = -numer;
        }
        let monomial = Monomial::new(factors).expect("only X1 is negative");
        (monomial, Rational::new(numer, denom))
    });
    LaurentPoly::from_terms(terms)
}

type RowCache = Mutex<HashMap<usize, Arc<Vec<LaurentPoly>>>>;

fn row_cache() -> &'static RowCache {
    static CACHE: OnceLock<RowCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Row `[A_{n,0}, ..., A_{n,n}]`, solved downward from `A_{n,n} = X1^-n`
/// through `sum_{i=j}^n A_{n,i} B_{i,j} = delta_{n,j}`.
fn stirling_a_row(n: usize) -> Arc<Vec<LaurentPoly>> {
    if let Some(row) = row_cache().lock().expect("stirling cache").get(&n) {
        return Arc::clone(row);
    }
    let mut row = vec![LaurentPoly::zero(); n + 1];
    if n == 0 {
        row[0] = LaurentPoly::one_elem();
    } else {
        for j in (1..=n).rev() {
            let mut rhs = if j == n { LaurentPoly::one_elem() } else { LaurentPoly::zero() };
            for (i, a) in row.iter().enumerate().skip(j + 1) {
                rhs = rhs.minus(&a.times(&bell_partial(i, j)));
            }
            // B_{j,j} = X1^j
            let inv = LaurentPoly::var(Indeterminate::X(1), -(j as i32)).expect("X1 invertible");
            row[j] = rhs.times(&inv);
        }
        // A_{n,0} = 0 for n > 0 since B_{i,0} vanishes for i > 0
    }
    let row = Arc::new(row);
    let mut guard = row_cache().lock().expect("stirling cache");
    Arc::clone(guard.entry(n).or_insert(row))
}

/// `A_{n,k}` for `k <= n`; zero when `k > n`.
pub fn stirling_a(n: usize, k: usize) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    stirling_a_row(n)[k].clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed Stirling numbers of the first kind `s(n,k)`.
    First,
    /// Stirling numbers of the second kind `S(n,k)`.
    Second,
}

/// Classical recurrences; zero outside `0 <= k <= n`.
pub fn stirling_numbers(n: usize, k: usize, kind: StirlingKind) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut prev = vec![BigInt::one()];
    for row in 1..=n {
        let mut cur = vec![BigInt::zero(); row + 1];
        for (j, slot) in cur.iter_mut().enumerate().skip(1) {
            let left = prev.get(j - 1).cloned().unwrap_or_default();
            let up = prev.get(j).cloned().unwrap_or_default();
            *slot = match kind {
                StirlingKind::First => left - BigInt::from(row - 1) * up,
                StirlingKind::Second => left + BigInt::from(j) * up,
            };
        }
        prev = cur;
    }
    prev[k].clone()
}
