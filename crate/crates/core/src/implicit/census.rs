//! Monomial census of the symbolic coefficients `y_m`.
//!
//! High orders use an incremental form of coefficient matching: the x^m
//! coefficient of `phi_n(x) y(x)^n / n!` is
//! `sum_i C(m,i) f[i,n] B_{m-i,n}(y_1, ...)`, and the Bell rows in the
//! `y_j` are extended by their recurrence as each `y_m` becomes known. This
//! avoids re-substituting the whole series at every order.

use std::time::{Duration, Instant};

use super::{CoeffTable, ImplicitError};
use crate::algebra::{binomial, Coeff, LaurentPoly};

/// Monomial counts reported for `y_2`, `y_3`, `y_4` and `y_15` in the
/// literature on higher derivatives of implicit functions.
pub const REFERENCE_COUNTS: [(usize, usize); 4] = [(2, 3), (3, 9), (4, 24), (15, 91159)];

/// Number of distinct monomials with nonzero coefficient.
pub fn monomial_count(p: &LaurentPoly) -> usize {
    p.len()
}

/// `y_1..y_order` by the incremental Bell-row recurrence. `progress` is
/// called after each coefficient.
pub fn expand_bell_recurrence<R: Coeff>(
    table: &CoeffTable<R>,
    order: usize,
    mut progress: impl FnMut(usize, &R, Duration),
) -> Result<Vec<R>, ImplicitError> {
    table.require_valid()?;
    if order > table.order() {
        return Err(ImplicitError::InsufficientOrder { needed: order, available: table.order() });
    }
    let f01_inv = table
        .get(0, 1)
        .unit_inverse()
        .ok_or_else(|| ImplicitError::Internal("f[0,1] lost invertibility".into()))?;
    // y[i - 1] = y_i; bell[j][c] = B_{j,c}(y_1, y_2, ...)
    let mut y: Vec<R> = Vec::with_capacity(order);
    let mut bell: Vec<Vec<R>> = vec![vec![R::one_elem()]];
    for m in 1..=order {
        let start = Instant::now();
        let mut row = vec![R::zero_elem(); m + 1];
        for (c, slot) in row.iter_mut().enumerate().skip(2) {
            let mut acc = R::zero_elem();
            for i in 1..=(m + 1 - c) {
                let prev = &bell[m - i][c - 1];
                if prev.is_zero_elem() || y[i - 1].is_zero_elem() {
                    continue;
                }
                acc = acc.plus(&y[i - 1].times(prev).scale_int(&binomial(m - 1, i - 1)));
            }
            *slot = acc;
        }
        let mut r = table.get(m, 0);
        for n in 1..=m {
            for i in 0..=(m - n) {
                if (i, n) == (0, 1) {
                    continue;
                }
                let f = table.get(i, n);
                let b = if i == 0 { &row[n] } else { &bell[m - i][n] };
                if f.is_zero_elem() || b.is_zero_elem() {
                    continue;
                }
                r = r.plus(&f.times(b).scale_int(&binomial(m, i)));
            }
        }
        let ym = r.times(&f01_inv).negated();
        row[1] = ym.clone();
        progress(m, &ym, start.elapsed());
        y.push(ym);
        bell.push(row);
    }
    Ok(y)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    pub m: usize,
    pub monomials: usize,
    /// Count reported in the literature, when one exists for this `m`.
    pub reference: Option<usize>,
}

impl CensusEntry {
    pub fn agrees(&self) -> bool {
        self.reference.is_none_or(|r| r == self.monomials)
    }
}

/// Monomial counts of the symbolic `y_1..y_order`.
pub fn census(
    order: usize,
    mut progress: impl FnMut(&CensusEntry, Duration),
) -> Result<Vec<CensusEntry>, ImplicitError> {
    let table = CoeffTable::symbolic(order);
    let mut out = Vec::with_capacity(order);
    expand_bell_recurrence(&table, order, |m, ym, elapsed| {
        let entry = CensusEntry {
            m,
            monomials: monomial_count(ym),
            reference: REFERENCE_COUNTS.iter().find(|(k, _)| *k == m).map(|&(_, c)| c),
        };
        progress(&entry, elapsed);
        out.push(entry);
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use crate::implicit::expand_direct;

    #[test]
    fn agrees_with_direct_path() {
        let t = CoeffTable::symbolic(4);
        let fast = expand_bell_recurrence(&t, 4, |_, _, _| {}).unwrap();
        assert_eq!(fast, expand_direct(&t, 4).unwrap().y);
        let geo = expand_bell_recurrence(&CoeffTable::geometric(7), 7, |_, _, _| {}).unwrap();
        assert_eq!(geo, [1, 2, 6, 24, 120, 720, 5040].map(rat));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = census(4, |_, _| {}).unwrap().iter().map(|e| e.monomials).collect();
        assert_eq!(counts, vec![1, 3, 9, 24]);
    }
}
