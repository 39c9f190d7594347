#![allow(dead_code)]

use implicit_series::algebra::{ratio, Indeterminate, LaurentPoly, Rational};
use implicit_series::implicit::CoeffTable;
use implicit_series::series::TaylorEgf;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform over p/q with |p| <= 3, 1 <= q <= 3.
pub fn small_fraction(rng: &mut StdRng) -> Rational {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

pub fn nonzero_fraction(rng: &mut StdRng) -> Rational {
    loop {
        let v = small_fraction(rng);
        if v != ratio(0, 1) {
            return v;
        }
    }
}

/// Random expandable table: f00 = 0, f01 != 0.
pub fn random_table(rng: &mut StdRng, order: usize) -> CoeffTable<Rational> {
    let mut entries = Vec::new();
    for m in 0..=order {
        for n in 0..=order {
            let v = match (m, n) {
                (0, 0) => continue,
                (0, 1) => nonzero_fraction(rng),
                _ => small_fraction(rng),
            };
            entries.push(((m, n), v));
        }
    }
    CoeffTable::from_entries(order, entries).unwrap()
}

/// Random series with zero constant term and, if `unit`, nonzero linear term.
pub fn random_series(rng: &mut StdRng, order: usize, unit: bool) -> TaylorEgf<Rational> {
    TaylorEgf::from_fn(order, |n| match n {
        0 => ratio(0, 1),
        1 if unit => nonzero_fraction(rng),
        _ => small_fraction(rng),
    })
}

pub fn f(m: u32, n: u32, e: i32) -> LaurentPoly {
    LaurentPoly::var(Indeterminate::F(m, n), e).unwrap()
}

pub fn x(i: u32, e: i32) -> LaurentPoly {
    LaurentPoly::var(Indeterminate::X(i), e).unwrap()
}

pub fn c(p: i64) -> LaurentPoly {
    LaurentPoly::constant(ratio(p, 1))
}

/// Evaluates a polynomial in `X_1, X_2, ...` at `args[0], args[1], ...`.
pub fn eval_x(p: &LaurentPoly, args: &[Rational]) -> Rational {
    p.eval_with(|v| match v {
        Indeterminate::X(i) => args.get(i as usize - 1).cloned(),
        _ => None,
    })
    .unwrap()
}
