mod common;

use implicit_series::algebra::{factorial, ratio, Coeff, Rational};
use implicit_series::combinatorics::{bell_eval, bell_partial};
use implicit_series::series::{BivariateEgf, SeriesError, TaylorEgf};
use proptest::prelude::*;

use common::eval_x;

fn fraction() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    fraction().prop_filter("nonzero", |q| *q != ratio(0, 1))
}

fn series(order: usize) -> impl Strategy<Value = TaylorEgf<Rational>> {
    proptest::collection::vec(fraction(), order + 1).prop_map(TaylorEgf::new)
}

/// Zero constant term, unit linear term.
fn invertible_map(order: usize) -> impl Strategy<Value = TaylorEgf<Rational>> {
    (nonzero(), proptest::collection::vec(fraction(), order - 1)).prop_map(|(g1, rest)| {
        let mut c = vec![ratio(0, 1), g1];
        c.extend(rest);
        TaylorEgf::new(c)
    })
}

fn unit_series(order: usize) -> impl Strategy<Value = TaylorEgf<Rational>> {
    (nonzero(), proptest::collection::vec(fraction(), order)).prop_map(|(c0, rest)| {
        let mut c = vec![c0];
        c.extend(rest);
        TaylorEgf::new(c)
    })
}

proptest! {
    #[test]
    fn multiplication_is_commutative_and_associative(a in series(6), b in series(6), c in series(6)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn pow_is_additive_in_the_exponent(a in unit_series(6), s in -3i64..=3, t in -3i64..=3) {
        let lhs = a.pow(s + t).unwrap();
        let rhs = a.pow(s).unwrap().mul(&a.pow(t).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn recip_is_inverse(a in unit_series(7)) {
        prop_assert_eq!(a.mul(&a.recip().unwrap()).unwrap(), TaylorEgf::one(7));
    }

    #[test]
    fn comp_inverse_both_sides(g in invertible_map(7)) {
        let gbar = g.comp_inverse().unwrap();
        prop_assert!(TaylorEgf::compose(&gbar, &g).unwrap().is_identity());
        prop_assert!(TaylorEgf::compose(&g, &gbar).unwrap().is_identity());
    }

    #[test]
    fn power_coeff_is_scaled_bell(phi in invertible_map(8), k in 0usize..=8) {
        for n in 0..=8 {
            let lhs = phi.power_coeff(k as i64, n).unwrap();
            let args = &phi.coeffs()[1..];
            let rhs = bell_eval(n, k, args).scale_int(&factorial(k));
            prop_assert_eq!(&lhs, &rhs);
            if n >= k && k >= 1 {
                let sym = eval_x(&bell_partial(n, k), &args[..n - k + 1]).scale_int(&factorial(k));
                prop_assert_eq!(lhs, sym);
            }
        }
    }

    #[test]
    fn exp_log_roundtrip(a in invertible_map(6)) {
        let e = a.exp().unwrap();
        prop_assert_eq!(e.log().unwrap(), a);
    }

    #[test]
    fn rational_power_composes(a in invertible_map(6)) {
        let u = TaylorEgf::one(6).add(&a).unwrap();
        let half = u.pow_rational(&ratio(1, 2)).unwrap();
        prop_assert_eq!(half.mul(&half).unwrap(), u.clone());
        prop_assert_eq!(u.pow_rational(&ratio(-2, 1)).unwrap(), u.pow(-2).unwrap());
    }

    #[test]
    fn substitution_is_compatible_with_products(
        a in proptest::collection::vec(fraction(), 25),
        b in proptest::collection::vec(fraction(), 25),
        u in invertible_map(4),
    ) {
        let fa = BivariateEgf::from_fn(4, |m, n| a[5 * m + n].clone());
        let fb = BivariateEgf::from_fn(4, |m, n| b[5 * m + n].clone());
        let lhs = fa.mul(&fb).unwrap().substitute_y(&u).unwrap();
        let rhs = fa.substitute_y(&u).unwrap().mul(&fb.substitute_y(&u).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn exp_x_has_unit_coefficients() {
    assert!(TaylorEgf::exp_x(9).coeffs().iter().all(|c| *c == ratio(1, 1)));
}

#[test]
fn domain_errors() {
    let with_constant = TaylorEgf::new(vec![ratio(1, 1), ratio(1, 1)]);
    assert!(matches!(with_constant.comp_inverse(), Err(SeriesError::NonzeroConstantTerm)));
    assert!(TaylorEgf::new(vec![ratio(0, 1), ratio(0, 1)]).comp_inverse().is_err());
    assert!(TaylorEgf::new(vec![ratio(0, 1), ratio(1, 1)]).recip().is_err());
    assert!(matches!(
        TaylorEgf::<Rational>::one(3).mul(&TaylorEgf::one(4)),
        Err(SeriesError::OrderMismatch { .. })
    ));
    assert!(TaylorEgf::new(vec![ratio(2, 1), ratio(1, 1)]).log().is_err());
}
