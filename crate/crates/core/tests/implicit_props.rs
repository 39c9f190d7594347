mod common;

use implicit_series::algebra::{ratio, rat, Rational};
use implicit_series::implicit::{
    expand, expand_bell_recurrence, expand_direct, first_mismatch, CoeffTable, ImplicitError,
    Method, Violation,
};

use common::{random_table, rng};

fn all_methods(table: &CoeffTable<Rational>, order: usize) -> Vec<Vec<Rational>> {
    Method::ALL.iter().map(|&m| expand(table, order, m).unwrap().y).collect()
}

#[test]
fn methods_agree_and_solve_the_equation() {
    let mut r = rng(11);
    for order in 1..=6 {
        for _ in 0..8 {
            let table = random_table(&mut r, order);
            let ys = all_methods(&table, order);
            assert_eq!(first_mismatch(&ys[0], &ys[1]), None);
            assert_eq!(first_mismatch(&ys[0], &ys[2]), None);
            assert!(table.residual(&ys[0]).unwrap().is_zero());
            let fast = expand_bell_recurrence(&table, order, |_, _, _| {}).unwrap();
            assert_eq!(fast, ys[0]);
        }
    }
}

#[test]
fn sparse_tables_agree() {
    let mut r = rng(12);
    for _ in 0..20 {
        let dense = random_table(&mut r, 5);
        // Keep f01 and a few scattered entries.
        let sparse = CoeffTable::from_entries(
            5,
            (0..=5).flat_map(|m| (0..=5).map(move |n| (m, n))).filter_map(|(m, n)| {
                let keep = (m, n) == (0, 1) || (m * 7 + n * 3) % 4 == 0;
                keep.then(|| ((m, n), dense.get(m, n)))
            }),
        )
        .unwrap();
        let sparse = if sparse.validate().is_ok() { sparse } else { continue };
        let ys = all_methods(&sparse, 5);
        assert_eq!(ys[0], ys[1]);
        assert_eq!(ys[0], ys[2]);
    }
}

#[test]
fn scaling_the_table_leaves_y_unchanged() {
    let mut r = rng(13);
    for _ in 0..10 {
        let table = random_table(&mut r, 5);
        let y = expand_direct(&table, 5).unwrap().y;
        for lambda in [rat(2), rat(-1), ratio(1, 3)] {
            for method in Method::ALL {
                assert_eq!(expand(&table.scaled(&lambda), 5, method).unwrap().y, y);
            }
        }
    }
}

#[test]
fn symbolic_specializes_to_rational() {
    let symbolic = expand_direct(&CoeffTable::symbolic(4), 4).unwrap().y;
    let mut r = rng(14);
    for _ in 0..10 {
        let table = random_table(&mut r, 4);
        let y = expand_direct(&table, 4).unwrap().y;
        for (m, ym) in symbolic.iter().enumerate() {
            assert_eq!(CoeffTable::specialize(ym, &table).unwrap(), y[m], "y_{}", m + 1);
        }
    }
}

#[test]
fn truncation_is_stable() {
    let mut r = rng(15);
    for _ in 0..10 {
        let table = random_table(&mut r, 6);
        let full = expand_direct(&table, 6).unwrap().y;
        for order in 1..6 {
            for method in Method::ALL {
                let short = expand(&table.truncate(order).unwrap(), order, method).unwrap().y;
                assert_eq!(short, full[..order], "{method} at order {order}");
                assert_eq!(expand(&table, order, method).unwrap().y, full[..order]);
            }
        }
    }
}

#[test]
fn diagnostics_have_one_entry_per_coefficient() {
    for method in Method::ALL {
        let res = expand(&CoeffTable::lambert(5), 5, method).unwrap();
        assert_eq!(res.method, method);
        assert_eq!(res.order, 5);
        assert_eq!(res.diagnostics.terms.len(), 5);
        assert_eq!(res.diagnostics.elapsed.len(), 5);
    }
}

#[test]
fn invalid_tables_are_rejected_by_every_method() {
    let bad = CoeffTable::from_entries(3, [((0, 0), rat(1)), ((1, 0), rat(1))]).unwrap();
    for method in Method::ALL {
        assert_eq!(
            expand(&bad, 3, method).unwrap_err(),
            ImplicitError::InvalidTable(vec![Violation::NonzeroF00, Violation::VanishingF01])
        );
        assert!(matches!(
            expand(&CoeffTable::geometric(3), 4, method),
            Err(ImplicitError::InsufficientOrder { needed: 4, available: 3 })
        ));
    }
    assert!(matches!(
        CoeffTable::from_entries(2, [((3, 0), rat(1))]),
        Err(ImplicitError::OutOfRange { m: 3, n: 0, order: 2 })
    ));
}
