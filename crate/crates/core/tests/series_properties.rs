use num_bigint::BigInt;
use proptest::prelude::*;

use uudd::fps::{compose_linear, elementary, Elementary};
use uudd::genfun::{seidel_closed_form, SeidelArray};
use uudd::{Rational, Series1, Series2};

fn r(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn series1(order: usize) -> impl Strategy<Value = Series1> {
    prop::collection::vec((-20i64..=20, 1i64..=4), order + 1).prop_map(|cs| {
        Series1::from_coeffs(cs.into_iter().map(|(n, d)| Rational::new(n.into(), d.into())).collect())
    })
}

fn series2(order: usize) -> impl Strategy<Value = Series2> {
    let cells = (order + 1) * (order + 2) / 2;
    prop::collection::vec(-9i64..=9, cells).prop_map(move |cs| {
        let mut it = cs.into_iter();
        let mut grid = vec![vec![r(0); order + 1]; order + 1];
        for d in 0..=order {
            for j in 0..=d {
                grid[d - j][j] = r(it.next().unwrap());
            }
        }
        Series2::from_fn(order, |i, j| grid[i][j].clone())
    })
}

const ORDER: usize = 8;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn univariate_ring_axioms(a in series1(ORDER), b in series1(ORDER), c in series1(ORDER)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series1::one(ORDER), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn univariate_leibniz(a in series1(ORDER), b in series1(ORDER)) {
        let lhs = (&a * &b).derivative();
        let rhs = &(&a.derivative() * &b.truncate(ORDER - 1)) + &(&a.truncate(ORDER - 1) * &b.derivative());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn univariate_division_round_trip(a in series1(ORDER), mut b in series1(ORDER), lead in 1i64..=5) {
        let mut cs = b.coeffs().to_vec();
        cs[0] = r(lead);
        b = Series1::from_coeffs(cs);
        let q = a.div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn bivariate_ring_axioms(a in series2(6), b in series2(6), c in series2(6)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Series2::one(6), a.clone());
    }

    #[test]
    fn bivariate_division_round_trip(a in series2(6), b in series2(6), lead in 1i64..=5) {
        let b = Series2::from_fn(6, |i, j| if (i, j) == (0, 0) { r(lead) } else { b.at(i, j).clone() });
        let q = a.div(&b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn partials_commute(a in series2(7)) {
        prop_assert_eq!(a.partial_x().partial_y(), a.partial_y().partial_x());
        prop_assert_eq!(a.swap_vars().swap_vars(), a.clone());
        prop_assert_eq!(&a.even_part() + &a.odd_part(), a);
    }

    #[test]
    fn composition_is_a_ring_morphism(f in series1(ORDER), g in series1(ORDER), a in -3i64..=3, b in -3i64..=3) {
        let (a, b) = (r(a), r(b));
        prop_assert_eq!(
            compose_linear(&(&f * &g), &a, &b, ORDER),
            &compose_linear(&f, &a, &b, ORDER) * &compose_linear(&g, &a, &b, ORDER)
        );
        prop_assert_eq!(
            compose_linear(&(&f + &g), &a, &b, ORDER),
            &compose_linear(&f, &a, &b, ORDER) + &compose_linear(&g, &a, &b, ORDER)
        );
    }

    #[test]
    fn seidel_fill_matches_closed_form(seed in prop::collection::vec(-9i64..=9, 1..=10)) {
        let seed: Vec<Rational> = seed.into_iter().map(r).collect();
        let (array, closed) = seidel_closed_form(&seed).unwrap();
        prop_assert!(array.satisfies_relation());
        prop_assert_eq!(array.as_series(), &closed);
        prop_assert!(SeidelArray::from_series(closed).satisfies_relation());
    }
}

#[test]
fn exponential_laws() {
    let exp = elementary(Elementary::Exp, 14);
    let one = r(1);
    let zero = r(0);
    let e_x = compose_linear(&exp, &one, &zero, 14);
    let e_y = compose_linear(&exp, &zero, &one, 14);
    assert_eq!(&e_x * &e_y, compose_linear(&exp, &one, &one, 14));
    let sinh = elementary(Elementary::Sinh, 14);
    let cosh = elementary(Elementary::Cosh, 14);
    assert_eq!(&cosh + &sinh, exp);
    assert_eq!(sinh.derivative(), cosh.truncate(13));
}
