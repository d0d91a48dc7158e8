//! Property tests for the series ring and the family enumerators.

use jagged::families::FamilySpec;
use jagged::qseries::{pochhammer_inf, slice, substitute_power, IntSeries, Sign};
use num_bigint::BigInt;
use proptest::prelude::*;

fn series(max_order: usize) -> impl Strategy<Value = IntSeries> {
    proptest::collection::vec(-50i64..50, 1..max_order)
        .prop_map(|v| IntSeries::from_coeffs(v.into_iter().map(BigInt::from).collect()))
}

/// Series whose constant term is +1 or -1 (invertible over the integers).
fn unit_series(max_order: usize) -> impl Strategy<Value = IntSeries> {
    (
        proptest::bool::ANY,
        proptest::collection::vec(-50i64..50, 1..max_order),
    )
        .prop_map(|(neg, mut v)| {
            v[0] = if neg { -1 } else { 1 };
            IntSeries::from_coeffs(v.into_iter().map(BigInt::from).collect())
        })
}

proptest! {
    #[test]
    fn addition_commutes_and_associates(a in series(50), b in series(50), c in series(50)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_commutes_and_associates(a in series(40), b in series(40), c in series(40)) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in series(40), b in series(40), c in series(40)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn inversion_round_trips(a in unit_series(40)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, IntSeries::one(a.order()));
        prop_assert_eq!(inv.invert().unwrap(), a);
    }

    #[test]
    fn slices_reassemble(a in series(60), r in 1usize..6) {
        let order = a.order();
        let mut sum = IntSeries::zero(order);
        for s in 0..r {
            let part = substitute_power(&slice(&a, r, s), r).shift_up(s);
            sum = &sum + &part.truncate(order);
        }
        prop_assert_eq!(sum, a);
    }

    #[test]
    fn substitution_composes(a in series(30), k in 1usize..4, l in 1usize..4) {
        prop_assert_eq!(
            substitute_power(&substitute_power(&a, k), l),
            substitute_power(&a, k * l)
        );
    }
}

#[test]
fn pochhammer_inverse_pairs() {
    for c in 1..=8 {
        let prod = &pochhammer_inf(c, Sign::Minus, 1, 80) * &pochhammer_inf(c, Sign::Minus, -1, 80);
        assert_eq!(prod, IntSeries::one(80), "c = {c}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Everything enumerate returns is valid, has the right weight, and
    /// validity agrees with a direct constraint check.
    #[test]
    fn enumerate_agrees_with_validity(weight in 0u32..12, pick in 0usize..4) {
        let family = match pick {
            0 => FamilySpec::f01(),
            1 => FamilySpec::f02(),
            2 => FamilySpec::f012(),
            _ => FamilySpec::f001(),
        };
        for p in family.enumerate(weight, None) {
            prop_assert!(family.is_valid(p.parts()));
            prop_assert_eq!(p.weight(), weight);
        }
    }
}
