//! Property suites over the exact-arithmetic layer and the originator
//! recurrence.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use cyclometria::arith::{
    decimal_expand, format_grouped, integer_sqrt_floor, make_rational, parse_grouped, pow10,
    BigRational, FixedDecimal,
};
use cyclometria::synthesis::RawRatio;

fn big(n: i128) -> BigInt {
    BigInt::from(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn fd_sqrt_brackets(mantissa in 0u128..u128::MAX, scale in 0u32..25, target in 0u32..25) {
        let x = FixedDecimal::new(BigInt::from(mantissa), scale);
        let r = x.sqrt(target).unwrap();
        prop_assert!(&r * &r <= x);
        let next = &r + &r.ulp();
        prop_assert!(x < &next * &next);
    }

    #[test]
    fn format_parse_round_trip(mantissa in any::<i128>(), scale in 0u32..40) {
        let x = FixedDecimal::new(big(mantissa), scale);
        let rendered = format_grouped(&x, 5);
        let back = parse_grouped(&rendered).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn integer_sqrt_brackets(n in 0u128..u128::MAX) {
        let n = BigInt::from(n);
        let s = integer_sqrt_floor(&n).unwrap();
        prop_assert!(&s * &s <= n);
        let s1 = &s + 1;
        prop_assert!(n < &s1 * &s1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn decimal_expand_error_bound(num in any::<i64>(), den in 1i64..=i64::MAX, scale in 0u32..30) {
        let r = make_rational(num, den).unwrap();
        let expanded = decimal_expand(&r, scale).to_rational();
        let err = &r - &expanded;
        let ulp = BigRational::new(1.into(), pow10(scale));
        if r.is_negative() {
            prop_assert!(err <= BigRational::zero());
            prop_assert!(err > -ulp);
        } else {
            prop_assert!(err >= BigRational::zero());
            prop_assert!(err < ulp);
        }
    }

    #[test]
    fn normalization_idempotent(num in any::<i64>(), den in 1i64..=i64::MAX) {
        let once = make_rational(num, den).unwrap();
        let twice = make_rational(once.numer().clone(), once.denom().clone()).unwrap();
        prop_assert_eq!(once.numer(), twice.numer());
        prop_assert_eq!(once.denom(), twice.denom());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Mediant monotonicity on random excessive parents: for p/q > pi the
    /// family f(n) = (p n + 3)/(q n + 1) is strictly increasing in n and
    /// pinned strictly between 3 and p/q.
    #[test]
    fn mediant_monotonicity(q in 1u64..1_000_000, bump in 1u64..1_000_000, n in 1u64..1_000_000) {
        // p/q >= 16/5 > pi, so the parent is excessive by construction
        let p = (16 * q).div_ceil(5) + bump;
        let parent = make_rational(p, q).unwrap();
        let f = |n: u64| {
            let raw = RawRatio::new(big((p as u128 * n as u128) as i128 + 3), big((q as u128 * n as u128) as i128 + 1));
            raw.value()
        };
        let here = f(n);
        let next = f(n + 1);
        prop_assert!(here < next);
        prop_assert!(next < parent);
        prop_assert!(here > make_rational(3, 1).unwrap());
    }
}
