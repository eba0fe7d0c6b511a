//! Property tests for the exact number system.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use wigner_exact::{FactoredPositive, Surd};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical surds with small coefficients and radicands built from a fixed
/// prime pool.
fn surd_strategy() -> impl Strategy<Value = Surd> {
    (
        -2000i64..=2000,
        1i64..=2000,
        proptest::collection::vec(0u8..3, 6),
    )
        .prop_map(|(numer, denom, placement)| {
            const PRIMES: [i64; 6] = [2, 3, 5, 7, 11, 13];
            let mut rad_n = 1i64;
            let mut rad_d = 1i64;
            for (p, side) in PRIMES.iter().zip(placement) {
                match side {
                    0 => rad_n *= p,
                    1 => rad_d *= p,
                    _ => {}
                }
            }
            Surd::new(rat(numer, denom), rat(rad_n, rad_d)).unwrap()
        })
}

proptest! {
    #[test]
    fn product_is_canonical_and_consistent(a in surd_strategy(), b in surd_strategy()) {
        let p = &a * &b;
        prop_assert!(p.is_canonical());
        prop_assert_eq!(p.square(), a.square() * b.square());
    }

    #[test]
    fn division_round_trips_exactly(a in surd_strategy(), b in surd_strategy()) {
        prop_assume!(!b.is_zero());
        let p = &a * &b;
        prop_assert_eq!(p.checked_div(&b).unwrap(), a.clone());
        let q = a.checked_div(&b).unwrap();
        prop_assert!(q.is_canonical());
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn self_division_is_one(a in surd_strategy()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(a.checked_div(&a).unwrap(), Surd::one());
    }

    #[test]
    fn addition_merges_and_subtraction_cancels(a in surd_strategy(), b in surd_strategy()) {
        let sum = &a + &b;
        prop_assert!(sum.len() <= 2);
        for t in sum.terms() {
            prop_assert!(t.is_canonical());
            prop_assert!(!t.is_zero());
        }
        // adding the negation of one operand recovers the other
        let back = &sum + &(-&b).clone();
        prop_assert_eq!(back.into_surd().ok(), Some(a));
    }

    #[test]
    fn zero_is_the_additive_identity(a in surd_strategy()) {
        let v = &a + &Surd::zero();
        prop_assert_eq!(v.into_surd().ok(), Some(a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn sqrt_split_recomposes(a in 0u32..=40, b in 0u32..=40, c in 0u32..=40) {
        // factorial-ratio radicands, the shape every symbol produces
        let mut f = FactoredPositive::one();
        f.mul_factorial(a, 1);
        f.mul_factorial(b, 1);
        f.mul_factorial(a + b, -1);
        f.mul_factorial(c, 1);
        let (outside, inside) = f.sqrt_split();
        prop_assert_eq!(&outside * &outside * &inside, f.to_rational());
        let sf = FactoredPositive::from_rational(&inside).unwrap();
        prop_assert!(sf.iter().all(|(_, e)| e.abs() == 1));
    }
}
