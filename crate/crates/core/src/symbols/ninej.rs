use super::{couple_range, h, intersect, tri_ok_t, wigner_6j, FieldSum};
use crate::error::WignerError;
use crate::halfint::HalfInt;
use crate::surd::Surd;

/// The 9-j symbol as a single sum of triple products of 6-j symbols with
/// weight `(2x+1)` and phase `(-1)^(2x)`. Arguments run row by row:
///
/// ```text
/// ⎧j1 j2 j3⎫      args = [j1, j2, j3, l1, l2, l3, k1, k2, k3]
/// ⎨l1 l2 l3⎬
/// ⎩k1 k2 k3⎭
/// ```
pub fn wigner_9j(args: [HalfInt; 9]) -> Result<Surd, WignerError> {
    super::check_nonneg(&args)?;
    let t: [i32; 9] = args.map(|a| a.twice());
    let [j1, j2, j3, l1, l2, l3, k1, k2, k3] = t;
    // row and column coupling
    for (a, b, c) in [
        (j1, j2, j3),
        (l1, l2, l3),
        (k1, k2, k3),
        (j1, l1, k1),
        (j2, l2, k2),
        (j3, l3, k3),
    ] {
        if !tri_ok_t(a, b, c) {
            return Ok(Surd::zero());
        }
    }
    let (lo, hi) = intersect(
        intersect(couple_range(j1, k3), couple_range(j2, l3)),
        couple_range(l1, k2),
    );
    let mut acc = FieldSum::new();
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let f1 = wigner_6j(h(j1), h(j2), h(j3), h(l3), h(k3), x)?;
        let f2 = wigner_6j(h(l1), h(l2), h(l3), h(j2), x, h(k2))?;
        let f3 = wigner_6j(h(k1), h(k2), h(k3), x, h(j1), h(l1))?;
        let weight = if tx % 2 == 0 {
            (tx + 1) as i64
        } else {
            -((tx + 1) as i64)
        };
        acc.add((&(&f1 * &f2) * &f3).scale_int(weight));
        tx += 2;
    }
    acc.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn hi9(v: [i32; 9]) -> [HalfInt; 9] {
        v.map(HalfInt::from_int)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Independent route: sum the defining series over a deliberately
    /// oversized index range so that the tight bounds in the implementation
    /// are checked against brute force.
    fn ninej_wide(args: [HalfInt; 9]) -> Surd {
        let t: [i32; 9] = args.map(|a| a.twice());
        let [j1, j2, j3, l1, l2, l3, k1, k2, k3] = t;
        let mut acc = crate::surd::SurdVec::zero();
        for tx in 0..=(t.iter().sum::<i32>() + 8) {
            let x = HalfInt::from_twice(tx);
            let f1 = wigner_6j(
                HalfInt::from_twice(j1),
                HalfInt::from_twice(j2),
                HalfInt::from_twice(j3),
                HalfInt::from_twice(l3),
                HalfInt::from_twice(k3),
                x,
            )
            .unwrap();
            let f2 = wigner_6j(
                HalfInt::from_twice(l1),
                HalfInt::from_twice(l2),
                HalfInt::from_twice(l3),
                HalfInt::from_twice(j2),
                x,
                HalfInt::from_twice(k2),
            )
            .unwrap();
            let f3 = wigner_6j(
                HalfInt::from_twice(k1),
                HalfInt::from_twice(k2),
                HalfInt::from_twice(k3),
                x,
                HalfInt::from_twice(j1),
                HalfInt::from_twice(l1),
            )
            .unwrap();
            let sign = if tx % 2 == 0 { 1 } else { -1 };
            acc.push((&(&f1 * &f2) * &f3).scale_int(sign * (tx as i64 + 1)));
        }
        acc.into_surd().expect("single field")
    }

    #[test]
    fn all_zero_arguments() {
        assert_eq!(wigner_9j(hi9([0; 9])).unwrap(), Surd::one());
    }

    #[test]
    fn reduction_with_zero_bottom_row() {
        // {1 1 0; 1 1 0; 0 0 0}: brute-force oracle fixes the value at 1/3
        let args = hi9([1, 1, 0, 1, 1, 0, 0, 0, 0]);
        let v = wigner_9j(args).unwrap();
        assert_eq!(v, ninej_wide(args));
        assert_eq!(v, Surd::from_rational(rat(1, 3)));
    }

    #[test]
    fn matches_wide_sum_on_generic_arguments() {
        for args in [
            hi9([1, 1, 2, 1, 2, 1, 2, 1, 1]),
            hi9([2, 2, 2, 2, 2, 2, 2, 2, 2]),
            hi9([1, 2, 3, 2, 2, 2, 3, 2, 1]),
        ] {
            assert_eq!(wigner_9j(args).unwrap(), ninej_wide(args), "{args:?}");
        }
        // half-integer mix
        let args = [3, 1, 2, 1, 3, 2, 2, 2, 0].map(HalfInt::from_twice);
        assert_eq!(wigner_9j(args).unwrap(), ninej_wide(args));
    }

    #[test]
    fn triangle_violations_are_zero() {
        // row (1,1,3) cannot couple
        let v = wigner_9j(hi9([1, 1, 3, 1, 1, 0, 0, 0, 0])).unwrap();
        assert!(v.is_zero());
        // column (1,1,3) cannot couple
        let v = wigner_9j(hi9([1, 1, 2, 1, 1, 2, 3, 1, 2])).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn known_value_with_half_integers() {
        // {1/2 1/2 1; 1/2 1/2 1; 1 1 0}: check against the wide sum
        let args = [1, 1, 2, 1, 1, 2, 2, 2, 0].map(HalfInt::from_twice);
        let v = wigner_9j(args).unwrap();
        assert_eq!(v, ninej_wide(args));
        assert!(!v.is_zero());
    }
}
