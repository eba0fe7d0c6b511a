use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{check_nonneg, tri_ok_t};
use crate::error::WignerError;
use crate::factored::{factorial_int, FactoredPositive};
use crate::halfint::HalfInt;
use crate::surd::Surd;

/// True when `(a, b, c)` can couple: `|a-b| ≤ c ≤ a+b` with integer
/// perimeter.
pub fn triangle_ok(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    tri_ok_t(a.twice(), b.twice(), c.twice())
}

/// The triangular factor `√[(a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!]`.
///
/// Callers are expected to gate on [`triangle_ok`]; a violated triangle is
/// reported as an error rather than a zero.
pub fn delta(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<Surd, WignerError> {
    check_nonneg(&[a, b, c])?;
    if !triangle_ok(a, b, c) {
        return Err(WignerError::TriangleViolation { a, b, c });
    }
    let mut f = FactoredPositive::one();
    delta_squared(&mut f, a.twice(), b.twice(), c.twice());
    Ok(Surd::sqrt_factored(&f))
}

/// Multiplies the exact square of the triangular factor into `f`.
fn delta_squared(f: &mut FactoredPositive, ta: i32, tb: i32, tc: i32) {
    f.mul_factorial(((ta + tb - tc) / 2) as u32, 1);
    f.mul_factorial(((ta - tb + tc) / 2) as u32, 1);
    f.mul_factorial(((-ta + tb + tc) / 2) as u32, 1);
    f.mul_factorial(((ta + tb + tc) / 2 + 1) as u32, -1);
}

static SIXJ_MEMO: LazyLock<RwLock<HashMap<[i32; 6], Surd>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Number of distinct 6-j values currently memoized.
pub fn sixj_memo_len() -> usize {
    SIXJ_MEMO.read().unwrap().len()
}

/// The 6-j symbol
///
/// ```text
/// ⎧j1 j2 j3⎫
/// ⎩l1 l2 l3⎭
/// ```
///
/// as the product of four triangular factors with the alternating one-index
/// factorial sum. Values are memoized under the symmetry-reduced key (column
/// permutations and pairwise upper/lower flips), since the high-order
/// symbols re-evaluate heavily overlapping argument sets.
pub fn wigner_6j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    l1: HalfInt,
    l2: HalfInt,
    l3: HalfInt,
) -> Result<Surd, WignerError> {
    check_nonneg(&[j1, j2, j3, l1, l2, l3])?;
    let t = [
        j1.twice(),
        j2.twice(),
        j3.twice(),
        l1.twice(),
        l2.twice(),
        l3.twice(),
    ];
    if !tri_ok_t(t[0], t[1], t[2])
        || !tri_ok_t(t[0], t[4], t[5])
        || !tri_ok_t(t[3], t[1], t[5])
        || !tri_ok_t(t[3], t[4], t[2])
    {
        return Ok(Surd::zero());
    }
    let key = canonical_key(t);
    if let Some(v) = SIXJ_MEMO.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = sixj_raw(key);
    SIXJ_MEMO
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| value.clone());
    Ok(value)
}

/// Evaluates the defining sum with no memoization and no symmetry mapping.
/// The symmetry tests compare this path across all 24 images.
pub(crate) fn sixj_raw(t: [i32; 6]) -> Surd {
    let [tj1, tj2, tj3, tl1, tl2, tl3] = t;
    let mut rad = FactoredPositive::one();
    delta_squared(&mut rad, tj1, tj2, tj3);
    delta_squared(&mut rad, tj1, tl2, tl3);
    delta_squared(&mut rad, tl1, tj2, tl3);
    delta_squared(&mut rad, tl1, tl2, tj3);

    let triples = [
        (tj1 + tj2 + tj3) / 2,
        (tj1 + tl2 + tl3) / 2,
        (tl1 + tj2 + tl3) / 2,
        (tl1 + tl2 + tj3) / 2,
    ];
    let pairs = [
        (tj1 + tj2 + tl1 + tl2) / 2,
        (tj1 + tj3 + tl1 + tl3) / 2,
        (tj2 + tj3 + tl2 + tl3) / 2,
    ];
    let zmin = *triples.iter().max().unwrap();
    let zmax = *pairs.iter().min().unwrap();
    if zmin > zmax {
        return Surd::zero();
    }

    let mut sum = BigRational::zero();
    for z in zmin..=zmax {
        let mut den = BigInt::from(1);
        for t in triples {
            den *= factorial_int((z - t) as u32).as_ref();
        }
        for p in pairs {
            den *= factorial_int((p - z) as u32).as_ref();
        }
        let mut num: BigInt = factorial_int(z as u32 + 1).as_ref().clone();
        if z % 2 != 0 {
            num = -num;
        }
        sum += BigRational::new(num, den);
    }

    Surd::sqrt_factored(&rad).scale(&sum)
}

/// Lexicographic minimum over the classical symmetry group of the 6-j
/// symbol: 6 column orders × 4 patterns of flipping the upper and lower
/// entries in two columns.
fn canonical_key(t: [i32; 6]) -> [i32; 6] {
    let cols = [(t[0], t[3]), (t[1], t[4]), (t[2], t[5])];
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    const FLIPS: [[bool; 3]; 4] = [
        [false, false, false],
        [true, true, false],
        [true, false, true],
        [false, true, true],
    ];
    let mut best: Option<[i32; 6]> = None;
    for perm in PERMS {
        for flips in FLIPS {
            let mut cand = [0i32; 6];
            for (slot, (&src, &flip)) in perm.iter().zip(flips.iter()).enumerate() {
                let (top, bottom) = cols[src];
                let (top, bottom) = if flip { (bottom, top) } else { (top, bottom) };
                cand[slot] = top;
                cand[slot + 3] = bottom;
            }
            if best.is_none() || cand < best.unwrap() {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::ratio_string;
    use num_rational::BigRational;

    fn hi(n: i32) -> HalfInt {
        HalfInt::from_int(n)
    }

    fn ht(t: i32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn triangle_cases() {
        assert!(triangle_ok(hi(1), hi(1), hi(2)));
        assert!(!triangle_ok(hi(1), hi(1), hi(3)));
        assert!(!triangle_ok(ht(1), ht(1), ht(1)));
        assert!(triangle_ok(ht(1), ht(1), hi(1)));
        assert!(triangle_ok(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO));
    }

    #[test]
    fn delta_values() {
        assert_eq!(
            delta(HalfInt::ZERO, HalfInt::ZERO, HalfInt::ZERO).unwrap(),
            Surd::one()
        );
        let d111 = delta(hi(1), hi(1), hi(1)).unwrap();
        assert_eq!(d111.square(), rat(1, 24));
        let d112 = delta(hi(1), hi(1), hi(2)).unwrap();
        assert_eq!(d112.square(), rat(1, 30));
        assert!(d111.is_canonical() && d112.is_canonical());
    }

    #[test]
    fn delta_rejects_bad_input() {
        assert!(matches!(
            delta(hi(1), hi(1), hi(3)),
            Err(WignerError::TriangleViolation { .. })
        ));
        assert!(matches!(
            delta(HalfInt::from_twice(-2), hi(1), hi(1)),
            Err(WignerError::NegativeMomentum(_))
        ));
    }

    #[test]
    fn known_sixj_values() {
        // {0 1 1; 1 1 1} = -1/3 and {1 1 1; 1 1 1} = 1/6
        let a = wigner_6j(hi(0), hi(1), hi(1), hi(1), hi(1), hi(1)).unwrap();
        assert_eq!(a, Surd::from_rational(rat(-1, 3)));
        let b = wigner_6j(hi(1), hi(1), hi(1), hi(1), hi(1), hi(1)).unwrap();
        assert_eq!(b, Surd::from_rational(rat(1, 6)));
        // {1 1 0; 1 1 0} = 1/3
        let c = wigner_6j(hi(1), hi(1), hi(0), hi(1), hi(1), hi(0)).unwrap();
        assert_eq!(c, Surd::from_rational(rat(1, 3)));
    }

    #[test]
    fn triangle_violation_is_zero() {
        let v = wigner_6j(hi(1), hi(1), hi(3), hi(1), hi(1), hi(1)).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn half_integer_arguments() {
        // {1/2 1/2 1; 1/2 1/2 1} = 1/6, {1/2 1/2 0; 1/2 1/2 1} = 1/2
        let a = wigner_6j(ht(1), ht(1), hi(1), ht(1), ht(1), hi(1)).unwrap();
        assert_eq!(a, Surd::from_rational(rat(1, 6)));
        let b = wigner_6j(ht(1), ht(1), hi(0), ht(1), ht(1), hi(1)).unwrap();
        assert_eq!(b, Surd::from_rational(rat(1, 2)));
    }

    #[test]
    fn raw_path_symmetry_sample() {
        // uncached, unmapped evaluations must agree across the symmetry
        // group: column permutations and upper/lower flips of two columns
        let t = [2, 4, 6, 6, 4, 4];
        let base = sixj_raw(t);
        assert!(!base.is_zero());
        let images = [
            [4, 6, 2, 4, 4, 6], // columns rotated left
            [6, 4, 2, 4, 4, 6], // columns 1 and 3 swapped
            [6, 4, 4, 2, 4, 6], // flip columns 1 and 3
            [2, 4, 4, 6, 4, 6], // flip columns 2 and 3
        ];
        for im in images {
            assert_eq!(sixj_raw(im), base, "image {im:?}");
        }
    }

    #[test]
    fn canonical_key_is_symmetry_invariant() {
        let t = [4, 6, 2, 2, 4, 4];
        let key = canonical_key(t);
        // column swap and double flip preserve the key
        assert_eq!(canonical_key([6, 4, 2, 4, 2, 4]), key);
        assert_eq!(canonical_key([2, 4, 2, 4, 6, 4]), key);
    }

    #[test]
    fn memo_serves_consistent_values() {
        let v1 = wigner_6j(hi(2), hi(3), hi(1), hi(2), hi(1), hi(3)).unwrap();
        // a symmetric image goes through the same memo slot
        let v2 = wigner_6j(hi(3), hi(2), hi(1), hi(1), hi(2), hi(3)).unwrap();
        assert_eq!(v1, v2);
        assert!(sixj_memo_len() > 0);
        assert_eq!(ratio_string(&v1.square()), v1.square().to_string());
    }
}
