use super::{check_nonneg, couple_range, h, intersect, phase_doubled, tri_ok_t, wigner_6j, FieldSum};
use crate::error::WignerError;
use crate::halfint::HalfInt;
use crate::surd::Surd;

/// The 12-j symbol of the first kind,
///
/// ```text
/// ⎧j1    j2    j3    j4⎫
/// ⎨   l1    l2    l3    l4⎬
/// ⎩k1    k2    k3    k4⎭
/// ```
///
/// summed as `Σ_x (2x+1)(-1)^(R-x)` times four 6-j factors, where `R` is the
/// sum of all twelve momenta. The x range is the intersection of the
/// coupling ranges of the `(jᵢ, kᵢ)` pairs.
pub fn wigner_12j_first(
    j: [HalfInt; 4],
    l: [HalfInt; 4],
    k: [HalfInt; 4],
) -> Result<Surd, WignerError> {
    check_nonneg(&j)?;
    check_nonneg(&l)?;
    check_nonneg(&k)?;
    let tj: [i32; 4] = j.map(|a| a.twice());
    let tl: [i32; 4] = l.map(|a| a.twice());
    let tk: [i32; 4] = k.map(|a| a.twice());

    for i in 0..3 {
        if !tri_ok_t(tj[i], tj[i + 1], tl[i]) || !tri_ok_t(tk[i + 1], tk[i], tl[i]) {
            return Ok(Surd::zero());
        }
    }
    if !tri_ok_t(tj[3], tk[0], tl[3]) || !tri_ok_t(tj[0], tk[3], tl[3]) {
        return Ok(Surd::zero());
    }

    let mut range = couple_range(tj[0], tk[0]);
    for i in 1..4 {
        range = intersect(range, couple_range(tj[i], tk[i]));
    }
    let twice_r: i32 = tj.iter().chain(&tl).chain(&tk).sum();

    let mut acc = FieldSum::new();
    let (lo, hi) = range;
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let mut term = wigner_6j(j[3], k[3], x, j[0], k[0], l[3])?;
        for i in 0..3 {
            term = &term * &wigner_6j(j[i], k[i], x, k[i + 1], j[i + 1], l[i])?;
        }
        let sign = phase_doubled(twice_r - tx)?;
        acc.add(term.scale_int(sign * (tx as i64 + 1)));
        tx += 2;
    }
    acc.finish()
}

/// The 12-j symbol of the second kind,
///
/// ```text
/// ⎡j1 j2 j3 j4⎤
/// ⎢l1 l2 l3 l4⎥
/// ⎣k1 k2 k3 k4⎦
/// ```
///
/// a phase `(-1)^(l1-l2-l3+l4)` times a sum over four 6-j factors that pair
/// `(k1,k2)` and `(k3,k4)` against `(j3,j1)` and `(j4,j2)`.
pub fn wigner_12j_second(
    j: [HalfInt; 4],
    l: [HalfInt; 4],
    k: [HalfInt; 4],
) -> Result<Surd, WignerError> {
    check_nonneg(&j)?;
    check_nonneg(&l)?;
    check_nonneg(&k)?;
    let tj: [i32; 4] = j.map(|a| a.twice());
    let tl: [i32; 4] = l.map(|a| a.twice());
    let tk: [i32; 4] = k.map(|a| a.twice());

    for (a, b, c) in [
        (tk[0], tj[0], tl[0]),
        (tj[2], tk[1], tl[0]),
        (tk[2], tj[0], tl[1]),
        (tj[2], tk[3], tl[1]),
        (tk[0], tj[1], tl[2]),
        (tj[3], tk[1], tl[2]),
        (tk[2], tj[1], tl[3]),
        (tj[3], tk[3], tl[3]),
    ] {
        if !tri_ok_t(a, b, c) {
            return Ok(Surd::zero());
        }
    }

    let range = intersect(
        intersect(couple_range(tk[0], tk[1]), couple_range(tk[2], tk[3])),
        intersect(couple_range(tj[2], tj[0]), couple_range(tj[3], tj[1])),
    );
    let prefactor = phase_doubled(tl[0] - tl[1] - tl[2] + tl[3])?;

    let mut acc = FieldSum::new();
    let (lo, hi) = range;
    let mut tx = lo;
    while tx <= hi {
        let x = h(tx);
        let f1 = wigner_6j(k[0], k[1], x, j[2], j[0], l[0])?;
        let f2 = wigner_6j(k[2], k[3], x, j[2], j[0], l[1])?;
        let f3 = wigner_6j(k[0], k[1], x, j[3], j[1], l[2])?;
        let f4 = wigner_6j(k[2], k[3], x, j[3], j[1], l[3])?;
        acc.add((&(&f1 * &f2) * &(&f3 * &f4)).scale_int(tx as i64 + 1));
        tx += 2;
    }
    Ok(acc.finish()?.scale_int(prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surd::SurdVec;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn hi4(v: [i32; 4]) -> [HalfInt; 4] {
        v.map(HalfInt::from_int)
    }

    fn ht4(v: [i32; 4]) -> [HalfInt; 4] {
        v.map(HalfInt::from_twice)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// Brute-force route for the first kind: same series, but x swept far
    /// beyond the tight bounds.
    fn twelvej_first_wide(j: [HalfInt; 4], l: [HalfInt; 4], k: [HalfInt; 4]) -> Surd {
        let twice_r: i32 = j
            .iter()
            .chain(&l)
            .chain(&k)
            .map(|a| a.twice())
            .sum();
        let mut acc = SurdVec::zero();
        for tx in 0..=(twice_r + 10) {
            let x = HalfInt::from_twice(tx);
            let mut term = wigner_6j(j[3], k[3], x, j[0], k[0], l[3]).unwrap();
            for i in 0..3 {
                term = &term * &wigner_6j(j[i], k[i], x, k[i + 1], j[i + 1], l[i]).unwrap();
            }
            if term.is_zero() {
                continue;
            }
            let sign = if (twice_r - tx).rem_euclid(4) == 0 { 1 } else { -1 };
            acc.push(term.scale_int(sign * (tx as i64 + 1)));
        }
        acc.into_surd().expect("single field")
    }

    #[test]
    fn first_kind_reference_row() {
        let v = wigner_12j_first(hi4([0, 1, 1, 1]), hi4([1, 1, 0, 1]), hi4([1, 1, 1, 1])).unwrap();
        assert_eq!(v, Surd::from_rational(rat(1, 54)));
    }

    #[test]
    fn first_kind_irrational_row() {
        let v = wigner_12j_first(hi4([1, 1, 2, 2]), hi4([2, 2, 2, 1]), hi4([1, 2, 1, 2])).unwrap();
        assert_eq!(v.format_exact(), "-7/3000*(7/3)^(1/2)");
    }

    #[test]
    fn first_kind_matches_wide_sum() {
        for (j, l, k) in [
            (hi4([0, 1, 1, 1]), hi4([1, 1, 0, 1]), hi4([1, 1, 1, 1])),
            (hi4([1, 1, 2, 2]), hi4([2, 2, 2, 1]), hi4([1, 2, 1, 2])),
            (ht4([1, 2, 3, 2]), ht4([3, 3, 3, 3]), ht4([2, 1, 2, 3])),
        ] {
            assert_eq!(wigner_12j_first(j, l, k).unwrap(), twelvej_first_wide(j, l, k));
        }
    }

    #[test]
    fn second_kind_reference_row() {
        let v = wigner_12j_second(hi4([6, 4, 7, 4]), hi4([6, 7, 4, 4]), hi4([2, 5, 7, 1])).unwrap();
        assert_eq!(v.format_exact(), "-28/23595*(1/195)^(1/2)");
    }

    #[test]
    fn second_kind_half_integer_row() {
        let j = ht4([11, 9, 13, 7]);
        let l = hi4([6, 6, 5, 3]);
        let k = ht4([3, 9, 13, 1]);
        let v = wigner_12j_second(j, l, k).unwrap();
        assert_eq!(v.format_exact(), "1/572572*(57)^(1/2)");
    }

    #[test]
    fn broken_triangle_is_zero() {
        // j1 bumped far out of range
        let v =
            wigner_12j_first(hi4([16, 1, 1, 1]), hi4([1, 1, 0, 1]), hi4([1, 1, 1, 1])).unwrap();
        assert!(v.is_zero());
        let v =
            wigner_12j_second(hi4([20, 4, 7, 4]), hi4([6, 7, 4, 4]), hi4([2, 5, 7, 1])).unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn negative_momentum_is_an_error() {
        let mut j = hi4([0, 1, 1, 1]);
        j[2] = HalfInt::from_twice(-2);
        assert!(matches!(
            wigner_12j_first(j, hi4([1, 1, 0, 1]), hi4([1, 1, 1, 1])),
            Err(WignerError::NegativeMomentum(_))
        ));
    }
}
