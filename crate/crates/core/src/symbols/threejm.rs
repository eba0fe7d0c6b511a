use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{phase_doubled, tri_ok_t};
use crate::error::WignerError;
use crate::factored::{factorial_int, FactoredPositive};
use crate::halfint::HalfInt;
use crate::surd::Surd;

/// The 3jm symbol
///
/// ```text
/// ⎛j1 j2 j3⎞
/// ⎝m1 m2 m3⎠
/// ```
///
/// Zero unless `m1+m2+m3 = 0`, every `|mᵢ| ≤ jᵢ` and `(j1,j2,j3)` couple.
/// Negative momenta and projections that do not differ from their momentum
/// by an integer are malformed inputs, not zeros.
pub fn wigner_3jm(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    m1: HalfInt,
    m2: HalfInt,
    m3: HalfInt,
) -> Result<Surd, WignerError> {
    for (j, m) in [(j1, m1), (j2, m2), (j3, m3)] {
        if j.is_negative() {
            return Err(WignerError::NegativeMomentum(j));
        }
        if (j.twice() + m.twice()) % 2 != 0 {
            return Err(WignerError::ProjectionMismatch { j, m });
        }
    }
    let (tj1, tj2, tj3) = (j1.twice(), j2.twice(), j3.twice());
    let (tm1, tm2, tm3) = (m1.twice(), m2.twice(), m3.twice());
    if tm1 + tm2 + tm3 != 0
        || tm1.abs() > tj1
        || tm2.abs() > tj2
        || tm3.abs() > tj3
        || !tri_ok_t(tj1, tj2, tj3)
    {
        return Ok(Surd::zero());
    }

    let mut rad = FactoredPositive::one();
    rad.mul_factorial(((tj3 + tj1 - tj2) / 2) as u32, 1);
    rad.mul_factorial(((tj3 - tj1 + tj2) / 2) as u32, 1);
    rad.mul_factorial(((tj1 + tj2 - tj3) / 2) as u32, 1);
    rad.mul_factorial(((tj1 + tj2 + tj3) / 2 + 1) as u32, -1);
    for tx in [
        tj3 + tm3,
        tj3 - tm3,
        tj1 - tm1,
        tj1 + tm1,
        tj2 - tm2,
        tj2 + tm2,
    ] {
        rad.mul_factorial((tx / 2) as u32, 1);
    }

    // every factorial argument below is nonnegative across the whole range
    let kmin = [0, tj2 - tj3 - tm1, tj1 - tj3 + tm2]
        .into_iter()
        .max()
        .unwrap()
        / 2;
    let kmax = [tj1 + tj2 - tj3, tj1 - tm1, tj2 + tm2]
        .into_iter()
        .min()
        .unwrap()
        / 2;
    if kmin > kmax {
        return Ok(Surd::zero());
    }
    let mut sum = BigRational::zero();
    for k in kmin..=kmax {
        let mut den = BigInt::from(1);
        for arg in [
            k,
            (tj1 + tj2 - tj3) / 2 - k,
            (tj1 - tm1) / 2 - k,
            (tj2 + tm2) / 2 - k,
            (tj3 - tj2 + tm1) / 2 + k,
            (tj3 - tj1 - tm2) / 2 + k,
        ] {
            den *= factorial_int(arg as u32).as_ref();
        }
        let num = BigInt::from(if k % 2 == 0 { 1 } else { -1 });
        sum += BigRational::new(num, den);
    }

    let phase = phase_doubled(tj1 - tj2 - tm3)?;
    let coeff = sum * BigRational::from_integer(BigInt::from(phase));
    Ok(Surd::sqrt_factored(&rad).scale(&coeff))
}
