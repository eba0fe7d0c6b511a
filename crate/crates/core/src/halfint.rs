use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use crate::error::WignerError;

/// An angular momentum or projection quantum number, stored as its doubled
/// value so that half-integers are exact.
///
/// `HalfInt::from_twice(7)` is 7/2; `HalfInt::from_int(4)` is 4.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// Builds a half-integer from its doubled value.
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt { twice }
    }

    /// Builds an integer-valued quantum number.
    pub const fn from_int(n: i32) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// The doubled value `2j`.
    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts integers (`"4"`), half-decimals (`"3.5"`, `"0.5"`, `"2.0"`) and
/// fractions (`"7/2"`), with an optional leading minus. Anything that is not
/// an exact multiple of 1/2 is rejected.
impl FromStr for HalfInt {
    type Err = WignerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || WignerError::ParseHalfInt(s.to_string());
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        if body.is_empty() {
            return Err(err());
        }
        let twice: i64 = if let Some((num, den)) = body.split_once('/') {
            let n: i64 = num.parse().map_err(|_| err())?;
            let d: i64 = den.parse().map_err(|_| err())?;
            if d <= 0 || n < 0 || (2 * n) % d != 0 {
                return Err(err());
            }
            2 * n / d
        } else if let Some((int, frac)) = body.split_once('.') {
            let i: i64 = int.parse().map_err(|_| err())?;
            if i < 0 {
                return Err(err());
            }
            match frac {
                "0" => 2 * i,
                "5" => 2 * i + 1,
                _ => return Err(err()),
            }
        } else {
            let i: i64 = body.parse().map_err(|_| err())?;
            if i < 0 {
                return Err(err());
            }
            2 * i
        };
        let twice = if neg { -twice } else { twice };
        i32::try_from(twice)
            .map(HalfInt::from_twice)
            .map_err(|_| err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_accepted_forms() {
        assert_eq!("3.5".parse::<HalfInt>().unwrap().twice(), 7);
        assert_eq!("0.5".parse::<HalfInt>().unwrap().twice(), 1);
        assert_eq!("7/2".parse::<HalfInt>().unwrap().twice(), 7);
        assert_eq!("20".parse::<HalfInt>().unwrap().twice(), 40);
        assert_eq!("2.0".parse::<HalfInt>().unwrap().twice(), 4);
        assert_eq!("4/2".parse::<HalfInt>().unwrap().twice(), 4);
        assert_eq!("-1".parse::<HalfInt>().unwrap().twice(), -2);
        assert_eq!("-0.5".parse::<HalfInt>().unwrap().twice(), -1);
        assert_eq!("-7/2".parse::<HalfInt>().unwrap().twice(), -7);
    }

    #[test]
    fn rejects_non_half_multiples() {
        for bad in ["3.2", "1/3", "", "-", "x", "1.25", "2/0", "3.50"] {
            assert!(
                bad.parse::<HalfInt>().is_err(),
                "{bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn display_roundtrips() {
        for twice in -9..=9 {
            let h = HalfInt::from_twice(twice);
            let back: HalfInt = h.to_string().parse().unwrap();
            assert_eq!(back, h);
        }
        assert_eq!(HalfInt::from_twice(7).to_string(), "7/2");
        assert_eq!(HalfInt::from_int(4).to_string(), "4");
        assert_eq!(HalfInt::from_twice(-7).to_string(), "-7/2");
    }

    #[test]
    fn arithmetic() {
        let a = HalfInt::from_twice(3);
        let b = HalfInt::from_twice(1);
        assert_eq!((a + b).twice(), 4);
        assert_eq!((a - b).twice(), 2);
        assert_eq!((-a).twice(), -3);
        assert!(!a.is_integer());
        assert!((a + b).is_integer());
    }
}
