use std::collections::BTreeMap;
use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::WignerError;

/// A positive rational held as a prime-exponent map, `∏ pᵉ`.
///
/// This is the working representation for radicands: products and quotients
/// of factorials never get multiplied out before the square root is taken,
/// so splitting off the square part is pure exponent bookkeeping.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactoredPositive {
    exps: BTreeMap<u32, i32>,
}

impl FactoredPositive {
    /// The multiplicative unit (empty map).
    pub fn one() -> Self {
        FactoredPositive::default()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Exponent of `p` in the represented rational (0 if absent).
    pub fn exponent(&self, p: u32) -> i32 {
        self.exps.get(&p).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, i32)> + '_ {
        self.exps.iter().map(|(&p, &e)| (p, e))
    }

    fn bump(&mut self, p: u32, by: i32) {
        let e = self.exps.entry(p).or_insert(0);
        *e += by;
        if *e == 0 {
            self.exps.remove(&p);
        }
    }

    /// Multiplies `other^power` into `self`.
    pub fn mul_pow(&mut self, other: &FactoredPositive, power: i32) {
        for (p, e) in other.iter() {
            self.bump(p, e * power);
        }
    }

    /// Multiplies `n!^power` into `self`.
    pub fn mul_factorial(&mut self, n: u32, power: i32) {
        self.mul_pow(&factorial_factored(n), power);
    }

    /// Factors a positive rational by trial division. Intended for modest
    /// inputs (parsers, tests); the factorial paths never go through here.
    pub fn from_rational(r: &BigRational) -> Result<Self, WignerError> {
        if !r.is_positive() {
            return Err(WignerError::NonPositiveRadicand(r.to_string()));
        }
        let mut out = FactoredPositive::one();
        out.absorb_int(r.numer().magnitude(), 1)?;
        out.absorb_int(r.denom().magnitude(), -1)?;
        Ok(out)
    }

    fn absorb_int(&mut self, n: &BigUint, sign: i32) -> Result<(), WignerError> {
        let mut m: u128 = n
            .try_into()
            .map_err(|_| WignerError::RadicandTooLarge(n.to_string()))?;
        let mut d: u128 = 2;
        while d * d <= m {
            while m.is_multiple_of(d) {
                self.bump(d as u32, sign);
                m /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if m > 1 {
            let p = u32::try_from(m).map_err(|_| WignerError::RadicandTooLarge(m.to_string()))?;
            self.bump(p, sign);
        }
        Ok(())
    }

    /// Multiplies the map back out.
    pub fn to_rational(&self) -> BigRational {
        let mut numer = BigUint::one();
        let mut denom = BigUint::one();
        for (p, e) in self.iter() {
            let pw = BigUint::from(p).pow(e.unsigned_abs());
            if e > 0 {
                numer *= pw;
            } else {
                denom *= pw;
            }
        }
        BigRational::new_raw(BigInt::from(numer), BigInt::from(denom))
    }

    /// Splits the represented rational `q` into `(outside, inside)` with
    /// `outside² · inside = q` and every prime exponent of `inside` in
    /// `{-1, 0, 1}`. Primes with odd positive exponent land in the numerator
    /// of `inside`, primes with odd negative exponent in its denominator, so
    /// a value like 7/3 splits as `(1, 7/3)` rather than `(1/3, 21)`.
    pub fn sqrt_split(&self) -> (BigRational, BigRational) {
        let mut out_n = BigUint::one();
        let mut out_d = BigUint::one();
        let mut in_n = BigUint::one();
        let mut in_d = BigUint::one();
        for (p, e) in self.iter() {
            let half = e / 2;
            let rem = e % 2;
            if half != 0 {
                let pw = BigUint::from(p).pow(half.unsigned_abs());
                if half > 0 {
                    out_n *= &pw;
                } else {
                    out_d *= &pw;
                }
            }
            match rem {
                1 => in_n *= BigUint::from(p),
                -1 => in_d *= BigUint::from(p),
                _ => {}
            }
        }
        (
            BigRational::new_raw(BigInt::from(out_n), BigInt::from(out_d)),
            BigRational::new_raw(BigInt::from(in_n), BigInt::from(in_d)),
        )
    }
}

static FACTORIAL_FACTORED: LazyLock<RwLock<Vec<Arc<FactoredPositive>>>> =
    LazyLock::new(|| RwLock::new(Vec::new()));

static FACTORIAL_INT: LazyLock<RwLock<Vec<Arc<BigInt>>>> = LazyLock::new(|| RwLock::new(Vec::new()));

/// Prime factorization of `n!`, with the exponent of each prime `p` obtained
/// by summing `⌊n/pⁱ⌋` over `i ≥ 1`. Results are cached for the lifetime of
/// the process; the cache supports concurrent reads and serialized growth.
pub fn factorial_factored(n: u32) -> Arc<FactoredPositive> {
    if let Some(f) = FACTORIAL_FACTORED.read().unwrap().get(n as usize) {
        return f.clone();
    }
    let mut cache = FACTORIAL_FACTORED.write().unwrap();
    while cache.len() <= n as usize {
        let m = cache.len() as u32;
        cache.push(Arc::new(factorial_direct(m)));
    }
    cache[n as usize].clone()
}

fn factorial_direct(n: u32) -> FactoredPositive {
    let mut out = FactoredPositive::one();
    for p in primes_up_to(n) {
        let mut e: i32 = 0;
        let mut q = n / p;
        while q > 0 {
            e += q as i32;
            q /= p;
        }
        if e > 0 {
            out.exps.insert(p, e);
        }
    }
    out
}

fn primes_up_to(n: u32) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &is_p)| is_p.then_some(i as u32))
        .collect()
}

/// `n!` as a big integer, cached like [`factorial_factored`]. Used for the
/// purely rational alternating sums, which are never square-rooted.
pub fn factorial_int(n: u32) -> Arc<BigInt> {
    if let Some(f) = FACTORIAL_INT.read().unwrap().get(n as usize) {
        return f.clone();
    }
    let mut cache = FACTORIAL_INT.write().unwrap();
    if cache.is_empty() {
        cache.push(Arc::new(BigInt::one()));
    }
    while cache.len() <= n as usize {
        let m = cache.len();
        let next = cache[m - 1].as_ref() * BigInt::from(m);
        cache.push(Arc::new(next));
    }
    cache[n as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{ToPrimitive, Zero};

    fn fact_u64(n: u32) -> u64 {
        (1..=n as u64).product::<u64>().max(1)
    }

    #[test]
    fn factorial_zero_is_empty_map() {
        assert!(factorial_factored(0).is_one());
        assert!(factorial_factored(1).is_one());
    }

    #[test]
    fn factorial_four() {
        let f = factorial_factored(4);
        assert_eq!(f.exponent(2), 3);
        assert_eq!(f.exponent(3), 1);
        assert_eq!(f.iter().count(), 2);
    }

    #[test]
    fn factorial_ten_matches_trial_division() {
        // independent route: multiply 1..=10 and factor the product directly
        let oracle = FactoredPositive::from_rational(&BigRational::from_integer(
            BigInt::from(fact_u64(10)),
        ))
        .unwrap();
        let f = factorial_factored(10);
        assert_eq!(*f, oracle);
        assert_eq!(f.exponent(2), 8);
        assert_eq!(f.exponent(3), 4);
        assert_eq!(f.exponent(5), 2);
        assert_eq!(f.exponent(7), 1);
    }

    #[test]
    fn factorial_int_matches() {
        for n in 0..=20u32 {
            assert_eq!(factorial_int(n).to_u64().unwrap(), fact_u64(n));
        }
    }

    #[test]
    fn sqrt_split_twelve() {
        // 12 = 2^2 * 3 -> (2, 3)
        let mut f = FactoredPositive::one();
        f.bump(2, 2);
        f.bump(3, 1);
        let (out, inside) = f.sqrt_split();
        assert_eq!(out, BigRational::from_integer(BigInt::from(2)));
        assert_eq!(inside, BigRational::from_integer(BigInt::from(3)));
    }

    #[test]
    fn sqrt_split_already_square_free() {
        // 7/3 -> (1, 7/3)
        let mut f = FactoredPositive::one();
        f.bump(7, 1);
        f.bump(3, -1);
        let (out, inside) = f.sqrt_split();
        assert!(out.is_one());
        assert_eq!(inside, BigRational::new(BigInt::from(7), BigInt::from(3)));
    }

    #[test]
    fn sqrt_split_recomposes_factorial_ratios() {
        // delta-style radicands: a! b! c! / d!
        for (a, b, c, d) in [(3, 3, 0, 7), (2, 0, 2, 5), (6, 4, 2, 13), (1, 1, 1, 4)] {
            let mut f = FactoredPositive::one();
            f.mul_factorial(a, 1);
            f.mul_factorial(b, 1);
            f.mul_factorial(c, 1);
            f.mul_factorial(d, -1);
            let (out, inside) = f.sqrt_split();
            assert_eq!(&out * &out * &inside, f.to_rational());
            // inside must be square-free componentwise
            let g = FactoredPositive::from_rational(&inside).unwrap();
            assert!(g.iter().all(|(_, e)| e.abs() == 1));
        }
    }

    #[test]
    fn from_rational_rejects_nonpositive() {
        assert!(FactoredPositive::from_rational(&BigRational::zero()).is_err());
        assert!(
            FactoredPositive::from_rational(&BigRational::from_integer(BigInt::from(-3))).is_err()
        );
    }

    #[test]
    fn from_rational_roundtrip() {
        let r = BigRational::new(BigInt::from(360), BigInt::from(77));
        let f = FactoredPositive::from_rational(&r).unwrap();
        assert_eq!(f.to_rational(), r);
    }
}
