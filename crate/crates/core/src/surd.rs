use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::WignerError;
use crate::factored::FactoredPositive;

/// An exact value `coeff · √radicand` with a rational coefficient and a
/// positive rational radicand whose numerator and denominator are both
/// square-free.
///
/// The representation is canonical, so `==` is value equality:
///
/// * `radicand` is positive, in lowest terms, componentwise square-free;
/// * the radicand numerator is coprime to the coefficient denominator and
///   the radicand denominator is coprime to the coefficient numerator
///   (otherwise e.g. `1/5·√10` and `1·√(2/5)` would both denote the same
///   number);
/// * zero is uniquely `(0, 1)`, and any purely rational value has
///   `radicand = 1`.
///
/// Multiplication and division are closed. Addition stays closed as long as
/// both operands lie in the same quadratic field; otherwise it falls back to
/// a [`SurdVec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    coeff: BigRational,
    radicand: BigRational,
}

/// Canonicalizes `coeff·√radicand` where `radicand` is already positive, in
/// lowest terms and componentwise square-free. Moves shared primes across
/// the coefficient/radicand boundary and pins the unique zero.
fn canonical(coeff: BigRational, radicand: BigRational) -> Surd {
    if coeff.is_zero() {
        return Surd {
            coeff,
            radicand: BigRational::one(),
        };
    }
    let mut coeff = coeff;
    let (mut rn, mut rd) = (radicand.numer().clone(), radicand.denom().clone());
    // p | rn and p | cd: rewrite √p/p^k as p/p^k · √(1/p); reducing the
    // coefficient right away keeps the moved prime out of its numerator
    let g = rn.gcd(coeff.denom());
    if !g.is_one() {
        coeff = BigRational::new(coeff.numer() * &g, coeff.denom().clone());
        rn /= &g;
        rd *= &g;
    }
    // p | rd and p | cn: symmetric move
    let g = rd.gcd(coeff.numer());
    if !g.is_one() {
        coeff = BigRational::new(coeff.numer().clone(), coeff.denom() * &g);
        rd /= &g;
        rn *= &g;
    }
    Surd {
        coeff,
        radicand: BigRational::new(rn, rd),
    }
}

impl Surd {
    pub fn zero() -> Self {
        Surd {
            coeff: BigRational::zero(),
            radicand: BigRational::one(),
        }
    }

    pub fn one() -> Self {
        Surd::from_integer(1)
    }

    pub fn from_rational(coeff: BigRational) -> Self {
        canonical(coeff, BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Surd::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `coeff · √radicand` from an arbitrary positive radicand,
    /// factoring it by trial division to reach canonical form.
    pub fn new(coeff: BigRational, radicand: BigRational) -> Result<Self, WignerError> {
        if coeff.is_zero() {
            return Ok(Surd::zero());
        }
        let f = FactoredPositive::from_rational(&radicand)?;
        let (outside, inside) = f.sqrt_split();
        Ok(canonical(coeff * outside, inside))
    }

    /// `√r` for a nonnegative rational `r`.
    pub fn sqrt_rational(r: &BigRational) -> Result<Self, WignerError> {
        if r.is_zero() {
            return Ok(Surd::zero());
        }
        Surd::new(BigRational::one(), r.clone())
    }

    /// Builds `√q` straight from a factored rational, with no big-integer
    /// factoring involved.
    pub fn sqrt_factored(q: &FactoredPositive) -> Self {
        let (outside, inside) = q.sqrt_split();
        canonical(outside, inside)
    }

    pub fn coeff(&self) -> &BigRational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True when the value is rational (radicand 1, including zero).
    pub fn is_rational(&self) -> bool {
        self.radicand.is_one()
    }

    /// The exact square `coeff² · radicand`, always rational.
    pub fn square(&self) -> BigRational {
        &self.coeff * &self.coeff * &self.radicand
    }

    /// Checks every canonical-form invariant. Meant for tests.
    pub fn is_canonical(&self) -> bool {
        if self.coeff.is_zero() {
            return self.radicand.is_one();
        }
        if !self.radicand.is_positive() {
            return false;
        }
        let rn = self.radicand.numer();
        let rd = self.radicand.denom();
        if !rn.gcd(rd).is_one() {
            return false;
        }
        let sf = |n: &BigInt| match FactoredPositive::from_rational(&BigRational::from_integer(
            n.clone(),
        )) {
            Ok(f) => f.iter().all(|(_, e)| e.abs() == 1),
            Err(_) => false,
        };
        if !rn.is_one() && !sf(rn) {
            return false;
        }
        if !rd.is_one() && !sf(rd) {
            return false;
        }
        rn.gcd(self.coeff.denom()).is_one() && rd.gcd(self.coeff.numer()).is_one()
    }

    /// Scales by a rational factor.
    pub fn scale(&self, q: &BigRational) -> Surd {
        if q.is_zero() || self.is_zero() {
            return Surd::zero();
        }
        canonical(&self.coeff * q, self.radicand.clone())
    }

    pub fn scale_int(&self, n: i64) -> Surd {
        self.scale(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact reciprocal; errors on zero.
    pub fn recip(&self) -> Result<Surd, WignerError> {
        if self.is_zero() {
            return Err(WignerError::DivisionByZero);
        }
        // 1/(c·√(n/d)) = (1/c)·√(d/n); coprimality carries over unchanged
        let coeff = self.coeff.recip();
        let radicand = self.radicand.recip();
        Ok(canonical(coeff, radicand))
    }

    /// Exact quotient; errors on a zero divisor.
    pub fn checked_div(&self, rhs: &Surd) -> Result<Surd, WignerError> {
        Ok(self * &rhs.recip()?)
    }

    /// The square-free positive integer identifying the quadratic field the
    /// value lives in (numerator × denominator of the radicand; 1 for
    /// rationals).
    pub fn field_kernel(&self) -> BigInt {
        self.radicand.numer() * self.radicand.denom()
    }

    /// Approximate value; fine for diagnostics, not used by exact paths.
    pub fn to_f64(&self) -> f64 {
        let c = self.coeff.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN);
        c * r.sqrt()
    }

    /// Decimal approximation with the requested number of significant
    /// digits, computed from an integer square root carrying six guard
    /// digits and then rounded. Values below 1e-4 in magnitude print in
    /// scientific notation, mirroring the exact-value tables this library is
    /// checked against; trailing zeros are stripped.
    pub fn to_decimal(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let square = self.square();
        let e2 = floor_log10(&square);
        let mut e = e2.div_euclid(2);
        const GUARD: usize = 6;
        let t = digits as i64 - 1 - e + GUARD as i64;
        let numer = square.numer().magnitude().clone();
        let denom = square.denom().magnitude().clone();
        let (a, b) = if t >= 0 {
            (numer * pow10(2 * t as u64), denom)
        } else {
            (numer, denom * pow10(2 * (-t) as u64))
        };
        let root = (a * &b).sqrt();
        let scale = b * pow10(GUARD as u64);
        // round half up: m = floor((2·root + scale) / (2·scale))
        let mut m = (root * 2u32 + &scale) / (scale * 2u32);
        if m == pow10(digits as u64) {
            m = pow10(digits as u64 - 1);
            e += 1;
        }
        let sign = if self.coeff.is_negative() { "-" } else { "" };
        format!("{sign}{}", render_digits(&m.to_string(), e))
    }

    /// The exact-representation string: `p` or `p/q` for rational values,
    /// `p/q*(r/s)^(1/2)` otherwise (with `(r)^(1/2)` for integer radicands),
    /// and `0` for zero.
    pub fn format_exact(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let coeff = ratio_string(&self.coeff);
        if self.radicand.is_one() {
            coeff
        } else {
            format!("{coeff}*({})^(1/2)", ratio_string(&self.radicand))
        }
    }
}

/// Plain rational rendering: `p` when the denominator is 1, else `p/q`.
pub fn ratio_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pow10(e: u64) -> BigUint {
    BigUint::from(10u32).pow(e as u32)
}

/// Largest `k` with `10^k ≤ r`, for positive rational `r`.
fn floor_log10(r: &BigRational) -> i64 {
    debug_assert!(r.is_positive());
    let nb = r.numer().magnitude().bits() as i64;
    let db = r.denom().magnitude().bits() as i64;
    let mut e = ((nb - db) as f64 * std::f64::consts::LOG10_2) as i64 - 1;
    while cmp_pow10(r, e + 1) != Ordering::Less {
        e += 1;
    }
    while cmp_pow10(r, e) == Ordering::Less {
        e -= 1;
    }
    e
}

fn cmp_pow10(r: &BigRational, k: i64) -> Ordering {
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    if k >= 0 {
        n.cmp(&(d * pow10(k as u64)))
    } else {
        (n * pow10((-k) as u64)).cmp(d)
    }
}

/// Lays out `digits` (the rounded significand) around decimal exponent `e`.
fn render_digits(digits: &str, e: i64) -> String {
    let stripped = digits.trim_end_matches('0');
    if e < -4 {
        let mantissa = if stripped.len() <= 1 {
            stripped.to_string()
        } else {
            format!("{}.{}", &stripped[..1], &stripped[1..])
        };
        let sign = if e < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", e.abs())
    } else if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), stripped)
    } else if (e as usize) < digits.len() - 1 {
        let split = e as usize + 1;
        let frac = digits[split..].trim_end_matches('0');
        if frac.is_empty() {
            digits[..split].to_string()
        } else {
            format!("{}.{}", &digits[..split], frac)
        }
    } else {
        format!("{}{}", digits, "0".repeat(e as usize + 1 - digits.len()))
    }
}

impl Default for Surd {
    fn default() -> Self {
        Surd::zero()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_exact())
    }
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, rhs: &Surd) -> Surd {
        if self.is_zero() || rhs.is_zero() {
            return Surd::zero();
        }
        let (an, ad) = (self.radicand.numer(), self.radicand.denom());
        let (bn, bd) = (rhs.radicand.numer(), rhs.radicand.denom());
        // both inputs are square-free componentwise, so shared primes pair
        // into full squares and the leftovers stay square-free
        let gn = an.gcd(bn);
        let gd = ad.gcd(bd);
        let num = (an / &gn) * (bn / &gn);
        let den = (ad / &gd) * (bd / &gd);
        let cross = num.gcd(&den);
        let radicand = BigRational::new_raw(num / &cross, den / cross);
        let coeff = &self.coeff * &rhs.coeff * BigRational::new(gn, gd);
        canonical(coeff, radicand)
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, rhs: Surd) -> Surd {
        (&self).mul(&rhs)
    }
}

impl Div for &Surd {
    type Output = Surd;
    /// Panics on a zero divisor; use [`Surd::checked_div`] to get an error.
    fn div(self, rhs: &Surd) -> Surd {
        self.checked_div(rhs).expect("surd division by zero")
    }
}

impl Div for Surd {
    type Output = Surd;
    fn div(self, rhs: Surd) -> Surd {
        (&self).div(&rhs)
    }
}

impl Neg for &Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            coeff: -self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd {
            coeff: -self.coeff,
            radicand: self.radicand,
        }
    }
}

impl Add for &Surd {
    type Output = SurdVec;
    fn add(self, rhs: &Surd) -> SurdVec {
        let mut v = SurdVec::zero();
        v.push(self.clone());
        v.push(rhs.clone());
        v
    }
}

impl Add for Surd {
    type Output = SurdVec;
    fn add(self, rhs: Surd) -> SurdVec {
        let mut v = SurdVec::zero();
        v.push(self);
        v.push(rhs);
        v
    }
}

impl Sub for &Surd {
    type Output = SurdVec;
    fn sub(self, rhs: &Surd) -> SurdVec {
        self + &-rhs
    }
}

/// A finite sum of [`Surd`] terms from pairwise distinct quadratic fields.
///
/// This is the escape hatch for additions that cross fields. Terms are kept
/// sorted by field kernel, zero terms are dropped and same-field terms are
/// merged on insertion, so the empty vector is exact zero and `==` is value
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SurdVec {
    terms: Vec<Surd>,
}

impl SurdVec {
    pub fn zero() -> Self {
        SurdVec::default()
    }

    pub fn from_surd(s: Surd) -> Self {
        let mut v = SurdVec::zero();
        v.push(s);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Surd] {
        &self.terms
    }

    /// Adds one term, merging with an existing term of the same quadratic
    /// field. Two canonical surds of one field can still carry different
    /// radicands (`√3` and `√(1/3)`), so matching goes through the field
    /// kernel and the merge rewrites both terms over the integer radicand.
    pub fn push(&mut self, s: Surd) {
        if s.is_zero() {
            return;
        }
        let kernel = s.field_kernel();
        match self
            .terms
            .binary_search_by(|t| t.field_kernel().cmp(&kernel))
        {
            Ok(i) => {
                let old = &self.terms[i];
                // c·√(n/d) = (c/d)·√(n·d)
                let over_kernel = |t: &Surd| {
                    &t.coeff * BigRational::new_raw(BigInt::one(), t.radicand.denom().clone())
                };
                let merged = canonical(
                    over_kernel(old) + over_kernel(&s),
                    BigRational::from_integer(kernel),
                );
                if merged.is_zero() {
                    self.terms.remove(i);
                } else {
                    self.terms[i] = merged;
                }
            }
            Err(i) => self.terms.insert(i, s),
        }
    }

    /// Collapses to a single surd when at most one field is present.
    pub fn into_surd(mut self) -> Result<Surd, SurdVec> {
        match self.terms.len() {
            0 => Ok(Surd::zero()),
            1 => Ok(self.terms.pop().unwrap()),
            _ => Err(self),
        }
    }

    pub fn scale_surd(&self, s: &Surd) -> SurdVec {
        let mut out = SurdVec::zero();
        for t in &self.terms {
            out.push(t * s);
        }
        out
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(Surd::to_f64).sum()
    }
}

impl fmt::Display for SurdVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&t.format_exact())?;
        }
        Ok(())
    }
}

impl Add for &SurdVec {
    type Output = SurdVec;
    fn add(self, rhs: &SurdVec) -> SurdVec {
        let mut out = self.clone();
        for t in &rhs.terms {
            out.push(t.clone());
        }
        out
    }
}

impl Add<&Surd> for &SurdVec {
    type Output = SurdVec;
    fn add(self, rhs: &Surd) -> SurdVec {
        let mut out = self.clone();
        out.push(rhs.clone());
        out
    }
}

impl Sub for &SurdVec {
    type Output = SurdVec;
    fn sub(self, rhs: &SurdVec) -> SurdVec {
        let mut out = self.clone();
        for t in &rhs.terms {
            out.push(-t);
        }
        out
    }
}

impl Neg for &SurdVec {
    type Output = SurdVec;
    fn neg(self) -> SurdVec {
        SurdVec {
            terms: self.terms.iter().map(|t| -t).collect(),
        }
    }
}

impl Mul for &SurdVec {
    type Output = SurdVec;
    fn mul(self, rhs: &SurdVec) -> SurdVec {
        let mut out = SurdVec::zero();
        for a in &self.terms {
            for b in &rhs.terms {
                out.push(a * b);
            }
        }
        out
    }
}
