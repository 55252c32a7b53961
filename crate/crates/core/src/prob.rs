//! Exact probabilities backed by arbitrary-precision rationals.

use alloc::string::String;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbabilityError {
    #[error("probability {0} lies outside [0, 1]")]
    OutOfRange(BigRational),
    #[error("malformed probability literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// A rational number in `[0, 1]`, always kept in reduced form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Probability(BigRational);

impl Probability {
    pub fn new(value: BigRational) -> Result<Self, ProbabilityError> {
        if value.is_negative() || value > BigRational::one() {
            return Err(ProbabilityError::OutOfRange(value));
        }
        Ok(Probability(value))
    }

    pub fn from_ratio(numer: u64, denom: u64) -> Result<Self, ProbabilityError> {
        if denom == 0 {
            return Err(ProbabilityError::ZeroDenominator(alloc::format!("{numer}/{denom}")));
        }
        Self::new(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn zero() -> Self {
        Probability(BigRational::zero())
    }

    pub fn one() -> Self {
        Probability(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// `1 - p`.
    pub fn complement(&self) -> Self {
        Probability(BigRational::one() - &self.0)
    }

    pub fn ratio(&self) -> &BigRational {
        &self.0
    }

    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Sums a collection of probabilities, failing if the total exceeds one.
    pub fn sum<'a, I>(items: I) -> Result<Self, ProbabilityError>
    where
        I: IntoIterator<Item = &'a Probability>,
    {
        let total = items
            .into_iter()
            .fold(BigRational::zero(), |acc, p| acc + &p.0);
        Self::new(total)
    }

    pub fn checked_add(&self, other: &Probability) -> Option<Self> {
        Self::new(&self.0 + &other.0).ok()
    }

    /// `self / other`, defined when the quotient is again a probability.
    pub fn checked_div(&self, other: &Probability) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        Self::new(&self.0 / &other.0).ok()
    }

    /// Decimal expansion with `digits` fractional digits, rounded half to even.
    pub fn to_decimal(&self, digits: usize) -> String {
        let numer = self.0.numer();
        let denom = self.0.denom();
        let scale = num_traits::pow(BigInt::from(10u8), digits);
        let (mut scaled, rem) = (numer * &scale).div_rem(denom);
        let twice = rem * 2u8;
        if twice > *denom || (twice == *denom && scaled.is_odd()) {
            scaled += 1u8;
        }
        let (int_part, frac_part) = scaled.div_rem(&scale);
        if digits == 0 {
            return alloc::format!("{int_part}");
        }
        alloc::format!("{int_part}.{:0>width$}", frac_part.to_str_radix(10), width = digits)
    }

    /// Parses `p/q`, a decimal such as `0.49`, or a bare integer.
    pub fn parse(text: &str) -> Result<Self, ProbabilityError> {
        Self::new(parse_rational(text)?)
    }
}

/// Parses an exact non-negative rational from `p/q`, `d.ddd`, or `n`.
pub fn parse_rational(text: &str) -> Result<BigRational, ProbabilityError> {
    let malformed = || ProbabilityError::Malformed(String::from(text));
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let int = |s: &str| BigInt::from_str(s).map_err(|_| malformed());
    let trimmed = text.trim();
    if let Some((n, d)) = trimmed.split_once('/') {
        let (n, d) = (n.trim(), d.trim());
        if !digits(n) || !digits(d) {
            return Err(malformed());
        }
        let d = int(d)?;
        if d.is_zero() {
            return Err(ProbabilityError::ZeroDenominator(String::from(text)));
        }
        return Ok(BigRational::new(int(n)?, d));
    }
    if let Some((whole, frac)) = trimmed.split_once('.') {
        if !digits(whole) || !digits(frac) {
            return Err(malformed());
        }
        let scale = num_traits::pow(BigInt::from(10u8), frac.len());
        let numer = int(whole)? * &scale + int(frac)?;
        return Ok(BigRational::new(numer, scale));
    }
    if !digits(trimmed) {
        return Err(malformed());
    }
    Ok(BigRational::from_integer(int(trimmed)?))
}

impl fmt::Display for Probability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Probability {
    type Err = ProbabilityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Probability::parse(s)
    }
}

impl Mul for &Probability {
    type Output = Probability;

    fn mul(self, rhs: &Probability) -> Probability {
        Probability(&self.0 * &rhs.0)
    }
}

impl Mul for Probability {
    type Output = Probability;

    fn mul(self, rhs: Probability) -> Probability {
        Probability(self.0 * rhs.0)
    }
}
