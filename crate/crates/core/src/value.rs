//! Exact membership values.
//!
//! Every degree of membership is a rational in `[0,1]` held in lowest terms.
//! Text input accepts either a fraction `p/q` or a plain decimal literal
//! (`0.35`); decimals convert exactly to a power-of-ten denominator.
//! Output is always the fraction form, integers included (`1/1`).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds a rational from machine integers. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders a rational as `p/q` in lowest terms with a positive denominator.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Lossy decimal rendering, for human-facing output only.
pub fn approx(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn parse_digits(text: &str, whole: &str) -> Result<BigInt> {
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Syntax(format!("malformed number `{whole}`")));
    }
    text.parse::<BigInt>()
        .map_err(|_| Error::Syntax(format!("malformed number `{whole}`")))
}

/// Parses `p/q` or a decimal literal into an exact rational (any sign).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let value = if let Some((p, q)) = body.split_once('/') {
        let numer = parse_digits(p, text)?;
        let denom = parse_digits(q, text)?;
        if denom.is_zero() {
            return Err(Error::Syntax(format!("zero denominator in `{text}`")));
        }
        Rational::new(numer, denom)
    } else if let Some((int, frac)) = body.split_once('.') {
        let int = parse_digits(int, text)?;
        let digits = parse_digits(frac, text)?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        Rational::new(int * &scale + digits, scale)
    } else {
        Rational::from_integer(parse_digits(body, text)?)
    };
    Ok(if negative { -value } else { value })
}

/// A degree of membership: an exact rational in `[0,1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MembershipValue(Rational);

impl MembershipValue {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::Syntax("zero denominator".into()));
        }
        Self::from_rational(ratio(numer, denom))
    }

    pub fn from_rational(value: Rational) -> Result<Self> {
        if value.is_negative() || value > Rational::one() {
            return Err(Error::ValueRange(format_rational(&value)));
        }
        Ok(MembershipValue(value))
    }

    pub fn zero() -> Self {
        MembershipValue(Rational::zero())
    }

    pub fn one() -> Self {
        MembershipValue(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    /// `self ∧ other`
    pub fn meet(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Half of this value; stays in range.
    pub fn half(&self) -> Self {
        MembershipValue(&self.0 / Rational::from_integer(BigInt::from(2)))
    }

    /// `self − other`, which must not go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let diff = &self.0 - &other.0;
        (!diff.is_negative()).then_some(MembershipValue(diff))
    }
}

impl fmt::Display for MembershipValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.0))
    }
}

impl fmt::Debug for MembershipValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MembershipValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_rational(parse_rational(s)?)
    }
}
