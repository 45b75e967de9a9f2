//! Number field abstraction: every quantity in the pipeline is generic over
//! [`Scalar`], instantiated either with exact rationals ([`Rational`]) or
//! with `f64`. The exact instantiation makes LP optima and certificates
//! bit-for-bit reproducible; the float instantiation is the fast path.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

/// The arithmetic required from a number field backing distributions,
/// matrices and the simplex solver.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Zero
    + One
    + Signed
    + Sum
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic is exact and comparisons need no tolerance.
    const EXACT: bool;

    /// Human name of the numeric mode ("exact" / "float").
    const MODE: &'static str;

    fn from_int(n: i64) -> Self;

    fn ratio(num: i64, den: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn to_f64(&self) -> f64;

    /// Parse a numeric literal: an integer, a fraction "n/d" or a decimal
    /// string. Exact mode parses fractions and terminating decimals exactly.
    fn parse_literal(text: &str) -> Result<Self>;

    /// Feasibility/comparison tolerance: zero in exact mode.
    fn tol() -> Self;

    /// `a == b` up to [`Scalar::tol`].
    fn approx_eq(&self, other: &Self) -> bool {
        (self.clone() - other.clone()).abs() <= Self::tol()
    }

    fn recip(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;
    const MODE: &'static str = "exact";

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn tol() -> Self {
        BigRational::zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    const MODE: &'static str = "float";

    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn parse_literal(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((num, den)) = text.split_once('/') {
            let n: f64 = num
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad numerator in `{text}`")))?;
            let d: f64 = den
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad denominator in `{text}`")))?;
            if d == 0.0 {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(n / d)
        } else {
            text.parse()
                .map_err(|_| Error::Parse(format!("bad number `{text}`")))
        }
    }

    fn tol() -> Self {
        1e-9
    }
}

/// Parse "n/d", an integer, or a terminating decimal (optionally in
/// scientific notation) into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty numeric literal".into()));
    }
    if let Some((num, den)) = text.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|_| Error::Parse(format!("bad numerator in `{text}`")))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|_| Error::Parse(format!("bad denominator in `{text}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    // Decimal, possibly with exponent: mantissa * 10^exp.
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{text}`")))?;
            (m, exp)
        }
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!(
        "{}{}",
        if int_part.is_empty() || int_part == "-" || int_part == "+" {
            format!("{int_part}0")
        } else {
            int_part.to_string()
        },
        frac_part
    );
    let numer =
        BigInt::from_str(&digits).map_err(|_| Error::Parse(format!("bad number `{text}`")))?;
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        BigRational::from_integer(numer * ten.pow(shift as u32))
    } else {
        BigRational::new(numer, ten.pow((-shift) as u32))
    })
}

/// Render a rational as "n/d" (or "n" for integers) for serialization.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_exactly() {
        let third = parse_rational("1/3").unwrap();
        assert_eq!(third, Rational::ratio(1, 3));
    }

    #[test]
    fn parses_terminating_decimals_exactly() {
        assert_eq!(parse_rational("0.25").unwrap(), Rational::ratio(1, 4));
        assert_eq!(parse_rational("-0.1").unwrap(), Rational::ratio(-1, 10));
        assert_eq!(parse_rational("2").unwrap(), Rational::from_int(2));
        assert_eq!(parse_rational("1.5e-2").unwrap(), Rational::ratio(3, 200));
        assert_eq!(parse_rational(".5").unwrap(), Rational::ratio(1, 2));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("one half").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn float_literal_handles_fractions() {
        let x: f64 = Scalar::parse_literal("1/4").unwrap();
        assert_eq!(x, 0.25);
    }

    #[test]
    fn round_trips_through_string() {
        for (n, d) in [(1i64, 3i64), (-7, 2), (5, 1), (0, 1)] {
            let r = Rational::ratio(n, d);
            assert_eq!(parse_rational(&rational_to_string(&r)).unwrap(), r);
        }
    }
}
