//! Exact rational helpers: `p/q` text form and fixed-precision decimal rendering.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

/// Default number of fractional digits used by [`to_decimal`].
pub const DEFAULT_PRECISION: usize = 30;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn from_biguint(value: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(value.clone()))
}

/// Renders as `p/q`, or just `p` when the denominator is one.
pub fn to_fraction_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses the `p/q` (or bare integer) form produced by [`to_fraction_string`].
///
/// Input that is not already in lowest terms is rejected so that the text
/// form stays canonical.
pub fn parse_fraction(text: &str) -> Result<Rational, Error> {
    let bad = || Error::Parse(format!("invalid rational '{text}'"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (
            p.parse::<BigInt>().map_err(|_| bad())?,
            q.parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if !den.is_positive() || !num.gcd(&den).is_one() && !num.is_zero() {
        return Err(bad());
    }
    if num.is_zero() && !den.is_one() {
        return Err(bad());
    }
    Ok(Rational::new_raw(num, den))
}

/// Fixed-point decimal with exactly `precision` fractional digits.
///
/// The value is scaled by `10^precision`, divided exactly and rounded half
/// to even, so no binary floating point is involved.
pub fn to_decimal(r: &Rational, precision: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), precision);
    let num = r.numer().abs() * &scale;
    let den = r.denom();
    let (mut q, rem) = num.div_rem(den);
    let twice = rem * 2u32;
    match twice.cmp(den) {
        std::cmp::Ordering::Greater => q += 1u32,
        std::cmp::Ordering::Equal if q.is_odd() => q += 1u32,
        _ => {}
    }
    let digits = q.to_string();
    let (int_part, frac_part) = if precision == 0 {
        (digits, String::new())
    } else if digits.len() > precision {
        let split = digits.len() - precision;
        (digits[..split].to_string(), digits[split..].to_string())
    } else {
        ("0".to_string(), format!("{digits:0>precision$}"))
    };
    let negative = r.numer().sign() == Sign::Minus && !q.is_zero();
    let sign = if negative { "-" } else { "" };
    if precision == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Nearest binary64 to the exact value, via a 30-digit decimal rendering.
pub fn to_f64(r: &Rational) -> f64 {
    to_decimal(r, DEFAULT_PRECISION)
        .parse()
        .expect("decimal rendering is a valid float literal")
}
