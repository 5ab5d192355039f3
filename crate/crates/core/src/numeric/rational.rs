//! Exact rational values and their textual forms.
//!
//! Every coordinate, function value and parameter in this crate is a
//! [`BigRational`]: an always-reduced quotient of arbitrary-precision integers
//! with a positive denominator. Rendering to decimals happens only here, at the
//! display boundary.

use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{Abs, Pow};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;

use crate::error::{Error, Result};

pub use malachite_nz::integer::Integer as BigInt;
pub use malachite_nz::natural::Natural as BigNat;
pub use malachite_q::Rational as BigRational;

/// `num/den` as a reduced rational. Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::from_signeds(num, den)
}

pub fn pow_nat(base: u64, exp: u64) -> BigNat {
    BigNat::from(base).pow(exp)
}

pub fn pow3(exp: u64) -> BigNat {
    pow_nat(3, exp)
}

/// `3^-exp`.
pub fn third_power(exp: u64) -> BigRational {
    BigRational::from_naturals(BigNat::ONE, pow3(exp))
}

pub fn rational_pow(base: &BigRational, exp: u64) -> BigRational {
    base.pow(exp)
}

pub fn is_unit(x: &BigRational) -> bool {
    *x >= BigRational::ZERO && *x <= BigRational::ONE
}

/// Rejects values outside `[0, 1]`.
pub fn check_unit(x: &BigRational) -> Result<()> {
    if is_unit(x) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{} is outside [0, 1]", render(x))))
    }
}

/// Parses `p/q`, `p` or a plain decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    if text.contains('.') {
        return parse_decimal(text);
    }
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num =
        BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad numerator in {text:?}")))?;
    let den =
        BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad denominator in {text:?}")))?;
    if den == BigInt::ZERO {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::from_integers(num, den))
}

/// Parses a decimal literal `[-]digits[.digits]` into the exact rational
/// `digits / 10^k`. No binary floating point is involved.
pub fn parse_decimal(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("malformed decimal {text:?}"));
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole
        .bytes()
        .chain(frac.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad());
    }
    let digits = format!("{whole}{frac}");
    let digits = if digits.is_empty() {
        "0".to_string()
    } else {
        digits
    };
    let num = BigNat::from_str(&digits).map_err(|_| bad())?;
    let value = BigRational::from_naturals(num, pow_nat(10, frac.len() as u64));
    Ok(if negative { -value } else { value })
}

/// `p/q` with the denominator always present (`1/1`, `0/1`).
pub fn render(x: &BigRational) -> String {
    let (num, den) = x.numerator_and_denominator_ref();
    let sign = if *x < BigRational::ZERO { "-" } else { "" };
    format!("{sign}{num}/{den}")
}

/// `p/q (d.ddddddddddd)`: the exact value followed by 12 significant digits.
pub fn display(x: &BigRational) -> String {
    format!("{} ({})", render(x), format_decimal(x, 12))
}

fn round_half_up(x: &BigRational) -> BigNat {
    let shifted = x + BigRational::from_signeds(1, 2);
    BigNat::rounding_from(&shifted, RoundingMode::Floor).0
}

fn place_point(digits: String, decimals: usize, negative: bool) -> String {
    let digits = if digits.len() <= decimals {
        format!("{}{}", "0".repeat(decimals + 1 - digits.len()), digits)
    } else {
        digits
    };
    let split = digits.len() - decimals;
    let sign = if negative { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{digits}")
    } else {
        format!("{sign}{}.{}", &digits[..split], &digits[split..])
    }
}

/// Fixed-point rendering with `decimals` places, rounding half away from zero.
pub fn format_fixed(x: &BigRational, decimals: usize) -> String {
    let magnitude = x.abs();
    let scaled = round_half_up(&(&magnitude * BigRational::from(pow_nat(10, decimals as u64))));
    let negative = *x < BigRational::ZERO && scaled != BigNat::ZERO;
    place_point(scaled.to_string(), decimals, negative)
}

/// Decimal rendering with `sig` significant digits (plain notation).
pub fn format_decimal(x: &BigRational, sig: usize) -> String {
    if *x == BigRational::ZERO {
        return format_fixed(x, sig);
    }
    let magnitude = x.abs();
    let (num, den) = magnitude.numerator_and_denominator_ref();
    // exponent e with 10^(e-1) <= |x| < 10^e
    let mut exponent = num.to_string().len() as i64 - den.to_string().len() as i64;
    let ten = BigRational::from(10u32);
    loop {
        if magnitude >= ten.clone().pow(exponent) {
            exponent += 1;
        } else if magnitude < ten.clone().pow(exponent - 1) {
            exponent -= 1;
        } else {
            break;
        }
    }
    let mut decimals = sig as i64 - exponent;
    if decimals < 0 {
        return format_fixed(x, 0);
    }
    let scaled = round_half_up(&(&magnitude * ten.clone().pow(decimals)));
    if scaled.to_string().len() > sig && decimals > 0 {
        // rounding carried into a new leading digit
        decimals -= 1;
    }
    format_fixed(x, decimals as usize)
}

/// Nearest `f64`, for plotting and logarithms only.
pub fn to_f64(x: &BigRational) -> f64 {
    f64::rounding_from(x, RoundingMode::Nearest).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("2/4").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), ratio(7, 1));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(
            parse_decimal("0.333333333333").unwrap(),
            ratio(333_333_333_333, 1_000_000_000_000)
        );
        assert_eq!(parse_decimal(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_decimal("-1.5").unwrap(), ratio(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/3").is_err());
        assert!(parse_decimal("0.3.3").is_err());
        assert!(parse_decimal("1e-3").is_err());
        assert!(parse_decimal(".").is_err());
    }

    #[test]
    fn renders_with_explicit_denominator() {
        assert_eq!(render(&ratio(1, 2)), "1/2");
        assert_eq!(render(&ratio(1, 1)), "1/1");
        assert_eq!(render(&ratio(0, 5)), "0/1");
        assert_eq!(render(&ratio(-1, 6)), "-1/6");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(display(&ratio(1, 2)), "1/2 (0.500000000000)");
        assert_eq!(display(&ratio(8, 23)), "8/23 (0.347826086957)");
        assert_eq!(format_decimal(&ratio(1, 14), 12), "0.0714285714286");
        assert_eq!(format_decimal(&ratio(1, 1), 12), "1.00000000000");
        assert_eq!(format_decimal(&ratio(0, 1), 12), "0.000000000000");
        assert_eq!(format_decimal(&ratio(-1, 6), 12), "-0.166666666667");
        // 0.9999999999999 rounds up to a new leading digit
        assert_eq!(
            format_decimal(&ratio(9_999_999_999_999, 10_000_000_000_000), 12),
            "1.00000000000"
        );
    }

    #[test]
    fn fixed_rounding() {
        assert_eq!(format_fixed(&ratio(2, 3), 6), "0.666667");
        assert_eq!(format_fixed(&ratio(900, 1), 6), "900.000000");
        assert_eq!(format_fixed(&ratio(-1, 3_000_000_000), 6), "0.000000");
        assert_eq!(format_fixed(&ratio(5, 2), 0), "3");
    }
}
