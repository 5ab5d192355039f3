//! Base-3 expansions of rationals in `[0, 1]`.

use std::fmt;

use malachite_base::num::arithmetic::traits::{DivMod, DivisibleBy, Pow};
use malachite_base::num::basic::traits::{One, Zero};
use malachite_base::num::conversion::traits::Digits;

use super::rational::{check_unit, pow3, BigNat, BigRational};
use crate::error::{Error, Result};

/// Eventually periodic ternary expansion `0.p1 p2 ... pm (c1 ... cn)*`.
///
/// Digits are validated at construction. A terminating expansion has an empty
/// period; a period made only of zeros is rejected because it denotes the same
/// value as the terminating form. The value 1 is written `0.(2)*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryExpansion {
    preperiod: Vec<u8>,
    period: Vec<u8>,
}

fn check_digits(digits: &[u8]) -> Result<()> {
    match digits.iter().find(|&&d| d > 2) {
        Some(&d) => Err(Error::InvalidDigit(d)),
        None => Ok(()),
    }
}

impl TernaryExpansion {
    pub fn new(preperiod: Vec<u8>, period: Vec<u8>) -> Result<Self> {
        check_digits(&preperiod)?;
        check_digits(&period)?;
        if !period.is_empty() && period.iter().all(|&d| d == 0) {
            return Err(Error::Parse(
                "a period of zeros must be written as a terminating expansion".into(),
            ));
        }
        Ok(TernaryExpansion { preperiod, period })
    }

    pub fn terminating(digits: Vec<u8>) -> Result<Self> {
        Self::new(digits, Vec::new())
    }

    pub fn preperiod(&self) -> &[u8] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn is_terminating(&self) -> bool {
        self.period.is_empty()
    }

    /// The expansion obtained by dropping the preperiod.
    pub fn periodic_part(&self) -> TernaryExpansion {
        TernaryExpansion {
            preperiod: Vec::new(),
            period: self.period.clone(),
        }
    }

    /// True when this is the form produced by [`to_ternary`]: minimal period,
    /// minimal preperiod, no trailing zero on a terminating expansion, and no
    /// `(2)*` tail except for the value 1 itself.
    pub fn is_canonical(&self) -> bool {
        if self.period.is_empty() {
            return self.preperiod.last() != Some(&0);
        }
        if self.period == [2] {
            return self.preperiod.is_empty();
        }
        let n = self.period.len();
        let minimal_period = (1..n).filter(|&len| n.is_multiple_of(len)).all(|len| {
            self.period
                .chunks(len)
                .any(|chunk| chunk != &self.period[..len])
        });
        let minimal_preperiod = self.preperiod.last() != self.period.last();
        minimal_period && minimal_preperiod
    }

    /// Digits in order, repeating the period forever.
    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        let tail = self.period.iter().copied().cycle();
        let tail: Box<dyn Iterator<Item = u8>> = if self.period.is_empty() {
            Box::new(std::iter::empty())
        } else {
            Box::new(tail)
        };
        self.preperiod.iter().copied().chain(tail)
    }
}

impl fmt::Display for TernaryExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "0.")?;
        for d in &self.preperiod {
            write!(f, "{d}")?;
        }
        if !self.period.is_empty() {
            write!(f, "(")?;
            for d in &self.period {
                write!(f, "{d}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Remainder state of base-3 long division of `num/den`, yielding one digit
/// per step. Never materializes the period, so it is safe for denominators
/// whose period is astronomically long.
#[derive(Clone, Debug)]
pub struct TernaryDigits {
    remainder: BigNat,
    denominator: BigNat,
}

impl TernaryDigits {
    /// Digits of `x` for `0 <= x < 1`.
    pub fn new(x: &BigRational) -> Result<Self> {
        check_unit(x)?;
        let (num, den) = x.to_numerator_and_denominator();
        if num >= den {
            return Err(Error::Domain("digit stream requires x < 1".into()));
        }
        Ok(TernaryDigits {
            remainder: num,
            denominator: den,
        })
    }

    /// True once every further digit is 0.
    pub fn exhausted(&self) -> bool {
        self.remainder == BigNat::ZERO
    }

    /// Value of the not-yet-emitted tail, in `[0, 1)`.
    pub fn tail(&self) -> BigRational {
        BigRational::from_naturals_ref(&self.remainder, &self.denominator)
    }
}

impl Iterator for TernaryDigits {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let scaled = &self.remainder * BigNat::from(3u32);
        let (digit, rem) = scaled.div_mod(&self.denominator);
        self.remainder = rem;
        Some(u8::try_from(&digit).expect("ternary digit"))
    }
}

fn long_division_u64(mut remainder: u64, den: u64, threes: u32) -> (Vec<u8>, Vec<u8>) {
    let mut preperiod = Vec::with_capacity(threes as usize);
    for _ in 0..threes {
        remainder *= 3;
        preperiod.push((remainder / den) as u8);
        remainder %= den;
    }
    let mut period = Vec::new();
    if remainder != 0 {
        let start = remainder;
        loop {
            remainder *= 3;
            period.push((remainder / den) as u8);
            remainder %= den;
            if remainder == start {
                break;
            }
        }
    }
    (preperiod, period)
}

fn long_division_big(num: BigNat, den: &BigNat, threes: u32) -> (Vec<u8>, Vec<u8>) {
    let three = BigNat::from(3u32);
    let step = |r: &BigNat| -> (u8, BigNat) {
        let (d, rem) = (r * &three).div_mod(den);
        (u8::try_from(&d).expect("ternary digit"), rem)
    };
    let mut remainder = num;
    let mut preperiod = Vec::with_capacity(threes as usize);
    for _ in 0..threes {
        let (d, rem) = step(&remainder);
        preperiod.push(d);
        remainder = rem;
    }
    let mut period = Vec::new();
    if remainder != BigNat::ZERO {
        let start = remainder.clone();
        loop {
            let (d, rem) = step(&remainder);
            period.push(d);
            remainder = rem;
            if remainder == start {
                break;
            }
        }
    }
    (preperiod, period)
}

/// Canonical ternary expansion of `x` in `[0, 1]`.
///
/// For reduced `p/q` with `q = 3^e * q'` and `gcd(q', 3) = 1`, the preperiod
/// has exactly `e` digits and the period is the cycle of long-division
/// remainders modulo `q`, whose length is the order of 3 modulo `q'`.
pub fn to_ternary(x: &BigRational) -> Result<TernaryExpansion> {
    check_unit(x)?;
    if *x == BigRational::ONE {
        return Ok(TernaryExpansion {
            preperiod: Vec::new(),
            period: vec![2],
        });
    }
    let (num, den) = x.to_numerator_and_denominator();
    let mut threes = 0u32;
    let mut rest = den.clone();
    let three = BigNat::from(3u32);
    while (&rest).divisible_by(&three) {
        rest /= &three;
        threes += 1;
    }
    let (preperiod, period) = match (u64::try_from(&num), u64::try_from(&den)) {
        (Ok(p), Ok(q)) if q < (1 << 62) => long_division_u64(p, q, threes),
        _ => long_division_big(num, &den, threes),
    };
    Ok(TernaryExpansion { preperiod, period })
}

fn digits_value(digits: &[u8]) -> BigNat {
    if digits.is_empty() {
        return BigNat::ZERO;
    }
    BigNat::from_digits_desc(&3u8, digits.iter().copied()).expect("validated ternary digits")
}

/// Exact value `sum d_j 3^-j` of an expansion, summing the periodic tail as a
/// geometric series: `0.P(C)* = (P (3^n - 1) + C) / (3^m (3^n - 1))`.
pub fn from_ternary(e: &TernaryExpansion) -> BigRational {
    let m = e.preperiod.len() as u64;
    let head = digits_value(&e.preperiod);
    if e.period.is_empty() {
        return BigRational::from_naturals(head, pow3(m));
    }
    let cycle = BigNat::from(3u32).pow(e.period.len() as u64) - BigNat::ONE;
    let tail = digits_value(&e.period);
    let num = head * &cycle + tail;
    BigRational::from_naturals(num, pow3(m) * cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    fn expansion(pre: &[u8], per: &[u8]) -> TernaryExpansion {
        TernaryExpansion::new(pre.to_vec(), per.to_vec()).unwrap()
    }

    #[test]
    fn expansions_of_small_fractions() {
        assert_eq!(to_ternary(&ratio(1, 3)).unwrap(), expansion(&[1], &[]));
        assert_eq!(to_ternary(&ratio(1, 1)).unwrap(), expansion(&[], &[2]));
        assert_eq!(to_ternary(&ratio(1, 4)).unwrap(), expansion(&[], &[0, 2]));
        assert_eq!(
            to_ternary(&ratio(1, 7)).unwrap(),
            expansion(&[], &[0, 1, 0, 2, 1, 2])
        );
        assert_eq!(to_ternary(&ratio(0, 1)).unwrap(), expansion(&[], &[]));
        assert_eq!(to_ternary(&ratio(1, 6)).unwrap(), expansion(&[0], &[1]));
        assert_eq!(to_ternary(&ratio(1, 2)).unwrap(), expansion(&[], &[1]));
    }

    #[test]
    fn values_of_expansions() {
        assert_eq!(from_ternary(&expansion(&[1], &[])), ratio(1, 3));
        assert_eq!(from_ternary(&expansion(&[], &[1])), ratio(1, 2));
        assert_eq!(from_ternary(&expansion(&[], &[2])), ratio(1, 1));
        assert_eq!(from_ternary(&expansion(&[], &[])), ratio(0, 1));
        // 0.1(2)* is a non-canonical spelling of 2/3
        assert_eq!(from_ternary(&expansion(&[1], &[2])), ratio(2, 3));
    }

    #[test]
    fn big_denominator_path_matches_u64_path() {
        let x = ratio(5, 3 * 3 * 7 * 11);
        let small = to_ternary(&x).unwrap();
        let (num, den) = x.to_numerator_and_denominator();
        let (pre, per) = long_division_big(num, &den, 2);
        assert_eq!(small, expansion(&pre, &per));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            TernaryExpansion::new(vec![3], vec![]),
            Err(Error::InvalidDigit(3))
        );
        assert!(TernaryExpansion::new(vec![1], vec![0, 0]).is_err());
        assert!(to_ternary(&ratio(3, 2)).is_err());
        assert!(to_ternary(&ratio(-1, 2)).is_err());
    }

    #[test]
    fn canonical_forms() {
        assert!(to_ternary(&ratio(1, 7)).unwrap().is_canonical());
        assert!(!expansion(&[1], &[2]).is_canonical());
        assert!(!expansion(&[1, 0], &[]).is_canonical());
        assert!(!expansion(&[], &[1, 1]).is_canonical());
        assert!(!expansion(&[1], &[0, 1]).is_canonical());
    }

    #[test]
    fn lazy_digits_follow_expansion() {
        let x = ratio(5, 14);
        let eager: Vec<u8> = to_ternary(&x).unwrap().digits().take(40).collect();
        let lazy: Vec<u8> = TernaryDigits::new(&x).unwrap().take(40).collect();
        assert_eq!(eager, lazy);
    }
}
