use std::fmt;
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Pow;
use malachite_base::num::basic::traits::One;

use crate::error::{Error, Result};
use crate::numeric::rational::{pow3, ratio, BigRational};

/// The four upper limits `1/(3^i + 1)`, `1/(3^i - 1)`, `2/(3^i + 1)`, `2/(3^i - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntegralCase {
    I,
    II,
    III,
    IV,
}

impl IntegralCase {
    pub const ALL: [IntegralCase; 4] = [
        IntegralCase::I,
        IntegralCase::II,
        IntegralCase::III,
        IntegralCase::IV,
    ];
}

impl FromStr for IntegralCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "i" => IntegralCase::I,
            "ii" => IntegralCase::II,
            "iii" => IntegralCase::III,
            "iv" => IntegralCase::IV,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown integral case {s:?}; expected i..iv"
                )))
            }
        })
    }
}

impl fmt::Display for IntegralCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntegralCase::I => "i",
            IntegralCase::II => "ii",
            IntegralCase::III => "iii",
            IntegralCase::IV => "iv",
        })
    }
}

/// `(x, F(x))` for one of the four closed-form integral families, `i > 0`.
pub fn integral_closed_form(case: IntegralCase, i: u32) -> Result<(BigRational, BigRational)> {
    if i == 0 {
        return Err(Error::Parameter(
            "integral closed forms require i > 0".into(),
        ));
    }
    let one = BigRational::ONE;
    let p3 = BigRational::from(pow3(i as u64));
    let lead = ratio(2, 9).pow(i as u64) / BigRational::from(2u32); // 2^(i-1) / 9^i
    let geometric = &one - ratio(2, 9).pow(i as u64);
    let shifted = &one + &lead;
    let five = BigRational::from(5u32);
    let two = BigRational::from(2u32);
    Ok(match case {
        IntegralCase::I => {
            let x = &one / (&p3 + &one);
            (x, lead * ((&p3 - &one) / (&p3 + &one)) / geometric)
        }
        IntegralCase::II => {
            let x = &one / (&p3 - &one);
            (x, &lead * ((&p3 + &one) / (&p3 - &one)) / shifted)
        }
        IntegralCase::III => {
            let x = &two / (&p3 + &one);
            (
                x,
                &lead * ((&five * &p3 + &one) / (&two * &p3 + &two)) / shifted,
            )
        }
        IntegralCase::IV => {
            let x = &two / (&p3 - &one);
            (
                x,
                lead * ((&five * &p3 - &one) / (&two * &p3 - &two)) / geometric,
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instantiations() {
        assert_eq!(
            integral_closed_form(IntegralCase::I, 1).unwrap(),
            (ratio(1, 4), ratio(1, 14))
        );
        assert_eq!(
            integral_closed_form(IntegralCase::II, 1).unwrap(),
            (ratio(1, 2), ratio(1, 5))
        );
        assert_eq!(
            integral_closed_form(IntegralCase::III, 1).unwrap(),
            (ratio(1, 2), ratio(1, 5))
        );
        assert_eq!(
            integral_closed_form(IntegralCase::IV, 1).unwrap(),
            (ratio(1, 1), ratio(1, 2))
        );
        assert_eq!(
            integral_closed_form(IntegralCase::IV, 2).unwrap(),
            (ratio(1, 4), ratio(1, 14))
        );
        assert!(matches!(
            integral_closed_form(IntegralCase::I, 0),
            Err(Error::Parameter(_))
        ));
    }
}
