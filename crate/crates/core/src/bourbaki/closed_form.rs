//! Closed-form values of `f` at the six argument families
//! `1/(3^i ± 1)`, `2/(3^i ± 1)` and `1/(3^j ± 3^i)`.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::Pow;

use crate::error::{Error, Result};
use crate::numeric::rational::{pow_nat, ratio, BigInt, BigRational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FunctionCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl FunctionCase {
    pub const ALL: [FunctionCase; 6] = [
        FunctionCase::I,
        FunctionCase::II,
        FunctionCase::III,
        FunctionCase::IV,
        FunctionCase::V,
        FunctionCase::VI,
    ];

    pub fn needs_j(self) -> bool {
        matches!(self, FunctionCase::V | FunctionCase::VI)
    }
}

impl FromStr for FunctionCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "i" => FunctionCase::I,
            "ii" => FunctionCase::II,
            "iii" => FunctionCase::III,
            "iv" => FunctionCase::IV,
            "v" => FunctionCase::V,
            "vi" => FunctionCase::VI,
            _ => return Err(Error::Parse(format!("unknown case {s:?}; expected i..vi"))),
        })
    }
}

impl fmt::Display for FunctionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FunctionCase::I => "i",
            FunctionCase::II => "ii",
            FunctionCase::III => "iii",
            FunctionCase::IV => "iv",
            FunctionCase::V => "v",
            FunctionCase::VI => "vi",
        };
        f.write_str(name)
    }
}

fn int_pow(base: u64, exp: u32) -> BigInt {
    BigInt::from(pow_nat(base, exp as u64))
}

fn quotient(num: BigInt, den: BigInt) -> BigRational {
    BigRational::from_integers(num, den)
}

/// `(x, f(x))` for one of the closed-form families. Requires `i > 0`, and
/// `j > i` for cases v and vi.
pub fn closed_form_value(
    case: FunctionCase,
    i: u32,
    j: Option<u32>,
) -> Result<(BigRational, BigRational)> {
    if i == 0 {
        return Err(Error::Parameter("closed forms require i > 0".into()));
    }
    let (p3, p2) = (int_pow(3, i), int_pow(2, i));
    let half_p2 = int_pow(2, i - 1);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    Ok(match case {
        FunctionCase::I => (
            quotient(one, &p3 + BigInt::from(1)),
            quotient(p2.clone(), &p3 + &p2),
        ),
        FunctionCase::II => (
            quotient(one, &p3 - BigInt::from(1)),
            quotient(p2, &p3 + &half_p2),
        ),
        FunctionCase::III => (
            quotient(two, &p3 + BigInt::from(1)),
            quotient(half_p2.clone(), &p3 - &half_p2),
        ),
        FunctionCase::IV => (
            quotient(two, &p3 - BigInt::from(1)),
            quotient(half_p2, &p3 - &p2),
        ),
        FunctionCase::V | FunctionCase::VI => {
            let j = match j {
                Some(j) if j > i => j,
                _ => {
                    return Err(Error::Parameter(format!(
                        "case {case} requires j > i = {i}"
                    )))
                }
            };
            let d = j - i;
            let (q3, q2) = (int_pow(3, d), int_pow(2, d));
            let scale = ratio(2, 3).pow(i as u64);
            let pj = int_pow(3, j);
            if case == FunctionCase::V {
                (
                    quotient(one, pj + &p3),
                    scale * quotient(q2.clone(), q3 + q2),
                )
            } else {
                (
                    quotient(one, pj - &p3),
                    scale * quotient(q2, q3 + int_pow(2, d - 1)),
                )
            }
        }
    })
}
