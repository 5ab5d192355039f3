use malachite_base::num::arithmetic::traits::Abs;
use malachite_base::num::basic::traits::{One, Zero};

use super::{digit_step_map, FamilyParam};
use crate::error::{Error, Result};
use crate::numeric::affine::AffineMap;
use crate::numeric::rational::{check_unit, parse_decimal, BigRational};
use crate::numeric::ternary::TernaryDigits;

/// Encloses `f(x)` for a decimal `x` in an interval of width at most `tol`.
///
/// The digits are consumed lazily, so decimals whose exact ternary period is
/// enormous (any denominator `10^k`) cost only as many steps as the tolerance
/// demands. After `n` digits the composed map sends `[0, 1]` onto an interval
/// of width `(2/3)^(#0s + #2s) (1/3)^(#1s)`.
pub fn approx_eval(x: &str, tol: &BigRational) -> Result<(BigRational, BigRational)> {
    if *tol <= BigRational::ZERO {
        return Err(Error::Parameter("tolerance must be positive".into()));
    }
    let x = parse_decimal(x)?;
    check_unit(&x)?;
    if x == BigRational::ONE {
        return Ok((BigRational::ONE, BigRational::ONE));
    }
    let param = FamilyParam::classical();
    let steps = [
        digit_step_map(0, &param)?,
        digit_step_map(1, &param)?,
        digit_step_map(2, &param)?,
    ];
    let mut digits = TernaryDigits::new(&x)?;
    let mut walk = AffineMap::identity();
    loop {
        if digits.exhausted() {
            let exact = walk.apply(&BigRational::ZERO);
            return Ok((exact.clone(), exact));
        }
        if walk.slope().abs() <= *tol {
            let (a, b) = (
                walk.apply(&BigRational::ZERO),
                walk.apply(&BigRational::ONE),
            );
            return Ok(if a <= b { (a, b) } else { (b, a) });
        }
        let d = digits.next().expect("digit stream is infinite");
        walk = walk.compose(&steps[d as usize]);
    }
}
