use malachite_base::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::affine::{AffineMap, IntegerAffine};
use crate::numeric::rational::{check_unit, ratio, render, BigInt, BigNat, BigRational};
use crate::numeric::ternary::{from_ternary, to_ternary};

/// State of the digit walk for `F`: `f_map` gives `F(tail_value)` as an affine
/// function of `F` at the point the walk started from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitStatePair {
    pub tail_value: BigRational,
    pub f_map: AffineMap,
}

impl DigitStatePair {
    pub fn start(t: BigRational) -> Self {
        DigitStatePair {
            tail_value: t,
            f_map: AffineMap::identity(),
        }
    }
}

/// The affine map `F(t) -> F((d + t) / 3)`.
fn step_map(d: u8, t: &BigRational) -> Result<AffineMap> {
    let ninth = ratio(1, 9);
    Ok(match d {
        0 => AffineMap::new(ratio(2, 9), BigRational::ZERO),
        1 => AffineMap::new(
            -&ninth,
            &ninth * (BigRational::ONE + BigRational::from(2u32) * t),
        ),
        2 => AffineMap::new(ratio(2, 9), &ninth * (ratio(5, 2) + t)),
        _ => return Err(Error::InvalidDigit(d)),
    })
}

/// Prepends digit `d` to the walk: the new tail is `(d + t) / 3` and the map is
/// extended by the corresponding integral relation.
pub fn digit_step(d: u8, t: &BigRational, m: &AffineMap) -> Result<DigitStatePair> {
    let step = step_map(d, t)?;
    Ok(DigitStatePair {
        tail_value: (BigRational::from(d) + t) / BigRational::from(3u32),
        f_map: step.compose(m),
    })
}

/// `F` at a purely periodic point `t0 = u/Q`.
///
/// Every tail inside the period is `r/Q` for an integer `r`, so in the scaled
/// unknown `w = 2Q F` each digit relation becomes `(α w + β) / 9` with integer
/// coefficients, and the whole period composes without any gcd.
fn periodic_value(period: &[u8], t0: &BigRational) -> Result<BigRational> {
    let (u, q) = t0.to_numerator_and_denominator();
    let q = BigInt::from(q);
    let three = BigInt::from(3);
    // tails[j] = numerator of the tail after j period digits
    let mut tails = Vec::with_capacity(period.len() + 1);
    tails.push(BigInt::from(u));
    for &d in period {
        let next = &three * tails.last().unwrap() - BigInt::from(d) * &q;
        tails.push(next);
    }
    if tails.last() != tails.first() {
        return Err(Error::Consistency("periodic tail does not close".into()));
    }
    let nine = BigNat::from(9u32);
    let maps: Vec<IntegerAffine> = period
        .iter()
        .zip(&tails[1..])
        .map(|(&d, r)| match d {
            0 => IntegerAffine::new(BigInt::from(2), BigInt::ZERO, nine.clone()),
            1 => IntegerAffine::new(
                BigInt::from(-1),
                BigInt::from(2) * &q + BigInt::from(4) * r,
                nine.clone(),
            ),
            _ => IntegerAffine::new(
                BigInt::from(2),
                BigInt::from(5) * &q + BigInt::from(2) * r,
                nine.clone(),
            ),
        })
        .collect();
    let scaled = IntegerAffine::compose_all(&maps).fixed_point()?;
    Ok(scaled / BigRational::from(BigInt::from(2) * q))
}

/// `F(x) = ∫_0^x f` exactly, for rational `x` in `[0, 1]`.
pub fn eval_exact(x: &BigRational) -> Result<BigRational> {
    check_unit(x)?;
    let expansion = to_ternary(x)?;
    let (t0, base) = if expansion.is_terminating() {
        (BigRational::ZERO, BigRational::ZERO)
    } else {
        let t0 = from_ternary(&expansion.periodic_part());
        let value = periodic_value(expansion.period(), &t0)?;
        (t0, value)
    };
    let mut state = DigitStatePair::start(t0);
    for &d in expansion.preperiod().iter().rev() {
        state = digit_step(d, &state.tail_value, &state.f_map)?;
    }
    debug_assert_eq!(&state.tail_value, x);
    Ok(state.f_map.apply(&base))
}

/// `∫_x^(1-x) f = 1/2 - x`; negative (oriented) for `x > 1/2`.
pub fn integral_symmetric(x: &BigRational) -> Result<BigRational> {
    check_unit(x)?;
    Ok(ratio(1, 2) - x)
}

/// `∫_a^b f = F(b) - F(a)`.
pub fn range_integral(a: &BigRational, b: &BigRational) -> Result<BigRational> {
    check_unit(a)?;
    check_unit(b)?;
    if a > b {
        return Err(Error::Order {
            lower: render(a),
            upper: render(b),
        });
    }
    Ok(eval_exact(b)? - eval_exact(a)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_steps() {
        let id = AffineMap::identity();
        let s = digit_step(1, &ratio(0, 1), &id).unwrap();
        assert_eq!(s.tail_value, ratio(1, 3));
        assert_eq!(s.f_map.apply(&ratio(0, 1)), ratio(1, 9));
        let s = digit_step(2, &ratio(0, 1), &id).unwrap();
        assert_eq!(s.f_map.apply(&ratio(0, 1)), ratio(5, 18));
        let s = digit_step(0, &ratio(1, 1), &id).unwrap();
        assert_eq!(s.tail_value, ratio(1, 3));
        assert_eq!(s.f_map.apply(&ratio(1, 2)), ratio(1, 9));
        assert!(digit_step(5, &ratio(0, 1), &id).is_err());
    }

    #[test]
    fn known_values() {
        assert_eq!(eval_exact(&ratio(1, 1)).unwrap(), ratio(1, 2));
        assert_eq!(eval_exact(&ratio(1, 4)).unwrap(), ratio(1, 14));
        assert_eq!(eval_exact(&ratio(1, 2)).unwrap(), ratio(1, 5));
        assert_eq!(eval_exact(&ratio(2, 3)).unwrap(), ratio(5, 18));
        assert_eq!(eval_exact(&ratio(1, 3)).unwrap(), ratio(1, 9));
        assert_eq!(eval_exact(&ratio(0, 1)).unwrap(), ratio(0, 1));
    }

    #[test]
    fn symmetric_and_range_integrals() {
        assert_eq!(integral_symmetric(&ratio(0, 1)).unwrap(), ratio(1, 2));
        assert_eq!(integral_symmetric(&ratio(1, 2)).unwrap(), ratio(0, 1));
        assert_eq!(integral_symmetric(&ratio(1, 3)).unwrap(), ratio(1, 6));
        assert_eq!(
            range_integral(&ratio(1, 3), &ratio(2, 3)).unwrap(),
            ratio(1, 6)
        );
        assert_eq!(
            range_integral(&ratio(3, 7), &ratio(3, 7)).unwrap(),
            ratio(0, 1)
        );
        assert!(matches!(
            range_integral(&ratio(2, 3), &ratio(1, 3)),
            Err(Error::Order { .. })
        ));
        for x in [ratio(1, 3), ratio(2, 7), ratio(9, 10)] {
            let direct = eval_exact(&(ratio(1, 1) - &x)).unwrap() - eval_exact(&x).unwrap();
            assert_eq!(integral_symmetric(&x).unwrap(), direct);
        }
    }
}
