//! Exact evaluation of `f_a` at any rational argument.
//!
//! Self-similarity gives, for `t` in `[0, 1]` and digit `d`,
//!
//! ```text
//! f_a(t / 3)       = a * f_a(t)
//! f_a((1 + t) / 3) = a - (2a - 1) * f_a(t)
//! f_a((2 + t) / 3) = a * f_a(t) + (1 - a)
//! ```
//!
//! so walking the ternary digits of `x` composes affine maps. A periodic tail
//! composes to a contraction whose fixed point is `f_a` at the tail; the
//! preperiod maps are then applied to that value.

use malachite_base::num::basic::traits::{One, Zero};

use super::FamilyParam;
use crate::error::{Error, Result};
use crate::numeric::affine::{AffineMap, IntegerAffine};
use crate::numeric::rational::{check_unit, BigInt, BigRational};
use crate::numeric::ternary::to_ternary;

/// The map `f_a(t) -> f_a((d + t) / 3)`.
pub fn digit_step_map(d: u8, param: &FamilyParam) -> Result<AffineMap> {
    let a = param.value();
    Ok(match d {
        0 => AffineMap::new(a.clone(), BigRational::ZERO),
        1 => AffineMap::new(BigRational::ONE - a * BigRational::from(2u32), a.clone()),
        2 => AffineMap::new(a.clone(), BigRational::ONE - a),
        _ => return Err(Error::InvalidDigit(d)),
    })
}

/// The same three maps over the common denominator of `a = p/q`:
/// `(p v)/q`, `(p + (q - 2p) v)/q`, `(p v + q - p)/q`.
fn integer_digit_maps(param: &FamilyParam) -> [IntegerAffine; 3] {
    let (p, q) = param.value().to_numerator_and_denominator();
    let (p, qi) = (BigInt::from(p), BigInt::from(&q));
    [
        IntegerAffine::new(p.clone(), BigInt::ZERO, q.clone()),
        IntegerAffine::new(&qi - BigInt::from(2u32) * &p, p.clone(), q.clone()),
        IntegerAffine::new(p.clone(), &qi - &p, q),
    ]
}

/// `f_a(x)` exactly, for rational `x` in `[0, 1]`.
pub fn eval_exact(x: &BigRational, param: &FamilyParam) -> Result<BigRational> {
    check_unit(x)?;
    let expansion = to_ternary(x)?;
    let tail = if expansion.is_terminating() {
        // the exhausted tail is 0 and f_a(0) = 0
        BigRational::ZERO
    } else {
        let maps = integer_digit_maps(param);
        let cycle: Vec<IntegerAffine> = expansion
            .period()
            .iter()
            .map(|&d| maps[d as usize].clone())
            .collect();
        let closed = IntegerAffine::compose_all(&cycle);
        if closed.denominator <= *closed.slope.unsigned_abs_ref() {
            return Err(Error::Consistency("period map is not a contraction".into()));
        }
        closed.fixed_point()?
    };
    let steps = [
        digit_step_map(0, param)?,
        digit_step_map(1, param)?,
        digit_step_map(2, param)?,
    ];
    Ok(expansion
        .preperiod()
        .iter()
        .rev()
        .fold(tail, |v, &d| steps[d as usize].apply(&v)))
}

pub fn eval_exact_classical(x: &BigRational) -> Result<BigRational> {
    eval_exact(x, &FamilyParam::classical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    #[test]
    fn digit_maps() {
        let c = FamilyParam::classical();
        assert_eq!(
            digit_step_map(0, &c).unwrap().apply(&ratio(1, 1)),
            ratio(2, 3)
        );
        assert_eq!(
            digit_step_map(1, &c).unwrap().apply(&ratio(0, 1)),
            ratio(2, 3)
        );
        assert_eq!(
            digit_step_map(2, &c).unwrap().apply(&ratio(0, 1)),
            ratio(1, 3)
        );
        assert_eq!(digit_step_map(3, &c), Err(Error::InvalidDigit(3)));
        // classical forms (2-v)/3 and (2v+1)/3
        assert_eq!(
            digit_step_map(1, &c).unwrap(),
            AffineMap::new(ratio(-1, 3), ratio(2, 3))
        );
        assert_eq!(
            digit_step_map(2, &c).unwrap(),
            AffineMap::new(ratio(2, 3), ratio(1, 3))
        );
    }

    #[test]
    fn known_values() {
        let c = FamilyParam::classical();
        assert_eq!(eval_exact(&ratio(1, 2), &c).unwrap(), ratio(1, 2));
        assert_eq!(eval_exact(&ratio(1, 4), &c).unwrap(), ratio(2, 5));
        assert_eq!(eval_exact(&ratio(1, 7), &c).unwrap(), ratio(8, 23));
        assert_eq!(eval_exact(&ratio(1, 3), &c).unwrap(), ratio(2, 3));
        assert_eq!(eval_exact(&ratio(2, 3), &c).unwrap(), ratio(1, 3));
        assert_eq!(eval_exact(&ratio(0, 1), &c).unwrap(), ratio(0, 1));
        assert_eq!(eval_exact(&ratio(1, 1), &c).unwrap(), ratio(1, 1));
        assert!(matches!(
            eval_exact(&ratio(2, 1), &c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn family_member_at_one_third() {
        for (p, q) in [(1, 5), (1, 2), (7, 9), (99, 100)] {
            let a = FamilyParam::new(ratio(p, q)).unwrap();
            assert_eq!(eval_exact(&ratio(1, 3), &a).unwrap(), ratio(p, q));
            assert_eq!(eval_exact(&ratio(2, 3), &a).unwrap(), ratio(q - p, q));
            assert_eq!(eval_exact(&ratio(1, 1), &a).unwrap(), ratio(1, 1));
        }
    }

    #[test]
    fn one_seventh_fixed_point_equation() {
        // period 010212: the six digit maps compose to v -> (248 + 16 v) / 729
        let c = FamilyParam::classical();
        let cycle = [0u8, 1, 0, 2, 1, 2]
            .iter()
            .map(|&d| digit_step_map(d, &c).unwrap())
            .fold(AffineMap::identity(), |acc, m| acc.compose(&m));
        assert_eq!(cycle, AffineMap::new(ratio(16, 729), ratio(248, 729)));
    }
}
