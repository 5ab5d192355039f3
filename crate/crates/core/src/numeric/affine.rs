//! One-dimensional affine maps `v -> slope * v + intercept` over the rationals.

use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use super::rational::{render, BigInt, BigNat, BigRational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    slope: BigRational,
    intercept: BigRational,
}

impl AffineMap {
    pub fn new(slope: BigRational, intercept: BigRational) -> Self {
        AffineMap { slope, intercept }
    }

    pub fn identity() -> Self {
        AffineMap::new(BigRational::ONE, BigRational::ZERO)
    }

    pub fn constant(value: BigRational) -> Self {
        AffineMap::new(BigRational::ZERO, value)
    }

    pub fn slope(&self) -> &BigRational {
        &self.slope
    }

    pub fn intercept(&self) -> &BigRational {
        &self.intercept
    }

    pub fn apply(&self, v: &BigRational) -> BigRational {
        &self.slope * v + &self.intercept
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &AffineMap) -> AffineMap {
        AffineMap {
            slope: &self.slope * &inner.slope,
            intercept: &self.slope * &inner.intercept + &self.intercept,
        }
    }

    /// The unique `v` with `self(v) = v`, i.e. `intercept / (1 - slope)`.
    pub fn fixed_point(&self) -> Result<BigRational> {
        if self.slope == BigRational::ONE {
            return Err(Error::Singular);
        }
        Ok(&self.intercept / (BigRational::ONE - &self.slope))
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v -> {}*v + {}",
            render(&self.slope),
            render(&self.intercept)
        )
    }
}

pub fn affine_compose(outer: &AffineMap, inner: &AffineMap) -> AffineMap {
    outer.compose(inner)
}

pub fn affine_fixed_point(m: &AffineMap) -> Result<BigRational> {
    m.fixed_point()
}

/// Affine map with a shared, unreduced integer denominator:
/// `v -> (slope * v + intercept) / denominator`.
///
/// Composing long digit cycles with reduced rationals spends most of its time
/// in gcd. Here composition is plain integer multiplication, and only the final
/// fixed point is reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerAffine {
    pub slope: BigInt,
    pub intercept: BigInt,
    pub denominator: BigNat,
}

impl IntegerAffine {
    pub fn new(slope: BigInt, intercept: BigInt, denominator: BigNat) -> Self {
        assert!(denominator != BigNat::ZERO, "zero denominator");
        IntegerAffine {
            slope,
            intercept,
            denominator,
        }
    }

    pub fn identity() -> Self {
        IntegerAffine::new(BigInt::ONE, BigInt::ZERO, BigNat::ONE)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &IntegerAffine) -> IntegerAffine {
        IntegerAffine {
            slope: &self.slope * &inner.slope,
            intercept: &self.slope * &inner.intercept
                + &self.intercept * &BigInt::from(&inner.denominator),
            denominator: &self.denominator * &inner.denominator,
        }
    }

    /// Composes `maps[0] ∘ maps[1] ∘ ... ∘ maps[n-1]` with a balanced product
    /// tree, so operand sizes stay matched and multiplication stays fast.
    pub fn compose_all(maps: &[IntegerAffine]) -> IntegerAffine {
        match maps.len() {
            0 => IntegerAffine::identity(),
            1 => maps[0].clone(),
            n => {
                let (left, right) = maps.split_at(n / 2);
                Self::compose_all(left).compose(&Self::compose_all(right))
            }
        }
    }

    pub fn to_affine(&self) -> AffineMap {
        let den = BigInt::from(&self.denominator);
        AffineMap::new(
            BigRational::from_integers_ref(&self.slope, &den),
            BigRational::from_integers_ref(&self.intercept, &den),
        )
    }

    /// `intercept / (denominator - slope)`, reduced once.
    pub fn fixed_point(&self) -> Result<BigRational> {
        let gap = BigInt::from(&self.denominator) - &self.slope;
        if gap == BigInt::ZERO {
            return Err(Error::Singular);
        }
        Ok(BigRational::from_integers_ref(&self.intercept, &gap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::ratio;

    fn map(s: (i64, i64), c: (i64, i64)) -> AffineMap {
        AffineMap::new(ratio(s.0, s.1), ratio(c.0, c.1))
    }

    #[test]
    fn composition_examples() {
        assert_eq!(
            affine_compose(&map((2, 1), (0, 1)), &map((1, 1), (1, 1))),
            map((2, 1), (2, 1))
        );
        let m = map((3, 7), (-2, 5));
        assert_eq!(affine_compose(&AffineMap::identity(), &m), m);
        assert_eq!(
            affine_compose(&map((2, 3), (0, 1)), &map((2, 3), (1, 3))),
            map((4, 9), (2, 9))
        );
    }

    #[test]
    fn fixed_point_examples() {
        assert_eq!(
            affine_fixed_point(&map((4, 9), (2, 9))).unwrap(),
            ratio(2, 5)
        );
        assert_eq!(
            affine_fixed_point(&map((0, 1), (7, 3))).unwrap(),
            ratio(7, 3)
        );
        assert_eq!(
            affine_fixed_point(&map((-1, 3), (2, 3))).unwrap(),
            ratio(1, 2)
        );
        assert_eq!(
            affine_fixed_point(&map((1, 1), (1, 2))),
            Err(Error::Singular)
        );
    }

    #[test]
    fn integer_form_agrees_with_rational_form() {
        let maps: Vec<IntegerAffine> = [(2, 0), (-1, 2), (2, 1), (-1, 2), (2, 0)]
            .iter()
            .map(|&(s, c)| IntegerAffine::new(BigInt::from(s), BigInt::from(c), BigNat::from(3u32)))
            .collect();
        let tree = IntegerAffine::compose_all(&maps);
        let folded = maps
            .iter()
            .fold(AffineMap::identity(), |acc, m| acc.compose(&m.to_affine()));
        assert_eq!(tree.to_affine(), folded);
        assert_eq!(tree.fixed_point().unwrap(), folded.fixed_point().unwrap());
        let singular = IntegerAffine::new(BigInt::from(3), BigInt::ONE, BigNat::from(3u32));
        assert_eq!(singular.fixed_point(), Err(Error::Singular));
    }
}
