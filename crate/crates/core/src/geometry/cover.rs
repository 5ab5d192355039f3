use std::collections::BTreeMap;

use malachite_base::num::basic::traits::{One, Zero};

use super::enclosure::Enclosure;
use crate::bourbaki::Contraction;
use crate::error::{check_level, Result};
use crate::numeric::rational::{ratio, BigRational};

pub const COVER_LEVEL_CAP: u32 = 10;
pub const MASS_BOUND_CAP: u32 = 8;

/// One rectangle of `E_i`: the image of the unit square under the
/// contractions named by `digits` (0, 1, 2 for w1, w2, w3, outermost first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRectangle {
    pub x_interval: (BigRational, BigRational),
    pub y_interval: (BigRational, BigRational),
    pub digits: Vec<u8>,
}

impl CoverRectangle {
    pub fn unit() -> Self {
        CoverRectangle {
            x_interval: (BigRational::ZERO, BigRational::ONE),
            y_interval: (BigRational::ZERO, BigRational::ONE),
            digits: Vec::new(),
        }
    }

    pub fn width(&self) -> BigRational {
        &self.x_interval.1 - &self.x_interval.0
    }

    pub fn height(&self) -> BigRational {
        &self.y_interval.1 - &self.y_interval.0
    }

    pub fn area(&self) -> BigRational {
        self.width() * self.height()
    }

    /// Squared Euclidean diameter.
    pub fn diameter_squared(&self) -> BigRational {
        let (w, h) = (self.width(), self.height());
        &w * &w + &h * &h
    }

    pub fn contains(&self, x: &BigRational, y: &BigRational) -> bool {
        self.x_interval.0 <= *x
            && *x <= self.x_interval.1
            && self.y_interval.0 <= *y
            && *y <= self.y_interval.1
    }

    fn image(&self, w: Contraction) -> CoverRectangle {
        let mut digits = Vec::with_capacity(self.digits.len() + 1);
        digits.push(w.digit());
        digits.extend_from_slice(&self.digits);
        CoverRectangle {
            x_interval: w.map_x_interval(&self.x_interval.0, &self.x_interval.1),
            y_interval: w.map_y_interval(&self.y_interval.0, &self.y_interval.1),
            digits,
        }
    }
}

/// The `3^i` rectangles of `E_i`, ordered left to right.
pub fn cover_level(level: u32) -> Result<Vec<CoverRectangle>> {
    check_level(level, COVER_LEVEL_CAP)?;
    let mut rects = vec![CoverRectangle::unit()];
    for _ in 0..level {
        let mut next = Vec::with_capacity(3 * rects.len());
        next.extend(rects.iter().map(|r| r.image(Contraction::W1)));
        next.extend(rects.iter().rev().map(|r| r.image(Contraction::W2)));
        next.extend(rects.iter().map(|r| r.image(Contraction::W3)));
        rects = next;
    }
    Ok(rects)
}

fn digit_weight(d: u8) -> Result<BigRational> {
    Ok(match Contraction::from_digit(d)? {
        Contraction::W2 => ratio(1, 5),
        _ => ratio(2, 5),
    })
}

/// Natural mass of the cover piece addressed by `digits`.
pub fn interval_mass(digits: &[u8]) -> Result<BigRational> {
    digits
        .iter()
        .try_fold(BigRational::ONE, |m, &d| Ok(m * digit_weight(d)?))
}

/// The natural mass distribution restricted to level `i` pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MassMeasure {
    pub level: u32,
    pub weights: BTreeMap<Vec<u8>, BigRational>,
}

impl MassMeasure {
    pub fn new(level: u32) -> Result<Self> {
        check_level(level, COVER_LEVEL_CAP)?;
        let mut weights = BTreeMap::from([(Vec::new(), BigRational::ONE)]);
        for _ in 0..level {
            let mut next = BTreeMap::new();
            for (path, mass) in &weights {
                for d in 0..3u8 {
                    let mut child = path.clone();
                    child.push(d);
                    next.insert(child, mass * digit_weight(d)?);
                }
            }
            weights = next;
        }
        Ok(MassMeasure { level, weights })
    }

    pub fn total(&self) -> BigRational {
        self.weights.values().sum()
    }

    pub fn weight(&self, digits: &[u8]) -> Option<&BigRational> {
        self.weights.get(digits)
    }
}

/// Checks `mass(U) <= 5 diam(U)^(log_3 5)` on every level-`i` rectangle.
///
/// Taking logarithms and multiplying by `ln 3 > 0` gives the equivalent
/// `ln 3 (ln mass - ln 5) <= (ln 5 / 2) ln diam^2`, which is decided with
/// outward-rounded enclosures: a pass is reported only if the upper bound of
/// the left side is below the lower bound of the right side.
pub fn mass_bound_check(level: u32) -> Result<bool> {
    check_level(level, MASS_BOUND_CAP)?;
    let ln3 = Enclosure::ln(&BigRational::from(3u32));
    let ln5 = Enclosure::ln(&BigRational::from(5u32));
    let half_ln5 = ln5.scale(&ratio(1, 2));
    let mut logs: BTreeMap<BigRational, Enclosure> = BTreeMap::new();
    let mut ln = |x: BigRational| logs.entry(x).or_insert_with_key(Enclosure::ln).clone();
    for rect in cover_level(level)? {
        let lhs = ln3.mul(&ln(interval_mass(&rect.digits)?).sub(&ln5));
        let rhs = half_ln5.mul(&ln(rect.diameter_squared()));
        if lhs.upper() > rhs.lower() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn total_area(level: u32) -> BigRational {
        cover_level(level)
            .unwrap()
            .iter()
            .map(CoverRectangle::area)
            .sum()
    }

    #[test]
    fn first_levels() {
        let e0 = cover_level(0).unwrap();
        assert_eq!(e0, vec![CoverRectangle::unit()]);
        assert_eq!(total_area(1), ratio(5, 9));
        assert_eq!(total_area(2), ratio(25, 81));
        let e1 = cover_level(1).unwrap();
        assert_eq!(e1[1].x_interval, (ratio(1, 3), ratio(2, 3)));
        assert_eq!(e1[1].y_interval, (ratio(1, 3), ratio(2, 3)));
        assert_eq!(e1[2].y_interval, (ratio(1, 3), ratio(1, 1)));
        assert!(matches!(cover_level(11), Err(Error::Resource { .. })));
    }

    #[test]
    fn rectangles_tile_the_unit_interval() {
        let rects = cover_level(4).unwrap();
        assert_eq!(rects.len(), 81);
        for (k, r) in rects.iter().enumerate() {
            assert_eq!(r.x_interval.0, ratio(k as i64, 81));
            assert_eq!(r.width(), ratio(1, 81));
        }
    }

    #[test]
    fn masses() {
        assert_eq!(interval_mass(&[]).unwrap(), ratio(1, 1));
        assert_eq!(interval_mass(&[1]).unwrap(), ratio(1, 5));
        assert_eq!(interval_mass(&[0, 0]).unwrap(), ratio(4, 25));
        assert_eq!(interval_mass(&[0, 3]), Err(Error::InvalidDigit(3)));
        let m = MassMeasure::new(4).unwrap();
        assert_eq!(m.weights.len(), 81);
        assert_eq!(m.total(), ratio(1, 1));
        assert_eq!(m.weight(&[2, 1, 0, 2]), Some(&ratio(8, 625)));
    }

    #[test]
    fn mass_bound_small_levels() {
        assert!(mass_bound_check(1).unwrap());
        assert!(mass_bound_check(3).unwrap());
        assert!(matches!(mass_bound_check(9), Err(Error::Resource { .. })));
    }
}
