//! Box counting, the `E_i` cover with its natural mass distribution, and arc
//! length of the antiderivative's graph.

mod arc;
mod cover;
mod enclosure;

use malachite_base::num::arithmetic::traits::{Ceiling, Floor};
use malachite_base::num::basic::traits::One;
use malachite_base::num::logic::traits::SignificantBits;

use crate::bourbaki::{build_iterate, FamilyParam};
use crate::error::{check_level, Error, Result};
use crate::numeric::rational::{pow_nat, third_power, BigInt, BigNat, BigRational};

pub use arc::{arc_length, arc_lengths, squared_segment_lengths, ArcLengthReport};
pub use cover::{cover_level, interval_mass, mass_bound_check, CoverRectangle, MassMeasure};
pub use enclosure::Enclosure;

pub const BOX_LEVEL_CAP: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxCountReport {
    pub level: u32,
    pub delta: BigRational,
    pub count: BigNat,
}

/// Counts grid boxes of side `3^-i` met by the graph of `f_i`.
///
/// Each segment lies over exactly one grid column; it meets the boxes whose
/// rows cover `[floor(y_lo 3^i), ceil(y_hi 3^i))`, and at least one box.
pub fn box_count(level: u32) -> Result<BoxCountReport> {
    check_level(level, BOX_LEVEL_CAP)?;
    let table = build_iterate(level, &FamilyParam::classical())?;
    let scale = BigRational::from(pow_nat(3, level as u64));
    let one = BigInt::ONE;
    let mut count = BigInt::from(0);
    for (a, b) in table.table().segments() {
        let (lo, hi) = if a.y <= b.y {
            (&a.y, &b.y)
        } else {
            (&b.y, &a.y)
        };
        let rows = (hi * &scale).ceiling() - (lo * &scale).floor();
        count += if rows < one { one.clone() } else { rows };
    }
    Ok(BoxCountReport {
        level,
        delta: third_power(level as u64),
        count: BigNat::try_from(count).expect("count is positive"),
    })
}

/// `log N / (i log 3)` for the deepest report.
pub fn dimension_estimate(reports: &[BoxCountReport]) -> Result<f64> {
    let deepest = reports
        .iter()
        .max_by_key(|r| r.level)
        .ok_or_else(|| Error::Empty("no box-count reports".into()))?;
    if deepest.level == 0 {
        return Err(Error::Empty("a report with level >= 1 is required".into()));
    }
    Ok(ln_natural(&deepest.count) / (deepest.level as f64 * 3f64.ln()))
}

fn ln_natural(n: &BigNat) -> f64 {
    // split off a power of two so huge counts do not overflow f64
    let bits = n.significant_bits();
    let shift = bits.saturating_sub(64);
    let top = u64::try_from(&(n >> shift)).expect("fits after shift");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_counts() {
        let counts: Vec<BigNat> = (0..=3).map(|i| box_count(i).unwrap().count).collect();
        assert_eq!(counts, [1u32, 5, 25, 125].map(BigNat::from));
        assert_eq!(box_count(2).unwrap().delta, third_power(2));
        assert!(matches!(box_count(11), Err(Error::Resource { .. })));
    }

    #[test]
    fn dimension() {
        let target = 5f64.ln() / 3f64.ln();
        let r1 = box_count(1).unwrap();
        assert!((dimension_estimate(std::slice::from_ref(&r1)).unwrap() - target).abs() < 1e-12);
        let r4 = BoxCountReport {
            level: 4,
            delta: third_power(4),
            count: BigNat::from(625u32),
        };
        assert!((dimension_estimate(&[r1, r4]).unwrap() - target).abs() < 1e-12);
        let r0 = box_count(0).unwrap();
        assert!(matches!(dimension_estimate(&[r0]), Err(Error::Empty(_))));
        assert!(matches!(dimension_estimate(&[]), Err(Error::Empty(_))));
    }
}
