use malachite_base::num::arithmetic::traits::{Abs, CeilingSqrt, DivRound, FloorSqrt, PowerOf2};
use malachite_base::num::basic::traits::Zero;
use malachite_base::rounding_modes::RoundingMode;

use crate::antiderivative::{base_table, AntiderivativeTable};
use crate::error::{check_level, Result};
use crate::numeric::rational::{format_fixed, BigNat, BigRational};

pub const ARC_LEVEL_CAP: u32 = 12;

/// Fractional bits kept for each square root (about 38 decimal digits).
const SQRT_BITS: u64 = 128;

/// Length of the polygonal graph of `F_i`, enclosed in `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcLengthReport {
    pub level: u32,
    pub lower: BigRational,
    pub upper: BigRational,
    /// `Σ|Δx| + Σ|Δy|`, an upper bound for every polygonal length.
    pub taxicab: BigRational,
    pub segments: usize,
}

impl ArcLengthReport {
    pub fn midpoint(&self) -> BigRational {
        (&self.lower + &self.upper) / BigRational::from(2u32)
    }

    pub fn decimal(&self, places: usize) -> String {
        format_fixed(&self.midpoint(), places)
    }
}

/// Exact `Δx² + Δy²` for every segment of the table.
pub fn squared_segment_lengths(table: &AntiderivativeTable) -> Vec<BigRational> {
    table
        .table()
        .segments()
        .map(|(a, b)| {
            let (dx, dy) = (&b.x - &a.x, &b.y - &a.y);
            &dx * &dx + &dy * &dy
        })
        .collect()
}

fn report(table: &AntiderivativeTable) -> ArcLengthReport {
    let mut lower = BigNat::ZERO;
    let mut upper = BigNat::ZERO;
    let squares = squared_segment_lengths(table);
    for s in &squares {
        let (num, den) = s.numerator_and_denominator_ref();
        let shifted = num << (2 * SQRT_BITS);
        lower += (&shifted)
            .div_round(den, RoundingMode::Floor)
            .0
            .floor_sqrt();
        upper += shifted
            .div_round(den, RoundingMode::Ceiling)
            .0
            .ceiling_sqrt();
    }
    let scale = BigRational::power_of_2(SQRT_BITS);
    let taxicab = table
        .table()
        .segments()
        .map(|(a, b)| (&b.x - &a.x).abs() + (&b.y - &a.y).abs())
        .sum();
    ArcLengthReport {
        level: table.level(),
        lower: BigRational::from(lower) / &scale,
        upper: BigRational::from(upper) / scale,
        taxicab,
        segments: squares.len(),
    }
}

/// Reports for `L_0, ..., L_max`, refining one table incrementally.
pub fn arc_lengths(max_level: u32) -> Result<Vec<ArcLengthReport>> {
    check_level(max_level, ARC_LEVEL_CAP)?;
    let mut table = base_table();
    let mut reports = vec![report(&table)];
    for _ in 0..max_level {
        table = table.refine()?;
        reports.push(report(&table));
    }
    Ok(reports)
}

pub fn arc_length(level: u32) -> Result<ArcLengthReport> {
    Ok(arc_lengths(level)?.pop().expect("at least level 0"))
}
