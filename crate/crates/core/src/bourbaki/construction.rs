use malachite_base::num::basic::traits::{One, Zero};

use super::{FamilyParam, IterateTable};
use crate::error::{check_level, Result};
use crate::numeric::rational::{check_unit, BigRational};
use crate::table::{BreakpointTable, PlanePoint};

/// Largest level for which whole tables are materialized (1,594,324 breakpoints).
pub const LEVEL_CAP: u32 = 13;

/// One refinement step: every segment `[k, k+1]/3^i` gains breakpoints at
/// `(3k+1)/3^(i+1)` and `(3k+2)/3^(i+1)`, raised by fractions `a` and `1 - a`
/// of the segment's rise; the old breakpoints keep their values.
pub(crate) fn refine(points: &[PlanePoint], level: u32, a: &BigRational) -> Vec<PlanePoint> {
    let denominator = 3u64.pow(level + 1);
    let complement = BigRational::ONE - a;
    let grid = |k: u64| BigRational::from_unsigneds(k, denominator);
    let mut refined = Vec::with_capacity(3 * points.len() - 2);
    refined.push(points[0].clone());
    for (k, pair) in points.windows(2).enumerate() {
        let (left, right) = (&pair[0], &pair[1]);
        let k = k as u64;
        let rise = &right.y - &left.y;
        refined.push(PlanePoint::new(grid(3 * k + 1), &left.y + a * &rise));
        refined.push(PlanePoint::new(
            grid(3 * k + 2),
            &left.y + &complement * &rise,
        ));
        refined.push(right.clone());
    }
    refined
}

/// Builds the breakpoint table of `f_i` for the given family member,
/// starting from `f_0(x) = x`.
pub fn build_iterate(level: u32, param: &FamilyParam) -> Result<IterateTable> {
    check_level(level, LEVEL_CAP)?;
    let mut points = vec![
        PlanePoint::new(BigRational::ZERO, BigRational::ZERO),
        PlanePoint::new(BigRational::ONE, BigRational::ONE),
    ];
    for i in 0..level {
        points = refine(&points, i, param.value());
    }
    Ok(IterateTable {
        param: param.clone(),
        table: BreakpointTable::from_points(level, points),
    })
}

pub fn eval_iterate(table: &IterateTable, x: &BigRational) -> Result<BigRational> {
    table.eval(x)
}

/// The level-`level` segment of `f_i` whose closed x-interval contains `x`,
/// found by following the refinement rule down one third at a time instead of
/// materializing all `3^level + 1` breakpoints. When `x` is a grid point the
/// segment to its left is returned (the right one for `x = 0`).
pub fn iterate_segment(
    level: u32,
    x: &BigRational,
    param: &FamilyParam,
) -> Result<(PlanePoint, PlanePoint)> {
    check_unit(x)?;
    let a = param.value();
    let complement = BigRational::ONE - a;
    let mut left = PlanePoint::new(BigRational::ZERO, BigRational::ZERO);
    let mut right = PlanePoint::new(BigRational::ONE, BigRational::ONE);
    for _ in 0..level {
        let third = (&right.x - &left.x) / BigRational::from(3u32);
        let rise = &right.y - &left.y;
        let one_third = PlanePoint::new(&left.x + &third, &left.y + a * &rise);
        let two_thirds = PlanePoint::new(&one_third.x + &third, &left.y + &complement * &rise);
        if *x <= one_third.x {
            right = one_third;
        } else if *x <= two_thirds.x {
            left = one_third;
            right = two_thirds;
        } else {
            left = two_thirds;
        }
    }
    Ok((left, right))
}
