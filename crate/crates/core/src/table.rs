//! Piecewise-linear functions sampled on the ternary grid `k / 3^level`.

use malachite_base::num::arithmetic::traits::Floor;

use crate::error::Result;
use crate::numeric::rational::{check_unit, pow3, BigRational};

/// A point of the unit square `[0,1] x [0,1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlanePoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl PlanePoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        PlanePoint { x, y }
    }
}

/// Breakpoints `(k/3^level, y_k)` for `k = 0..=3^level`, affine in between.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakpointTable {
    level: u32,
    points: Vec<PlanePoint>,
}

impl BreakpointTable {
    pub(crate) fn from_points(level: u32, points: Vec<PlanePoint>) -> Self {
        debug_assert_eq!(points.len() as u64, 3u64.pow(level) + 1);
        BreakpointTable { level, points }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn ys(&self) -> impl Iterator<Item = &BigRational> {
        self.points.iter().map(|p| &p.y)
    }

    /// Consecutive breakpoint pairs, left to right.
    pub fn segments(&self) -> impl Iterator<Item = (&PlanePoint, &PlanePoint)> {
        self.points.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Exact linear interpolation between the two breakpoints bracketing `x`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        check_unit(x)?;
        let cells = BigRational::from(pow3(self.level as u64));
        let scaled = x * &cells;
        let last = self.points.len() - 2;
        let k = usize::try_from(&(&scaled).floor())
            .unwrap_or(last)
            .min(last);
        let (left, right) = (&self.points[k], &self.points[k + 1]);
        if *x == left.x {
            return Ok(left.y.clone());
        }
        let offset = scaled - BigRational::from(k);
        Ok(&left.y + offset * (&right.y - &left.y))
    }
}
