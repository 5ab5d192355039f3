//! The antiderivative `F(x) = ∫_0^x f(t) dt` of Bourbaki's function.
//!
//! Integrating the three self-similarity relations of `f` over each third of
//! `[0, 1]` gives, for `t` in `[0, 1]`,
//!
//! ```text
//! F(t / 3)       = (2/9) F(t)
//! F((1 + t) / 3) = (1/9) (1 + 2t - F(t))
//! F((2 + t) / 3) = (1/9) (5/2 + t) + (2/9) F(t)
//! ```
//!
//! which drive both the iterate tables `F_i` and exact evaluation.

mod closed_form;
mod exact;

use malachite_base::num::basic::traits::{One, Zero};

use crate::error::{check_level, Error, Result};
use crate::numeric::rational::{ratio, render, BigRational};
use crate::table::{BreakpointTable, PlanePoint};

pub use closed_form::{integral_closed_form, IntegralCase};
pub use exact::{digit_step, eval_exact, integral_symmetric, range_integral, DigitStatePair};

pub const LEVEL_CAP: u32 = 13;

/// Breakpoint table of the level-`i` iterate `F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiderivativeTable {
    table: BreakpointTable,
}

type PointMap<'a> = Box<dyn Fn(&PlanePoint) -> PlanePoint + 'a>;

impl AntiderivativeTable {
    pub fn level(&self) -> u32 {
        self.table.level()
    }

    pub fn breakpoints(&self) -> &[PlanePoint] {
        self.table.points()
    }

    pub fn table(&self) -> &BreakpointTable {
        &self.table
    }

    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        self.table.eval(x)
    }

    /// One refinement step: the whole table is mapped into each third of
    /// `[0, 1]` by the three integral relations.
    pub fn refine(&self) -> Result<AntiderivativeTable> {
        let points = self.table.points();
        let three = BigRational::from(3u32);
        let (two_ninths, ninth) = (ratio(2, 9), ratio(1, 9));
        let five_halves = ratio(5, 2);
        let thirds: [PointMap; 3] = [
            Box::new(|p| PlanePoint::new(&p.x / &three, &two_ninths * &p.y)),
            Box::new(|p| {
                PlanePoint::new(
                    (BigRational::ONE + &p.x) / &three,
                    &ninth * (BigRational::ONE + BigRational::from(2u32) * &p.x - &p.y),
                )
            }),
            Box::new(|p| {
                PlanePoint::new(
                    (BigRational::from(2u32) + &p.x) / &three,
                    &ninth * (&five_halves + &p.x) + &two_ninths * &p.y,
                )
            }),
        ];
        let mut refined: Vec<PlanePoint> = Vec::with_capacity(3 * points.len() - 2);
        for (third, map) in thirds.iter().enumerate() {
            let mut images = points.iter().map(map);
            if third > 0 {
                let joint = images.next().expect("non-empty table");
                if refined.last() != Some(&joint) {
                    return Err(Error::Consistency(format!(
                        "thirds disagree at x = {}",
                        render(&joint.x)
                    )));
                }
            }
            refined.extend(images);
        }
        // old breakpoints must survive refinement unchanged
        for (k, old) in points.iter().enumerate() {
            if refined[3 * k] != *old {
                return Err(Error::Consistency(format!(
                    "F changed at x = {}",
                    render(&old.x)
                )));
            }
        }
        Ok(AntiderivativeTable {
            table: BreakpointTable::from_points(self.level() + 1, refined),
        })
    }
}

/// `F_0(x) = x / 2`.
pub fn base_table() -> AntiderivativeTable {
    let points = vec![
        PlanePoint::new(BigRational::ZERO, BigRational::ZERO),
        PlanePoint::new(BigRational::ONE, ratio(1, 2)),
    ];
    AntiderivativeTable {
        table: BreakpointTable::from_points(0, points),
    }
}

pub fn build_iterate(level: u32) -> Result<AntiderivativeTable> {
    check_level(level, LEVEL_CAP)?;
    let mut table = base_table();
    for _ in 0..level {
        table = table.refine()?;
    }
    Ok(table)
}
