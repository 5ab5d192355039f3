//! The three contractions of the unit square whose attractor is the graph of `f`:
//!
//! ```text
//! w1(x, y) = (x / 3,       2y / 3)
//! w2(x, y) = ((2 - x) / 3, (1 + y) / 3)
//! w3(x, y) = ((2 + x) / 3, (1 + 2y) / 3)
//! ```

use malachite_base::num::basic::traits::{One, Two};

use super::{FamilyParam, IterateTable};
use crate::error::{Error, Result};
use crate::numeric::rational::{ratio, BigRational};
use crate::table::{BreakpointTable, PlanePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Contraction {
    W1,
    W2,
    W3,
}

impl Contraction {
    pub const ALL: [Contraction; 3] = [Contraction::W1, Contraction::W2, Contraction::W3];

    /// `1`, `2` or `3`.
    pub fn from_index(n: u8) -> Result<Self> {
        match n {
            1 => Ok(Contraction::W1),
            2 => Ok(Contraction::W2),
            3 => Ok(Contraction::W3),
            _ => Err(Error::Parameter(format!("no contraction w{n}"))),
        }
    }

    /// Zero-based address digit: w1 -> 0, w2 -> 1, w3 -> 2.
    pub fn digit(self) -> u8 {
        self as u8
    }

    pub fn from_digit(d: u8) -> Result<Self> {
        Self::from_index(d + 1).map_err(|_| Error::InvalidDigit(d))
    }

    /// w2 flips the horizontal direction.
    pub fn reverses_x(self) -> bool {
        self == Contraction::W2
    }

    /// Vertical contraction factor: 2/3 for w1 and w3, 1/3 for w2.
    pub fn vertical_factor(self) -> BigRational {
        match self {
            Contraction::W2 => ratio(1, 3),
            _ => ratio(2, 3),
        }
    }

    pub fn apply(self, p: &PlanePoint) -> PlanePoint {
        let three = BigRational::from(3u32);
        let (x, y) = match self {
            Contraction::W1 => (&p.x / &three, BigRational::TWO * &p.y / &three),
            Contraction::W2 => (
                (BigRational::TWO - &p.x) / &three,
                (BigRational::ONE + &p.y) / &three,
            ),
            Contraction::W3 => (
                (BigRational::TWO + &p.x) / &three,
                (BigRational::ONE + BigRational::TWO * &p.y) / &three,
            ),
        };
        PlanePoint::new(x, y)
    }

    /// Image of the closed interval `[lo, hi]` under the horizontal part.
    pub fn map_x_interval(self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let three = BigRational::from(3u32);
        match self {
            Contraction::W1 => (lo / &three, hi / &three),
            Contraction::W2 => (
                (BigRational::TWO - hi) / &three,
                (BigRational::TWO - lo) / &three,
            ),
            Contraction::W3 => (
                (BigRational::TWO + lo) / &three,
                (BigRational::TWO + hi) / &three,
            ),
        }
    }

    /// Image of the closed interval `[lo, hi]` under the vertical part.
    pub fn map_y_interval(self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        let y = |v: &BigRational| self.apply(&PlanePoint::new(BigRational::ONE, v.clone())).y;
        (y(lo), y(hi))
    }
}

pub fn ifs_map_point(w: Contraction, p: &PlanePoint) -> PlanePoint {
    w.apply(p)
}

/// `Γ_{i+1} = w1(Γ_i) ∪ w2(Γ_i) ∪ w3(Γ_i)` on breakpoint lists. The w2 images
/// are reversed so the result runs left to right; the images meeting at
/// `x = 1/3` and `x = 2/3` are merged after checking they coincide.
pub fn ifs_refine(table: &IterateTable) -> Result<IterateTable> {
    if !table.param().is_classical() {
        return Err(Error::Parameter(format!(
            "the contractions encode only the classical function, not {}",
            table.param()
        )));
    }
    let points = table.breakpoints();
    let mut refined = Vec::with_capacity(3 * points.len() - 2);
    refined.extend(points.iter().map(|p| Contraction::W1.apply(p)));
    let pieces = [
        (Contraction::W2, points.iter().rev().collect::<Vec<_>>()),
        (Contraction::W3, points.iter().collect::<Vec<_>>()),
    ];
    for (w, ordered) in pieces {
        let mut images = ordered.into_iter().map(|p| w.apply(p));
        let joint = images.next().expect("non-empty table");
        if refined.last() != Some(&joint) {
            return Err(Error::Consistency(format!(
                "{w:?} image does not meet the previous piece"
            )));
        }
        refined.extend(images);
    }
    Ok(IterateTable {
        param: FamilyParam::classical(),
        table: BreakpointTable::from_points(table.level() + 1, refined),
    })
}
