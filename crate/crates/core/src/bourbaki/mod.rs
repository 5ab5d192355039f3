//! Bourbaki's function `f` and the one-parameter family `f_a` it belongs to.
//!
//! `f_a` is the limit of piecewise-linear iterates: `f_0(x) = x`, and each
//! refinement splits every segment into thirds, moving the two new interior
//! breakpoints to fractions `a` and `1 - a` of the segment's rise. The
//! classical function is `a = 2/3`, whose graph is also the attractor of the
//! three contractions in [`ifs`].

mod approx;
mod closed_form;
mod construction;
mod exact;
pub mod ifs;

use std::fmt;

use malachite_base::num::basic::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::rational::{ratio, render, BigRational};
use crate::table::{BreakpointTable, PlanePoint};

pub use approx::approx_eval;
pub use closed_form::{closed_form_value, FunctionCase};
pub use construction::{build_iterate, eval_iterate, iterate_segment, LEVEL_CAP};
pub use exact::{digit_step_map, eval_exact, eval_exact_classical};
pub use ifs::{ifs_map_point, ifs_refine, Contraction};

/// Family parameter `a`, restricted to the open interval `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParam(BigRational);

impl FamilyParam {
    pub fn new(a: BigRational) -> Result<Self> {
        if a <= BigRational::ZERO || a >= BigRational::ONE {
            return Err(Error::Parameter(format!(
                "family parameter {} is not in (0, 1)",
                render(&a)
            )));
        }
        Ok(FamilyParam(a))
    }

    /// `a = 2/3`, Bourbaki's function.
    pub fn classical() -> Self {
        FamilyParam(ratio(2, 3))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_classical(&self) -> bool {
        self.0 == ratio(2, 3)
    }
}

impl Default for FamilyParam {
    fn default() -> Self {
        FamilyParam::classical()
    }
}

impl fmt::Display for FamilyParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}", render(&self.0))
    }
}

/// The level-`i` iterate `f_i` of one family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterateTable {
    param: FamilyParam,
    table: BreakpointTable,
}

impl IterateTable {
    pub fn level(&self) -> u32 {
        self.table.level()
    }

    pub fn param(&self) -> &FamilyParam {
        &self.param
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
}
