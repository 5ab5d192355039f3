//! Seeded identity suites behind `bourbaki verify`.

mod rng;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::rational::{render, BigRational};

pub use rng::SplitMix64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Symmetry,
    Scaling,
    Integrals,
    Geometry,
    Family,
}

impl Suite {
    const PARTS: [Suite; 5] = [
        Suite::Symmetry,
        Suite::Scaling,
        Suite::Integrals,
        Suite::Geometry,
        Suite::Family,
    ];
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "symmetry" => Suite::Symmetry,
            "scaling" => Suite::Scaling,
            "integrals" => Suite::Integrals,
            "geometry" => Suite::Geometry,
            "family" => Suite::Family,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::All => "all",
            Suite::Symmetry => "symmetry",
            Suite::Scaling => "scaling",
            Suite::Integrals => "integrals",
            Suite::Geometry => "geometry",
            Suite::Family => "family",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Serialized with keys in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: Option<u64>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Collects failures; evaluation errors count as failures too.
#[derive(Default)]
pub(crate) struct Checker {
    failures: Vec<Failure>,
}

impl Checker {
    pub(crate) fn fail(&mut self, input: String, expected: String, actual: String) {
        self.failures.push(Failure {
            input,
            expected,
            actual,
        });
    }

    pub(crate) fn equal(
        &mut self,
        input: impl FnOnce() -> String,
        expected: Result<BigRational>,
        actual: Result<BigRational>,
    ) {
        match (expected, actual) {
            (Ok(e), Ok(a)) if e == a => {}
            (e, a) => self.fail(input(), outcome(&e), outcome(&a)),
        }
    }

    pub(crate) fn holds(&mut self, input: impl FnOnce() -> String, ok: Result<bool>) {
        match ok {
            Ok(true) => {}
            Ok(false) => self.fail(input(), "true".into(), "false".into()),
            Err(e) => self.fail(input(), "true".into(), e.to_string()),
        }
    }
}

fn outcome(r: &Result<BigRational>) -> String {
    match r {
        Ok(v) => render(v),
        Err(e) => e.to_string(),
    }
}

/// Runs a suite with `cases` random draws per randomized invariant.
/// `timing` records wall-clock milliseconds; without it the report is a pure
/// function of the arguments.
pub fn run_suite(suite: Suite, cases: u64, seed: u64, timing: bool) -> VerifyReport {
    let start = Instant::now();
    let mut checker = Checker::default();
    let parts: &[Suite] = if suite == Suite::All {
        &Suite::PARTS
    } else {
        std::slice::from_ref(&suite)
    };
    for part in parts {
        // each part draws from its own stream so results do not depend on
        // which other parts ran
        let mut rng = SplitMix64::new(seed);
        match part {
            Suite::Symmetry => suites::symmetry(&mut checker, &mut rng, cases),
            Suite::Scaling => suites::scaling(&mut checker, &mut rng, cases),
            Suite::Integrals => suites::integrals(&mut checker, &mut rng, cases),
            Suite::Geometry => suites::geometry(&mut checker),
            Suite::Family => suites::family(&mut checker, &mut rng, cases),
            Suite::All => unreachable!(),
        }
    }
    VerifyReport {
        suite: suite.to_string(),
        cases,
        failures: checker.failures,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    }
}
