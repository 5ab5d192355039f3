//! Closed intervals with dyadic endpoints and outward rounding.
//!
//! Every operation returns an interval guaranteed to contain the exact result.
//! Endpoints are rounded outward to multiples of `2^-PRECISION` so their size
//! stays bounded.

use std::sync::OnceLock;

use malachite_base::num::arithmetic::traits::{Ceiling, Floor, PowerOf2};
use malachite_base::num::basic::traits::{One, Zero};

use crate::numeric::rational::BigRational;

/// Bits after the binary point (about 58 decimal digits).
pub const PRECISION: u64 = 192;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    lo: BigRational,
    hi: BigRational,
}

fn grid() -> BigRational {
    BigRational::power_of_2(PRECISION)
}

fn round_down(x: &BigRational) -> BigRational {
    let g = grid();
    BigRational::from((x * &g).floor()) / g
}

fn round_up(x: &BigRational) -> BigRational {
    let g = grid();
    BigRational::from((x * &g).ceiling()) / g
}

impl Enclosure {
    pub fn exact(x: &BigRational) -> Self {
        Enclosure {
            lo: round_down(x),
            hi: round_up(x),
        }
    }

    pub fn lower(&self) -> &BigRational {
        &self.lo
    }

    pub fn upper(&self) -> &BigRational {
        &self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn add(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn sub(&self, other: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    pub fn mul(&self, other: &Enclosure) -> Enclosure {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap();
        let hi = products.iter().max().unwrap();
        Enclosure {
            lo: round_down(lo),
            hi: round_up(hi),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Enclosure {
        self.mul(&Enclosure {
            lo: k.clone(),
            hi: k.clone(),
        })
    }

    /// `ln x` for a positive rational.
    pub fn ln(x: &BigRational) -> Enclosure {
        assert!(*x > BigRational::ZERO, "logarithm of a non-positive number");
        // x = 2^k m with 1 <= m < 2
        let mut k: i64 = 0;
        let mut m = x.clone();
        let two = BigRational::from(2u32);
        while m >= two {
            m /= &two;
            k += 1;
        }
        while m < BigRational::ONE {
            m *= &two;
            k -= 1;
        }
        let ln_m = atanh_twice(&((&m - BigRational::ONE) / (&m + BigRational::ONE)));
        ln_m.add(&ln2().scale(&BigRational::from(k)))
    }
}

fn ln2() -> &'static Enclosure {
    static LN2: OnceLock<Enclosure> = OnceLock::new();
    LN2.get_or_init(|| atanh_twice(&BigRational::from_signeds(1, 3)))
}

/// `2 atanh z = ln((1 + z) / (1 - z))` for `0 <= z <= 1/3`.
fn atanh_twice(z: &BigRational) -> Enclosure {
    let z2 = z * z;
    let (mut power_lo, mut power_hi) = (z.clone(), z.clone());
    let mut lo = BigRational::ZERO;
    let mut hi = BigRational::ZERO;
    let tolerance = BigRational::power_of_2(-(PRECISION as i64) - 8);
    let mut n: u64 = 0;
    loop {
        let odd = BigRational::from(2 * n + 1);
        lo += round_down(&(&power_lo / &odd));
        hi += round_up(&(&power_hi / &odd));
        power_lo = round_down(&(&power_lo * &z2));
        power_hi = round_up(&(&power_hi * &z2));
        n += 1;
        // remaining terms sum to at most z^(2n+1) / ((2n+1)(1 - z^2))
        let tail = &power_hi / (BigRational::from(2 * n + 1) * (BigRational::ONE - &z2));
        if tail <= tolerance {
            hi += round_up(&tail);
            break;
        }
    }
    let two = BigRational::from(2u32);
    Enclosure {
        lo: round_down(&(lo * &two)),
        hi: round_up(&(hi * two)),
    }
}
