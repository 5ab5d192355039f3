use crate::numeric::rational::{pow_nat, BigNat, BigRational};

/// SplitMix64.
///
/// Each call advances `state` by `0x9E3779B97F4A7C15` (wrapping) and returns
///
/// ```text
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// z ^ (z >> 31)
/// ```
///
/// with wrapping multiplication. Bounded draws use `next % n`.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish in `0..n` (`n > 0`).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// `p/q` in `[0, 1]`: `q = 1 + next % max_den`, then `p = next % (q + 1)`.
    pub fn unit_rational(&mut self, max_den: u64) -> BigRational {
        let q = 1 + self.below(max_den);
        let p = self.below(q + 1);
        BigRational::from_unsigneds(p, q)
    }

    /// `k / 3^i`: `i = next % (max_level + 1)`, then `k = next % (3^i + 1)`.
    pub fn ternary_rational(&mut self, max_level: u32) -> BigRational {
        let i = self.below(max_level as u64 + 1);
        let den = pow_nat(3, i);
        let k = BigNat::from(self.next_u64()) % (&den + BigNat::from(1u32));
        BigRational::from_naturals(k, den)
    }

    /// `p/q` strictly inside `(0, 1)`: `q = 2 + next % (max_den - 1)`, then
    /// `p = 1 + next % (q - 1)`. Requires `max_den >= 2`.
    pub fn open_unit_rational(&mut self, max_den: u64) -> BigRational {
        let q = 2 + self.below(max_den - 1);
        let p = 1 + self.below(q - 1);
        BigRational::from_unsigneds(p, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use malachite_base::num::basic::traits::{One, Zero};

    #[test]
    fn reference_stream() {
        // first outputs for seed 0 of the reference SplitMix64
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
        assert_eq!(rng.next_u64(), 0x06C4_5D18_8009_454F);
    }

    #[test]
    fn draws_stay_in_range() {
        let mut rng = SplitMix64::new(7);
        for _ in 0..1000 {
            let x = rng.unit_rational(50);
            assert!(x >= BigRational::ZERO && x <= BigRational::ONE);
            let a = rng.open_unit_rational(50);
            assert!(a > BigRational::ZERO && a < BigRational::ONE);
            let t = rng.ternary_rational(5);
            assert!(t >= BigRational::ZERO && t <= BigRational::ONE);
        }
    }
}
