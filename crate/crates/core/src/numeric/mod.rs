//! Exact rational arithmetic, ternary expansions and affine-map algebra.

pub mod affine;
pub mod rational;
pub mod ternary;

pub use affine::{affine_compose, affine_fixed_point, AffineMap, IntegerAffine};
pub use rational::{BigInt, BigNat, BigRational};
pub use ternary::{from_ternary, to_ternary, TernaryDigits, TernaryExpansion};
