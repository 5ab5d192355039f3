//! Exact arithmetic for Bourbaki's continuous nowhere-differentiable function
//! `f`, its one-parameter family `f_a`, the antiderivative `F`, and the
//! fractal geometry of their graphs.
//!
//! ```
//! use bourbaki::bourbaki::eval_exact_classical;
//! use bourbaki::numeric::BigRational;
//!
//! let x = BigRational::from_signeds(1, 7);
//! assert_eq!(eval_exact_classical(&x).unwrap(), BigRational::from_signeds(8, 23));
//! ```

pub mod antiderivative;
pub mod bourbaki;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod numeric;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
