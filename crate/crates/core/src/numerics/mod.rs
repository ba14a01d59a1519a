//! Extended-precision scalar contract and the generic numeric algorithms
//! the rest of the library builds on.

mod algo;
mod big;
mod scalar;

pub use algo::{invert_monotone, round_decimal, solve_quadratic_stable, Bracket};
pub use big::{BigReal, PRECISION_BITS};
pub use scalar::Scalar;
