//! High-precision evaluation of the two-integer fine-structure-constant
//! formula `alpha(N, N_b) = N_b cos(pi/N) tan(pi/(N N_b)) / pi`, integer
//! parameter searches against measured uncertainty intervals, and the
//! finite charge/mass renormalization schemes built on the formula.
//!
//! The numeric core is generic over the [`numerics::Scalar`] trait; the
//! concrete working type is [`Real`], an extended-precision float with
//! ~96 decimal digits of mantissa.

pub mod alpha;
pub mod codata;
pub mod error;
pub mod mass;
pub mod numerics;
pub mod renorm_general;
pub mod renorm_simple;

/// The extended-precision scalar used throughout.
pub type Real = numerics::BigReal;

pub use alpha::N_DEFAULT;
pub use error::{FrcError, Result};
pub use renorm_simple::NB_PHYSICAL;
