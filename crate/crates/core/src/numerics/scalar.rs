//! Scalar abstraction the numeric algorithms are generic over.
//!
//! `f64` satisfies the contract at machine precision; [`BigReal`] satisfies
//! it at the extended working precision used throughout the library.
//!
//! [`BigReal`]: crate::numerics::BigReal

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A real scalar with the elementary operations and transcendentals the
/// formulas need, plus deterministic decimal formatting.
pub trait Scalar:
    Sized
    + Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + FromPrimitive
{
    fn pi() -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn cos(&self) -> Self;
    fn tan(&self) -> Self;
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;

    /// Parses a plain decimal literal (optional sign, digits, optional
    /// fractional part, optional exponent).
    fn from_decimal(s: &str) -> Option<Self>;

    /// Decimal string with exactly `places` fractional digits, rounded
    /// half-even.
    fn format_places(&self, places: usize) -> String;

    /// Default absolute tolerance for monotone inversion, far below any
    /// quantity of interest at this scalar's precision.
    fn inversion_tolerance() -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer is representable")
    }

    fn powi(&self, n: i32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc * self.clone();
        }
        if n < 0 {
            Self::one() / acc
        } else {
            acc
        }
    }

    /// Decimal string with `sig` significant digits (values with large
    /// magnitude keep at least their integer part).
    fn format_sig(&self, sig: usize) -> String {
        assert!(sig > 0);
        if self.is_zero() {
            return self.format_places(sig - 1);
        }
        let ten = Self::from_int(10);
        let mut mag = self.abs();
        // decimal exponent: 10^e <= |x| < 10^(e+1)
        let mut e: i64 = 0;
        while mag >= ten {
            mag = mag / ten.clone();
            e += 1;
        }
        while mag < Self::one() {
            mag = mag * ten.clone();
            e -= 1;
        }
        let places = (sig as i64 - 1 - e).max(0) as usize;
        self.format_places(places)
    }
}

impl Scalar for f64 {
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn tan(&self) -> Self {
        f64::tan(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }

    fn from_decimal(s: &str) -> Option<Self> {
        let v: f64 = s.parse().ok()?;
        v.is_finite().then_some(v)
    }

    fn inversion_tolerance() -> Self {
        1e-12
    }

    fn format_places(&self, places: usize) -> String {
        // std float formatting rounds the exact binary value half-even
        let s = format!("{:.*}", places, self);
        if s.starts_with('-') && s.trim_start_matches(['-', '0', '.']).is_empty() {
            s[1..].to_string()
        } else {
            s
        }
    }
}
