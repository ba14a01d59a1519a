//! The finite mass-renormalization counter-term
//! `delta_m/m = (alpha(N_b)/(2 pi)) ((3/2) ln(Lambda^2/m^2) + 3/4)`.
//!
//! The cutoff ratio is taken explicitly so either scheme's cutoff can be
//! composed in; at `Lambda/m = 1` the log term vanishes and the value is
//! `3 alpha(N_b)/(8 pi)`.

use crate::alpha::{alpha_full, N_DEFAULT};
use crate::error::{FrcError, Result};
use crate::numerics::Scalar;

/// One mass counter-term evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct MassCounterTerm<S> {
    pub nb: u64,
    pub lambda_over_m: S,
    /// The fractional shift `delta_m/m`.
    pub ratio: S,
}

impl<S: Scalar> MassCounterTerm<S> {
    pub fn evaluate(nb: u64, lambda_over_m: &S) -> Result<Self> {
        Ok(MassCounterTerm {
            nb,
            lambda_over_m: lambda_over_m.clone(),
            ratio: delta_m_ratio(nb, lambda_over_m)?,
        })
    }
}

/// `(alpha(137, N_b)/(2 pi)) ((3/2) ln((Lambda/m)^2) + 3/4)`.
pub fn delta_m_ratio<S: Scalar>(nb: u64, lambda_over_m: &S) -> Result<S> {
    if *lambda_over_m <= S::zero() {
        return Err(FrcError::Domain(format!(
            "cutoff ratio must be > 0, got {lambda_over_m}"
        )));
    }
    let alpha: S = alpha_full(N_DEFAULT, nb)?;
    let two_pi = S::from_int(2) * S::pi();
    let log_term = (lambda_over_m.clone() * lambda_over_m.clone()).ln();
    let three_halves = S::from_int(3) / S::from_int(2);
    let three_quarters = S::from_int(3) / S::from_int(4);
    Ok(alpha / two_pi * (three_halves * log_term + three_quarters))
}
