//! The simple finite charge-renormalization scheme: the GT-side Z3
//! factor, the renormalization map, and the closed-form cutoff it
//! implies.
//!
//! Equating the QED factor `1 - (alpha/(3 pi)) ln(Lambda^2/m^2)` with the
//! GT ratio `alpha(29)/alpha(N_b)` fixes the cutoff at every `N_b`; at
//! `N_b = 29` both sides are unity and `Lambda = m`.

use crate::alpha::{alpha_full, N_DEFAULT};
use crate::error::{FrcError, Result};
use crate::numerics::Scalar;

/// The `N_b` at which the renormalized and theoretical couplings
/// coincide (the revised prediction).
pub const NB_PHYSICAL: u64 = 29;

/// One evaluation of the simple scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct SimpleRenorm<S> {
    pub nb: u64,
    /// Theoretical coupling `alpha(137, N_b)`.
    pub alpha_th: S,
    pub z3: S,
    /// Cutoff in units of the electron mass.
    pub lambda_over_m: S,
    /// Renormalized coupling; equals `alpha(137, 29)` by construction.
    pub alpha_r: S,
}

impl<S: Scalar> SimpleRenorm<S> {
    pub fn evaluate(nb: u64) -> Result<Self> {
        let alpha_th = alpha_full(N_DEFAULT, nb)?;
        let z3 = z3_gt(nb)?;
        let lambda_over_m = cutoff_simple(nb)?;
        let alpha_r = alpha_renormalized(&alpha_th, &lambda_over_m)?;
        Ok(SimpleRenorm {
            nb,
            alpha_th,
            z3,
            lambda_over_m,
            alpha_r,
        })
    }
}

/// GT charge renormalization factor
/// `Z3 = sqrt(alpha(29)/alpha(N_b))`.
pub fn z3_gt<S: Scalar>(nb: u64) -> Result<S> {
    let ratio: S = alpha_full::<S>(N_DEFAULT, NB_PHYSICAL)? / alpha_full::<S>(N_DEFAULT, nb)?;
    Ok(ratio.sqrt())
}

/// Renormalization map
/// `alpha_R = (1 - (alpha/(3 pi)) ln(Lambda^2/m^2)) alpha`.
pub fn alpha_renormalized<S: Scalar>(alpha_th: &S, lambda_over_m: &S) -> Result<S> {
    if *alpha_th < S::zero() {
        return Err(FrcError::Domain(format!(
            "alpha must be >= 0, got {alpha_th}"
        )));
    }
    if *lambda_over_m <= S::zero() {
        return Err(FrcError::Domain(format!(
            "cutoff ratio must be > 0, got {lambda_over_m}"
        )));
    }
    let three_pi = S::from_int(3) * S::pi();
    let log_term = (lambda_over_m.clone() * lambda_over_m.clone()).ln();
    Ok((S::one() - alpha_th.clone() / three_pi * log_term) * alpha_th.clone())
}

/// Closed-form cutoff
/// `Lambda/m = exp((3 pi / (2 alpha(N_b))) (1 - Z3^2))`.
pub fn cutoff_simple<S: Scalar>(nb: u64) -> Result<S> {
    let alpha_th: S = alpha_full(N_DEFAULT, nb)?;
    let z3: S = z3_gt(nb)?;
    let z3_sq = z3.clone() * z3;
    let three_pi = S::from_int(3) * S::pi();
    let exponent = three_pi / (S::from_int(2) * alpha_th) * (S::one() - z3_sq);
    Ok(exponent.exp())
}

/// Residual of the defining identity: the QED factor evaluated at the
/// solved cutoff minus `Z3^2`. Zero up to rounding for every `N_b`.
pub fn check_consistency<S: Scalar>(nb: u64) -> Result<S> {
    let alpha_th: S = alpha_full(N_DEFAULT, nb)?;
    let z3: S = z3_gt(nb)?;
    let lambda = cutoff_simple::<S>(nb)?;
    let three_pi = S::from_int(3) * S::pi();
    let qed_side = S::one() - alpha_th.clone() / three_pi * (lambda.clone() * lambda).ln();
    Ok(qed_side - z3.clone() * z3)
}

/// Renormalized charge `e_R = Z3 e`.
pub fn apply_z3_charge<S: Scalar>(e: &S, z3: &S) -> S {
    z3.clone() * e.clone()
}
