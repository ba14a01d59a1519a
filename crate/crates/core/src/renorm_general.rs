//! The generalized scheme: the cutoff-dependent function `D`, the
//! constant `G`, the residual quantity `C`, the scale factor `lambda`
//! fixed by requiring `Lambda/m = 1` at `N_b = 29`, and the generalized
//! cutoff obtained by inverting `D`.
//!
//! Imposing the fixed point on the cutoff relation gives, in `u = 1/lambda`,
//! `u^2 - u + (alpha_R/(3 pi))(ln 2 - 7/6) = 0`. The printed closed form
//! carries `ln 2 + 7/6` instead, but only the minus sign reproduces the
//! quoted roots 0.999633635 and -2728.52; the minus form is used here and
//! the mismatch is surfaced in the discrepancy report.

use crate::alpha::{alpha_full, N_DEFAULT};
use crate::error::{FrcError, Result};
use crate::numerics::{invert_monotone, solve_quadratic_stable, Bracket, Scalar};
use crate::renorm_simple::NB_PHYSICAL;

/// Roots of the `lambda` fixed-point quadratic.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaRoots<S> {
    /// The branch near 1; the physically usable scale factor.
    pub physical: S,
    /// The large negative branch.
    pub other: S,
    /// The renormalized coupling the roots were solved for.
    pub alpha_r: S,
}

/// One evaluation of the generalized scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralRenorm<S> {
    pub nb: u64,
    pub lambda: S,
    /// Scaled theoretical coupling `lambda * alpha(N_b)`.
    pub alpha_g: S,
    /// Squared generalized Z3 factor.
    pub z3_sq: S,
    /// Generalized cutoff in units of the electron mass.
    pub lambda_over_m: S,
    /// The residual quantity `-(alpha_g/(3 pi))(D(Lambda/m) + G)` at the
    /// solved cutoff.
    pub c: S,
}

impl<S: Scalar> GeneralRenorm<S> {
    /// Evaluates the scheme at `nb` with `lambda` solved from the fixed
    /// point at `alpha(29)`.
    pub fn evaluate(nb: u64) -> Result<Self> {
        let lambda = lambda_roots(&alpha_full(N_DEFAULT, NB_PHYSICAL)?)?.physical;
        Self::evaluate_with(nb, &lambda)
    }

    pub fn evaluate_with(nb: u64, lambda: &S) -> Result<Self> {
        let alpha_g = alpha_g(nb, lambda)?;
        let z3_sq = z3_general_sq(nb, lambda)?;
        let lambda_over_m = cutoff_general(nb, lambda)?;
        let c = c_quantity(&alpha_g, &lambda_over_m)?;
        Ok(GeneralRenorm {
            nb,
            lambda: lambda.clone(),
            alpha_g,
            z3_sq,
            lambda_over_m,
            c,
        })
    }
}

/// `D(x) = ln(x^2 + 1) + 1/(x^2 + 1) - 1`, strictly increasing on
/// `x >= 0` with `D(0) = 0`.
pub fn d_function<S: Scalar>(x: &S) -> Result<S> {
    if *x < S::zero() {
        return Err(FrcError::Domain(format!("D requires x >= 0, got {x}")));
    }
    let t = x.clone() * x.clone() + S::one();
    Ok(t.ln() + S::one() / t - S::one())
}

/// The additive constant `G = -2/3`.
pub fn g_constant<S: Scalar>() -> S {
    S::from_int(-2) / S::from_int(3)
}

/// `C = -(alpha/(3 pi))(D(x) + G)`; nonzero at `x = 1`.
pub fn c_quantity<S: Scalar>(alpha: &S, x: &S) -> Result<S> {
    if *alpha < S::zero() {
        return Err(FrcError::Domain(format!(
            "alpha must be >= 0, got {alpha}"
        )));
    }
    let three_pi = S::from_int(3) * S::pi();
    Ok(-(alpha.clone() / three_pi) * (d_function(x)? + g_constant::<S>()))
}

/// Solves the fixed-point quadratic
/// `u^2 - u + (alpha_R/(3 pi))(ln 2 - 7/6) = 0` with `u = 1/lambda`
/// and returns both `lambda` branches.
pub fn lambda_roots<S: Scalar>(alpha_r: &S) -> Result<LambdaRoots<S>> {
    let limit = S::one() / S::from_int(10);
    if *alpha_r <= S::zero() || *alpha_r >= limit {
        return Err(FrcError::Domain(format!(
            "alpha_R must lie in (0, 0.1), got {alpha_r}"
        )));
    }
    let three_pi = S::from_int(3) * S::pi();
    let ln2 = S::from_int(2).ln();
    let seven_sixths = S::from_int(7) / S::from_int(6);
    let c = alpha_r.clone() / three_pi * (ln2 - seven_sixths);
    // c < 0, so the roots straddle zero: u+ slightly above 1, u- slightly
    // below 0
    let (u_plus, u_minus) = solve_quadratic_stable(S::one(), -S::one(), c)?;
    Ok(LambdaRoots {
        physical: S::one() / u_plus,
        other: S::one() / u_minus,
        alpha_r: alpha_r.clone(),
    })
}

/// Scaled theoretical coupling `alpha_g(N_b) = lambda alpha(N_b)`.
pub fn alpha_g<S: Scalar>(nb: u64, lambda: &S) -> Result<S> {
    Ok(lambda.clone() * alpha_full::<S>(N_DEFAULT, nb)?)
}

/// Squared generalized factor
/// `Z3^2 = alpha(29)/(lambda alpha(N_b))`.
pub fn z3_general_sq<S: Scalar>(nb: u64, lambda: &S) -> Result<S> {
    if lambda.is_zero() {
        return Err(FrcError::Domain("lambda must be nonzero".into()));
    }
    let ratio: S = alpha_full::<S>(N_DEFAULT, NB_PHYSICAL)? / alpha_full::<S>(N_DEFAULT, nb)?;
    Ok(ratio / lambda.clone())
}

/// Generalized cutoff: solves
/// `D(Lambda/m) = (3 pi/(lambda alpha(N_b)))(1 - Z3^2) - G` for
/// `Lambda/m` by inverting the strictly increasing `D`.
pub fn cutoff_general<S: Scalar>(nb: u64, lambda: &S) -> Result<S> {
    let alpha_g = alpha_g(nb, lambda)?;
    let z3_sq = z3_general_sq(nb, lambda)?;
    let three_pi = S::from_int(3) * S::pi();
    let rhs = three_pi / alpha_g * (S::one() - z3_sq) - g_constant::<S>();
    if rhs < S::zero() {
        return Err(FrcError::NoSolution {
            rhs: rhs.to_string(),
        });
    }
    if rhs.is_zero() {
        return Ok(S::zero());
    }
    // D grows like 2 ln x, so expand the bracket logarithmically until
    // it encloses rhs
    let mut hi = S::from_int(2);
    let mut d_hi = d_function(&hi)?;
    let cap = S::from_int(1_000_000);
    while d_hi < rhs && hi < cap {
        hi = hi.clone() * hi;
        d_hi = d_function(&hi)?;
    }
    if d_hi < rhs {
        return Err(FrcError::NoSolution {
            rhs: rhs.to_string(),
        });
    }
    let bracket = Bracket::new(S::zero(), hi)?;
    let tol = S::inversion_tolerance();
    invert_monotone(|x| d_function(x).expect("x in bracket is nonnegative"), &rhs, &bracket, &tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::alpha_full;
    use crate::numerics::Scalar;
    use crate::testutil::{assert_abs, assert_rel, pow10, real};
    use crate::{FrcError, Real, N_DEFAULT, NB_PHYSICAL};
    use num_traits::{One, Zero};

    fn alpha(nb: u64) -> Real {
        alpha_full(N_DEFAULT, nb).unwrap()
    }

    fn pi() -> Real {
        Real::pi()
    }

    #[test]
    fn d_vanishes_exactly_at_zero() {
        assert!(d_function(&Real::zero()).unwrap().is_zero());
    }

    #[test]
    fn d_reference_values() {
        let tol = pow10(-43);
        // D(1) = ln 2 - 1/2
        assert_rel(
            &d_function(&Real::one()).unwrap(),
            &real("0.193147180559945309417232121458176568075500134"),
            &tol,
            "D(1)",
        );
        let e = Real::one().exp();
        assert_rel(
            &d_function(&e).unwrap(),
            &real("1.24613093306509005238399766505590763622794876"),
            &tol,
            "D(e)",
        );
    }

    #[test]
    fn d_rejects_negative_argument() {
        assert!(matches!(
            d_function(&real("-0.5")),
            Err(FrcError::Domain(_))
        ));
    }

    #[test]
    fn d_is_strictly_increasing() {
        let mut prev = d_function(&Real::zero()).unwrap();
        for k in 1..=200u32 {
            let x = Real::from_int(k as i64) / real("20");
            let cur = d_function(&x).unwrap();
            assert!(cur > prev, "D not increasing near x = {k}/20");
            prev = cur;
        }
    }

    #[test]
    fn d_derivative_matches_closed_form() {
        // D'(x) = 2 x^3 / (x^2 + 1)^2, checked by central differences
        let h = pow10(-20);
        let two = real("2");
        for xs in ["0.5", "1", "2", "10"] {
            let x = real(xs);
            let num = (d_function(&(x.clone() + h.clone())).unwrap()
                - d_function(&(x.clone() - h.clone())).unwrap())
                / (two.clone() * h.clone());
            let x2p1 = x.clone() * x.clone() + Real::one();
            let exact = two.clone() * x.clone() * x.clone() * x.clone()
                / (x2p1.clone() * x2p1);
            assert_rel(&num, &exact, &pow10(-10), "D'(x)");
        }
    }

    #[test]
    fn gauge_constant_value() {
        let g: Real = g_constant();
        assert_eq!(g.clone() * real("-3"), real("2"));
        assert!((g + real("2") / real("3")).is_zero());
    }

    #[test]
    fn c_quantity_values() {
        assert!(c_quantity(&Real::zero(), &Real::one()).unwrap().is_zero());
        let c = c_quantity(&alpha(29), &Real::one()).unwrap();
        assert!(c > Real::zero());
        assert_rel(
            &c,
            &real("0.000366633424703599135596832714309403776893401322"),
            &pow10(-43),
            "C(alpha29, 1)",
        );
        // C = 0 where D(x) = 2/3
        let x0 = real("1.77882032975473357421364439990802077655593151");
        let c0 = c_quantity(&alpha(29), &x0).unwrap();
        assert!(c0.abs() < pow10(-46), "C at D^-1(2/3): {c0}");
    }

    #[test]
    fn lambda_roots_match_printed_values() {
        let roots = lambda_roots(&alpha(NB_PHYSICAL)).unwrap();
        assert_abs(
            &roots.physical,
            &real("0.999633635"),
            &pow10(-8),
            "physical root (printed)",
        );
        assert_abs(
            &roots.other,
            &real("-2728.52"),
            &real("0.5"),
            "second root (printed)",
        );
    }

    #[test]
    fn lambda_roots_frozen_values() {
        let roots = lambda_roots(&alpha(NB_PHYSICAL)).unwrap();
        let tol = pow10(-43);
        assert_rel(
            &roots.physical,
            &real("0.999633635169270855696271622411412598617524227"),
            &tol,
            "physical root",
        );
        assert_rel(
            &roots.other,
            &real("-2728.51963759672647707914907157932440644059801"),
            &tol,
            "second root",
        );
    }

    #[test]
    fn lambda_roots_satisfy_the_quadratic() {
        // u^2 - u + c = 0 with u = 1/lambda
        let a_r = alpha(NB_PHYSICAL);
        let c = a_r.clone() / (real("3") * pi())
            * (real("2").ln() - real("7") / real("6"));
        let roots = lambda_roots(&a_r).unwrap();
        for u in [
            Real::one() / roots.physical.clone(),
            Real::one() / roots.other.clone(),
        ] {
            let resid = u.clone() * u.clone() - u + c.clone();
            assert!(resid.abs() <= pow10(-40), "residual {resid}");
        }
    }

    #[test]
    fn lambda_roots_invariants_across_inputs() {
        for nb in [24u64, 25, 29, 100] {
            let roots = lambda_roots(&alpha(nb)).unwrap();
            assert!(roots.physical > real("0.99") && roots.physical < real("1.01"));
            assert!(roots.other < real("-1000"));
        }
    }

    #[test]
    fn lambda_physical_tends_to_one() {
        let tiny = pow10(-12);
        let roots = lambda_roots(&tiny).unwrap();
        assert!((roots.physical - Real::one()).abs() < pow10(-11));
    }

    #[test]
    fn lambda_roots_domain_checks() {
        assert!(matches!(
            lambda_roots(&Real::zero()),
            Err(FrcError::Domain(_))
        ));
        assert!(matches!(
            lambda_roots(&real("0.2")),
            Err(FrcError::Domain(_))
        ));
        assert!(matches!(
            lambda_roots(&real("-0.001")),
            Err(FrcError::Domain(_))
        ));
    }

    #[test]
    fn first_order_expansion_approximates_physical_root() {
        // lambda ~ 1 / (1 - (alpha_R / 3 pi)(ln 2 - 7/6))
        let a_r = alpha(NB_PHYSICAL);
        let approx = Real::one()
            / (Real::one()
                - a_r.clone() / (real("3") * pi())
                    * (real("2").ln() - real("7") / real("6")));
        let exact = lambda_roots(&a_r).unwrap().physical;
        assert_abs(&approx, &exact, &pow10(-6), "first-order lambda");
    }

    #[test]
    fn alpha_g_reference_value() {
        let lambda = lambda_roots(&alpha(NB_PHYSICAL)).unwrap().physical;
        assert_rel(
            &alpha_g(NB_PHYSICAL, &lambda).unwrap(),
            &real("0.00729467903853901459853010538040212540660922085"),
            &pow10(-43),
            "alpha_g(29)",
        );
    }

    #[test]
    fn z3_general_squared_cases() {
        assert_eq!(
            z3_general_sq(NB_PHYSICAL, &Real::one()).unwrap(),
            Real::one()
        );
        let lambda = lambda_roots(&alpha(NB_PHYSICAL)).unwrap().physical;
        assert_rel(
            &z3_general_sq(NB_PHYSICAL, &lambda).unwrap(),
            &(Real::one() / lambda.clone()),
            &pow10(-40),
            "z3^2 = 1/lambda at nb 29",
        );
        assert!(matches!(
            z3_general_sq(NB_PHYSICAL, &Real::zero()),
            Err(FrcError::Domain(_))
        ));
    }

    #[test]
    fn generalized_cutoff_values() {
        let lambda = lambda_roots(&alpha(NB_PHYSICAL)).unwrap().physical;
        let at29 = cutoff_general(29, &lambda).unwrap();
        assert_abs(&at29, &Real::one(), &pow10(-25), "cutoff(29)");
        let at20 = cutoff_general(20, &lambda).unwrap();
        assert_rel(
            &at20,
            &real("1.00059402434030786005565220021104244813592891"),
            &pow10(-24),
            "cutoff(20)",
        );
        assert_abs(&at20, &real("1.000594024"), &pow10(-6), "cutoff(20) printed");
        let at25 = cutoff_general(25, &lambda).unwrap();
        assert!(at25 > Real::one() && at25 < real("1.001"));
        assert_rel(
            &at25,
            &real("1.00018624641232726202054856433183462849807332"),
            &pow10(-24),
            "cutoff(25)",
        );
    }

    #[test]
    fn generalized_cutoff_no_solution() {
        // a small lambda drives the right-hand side negative
        let err = cutoff_general(29, &real("0.5")).unwrap_err();
        assert!(matches!(err, FrcError::NoSolution { .. }));
    }

    #[test]
    fn bundle_is_internally_consistent() {
        let b = GeneralRenorm::<Real>::evaluate(NB_PHYSICAL).unwrap();
        assert_rel(
            &(b.z3_sq.clone() * b.alpha_g.clone()),
            &alpha(NB_PHYSICAL),
            &pow10(-20),
            "z3^2 alpha_g",
        );
        assert!(b.lambda_over_m > Real::zero());
        let b25 = GeneralRenorm::<Real>::evaluate(25).unwrap();
        assert_rel(
            &(b25.z3_sq.clone() * b25.alpha_g.clone()),
            &alpha(NB_PHYSICAL),
            &pow10(-20),
            "z3^2 alpha_g at 25",
        );
    }
}
