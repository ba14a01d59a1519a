//! Scalar-generic numeric algorithms: stable quadratic solving, monotone
//! inversion, decimal rounding.


use super::scalar::Scalar;
use crate::error::{FrcError, Result};

/// Search interval, `lo < hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bracket<S> {
    pub lo: S,
    pub hi: S,
}

impl<S: Scalar> Bracket<S> {
    pub fn new(lo: S, hi: S) -> Result<Self> {
        if lo < hi {
            Ok(Bracket { lo, hi })
        } else {
            Err(FrcError::Domain(format!(
                "bracket requires lo < hi, got [{lo}, {hi}]"
            )))
        }
    }
}

/// Solves `a x^2 + b x + c = 0`, returning both real roots as
/// `(larger, smaller)`.
///
/// The larger-magnitude root comes from the sign-adjusted formula so the
/// additions never cancel; the other root follows from the product of
/// roots `c/a`.
pub fn solve_quadratic_stable<S: Scalar>(a: S, b: S, c: S) -> Result<(S, S)> {
    if a.is_zero() {
        return Err(FrcError::Degenerate(
            "leading coefficient of quadratic is zero".into(),
        ));
    }
    let four = S::from_int(4);
    let disc = b.clone() * b.clone() - four * a.clone() * c.clone();
    if disc < S::zero() {
        return Err(FrcError::Domain(format!(
            "negative discriminant {disc}: no real roots"
        )));
    }
    let sq = disc.sqrt();
    let two = S::from_int(2);
    let (r1, r2) = if b.is_zero() {
        let r = sq / (two * a);
        (r.clone(), -r)
    } else {
        // q = -(b + sign(b) * sqrt(disc)) / 2
        let q = if b > S::zero() {
            -(b + sq) / two
        } else {
            (-b + sq) / two
        };
        (q.clone() / a, c / q)
    };
    if r1 >= r2 {
        Ok((r1, r2))
    } else {
        Ok((r2, r1))
    }
}

/// Inverts a strictly monotone `f` on `bracket`: returns `x` with
/// `|f(x) - y| <= tol`.
///
/// Bisection narrows the bracket; a secant step polishes once the bracket
/// is tight. Deterministic for fixed inputs.
pub fn invert_monotone<S, F>(f: F, y: &S, bracket: &Bracket<S>, tol: &S) -> Result<S>
where
    S: Scalar,
    F: Fn(&S) -> S,
{
    let f_lo = f(&bracket.lo);
    let f_hi = f(&bracket.hi);
    let increasing = f_hi > f_lo;
    let (mut fa, mut fb) = if increasing {
        (f_lo.clone(), f_hi.clone())
    } else {
        (f_hi.clone(), f_lo.clone())
    };
    if *y < fa || *y > fb {
        return Err(FrcError::Bracket(format!(
            "target {y} outside attained range [{fa}, {fb}]"
        )));
    }
    let (mut a, mut b) = if increasing {
        (bracket.lo.clone(), bracket.hi.clone())
    } else {
        (bracket.hi.clone(), bracket.lo.clone())
    };
    // invariant: fa <= y <= fb with fa = f(a), fb = f(b)
    let two = S::from_int(2);
    let mut best = a.clone();
    let mut best_err = (fa.clone() - y.clone()).abs();
    let consider = |x: &S, fx: &S, best: &mut S, best_err: &mut S| {
        let err = (fx.clone() - y.clone()).abs();
        if err < *best_err {
            *best = x.clone();
            *best_err = err;
        }
    };
    consider(&b, &fb, &mut best, &mut best_err);
    for _ in 0..2000 {
        if best_err <= *tol {
            return Ok(best);
        }
        let mid = (a.clone() + b.clone()) / two.clone();
        if mid <= a.min_of(&b) || mid >= a.max_of(&b) {
            break; // bracket exhausted at working precision
        }
        let fm = f(&mid);
        consider(&mid, &fm, &mut best, &mut best_err);
        if fm <= *y {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    // secant polish on the final bracket
    let mut x0 = a;
    let mut f0 = fa;
    let mut x1 = b;
    let mut f1 = fb;
    for _ in 0..64 {
        if best_err <= *tol {
            return Ok(best);
        }
        let denom = f1.clone() - f0.clone();
        if denom.is_zero() {
            break;
        }
        let x2 = x1.clone() - (f1.clone() - y.clone()) * (x1.clone() - x0.clone()) / denom;
        let f2 = f(&x2);
        consider(&x2, &f2, &mut best, &mut best_err);
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    if best_err <= *tol {
        Ok(best)
    } else {
        Err(FrcError::Bracket(format!(
            "inversion stalled: best residual {best_err} above tolerance {tol}"
        )))
    }
}

/// Round-half-even decimal string of `x` with exactly `places`
/// fractional digits.
pub fn round_decimal<S: Scalar>(x: &S, places: usize) -> String {
    x.format_places(places)
}

trait MinMax: Sized {
    fn min_of(&self, other: &Self) -> Self;
    fn max_of(&self, other: &Self) -> Self;
}

impl<S: Scalar> MinMax for S {
    fn min_of(&self, other: &Self) -> Self {
        if self < other {
            self.clone()
        } else {
            other.clone()
        }
    }
    fn max_of(&self, other: &Self) -> Self {
        if self > other {
            self.clone()
        } else {
            other.clone()
        }
    }
}
