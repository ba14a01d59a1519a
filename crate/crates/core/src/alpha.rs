//! The two-integer fine-structure-constant formula
//! `alpha(N, N_b) = N_b cos(pi/N) tan(pi/(N N_b)) / pi`
//! and the integer-parameter analyses built on it.
//!
//! For fixed `N >= 3` the function is strictly decreasing in `N_b` and
//! bounded below by `cos(pi/N)/N`; the searches exploit this.

use crate::error::{FrcError, Result};
use crate::numerics::Scalar;

/// Dominant quantization integer; the physical value.
pub const N_DEFAULT: u32 = 137;

/// An `(N, N_b)` pair with its evaluated alpha.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaPoint<S> {
    pub n: u32,
    pub nb: u64,
    pub alpha: S,
}

impl<S: Scalar> AlphaPoint<S> {
    pub fn evaluate(n: u32, nb: u64) -> Result<Self> {
        Ok(AlphaPoint {
            n,
            nb,
            alpha: alpha_full(n, nb)?,
        })
    }
}

/// Result of an interval-membership search.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome<S> {
    /// Matching points, ascending by `N_b`.
    pub matches: Vec<AlphaPoint<S>>,
    /// The closed interval that was searched.
    pub interval: (S, S),
}

fn check_domain(n: u32, nb: u64) -> Result<()> {
    if n < 3 {
        return Err(FrcError::Domain(format!("N must be >= 3, got {n}")));
    }
    if nb < 1 {
        return Err(FrcError::Domain("N_b must be >= 1".into()));
    }
    Ok(())
}

/// `alpha(N, N_b) = N_b cos(pi/N) tan(pi/(N N_b)) / pi`.
pub fn alpha_full<S: Scalar>(n: u32, nb: u64) -> Result<S> {
    check_domain(n, nb)?;
    let pi = S::pi();
    let n_s = S::from_int(n as i64);
    let nb_s = S::from_u64(nb).expect("N_b fits the scalar");
    let sector = (pi.clone() / n_s.clone()).cos();
    let segment = (pi.clone() / (n_s * nb_s.clone())).tan();
    Ok(nb_s * sector * segment / pi)
}

/// `cos(pi/N)/N`, the infimum of `alpha_full(N, .)` as `N_b` grows.
pub fn alpha_limit<S: Scalar>(n: u32) -> Result<S> {
    check_domain(n, 1)?;
    let n_s = S::from_int(n as i64);
    Ok((S::pi() / n_s.clone()).cos() / n_s)
}

/// Smallest `nb` in `[1, nb_max]` for which `pred(alpha(nb))` is false,
/// assuming `pred` flips from true to false exactly once as `nb` grows.
/// Returns `nb_max + 1` if `pred` holds throughout.
fn partition_point<S, P>(n: u32, nb_max: u64, pred: P) -> Result<u64>
where
    S: Scalar,
    P: Fn(&S) -> bool,
{
    let mut lo = 1u64;
    let mut hi = nb_max + 1;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if pred(&alpha_full::<S>(n, mid)?) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

/// The `N_b` in `[1, nb_max]` whose alpha is nearest `target`, with the
/// signed difference `alpha - target`. Ties break toward smaller `N_b`.
pub fn nearest_nb<S: Scalar>(n: u32, target: &S, nb_max: u64) -> Result<(u64, S)> {
    check_domain(n, nb_max)?;
    // alpha decreases in N_b: locate the crossing, compare its neighbors
    let first_below = partition_point::<S, _>(n, nb_max, |a| a > target)?;
    let candidates = [first_below.saturating_sub(1), first_below];
    let mut best: Option<(u64, S)> = None;
    for nb in candidates {
        if !(1..=nb_max).contains(&nb) {
            continue;
        }
        let diff = alpha_full::<S>(n, nb)? - target.clone();
        let replace = match &best {
            None => true,
            Some((_, d)) => diff.abs() < d.abs(),
        };
        if replace {
            best = Some((nb, diff));
        }
    }
    Ok(best.expect("at least one candidate in range"))
}

/// All `N_b` in `[1, nb_max]` whose alpha lies in the closed interval
/// `[lo, hi]`, found in `O(log nb_max)` evaluations.
pub fn search_interval<S: Scalar>(n: u32, lo: &S, hi: &S, nb_max: u64) -> Result<SearchOutcome<S>> {
    check_domain(n, nb_max)?;
    if lo > hi {
        return Err(FrcError::Domain(format!(
            "interval requires lo <= hi, got [{lo}, {hi}]"
        )));
    }
    // alpha decreases in N_b, so members form one contiguous run:
    // first N_b with alpha <= hi up to last N_b with alpha >= lo
    let first = partition_point::<S, _>(n, nb_max, |a| a > hi)?;
    let last = partition_point::<S, _>(n, nb_max, |a| a >= lo)? - 1;
    let mut matches = Vec::new();
    if first <= last && first <= nb_max {
        for nb in first..=last.min(nb_max) {
            let point = AlphaPoint::evaluate(n, nb)?;
            // boundary verification by direct evaluation
            debug_assert!(point.alpha >= *lo && point.alpha <= *hi);
            if point.alpha >= *lo && point.alpha <= *hi {
                matches.push(point);
            }
        }
    }
    Ok(SearchOutcome {
        matches,
        interval: (lo.clone(), hi.clone()),
    })
}
