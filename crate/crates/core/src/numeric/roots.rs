//! Sign-change scanning and bisection.

use crate::error::{Error, Result};

/// Scans `points + 1` equally spaced samples of `f` on `[lo, hi]` and
/// returns the first sub-interval `[x_k, x_{k+1}]` where `f(x_k) < 0` and
/// `f(x_{k+1}) >= 0`.
pub fn first_sign_change<F>(f: F, lo: f64, hi: f64, points: usize) -> Option<(f64, f64)>
where
    F: Fn(f64) -> f64,
{
    let points = points.max(1);
    let step = (hi - lo) / points as f64;
    let mut x0 = lo;
    let mut f0 = f(x0);
    for k in 1..=points {
        let x1 = if k == points { hi } else { lo + step * k as f64 };
        let f1 = f(x1);
        if f0 < 0.0 && f1 >= 0.0 {
            return Some((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    None
}

/// Bisection on a bracket with `f(lo) < 0 <= f(hi)` (either orientation of
/// the interval). Stops when the bracket is narrower than `tol`.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let flo = f(lo);
    let fhi = f(hi);
    if !(flo < 0.0 && fhi >= 0.0) {
        return Err(Error::Numerical(format!(
            "bisection needs f(lo) < 0 <= f(hi), got f({lo}) = {flo}, f({hi}) = {fhi}"
        )));
    }
    for _ in 0..200 {
        if (hi - lo).abs() <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
