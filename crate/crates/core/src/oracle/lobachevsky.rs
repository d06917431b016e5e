//! The Lobachevsky function `L(x) = -integral_0^x log|2 sin u| du`.
//!
//! `L(x) = Cl2(2x) / 2`, and for `0 < t <= pi` the Clausen function has
//! the rapidly converging expansion
//!
//! ```text
//! Cl2(t) = t - t log t + sum_{k>=1} zeta(2k) / (k (2k + 1)) * (t / 2pi)^(2k) * t
//! ```
//!
//! whose ratio is at most 1/4. The Fourier series `sum sin(2nx) / (2n^2)`
//! converges like `1/N` and is only used as a test oracle.

use std::f64::consts::PI;

/// `zeta(s)` for even `s >= 4` by a partial sum plus Euler–Maclaurin tail.
fn zeta_even(s: i32) -> f64 {
    const N: i32 = 100;
    let sum: f64 = (1..N).map(|n| f64::from(n).powi(-s)).sum();
    let n = f64::from(N);
    let s_f = f64::from(s);
    sum + n.powi(1 - s) / (s_f - 1.0) + 0.5 * n.powi(-s) + s_f / 12.0 * n.powi(-s - 1)
        - s_f * (s_f + 1.0) * (s_f + 2.0) / 720.0 * n.powi(-s - 3)
}

fn clausen2(t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let r = (t / (2.0 * PI)).powi(2);
    let mut term_pow = 1.0;
    let mut sum = 0.0;
    for k in 1..=40 {
        term_pow *= r;
        let zeta = if k == 1 { PI * PI / 6.0 } else { zeta_even(2 * k) };
        let kf = f64::from(k);
        let term = zeta / (kf * (2.0 * kf + 1.0)) * term_pow;
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    t - t * t.ln() + t * sum
}

pub fn lobachevsky(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // Period pi, odd: reduce to (-pi/2, pi/2].
    let mut y = x.rem_euclid(PI);
    if y > 0.5 * PI {
        y -= PI;
    }
    let sign = if y < 0.0 { -1.0 } else { 1.0 };
    sign * 0.5 * clausen2(2.0 * y.abs())
}
