//! The edge integral for six equal edges `a`.
//!
//! With `c = cosh a` the integrand reduces to
//!
//! ```text
//! V = 1/2 * integral_0^a (A - B) / (C sqrt(D)) dt
//! A = 2 t c^2 sqrt((c - 1)(cosh t - 1))
//! B = a (1 - 4c + 2c^2 + cosh t) sqrt((c + 1)(cosh t + 1))
//! C = 1 - 2c^2 + cosh t
//! D = 4c^2 - c - 1 - cosh t - c cosh t
//! ```
//!
//! Each factor is evaluated on the offsets `cosh - 1` so that small `a`
//! keeps its accuracy.

use crate::edge::cosh_m1;
use crate::error::{Error, Result};
use crate::numeric::{tanh_sinh, QuadratureConfig};

use super::{clamp_nonnegative, Route, VolumeDiagnostics, VolumeResult};

pub(crate) fn regular_integrand(a: f64, t: f64) -> f64 {
    let c = a.cosh();
    let ya = cosh_m1(a);
    let yt = cosh_m1(t);
    let sh2a = ya * (ya + 2.0);
    let big_a = 2.0 * t * c * c * (ya * yt).sqrt();
    let big_b = a * (2.0 * ya * ya + yt) * ((2.0 + ya) * (2.0 + yt)).sqrt();
    let big_c = yt - 2.0 * sh2a;
    let big_d = 2.0 * (2.0 * c + 1.0) * ya - (1.0 + c) * yt;
    (big_a - big_b) / (big_c * big_d.sqrt())
}

/// Volume of the regular tetrahedron with edge length `a`.
pub fn volume_regular(a: f64, cfg: &QuadratureConfig) -> Result<VolumeResult> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::domain("a", a, "edge length must be finite and non-negative"));
    }
    cfg.validate()?;
    if a == 0.0 {
        return Ok(VolumeResult::flat(Route::Regular, "zero edge length"));
    }
    let q = tanh_sinh(|t, _, _| regular_integrand(a, t), 0.0, a, cfg)?;
    let (value, clamped) = clamp_nonnegative(0.5 * q.value, cfg.abs_tol)?;
    Ok(VolumeResult {
        value,
        error_estimate: 0.5 * q.error_estimate,
        evaluations: q.evaluations,
        route: Route::Regular,
        diagnostics: VolumeDiagnostics {
            converged: q.converged,
            clamped_negative: clamped,
            skipped: q.skipped,
            lower: Some(0.0),
            upper: Some(a),
            ..Default::default()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edge::EdgeLengths;
    use crate::volume::volume_edges;

    /// The same integrand written with plain hyperbolic cosines.
    fn plain(a: f64, t: f64) -> f64 {
        let (ca, ct) = (a.cosh(), t.cosh());
        let big_a = 2.0 * t * ca * ca * ((ca - 1.0) * (ct - 1.0)).sqrt();
        let big_b = a * (1.0 - 4.0 * ca + 2.0 * ca * ca + ct) * ((ca + 1.0) * (ct + 1.0)).sqrt();
        let big_c = 1.0 - 2.0 * ca * ca + ct;
        let big_d = 4.0 * ca * ca - ca - 1.0 - ct - ca * ct;
        (big_a - big_b) / (big_c * big_d.sqrt())
    }

    #[test]
    fn offsets_match_plain_form() {
        for (a, t) in [(1.0, 0.3), (1.0, 0.99), (2.5, 1.7), (0.5, 0.01)] {
            let x = regular_integrand(a, t);
            let y = plain(a, t);
            assert!((x - y).abs() < 1e-12 * y.abs().max(1.0), "{a} {t}: {x} {y}");
        }
    }

    #[test]
    fn zero_edge() {
        assert_eq!(volume_regular(0.0, &QuadratureConfig::default()).unwrap().value, 0.0);
        assert!(volume_regular(-1.0, &QuadratureConfig::default()).is_err());
    }

    #[test]
    fn known_values() {
        let cfg = QuadratureConfig::tight();
        let v1 = volume_regular(1.0, &cfg).unwrap().value;
        assert!((v1 - 0.090_597_925_377_724_2).abs() < 1e-12, "{v1}");
        let e1 = volume_edges(&EdgeLengths::regular(1.0).unwrap(), &cfg).unwrap().value;
        assert!((v1 - e1).abs() < 1e-8);
        let v10 = volume_regular(10.0, &cfg).unwrap().value;
        assert!((v10 - 1.014_076_665_306_593).abs() < 1e-9, "{v10}");
    }
}
