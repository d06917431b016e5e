//! Volume as an integral over one dihedral angle.
//!
//! The angles enter through the Gram matrix of the faces, face `k` being
//! the one opposite vertex `4 - k` (one-based). In that layout `th34` sits
//! at position (3, 4) and the cofactor that pairs with it is the one at
//! (1, 2). Varying `th34 = t` upward from its actual value, the Gram
//! determinant rises from negative to 0 at `t0`, where the tetrahedron
//! degenerates. The Schläfli formula `dV/dth34 = -l34 / 2` with
//! `l34 = atanh(sqrt(-det G) sin t / c12)` integrates to
//!
//! ```text
//! V = 1/2 * integral_{th34}^{t0} atanh(sqrt(-det G(t)) sin t / c12(t)) dt
//! ```
//!
//! which is `1/4 * integral_{t0}^{th34} log((c - s) / (c + s)) dt` with
//! `s = sqrt(-det G) sin t`.

use std::f64::consts::PI;

use crate::angles::DihedralAngles;
use crate::edge::{cofactor_matrix, edge_index, opposite_edge};
use crate::error::{Error, Result};
use crate::numeric::{bisect, first_sign_change, tanh_sinh, QuadratureConfig};
use crate::tolerances::TOLERANCES;

use super::{clamp_nonnegative, Route, VolumeDiagnostics, VolumeResult};

/// Face Gram matrix with `th34` replaced by `t`.
fn face_gram(angles: &DihedralAngles, t: f64) -> [[f64; 4]; 4] {
    let th = angles.as_array();
    let mut g = [[0.0; 4]; 4];
    for i in 0..4 {
        g[i][i] = 1.0;
        for j in (i + 1)..4 {
            let edge = opposite_edge(edge_index(3 - i, 3 - j));
            g[i][j] = -th[edge].cos();
            g[j][i] = g[i][j];
        }
    }
    g[2][3] = -t.cos();
    g[3][2] = g[2][3];
    g
}

fn gram_det(angles: &DihedralAngles, t: f64) -> f64 {
    cofactor_matrix(&face_gram(angles, t)).1
}

fn integrand(angles: &DihedralAngles, t: f64) -> f64 {
    let (c, det) = cofactor_matrix(&face_gram(angles, t));
    let s = (-det).max(0.0).sqrt() * t.sin();
    (s / c[0][1]).atanh()
}

/// Volume from the six dihedral angles.
pub fn volume_sforza(angles: &DihedralAngles, cfg: &QuadratureConfig) -> Result<VolumeResult> {
    cfg.validate()?;
    for (k, th) in angles.as_array().into_iter().enumerate() {
        if !(0.0..=PI).contains(&th) {
            return Err(Error::domain(
                ["th12", "th13", "th14", "th23", "th24", "th34"][k],
                th,
                "dihedral angle must lie in [0, pi]",
            ));
        }
    }
    let th34 = angles.th34;
    let det0 = gram_det(angles, th34);
    if det0.abs() <= TOLERANCES.gram_det_zero {
        let mut r = VolumeResult::flat(Route::Sforza, "Gram determinant vanishes at th34");
        r.diagnostics.delta_at_lower = Some(det0);
        return Ok(r);
    }
    if det0 > 0.0 {
        return Err(Error::Inconsistent(format!(
            "Gram determinant {det0} at th34 is positive; the angles do not bound a compact tetrahedron"
        )));
    }
    let f = |t: f64| gram_det(angles, t);
    let (a, b) = first_sign_change(f, th34, PI, TOLERANCES.root_scan_points)
        .ok_or_else(|| Error::Inconsistent("the Gram determinant has no root between th34 and pi".to_string()))?;
    let t0 = bisect(f, a, b, TOLERANCES.root_bisect)?;
    let q = tanh_sinh(|t, _, _| integrand(angles, t), th34, t0, cfg)?;
    let (value, clamped) = clamp_nonnegative(0.5 * q.value, cfg.abs_tol)?;
    Ok(VolumeResult {
        value,
        error_estimate: 0.5 * q.error_estimate,
        evaluations: q.evaluations,
        route: Route::Sforza,
        diagnostics: VolumeDiagnostics {
            converged: q.converged,
            clamped_negative: clamped,
            skipped: q.skipped,
            lower: Some(th34),
            upper: Some(t0),
            delta_at_lower: Some(det0),
            delta_at_upper: Some(gram_det(angles, t0)),
            ..Default::default()
        },
    })
}

/// The root `t0` for the given angles, if any.
pub fn sforza_root(angles: &DihedralAngles) -> Option<f64> {
    let f = |t: f64| gram_det(angles, t);
    let (a, b) = first_sign_change(f, angles.th34, PI, TOLERANCES.root_scan_points)?;
    bisect(f, a, b, TOLERANCES.root_bisect).ok()
}
