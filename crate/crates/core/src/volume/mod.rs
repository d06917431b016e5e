//! Volume of a compact tetrahedron.
//!
//! The main route integrates the derivative of the volume with respect to
//! `l34` from the fold position `l1`, where the tetrahedron is flat, up to
//! the actual `l34` ([`volume_edges`]). [`volume_sforza`] integrates over
//! the dihedral angle `th34` instead and serves as a cross-check.
//! [`volume_regular`] is the edge integral specialised to six equal edges.

mod edge_route;
mod regular;
mod schlafli;
mod sforza;

use serde::Serialize;

pub use edge_route::{integrate_derivative, volume_derivative, volume_edges};
pub use regular::volume_regular;
pub use schlafli::schlafli_residual;
pub use sforza::{sforza_root, volume_sforza};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    EdgeIntegral,
    Sforza,
    Regular,
    MonteCarlo,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VolumeDiagnostics {
    /// The input is a flat configuration; the volume is 0 by definition.
    pub degenerate: bool,
    /// The quadrature met its tolerance.
    pub converged: bool,
    /// A small negative quadrature result was replaced by 0.
    pub clamped_negative: bool,
    /// Integrand evaluations that were not finite and were dropped.
    pub skipped: usize,
    /// Integration limits.
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    /// Determinant of the edge or Gram matrix at each limit.
    pub delta_at_lower: Option<f64>,
    pub delta_at_upper: Option<f64>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VolumeResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
    pub route: Route,
    pub diagnostics: VolumeDiagnostics,
}

impl VolumeResult {
    pub(crate) fn flat(route: Route, note: impl Into<String>) -> Self {
        VolumeResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
            route,
            diagnostics: VolumeDiagnostics {
                degenerate: true,
                converged: true,
                notes: vec![note.into()],
                ..Default::default()
            },
        }
    }
}

/// Replaces a tiny negative quadrature result by 0. Anything below
/// `-abs_tol` is a numerical failure.
pub(crate) fn clamp_nonnegative(value: f64, abs_tol: f64) -> crate::Result<(f64, bool)> {
    if !value.is_finite() {
        return Err(crate::Error::Numerical(format!("volume quadrature returned {value}")));
    }
    if value >= 0.0 {
        Ok((value, false))
    } else if value >= -abs_tol {
        Ok((0.0, true))
    } else {
        Err(crate::Error::Numerical(format!(
            "volume quadrature returned a negative value {value}"
        )))
    }
}
