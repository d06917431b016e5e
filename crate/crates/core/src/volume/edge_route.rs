//! Volume as an integral over the sixth edge length.
//!
//! With every length fixed except `l34 = t`, the Schläfli formula and the
//! derivatives of the dihedral angles with respect to `t` give
//!
//! ```text
//! dV/dt = 1 / (2 sqrt(-D)) * ( t [c14 (e24 e34 - e23) / c11 + c24 (e14 e34 - e13) / c22]
//!         - sinh t [(l24 sh24 c14 + l23 sh23 c13) / c11
//!                   + (l13 sh13 c23 + l14 sh14 c24) / c22 + l12 sh12] )
//! ```
//!
//! where `D = det E` and the cofactors are taken at `l34 = t`. The first
//! bracket is the Jacobi-reduced form of
//! `(c11 c23 - c12 c13) / D` and `(c13 c22 - c12 c23) / D`.
//!
//! `D` is quadratic in `x = cosh t` with roots `cosh l1`, `cosh l2`, so
//! `-D = sinh^2 l12 (x - cosh l1)(cosh l2 - x)`. Both gaps are evaluated
//! from the distances to the integration limits that the quadrature
//! supplies, which keeps the `1 / sqrt(-D)` endpoint singularity accurate.

use crate::edge::{cofactors, edge_matrix_from_lengths, EdgeLengths};
use crate::error::{Error, Result};
use crate::existence::{exists, l34_bounds, L34Bounds};
use crate::numeric::{tanh_sinh, Quadrature, QuadratureConfig};
use crate::tolerances::TOLERANCES;

use super::{clamp_nonnegative, Route, VolumeDiagnostics, VolumeResult};

pub(crate) struct EdgeIntegrand {
    base: EdgeLengths,
    l1: f64,
    l2: f64,
    sh12_sq: f64,
    /// `l sinh l` per edge, in storage order.
    w: [f64; 6],
}

pub(crate) struct Parts {
    pub minus_delta: f64,
    pub c11: f64,
    pub c22: f64,
    pub value: f64,
}

impl EdgeIntegrand {
    pub(crate) fn new(base: &EdgeLengths, bounds: &L34Bounds) -> Self {
        Self {
            base: *base,
            l1: bounds.l1,
            l2: bounds.l2,
            sh12_sq: base.l12.sinh().powi(2),
            w: base.as_array().map(|l| l * l.sinh()),
        }
    }

    /// Evaluates at `t` with `d_lo = t - l1` and `d_hi = l2 - t`.
    pub(crate) fn parts(&self, t: f64, d_lo: f64, d_hi: f64) -> Parts {
        let nan = Parts {
            minus_delta: f64::NAN,
            c11: f64::NAN,
            c22: f64::NAN,
            value: f64::NAN,
        };
        let Ok(e) = edge_matrix_from_lengths(&self.base.with_l34(t)) else {
            return nan;
        };
        let c = cofactors(&e).c;
        let gap_lo = 2.0 * (0.5 * (t + self.l1)).sinh() * (0.5 * d_lo).sinh();
        let gap_hi = 2.0 * (0.5 * (self.l2 + t)).sinh() * (0.5 * d_hi).sinh();
        let minus_delta = self.sh12_sq * gap_lo * gap_hi;

        let (c11, c22) = (c[0][0], c[1][1]);
        let (c13, c14, c23, c24) = (c[0][2], c[0][3], c[1][2], c[1][3]);
        let f = |i: usize, j: usize| e.offset(i, j);
        // e24 e34 - e23 and e14 e34 - e13 on the offsets
        let r1 = f(1, 3) + f(2, 3) + f(1, 3) * f(2, 3) - f(1, 2);
        let r2 = f(0, 3) + f(2, 3) + f(0, 3) * f(2, 3) - f(0, 2);
        let w = &self.w;
        let angle_part = t * (c14 * r1 / c11 + c24 * r2 / c22);
        let length_part = t.sinh() * ((w[4] * c14 + w[3] * c13) / c11 + (w[1] * c23 + w[2] * c24) / c22 + w[0]);
        Parts {
            minus_delta,
            c11,
            c22,
            value: (angle_part - length_part) / (2.0 * minus_delta.sqrt()),
        }
    }
}

fn checked_bounds(lengths: &EdgeLengths) -> Result<L34Bounds> {
    lengths.validate()?;
    l34_bounds(lengths.l12, lengths.l13, lengths.l14, lengths.l23, lengths.l24)
}

/// `dV/dl34` at `l34 = t`, the other five lengths taken from `lengths`.
pub fn volume_derivative(lengths: &EdgeLengths, t: f64) -> Result<f64> {
    let b = checked_bounds(lengths)?;
    if !(t > b.l1 && t < b.l2) {
        return Err(Error::OutsideDomain(format!(
            "t = {t} is not inside the admissible interval ({}, {})",
            b.l1, b.l2
        )));
    }
    let p = EdgeIntegrand::new(lengths, &b).parts(t, t - b.l1, b.l2 - t);
    if !(p.minus_delta > 0.0) {
        return Err(Error::OutsideDomain(format!(
            "det E = {} is not negative at t = {t}",
            -p.minus_delta
        )));
    }
    if !(p.c11 > 0.0 && p.c22 > 0.0) {
        return Err(Error::NotATetrahedron(format!(
            "c11 = {}, c22 = {} at t = {t}",
            p.c11, p.c22
        )));
    }
    Ok(p.value)
}

/// `integral of dV/dl34` over `[from, to]`, both inside `[l1, l2]`.
pub fn integrate_derivative(lengths: &EdgeLengths, from: f64, to: f64, cfg: &QuadratureConfig) -> Result<Quadrature> {
    let b = checked_bounds(lengths)?;
    let slack = TOLERANCES.boundary * (1.0 + b.l2);
    for (name, v) in [("from", from), ("to", to)] {
        if !(v >= b.l1 - slack && v <= b.l2 + slack) {
            return Err(Error::OutsideDomain(format!(
                "{name} = {v} is outside [{}, {}]",
                b.l1, b.l2
            )));
        }
    }
    let (from, to) = (from.clamp(b.l1, b.l2), to.clamp(b.l1, b.l2));
    let ctx = EdgeIntegrand::new(lengths, &b);
    let (lo, hi) = (from.min(to), from.max(to));
    let q = tanh_sinh(
        |t, da, db| ctx.parts(t, (lo - b.l1) + da, (b.l2 - hi) + db).value,
        lo,
        hi,
        cfg,
    )?;
    Ok(if from <= to {
        q
    } else {
        Quadrature { value: -q.value, ..q }
    })
}

/// Volume by the edge integral from the fold position `l1` to `l34`.
pub fn volume_edges(lengths: &EdgeLengths, cfg: &QuadratureConfig) -> Result<VolumeResult> {
    lengths.validate()?;
    cfg.validate()?;
    let report = exists(lengths);
    if !report.exists {
        return Err(Error::NonExistent(Box::new(report)));
    }
    if report.degenerate {
        let which: Vec<&str> = report.slacks.iter().filter(|s| s.degenerate).map(|s| s.name).collect();
        let note = if which.is_empty() {
            "an edge has zero length".to_string()
        } else {
            format!("flat configuration ({})", which.join(", "))
        };
        return Ok(VolumeResult::flat(Route::EdgeIntegral, note));
    }
    let b = report.bounds.expect("bounds exist for a valid tetrahedron");
    let q = integrate_derivative(lengths, b.l1, lengths.l34, cfg)?;
    let (value, clamped) = clamp_nonnegative(q.value, cfg.abs_tol)?;
    let delta_at = |t: f64| {
        edge_matrix_from_lengths(&lengths.with_l34(t))
            .map(|e| cofactors(&e).delta)
            .ok()
    };
    Ok(VolumeResult {
        value,
        error_estimate: q.error_estimate,
        evaluations: q.evaluations,
        route: Route::EdgeIntegral,
        diagnostics: VolumeDiagnostics {
            degenerate: false,
            converged: q.converged,
            clamped_negative: clamped,
            skipped: q.skipped,
            lower: Some(b.l1),
            upper: Some(lengths.l34),
            delta_at_lower: delta_at(b.l1),
            delta_at_upper: delta_at(lengths.l34),
            notes: Vec::new(),
        },
    })
}
