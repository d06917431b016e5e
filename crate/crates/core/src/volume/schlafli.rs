//! Consistency of volumes and angles with the Schläfli formula
//! `dV = -1/2 sum l_ij dth_ij`.

use crate::angles::dihedral_angles;
use crate::edge::{cofactors, edge_matrix_from_lengths, EdgeLengths};
use crate::error::{Error, Result};
use crate::existence::exists;
use crate::numeric::QuadratureConfig;

use super::volume_edges;

/// `|dV/dl34 + 1/2 sum_e l_e dth_e/dl34|` with both derivatives taken as
/// central differences with step `h` in `l34`. Volumes come from the edge
/// integral, angles from the cofactors. The residual is `O(h^2)`.
pub fn schlafli_residual(lengths: &EdgeLengths, h: f64) -> Result<f64> {
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::domain("h", h, "step must be positive and finite"));
    }
    let report = exists(lengths);
    if !report.exists || report.degenerate {
        return Err(Error::Precondition(
            "the Schläfli check needs a non-degenerate tetrahedron".to_string(),
        ));
    }
    let b = report.bounds.expect("bounds exist for a valid tetrahedron");
    if lengths.l34 - h <= b.l1 || lengths.l34 + h >= b.l2 {
        return Err(Error::Precondition(format!(
            "l34 +- h leaves the admissible interval ({}, {})",
            b.l1, b.l2
        )));
    }
    let cfg = QuadratureConfig::tight();
    let at = |t: f64| -> Result<(f64, [f64; 6])> {
        let l = lengths.with_l34(t);
        let v = volume_edges(&l, &cfg)?.value;
        let th = dihedral_angles(&cofactors(&edge_matrix_from_lengths(&l)?))?;
        Ok((v, th.as_array()))
    };
    let (vp, thp) = at(lengths.l34 + h)?;
    let (vm, thm) = at(lengths.l34 - h)?;
    let dv = (vp - vm) / (2.0 * h);
    let work: f64 = lengths
        .as_array()
        .iter()
        .zip(thp.iter().zip(&thm))
        .map(|(l, (p, m))| l * (p - m) / (2.0 * h))
        .sum();
    Ok((dv + 0.5 * work).abs())
}
