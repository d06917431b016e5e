//! Dihedral angles from the cofactors of the edge matrix, and the Gram
//! matrix of a set of dihedral angles.
//!
//! The cofactor at `(i, j)` gives the angle on the edge joining the two
//! other vertices: `cos theta = -c_ij / sqrt(c_ii c_jj)`. The angle is
//! evaluated as `atan2(sqrt(-delta) sinh l, -c_ij)`, which agrees with the
//! arccosine through the identity `c_ii c_jj - c_ij^2 = -delta sinh^2 l` and
//! stays accurate near 0 and pi.

use serde::{Deserialize, Serialize};

use crate::edge::{edge_index, opposite_edge, CofactorSet, EDGE_NAMES, EDGE_VERTICES};
use crate::error::{Error, Result};
use crate::tolerances::TOLERANCES;

/// The six dihedral angles in radians, named by their edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DihedralAngles {
    pub th12: f64,
    pub th13: f64,
    pub th14: f64,
    pub th23: f64,
    pub th24: f64,
    pub th34: f64,
}

impl DihedralAngles {
    pub fn from_array(v: [f64; 6]) -> Self {
        Self {
            th12: v[0],
            th13: v[1],
            th14: v[2],
            th23: v[3],
            th24: v[4],
            th34: v[5],
        }
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.th12, self.th13, self.th14, self.th23, self.th24, self.th34]
    }

    /// Angle on the edge joining zero-based vertices `i != j`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.as_array()[edge_index(i, j)]
    }

    pub fn to_degrees(&self) -> [f64; 6] {
        self.as_array().map(f64::to_degrees)
    }

    /// Largest absolute difference over the six edges.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.as_array()
            .iter()
            .zip(other.as_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// An angle and whether its cosine had to be clamped into `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Angle {
    pub value: f64,
    pub clamped: bool,
}

/// The dihedral angle on the edge joining zero-based vertices `k != l`,
/// read off the cofactor of the two other vertices.
///
/// Only `c_ii` and `c_jj` of those two vertices must be positive, so the
/// angle on the hinge edge 1-2 is still defined at the fold where vertices
/// 3 and 4 coincide.
pub fn dihedral_angle(cof: &CofactorSet, k: usize, l: usize) -> Result<Angle> {
    let e = edge_index(k, l);
    let (i, j) = EDGE_VERTICES[opposite_edge(e)];
    let (cii, cjj, cij) = (cof.c[i][i], cof.c[j][j], cof.c[i][j]);
    for (idx, v) in [(i, cii), (j, cjj)] {
        if !(v > 0.0) {
            return Err(Error::NotATetrahedron(format!(
                "diagonal cofactor c{0}{0} = {v} is not positive",
                idx + 1
            )));
        }
    }
    let cos = -cij / (cii * cjj).sqrt();
    if !cos.is_finite() || cos.abs() > 1.0 + TOLERANCES.cos_clamp {
        return Err(Error::Inconsistent(format!(
            "cosine of the dihedral angle on {} is {cos}",
            EDGE_NAMES[e]
        )));
    }
    let sin_scaled = (-cof.delta).max(0.0).sqrt() * cof.edge_matrix().sinh_sq(k, l).max(0.0).sqrt();
    Ok(Angle {
        value: sin_scaled.atan2(-cij),
        clamped: cos.abs() > 1.0,
    })
}

/// All six angles plus a per-edge clamping flag.
pub fn dihedral_angles_flagged(cof: &CofactorSet) -> Result<(DihedralAngles, [bool; 6])> {
    for i in 0..4 {
        if !(cof.c[i][i] > 0.0) {
            return Err(Error::NotATetrahedron(format!(
                "diagonal cofactor c{0}{0} = {1} is not positive",
                i + 1,
                cof.c[i][i]
            )));
        }
    }
    let mut out = [0.0; 6];
    let mut flags = [false; 6];
    for (k, &(a, b)) in EDGE_VERTICES.iter().enumerate() {
        let angle = dihedral_angle(cof, a, b)?;
        out[k] = angle.value;
        flags[k] = angle.clamped;
    }
    Ok((DihedralAngles::from_array(out), flags))
}

/// The six dihedral angles. Requires every `c_ii > 0`.
pub fn dihedral_angles(cof: &CofactorSet) -> Result<DihedralAngles> {
    dihedral_angles_flagged(cof).map(|(a, _)| a)
}

/// Gram matrix with unit diagonal and `g[i][j] = -cos theta_ij`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GramMatrix {
    pub g: [[f64; 4]; 4],
}

impl GramMatrix {
    pub fn det(&self) -> f64 {
        crate::edge::cofactor_matrix(&self.g).1
    }
}

pub fn gram_from_angles(angles: &DihedralAngles) -> Result<GramMatrix> {
    let mut g = [[0.0; 4]; 4];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
        let th = angles.as_array()[k];
        if !(0.0..=std::f64::consts::PI).contains(&th) {
            let name = format!("th{}{}", i + 1, j + 1);
            return Err(Error::domain(name, th, "dihedral angle must lie in [0, pi]"));
        }
        g[i][j] = -th.cos();
        g[j][i] = g[i][j];
    }
    Ok(GramMatrix { g })
}
