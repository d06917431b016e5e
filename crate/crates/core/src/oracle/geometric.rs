//! Dihedral angles measured on embedded vertices.
//!
//! For the edge `ab` with remaining vertices `c`, `d`: the face angles at
//! `a` come from tangent vectors `u_p = v_p + <v_p, v_a> v_a`, and the
//! dihedral angle is the angle at `ab` of the spherical triangle they span:
//!
//! ```text
//! cos th_ab = (cos cad - cos bac cos bad) / (sin bac sin bad)
//! ```

use crate::angles::DihedralAngles;
use crate::edge::EDGE_VERTICES;
use crate::error::{Error, Result};

use super::embedding::{minkowski, VertexEmbedding};

fn tangent(emb: &VertexEmbedding, at: usize, p: usize) -> [f64; 4] {
    let (va, vp) = (&emb.v[at], &emb.v[p]);
    let k = minkowski(vp, va);
    std::array::from_fn(|i| vp[i] + k * va[i])
}

/// Cosine and sine of the angle between two spacelike tangent vectors.
fn face_angle(u: &[f64; 4], w: &[f64; 4]) -> (f64, f64) {
    let (uu, ww, uw) = (minkowski(u, u), minkowski(w, w), minkowski(u, w));
    let cos = uw / (uu * ww).sqrt();
    let sin = ((uu * ww - uw * uw).max(0.0) / (uu * ww)).sqrt();
    (cos, sin)
}

pub fn dihedral_angles_geometric(emb: &VertexEmbedding) -> Result<DihedralAngles> {
    let mut out = [0.0; 6];
    for (k, &(a, b)) in EDGE_VERTICES.iter().enumerate() {
        let others: Vec<usize> = (0..4).filter(|&x| x != a && x != b).collect();
        let (c, d) = (others[0], others[1]);
        let (ub, uc, ud) = (tangent(emb, a, b), tangent(emb, a, c), tangent(emb, a, d));
        let (cos_bac, sin_bac) = face_angle(&ub, &uc);
        let (cos_bad, sin_bad) = face_angle(&ub, &ud);
        let (cos_cad, _) = face_angle(&uc, &ud);
        let denom = sin_bac * sin_bad;
        if !(denom > 0.0) {
            return Err(Error::DegenerateEmbedding { rank: 2 });
        }
        let cos = (cos_cad - cos_bac * cos_bad) / denom;
        if !cos.is_finite() {
            return Err(Error::Numerical(format!(
                "non-finite cosine on edge {}{}",
                a + 1,
                b + 1
            )));
        }
        out[k] = cos.clamp(-1.0, 1.0).acos();
    }
    Ok(DihedralAngles::from_array(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::dihedral_angles;
    use crate::edge::{cofactors, edge_matrix_from_lengths, EdgeLengths};
    use crate::oracle::embed_vertices;
    use std::f64::consts::PI;

    fn geo(l: &EdgeLengths) -> DihedralAngles {
        dihedral_angles_geometric(&embed_vertices(&edge_matrix_from_lengths(l).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn regular() {
        let c = 1f64.cosh();
        let want = (c / (2.0 * c + 1.0)).acos();
        for th in geo(&EdgeLengths::regular(1.0).unwrap()).as_array() {
            assert!((th - want).abs() < 1e-12);
        }
    }

    #[test]
    fn tiny_regular_is_euclidean() {
        for th in geo(&EdgeLengths::regular(1e-4).unwrap()).as_array() {
            assert!((th - (1.0f64 / 3.0).acos()).abs() < 1e-6, "{th}");
        }
    }

    #[test]
    fn near_upper_fold() {
        let l2 = crate::existence::l34_bounds(1.0, 1.0, 1.0, 1.0, 1.0).unwrap().l2;
        let l = EdgeLengths::new(1.0, 1.0, 1.0, 1.0, 1.0, l2 - 1e-4).unwrap();
        let g = geo(&l);
        assert!(PI - g.th12 < 0.05, "{}", g.th12);
        let c = dihedral_angles(&cofactors(&edge_matrix_from_lengths(&l).unwrap())).unwrap();
        assert!(g.max_abs_diff(&c) < 1e-9);
    }

    #[test]
    fn agrees_with_cofactor_rule() {
        let l = EdgeLengths::new(1.1, 0.9, 1.2, 1.0, 0.95, 1.05).unwrap();
        let c = dihedral_angles(&cofactors(&edge_matrix_from_lengths(&l).unwrap())).unwrap();
        assert!(geo(&l).max_abs_diff(&c) < 1e-12);
    }
}
