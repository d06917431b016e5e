//! Euclidean tetrahedron volume from the Cayley–Menger determinant.

use crate::edge::{EdgeLengths, EDGE_VERTICES};
use crate::error::{Error, Result};

/// Determinant by LU with partial pivoting.
fn det5(mut m: [[f64; 5]; 5]) -> f64 {
    let mut det = 1.0;
    for col in 0..5 {
        let piv = (col..5)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(piv, col);
            det = -det;
        }
        det *= m[col][col];
        for r in (col + 1)..5 {
            let k = m[r][col] / m[col][col];
            for c in col..5 {
                m[r][c] -= k * m[col][c];
            }
        }
    }
    det
}

/// `sqrt(CM / 288)`, treating the six lengths as Euclidean distances.
pub fn euclidean_volume_cm(lengths: &EdgeLengths) -> Result<f64> {
    lengths.validate()?;
    let mut m = [[1.0; 5]; 5];
    m[0][0] = 0.0;
    for i in 1..5 {
        m[i][i] = 0.0;
    }
    for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
        let d2 = lengths.as_array()[k].powi(2);
        m[i + 1][j + 1] = d2;
        m[j + 1][i + 1] = d2;
    }
    let cm = det5(m);
    let scale = lengths.as_array().iter().fold(0.0f64, |a, &l| a.max(l * l)).powi(3);
    if cm < -1e-10 * scale {
        return Err(Error::NotRealizable(format!(
            "Cayley–Menger determinant {cm} is negative; the lengths are not Euclidean"
        )));
    }
    Ok((cm.max(0.0) / 288.0).sqrt())
}
