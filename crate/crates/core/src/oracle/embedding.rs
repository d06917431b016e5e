//! Vertices on the hyperboloid `<v, v> = -1` realizing an edge matrix.
//!
//! The Minkowski form has signature (-, +, +, +), so the vertex Gram matrix
//! is exactly `-E`. Vertices are placed one coordinate at a time:
//! `v1 = (1, 0, 0, 0)`, `v2` in the first plane, `v3` in the first 3-space.
//! The squared pivots are ratios of principal minors of `E`
//! (`sinh^2 l12`, `c44 / sinh^2 l12`, `-det E / c44`) and are taken from
//! the accurate cofactors.

use serde::Serialize;

use crate::edge::{cofactors, EdgeMatrix};
use crate::error::{Error, Result};
use crate::tolerances::TOLERANCES;

pub fn minkowski(u: &[f64; 4], v: &[f64; 4]) -> f64 {
    -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VertexEmbedding {
    pub v: [[f64; 4]; 4],
    /// Largest `|<vi, vj> + e_ij|` over all pairs, diagonal included.
    pub gram_resid: f64,
}

impl VertexEmbedding {
    /// Hyperbolic distance between vertices `i` and `j`, from the
    /// Euclidean-looking chord `<vi - vj, vi - vj> = 4 sinh^2(d / 2)`.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        let d: [f64; 4] = std::array::from_fn(|k| self.v[i][k] - self.v[j][k]);
        let q = minkowski(&d, &d).max(0.0);
        2.0 * (0.5 * q.sqrt()).asinh()
    }

    /// Vertex `i` in the Klein ball.
    pub fn klein(&self, i: usize) -> [f64; 3] {
        let v = &self.v[i];
        [v[1] / v[0], v[2] / v[0], v[3] / v[0]]
    }
}

/// Square root of a pivot, or the rank at which the factorization stops.
fn pivot(sq: f64, scale: f64, rank: usize, what: &str) -> Result<f64> {
    let thr = TOLERANCES.embed_pivot * scale.max(f64::MIN_POSITIVE);
    if sq < -thr {
        return Err(Error::NotRealizable(format!("{what} has squared length {sq}")));
    }
    if sq <= thr {
        return Err(Error::DegenerateEmbedding { rank });
    }
    Ok(sq.sqrt())
}

pub fn embed_vertices(e: &EdgeMatrix) -> Result<VertexEmbedding> {
    let cof = cofactors(e);
    let f = |i: usize, j: usize| e.offset(i, j);
    let sh2 = |i: usize, j: usize| e.sinh_sq(i, j);

    let sh12 = pivot(sh2(0, 1), 1.0 + e.get(0, 1).powi(2), 1, "vertex 2")?;
    let ch = |i: usize, j: usize| e.get(i, j);

    // cosh a cosh b - cosh c on the offsets
    let p = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| {
        f(a.0, a.1) + f(b.0, b.1) + f(a.0, a.1) * f(b.0, b.1) - f(c.0, c.1)
    };
    let x3 = p((0, 1), (0, 2), (1, 2)) / sh12;
    let y3 = pivot(cof.c[3][3] / sh2(0, 1), sh2(0, 2), 2, "vertex 3")?;

    let x4 = p((0, 1), (0, 3), (1, 3)) / sh12;
    let y4 = (p((0, 2), (0, 3), (2, 3)) - x3 * x4) / y3;
    if !(cof.c[3][3] > 0.0) {
        return Err(Error::NotRealizable(format!("c44 = {} is not positive", cof.c[3][3])));
    }
    let z4 = pivot(-cof.delta / cof.c[3][3], sh2(0, 3), 3, "vertex 4")?;

    let v = [
        [1.0, 0.0, 0.0, 0.0],
        [ch(0, 1), sh12, 0.0, 0.0],
        [ch(0, 2), x3, y3, 0.0],
        [ch(0, 3), x4, y4, z4],
    ];
    let mut gram_resid: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            let r = (minkowski(&v[i], &v[j]) + e.get(i, j)).abs() / e.get(i, j);
            gram_resid = gram_resid.max(r);
        }
    }
    Ok(VertexEmbedding { v, gram_resid })
}
