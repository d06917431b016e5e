//! Edge lengths, the edge matrix and its cofactors.
//!
//! The edge matrix `E` has unit diagonal and `E[i][j] = cosh l_ij`. Besides
//! the entries themselves, [`EdgeMatrix`] keeps the offsets `cosh l - 1`,
//! computed as `2 sinh^2(l / 2)`. Cofactors and the determinant are expanded
//! on `E = J + F` (`J` the all-ones matrix) with one row subtracted from the
//! others. This keeps them accurate both for tiny tetrahedra, where every
//! entry of `E` is close to 1, and at the flat fold where vertices 3 and 4
//! coincide and rows 3 and 4 of `E` agree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field names in storage order.
pub const EDGE_NAMES: [&str; 6] = ["l12", "l13", "l14", "l23", "l24", "l34"];

/// Zero-based vertex pairs in storage order.
pub const EDGE_VERTICES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Storage index of the edge joining zero-based vertices `i != j`.
pub fn edge_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => panic!("no edge between vertices {i} and {j}"),
    }
}

/// Storage index of the edge opposite to edge `k` (the one sharing no vertex).
pub fn opposite_edge(k: usize) -> usize {
    5 - k
}

/// The six edge lengths.
///
/// Lengths are finite and non-negative. A zero length is accepted as the
/// boundary of the admissible region (two coinciding vertices); every
/// operation that needs a proper tetrahedron reports it as degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EdgeLengths {
    pub l12: f64,
    pub l13: f64,
    pub l14: f64,
    pub l23: f64,
    pub l24: f64,
    pub l34: f64,
}

impl EdgeLengths {
    pub fn new(l12: f64, l13: f64, l14: f64, l23: f64, l24: f64, l34: f64) -> Result<Self> {
        Self::from_array([l12, l13, l14, l23, l24, l34])
    }

    pub fn from_array(values: [f64; 6]) -> Result<Self> {
        let lengths = Self::from_array_unchecked(values);
        lengths.validate()?;
        Ok(lengths)
    }

    pub(crate) fn from_array_unchecked(v: [f64; 6]) -> Self {
        Self {
            l12: v[0],
            l13: v[1],
            l14: v[2],
            l23: v[3],
            l24: v[4],
            l34: v[5],
        }
    }

    /// All six edges equal to `a`.
    pub fn regular(a: f64) -> Result<Self> {
        Self::from_array([a; 6])
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in EDGE_NAMES.iter().zip(self.as_array()) {
            if !value.is_finite() {
                return Err(Error::domain(*name, value, "edge length must be finite"));
            }
            if value < 0.0 {
                return Err(Error::domain(*name, value, "edge length must be non-negative"));
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [f64; 6] {
        [self.l12, self.l13, self.l14, self.l23, self.l24, self.l34]
    }

    /// Length of the edge joining zero-based vertices `i != j`.
    pub fn length(&self, i: usize, j: usize) -> f64 {
        self.as_array()[edge_index(i, j)]
    }

    /// Copy with `l34` replaced; the integration variable of the volume
    /// formula.
    pub fn with_l34(&self, t: f64) -> Self {
        Self { l34: t, ..*self }
    }

    /// Relabels the vertices: new vertex `k` is old vertex `perm[k]`.
    pub fn relabeled(&self, perm: [usize; 4]) -> Self {
        let mut out = [0.0; 6];
        for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
            out[k] = self.length(perm[i], perm[j]);
        }
        Self::from_array_unchecked(out)
    }
}

/// `cosh l - 1` without cancellation.
pub(crate) fn cosh_m1(l: f64) -> f64 {
    let s = (0.5 * l).sinh();
    2.0 * s * s
}

/// The 4x4 edge matrix with unit diagonal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeMatrix {
    e: [[f64; 4]; 4],
    /// `e - 1` entrywise; zero on the diagonal.
    shift: [[f64; 4]; 4],
}

impl EdgeMatrix {
    /// Builds `E` from any symmetric matrix with unit diagonal. The entries
    /// need not come from real lengths (the Jacobi identities are algebraic).
    pub fn from_entries(m: [[f64; 4]; 4]) -> Result<Self> {
        let mut shift = [[0.0; 4]; 4];
        for i in 0..4 {
            if m[i][i] != 1.0 {
                return Err(Error::domain(
                    format!("e[{i}][{i}]"),
                    m[i][i],
                    "diagonal must be exactly 1",
                ));
            }
            for j in 0..4 {
                if !m[i][j].is_finite() {
                    return Err(Error::domain(format!("e[{i}][{j}]"), m[i][j], "entry must be finite"));
                }
                if m[i][j] != m[j][i] {
                    return Err(Error::domain(
                        format!("e[{i}][{j}]"),
                        m[i][j],
                        "matrix must be symmetric",
                    ));
                }
                if i != j {
                    shift[i][j] = m[i][j] - 1.0;
                }
            }
        }
        Ok(Self { e: m, shift })
    }

    pub fn entries(&self) -> &[[f64; 4]; 4] {
        &self.e
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.e[i][j]
    }

    /// `e[i][j] - 1`.
    pub fn offset(&self, i: usize, j: usize) -> f64 {
        self.shift[i][j]
    }

    /// `e[i][j]^2 - 1`, i.e. `sinh^2 l_ij` for entries built from lengths.
    pub fn sinh_sq(&self, i: usize, j: usize) -> f64 {
        let f = self.shift[i][j];
        f * (f + 2.0)
    }

    /// Simultaneous row/column permutation: new index `k` is old `perm[k]`.
    pub fn relabeled(&self, perm: [usize; 4]) -> Self {
        let mut e = [[0.0; 4]; 4];
        let mut shift = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                e[i][j] = self.e[perm[i]][perm[j]];
                shift[i][j] = self.shift[perm[i]][perm[j]];
            }
        }
        Self { e, shift }
    }
}

/// `E(T)` from the edge lengths. Zero lengths are allowed here.
pub fn edge_matrix_from_lengths(lengths: &EdgeLengths) -> Result<EdgeMatrix> {
    lengths.validate()?;
    let mut e = [[1.0; 4]; 4];
    let mut shift = [[0.0; 4]; 4];
    for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
        let l = lengths.as_array()[k];
        e[i][j] = l.cosh();
        e[j][i] = e[i][j];
        shift[i][j] = cosh_m1(l);
        shift[j][i] = shift[i][j];
    }
    Ok(EdgeMatrix { e, shift })
}

/// Cofactors `c_ij = (-1)^(i+j) E_ij` and `delta = det E`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CofactorSet {
    pub c: [[f64; 4]; 4],
    pub delta: f64,
    source: EdgeMatrix,
}

impl CofactorSet {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.c[i][j]
    }

    /// The edge matrix the cofactors were computed from.
    pub fn edge_matrix(&self) -> &EdgeMatrix {
        &self.source
    }
}

pub(crate) fn det3(m: &[[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `det(J + F)` for a 3x3 block `F`, pivoting on row `base`: the other rows
/// become differences `F_k - F_base`, and the pivot row splits into its `F`
/// part and its all-ones part.
fn det3_shifted(f: &[[f64; 3]; 3], base: usize) -> f64 {
    let mut g = *f;
    for (k, row) in g.iter_mut().enumerate() {
        if k != base {
            for c in 0..3 {
                row[c] = f[k][c] - f[base][c];
            }
        }
    }
    let mut with_j = g;
    with_j[base] = [1.0; 3];
    det3(&g) + det3(&with_j)
}

fn complement(skip: usize) -> [usize; 3] {
    let mut out = [0; 3];
    let mut n = 0;
    for k in 0..4 {
        if k != skip {
            out[n] = k;
            n += 1;
        }
    }
    out
}

/// Signed 3x3 minors of `E`, expanded on the shifted matrix.
pub fn cofactors(e: &EdgeMatrix) -> CofactorSet {
    let mut c = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let rows = complement(i);
            let cols = complement(j);
            let mut f = [[0.0; 3]; 3];
            for (r, &ri) in rows.iter().enumerate() {
                for (s, &cj) in cols.iter().enumerate() {
                    f[r][s] = e.shift[ri][cj];
                }
            }
            // Pivot on vertex 3 when present, so rows 3 and 4 enter as a
            // difference.
            let pivot_row = if i == 2 { 3 } else { 2 };
            let base = rows.iter().position(|&r| r == pivot_row).unwrap();
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            c[i][j] = sign * det3_shifted(&f, base);
            c[j][i] = c[i][j];
        }
    }
    CofactorSet {
        c,
        delta: det_shifted(e),
        source: *e,
    }
}

/// `det E` on the shifted matrix, pivoting on row 3 (index 2).
fn det_shifted(e: &EdgeMatrix) -> f64 {
    let base = 2;
    let mut g = [[0.0; 4]; 4];
    for k in 0..4 {
        if k != base {
            for c in 0..4 {
                g[k][c] = e.shift[k][c] - e.shift[base][c];
            }
        }
    }
    let rows = complement(base);
    let mut det = 0.0;
    for col in 0..4 {
        let cols = complement(col);
        let mut m = [[0.0; 3]; 3];
        for (r, &ri) in rows.iter().enumerate() {
            for (s, &cj) in cols.iter().enumerate() {
                m[r][s] = g[ri][cj];
            }
        }
        let sign = if (base + col) % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * e.e[base][col] * det3(&m);
    }
    det
}

/// Cofactor matrix and determinant of a general 4x4 matrix by plain minor
/// expansion.
pub(crate) fn cofactor_matrix(m: &[[f64; 4]; 4]) -> ([[f64; 4]; 4], f64) {
    let mut c = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let rows = complement(i);
            let cols = complement(j);
            let mut minor = [[0.0; 3]; 3];
            for (r, &ri) in rows.iter().enumerate() {
                for (s, &cj) in cols.iter().enumerate() {
                    minor[r][s] = m[ri][cj];
                }
            }
            let sign = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            c[i][j] = sign * det3(&minor);
        }
    }
    let det = (0..4).map(|j| m[0][j] * c[0][j]).sum();
    (c, det)
}

/// Largest `|sum_j e_ij c_kj - delta [i = k]|` over all `i, k`, each divided
/// by `1 + sum_j |e_ij c_kj|`.
pub fn cofactor_expansion_residual(e: &EdgeMatrix, cof: &CofactorSet) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for k in 0..4 {
            let terms = (0..4).map(|j| e.e[i][j] * cof.c[k][j]);
            let scale = 1.0 + terms.clone().map(f64::abs).sum::<f64>();
            let want = if i == k { cof.delta } else { 0.0 };
            worst = worst.max((terms.sum::<f64>() - want).abs() / scale);
        }
    }
    worst
}

/// Residuals of the fourteen Jacobi relations between pairs of cofactors of
/// `E` and entries of `E`, in a fixed order (the six principal ones first).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JacobiResiduals {
    /// `|LHS - RHS|` per identity.
    pub residuals: [f64; 14],
    /// `|LHS|` per identity, for relative scaling.
    pub lhs: [f64; 14],
}

impl JacobiResiduals {
    pub fn max_abs(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Largest `residual / max(1, |LHS|)`.
    pub fn max_relative(&self) -> f64 {
        self.residuals
            .iter()
            .zip(&self.lhs)
            .map(|(r, l)| r / l.abs().max(1.0))
            .fold(0.0, f64::max)
    }
}

/// Evaluates the fourteen identities. `cof` must come from `e`.
pub fn jacobi_residuals(e: &EdgeMatrix, cof: &CofactorSet) -> JacobiResiduals {
    // One-based accessors keep the identities readable.
    let c = |i: usize, j: usize| cof.c[i - 1][j - 1];
    let x = |i: usize, j: usize| e.e[i - 1][j - 1];
    // 1 - e_ij^2 = -sinh^2 l_ij
    let one_minus_sq = |i: usize, j: usize| -e.sinh_sq(i - 1, j - 1);
    let d = cof.delta;

    let pairs: [(f64, f64); 14] = [
        (c(1, 1) * c(2, 2) - c(1, 2) * c(1, 2), d * one_minus_sq(3, 4)),
        (c(1, 1) * c(3, 3) - c(1, 3) * c(1, 3), d * one_minus_sq(2, 4)),
        (c(2, 2) * c(3, 3) - c(2, 3) * c(2, 3), d * one_minus_sq(1, 4)),
        (c(3, 3) * c(4, 4) - c(3, 4) * c(3, 4), d * one_minus_sq(1, 2)),
        (c(2, 2) * c(4, 4) - c(2, 4) * c(2, 4), d * one_minus_sq(1, 3)),
        (c(1, 1) * c(4, 4) - c(1, 4) * c(1, 4), d * one_minus_sq(2, 3)),
        (
            c(1, 4) * c(2, 3) - c(1, 2) * c(3, 4),
            d * (x(1, 4) * x(2, 3) - x(1, 2) * x(3, 4)),
        ),
        (
            c(1, 3) * c(2, 4) - c(1, 2) * c(3, 4),
            d * (x(1, 3) * x(2, 4) - x(1, 2) * x(3, 4)),
        ),
        (
            c(1, 3) * c(4, 4) - c(1, 4) * c(3, 4),
            -d * (x(1, 3) - x(1, 2) * x(2, 3)),
        ),
        (c(1, 3) * c(1, 4) - c(1, 1) * c(3, 4), d * (x(3, 4) - x(2, 3) * x(2, 4))),
        (
            c(3, 3) * c(1, 4) - c(3, 4) * c(1, 3),
            -d * (x(1, 4) - x(1, 2) * x(2, 4)),
        ),
        (c(2, 3) * c(2, 4) - c(3, 4) * c(2, 2), d * (x(3, 4) - x(1, 3) * x(1, 4))),
        (
            c(2, 3) * c(4, 4) - c(2, 4) * c(3, 4),
            -d * (x(2, 3) - x(1, 2) * x(1, 3)),
        ),
        (
            c(3, 3) * c(2, 4) - c(3, 4) * c(2, 3),
            -d * (x(2, 4) - x(1, 2) * x(1, 4)),
        ),
    ];
    let mut residuals = [0.0; 14];
    let mut lhs = [0.0; 14];
    for (k, (l, r)) in pairs.iter().enumerate() {
        residuals[k] = (l - r).abs();
        lhs[k] = l.abs();
    }
    JacobiResiduals { residuals, lhs }
}
