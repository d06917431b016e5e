//! Compact hyperbolic tetrahedra described by their six edge lengths.
//!
//! The crate decides whether six lengths realize a compact tetrahedron in
//! hyperbolic 3-space, reads the dihedral angles off the cofactors of the
//! edge matrix, and integrates the volume along the sixth edge. Every result
//! has an independent cross-check in [`oracle`]: a hyperboloid embedding,
//! geometric dihedral angles, a Klein-model Monte Carlo volume and the
//! Euclidean and ideal limits.
//!
//! Vertices are numbered 1..4 in documentation and field names (`l12`,
//! `th34`, ...) and 0..3 in array indices. Edge `lij` lives at matrix
//! position `[i-1][j-1]`.
// Matrix code reads better with explicit indices, and `!(x > 0.0)` is
// meant to reject NaN.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod angles;
pub mod cli;
pub mod edge;
pub mod error;
pub mod existence;
pub mod numeric;
pub mod oracle;
pub mod tolerances;
pub mod volume;

pub use angles::{dihedral_angles, gram_from_angles, DihedralAngles, GramMatrix};
pub use edge::{
    cofactors, edge_matrix_from_lengths, jacobi_residuals, CofactorSet, EdgeLengths, EdgeMatrix, JacobiResiduals,
};
pub use error::{Error, Result};
pub use existence::{exists, l34_bounds, triangle_checks, ExistenceReport, L34Bounds};
pub use numeric::QuadratureConfig;
pub use oracle::{
    dihedral_angles_geometric, embed_vertices, euclidean_volume_cm, lobachevsky, volume_monte_carlo, MonteCarloConfig,
    VertexEmbedding,
};
pub use volume::{
    schlafli_residual, volume_derivative, volume_edges, volume_regular, volume_sforza, Route, VolumeDiagnostics,
    VolumeResult,
};
