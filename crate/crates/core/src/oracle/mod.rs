//! Independent checks: a hyperboloid embedding of the vertices, dihedral
//! angles measured on it, a Klein-model Monte Carlo volume, and the
//! Euclidean and ideal limits.

mod cayley_menger;
mod embedding;
mod geometric;
mod lobachevsky;
mod monte_carlo;

pub use cayley_menger::euclidean_volume_cm;
pub use embedding::{embed_vertices, minkowski, VertexEmbedding};
pub use geometric::dihedral_angles_geometric;
pub use lobachevsky::lobachevsky;
pub use monte_carlo::{volume_monte_carlo, MonteCarloConfig};
