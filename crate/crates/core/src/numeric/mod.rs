//! Quadrature and root bracketing used by the volume routes.

mod roots;
mod tanh_sinh;

pub use roots::{bisect, first_sign_change};
pub use tanh_sinh::{tanh_sinh, Quadrature, QuadratureConfig};
