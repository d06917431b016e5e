//! Numerical tolerances shared by every module.
//!
//! All thresholds live in a single [`Tolerances`] record so that a change to
//! one of them is visible in one place. Library code reads [`TOLERANCES`].

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Relative width of the band around an inequality boundary that is
    /// classified as degenerate instead of failing. Applied as
    /// `boundary * (1 + magnitude)`.
    pub boundary: f64,
    /// Square-root arguments this far below zero (relative) are clamped to 0.
    /// Anything more negative is an internal consistency error.
    pub sqrt_clamp: f64,
    /// Window above |cos| = 1 that is clamped rather than rejected.
    pub cos_clamp: f64,
    /// Smallest pivot accepted by the hyperboloid factorization.
    pub embed_pivot: f64,
    /// Agreement required between the two closed forms of the lower bound.
    pub l1_consistency: f64,
    /// Bracket width at which root bisection stops.
    pub root_bisect: f64,
    /// Grid size for the sign-change scan that brackets roots.
    pub root_scan_points: usize,
    /// |det G| at or below this is treated as a vanishing Gram determinant.
    pub gram_det_zero: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    boundary: 1e-12,
    sqrt_clamp: 1e-10,
    cos_clamp: 1e-12,
    embed_pivot: 1e-10,
    l1_consistency: 1e-12,
    root_bisect: 1e-14,
    root_scan_points: 256,
    gram_det_zero: 1e-12,
};

impl Default for Tolerances {
    fn default() -> Self {
        TOLERANCES
    }
}
