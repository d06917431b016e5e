//! Monte Carlo volume in the Klein model.
//!
//! Geodesics are straight in the Klein ball, so the tetrahedron is the
//! Euclidean tetrahedron on the projected vertices, and the hyperbolic
//! volume element is `(1 - |x|^2)^-2` times the Euclidean one. Points are
//! drawn uniformly from barycentric coordinates given by sorted uniforms.
//!
//! Samples come in fixed blocks of 4096; block `b` draws from ChaCha8
//! seeded with `seed` on stream `b`. Per-block sums are reduced in block
//! order, so the estimate does not depend on the chunking or thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::volume::{Route, VolumeDiagnostics, VolumeResult};

use super::embedding::VertexEmbedding;

const BLOCK: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonteCarloConfig {
    pub seed: u64,
    pub samples: u64,
    /// Samples per parallel work item, rounded up to a whole block.
    pub chunk: u64,
}

impl Default for MonteCarloConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 1_000_000,
            chunk: 65_536,
        }
    }
}

fn sub(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn block_sums(pts: &[[f64; 3]; 4], seed: u64, block: u64, n: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    let (mut s, mut s2) = (0.0, 0.0);
    for _ in 0..n {
        let mut u: [f64; 3] = [rng.random(), rng.random(), rng.random()];
        u.sort_by(f64::total_cmp);
        let w = [u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]];
        let mut x = [0.0; 3];
        for (wk, p) in w.iter().zip(pts) {
            for c in 0..3 {
                x[c] += wk * p[c];
            }
        }
        let r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        let g = 1.0 / ((1.0 - r2) * (1.0 - r2));
        s += g;
        s2 += g * g;
    }
    (s, s2)
}

pub fn volume_monte_carlo(emb: &VertexEmbedding, cfg: &MonteCarloConfig) -> Result<VolumeResult> {
    if cfg.samples == 0 {
        return Err(Error::domain("samples", 0.0, "need at least one sample"));
    }
    let pts: [[f64; 3]; 4] = std::array::from_fn(|i| emb.klein(i));
    let (a, b, c) = (sub(&pts[1], &pts[0]), sub(&pts[2], &pts[0]), sub(&pts[3], &pts[0]));
    let det =
        a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
    let euclid = det.abs() / 6.0;

    let n_blocks = cfg.samples.div_ceil(BLOCK);
    let per_item = cfg.chunk.max(1).div_ceil(BLOCK);
    let items: Vec<u64> = (0..n_blocks.div_ceil(per_item)).collect();
    let blocks: Vec<Vec<(f64, f64)>> = items
        .par_iter()
        .map(|&item| {
            let first = item * per_item;
            let last = (first + per_item).min(n_blocks);
            (first..last)
                .map(|blk| {
                    let n = BLOCK.min(cfg.samples - blk * BLOCK);
                    block_sums(&pts, cfg.seed, blk, n)
                })
                .collect()
        })
        .collect();
    let (mut s, mut s2) = (0.0, 0.0);
    for (bs, bs2) in blocks.into_iter().flatten() {
        s += bs;
        s2 += bs2;
    }
    let n = cfg.samples as f64;
    let mean = s / n;
    let var = if cfg.samples > 1 {
        ((s2 - n * mean * mean) / (n - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(VolumeResult {
        value: euclid * mean,
        error_estimate: euclid * (var / n).sqrt(),
        evaluations: cfg.samples as usize,
        route: Route::MonteCarlo,
        diagnostics: VolumeDiagnostics {
            converged: true,
            notes: vec![format!("euclidean volume of the Klein tetrahedron {euclid:e}")],
            ..Default::default()
        },
    })
}
