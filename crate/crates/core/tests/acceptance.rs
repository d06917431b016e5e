//! One line per acceptance criterion. Exits non-zero if any fails.

use std::f64::consts::FRAC_PI_3;
use std::process::Command;
use std::time::{Duration, Instant};

use hytet::existence::{all_relabelings, random_valid};
use hytet::oracle::dihedral_angles_geometric;
use hytet::volume::integrate_derivative;
use hytet::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CASES: usize = 100;
const CASE_SEED: u64 = 20_240_917;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: String) -> Outcome {
    Outcome { passed, detail }
}

fn cases(n: usize, seed: u64) -> Vec<EdgeLengths> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| random_valid(&mut rng)).collect()
}

fn five(t: f64) -> EdgeLengths {
    EdgeLengths::new(1.0, 1.0, 1.0, 1.0, 1.0, t).expect("valid lengths")
}

fn angles_vs_geometry(set: &[EdgeLengths]) -> Result<Outcome> {
    let mut worst: f64 = 0.0;
    for l in set {
        let e = edge_matrix_from_lengths(l)?;
        let a = dihedral_angles(&cofactors(&e))?;
        let g = dihedral_angles_geometric(&embed_vertices(&e)?)?;
        worst = worst.max(a.max_abs_diff(&g));
    }
    Ok(outcome(
        worst < 1e-9,
        format!("max |dtheta| = {worst:.3e} rad (< 1e-9)"),
    ))
}

fn three_routes(set: &[EdgeLengths]) -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    let mut within = 0;
    for (k, l) in set.iter().enumerate() {
        let e = edge_matrix_from_lengths(l)?;
        let v = volume_edges(l, &cfg)?.value;
        let s = volume_sforza(&dihedral_angles(&cofactors(&e))?, &cfg)?.value;
        worst = worst.max((v - s).abs());
        let mc_cfg = MonteCarloConfig {
            seed: k as u64,
            samples: 1_000_000,
            ..MonteCarloConfig::default()
        };
        let mc = volume_monte_carlo(&embed_vertices(&e)?, &mc_cfg)?;
        if (mc.value - v).abs() <= 3.0 * mc.error_estimate {
            within += 1;
        }
    }
    Ok(outcome(
        worst < 1e-6 && within >= 97,
        format!("max |edge - sforza| = {worst:.3e} (< 1e-6); monte carlo within 3 se: {within}/{CASES} (>= 97)"),
    ))
}

fn cofactor_signs_and_jacobi(set: &[EdgeLengths]) -> Result<Outcome> {
    let mut signs = 0;
    let mut worst: f64 = 0.0;
    for l in set {
        let e = edge_matrix_from_lengths(l)?;
        let c = cofactors(&e);
        if (0..4).all(|i| c.c[i][i] > 0.0) && c.delta < 0.0 {
            signs += 1;
        }
        worst = worst.max(jacobi_residuals(&e, &c).max_relative());
    }
    Ok(outcome(
        signs == set.len() && worst < 1e-10,
        format!(
            "c_ii > 0 and det E < 0: {signs}/{}; max jacobi residual = {worst:.3e} (< 1e-10)",
            set.len()
        ),
    ))
}

fn endpoints() -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let b = l34_bounds(1.0, 1.0, 1.0, 1.0, 1.0)?;
    let v_lo = volume_edges(&five(b.l1), &cfg)?.value;
    let v_hi = volume_edges(&five(b.l2 - 1e-8), &cfg)?.value;
    let total = integrate_derivative(&five(b.l1), b.l1, b.l2, &cfg)?.value;
    Ok(outcome(
        v_lo < 1e-9 && v_hi < 1e-4 && total.abs() < 1e-6,
        format!("V(l1) = {v_lo:.3e}, V(l2 - 1e-8) = {v_hi:.3e}, integral of dV/dt over [l1, l2] = {total:.3e}"),
    ))
}

fn schlafli() -> Result<Outcome> {
    let set = cases(20, CASE_SEED ^ 0x5c);
    let mut worst: f64 = 0.0;
    let (mut lo_ratio, mut hi_ratio) = (f64::INFINITY, 0.0f64);
    for l in &set {
        worst = worst.max(schlafli_residual(l, 1e-5)?);
        let ratio = schlafli_residual(l, 1e-3)? / schlafli_residual(l, 1e-4)?;
        lo_ratio = lo_ratio.min(ratio);
        hi_ratio = hi_ratio.max(ratio);
    }
    Ok(outcome(
        worst < 1e-8 && lo_ratio >= 100.0 / 3.0 && hi_ratio <= 300.0,
        format!("max residual(h = 1e-5) = {worst:.3e} (< 1e-8); r(1e-3)/r(1e-4) in [{lo_ratio:.1}, {hi_ratio:.1}] (within [33.3, 300])"),
    ))
}

fn euclidean_limit() -> Result<Outcome> {
    let cfg = QuadratureConfig::tight();
    let mut errs = Vec::new();
    for s in [0.2, 0.1, 0.05] {
        let l = EdgeLengths::regular(s)?;
        let v = volume_edges(&l, &cfg)?.value;
        errs.push((v / euclidean_volume_cm(&l)? - 1.0).abs());
    }
    let monotone = errs.windows(2).all(|w| w[1] < w[0]);
    Ok(outcome(
        monotone && errs[2] < 0.01,
        format!(
            "|V/V_eucl - 1| at s = 0.2, 0.1, 0.05: {:.3e}, {:.3e}, {:.3e}",
            errs[0], errs[1], errs[2]
        ),
    ))
}

fn ideal_limit() -> Result<Outcome> {
    let cfg = QuadratureConfig::tight();
    let ideal = 3.0 * lobachevsky(FRAC_PI_3);
    let v10 = volume_regular(10.0, &cfg)?.value;
    let v1 = volume_regular(1.0, &cfg)?.value;
    let e1 = volume_edges(&EdgeLengths::regular(1.0)?, &cfg)?.value;
    Ok(outcome(
        (v10 - ideal).abs() < 1e-3 && (v1 - e1).abs() < 1e-8,
        format!(
            "|V_reg(10) - 3L(pi/3)| = {:.3e} (< 1e-3); |V_reg(1) - V_edges(1)| = {:.3e} (< 1e-8)",
            (v10 - ideal).abs(),
            (v1 - e1).abs()
        ),
    ))
}

fn relabelings() -> Result<Outcome> {
    let cfg = QuadratureConfig::default();
    let mut worst: f64 = 0.0;
    for l in cases(10, CASE_SEED ^ 0x24) {
        let v = volume_edges(&l, &cfg)?.value;
        for p in all_relabelings() {
            worst = worst.max((volume_edges(&l.relabeled(p), &cfg)?.value - v).abs());
        }
    }
    Ok(outcome(
        worst < 1e-8,
        format!("max deviation over 24 relabelings = {worst:.3e} (< 1e-8)"),
    ))
}

fn cli_determinism() -> Result<Outcome> {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_hytet"))
            .args([
                "volume",
                "--validate",
                "--edges",
                "l12=1,l13=1.1,l14=0.9,l23=1.2,l24=1,l34=1.05",
            ])
            .args(["--seed", "12345", "--mc-samples", "200000"])
            .env_remove("HYTET_TOL")
            .env_remove("HYTET_MC_SAMPLES")
            .env_remove("HYTET_SEED")
            .output()
            .map_err(|e| Error::Numerical(format!("cannot run the CLI: {e}")))
    };
    let (a, b) = (run()?, run()?);
    let same = a.stdout == b.stdout && a.status.code() == b.status.code();
    Ok(outcome(
        same && a.status.success() && !a.stdout.is_empty(),
        format!(
            "exit {:?}, {} bytes, identical = {same}",
            a.status.code(),
            a.stdout.len()
        ),
    ))
}

fn main() {
    let set = cases(CASES, CASE_SEED);
    type Check<'a> = Box<dyn Fn() -> Result<Outcome> + 'a>;
    let criteria: Vec<(&str, Option<Duration>, Check)> = vec![
        (
            "1 cofactor angles match geometry",
            Some(Duration::from_secs(10)),
            Box::new(|| angles_vs_geometry(&set)),
        ),
        (
            "2 three volume routes agree",
            Some(Duration::from_secs(120)),
            Box::new(|| three_routes(&set)),
        ),
        (
            "3 cofactor signs and jacobi identities",
            None,
            Box::new(|| cofactor_signs_and_jacobi(&set)),
        ),
        ("4 volume vanishes at both flat ends", None, Box::new(endpoints)),
        ("5 schlafli consistency", None, Box::new(schlafli)),
        ("6 euclidean limit", None, Box::new(euclidean_limit)),
        ("7 ideal limit of the regular tetrahedron", None, Box::new(ideal_limit)),
        ("8 volume invariant under relabeling", None, Box::new(relabelings)),
        ("9 cli output is deterministic", None, Box::new(cli_determinism)),
    ];

    let mut failed = 0;
    for (name, budget, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (mut passed, mut detail) = match result {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if let Some(limit) = budget {
            if took > *limit {
                passed = false;
                detail.push_str(&format!("; over the {}s budget", limit.as_secs()));
            }
        }
        if !passed {
            failed += 1;
        }
        println!(
            "{} criterion {name}: {detail} [{:.2}s]",
            if passed { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
