//! Subcommand bodies. Each returns the complete [`Outcome`].

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::angles::{dihedral_angle, dihedral_angles};
use crate::edge::{
    cofactor_expansion_residual, cofactors, edge_matrix_from_lengths, jacobi_residuals, EdgeLengths, EDGE_NAMES,
    EDGE_VERTICES,
};
use crate::existence::{exists, l34_bounds, ExistenceReport};
use crate::numeric::QuadratureConfig;
use crate::oracle::{dihedral_angles_geometric, embed_vertices, lobachevsky, volume_monte_carlo, MonteCarloConfig};
use crate::volume::{integrate_derivative, schlafli_residual, volume_derivative, volume_edges, volume_sforza};

use super::input::InputDocument;
use super::output::{float, to_json};
use super::{Format, Outcome, Settings, EXIT_NONEXISTENT, EXIT_NUMERICAL, EXIT_OK};

pub(crate) struct Context {
    pub lengths: EdgeLengths,
    pub settings: Settings,
    pub echo: InputDocument,
}

impl Context {
    fn quadrature(&self) -> QuadratureConfig {
        QuadratureConfig {
            abs_tol: self.settings.tol,
            rel_tol: self.settings.tol,
            ..QuadratureConfig::default()
        }
    }

    fn monte_carlo(&self) -> MonteCarloConfig {
        MonteCarloConfig {
            seed: self.settings.seed,
            samples: self.settings.mc_samples,
            ..MonteCarloConfig::default()
        }
    }
}

fn json_only(format: Option<Format>) -> Result<(), Outcome> {
    match format {
        Some(Format::Csv) => Err(Outcome::input_error("csv output is only available for sweep")),
        _ => Ok(()),
    }
}

fn emit(code: i32, doc: &Value, stderr: String) -> Outcome {
    Outcome {
        code,
        stdout: to_json(doc),
        stderr,
    }
}

fn nonexistent(ctx: &Context, command: &str, report: &ExistenceReport) -> Outcome {
    let doc = json!({
        "command": command,
        "input": ctx.echo,
        "existence": report,
        "failed_conditions": report.failed_conditions(),
    });
    emit(
        EXIT_NONEXISTENT,
        &doc,
        format!("error: tetrahedron does not exist: {}\n", report.failure_summary()),
    )
}

fn numerical(msg: impl std::fmt::Display) -> Outcome {
    Outcome {
        code: EXIT_NUMERICAL,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

pub(crate) fn check(ctx: &Context, format: Option<Format>) -> Outcome {
    if let Err(o) = json_only(format) {
        return o;
    }
    let report = exists(&ctx.lengths);
    if !report.exists {
        return nonexistent(ctx, "check", &report);
    }
    let doc = json!({
        "command": "check",
        "input": ctx.echo,
        "existence": report,
        "failed_conditions": report.failed_conditions(),
    });
    emit(EXIT_OK, &doc, String::new())
}

pub(crate) fn angles(ctx: &Context, format: Option<Format>) -> Outcome {
    if let Err(o) = json_only(format) {
        return o;
    }
    let report = exists(&ctx.lengths);
    if !report.exists {
        return nonexistent(ctx, "angles", &report);
    }
    let e = match edge_matrix_from_lengths(&ctx.lengths) {
        Ok(e) => e,
        Err(err) => return numerical(err),
    };
    let cof = cofactors(&e);
    let mut table = serde_json::Map::new();
    let mut notes = Vec::new();
    for (k, &(i, j)) in EDGE_VERTICES.iter().enumerate() {
        let name = format!("th{}", &EDGE_NAMES[k][1..]);
        let entry = match dihedral_angle(&cof, i, j) {
            Ok(a) => json!({"radians": a.value, "degrees": a.value.to_degrees(), "clamped": a.clamped}),
            Err(err) => {
                notes.push(format!("{name}: {err}"));
                Value::Null
            }
        };
        table.insert(name, entry);
    }
    let diag: Vec<f64> = (0..4).map(|i| cof.c[i][i]).collect();
    let doc = json!({
        "command": "angles",
        "input": ctx.echo,
        "angles": table,
        "degenerate": report.degenerate,
        "diagnostics": {
            "delta": cof.delta,
            "cofactor_diagonal": diag,
            "l1": report.bounds.map(|b| b.l1),
            "l2": report.bounds.map(|b| b.l2),
        },
        "notes": notes,
    });
    emit(EXIT_OK, &doc, String::new())
}

#[derive(Debug, Serialize)]
struct Verdict {
    name: &'static str,
    /// `None` when the check does not apply to this input.
    passed: Option<bool>,
    value: Option<f64>,
    threshold: Option<f64>,
    note: Option<String>,
}

impl Verdict {
    fn measured(name: &'static str, value: f64, threshold: f64) -> Self {
        Verdict {
            name,
            passed: Some(value.is_finite() && value < threshold),
            value: Some(value),
            threshold: Some(threshold),
            note: None,
        }
    }

    fn failed(name: &'static str, err: impl std::fmt::Display) -> Self {
        Verdict {
            name,
            passed: Some(false),
            value: None,
            threshold: None,
            note: Some(err.to_string()),
        }
    }

    fn skipped(name: &'static str, why: &str) -> Self {
        Verdict {
            name,
            passed: None,
            value: None,
            threshold: None,
            note: Some(why.to_string()),
        }
    }
}

/// Sforza and Monte Carlo cross-checks of `volume`.
fn route_checks(ctx: &Context, volume: f64, out: &mut Vec<Verdict>, extra: &mut serde_json::Map<String, Value>) {
    let e = match edge_matrix_from_lengths(&ctx.lengths) {
        Ok(e) => e,
        Err(err) => {
            out.push(Verdict::failed("edge_vs_sforza", &err));
            out.push(Verdict::failed("monte_carlo_3_sigma", err));
            return;
        }
    };
    match dihedral_angles(&cofactors(&e)).and_then(|a| volume_sforza(&a, &ctx.quadrature())) {
        Ok(s) => {
            out.push(Verdict::measured("edge_vs_sforza", (s.value - volume).abs(), 1e-6));
            extra.insert("sforza".into(), serde_json::to_value(&s).unwrap_or(Value::Null));
        }
        Err(err) => out.push(Verdict::failed("edge_vs_sforza", err)),
    }
    match embed_vertices(&e).and_then(|emb| volume_monte_carlo(&emb, &ctx.monte_carlo())) {
        Ok(mc) => {
            let sigmas = (mc.value - volume).abs() / mc.error_estimate;
            out.push(Verdict::measured("monte_carlo_3_sigma", sigmas, 3.0));
            extra.insert("monte_carlo".into(), serde_json::to_value(&mc).unwrap_or(Value::Null));
        }
        Err(err) => out.push(Verdict::failed("monte_carlo_3_sigma", err)),
    }
}

fn all_pass(v: &[Verdict]) -> bool {
    v.iter().all(|c| c.passed != Some(false))
}

pub(crate) fn volume(ctx: &Context, validate: bool, format: Option<Format>) -> Outcome {
    if let Err(o) = json_only(format) {
        return o;
    }
    let report = exists(&ctx.lengths);
    if !report.exists {
        return nonexistent(ctx, "volume", &report);
    }
    let v = match volume_edges(&ctx.lengths, &ctx.quadrature()) {
        Ok(v) => v,
        Err(err) => return numerical(err),
    };
    let mut doc = json!({
        "command": "volume",
        "input": ctx.echo,
        "degenerate": report.degenerate,
        "bounds": report.bounds,
        "volume": v,
    });
    let mut code = EXIT_OK;
    let mut stderr = String::new();
    if validate {
        let mut verdicts = Vec::new();
        let mut extra = serde_json::Map::new();
        if report.degenerate {
            verdicts.push(Verdict::skipped("edge_vs_sforza", "flat configuration"));
            verdicts.push(Verdict::skipped("monte_carlo_3_sigma", "flat configuration"));
        } else {
            route_checks(ctx, v.value, &mut verdicts, &mut extra);
        }
        let ok = all_pass(&verdicts);
        if !ok {
            code = EXIT_NUMERICAL;
            stderr = "error: volume cross-check failed\n".to_string();
        }
        doc["validation"] = json!({"passed": ok, "checks": verdicts, "routes": extra});
    }
    emit(code, &doc, stderr)
}

struct Row {
    t: f64,
    dvdt: f64,
    v: f64,
}

pub(crate) fn sweep(ctx: &Context, samples: usize, format: Option<Format>) -> Outcome {
    if samples < 2 {
        return Outcome::input_error("--samples must be at least 2");
    }
    let l = &ctx.lengths;
    let b = match l34_bounds(l.l12, l.l13, l.l14, l.l23, l.l24) {
        Ok(b) => b,
        Err(err) => {
            let report = exists(l);
            return if report.tri_123_ok && report.tri_124_ok {
                Outcome {
                    code: EXIT_NONEXISTENT,
                    stdout: String::new(),
                    stderr: format!("error: no admissible interval for l34: {err}\n"),
                }
            } else {
                nonexistent(ctx, "sweep", &report)
            };
        }
    };
    let cfg = ctx.quadrature();
    let step = (b.l2 - b.l1) / (samples - 1) as f64;
    let rows: Vec<Result<Row, String>> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let t = if k == samples - 1 { b.l2 } else { b.l1 + step * k as f64 };
            let dvdt = volume_derivative(l, t).unwrap_or(f64::NAN);
            let v = integrate_derivative(l, b.l1, t, &cfg).map_err(|e| e.to_string())?.value;
            Ok(Row { t, dvdt, v })
        })
        .collect();
    let rows: Vec<Row> = match rows.into_iter().collect() {
        Ok(r) => r,
        Err(e) => return numerical(e),
    };
    let stdout = match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::from("t,dVdt,V\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", float(r.t), float(r.dvdt), float(r.v)));
            }
            s
        }
        Format::Json => {
            let table: Vec<Value> = rows
                .iter()
                .map(|r| json!({"t": r.t, "dVdt": if r.dvdt.is_finite() { json!(r.dvdt) } else { Value::Null }, "V": r.v}))
                .collect();
            to_json(&json!({"command": "sweep", "input": ctx.echo, "bounds": b, "rows": table}))
        }
    };
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

pub(crate) fn validate(ctx: &Context, format: Option<Format>) -> Outcome {
    if let Err(o) = json_only(format) {
        return o;
    }
    let l = &ctx.lengths;
    let report = exists(l);
    if !report.exists {
        return nonexistent(ctx, "validate", &report);
    }
    let e = match edge_matrix_from_lengths(l) {
        Ok(e) => e,
        Err(err) => return numerical(err),
    };
    let cof = cofactors(&e);
    let mut checks = Vec::new();
    let mut extra = serde_json::Map::new();

    checks.push(Verdict::measured(
        "jacobi_identities",
        jacobi_residuals(&e, &cof).max_relative(),
        1e-10,
    ));
    checks.push(Verdict::measured(
        "cofactor_expansion",
        cofactor_expansion_residual(&e, &cof),
        1e-12,
    ));

    if report.degenerate {
        for name in [
            "cofactor_signs",
            "angles_vs_geometry",
            "edge_vs_sforza",
            "monte_carlo_3_sigma",
            "volume_bounds",
            "schlafli",
        ] {
            checks.push(Verdict::skipped(name, "flat configuration"));
        }
    } else {
        let signs_ok = (0..4).all(|i| cof.c[i][i] > 0.0) && cof.delta < 0.0;
        checks.push(Verdict {
            name: "cofactor_signs",
            passed: Some(signs_ok),
            value: Some(cof.delta),
            threshold: None,
            note: None,
        });
        let geo = embed_vertices(&e).and_then(|emb| dihedral_angles_geometric(&emb));
        match (dihedral_angles(&cof), geo) {
            (Ok(a), Ok(g)) => checks.push(Verdict::measured("angles_vs_geometry", a.max_abs_diff(&g), 1e-9)),
            (Err(err), _) | (_, Err(err)) => checks.push(Verdict::failed("angles_vs_geometry", err)),
        }
        match volume_edges(l, &ctx.quadrature()) {
            Ok(v) => {
                route_checks(ctx, v.value, &mut checks, &mut extra);
                let cap = 3.0 * lobachevsky(PI / 3.0) + 1e-6;
                checks.push(Verdict {
                    name: "volume_bounds",
                    passed: Some(v.value >= 0.0 && v.value < cap),
                    value: Some(v.value),
                    threshold: Some(cap),
                    note: None,
                });
                extra.insert("edge_integral".into(), serde_json::to_value(&v).unwrap_or(Value::Null));
            }
            Err(err) => checks.push(Verdict::failed("volume_bounds", err)),
        }
        let h = 1e-5;
        let b = report.bounds.expect("bounds exist for a valid tetrahedron");
        if l.l34 - b.l1 > 10.0 * h && b.l2 - l.l34 > 10.0 * h {
            match schlafli_residual(l, h) {
                Ok(r) => checks.push(Verdict::measured("schlafli", r, 1e-8)),
                Err(err) => checks.push(Verdict::failed("schlafli", err)),
            }
        } else {
            checks.push(Verdict::skipped(
                "schlafli",
                "l34 is too close to the admissible bounds",
            ));
        }
    }

    let ok = all_pass(&checks);
    let doc = json!({
        "command": "validate",
        "input": ctx.echo,
        "passed": ok,
        "checks": checks,
        "routes": extra,
    });
    let stderr = if ok {
        String::new()
    } else {
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| c.passed == Some(false))
            .map(|c| c.name)
            .collect();
        format!("error: failed checks: {}\n", failed.join(", "))
    };
    emit(if ok { EXIT_OK } else { EXIT_NUMERICAL }, &doc, stderr)
}
