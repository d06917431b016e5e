//! Existence of a compact tetrahedron with prescribed edge lengths.
//!
//! Faces 1-2-3 and 1-2-4 must be hyperbolic triangles, and `l34` must lie
//! between the two flat positions of the hinge formed by these faces around
//! edge 1-2: `l1` (fold angle 0) and `l2` (fold angle pi).
//!
//! `cosh l1` and `cosh l2` are computed as `1 + y` with `y` built from the
//! face angles at vertex 1, which avoids the cancellation in `C - S` near
//! the fold. `C` and `S` themselves are also evaluated and checked against
//! the angle form.

use rand::Rng;
use serde::Serialize;

use crate::edge::{cosh_m1, EdgeLengths};
use crate::error::{Error, Result};
use crate::tolerances::TOLERANCES;

/// Admissible interval for `l34`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct L34Bounds {
    /// `cosh l1 = c - s`, `cosh l2 = c + s`.
    pub c: f64,
    pub s: f64,
    pub l1: f64,
    pub l2: f64,
    /// `cosh l1 - 1` and `cosh l2 - 1` without cancellation.
    pub cosh_m1_l1: f64,
    pub cosh_m1_l2: f64,
    /// A square-root argument was slightly negative and clamped to 0.
    pub clamped: bool,
}

/// Signed distance to one inequality boundary, in length units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Slack {
    pub name: &'static str,
    pub value: f64,
    /// Within tolerance of 0.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExistenceReport {
    pub exists: bool,
    pub tri_123_ok: bool,
    pub tri_124_ok: bool,
    pub l34_in_range: bool,
    pub degenerate: bool,
    /// `None` when a face triangle fails.
    pub bounds: Option<L34Bounds>,
    pub slacks: Vec<Slack>,
    pub notes: Vec<String>,
}

impl ExistenceReport {
    /// Names of the failed conditions: `(i)`, `(ii)`, `(iii)`.
    pub fn failed_conditions(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.tri_123_ok {
            out.push("(i)");
        }
        if !self.tri_124_ok {
            out.push("(ii)");
        }
        if self.tri_123_ok && self.tri_124_ok && !self.l34_in_range {
            out.push("(iii)");
        }
        out
    }

    /// One line naming each failed condition and its violated inequality.
    pub fn failure_summary(&self) -> String {
        let failed = self.failed_conditions();
        if failed.is_empty() {
            return "all conditions hold".to_string();
        }
        let parts: Vec<String> = failed
            .iter()
            .map(|cond| {
                let prefix = match *cond {
                    "(i)" => "i_",
                    "(ii)" => "ii_",
                    _ => "iii_",
                };
                let broken: Vec<String> = self
                    .slacks
                    .iter()
                    .filter(|s| s.name.starts_with(prefix) && s.value < 0.0 && !s.degenerate)
                    .map(|s| format!("{} = {}", s.name, s.value))
                    .collect();
                format!("condition {cond} fails ({})", broken.join(", "))
            })
            .collect();
        parts.join("; ")
    }
}

fn boundary_tol(scale: f64) -> f64 {
    TOLERANCES.boundary * (1.0 + scale)
}

fn triangle_slacks(base: f64, a: f64, b: f64, label: &'static str) -> (bool, [Slack; 2]) {
    let tol = boundary_tol(base.max(a).max(b));
    let upper = a + b - base;
    let lower = base - (a - b).abs();
    let (upper_name, lower_name) = match label {
        "i" => ("i_upper", "i_lower"),
        _ => ("ii_upper", "ii_lower"),
    };
    let slacks = [
        Slack {
            name: upper_name,
            value: upper,
            degenerate: upper.abs() <= tol,
        },
        Slack {
            name: lower_name,
            value: lower,
            degenerate: lower.abs() <= tol,
        },
    ];
    (upper >= -tol && lower >= -tol, slacks)
}

/// Conditions (i) for triangle 1-2-3 and (ii) for triangle 1-2-4.
///
/// The slacks are `l13 + l23 - l12` (`i_upper`), `l12 - |l13 - l23|`
/// (`i_lower`) and the same for face 1-2-4.
pub fn triangle_checks(lengths: &EdgeLengths) -> (bool, bool, Vec<Slack>) {
    let (ok_i, s_i) = triangle_slacks(lengths.l12, lengths.l13, lengths.l23, "i");
    let (ok_ii, s_ii) = triangle_slacks(lengths.l12, lengths.l14, lengths.l24, "ii");
    (ok_i, ok_ii, s_i.into_iter().chain(s_ii).collect())
}

/// `cosh a - cosh b = 2 sinh((a+b)/2) sinh((a-b)/2)`.
fn cosh_diff(a: f64, b: f64) -> f64 {
    2.0 * (0.5 * (a + b)).sinh() * (0.5 * (a - b)).sinh()
}

/// Angle at vertex 1 of the triangle with sides `l12`, `l1k` at vertex 1 and
/// opposite side `l2k`, plus its law-of-cosines numerator and radicand.
struct FaceAngle {
    angle: f64,
    /// `cosh l1k cosh l12 - cosh l2k`
    p: f64,
    /// `(cosh(l1k + l12) - cosh l2k)(cosh l2k - cosh(l1k - l12))`
    rad: f64,
    clamped: bool,
}

fn face_angle(l12: f64, l1k: f64, l2k: f64) -> Result<FaceAngle> {
    let p = 0.5 * (cosh_diff(l1k + l12, l2k) + cosh_diff(l1k - l12, l2k));
    // Each factor of the radicand is a product of sinh of half triangle
    // slacks, so its sign is exact.
    let f1 = cosh_diff(l1k + l12, l2k);
    let f2 = cosh_diff(l2k, l1k - l12);
    let raw = f1 * f2;
    let scale = (l1k + l12).cosh() * l2k.cosh();
    let mut clamped = false;
    let rad = if raw < 0.0 {
        if raw < -TOLERANCES.sqrt_clamp * scale {
            return Err(Error::Inconsistent(format!(
                "square-root argument {raw} of the face with sides {l12}, {l1k}, {l2k} is negative"
            )));
        }
        clamped = true;
        0.0
    } else {
        raw
    };
    Ok(FaceAngle {
        angle: rad.sqrt().atan2(p),
        p,
        rad,
        clamped,
    })
}

/// Product of the principal square roots of two reals, when it is real.
fn principal_sqrt_product(a: f64, b: f64) -> f64 {
    let m = (a.abs() * b.abs()).sqrt();
    if a < 0.0 && b < 0.0 {
        -m
    } else {
        m
    }
}

/// `cosh l1 - 1` as printed alongside the volume integral, with the square
/// roots taken as principal complex roots: both arguments are
/// non-positive there, so their product contributes with a minus sign and
/// the expression equals `C - S`.
fn cosh_l1_displayed(l12: f64, l13: f64, l14: f64, l23: f64, l24: f64) -> f64 {
    let ch = f64::cosh;
    let a = (ch(l23) - ch(l13 + l12)) * (ch(l23) - ch(l13 - l12));
    let b = (ch(l24) - ch(l14 + l12)) * (ch(l24) - ch(l14 - l12));
    let pq = (ch(l13) * ch(l12) - ch(l23)) * (ch(l14) * ch(l12) - ch(l24));
    ch(l13) * ch(l14) - (pq - principal_sqrt_product(a, b)) / l12.sinh().powi(2)
}

/// `l = arccosh(1 + y)` for `y >= 0`.
fn acosh1p(y: f64) -> f64 {
    2.0 * (0.5 * y.max(0.0)).sqrt().asinh()
}

/// Bounds `[l1, l2]` for `l34` given the other five lengths.
pub fn l34_bounds(l12: f64, l13: f64, l14: f64, l23: f64, l24: f64) -> Result<L34Bounds> {
    for (name, v) in [("l12", l12), ("l13", l13), ("l14", l14), ("l23", l23), ("l24", l24)] {
        if !v.is_finite() || v < 0.0 {
            return Err(Error::domain(name, v, "edge length must be finite and non-negative"));
        }
    }
    if l12 == 0.0 {
        return Err(Error::domain("l12", l12, "the bounds need l12 > 0"));
    }
    let probe = EdgeLengths::from_array_unchecked([l12, l13, l14, l23, l24, 0.0]);
    let (ok_i, ok_ii, slacks) = triangle_checks(&probe);
    if !(ok_i && ok_ii) {
        let broken: Vec<String> = slacks
            .iter()
            .filter(|s| s.value < 0.0 && !s.degenerate)
            .map(|s| format!("{} = {}", s.name, s.value))
            .collect();
        return Err(Error::Precondition(format!(
            "face triangle inequality violated: {}",
            broken.join(", ")
        )));
    }

    let beta = face_angle(l12, l13, l23)?;
    let alpha = face_angle(l12, l14, l24)?;
    let (sh13, sh14) = (l13.sinh(), l14.sinh());
    let base = cosh_m1(l13 - l14);
    let y_of = |gamma: f64| {
        let h = (0.5 * gamma).sin();
        base + 2.0 * sh13 * sh14 * h * h
    };
    let cosh_m1_l1 = y_of((alpha.angle - beta.angle).abs());
    let cosh_m1_l2 = y_of(alpha.angle + beta.angle);

    let sh2_12 = l12.sinh().powi(2);
    let c = l13.cosh() * l14.cosh() - beta.p * alpha.p / sh2_12;
    let s = beta.rad.sqrt() * alpha.rad.sqrt() / sh2_12;

    // The closed forms carry rounding proportional to their largest term.
    let scale = 1.0 + l13.cosh() * l14.cosh() + (beta.p * alpha.p).abs() / sh2_12 + s;
    let tol = TOLERANCES.l1_consistency * scale;
    let displayed = cosh_l1_displayed(l12, l13, l14, l23, l24);
    for (what, value) in [("C - S", c - s), ("displayed l1 expression", displayed)] {
        if (value - (1.0 + cosh_m1_l1)).abs() > tol {
            return Err(Error::Numerical(format!(
                "cosh l1 from {what} = {value} disagrees with the face-angle form {}",
                1.0 + cosh_m1_l1
            )));
        }
    }
    if ((c + s) - (1.0 + cosh_m1_l2)).abs() > tol {
        return Err(Error::Numerical(format!(
            "cosh l2 from C + S = {} disagrees with the face-angle form {}",
            c + s,
            1.0 + cosh_m1_l2
        )));
    }

    Ok(L34Bounds {
        c,
        s,
        l1: acosh1p(cosh_m1_l1),
        l2: acosh1p(cosh_m1_l2),
        cosh_m1_l1,
        cosh_m1_l2,
        clamped: beta.clamped || alpha.clamped,
    })
}

/// Bounds when vertices 1 and 2 coincide: the hinge is free, so `l34`
/// ranges over the third sides of triangle 1-3-4.
fn coincident_bounds(l13: f64, l14: f64) -> L34Bounds {
    let (lo, hi) = ((l13 - l14).abs(), l13 + l14);
    let (y1, y2) = (cosh_m1(lo), cosh_m1(hi));
    L34Bounds {
        c: 1.0 + 0.5 * (y1 + y2),
        s: 0.5 * (y2 - y1),
        l1: lo,
        l2: hi,
        cosh_m1_l1: y1,
        cosh_m1_l2: y2,
        clamped: false,
    }
}

/// Full existence verdict. Never fails: every problem is a report field.
pub fn exists(lengths: &EdgeLengths) -> ExistenceReport {
    let mut notes = Vec::new();
    if let Err(e) = lengths.validate() {
        notes.push(e.to_string());
        return ExistenceReport {
            exists: false,
            tri_123_ok: false,
            tri_124_ok: false,
            l34_in_range: false,
            degenerate: false,
            bounds: None,
            slacks: Vec::new(),
            notes,
        };
    }
    let (tri_123_ok, tri_124_ok, mut slacks) = triangle_checks(lengths);
    let mut bounds = None;
    let mut l34_in_range = false;
    if tri_123_ok && tri_124_ok {
        let b = if lengths.l12 == 0.0 {
            notes.push("vertices 1 and 2 coincide".to_string());
            Ok(coincident_bounds(lengths.l13, lengths.l14))
        } else {
            l34_bounds(lengths.l12, lengths.l13, lengths.l14, lengths.l23, lengths.l24)
        };
        match b {
            Ok(b) => {
                if b.clamped {
                    notes.push("a face radicand was slightly negative and clamped to 0".to_string());
                }
                let y = cosh_m1(lengths.l34);
                let lower = y - b.cosh_m1_l1;
                let upper = b.cosh_m1_l2 - y;
                let tol_lo = boundary_tol(b.cosh_m1_l1);
                let tol_hi = boundary_tol(b.cosh_m1_l2);
                l34_in_range = lower >= -tol_lo && upper >= -tol_hi;
                slacks.push(Slack {
                    name: "iii_lower",
                    value: lengths.l34 - b.l1,
                    degenerate: lower.abs() <= tol_lo,
                });
                slacks.push(Slack {
                    name: "iii_upper",
                    value: b.l2 - lengths.l34,
                    degenerate: upper.abs() <= tol_hi,
                });
                bounds = Some(b);
            }
            Err(e) => notes.push(e.to_string()),
        }
    }
    let degenerate = slacks.iter().any(|s| s.degenerate) || lengths.as_array().contains(&0.0);
    ExistenceReport {
        exists: tri_123_ok && tri_124_ok && l34_in_range,
        tri_123_ok,
        tri_124_ok,
        l34_in_range,
        degenerate,
        bounds,
        slacks,
        notes,
    }
}

/// Draws a tetrahedron strictly inside the admissible region: `l12`, `l13`,
/// `l14` in `[0.3, 2]`, the other face sides strictly inside their triangle
/// ranges, and `l34` uniform on the middle 96% of `[l1, l2]`.
pub fn random_valid<R: Rng + ?Sized>(rng: &mut R) -> EdgeLengths {
    loop {
        let l12 = rng.random_range(0.3..2.0);
        let l13 = rng.random_range(0.3..2.0);
        let l14 = rng.random_range(0.3..2.0);
        let third = |rng: &mut R, a: f64| {
            let lo = (l12 - a).abs();
            let hi = l12 + a;
            let m = 0.05 * (hi - lo);
            rng.random_range(lo + m..hi - m)
        };
        let l23 = third(rng, l13);
        let l24 = third(rng, l14);
        let Ok(b) = l34_bounds(l12, l13, l14, l23, l24) else {
            continue;
        };
        let m = 0.02 * (b.l2 - b.l1);
        if m <= 1e-3 {
            continue;
        }
        let l34 = rng.random_range(b.l1 + m..b.l2 - m);
        return EdgeLengths::from_array_unchecked([l12, l13, l14, l23, l24, l34]);
    }
}

/// All 24 orderings of four vertices.
pub fn all_relabelings() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|k| p.contains(&k)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}
