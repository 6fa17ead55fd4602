//! Grid scans of Λ to CSV or JSON.
//!
//! Box scans emit `x,y,lambda,regime` rows in row-major order (y outer, x
//! inner); wedge ray scans emit `phi,lambda`. Reruns are byte-identical.

use cauchy_szego_core::geometry::{quadrature, Curve, QuadratureRule, ScalarPoint};
use cauchy_szego_core::kernels::{cauchy_norm_sq, szego_diag, DomainSide};
use cauchy_szego_core::lambda::{
    lambda_ellipse_at_infinity, lambda_ellipse_at_origin, lambda_wedge, LambdaRegime,
};
use cauchy_szego_core::operator::{szego_system, SzegoSolver};
use cauchy_szego_core::{Error, Result};
use num_complex::Complex64;
use std::fmt::Write as _;

/// Curve collar excluded from box scans.
const SCAN_COLLAR: f64 = 1e-6;
/// Per-axis resolution cap.
pub const MAX_RESOLUTION: usize = 512;

pub struct BoxRegion {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub nx: usize,
    pub ny: usize,
}

pub struct RayRegion {
    pub r: f64,
    pub samples: usize,
}

pub struct SweepRegion {
    pub r0: f64,
    pub r1: f64,
    pub samples: usize,
}

pub enum Region {
    Box(BoxRegion),
    Ray(RayRegion),
    /// Axis-ratio sweep over the ellipse family: Λ(E_r, 0) and Λ(E_r, ∞).
    Sweep(SweepRegion),
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Λ evaluator with per-curve cached machinery: one quadrature rule for the
/// Cauchy norm, and (for sampled curves) one factorized Kerzman–Stein
/// system per side. Grid points then cost O(n²) each.
pub(crate) struct Engine {
    curve: Curve,
    rule: QuadratureRule,
    interior: Option<SzegoSolver>,
    exterior: Option<SzegoSolver>,
}

impl Engine {
    pub(crate) fn new(curve: Curve, nodes: usize) -> Result<Self> {
        let n = curve.node_count().unwrap_or(nodes);
        let rule = quadrature(&curve, n)?;
        let (interior, exterior) = if curve.node_count().is_some() {
            let (ci, ai) = szego_system(&curve, DomainSide::Interior, n)?;
            let (ce, ae) = szego_system(&curve, DomainSide::Exterior, n)?;
            (
                Some(SzegoSolver::new(&ci, &ai)?),
                Some(SzegoSolver::new(&ce, &ae)?),
            )
        } else {
            (None, None)
        };
        Ok(Self {
            curve,
            rule,
            interior,
            exterior,
        })
    }

    pub(crate) fn eval(&self, z: Complex64) -> Result<(f64, LambdaRegime)> {
        if self.curve.distance(z)? < 1e-12 {
            return Ok((1.0, LambdaRegime::OnCurve));
        }
        let w = self.curve.winding_number(z)?;
        // Ω₊ is reached with winding +1, or from the unbounded component of
        // a clockwise curve; everything else is Ω₋.
        let enclosed_ccw = (w - 1.0).abs() < 0.5;
        let unbounded_of_cw = w.abs() < 0.5 && self.curve.orientation()? < 0.0;
        let side = if enclosed_ccw || unbounded_of_cw {
            DomainSide::Interior
        } else {
            DomainSide::Exterior
        };
        let norm2 = cauchy_norm_sq(&self.curve, z, &self.rule)?.value;
        let diag = match (&self.interior, &self.exterior, side) {
            (Some(solver), _, DomainSide::Interior) => solver.solve(z)?.diag,
            (_, Some(solver), DomainSide::Exterior) => solver.solve(z)?.diag,
            _ => szego_diag(&self.curve, side, ScalarPoint::Finite(z))?,
        };
        let regime = match side {
            DomainSide::Interior => LambdaRegime::InteriorBulk,
            DomainSide::Exterior => LambdaRegime::ExteriorBulk,
        };
        Ok(((norm2 / diag).sqrt(), regime))
    }
}

/// Runs a scan and renders the output document.
pub fn run(curve: &Curve, region: &Region, format: Format, nodes: usize) -> Result<String> {
    match region {
        Region::Ray(ray) => {
            let theta = match curve {
                Curve::Wedge { theta } => *theta,
                _ => return Err(Error::Domain("ray scans apply to wedge curves only")),
            };
            let mut rows = Vec::with_capacity(ray.samples);
            let span = core::f64::consts::TAU;
            for j in 1..=ray.samples {
                let phi = -theta + span * j as f64 / (ray.samples + 1) as f64;
                let lv = lambda_wedge(theta, phi)?;
                let _ = ray.r; // Λ on the wedge is r-independent
                rows.push((phi, lv.value));
            }
            Ok(render_ray(&rows, format))
        }
        Region::Sweep(sweep) => {
            if !matches!(curve, Curve::Ellipse { .. }) {
                return Err(Error::Domain("r-sweep scans apply to ellipse curves only"));
            }
            let mut rows = Vec::with_capacity(sweep.samples);
            for j in 0..sweep.samples {
                let r = if sweep.samples <= 1 {
                    sweep.r0
                } else {
                    sweep.r0 + (sweep.r1 - sweep.r0) * j as f64 / (sweep.samples - 1) as f64
                };
                rows.push((
                    r,
                    lambda_ellipse_at_origin(r)?,
                    lambda_ellipse_at_infinity(r)?,
                ));
            }
            Ok(render_sweep(&rows, format))
        }
        Region::Box(b) => {
            let engine = Engine::new(curve.clone(), nodes)?;
            let mut rows = Vec::new();
            for iy in 0..b.ny {
                let y = grid_coord(b.y0, b.y1, iy, b.ny);
                for ix in 0..b.nx {
                    let x = grid_coord(b.x0, b.x1, ix, b.nx);
                    let z = Complex64::new(x, y);
                    if engine.curve.distance(z)? < SCAN_COLLAR {
                        continue;
                    }
                    let (value, regime) = engine.eval(z)?;
                    rows.push((x, y, value, regime));
                }
            }
            Ok(render_box(&rows, format))
        }
    }
}

fn grid_coord(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    if n <= 1 {
        lo
    } else {
        lo + (hi - lo) * i as f64 / (n - 1) as f64
    }
}

fn render_box(rows: &[(f64, f64, f64, LambdaRegime)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("x,y,lambda,regime\n");
            for (x, y, v, regime) in rows {
                let _ = writeln!(out, "{x},{y},{v},{regime}");
            }
            out
        }
        Format::Json => {
            let mut out = String::from("{\"rows\":[");
            for (i, (x, y, v, regime)) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"x\":{x:.16e},\"y\":{y:.16e},\"lambda\":{v:.16e},\"regime\":\"{regime}\"}}"
                );
            }
            out.push_str("]}\n");
            out
        }
    }
}

fn render_sweep(rows: &[(f64, f64, f64)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("r,lambda_origin,lambda_infinity\n");
            for (r, l0, linf) in rows {
                let _ = writeln!(out, "{r},{l0},{linf}");
            }
            out
        }
        Format::Json => {
            let mut out = String::from("{\"rows\":[");
            for (i, (r, l0, linf)) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(
                    out,
                    "{{\"r\":{r:.16e},\"lambda_origin\":{l0:.16e},\"lambda_infinity\":{linf:.16e}}}"
                );
            }
            out.push_str("]}\n");
            out
        }
    }
}

fn render_ray(rows: &[(f64, f64)], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from("phi,lambda\n");
            for (phi, v) in rows {
                let _ = writeln!(out, "{phi},{v}");
            }
            out
        }
        Format::Json => {
            let mut out = String::from("{\"rows\":[");
            for (i, (phi, v)) in rows.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{{\"phi\":{phi:.16e},\"lambda\":{v:.16e}}}");
            }
            out.push_str("]}\n");
            out
        }
    }
}
