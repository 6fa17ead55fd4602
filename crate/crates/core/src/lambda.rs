//! The Cauchy–Szegő Λ-function on the Riemann sphere:
//! `Λ(γ,z) = ‖C±(z,·)‖_{L²(γ)} / √S±(z,z)` off the curve, `1` on the curve,
//! and `√(σ(γ)/(2πκ(γ)))` at ∞. Möbius invariant, ≥ 1 everywhere, and ≡ 1
//! exactly for circles.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{
    ellipse_modulus, quadrature, Curve, MoebiusMap, QuadratureRule, ScalarPoint,
};
use crate::kernels::{cauchy_norm_sq, szego_diag, DomainSide};
use crate::operator;
use crate::specfun::{ellint_e, ellint_k, ellint_pi, theta_at_zero, Nome, ThetaIndex};
use crate::util::{cos_from_edge_distances, inv_sinc_at_pi_minus};

/// Default quadrature resolution for canonical curves.
const DEFAULT_NODES: usize = 512;
/// Absolute collar inside which a point classifies as lying on the curve.
const ON_CURVE_COLLAR: f64 = 1e-12;

/// Where on the sphere a Λ evaluation landed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaRegime {
    InteriorBulk,
    ExteriorBulk,
    OnCurve,
    AtInfinity,
}

impl core::fmt::Display for LambdaRegime {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            LambdaRegime::InteriorBulk => write!(f, "interior"),
            LambdaRegime::ExteriorBulk => write!(f, "exterior"),
            LambdaRegime::OnCurve => write!(f, "on-curve"),
            LambdaRegime::AtInfinity => write!(f, "at-infinity"),
        }
    }
}

/// A Λ evaluation with an estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaValue {
    pub value: f64,
    pub regime: LambdaRegime,
    pub accuracy: f64,
}

impl LambdaValue {
    fn on_curve() -> Self {
        LambdaValue {
            value: 1.0,
            regime: LambdaRegime::OnCurve,
            accuracy: 0.0,
        }
    }
}

/// Evaluates `Λ(γ, z)` anywhere on the sphere.
///
/// Canonical curves route through quadrature Cauchy norms and closed-form
/// Szegő diagonals; sampled curves get their Szegő diagonal from the
/// Kerzman–Stein–Trummer solve. An explicit rule overrides the default
/// 512-node trapezoid on canonical curves.
pub fn lambda(c: &Curve, z: ScalarPoint, rule: Option<&QuadratureRule>) -> Result<LambdaValue> {
    match c {
        Curve::Wedge { theta } => match z {
            // The wedge boundary passes through ∞ and through the corner 0.
            ScalarPoint::Infinity => Ok(LambdaValue::on_curve()),
            ScalarPoint::Finite(z) => {
                if z.norm() == 0.0 || c.distance(z)? < ON_CURVE_COLLAR {
                    return Ok(LambdaValue::on_curve());
                }
                lambda_wedge(*theta, z.arg())
            }
        },
        _ => lambda_bounded(c, z, rule),
    }
}

fn lambda_bounded(c: &Curve, z: ScalarPoint, rule: Option<&QuadratureRule>) -> Result<LambdaValue> {
    let z = match z {
        ScalarPoint::Infinity => {
            let kappa = c.analytic_capacity()?;
            let sigma = c.arc_length()?;
            return Ok(LambdaValue {
                value: (sigma / (TAU * kappa)).sqrt(),
                regime: LambdaRegime::AtInfinity,
                accuracy: 1e-12,
            });
        }
        ScalarPoint::Finite(z) => z,
    };
    if c.distance(z)? < ON_CURVE_COLLAR {
        return Ok(LambdaValue::on_curve());
    }
    let side = classify_side(c, z)?;
    let regime = match side {
        DomainSide::Interior => LambdaRegime::InteriorBulk,
        DomainSide::Exterior => LambdaRegime::ExteriorBulk,
    };
    match c {
        Curve::Sampled(s) => {
            let n = s.len();
            let owned;
            let rule = match rule {
                Some(r) if r.len() == n => r,
                _ => {
                    owned = quadrature(c, n)?;
                    &owned
                }
            };
            let norm2 = cauchy_norm_sq(c, z, rule)?;
            let diag = operator::numeric_szego_diag(c, side, n, z)?;
            let value = (norm2.value / diag).sqrt();
            // Refinement estimate on the half-resolution curve.
            let accuracy = if n >= 64 {
                let half = Curve::Sampled(s.coarsened()?);
                let half_rule = quadrature(&half, n / 2)?;
                let n2 = cauchy_norm_sq(&half, z, &half_rule)?;
                let d2 = operator::numeric_szego_diag(&half, side, n / 2, z)?;
                ((n2.value / d2).sqrt() - value).abs().max(1e-12)
            } else {
                1e-3
            };
            Ok(LambdaValue {
                value,
                regime,
                accuracy,
            })
        }
        _ => {
            let owned;
            let rule = match rule {
                Some(r) => r,
                None => {
                    owned = quadrature(c, DEFAULT_NODES)?;
                    &owned
                }
            };
            let norm2 = cauchy_norm_sq(c, z, rule)?;
            let diag = szego_diag(c, side, ScalarPoint::Finite(z))?;
            let value = (norm2.value / diag).sqrt();
            let coarse = rule.coarsened();
            let n2c = cauchy_norm_sq(c, z, &coarse)?;
            let accuracy = ((n2c.value / diag).sqrt() - value).abs().max(1e-13);
            Ok(LambdaValue {
                value,
                regime,
                accuracy,
            })
        }
    }
}

/// Side inference by winding number: `w ≈ +1` ⇒ Ω₊, `w ≈ −1` ⇒ Ω₋, and the
/// unbounded component belongs to the side opposite the enclosed one.
fn classify_side(c: &Curve, z: Complex64) -> Result<DomainSide> {
    let w = c.winding_number(z)?;
    if (w - 1.0).abs() < 0.5 {
        Ok(DomainSide::Interior)
    } else if (w + 1.0).abs() < 0.5 {
        Ok(DomainSide::Exterior)
    } else if w.abs() < 0.5 {
        Ok(if c.orientation()? > 0.0 {
            DomainSide::Exterior
        } else {
            DomainSide::Interior
        })
    } else {
        Err(Error::Domain("ambiguous winding number near the curve"))
    }
}

/// Closed form of `Λ(γ_θ, re^{iφ})`; independent of `r`.
///
/// Case (a), `|φ| < θ` (inside `W_θ`):
/// `Λ² = (2θ/π²) [1/sinc(π−(θ−φ)) + 1/sinc(π−(θ+φ))] cos(πφ/2θ)`.
/// Case (b), `θ < φ < 2π−θ` (inside `V_θ`): the analogous display with
/// `π−θ` and the exterior secant argument. Boundary angles return 1.
pub fn lambda_wedge(theta: f64, phi: f64) -> Result<LambdaValue> {
    if !(theta > 0.0 && theta < PI / 2.0) {
        return Err(Error::Domain("wedge aperture must satisfy 0 < θ < π/2"));
    }
    let mut phi = crate::util::wrap_into_period(phi, TAU);
    if phi >= TAU - theta {
        phi -= TAU;
    }
    if (phi - theta).abs() < 1e-12 || (phi + theta).abs() < 1e-12 {
        return Ok(LambdaValue::on_curve());
    }
    // All edge-adjacent factors go through edge distances; the naive
    // sin(π−x)/cos(πφ/2θ) forms shed digits when an edge distance is tiny.
    let (lam2, regime) = if phi.abs() < theta {
        let (d1, d2) = (theta - phi, theta + phi);
        let lam2 = (2.0 * theta / (PI * PI))
            * (inv_sinc_at_pi_minus(d1) + inv_sinc_at_pi_minus(d2))
            * cos_from_edge_distances(d1, d2);
        (lam2, LambdaRegime::InteriorBulk)
    } else {
        let a = PI - theta;
        let (e1, e2) = (phi - theta, TAU - theta - phi);
        let lam2 = (2.0 * a / (PI * PI))
            * (inv_sinc_at_pi_minus(e1) + inv_sinc_at_pi_minus(e2))
            * cos_from_edge_distances(e1, e2);
        (lam2, LambdaRegime::ExteriorBulk)
    };
    Ok(LambdaValue {
        value: lam2.sqrt(),
        regime,
        accuracy: 1e-14,
    })
}

/// `Λ(E_r, 0)` in closed form:
/// `Λ² = (2/π)√(1−1/r²) [(r²+1)Π(1−r², k_r) − K(k_r)] / (θ₂(0,q)θ₃(0,q))`
/// with `q = ((r−1)/(r+1))²`; continuity gives 1 at r = 1.
pub fn lambda_ellipse_at_origin(r: f64) -> Result<f64> {
    if r < 1.0 {
        return Err(Error::Domain("ellipse closed forms need r ≥ 1"));
    }
    if r == 1.0 {
        return Ok(1.0);
    }
    let k = ellipse_modulus(r)?;
    let q = Nome::new(((r - 1.0) / (r + 1.0)).powi(2)).expect("nome in [0,1)");
    let t2 = theta_at_zero(ThetaIndex::Two, q);
    let t3 = theta_at_zero(ThetaIndex::Three, q);
    let num = (r * r + 1.0) * ellint_pi(1.0 - r * r, k)? - ellint_k(k);
    let lam2 = (2.0 / PI) * k.get() * num / (t2 * t3);
    Ok(lam2.sqrt())
}

/// `Λ(E_r, ∞)² = 4r E(√(1−1/r²)) / (π(r+1))`.
pub fn lambda_ellipse_at_infinity(r: f64) -> Result<f64> {
    if r < 1.0 {
        return Err(Error::Domain("ellipse closed forms need r ≥ 1"));
    }
    let k = ellipse_modulus(r)?;
    let lam2 = 4.0 * r * ellint_e(k.get()).expect("modulus in [0,1)") / (PI * (r + 1.0));
    Ok(lam2.sqrt())
}

/// Evaluates Λ on the Möbius image: `Λ(Φ(γ), Φ(z))` with the image sampled
/// at `n` nodes. By projective invariance this equals `Λ(γ, z)` up to the
/// numerical error of the sampled pipeline, which is exactly what the
/// invariance tests measure; it is also how Λ is defined on unbounded
/// curves.
pub fn lambda_pullback(
    m: &MoebiusMap,
    c: &Curve,
    z: ScalarPoint,
    n: usize,
) -> Result<LambdaValue> {
    let image = c.pushforward(m, n)?;
    lambda(&image, m.apply(z), None)
}

/// Lower and upper bounds on `‖C±‖` from Λ: the grid supremum (plus ∞ when
/// capacity is known) bounds from below; ellipses also carry the
/// Feldman–Krupnik–Spitkovsky upper bound `√(1 + ((r−1)/(r+1))²)`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormBoundsReport {
    pub lower: f64,
    pub upper: Option<f64>,
    pub argmax: ScalarPoint,
}

pub fn cauchy_norm_bounds(c: &Curve, grid: &[ScalarPoint]) -> Result<NormBoundsReport> {
    let mut lower = f64::NEG_INFINITY;
    let mut argmax = ScalarPoint::Infinity;
    for z in grid {
        let lv = lambda(c, *z, None)?;
        if lv.value > lower {
            lower = lv.value;
            argmax = *z;
        }
    }
    if c.is_bounded() && c.analytic_capacity().is_ok() {
        let lv = lambda(c, ScalarPoint::Infinity, None)?;
        if lv.value > lower {
            lower = lv.value;
            argmax = ScalarPoint::Infinity;
        }
    }
    if lower == f64::NEG_INFINITY {
        return Err(Error::InsufficientData);
    }
    let upper = match c {
        Curve::Ellipse { r } => Some((1.0 + ((r - 1.0) / (r + 1.0)).powi(2)).sqrt()),
        _ => None,
    };
    Ok(NormBoundsReport {
        lower,
        upper,
        argmax,
    })
}

/// Default evaluation grid: a 41×41 lattice over the padded bounding box
/// with a collar around the curve removed (near-curve values are 1 + o(1)
/// and never the supremum, while their quadrature is least accurate).
/// The wedge gets a unit-radius ray sweep instead.
pub fn default_grid(c: &Curve) -> Result<Vec<ScalarPoint>> {
    match c {
        Curve::Wedge { theta } => {
            let mut grid = Vec::new();
            let n = 360;
            for j in 1..n {
                let phi = -theta + TAU * j as f64 / n as f64;
                if (phi - theta).abs() < 1e-6 || (phi + theta).abs() < 1e-6 {
                    continue;
                }
                if phi >= TAU - theta {
                    continue;
                }
                grid.push(ScalarPoint::Finite(Complex64::new(phi.cos(), phi.sin())));
            }
            Ok(grid)
        }
        _ => {
            let diameter = c.diameter()?;
            let probe_n = c.node_count().unwrap_or(64);
            let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
            let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
            for j in 0..probe_n {
                let p = c.point(j as f64 * TAU / probe_n as f64)?;
                xmin = xmin.min(p.re);
                xmax = xmax.max(p.re);
                ymin = ymin.min(p.im);
                ymax = ymax.max(p.im);
            }
            let pad = 0.3 * diameter;
            let collar = 0.05 * diameter;
            let mut grid = Vec::new();
            let m = 41;
            for i in 0..m {
                for j in 0..m {
                    let x = xmin - pad + (xmax - xmin + 2.0 * pad) * i as f64 / (m - 1) as f64;
                    let y = ymin - pad + (ymax - ymin + 2.0 * pad) * j as f64 / (m - 1) as f64;
                    let z = Complex64::new(x, y);
                    if c.distance(z)? > collar {
                        grid.push(ScalarPoint::Finite(z));
                    }
                }
            }
            Ok(grid)
        }
    }
}

/// Least-squares fit of `Λ(E_r, ·) − 1 ≈ c₂(r−1)² + c₃(r−1)³` near r = 1,
/// for both the origin and ∞ closed forms. The fit regresses
/// `(Λ−1)/(r−1)²` on `(r−1)` to condition the small-coefficient extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticFit {
    pub origin_c2: f64,
    pub origin_c3: f64,
    pub infinity_c2: f64,
    pub infinity_c3: f64,
}

pub fn asymptotic_check(r_values: &[f64]) -> Result<AsymptoticFit> {
    if r_values.len() < 4 {
        return Err(Error::InsufficientData);
    }
    for &r in r_values {
        if !(r > 1.0 && r <= 1.2) {
            return Err(Error::Domain("asymptotic fit needs r values in (1, 1.2]"));
        }
    }
    let xs: Vec<f64> = r_values.iter().map(|r| r - 1.0).collect();
    let origin: Vec<f64> = r_values
        .iter()
        .zip(&xs)
        .map(|(&r, &x)| Ok((lambda_ellipse_at_origin(r)? - 1.0) / (x * x)))
        .collect::<Result<_>>()?;
    let infinity: Vec<f64> = r_values
        .iter()
        .zip(&xs)
        .map(|(&r, &x)| Ok((lambda_ellipse_at_infinity(r)? - 1.0) / (x * x)))
        .collect::<Result<_>>()?;
    let (origin_c2, origin_c3) = fit_line(&xs, &origin);
    let (infinity_c2, infinity_c3) = fit_line(&xs, &infinity);
    Ok(AsymptoticFit {
        origin_c2,
        origin_c3,
        infinity_c2,
        infinity_c3,
    })
}

/// Ordinary least squares `y ≈ a + b x`, returning `(a, b)`.
fn fit_line(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    let intercept = (sy - slope * sx) / n;
    (intercept, slope)
}
