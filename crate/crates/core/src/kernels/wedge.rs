//! Closed forms on the wedge `W_θ` and its complement `V_θ`.
//!
//! The wedge boundary is unbounded and never discretized; everything here
//! comes from the auxiliary integral `I(r, α) = ∫₀^∞ dx/|x − re^{iα}|²` and
//! the power Riemann maps of the two sectors.

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::util::{cos_from_edge_distances, inv_sinc_at_pi_minus};

/// `I(r, α) = ∫₀^∞ dx/|x − re^{iα}|² = 1/(r sinc(π − α))` for `α ∈ (0, 2π)`.
pub fn wedge_aux_integral(r: f64, alpha: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(Error::Domain("wedge integral needs r > 0"));
    }
    if alpha <= 0.0 || alpha >= 2.0 * PI {
        return Err(Error::Domain("wedge integral needs α ∈ (0, 2π)"));
    }
    Ok(inv_sinc_at_pi_minus(alpha) / r)
}

/// `‖C(re^{iφ}, ·)‖²_{L²(γ_θ)}` for a point strictly inside `W_θ` or `V_θ`.
pub fn wedge_cauchy_norm_sq(theta: f64, r: f64, phi: f64) -> Result<f64> {
    if !(0.0..PI / 2.0).contains(&theta) || theta == 0.0 {
        return Err(Error::Domain("wedge aperture must satisfy 0 < θ < π/2"));
    }
    if r <= 0.0 {
        return Err(Error::Domain("wedge norm needs r > 0"));
    }
    let phi = normalize_wedge_angle(theta, phi);
    if on_wedge_boundary(theta, phi) {
        return Err(Error::OnCurve);
    }
    let scale = 1.0 / (4.0 * PI * PI);
    if phi.abs() < theta {
        Ok(scale * (wedge_aux_integral(r, theta - phi)? + wedge_aux_integral(r, theta + phi)?))
    } else {
        Ok(scale
            * (wedge_aux_integral(r, phi - theta)? + wedge_aux_integral(r, 2.0 * PI - theta - phi)?))
    }
}

/// Szegő diagonal of `W_θ`: `S(re^{iφ}, re^{iφ}) = sec(πφ/(2θ)) / (8rθ)`.
/// The secant argument approaches π/2 at the edges, so the cosine is taken
/// through the edge distances `θ ∓ φ`.
pub(crate) fn wedge_szego_diag_interior(theta: f64, r: f64, phi: f64) -> f64 {
    1.0 / (8.0 * r * theta * cos_from_edge_distances(theta - phi, theta + phi))
}

/// Szegő diagonal of `V_θ`:
/// `S(re^{iφ}, re^{iφ}) = sec((π/2)(π−φ)/(π−θ)) / (8r(π−θ))`.
pub(crate) fn wedge_szego_diag_exterior(theta: f64, r: f64, phi: f64) -> f64 {
    let a = PI - theta;
    1.0 / (8.0 * r * a * cos_from_edge_distances(phi - theta, 2.0 * PI - theta - phi))
}

/// Maps any angle into the wedge parameter window `[−θ, 2π − θ)`.
pub(crate) fn normalize_wedge_angle(theta: f64, phi: f64) -> f64 {
    let tau = 2.0 * PI;
    let mut p = crate::util::wrap_into_period(phi, tau);
    if p >= tau - theta {
        p -= tau;
    }
    p
}

pub(crate) fn on_wedge_boundary(theta: f64, phi: f64) -> bool {
    (phi - theta).abs() < 1e-12 || (phi + theta).abs() < 1e-12
}

/// Riemann map of the sector `W_α` (aperture 2α) onto the unit disc,
/// `Ψ_α(z) = (1 − z^{π/2α}) / (1 + z^{π/2α})`, with its derivative.
/// The fractional power takes the branch preserving the positive real axis.
pub(crate) fn wedge_map(alpha: f64, z: Complex64) -> super::RiemannMapValue {
    let p = PI / (2.0 * alpha);
    let zp = z.powf(p);
    let one = Complex64::new(1.0, 0.0);
    let value = (one - zp) / (one + zp);
    let derivative = -(PI / alpha) * z.powf(p - 1.0) / ((one + zp) * (one + zp));
    super::RiemannMapValue { value, derivative }
}

/// Riemann map of `V_θ` onto the disc: flip to `W_{π−θ}` and map.
pub(crate) fn wedge_exterior_map(theta: f64, z: Complex64) -> super::RiemannMapValue {
    let m = wedge_map(PI - theta, -z);
    super::RiemannMapValue {
        value: m.value,
        derivative: -m.derivative,
    }
}
