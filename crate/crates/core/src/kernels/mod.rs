//! Pointwise Cauchy kernel, L²(γ) norms of the Cauchy kernel, and Szegő
//! kernel values through explicit Riemann maps.

mod riemann;
mod wedge;

pub use riemann::{ellipse_exterior_map, ellipse_riemann_map, szego_boundary_kernel, szego_diag};
pub use wedge::{wedge_aux_integral, wedge_cauchy_norm_sq};

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::{ellipse_modulus, Curve, QuadratureRule};
use crate::specfun::{ellint_k, ellint_pi};
use crate::util::Compensated;

/// Which side of the curve an operator or kernel lives on.
///
/// `Interior` is Ω₊, the domain to the left of the directed curve, and
/// `Exterior` is Ω₋. For counterclockwise bounded curves these are the
/// bounded interior and the unbounded exterior; a clockwise sampled curve
/// swaps them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainSide {
    Interior,
    Exterior,
}

impl DomainSide {
    /// The ± prefactor of the Cauchy kernel on this side.
    pub fn sign(self) -> f64 {
        match self {
            DomainSide::Interior => 1.0,
            DomainSide::Exterior => -1.0,
        }
    }
}

impl core::fmt::Display for DomainSide {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            DomainSide::Interior => write!(f, "interior"),
            DomainSide::Exterior => write!(f, "exterior"),
        }
    }
}

/// A Riemann map evaluation: the image point in the closed unit disc and the
/// complex derivative of the map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannMapValue {
    pub value: Complex64,
    pub derivative: Complex64,
}

/// The Cauchy kernel `C±(z, ζ(t)) = ±T(ζ(t)) / (2πi (ζ(t) − z))`.
pub fn cauchy_kernel(c: &Curve, side: DomainSide, z: Complex64, t: f64) -> Result<Complex64> {
    let zeta = c.point(t)?;
    let tangent = c.tangent(t)?;
    let dz = zeta - z;
    if dz.norm() == 0.0 {
        return Err(Error::OnCurve);
    }
    Ok(side.sign() * tangent / (Complex64::new(0.0, 2.0 * PI) * dz))
}

/// Result of a quadrature Cauchy-norm evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelNorm {
    /// `‖C(z,·)‖²_{L²(γ)} = (1/4π²) ∫ dσ(ζ)/|ζ − z|²`.
    pub value: f64,
    /// Set when `z` is closer to the curve than ten node spacings; the
    /// trapezoid value is then not trustworthy at full tolerance.
    pub near_boundary: bool,
}

/// Quadrature evaluation of `‖C(z,·)‖²`; the ± sign of the kernel drops out,
/// so no side is needed.
pub fn cauchy_norm_sq(c: &Curve, z: Complex64, rule: &QuadratureRule) -> Result<KernelNorm> {
    let mut acc = Compensated::default();
    let mut dist = f64::INFINITY;
    for (t, w) in rule.iter() {
        let zeta = c.point(t)?;
        let d2 = (zeta - z).norm_sqr();
        dist = dist.min(d2);
        acc.add(w / d2);
    }
    let dist = dist.sqrt();
    if dist < 1e-13 * (1.0 + z.norm()) {
        return Err(Error::OnCurve);
    }
    Ok(KernelNorm {
        value: acc.value() / (4.0 * PI * PI),
        near_boundary: dist < 10.0 * rule.max_spacing(),
    })
}

/// Closed form for `‖C(0,·)‖²_{L²(E_r)}`:
/// `(1/π²r) [ (r²+1) Π(1−r², √(1−1/r²)) − K(√(1−1/r²)) ]`.
pub fn ellipse_cauchy_norm0(r: f64) -> Result<f64> {
    if r < 1.0 {
        return Err(Error::Domain("ellipse norm needs r ≥ 1"));
    }
    if r == 1.0 {
        return Ok(1.0 / (2.0 * PI));
    }
    let k = ellipse_modulus(r)?;
    let pi3 = ellint_pi(1.0 - r * r, k)?;
    let big_k = ellint_k(k);
    Ok(((r * r + 1.0) * pi3 - big_k) / (PI * PI * r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::quadrature;

    fn c64(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn kernel_on_unit_circle_at_origin() {
        // T = i, ζ = 1 at t = 0, so C₊(0, ζ(0)) = i/(2πi) = 1/(2π).
        let k = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
        let v = cauchy_kernel(&k, DomainSide::Interior, c64(0.0, 0.0), 0.0).unwrap();
        assert!((v - c64(1.0 / (2.0 * PI), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn exterior_kernel_is_negated_interior() {
        let e = Curve::ellipse(2.0).unwrap();
        for i in 0..20 {
            let t = 0.17 + 0.31 * i as f64;
            let z = c64(0.3 * (i as f64).cos(), 0.2 * (i as f64).sin());
            let a = cauchy_kernel(&e, DomainSide::Interior, z, t).unwrap();
            let b = cauchy_kernel(&e, DomainSide::Exterior, z, t).unwrap();
            assert!((a + b).norm() < 1e-15);
        }
    }

    #[test]
    fn ellipse_kernel_hand_value() {
        // ζ(π/2) = i, T = −1, so C₊(0, i) = −1/(2πi·i) = 1/(2π).
        let e = Curve::ellipse(2.0).unwrap();
        let v = cauchy_kernel(&e, DomainSide::Interior, c64(0.0, 0.0), PI / 2.0).unwrap();
        assert!((v - c64(1.0 / (2.0 * PI), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn circle_norm_at_center() {
        let k = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
        let rule = quadrature(&k, 64).unwrap();
        let n = cauchy_norm_sq(&k, c64(0.0, 0.0), &rule).unwrap();
        assert!((n.value - 1.0 / (2.0 * PI)).abs() < 1e-14);
        assert!(!n.near_boundary);
    }

    #[test]
    fn norm_far_field_scaling() {
        let e = Curve::ellipse(2.0).unwrap();
        let rule = quadrature(&e, 256).unwrap();
        let sigma = e.arc_length().unwrap();
        let z = c64(1e6, 3e5);
        let n = cauchy_norm_sq(&e, z, &rule).unwrap();
        let scaled = z.norm_sqr() * n.value;
        let limit = sigma / (4.0 * PI * PI);
        assert!((scaled - limit).abs() < 1e-6 * limit);
    }

    #[test]
    fn norm_near_boundary_flagged() {
        let e = Curve::ellipse(2.0).unwrap();
        let rule = quadrature(&e, 64).unwrap();
        let n = cauchy_norm_sq(&e, c64(1.99, 0.0), &rule).unwrap();
        assert!(n.near_boundary);
        assert!(matches!(
            cauchy_norm_sq(&e, c64(2.0, 0.0), &rule),
            Err(Error::OnCurve)
        ));
    }

    #[test]
    fn ellipse_norm0_continuity_to_circle() {
        assert!((ellipse_cauchy_norm0(1.0).unwrap() - 1.0 / (2.0 * PI)).abs() < 1e-15);
        // r → 1⁺ approaches the circle value.
        let near = ellipse_cauchy_norm0(1.0 + 1e-7).unwrap();
        assert!((near - 1.0 / (2.0 * PI)).abs() < 1e-8);
    }

    #[test]
    fn ellipse_norm0_matches_quadrature() {
        let e = Curve::ellipse(2.0).unwrap();
        let rule = quadrature(&e, 512).unwrap();
        let q = cauchy_norm_sq(&e, c64(0.0, 0.0), &rule).unwrap().value;
        let cf = ellipse_cauchy_norm0(2.0).unwrap();
        assert!((q - cf).abs() < 1e-10, "quad {q} vs closed {cf}");
    }
}
