//! Explicit Riemann maps and the Szegő kernels they induce.
//!
//! The interior ellipse map is the theta-quotient form
//! `Θ_r(z) = θ₁(w, q)/θ₄(w, q)` with `w = arcsin(z/√(r²−1))` and
//! `q = ((r−1)/(r+1))²`. The exterior map inverts the Joukowski
//! parametrization, `Ψ_r(z) = (r+1)/(z + √(z² − (r²−1)))`, with the branch
//! that keeps `|Ψ_r| < 1` outside.

#[allow(unused_imports)]
use num_traits::Float;

use core::f64::consts::PI;
use num_complex::Complex64;

use super::wedge::{
    normalize_wedge_angle, on_wedge_boundary, wedge_exterior_map, wedge_map,
    wedge_szego_diag_exterior, wedge_szego_diag_interior,
};
use super::{DomainSide, RiemannMapValue};
use crate::error::{Error, Result};
use crate::geometry::{Curve, ScalarPoint};
use crate::specfun::{theta, theta_z_deriv, Nome, ThetaIndex};

/// Principal arcsin with the matching derivative factor `1/√(1−u²)`,
/// computed from the same square root so the pair stays branch-consistent on
/// the cut. The theta quotient heals the arcsin jump across the focal rays,
/// but only when `w` and `dw` come from the same side.
fn asin_with_deriv(u: Complex64) -> (Complex64, Complex64, Complex64) {
    let one = Complex64::new(1.0, 0.0);
    let s = (one - u * u).sqrt();
    let i = Complex64::i();
    let w = -i * (i * u + s).ln();
    (w, one / s, s)
}

fn nome_for_ellipse(r: f64) -> Nome {
    let q = ((r - 1.0) / (r + 1.0)).powi(2);
    Nome::new(q).expect("ellipse nome lands in [0,1)")
}

pub(crate) fn inside_ellipse(r: f64, z: Complex64) -> bool {
    (z.re / r) * (z.re / r) + z.im * z.im < 1.0
}

fn theta_quotient(w: Complex64, q: Nome) -> Complex64 {
    theta(ThetaIndex::One, w, q) / theta(ThetaIndex::Four, w, q)
}

fn ellipse_map_unchecked(r: f64, z: Complex64) -> RiemannMapValue {
    let q = nome_for_ellipse(r);
    let c = (r * r - 1.0).sqrt();
    let u = z / c;
    let (w, dw_du, s) = asin_with_deriv(u);
    let t1 = theta(ThetaIndex::One, w, q);
    let t4 = theta(ThetaIndex::Four, w, q);
    let value = t1 / t4;
    // Near the foci (s → 0) the chain rule becomes 0·∞; fall back to a
    // central difference of the full map, which is analytic there.
    let derivative = if s.norm() < 1e-5 {
        let h = 1e-5 * c;
        let plus = theta_quotient(asin_with_deriv((z + h) / c).0, q);
        let minus = theta_quotient(asin_with_deriv((z - h) / c).0, q);
        (plus - minus) / (2.0 * h)
    } else {
        let d1 = theta_z_deriv(ThetaIndex::One, w, q);
        let d4 = theta_z_deriv(ThetaIndex::Four, w, q);
        (d1 * t4 - t1 * d4) / (t4 * t4) * dw_du / c
    };
    RiemannMapValue { value, derivative }
}

/// Riemann map `Θ_r : Ω₊ → D` of the ellipse interior, with `Θ_r(0) = 0`.
pub fn ellipse_riemann_map(r: f64, z: Complex64) -> Result<RiemannMapValue> {
    if r <= 1.0 || !r.is_finite() {
        return Err(Error::Domain("interior ellipse map needs r > 1"));
    }
    if !inside_ellipse(r, z) {
        return Err(Error::Domain("point must lie strictly inside the ellipse"));
    }
    Ok(ellipse_map_unchecked(r, z))
}

fn ellipse_exterior_unchecked(r: f64, z: Complex64) -> RiemannMapValue {
    let csq = r * r - 1.0;
    let mut s = (z * z - csq).sqrt();
    // Pick the branch asymptotic to +z so Ψ_r(∞) = 0.
    if (z.conj() * s).re < 0.0 {
        s = -s;
    }
    let value = (r + 1.0) / (z + s);
    let derivative = -(r + 1.0) / (s * (z + s));
    RiemannMapValue { value, derivative }
}

/// Riemann map `Ψ_r : Ω₋ → D` of the ellipse exterior, `Ψ_r(∞) = 0`.
/// For r = 2 it reduces to `Ψ₂(z) = 3/(z + √(z² − 3))`.
pub fn ellipse_exterior_map(r: f64, z: Complex64) -> Result<RiemannMapValue> {
    if r <= 1.0 || !r.is_finite() {
        return Err(Error::Domain("exterior ellipse map needs r > 1"));
    }
    if (z.re / r) * (z.re / r) + z.im * z.im <= 1.0 {
        return Err(Error::Domain("point must lie strictly outside the ellipse"));
    }
    Ok(ellipse_exterior_unchecked(r, z))
}

fn disc_diag(m: &RiemannMapValue) -> f64 {
    m.derivative.norm() / (2.0 * PI * (1.0 - m.value.norm_sqr()))
}

/// Szegő kernel diagonal `S±(z, z)` for curves with known Riemann maps.
///
/// `z = ∞` in the exterior returns exactly 0 (exterior Hardy functions
/// vanish at ∞).
pub fn szego_diag(c: &Curve, side: DomainSide, z: ScalarPoint) -> Result<f64> {
    let z = match z {
        ScalarPoint::Infinity => {
            if !c.is_bounded() {
                return Err(Error::OnCurve);
            }
            return match side {
                DomainSide::Exterior => Ok(0.0),
                DomainSide::Interior => Err(Error::SideMismatch),
            };
        }
        ScalarPoint::Finite(z) => z,
    };
    match c {
        Curve::Circle { center, radius } => {
            let d2 = (z - center).norm_sqr();
            let r2 = radius * radius;
            match side {
                DomainSide::Interior => {
                    if d2 >= r2 {
                        return Err(Error::SideMismatch);
                    }
                    Ok(radius / (2.0 * PI * (r2 - d2)))
                }
                DomainSide::Exterior => {
                    if d2 <= r2 {
                        return Err(Error::SideMismatch);
                    }
                    Ok(radius / (2.0 * PI * (d2 - r2)))
                }
            }
        }
        Curve::Ellipse { r } if *r == 1.0 => {
            szego_diag(
                &Curve::circle(Complex64::new(0.0, 0.0), 1.0).expect("unit circle"),
                side,
                ScalarPoint::Finite(z),
            )
        }
        Curve::Ellipse { r } => match side {
            DomainSide::Interior => {
                let m = ellipse_riemann_map(*r, z).map_err(|_| Error::SideMismatch)?;
                Ok(disc_diag(&m))
            }
            DomainSide::Exterior => {
                let m = ellipse_exterior_map(*r, z).map_err(|_| Error::SideMismatch)?;
                Ok(disc_diag(&m))
            }
        },
        Curve::Wedge { theta } => {
            if c.distance(z)? < 1e-12 * (1.0 + z.norm()) {
                return Err(Error::OnCurve);
            }
            let r = z.norm();
            let phi = normalize_wedge_angle(*theta, z.arg());
            match side {
                DomainSide::Interior => {
                    if phi.abs() >= *theta {
                        return Err(Error::SideMismatch);
                    }
                    Ok(wedge_szego_diag_interior(*theta, r, phi))
                }
                DomainSide::Exterior => {
                    if phi <= *theta || phi >= 2.0 * PI - *theta {
                        return Err(Error::SideMismatch);
                    }
                    Ok(wedge_szego_diag_exterior(*theta, r, phi))
                }
            }
        }
        Curve::Sampled(_) => Err(Error::NoRiemannMap),
    }
}

/// Riemann map value together with an analytic branch of `√Φ′` suitable for
/// the Szegő transformation law on this curve family and side.
fn map_with_branch(
    c: &Curve,
    side: DomainSide,
    z: Complex64,
    strict: bool,
) -> Result<(RiemannMapValue, Complex64)> {
    match c {
        Curve::Circle { center, radius } => {
            let d2 = (z - center).norm_sqr();
            let r2 = radius * radius;
            match side {
                DomainSide::Interior => {
                    if strict && d2 >= r2 {
                        return Err(Error::SideMismatch);
                    }
                    let m = RiemannMapValue {
                        value: (z - center) / radius,
                        derivative: Complex64::new(1.0 / radius, 0.0),
                    };
                    Ok((m, Complex64::new(1.0 / radius.sqrt(), 0.0)))
                }
                DomainSide::Exterior => {
                    if strict && d2 <= r2 {
                        return Err(Error::SideMismatch);
                    }
                    let w = z - center;
                    let m = RiemannMapValue {
                        value: radius / w,
                        derivative: -radius / (w * w),
                    };
                    // −Φ′ = ρ/w² has the global analytic root √ρ/w.
                    Ok((m, Complex64::i() * radius.sqrt() / w))
                }
            }
        }
        Curve::Ellipse { r } if *r == 1.0 => map_with_branch(
            &Curve::circle(Complex64::new(0.0, 0.0), 1.0).expect("unit circle"),
            side,
            z,
            strict,
        ),
        Curve::Ellipse { r } => match side {
            DomainSide::Interior => {
                if strict && !inside_ellipse(*r, z) {
                    return Err(Error::SideMismatch);
                }
                let m = ellipse_map_unchecked(*r, z);
                // Θ′ stays in the right half plane on the closed interior at
                // desk-scale eccentricities (checked by the continuity scan
                // in the test suite), so the principal root is analytic.
                Ok((m, m.derivative.sqrt()))
            }
            DomainSide::Exterior => {
                if strict && inside_ellipse(*r, z) {
                    return Err(Error::SideMismatch);
                }
                let m = ellipse_exterior_unchecked(*r, z);
                // Ψ′ has a double zero at ∞; −z²Ψ′ stays off the negative
                // real axis on the exterior, so i·√(−z²Ψ′)/z is a global
                // analytic branch of √Ψ′ (checked by the continuity scan).
                Ok((m, Complex64::i() * (-(z * z) * m.derivative).sqrt() / z))
            }
        },
        Curve::Wedge { theta } => {
            let phi = normalize_wedge_angle(*theta, z.arg());
            match side {
                DomainSide::Interior => {
                    if strict && (on_wedge_boundary(*theta, phi) || phi.abs() >= *theta) {
                        return Err(Error::SideMismatch);
                    }
                    let m = wedge_map(*theta, z);
                    Ok((m, Complex64::i() * (-m.derivative).sqrt()))
                }
                DomainSide::Exterior => {
                    if strict
                        && (on_wedge_boundary(*theta, phi)
                            || phi <= *theta
                            || phi >= 2.0 * PI - *theta)
                    {
                        return Err(Error::SideMismatch);
                    }
                    let m = wedge_exterior_map(*theta, z);
                    Ok((m, Complex64::i() * (-m.derivative).sqrt()))
                }
            }
        }
        Curve::Sampled(_) => Err(Error::NoRiemannMap),
    }
}

/// Full off-diagonal Szegő kernel `S(z, ζ(t))` via the transformation law
/// `S(z, ζ) = √Φ′(z) · S_D(Φ(z), Φ(ζ)) · conj(√Φ′(ζ))` with the unit-disc
/// kernel `S_D(w, v) = 1/(2π(1 − w v̄))`.
pub fn szego_boundary_kernel(
    c: &Curve,
    side: DomainSide,
    z: Complex64,
    t: f64,
) -> Result<Complex64> {
    let (mz, bz) = map_with_branch(c, side, z, true)?;
    let zeta = c.point(t)?;
    let (mzeta, bzeta) = map_with_branch(c, side, zeta, false)?;
    let one = Complex64::new(1.0, 0.0);
    Ok(bz * bzeta.conj() / (2.0 * PI * (one - mz.value * mzeta.value.conj())))
}
