//! Closed Jordan curves: canonical families and sampled parametrizations.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};
use num_complex::Complex64;

use super::MoebiusMap;
use crate::error::{Error, Result};
use crate::specfun::{ellint_e, EllipticModulus};
use crate::util::Compensated;

/// How close a Möbius pole may come to the curve, relative to its diameter,
/// before a pushforward is refused.
const POLE_COLLAR: f64 = 1e-9;

/// A smooth closed curve sampled at `n` uniform parameters on `[0, 2π)`,
/// together with first and second parametric derivatives at the nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    points: Vec<Complex64>,
    derivs: Vec<Complex64>,
    second_derivs: Vec<Complex64>,
}

impl SampledCurve {
    /// Validates closure-scale invariants: even `n ≥ 16`, matched lengths,
    /// finite data, nonvanishing `z′`, and no self-intersection at node
    /// resolution.
    pub fn new(
        points: Vec<Complex64>,
        derivs: Vec<Complex64>,
        second_derivs: Vec<Complex64>,
    ) -> Result<Self> {
        let n = points.len();
        if !n.is_multiple_of(2) {
            return Err(Error::Parity(n));
        }
        if n < 16 {
            return Err(Error::Domain("sampled curve needs at least 16 nodes"));
        }
        if derivs.len() != n || second_derivs.len() != n {
            return Err(Error::Domain("sampled curve arrays must have equal length"));
        }
        let dt = TAU / n as f64;
        for j in 0..n {
            if !points[j].is_finite() || !derivs[j].is_finite() || !second_derivs[j].is_finite() {
                return Err(Error::Domain("sampled curve data must be finite"));
            }
            if derivs[j].norm() == 0.0 {
                return Err(Error::Domain("sampled curve needs nonvanishing z'"));
            }
        }
        // Simplicity at node resolution: distant-in-parameter nodes must not
        // nearly coincide in the plane.
        for i in 0..n {
            let local = derivs[i].norm() * dt;
            for j in (i + 3)..n {
                if j - i >= n - 2 {
                    continue; // periodic neighbors
                }
                let sep = (points[i] - points[j]).norm();
                if sep < 0.1 * local.min(derivs[j].norm() * dt) {
                    return Err(Error::Domain("sampled curve self-intersects at resolution"));
                }
            }
        }
        Ok(Self {
            points,
            derivs,
            second_derivs,
        })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    pub fn derivs(&self) -> &[Complex64] {
        &self.derivs
    }

    pub fn second_derivs(&self) -> &[Complex64] {
        &self.second_derivs
    }

    /// Keeps every other node; used for refinement-based error estimates.
    pub fn coarsened(&self) -> Result<SampledCurve> {
        let take = |v: &[Complex64]| v.iter().step_by(2).copied().collect::<Vec<_>>();
        SampledCurve::new(
            take(&self.points),
            take(&self.derivs),
            take(&self.second_derivs),
        )
    }
}

/// A closed Jordan curve: a tagged canonical family or a sampled smooth
/// periodic parametrization.
///
/// Canonical bounded curves are oriented counterclockwise. A sampled curve
/// carries whatever orientation its data encodes; `orientation` reports it.
#[derive(Debug, Clone, PartialEq)]
pub enum Curve {
    /// Circle of positive radius.
    Circle { center: Complex64, radius: f64 },
    /// The ellipse x²/r² + y² = 1 with r ≥ 1, parametrized (r cos t, sin t).
    Ellipse { r: f64 },
    /// Boundary of the wedge {r e^{iφ}: r > 0, |φ| < θ}, θ ∈ (0, π/2);
    /// unbounded, passes through ∞.
    Wedge { theta: f64 },
    Sampled(SampledCurve),
}

impl Curve {
    pub fn circle(center: Complex64, radius: f64) -> Result<Self> {
        if radius > 0.0 && radius.is_finite() && center.is_finite() {
            Ok(Curve::Circle { center, radius })
        } else {
            Err(Error::Domain("circle needs a finite center and radius > 0"))
        }
    }

    pub fn ellipse(r: f64) -> Result<Self> {
        if r >= 1.0 && r.is_finite() {
            Ok(Curve::Ellipse { r })
        } else {
            Err(Error::Domain("ellipse needs axis ratio r ≥ 1"))
        }
    }

    pub fn wedge(theta: f64) -> Result<Self> {
        if theta > 0.0 && theta < PI / 2.0 {
            Ok(Curve::Wedge { theta })
        } else {
            Err(Error::Domain("wedge aperture must satisfy 0 < θ < π/2"))
        }
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self, Curve::Wedge { .. })
    }

    /// Node count of a sampled curve.
    pub fn node_count(&self) -> Option<usize> {
        match self {
            Curve::Sampled(s) => Some(s.len()),
            _ => None,
        }
    }

    /// Curve point at parameter `t`. Bounded curves use `t ∈ [0, 2π)`;
    /// the wedge boundary is parametrized over all of ℝ.
    pub fn point(&self, t: f64) -> Result<Complex64> {
        match self {
            Curve::Circle { center, radius } => {
                Ok(center + radius * Complex64::new(t.cos(), t.sin()))
            }
            Curve::Ellipse { r } => Ok(Complex64::new(r * t.cos(), t.sin())),
            Curve::Wedge { theta } => {
                let ray = if t < 0.0 {
                    Complex64::new(0.0, *theta).exp() * (-t)
                } else {
                    Complex64::new(0.0, -*theta).exp() * t
                };
                Ok(ray)
            }
            Curve::Sampled(s) => Ok(s.points[sample_index(s.len(), t)?]),
        }
    }

    /// Parametric derivative `z′(t)`.
    pub fn deriv(&self, t: f64) -> Result<Complex64> {
        match self {
            Curve::Circle { radius, .. } => {
                Ok(radius * Complex64::new(0.0, 1.0) * Complex64::new(t.cos(), t.sin()))
            }
            Curve::Ellipse { r } => Ok(Complex64::new(-r * t.sin(), t.cos())),
            Curve::Wedge { theta } => {
                let dir = if t < 0.0 {
                    -Complex64::new(0.0, *theta).exp()
                } else {
                    Complex64::new(0.0, -*theta).exp()
                };
                Ok(dir)
            }
            Curve::Sampled(s) => Ok(s.derivs[sample_index(s.len(), t)?]),
        }
    }

    /// Parametric second derivative `z″(t)`.
    pub fn second_deriv(&self, t: f64) -> Result<Complex64> {
        match self {
            Curve::Circle { radius, .. } => Ok(-radius * Complex64::new(t.cos(), t.sin())),
            Curve::Ellipse { r } => Ok(Complex64::new(-r * t.cos(), -t.sin())),
            Curve::Wedge { .. } => Ok(Complex64::new(0.0, 0.0)),
            Curve::Sampled(s) => Ok(s.second_derivs[sample_index(s.len(), t)?]),
        }
    }

    /// Unit tangent `z′(t)/|z′(t)|`.
    pub fn tangent(&self, t: f64) -> Result<Complex64> {
        let d = self.deriv(t)?;
        Ok(d / d.norm())
    }

    /// Arc length. Circle and ellipse use closed forms; sampled curves use
    /// the periodic trapezoid sum of |z′|.
    pub fn arc_length(&self) -> Result<f64> {
        match self {
            Curve::Circle { radius, .. } => Ok(TAU * radius),
            Curve::Ellipse { r } => {
                let k = ellipse_modulus(*r)?;
                Ok(4.0 * r * ellint_e(k.get()).expect("modulus in [0,1)"))
            }
            Curve::Wedge { .. } => Err(Error::UnboundedCurve),
            Curve::Sampled(s) => {
                let dt = TAU / s.len() as f64;
                let mut acc = Compensated::default();
                for d in &s.derivs {
                    acc.add(d.norm() * dt);
                }
                Ok(acc.value())
            }
        }
    }

    /// Analytic capacity for the families where it is known in closed form.
    ///
    /// The wedge value is the capacity of its Möbius-equivalent lens, which
    /// is what Λ(γ_θ, ·) sees through projective invariance.
    pub fn analytic_capacity(&self) -> Result<f64> {
        match self {
            Curve::Circle { radius, .. } => Ok(*radius),
            Curve::Ellipse { r } => Ok((r + 1.0) / 2.0),
            Curve::Wedge { theta } => Ok(PI / (2.0 * (PI - theta))),
            Curve::Sampled(_) => Err(Error::CapacityUnknown),
        }
    }

    /// Signed enclosed area `(1/2) Im ∮ z̄ dz`; negative for clockwise curves.
    pub fn signed_area(&self) -> Result<f64> {
        match self {
            Curve::Circle { radius, .. } => Ok(PI * radius * radius),
            Curve::Ellipse { r } => Ok(PI * r),
            Curve::Wedge { .. } => Err(Error::UnboundedCurve),
            Curve::Sampled(s) => {
                let dt = TAU / s.len() as f64;
                let mut acc = Compensated::default();
                for (z, d) in s.points.iter().zip(&s.derivs) {
                    acc.add(0.5 * (z.conj() * d).im * dt);
                }
                Ok(acc.value())
            }
        }
    }

    /// Orientation: +1 counterclockwise, −1 clockwise.
    pub fn orientation(&self) -> Result<f64> {
        match self {
            Curve::Sampled(_) => Ok(self.signed_area()?.signum()),
            Curve::Wedge { .. } => Ok(1.0),
            _ => Ok(1.0),
        }
    }

    /// Euclidean distance from `z` to the curve. Exact for circles and
    /// wedges; ellipse distance is found by Newton refinement of the nearest
    /// parameter; sampled curves answer at node resolution.
    pub fn distance(&self, z: Complex64) -> Result<f64> {
        match self {
            Curve::Circle { center, radius } => Ok(((z - center).norm() - radius).abs()),
            Curve::Ellipse { .. } => Ok(parametric_distance(self, z)),
            Curve::Wedge { theta } => {
                let up = Complex64::new(0.0, *theta).exp();
                let dn = Complex64::new(0.0, -*theta).exp();
                Ok(ray_distance(z, up).min(ray_distance(z, dn)))
            }
            Curve::Sampled(s) => Ok(s
                .points
                .iter()
                .map(|p| (z - p).norm())
                .fold(f64::INFINITY, f64::min)),
        }
    }

    /// Winding number of the curve around `z` (bounded curves only).
    /// Canonical curves answer exactly from membership; sampled curves sum
    /// argument increments.
    pub fn winding_number(&self, z: Complex64) -> Result<f64> {
        match self {
            Curve::Circle { center, radius } => {
                Ok(if (z - center).norm() < *radius { 1.0 } else { 0.0 })
            }
            Curve::Ellipse { r } => {
                let v = (z.re / r) * (z.re / r) + z.im * z.im;
                Ok(if v < 1.0 { 1.0 } else { 0.0 })
            }
            Curve::Wedge { .. } => Err(Error::UnboundedCurve),
            Curve::Sampled(s) => {
                let n = s.len();
                let mut acc = Compensated::default();
                for j in 0..n {
                    let a = s.points[j] - z;
                    let b = s.points[(j + 1) % n] - z;
                    acc.add((b / a).arg());
                }
                Ok(acc.value() / TAU)
            }
        }
    }

    /// Curve diameter estimate, used as the scale for pole-proximity checks.
    pub fn diameter(&self) -> Result<f64> {
        match self {
            Curve::Circle { radius, .. } => Ok(2.0 * radius),
            Curve::Ellipse { r } => Ok(2.0 * r),
            Curve::Wedge { .. } => Err(Error::UnboundedCurve),
            Curve::Sampled(s) => {
                let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
                let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
                for p in &s.points {
                    xmin = xmin.min(p.re);
                    xmax = xmax.max(p.re);
                    ymin = ymin.min(p.im);
                    ymax = ymax.max(p.im);
                }
                Ok(((xmax - xmin).powi(2) + (ymax - ymin).powi(2)).sqrt())
            }
        }
    }

    /// Image of the curve under a Möbius map, as a sampled curve with
    /// chain-rule derivatives. When the pole lies in Ω₊, the image is
    /// traversed clockwise; `orientation` on the result reports it.
    pub fn pushforward(&self, m: &MoebiusMap, n: usize) -> Result<Curve> {
        if !self.is_bounded() {
            return Err(Error::UnboundedCurve);
        }
        if !n.is_multiple_of(2) {
            return Err(Error::Parity(n));
        }
        let n = match self {
            Curve::Sampled(s) => s.len(),
            _ => n,
        };
        if let super::ScalarPoint::Finite(p) = m.pole() {
            if self.distance(p)? < POLE_COLLAR * self.diameter()? {
                return Err(Error::PoleOnCurve);
            }
        }
        let dt = TAU / n as f64;
        let mut points = Vec::with_capacity(n);
        let mut derivs = Vec::with_capacity(n);
        let mut seconds = Vec::with_capacity(n);
        for j in 0..n {
            let t = j as f64 * dt;
            let z = self.point(t)?;
            let zp = self.deriv(t)?;
            let zpp = self.second_deriv(t)?;
            let phi = match m.apply(super::ScalarPoint::Finite(z)) {
                super::ScalarPoint::Finite(w) => w,
                super::ScalarPoint::Infinity => return Err(Error::PoleOnCurve),
            };
            let d1 = m.deriv(z)?;
            let d2 = m.second_deriv(z)?;
            points.push(phi);
            derivs.push(d1 * zp);
            seconds.push(d2 * zp * zp + d1 * zpp);
        }
        Ok(Curve::Sampled(SampledCurve::new(points, derivs, seconds)?))
    }
}

/// Report of the capacity inequalities σ(γ) ≥ 2πκ(γ) and κ(γ) ≥ √(A/π).
#[derive(Debug, Clone, PartialEq)]
pub struct CapacityReport {
    pub sigma: f64,
    pub kappa: f64,
    pub area: f64,
    /// σ − 2πκ ≥ 0, zero exactly for circles.
    pub isoperimetric_margin: f64,
    /// κ − √(A/π) ≥ 0, zero exactly for circles.
    pub ahlfors_beurling_margin: f64,
    pub holds_2pi: bool,
    pub holds_ab: bool,
    pub equality_2pi: bool,
    pub equality_ab: bool,
}

/// Checks σ(γ) ≥ 2πκ(γ) and the Ahlfors–Beurling bound κ(γ) ≥ √(A(γ)/π).
pub fn capacity_inequalities(c: &Curve) -> Result<CapacityReport> {
    let sigma = c.arc_length()?;
    let kappa = c.analytic_capacity()?;
    let area = c.signed_area()?.abs();
    let m1 = sigma - TAU * kappa;
    let m2 = kappa - (area / PI).sqrt();
    Ok(CapacityReport {
        sigma,
        kappa,
        area,
        isoperimetric_margin: m1,
        ahlfors_beurling_margin: m2,
        holds_2pi: m1 >= -1e-12,
        holds_ab: m2 >= -1e-12,
        equality_2pi: m1.abs() < 1e-12 * sigma.max(1.0),
        equality_ab: m2.abs() < 1e-12 * kappa.max(1.0),
    })
}

/// Elliptic modulus of the r-ellipse, k_r = √(1 − 1/r²).
pub(crate) fn ellipse_modulus(r: f64) -> Result<EllipticModulus> {
    if r < 1.0 {
        return Err(Error::Domain("ellipse modulus needs r ≥ 1"));
    }
    EllipticModulus::new((1.0 - 1.0 / (r * r)).max(0.0).sqrt())
}

fn sample_index(n: usize, t: f64) -> Result<usize> {
    let dt = TAU / n as f64;
    let pos = crate::util::wrap_into_period(t, TAU) / dt;
    let j = pos.round();
    if (pos - j).abs() > 1e-9 {
        return Err(Error::UnsupportedParameter(t));
    }
    Ok((j as usize) % n)
}

fn ray_distance(z: Complex64, dir: Complex64) -> f64 {
    // Distance to the ray {s·dir : s ≥ 0} with |dir| = 1.
    let s = (z * dir.conj()).re;
    if s <= 0.0 {
        z.norm()
    } else {
        (z - s * dir).norm()
    }
}

/// Nearest-point distance by parameter search plus Newton refinement of
/// g(t) = Re[(ζ(t) − z) ζ′(t)̄] = 0.
fn parametric_distance(c: &Curve, z: Complex64) -> f64 {
    let coarse = 720;
    let mut best_t = 0.0;
    let mut best = f64::INFINITY;
    for j in 0..coarse {
        let t = j as f64 * TAU / coarse as f64;
        let d = (c.point(t).expect("canonical curves evaluate everywhere") - z).norm();
        if d < best {
            best = d;
            best_t = t;
        }
    }
    let mut t = best_t;
    for _ in 0..8 {
        let p = c.point(t).expect("canonical");
        let dp = c.deriv(t).expect("canonical");
        let dpp = c.second_deriv(t).expect("canonical");
        let g = ((p - z) * dp.conj()).re;
        let gp = dp.norm_sqr() + ((p - z) * dpp.conj()).re;
        if gp.abs() < 1e-30 {
            break;
        }
        let step = g / gp;
        t -= step;
        if step.abs() < 1e-15 {
            break;
        }
    }
    (c.point(t).expect("canonical") - z).norm().min(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit_circle() -> Curve {
        Curve::circle(c(0.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn circle_point_and_tangent() {
        let k = unit_circle();
        assert!((k.point(0.0).unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert!((k.tangent(0.0).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn ellipse_point_and_tangent_at_quarter() {
        let e = Curve::ellipse(2.0).unwrap();
        let t = PI / 2.0;
        assert!((e.point(t).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        // z' = (−2 sin t, cos t) = (−2, 0); unit tangent −1.
        assert!((e.tangent(t).unwrap() - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn ellipse_matches_two_branch_parametrization() {
        // ζ±(s) = r s ± i√(1−s²) under s = cos t.
        let r = 2.0;
        let e = Curve::ellipse(r).unwrap();
        for t in [0.3, 1.2, 2.9] {
            let s = t.cos();
            let upper = c(r * s, (1.0 - s * s).sqrt());
            assert!((e.point(t).unwrap() - upper).norm() < 1e-14);
            let lower = c(r * s, -(1.0 - s * s).sqrt());
            assert!((e.point(TAU - t).unwrap() - lower).norm() < 1e-14);
        }
    }

    #[test]
    fn arc_lengths() {
        assert!((unit_circle().arc_length().unwrap() - TAU).abs() < 1e-15);
        // Ellipse{1} is the unit circle.
        assert!((Curve::ellipse(1.0).unwrap().arc_length().unwrap() - TAU).abs() < 1e-12);
        assert!(matches!(
            Curve::wedge(0.4).unwrap().arc_length(),
            Err(Error::UnboundedCurve)
        ));
    }

    #[test]
    fn capacities() {
        assert_eq!(unit_circle().analytic_capacity().unwrap(), 1.0);
        assert_eq!(
            Curve::ellipse(2.0).unwrap().analytic_capacity().unwrap(),
            1.5
        );
        let w = Curve::wedge(PI / 4.0).unwrap();
        assert!((w.analytic_capacity().unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn capacity_report_circle_equality() {
        let rep = capacity_inequalities(&unit_circle()).unwrap();
        assert!(rep.holds_2pi && rep.holds_ab);
        assert!(rep.equality_2pi && rep.equality_ab);
        assert!(rep.isoperimetric_margin.abs() < 1e-12);
    }

    #[test]
    fn capacity_report_ellipse_strict() {
        let rep = capacity_inequalities(&Curve::ellipse(2.0).unwrap()).unwrap();
        assert!(rep.holds_2pi && rep.holds_ab);
        assert!(!rep.equality_2pi && !rep.equality_ab);
        // σ = 8E(√3/2) > 2π·1.5.
        assert!(rep.sigma > TAU * 1.5 + 0.2);
    }

    #[test]
    fn capacity_report_near_circle_margin_small() {
        let rep = capacity_inequalities(&Curve::ellipse(1.0001).unwrap()).unwrap();
        assert!(rep.isoperimetric_margin > 0.0);
        assert!(rep.isoperimetric_margin < 1e-3);
    }

    #[test]
    fn distance_ellipse() {
        let e = Curve::ellipse(2.0).unwrap();
        assert!((e.distance(c(0.0, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!((e.distance(c(3.0, 0.0)).unwrap() - 1.0).abs() < 1e-12);
        assert!(e.distance(c(2.0, 0.0)).unwrap() < 1e-12);
    }

    #[test]
    fn wedge_distance() {
        let w = Curve::wedge(PI / 4.0).unwrap();
        // Point on the lower ray.
        let p = c(1.0, -1.0) / 2f64.sqrt();
        assert!(w.distance(p).unwrap() < 1e-15);
        // Origin is the corner.
        assert!(w.distance(c(0.0, 0.0)).unwrap() < 1e-15);
    }

    #[test]
    fn pushforward_identity_is_exact() {
        let e = unit_circle();
        let img = e.pushforward(&MoebiusMap::identity(), 64).unwrap();
        for j in 0..64 {
            let t = j as f64 * TAU / 64.0;
            let a = img.point(t).unwrap();
            let b = e.point(t).unwrap();
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn pushforward_disc_automorphism_preserves_unit_circle() {
        let m = MoebiusMap::disc_automorphism(c(0.4, 0.2)).unwrap();
        let img = unit_circle().pushforward(&m, 128).unwrap();
        if let Curve::Sampled(s) = &img {
            for p in s.points() {
                assert!((p.norm() - 1.0).abs() < 1e-12);
            }
        } else {
            panic!("pushforward must be sampled");
        }
    }

    #[test]
    fn pushforward_inversion_flips_orientation() {
        // Pole of 1/z at 0 lies inside the ellipse: orientation reverses.
        let e = Curve::ellipse(2.0).unwrap();
        let img = e.pushforward(&MoebiusMap::inversion(), 256).unwrap();
        assert_eq!(img.orientation().unwrap(), -1.0);
        // 0 = 1/∞ lies in the bounded component of the image; the reversed
        // orientation makes the winding number −1 there.
        let w = img.winding_number(c(0.0, 0.0)).unwrap();
        assert!((w + 1.0).abs() < 1e-8);
    }

    #[test]
    fn pushforward_rejects_pole_on_curve() {
        let m = MoebiusMap::new(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)).unwrap();
        // Pole at z = 1 lies on the unit circle.
        assert!(matches!(
            unit_circle().pushforward(&m, 64),
            Err(Error::PoleOnCurve)
        ));
    }

    #[test]
    fn sampled_off_node_parameter_rejected() {
        let e = Curve::ellipse(1.5).unwrap().pushforward(&MoebiusMap::identity(), 32).unwrap();
        assert!(e.point(0.0).is_ok());
        assert!(matches!(
            e.point(0.1),
            Err(Error::UnsupportedParameter(_))
        ));
    }

    #[test]
    fn invalid_families_rejected() {
        assert!(Curve::circle(c(0.0, 0.0), 0.0).is_err());
        assert!(Curve::ellipse(0.9).is_err());
        assert!(Curve::wedge(0.0).is_err());
        assert!(Curve::wedge(PI / 2.0).is_err());
    }
}
