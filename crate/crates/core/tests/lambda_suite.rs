//! Λ-function invariants: circle rigidity, the ≥ 1 bound, boundary
//! continuity on smooth curves, corner behavior on the wedge, Möbius
//! invariance, and the ellipse trend observations.

mod common;

use cauchy_szego_core::geometry::{quadrature, Curve, MoebiusMap, ScalarPoint};
use cauchy_szego_core::lambda::{
    lambda, lambda_ellipse_at_infinity, lambda_ellipse_at_origin, lambda_pullback, lambda_wedge,
    LambdaRegime,
};
use common::SplitMix64;
use num_complex::Complex64;

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// 100 sphere-covering probe points for a circle: shells inside and outside,
/// a far-field triple, and ∞.
fn circle_grid(center: Complex64, radius: f64) -> Vec<ScalarPoint> {
    let mut grid = Vec::with_capacity(100);
    let shells = [0.2, 0.45, 0.7, 0.9, 1.15, 1.5, 3.0, 40.0];
    for shell in shells {
        for j in 0..12 {
            let ang = j as f64 * core::f64::consts::TAU / 12.0 + 0.05;
            grid.push(ScalarPoint::Finite(
                center + shell * radius * Complex64::new(ang.cos(), ang.sin()),
            ));
        }
    }
    for j in 0..3 {
        let ang = 2.1 * j as f64;
        grid.push(ScalarPoint::Finite(
            center + 1e6 * radius * Complex64::new(ang.cos(), ang.sin()),
        ));
    }
    grid.push(ScalarPoint::Infinity);
    grid
}

#[test]
fn circle_rigidity_grid() {
    for center in [c64(0.0, 0.0), c64(1.0, 1.0)] {
        for radius in [0.5, 1.0, 3.0] {
            let k = Curve::circle(center, radius).unwrap();
            let mut worst = 0.0_f64;
            for z in circle_grid(center, radius) {
                let lv = lambda(&k, z, None).unwrap();
                worst = worst.max((lv.value - 1.0).abs());
            }
            assert!(worst < 1e-10, "center {center} radius {radius}: {worst:e}");
        }
    }
}

#[test]
fn lambda_at_least_one_everywhere_computed() {
    let curves = [
        Curve::circle(c64(0.5, 0.0), 1.5).unwrap(),
        Curve::ellipse(1.3).unwrap(),
        Curve::ellipse(3.0).unwrap(),
    ];
    let mut rng = SplitMix64::new(42);
    for c in &curves {
        for _ in 0..30 {
            let z = rng.complex_in_box(6.0, 6.0);
            if c.distance(z).unwrap() < 0.1 {
                continue;
            }
            let lv = lambda(c, ScalarPoint::Finite(z), None).unwrap();
            assert!(
                lv.value >= 1.0 - lv.accuracy - 1e-12,
                "Λ = {} (acc {}) at {z}",
                lv.value,
                lv.accuracy
            );
        }
        let lv = lambda(c, ScalarPoint::Infinity, None).unwrap();
        assert!(lv.value >= 1.0 - 1e-12);
    }
}

#[test]
fn boundary_continuity_on_smooth_curve() {
    // Λ decreases monotonically toward 1 as z → E₂ along normals, and
    // |Λ − 1| < 0.05 at distance 0.01.
    let e = Curve::ellipse(2.0).unwrap();
    let rule = quadrature(&e, 4096).unwrap();
    for t in [0.0, 0.7, 1.9, 3.6] {
        let p = e.point(t).unwrap();
        let tangent = e.tangent(t).unwrap();
        let normal = tangent * Complex64::new(0.0, -1.0); // outward for ccw
        for dir in [1.0, -1.0] {
            let mut prev = f64::INFINITY;
            for delta in [0.1, 0.03, 0.01] {
                let z = p + dir * delta * normal;
                let lv = lambda(&e, ScalarPoint::Finite(z), Some(&rule)).unwrap();
                assert!(
                    lv.value < prev + 1e-12,
                    "t={t} dir={dir} δ={delta}: {} after {prev}",
                    lv.value
                );
                assert!(lv.value >= 1.0 - 1e-9);
                prev = lv.value;
                if delta == 0.01 {
                    assert!(
                        (lv.value - 1.0).abs() < 0.05,
                        "t={t} dir={dir}: Λ(δ=0.01) = {}",
                        lv.value
                    );
                }
            }
        }
    }
}

#[test]
fn wedge_corner_discontinuity() {
    let theta = core::f64::consts::PI / 8.0;
    let w = Curve::wedge(theta).unwrap();
    // Along the bisector ray the value is r-independent and strictly > 1,
    // however close to the corner; the corner itself is 1 by definition.
    let mut values = Vec::new();
    for r in [1e-6, 1e-3, 1.0, 1e3] {
        let lv = lambda(&w, ScalarPoint::Finite(c64(r, 0.0)), None).unwrap();
        values.push(lv.value);
        assert!(lv.value > 1.0 + 1e-3, "r={r}: {}", lv.value);
    }
    for v in &values[1..] {
        assert!((v - values[0]).abs() < 1e-13);
    }
    // Normal approach to a smooth boundary point tends to 1.
    let p = 2.0 * Complex64::new(0.0, -theta).exp();
    let inward = Complex64::new(0.0, 1.0) * Complex64::new(0.0, -theta).exp();
    let mut prev = f64::INFINITY;
    for delta in [0.3, 0.1, 0.01, 1e-4] {
        let lv = lambda(&w, ScalarPoint::Finite(p + delta * inward), None).unwrap();
        assert!(lv.value < prev);
        prev = lv.value;
    }
    assert!((prev - 1.0).abs() < 1e-3);
}

#[test]
fn ellipse_origin_dominates_infinity() {
    // The paper's Figure-2 observation, tested as a regression expectation.
    for r in [1.5, 2.0, 3.0] {
        let l0 = lambda_ellipse_at_origin(r).unwrap();
        let linf = lambda_ellipse_at_infinity(r).unwrap();
        assert!(l0 > linf, "r={r}: Λ(0) = {l0} vs Λ(∞) = {linf}");
    }
}

#[test]
fn infinity_value_is_capacity_ratio() {
    // Λ(γ,∞)² = σ/(2πκ) at 1e-10 for every capacity-known bounded curve.
    let curves = [
        Curve::circle(c64(0.0, 0.0), 1.0).unwrap(),
        Curve::circle(c64(1.0, -2.0), 0.7).unwrap(),
        Curve::ellipse(1.5).unwrap(),
        Curve::ellipse(2.0).unwrap(),
        Curve::ellipse(4.0).unwrap(),
    ];
    for c in &curves {
        let lv = lambda(c, ScalarPoint::Infinity, None).unwrap();
        let sigma = c.arc_length().unwrap();
        let kappa = c.analytic_capacity().unwrap();
        let expected = sigma / (core::f64::consts::TAU * kappa);
        assert!(
            (lv.value * lv.value - expected).abs() < 1e-10,
            "{:?}",
            (lv.value, expected)
        );
    }
}

#[test]
fn mobius_invariance_spot_checks() {
    // Λ(γ, z) = Λ(Φγ, Φz) with the image evaluated by the sampled pipeline.
    let e = Curve::ellipse(2.0).unwrap();
    let m = MoebiusMap::new(c64(1.0, 0.1), c64(0.2, 0.0), c64(1.0, 0.0), c64(-4.0, 0.5)).unwrap();
    for z in [c64(0.0, 0.0), c64(0.8, 0.2), c64(3.0, 1.0)] {
        let direct = lambda(&e, ScalarPoint::Finite(z), None).unwrap();
        let pulled = lambda_pullback(&m, &e, ScalarPoint::Finite(z), 256).unwrap();
        assert!(
            (direct.value - pulled.value).abs() < 1e-5,
            "z={z}: {} vs {}",
            direct.value,
            pulled.value
        );
    }
}

#[test]
fn wedge_to_lens_capacity_consistency() {
    // B(θ)² = σ_lens/(2π κ_lens) with σ = 4θ csc θ, κ = π/(2(π−θ)).
    for theta in [core::f64::consts::PI / 8.0, core::f64::consts::PI / 4.0, 0.6] {
        let b = lambda_wedge(theta, 0.0).unwrap().value;
        let sigma = 4.0 * theta / theta.sin();
        let kappa = core::f64::consts::PI / (2.0 * (core::f64::consts::PI - theta));
        let expected = sigma / (core::f64::consts::TAU * kappa);
        assert!(
            (b * b - expected).abs() < 1e-12,
            "θ={theta}: {} vs {expected}",
            b * b
        );
    }
}

#[test]
fn near_circle_bounds_expansion_regime() {
    // For E_{1.01} the lower bound sits at 1 + (1/32)(r−1)² within 10%.
    use cauchy_szego_core::lambda::cauchy_norm_bounds;
    let e = Curve::ellipse(1.01).unwrap();
    let grid = [
        ScalarPoint::Finite(c64(0.0, 0.0)),
        ScalarPoint::Finite(c64(0.3, 0.2)),
        ScalarPoint::Finite(c64(4.0, 0.0)),
    ];
    let rep = cauchy_norm_bounds(&e, &grid).unwrap();
    let predicted = (0.01_f64).powi(2) / 32.0;
    let excess = rep.lower - 1.0;
    assert!(
        (excess - predicted).abs() < 0.1 * predicted,
        "lower − 1 = {excess:e} vs (r−1)²/32 = {predicted:e}"
    );
}

#[test]
fn on_curve_collar_classification() {
    let e = Curve::ellipse(2.0).unwrap();
    let p = e.point(0.9).unwrap();
    let lv = lambda(&e, ScalarPoint::Finite(p), None).unwrap();
    assert_eq!(lv.regime, LambdaRegime::OnCurve);
    assert_eq!(lv.value, 1.0);
}
