//! Operator-module integration: brute-force principal-value oracle, the
//! kernel-adjoint relation, refinement convergence, the Bolt small-
//! eccentricity law, and the lower/upper norm sandwich.

mod common;

use cauchy_szego_core::geometry::{quadrature, Curve, ScalarPoint};
use cauchy_szego_core::kernels::{cauchy_norm_sq, szego_boundary_kernel, DomainSide};
use cauchy_szego_core::lambda::{cauchy_norm_bounds, default_grid};
use cauchy_szego_core::operator::{
    berezin_a, berezin_a2, discretize_cauchy, kerzman_stein, operator_norm, spectrum_a,
    szego_system, szego_via_kst,
};
use num_complex::Complex64;

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Brute-force symmetric-excision PV of the Cauchy kernel row on the unit
/// circle against the discrete matrix row. The excised integral is computed
/// by adaptive quadrature and Richardson-extrapolated in the excision
/// half-width (the symmetric excision error is linear).
#[test]
fn pv_matrix_row_matches_symmetric_excision() {
    let n = 64usize;
    let circle = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
    let cmat = discretize_cauchy(&circle, DomainSide::Interior, n).unwrap();
    // Test data: a two-sided trigonometric sample.
    let h = |t: f64| {
        (Complex64::new(0.0, 2.0 * t)).exp() + 0.3 * (Complex64::new(0.0, -t)).exp()
    };
    let values: Vec<Complex64> = (0..n)
        .map(|j| h(j as f64 * core::f64::consts::TAU / n as f64))
        .collect();
    // Discrete PV at node 0 = (C − ½I) h at node 0.
    let out = cmat.apply(&values).unwrap();
    let discrete_pv = out[0] - 0.5 * values[0];
    // Brute force: (1/2πi)∫_{|t| > ε} h(t) z′(t)/(z(t) − 1) dt, Richardson in ε.
    let integrand_re = |t: f64| {
        let z = Complex64::new(0.0, t).exp();
        let zp = Complex64::new(0.0, 1.0) * z;
        ((h(t) * zp / (z - 1.0)) / Complex64::new(0.0, 2.0 * core::f64::consts::PI)).re
    };
    let integrand_im = |t: f64| {
        let z = Complex64::new(0.0, t).exp();
        let zp = Complex64::new(0.0, 1.0) * z;
        ((h(t) * zp / (z - 1.0)) / Complex64::new(0.0, 2.0 * core::f64::consts::PI)).im
    };
    let excised = |eps: f64| {
        let pi = core::f64::consts::PI;
        let re = common::adaptive_simpson(&integrand_re, eps, pi, 1e-12)
            + common::adaptive_simpson(&integrand_re, -pi, -eps, 1e-12);
        let im = common::adaptive_simpson(&integrand_im, eps, pi, 1e-12)
            + common::adaptive_simpson(&integrand_im, -pi, -eps, 1e-12);
        Complex64::new(re, im)
    };
    let eps = 4e-3;
    let brute = 2.0 * excised(eps / 2.0) - excised(eps);
    assert!(
        (discrete_pv - brute).norm() < 1e-6,
        "discrete {discrete_pv} vs brute-force {brute}"
    );
}

#[test]
fn kernel_adjoint_relation() {
    // C*(S(·,z)) = conj(C(z,·)) discretely on E₂ at z = 0.3, n = 512.
    let e = Curve::ellipse(2.0).unwrap();
    let n = 512usize;
    let z = c64(0.3, 0.0);
    let cmat = discretize_cauchy(&e, DomainSide::Interior, n).unwrap().symmetrize();
    let w = cmat.weights().to_vec();
    let tau = core::f64::consts::TAU;
    // Symmetrized samples of ζ ↦ S(ζ, z) = conj(S(z, ζ)).
    let srow: Vec<Complex64> = (0..n)
        .map(|j| {
            let t = j as f64 * tau / n as f64;
            w[j].sqrt()
                * szego_boundary_kernel(&e, DomainSide::Interior, z, t)
                    .unwrap()
                    .conj()
        })
        .collect();
    // Apply the adjoint: (C^H x)_i = Σ_j conj(C[j,i]) x_j.
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for (i, o) in out.iter_mut().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, s) in srow.iter().enumerate() {
            acc += cmat.entry(j, i).conj() * s;
        }
        *o = acc;
    }
    let tangent = |t: f64| {
        let d = e.deriv(t).unwrap();
        d / d.norm()
    };
    let mut residual = 0.0_f64;
    for (i, o) in out.iter().enumerate() {
        let t = i as f64 * tau / n as f64;
        let ck = tangent(t) / (Complex64::new(0.0, tau) * (e.point(t).unwrap() - z));
        let expected = w[i].sqrt() * ck.conj();
        residual = residual.max((o - expected).norm());
    }
    assert!(residual < 1e-5, "max residual {residual:e}");
}

#[test]
fn refinement_stability_of_operator_scalars() {
    // ‖C‖, ‖A‖ and S(0,0) move by less than 1e-6 between n = 512 and 1024.
    let e = Curve::ellipse(2.0).unwrap();
    let mut got = Vec::new();
    for n in [512usize, 1024] {
        let (cmat, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
        let nrm = operator_norm(&cmat).unwrap();
        let anrm = operator_norm(&amat).unwrap();
        let diag = szego_via_kst(&cmat, &amat, c64(0.0, 0.0)).unwrap().diag;
        got.push((nrm, anrm, diag));
    }
    assert!((got[0].0 - got[1].0).abs() < 1e-6, "‖C‖ drifted: {got:?}");
    assert!((got[0].1 - got[1].1).abs() < 1e-6, "‖A‖ drifted: {got:?}");
    assert!((got[0].2 - got[1].2).abs() < 1e-6, "S(0,0) drifted: {got:?}");
}

#[test]
fn bolt_small_eccentricity_law() {
    // λ₁ · 2(r+1)/(r−1) ∈ [0.9, 1.1] for near-circular ellipses.
    for r in [1.05, 1.1, 1.2] {
        let e = Curve::ellipse(r).unwrap();
        let (_, amat) = szego_system(&e, DomainSide::Interior, 256).unwrap();
        let lam1 = operator_norm(&amat).unwrap();
        let ratio = lam1 * 2.0 * (r + 1.0) / (r - 1.0);
        assert!((0.9..=1.1).contains(&ratio), "r={r}: ratio {ratio}");
    }
}

#[test]
fn norm_sandwich_on_ellipses() {
    // grid-sup Λ ≤ ‖C‖ ≤ FKS bound with 1e-6 slack.
    for r in [1.2, 2.0, 3.0] {
        let e = Curve::ellipse(r).unwrap();
        let grid = default_grid(&e).unwrap();
        let bounds = cauchy_norm_bounds(&e, &grid).unwrap();
        let (cmat, _) = szego_system(&e, DomainSide::Interior, 512).unwrap();
        let nrm = operator_norm(&cmat).unwrap();
        let fks = bounds.upper.unwrap();
        assert!(
            bounds.lower <= nrm + 1e-6,
            "r={r}: sup Λ = {} > ‖C‖ = {nrm}",
            bounds.lower
        );
        assert!(nrm <= fks + 1e-6, "r={r}: ‖C‖ = {nrm} > FKS = {fks}");
    }
}

#[test]
fn berezin_identity_tracks_lambda() {
    // 1 − ⟨A²s_z, s_z⟩ = Λ(γ,z)²; first-order Berezin vanishes.
    let e = Curve::ellipse(2.0).unwrap();
    let n = 512usize;
    let (cmat, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
    let rule = quadrature(&e, n).unwrap();
    for z in [c64(0.0, 0.0), c64(0.5, 0.0), c64(1.0, 0.3)] {
        let sol = szego_via_kst(&cmat, &amat, z).unwrap();
        let b1 = berezin_a(&amat, &sol.vector).unwrap();
        assert!(b1.norm() < 1e-10, "z={z}: ⟨As,s⟩ = {b1}");
        let b2 = berezin_a2(&amat, &sol.vector).unwrap();
        let lam2_berezin = 1.0 - b2;
        let norm2 = cauchy_norm_sq(&e, z, &rule).unwrap().value;
        let diag = cauchy_szego_core::kernels::szego_diag(
            &e,
            DomainSide::Interior,
            ScalarPoint::Finite(z),
        )
        .unwrap();
        let lam2 = norm2 / diag;
        assert!(
            (lam2_berezin - lam2).abs() < 1e-5,
            "z={z}: berezin {lam2_berezin} vs direct {lam2}"
        );
    }
}

#[test]
fn interior_and_exterior_norms_agree() {
    let e = Curve::ellipse(2.0).unwrap();
    let (ci, _) = szego_system(&e, DomainSide::Interior, 512).unwrap();
    let (ce, _) = szego_system(&e, DomainSide::Exterior, 512).unwrap();
    let ni = operator_norm(&ci).unwrap();
    let ne = operator_norm(&ce).unwrap();
    assert!((ni - ne).abs() < 1e-6, "interior {ni} vs exterior {ne}");
}

#[test]
fn spectrum_multiplicity_and_norm_identity() {
    let e = Curve::ellipse(1.1).unwrap();
    let (cmat, amat) = szego_system(&e, DomainSide::Interior, 256).unwrap();
    let spec = spectrum_a(&amat, 4).unwrap();
    assert!((spec[0] - spec[1]).abs() < 1e-8, "λ₁ pair split: {spec:?}");
    assert!((spec[2] - spec[3]).abs() < 1e-8, "λ₂ pair split: {spec:?}");
    let nrm = operator_norm(&cmat).unwrap();
    let lam1_from_norm = (nrm * nrm - 1.0).max(0.0).sqrt();
    assert!(
        (spec[0] - lam1_from_norm).abs() < 1e-6,
        "λ₁ = {} vs √(‖C‖²−1) = {lam1_from_norm}",
        spec[0]
    );
}

#[test]
fn kst_matches_theta_closed_form_at_center() {
    // S(0,0) on E₂: KST at n = 256 against the theta closed form.
    let e = Curve::ellipse(2.0).unwrap();
    let (cmat, amat) = szego_system(&e, DomainSide::Interior, 256).unwrap();
    let sol = szego_via_kst(&cmat, &amat, c64(0.0, 0.0)).unwrap();
    let closed = cauchy_szego_core::kernels::szego_diag(
        &e,
        DomainSide::Interior,
        ScalarPoint::Finite(c64(0.0, 0.0)),
    )
    .unwrap();
    assert!((sol.diag - closed).abs() < 1e-6, "{} vs {closed}", sol.diag);
}

#[test]
fn bolt_norm_estimate_at_small_eccentricity() {
    // ‖A‖ ≈ (r−1)/(2(r+1)) within 5% at r = 1.1.
    let e = Curve::ellipse(1.1).unwrap();
    let c = discretize_cauchy(&e, DomainSide::Interior, 256).unwrap().symmetrize();
    let a = kerzman_stein(&c).unwrap();
    let anrm = operator_norm(&a).unwrap();
    let bolt = 0.1 / (2.0 * 2.1);
    assert!(
        (anrm - bolt).abs() < 0.05 * bolt,
        "‖A‖ = {anrm} vs Bolt {bolt}"
    );
}
