//! The `verify` subcommand: runs every invariant suite with machine-readable
//! margins. `quick` stays at n ≤ 256; `full` adds the n = 512…1024 operator
//! checks and the near-boundary continuity sweep.

use cauchy_szego_core::geometry::{
    capacity_inequalities, quadrature, Curve, MoebiusMap, ScalarPoint,
};
use cauchy_szego_core::kernels::{
    cauchy_kernel, szego_boundary_kernel, szego_diag, wedge_aux_integral,
    wedge_cauchy_norm_sq, DomainSide,
};
use cauchy_szego_core::lambda::{
    asymptotic_check, cauchy_norm_bounds, default_grid, lambda, lambda_ellipse_at_infinity,
    lambda_ellipse_at_origin, lambda_pullback, lambda_wedge,
};
use cauchy_szego_core::operator::{
    berezin_a, berezin_a2, operator_norm, spectrum_a, szego_system, szego_via_kst,
};
use cauchy_szego_core::specfun::{
    ellint_e, ellint_k, ellint_pi, inverse_nome, nome, theta, theta1_prime_at0, EllipticModulus,
    Nome, ThetaIndex,
};
use num_complex::Complex64;
use std::fmt::Write as _;

const PI: f64 = std::f64::consts::PI;
const TAU: f64 = std::f64::consts::TAU;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

pub struct Check {
    pub name: &'static str,
    /// Observed worst deviation (smaller is better).
    pub observed: f64,
    /// The deviation bound the check enforces.
    pub tolerance: f64,
    pub pass: bool,
}

fn check(name: &'static str, observed: f64, tolerance: f64) -> Check {
    Check {
        name,
        observed,
        tolerance,
        pass: observed < tolerance && observed.is_finite(),
    }
}

fn c64(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Small deterministic generator (SplitMix64) for sample geometry.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        ((z ^ (z >> 31)) >> 11) as f64 / (1u64 << 53) as f64
    }

    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next()
    }
}

/// Simpson quadrature oracle, independent of the AGM/Carlson paths.
fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for j in 1..n {
        let w = if j % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + j as f64 * h);
    }
    acc * h / 3.0
}

#[allow(clippy::vec_init_then_push)]
pub fn run(level: Level) -> Vec<Check> {
    let mut checks = Vec::new();

    checks.push(specfun_nome_roundtrip());
    checks.push(specfun_jacobi_identity());
    checks.push(specfun_two_theta_identities());
    checks.push(specfun_pi_reduces_to_k());
    checks.push(specfun_quadrature_oracles());
    checks.push(geometry_mobius_roundtrip());
    checks.push(geometry_sqrt_deriv_chain());
    checks.push(geometry_arc_length());
    checks.push(geometry_capacity_margins());
    checks.push(geometry_pushforward_winding());
    checks.push(kernels_cauchy_mobius_law());
    checks.push(kernels_szego_monotonicity());
    checks.push(kernels_l2_distance(256));
    checks.push(kernels_szego_reproducing(256));
    checks.push(lambda_circle_rigidity(256));
    checks.push(lambda_at_least_one());
    checks.push(lambda_wedge_formula());
    checks.push(lambda_wedge_aux_oracle());
    checks.push(lambda_infinity_identity());
    checks.push(lambda_ellipse_trend());
    checks.push(lambda_asymptotic_fit());
    checks.push(operator_circle_reproduces());
    checks.push(operator_kerzman_stein_circle());
    checks.push(operator_skew_residual());
    checks.push(operator_kst_szego(256));
    let (b2, b1) = operator_berezin(256);
    checks.push(b2);
    checks.push(b1);
    checks.push(operator_spectrum_pairing(256));
    checks.push(operator_bolt_ratio(256));

    if level == Level::Full {
        checks.push(operator_refinement());
        checks.push(operator_norm_pairing(512));
        checks.push(operator_sandwich(512));
        checks.push(kernels_adjoint_relation(512));
        checks.push(lambda_mobius_invariance(512));
        checks.push(lambda_boundary_continuity());
    }
    checks
}

pub fn render_json(level: Level, checks: &[Check]) -> String {
    let failed = checks.iter().filter(|c| !c.pass).count();
    let mut out = String::from("{");
    let _ = write!(
        out,
        "\"level\":\"{}\",\"passed\":{},\"failed\":{failed},\"checks\":[",
        if level == Level::Quick { "quick" } else { "full" },
        checks.len() - failed
    );
    for (i, c) in checks.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(
            out,
            "{{\"name\":\"{}\",\"pass\":{},\"observed\":{:.16e},\"tolerance\":{:.16e},\"margin\":{:.16e}}}",
            c.name, c.pass, c.observed, c.tolerance, c.tolerance - c.observed
        );
    }
    out.push_str("]}\n");
    out
}

fn specfun_nome_roundtrip() -> Check {
    let mut worst = 0.0_f64;
    for kv in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9] {
        let m = EllipticModulus::new(kv).unwrap();
        worst = worst.max((inverse_nome(nome(m)).get() - kv).abs());
    }
    check("specfun-nome-roundtrip", worst, 1e-12)
}

fn specfun_jacobi_identity() -> Check {
    let mut worst = 0.0_f64;
    for qv in [0.01, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8] {
        let q = Nome::new(qv).unwrap();
        let lhs = theta1_prime_at0(q);
        let rhs = theta(ThetaIndex::Two, c64(0.0, 0.0), q).re
            * theta(ThetaIndex::Three, c64(0.0, 0.0), q).re
            * theta(ThetaIndex::Four, c64(0.0, 0.0), q).re;
        worst = worst.max(((lhs - rhs) / rhs).abs());
    }
    check("specfun-jacobi-identity", worst, 1e-12)
}

fn specfun_two_theta_identities() -> Check {
    let mut worst = 0.0_f64;
    for kv in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let m = EllipticModulus::new(kv).unwrap();
        let qk = nome(m);
        let t2 = theta(ThetaIndex::Two, c64(0.0, 0.0), qk).re;
        let t3 = theta(ThetaIndex::Three, c64(0.0, 0.0), qk).re;
        worst = worst.max(((2.0 * ellint_k(m) / PI - t3 * t3) / (t3 * t3)).abs());
        worst = worst.max(((kv.sqrt() - t2 / t3) / kv.sqrt()).abs());
    }
    check("specfun-two-theta-identities", worst, 1e-10)
}

fn specfun_pi_reduces_to_k() -> Check {
    let mut worst = 0.0_f64;
    for kv in [0.1, 0.4, 0.7, 0.9] {
        let m = EllipticModulus::new(kv).unwrap();
        worst = worst.max((ellint_pi(0.0, m).unwrap() - ellint_k(m)).abs());
    }
    check("specfun-pi-reduces-to-k", worst, 1e-14)
}

fn specfun_quadrature_oracles() -> Check {
    let mut worst = 0.0_f64;
    for kv in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let m = EllipticModulus::new(kv).unwrap();
        let okv = simpson(
            &|th: f64| 1.0 / (1.0 - kv * kv * th.sin().powi(2)).sqrt(),
            0.0,
            PI / 2.0,
            4096,
        );
        let oev = simpson(
            &|th: f64| (1.0 - kv * kv * th.sin().powi(2)).sqrt(),
            0.0,
            PI / 2.0,
            4096,
        );
        let n = -1.5 * kv;
        let opv = simpson(
            &|th: f64| {
                let s2 = th.sin().powi(2);
                1.0 / ((1.0 - n * s2) * (1.0 - kv * kv * s2).sqrt())
            },
            0.0,
            PI / 2.0,
            4096,
        );
        worst = worst.max(((ellint_k(m) - okv) / okv).abs());
        worst = worst.max(((ellint_e(kv).unwrap() - oev) / oev).abs());
        worst = worst.max(((ellint_pi(n, m).unwrap() - opv) / opv).abs());
    }
    check("specfun-quadrature-oracles", worst, 1e-10)
}

fn geometry_mobius_roundtrip() -> Check {
    let mut rng = Rng(17);
    let mut worst = 0.0_f64;
    for _ in 0..100 {
        let m = MoebiusMap::new(
            c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
            c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
            c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
            c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
        );
        let m = match m {
            Ok(m) => m,
            Err(_) => continue,
        };
        let z = c64(rng.range(-4.0, 4.0), rng.range(-4.0, 4.0));
        if let ScalarPoint::Finite(back) = m.apply(m.inverse().apply(ScalarPoint::Finite(z))) {
            worst = worst.max((back - z).norm() / (1.0 + z.norm()));
        }
    }
    check("geometry-mobius-roundtrip", worst, 1e-10)
}

fn geometry_sqrt_deriv_chain() -> Check {
    let mut rng = Rng(23);
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let mk = |rng: &mut Rng| {
            MoebiusMap::new(
                c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
                c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
                c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
                c64(rng.range(-2.0, 2.0), rng.range(-2.0, 2.0)),
            )
        };
        let (phi, psi) = match (mk(&mut rng), mk(&mut rng)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue,
        };
        let z = c64(rng.range(-3.0, 3.0), rng.range(-3.0, 3.0));
        let psi_z = match psi.apply(ScalarPoint::Finite(z)) {
            ScalarPoint::Finite(w) => w,
            _ => continue,
        };
        let comp = phi.compose(&psi);
        if let (Ok(s), Ok(d1), Ok(d2)) = (comp.sqrt_deriv(z), phi.deriv(psi_z), psi.deriv(z)) {
            let lhs = s * s;
            let rhs = d1 * d2;
            worst = worst.max((lhs - rhs).norm() / (1.0 + rhs.norm()));
        }
    }
    check("geometry-sqrt-deriv-chain", worst, 1e-12)
}

fn geometry_arc_length() -> Check {
    let mut worst = (Curve::ellipse(1.0).unwrap().arc_length().unwrap() - TAU).abs();
    let e = Curve::ellipse(2.0).unwrap();
    let closed = e.arc_length().unwrap();
    let sampled = quadrature(&e, 512).unwrap().total_weight();
    worst = worst.max((closed - sampled).abs());
    check("geometry-arc-length", worst, 1e-10)
}

fn geometry_capacity_margins() -> Check {
    let mut worst_violation = 0.0_f64;
    for c in [
        Curve::circle(c64(0.0, 0.0), 1.0).unwrap(),
        Curve::ellipse(1.0001).unwrap(),
        Curve::ellipse(2.0).unwrap(),
        Curve::ellipse(5.0).unwrap(),
    ] {
        let rep = capacity_inequalities(&c).unwrap();
        worst_violation = worst_violation
            .max((-rep.isoperimetric_margin).max(0.0))
            .max((-rep.ahlfors_beurling_margin).max(0.0));
    }
    check("geometry-capacity-margins", worst_violation, 1e-12)
}

fn geometry_pushforward_winding() -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let outside = MoebiusMap::new(c64(1.0, 0.0), c64(0.0, 0.0), c64(1.0, 0.0), c64(-5.0, 0.0))
        .unwrap();
    let keep = e.pushforward(&outside, 256).unwrap();
    let flip = e.pushforward(&MoebiusMap::inversion(), 256).unwrap();
    let mut worst = (keep.orientation().unwrap() - 1.0).abs();
    worst = worst.max((flip.orientation().unwrap() + 1.0).abs());
    worst = worst.max((flip.winding_number(c64(0.0, 0.0)).unwrap() + 1.0).abs());
    check("geometry-pushforward-winding", worst, 1e-8)
}

fn kernels_cauchy_mobius_law() -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let m = MoebiusMap::new(c64(1.0, 0.1), c64(0.2, 0.0), c64(1.0, 0.0), c64(-4.0, 0.5)).unwrap();
    let n = 256;
    let image = e.pushforward(&m, n).unwrap();
    let mut rng = Rng(31);
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let z = c64(rng.range(-1.2, 1.2), rng.range(-0.6, 0.6));
        let j = (rng.range(0.0, n as f64) as usize) % n;
        let t = j as f64 * TAU / n as f64;
        let zeta = e.point(t).unwrap();
        let lhs = cauchy_kernel(&e, DomainSide::Interior, z, t).unwrap();
        let phi_z = m.apply(ScalarPoint::Finite(z)).finite().unwrap();
        let rhs = m.sqrt_deriv(z).unwrap()
            * cauchy_kernel(&image, DomainSide::Interior, phi_z, t).unwrap()
            * m.sqrt_deriv(zeta).unwrap().conj();
        worst = worst.max((lhs - rhs).norm() / (1.0 + lhs.norm()));
    }
    check("kernels-cauchy-mobius-law", worst, 1e-12)
}

fn kernels_szego_monotonicity() -> Check {
    let disc = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
    let e2 = Curve::ellipse(2.0).unwrap();
    let z = ScalarPoint::Finite(c64(0.0, 0.0));
    let s_disc = szego_diag(&disc, DomainSide::Interior, z).unwrap();
    let s_e2 = szego_diag(&e2, DomainSide::Interior, z).unwrap();
    // Violation is positive if monotonicity fails or positivity fails.
    let violation = (s_e2 - s_disc).max(-s_e2).max(0.0);
    check("kernels-szego-monotonicity", violation, 1e-15)
}

fn kernels_l2_distance(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let rule = quadrature(&e, n).unwrap();
    let z = c64(0.0, 0.0);
    let mut dist2 = 0.0;
    for (t, w) in rule.iter() {
        let ck = cauchy_kernel(&e, DomainSide::Interior, z, t).unwrap();
        let sk = szego_boundary_kernel(&e, DomainSide::Interior, z, t).unwrap();
        dist2 += w * (ck - sk).norm_sqr();
    }
    let s00 = szego_diag(&e, DomainSide::Interior, ScalarPoint::Finite(z)).unwrap();
    let lam = lambda_ellipse_at_origin(2.0).unwrap();
    check(
        "kernels-l2-distance-identity",
        (dist2 - s00 * (lam * lam - 1.0)).abs(),
        1e-8,
    )
}

fn kernels_szego_reproducing(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let rule = quadrature(&e, n).unwrap();
    let z = c64(0.3, 0.1);
    let mut acc = Complex64::new(0.0, 0.0);
    for (t, w) in rule.iter() {
        let zeta = e.point(t).unwrap();
        let s = szego_boundary_kernel(&e, DomainSide::Interior, z, t).unwrap();
        acc += w * s * zeta * zeta;
    }
    check("kernels-szego-reproducing", (acc - z * z).norm(), 1e-8)
}

fn lambda_circle_rigidity(n: usize) -> Check {
    let mut worst = 0.0_f64;
    for (center, radius) in [(c64(0.0, 0.0), 1.0), (c64(1.0, 1.0), 0.5)] {
        let k = Curve::circle(center, radius).unwrap();
        let rule = quadrature(&k, n).unwrap();
        for shell in [0.3, 0.7, 1.4, 5.0, 1e6] {
            for j in 0..8 {
                let ang = j as f64 * TAU / 8.0 + 0.1;
                let z = center + shell * radius * Complex64::new(ang.cos(), ang.sin());
                let lv = lambda(&k, ScalarPoint::Finite(z), Some(&rule)).unwrap();
                worst = worst.max((lv.value - 1.0).abs());
            }
        }
        let lv = lambda(&k, ScalarPoint::Infinity, None).unwrap();
        worst = worst.max((lv.value - 1.0).abs());
    }
    check("lambda-circle-rigidity", worst, 1e-10)
}

fn lambda_at_least_one() -> Check {
    let mut rng = Rng(47);
    let mut violation = 0.0_f64;
    for c in [Curve::ellipse(1.3).unwrap(), Curve::ellipse(3.0).unwrap()] {
        for _ in 0..20 {
            let z = c64(rng.range(-6.0, 6.0), rng.range(-6.0, 6.0));
            if c.distance(z).unwrap() < 0.1 {
                continue;
            }
            let lv = lambda(&c, ScalarPoint::Finite(z), None).unwrap();
            violation = violation.max(1.0 - lv.value - lv.accuracy);
        }
    }
    check("lambda-at-least-one", violation.max(0.0), 1e-12)
}

fn lambda_wedge_formula() -> Check {
    let mut rng = Rng(53);
    let mut worst = 0.0_f64;
    for _ in 0..50 {
        let theta = rng.range(0.05, PI / 2.0 - 0.05);
        let phi = rng.range(-theta + 1e-3, TAU - theta - 1e-3);
        if (phi.abs() - theta).abs() < 1e-2 {
            continue;
        }
        let r = rng.range(0.2, 4.0);
        let w = Curve::wedge(theta).unwrap();
        let z = r * Complex64::new(phi.cos(), phi.sin());
        let side = if phi.abs() < theta {
            DomainSide::Interior
        } else {
            DomainSide::Exterior
        };
        let norm2 = wedge_cauchy_norm_sq(theta, r, phi).unwrap();
        let diag = szego_diag(&w, side, ScalarPoint::Finite(z)).unwrap();
        let closed = lambda_wedge(theta, phi).unwrap().value;
        worst = worst.max(((norm2 / diag).sqrt() - closed).abs());
    }
    check("lambda-wedge-formula", worst, 1e-12)
}

fn lambda_wedge_aux_oracle() -> Check {
    let mut rng = Rng(59);
    let mut worst = 0.0_f64;
    for _ in 0..10 {
        let r = rng.range(0.3, 3.0);
        let alpha = rng.range(0.2, TAU - 0.2);
        let lib = wedge_aux_integral(r, alpha).unwrap();
        // Oracle: Simpson on [0, X] plus the analytic series tail.
        let cut = 2e3 * r;
        let f = |x: f64| {
            let dx = x - r * alpha.cos();
            let dy = r * alpha.sin();
            1.0 / (dx * dx + dy * dy)
        };
        let head = simpson(&f, 0.0, cut, 1 << 17);
        let c = alpha.cos();
        let tail = 1.0 / cut + r * c / (cut * cut)
            + (4.0 * c * c - 1.0) * r * r / (3.0 * cut.powi(3));
        worst = worst.max(((head + tail - lib) / lib).abs());
    }
    check("lambda-wedge-aux-oracle", worst, 1e-8)
}

fn lambda_infinity_identity() -> Check {
    let mut worst = 0.0_f64;
    for c in [
        Curve::circle(c64(0.0, 0.0), 1.0).unwrap(),
        Curve::ellipse(1.5).unwrap(),
        Curve::ellipse(2.0).unwrap(),
        Curve::ellipse(4.0).unwrap(),
    ] {
        let lv = lambda(&c, ScalarPoint::Infinity, None).unwrap();
        let expected = c.arc_length().unwrap() / (TAU * c.analytic_capacity().unwrap());
        worst = worst.max((lv.value * lv.value - expected).abs());
    }
    for theta in [PI / 8.0, PI / 4.0] {
        let b = lambda_wedge(theta, 0.0).unwrap().value;
        let sigma = 4.0 * theta / theta.sin();
        let kappa = PI / (2.0 * (PI - theta));
        worst = worst.max((b * b - sigma / (TAU * kappa)).abs());
    }
    check("lambda-infinity-identity", worst, 1e-10)
}

fn lambda_ellipse_trend() -> Check {
    let mut violation = 0.0_f64;
    for r in [1.5, 2.0, 3.0] {
        let l0 = lambda_ellipse_at_origin(r).unwrap();
        let linf = lambda_ellipse_at_infinity(r).unwrap();
        violation = violation.max(linf - l0);
    }
    check("lambda-ellipse-trend", violation.max(0.0), 1e-15)
}

fn lambda_asymptotic_fit() -> Check {
    let fit = asymptotic_check(&[1.01, 1.02, 1.03, 1.04, 1.05]).unwrap();
    let dev = (fit.origin_c2 - 1.0 / 32.0)
        .abs()
        .max((fit.infinity_c2 - 1.0 / 32.0).abs())
        .max((fit.origin_c3 + 1.0 / 32.0).abs())
        .max((fit.infinity_c3 + 1.0 / 32.0).abs());
    check("lambda-asymptotic-fit", dev, 2.25e-3)
}

fn operator_circle_reproduces() -> Check {
    let k = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
    let c = cauchy_szego_core::operator::discretize_cauchy(&k, DomainSide::Interior, 64).unwrap();
    let mut worst = 0.0_f64;
    for p in 0..=5 {
        let v: Vec<Complex64> = (0..64)
            .map(|j| Complex64::new(0.0, p as f64 * j as f64 * TAU / 64.0).exp())
            .collect();
        let out = c.apply(&v).unwrap();
        for (a, b) in out.iter().zip(&v) {
            worst = worst.max((a - b).norm());
        }
    }
    // Exterior-Hardy data is annihilated.
    let v: Vec<Complex64> = (0..64)
        .map(|j| Complex64::new(0.0, -(j as f64) * TAU / 64.0).exp())
        .collect();
    for a in c.apply(&v).unwrap() {
        worst = worst.max(a.norm());
    }
    check("operator-circle-reproduces", worst, 1e-10)
}

fn operator_kerzman_stein_circle() -> Check {
    let k = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
    let (_, amat) = szego_system(&k, DomainSide::Interior, 128).unwrap();
    let mut worst = 0.0_f64;
    for i in 0..128 {
        for j in 0..128 {
            worst = worst.max(amat.entry(i, j).norm());
        }
    }
    check("operator-kerzman-stein-circle", worst, 1e-10)
}

fn operator_skew_residual() -> Check {
    let e = Curve::ellipse(1.8).unwrap();
    let (_, amat) = szego_system(&e, DomainSide::Interior, 128).unwrap();
    let mut worst = 0.0_f64;
    for i in 0..128 {
        for j in 0..128 {
            worst = worst.max((amat.entry(i, j) + amat.entry(j, i).conj()).norm());
        }
    }
    check("operator-skew-residual", worst, 1e-12)
}

fn operator_kst_szego(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let (cmat, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
    let sol = szego_via_kst(&cmat, &amat, c64(0.0, 0.0)).unwrap();
    let closed = szego_diag(&e, DomainSide::Interior, ScalarPoint::Finite(c64(0.0, 0.0))).unwrap();
    let mut worst = (sol.diag - closed).abs();
    let k = Curve::circle(c64(0.0, 0.0), 1.0).unwrap();
    let (ck, ak) = szego_system(&k, DomainSide::Interior, n).unwrap();
    let disc = szego_via_kst(&ck, &ak, c64(0.0, 0.0)).unwrap();
    worst = worst.max((disc.diag - 1.0 / TAU).abs());
    check("operator-kst-szego", worst, 1e-6)
}

fn operator_berezin(n: usize) -> (Check, Check) {
    let e = Curve::ellipse(2.0).unwrap();
    let (cmat, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
    let rule = quadrature(&e, n).unwrap();
    let mut second = 0.0_f64;
    let mut first = 0.0_f64;
    for z in [c64(0.0, 0.0), c64(0.5, 0.0)] {
        let sol = szego_via_kst(&cmat, &amat, z).unwrap();
        let b2 = berezin_a2(&amat, &sol.vector).unwrap();
        let lv = lambda(&e, ScalarPoint::Finite(z), Some(&rule)).unwrap();
        second = second.max(((1.0 - b2) - lv.value * lv.value).abs());
        first = first.max(berezin_a(&amat, &sol.vector).unwrap().norm());
    }
    (
        check("operator-berezin-second-order", second, 1e-5),
        check("operator-berezin-first-order", first, 1e-10),
    )
}

fn operator_spectrum_pairing(n: usize) -> Check {
    let e = Curve::ellipse(1.1).unwrap();
    let (_, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
    let spec = spectrum_a(&amat, 4).unwrap();
    let worst = (spec[0] - spec[1]).abs().max((spec[2] - spec[3]).abs());
    check("operator-spectrum-pairing", worst, 1e-8)
}

fn operator_bolt_ratio(n: usize) -> Check {
    let mut worst = 0.0_f64;
    for r in [1.05, 1.1, 1.2] {
        let e = Curve::ellipse(r).unwrap();
        let (_, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
        let lam1 = operator_norm(&amat).unwrap();
        let ratio = lam1 * 2.0 * (r + 1.0) / (r - 1.0);
        worst = worst.max((ratio - 1.0).abs());
    }
    check("operator-bolt-ratio", worst, 0.1)
}

fn operator_refinement() -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let mut vals = Vec::new();
    for n in [512usize, 1024] {
        let (cmat, amat) = szego_system(&e, DomainSide::Interior, n).unwrap();
        vals.push((
            operator_norm(&cmat).unwrap(),
            operator_norm(&amat).unwrap(),
            szego_via_kst(&cmat, &amat, c64(0.0, 0.0)).unwrap().diag,
        ));
    }
    let worst = (vals[0].0 - vals[1].0)
        .abs()
        .max((vals[0].1 - vals[1].1).abs())
        .max((vals[0].2 - vals[1].2).abs());
    check("operator-refinement", worst, 1e-6)
}

fn operator_norm_pairing(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let (ci, _) = szego_system(&e, DomainSide::Interior, n).unwrap();
    let (ce, _) = szego_system(&e, DomainSide::Exterior, n).unwrap();
    let worst = (operator_norm(&ci).unwrap() - operator_norm(&ce).unwrap()).abs();
    check("operator-norm-pairing", worst, 1e-6)
}

fn operator_sandwich(n: usize) -> Check {
    let mut violation = 0.0_f64;
    for r in [1.2, 2.0, 3.0] {
        let e = Curve::ellipse(r).unwrap();
        let grid = default_grid(&e).unwrap();
        let bounds = cauchy_norm_bounds(&e, &grid).unwrap();
        let (cmat, _) = szego_system(&e, DomainSide::Interior, n).unwrap();
        let nrm = operator_norm(&cmat).unwrap();
        violation = violation.max(bounds.lower - nrm);
        violation = violation.max(nrm - bounds.upper.unwrap());
    }
    check("operator-sandwich", violation.max(0.0), 1e-6)
}

fn kernels_adjoint_relation(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let z = c64(0.3, 0.0);
    let cmat = cauchy_szego_core::operator::discretize_cauchy(&e, DomainSide::Interior, n)
        .unwrap()
        .symmetrize();
    let w = cmat.weights().to_vec();
    let srow: Vec<Complex64> = (0..n)
        .map(|j| {
            let t = j as f64 * TAU / n as f64;
            w[j].sqrt()
                * szego_boundary_kernel(&e, DomainSide::Interior, z, t)
                    .unwrap()
                    .conj()
        })
        .collect();
    let mut worst = 0.0_f64;
    for (i, wi) in w.iter().enumerate() {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, s) in srow.iter().enumerate() {
            acc += cmat.entry(j, i).conj() * s;
        }
        let t = i as f64 * TAU / n as f64;
        let tangent = e.tangent(t).unwrap();
        let ck = tangent / (Complex64::new(0.0, TAU) * (e.point(t).unwrap() - z));
        worst = worst.max((acc - wi.sqrt() * ck.conj()).norm());
    }
    check("kernels-adjoint-relation", worst, 1e-5)
}

fn lambda_mobius_invariance(n: usize) -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let m = MoebiusMap::new(c64(1.0, 0.1), c64(0.2, 0.0), c64(1.0, 0.0), c64(-4.0, 0.5)).unwrap();
    let mut worst = 0.0_f64;
    for z in [c64(0.0, 0.0), c64(0.8, 0.2), c64(3.0, 1.0)] {
        let direct = lambda(&e, ScalarPoint::Finite(z), None).unwrap();
        let pulled = lambda_pullback(&m, &e, ScalarPoint::Finite(z), n).unwrap();
        worst = worst.max((direct.value - pulled.value).abs());
    }
    check("lambda-mobius-invariance", worst, 1e-6)
}

fn lambda_boundary_continuity() -> Check {
    let e = Curve::ellipse(2.0).unwrap();
    let rule = quadrature(&e, 4096).unwrap();
    let mut worst = 0.0_f64;
    for t in [0.0, 1.9] {
        let p = e.point(t).unwrap();
        let normal = e.tangent(t).unwrap() * Complex64::new(0.0, -1.0);
        for dir in [1.0, -1.0] {
            let mut prev = f64::INFINITY;
            for delta in [0.1, 0.03, 0.01] {
                let z = p + dir * delta * normal;
                let lv = lambda(&e, ScalarPoint::Finite(z), Some(&rule)).unwrap();
                // Monotone decrease toward 1 and closeness at δ = 0.01.
                worst = worst.max(lv.value - prev);
                prev = lv.value;
                if delta == 0.01 {
                    worst = worst.max((lv.value - 1.0).abs());
                }
            }
        }
    }
    check("lambda-boundary-continuity", worst.max(0.0), 0.05)
}
