//! Complete elliptic integrals.
//!
//! `K` and `E` run the arithmetic-geometric mean, which converges
//! quadratically. `Π` goes through the Carlson symmetric forms `R_F` and
//! `R_J`; these stay accurate for the negative characteristics `n = 1 - r²`
//! that the ellipse formulas feed in.

#[allow(unused_imports)]
use num_traits::Float;

use super::EllipticModulus;
use crate::error::{Error, Result};

const AGM_MAX_ITER: usize = 64;
/// Duplication stops once the spread is below this; the tail series then
/// carries a relative error of order `CARLSON_ERRTOL^6`.
const CARLSON_ERRTOL: f64 = 1e-4;

/// Complete elliptic integral of the first kind,
/// `K(k) = ∫₀¹ dt / √((1−t²)(1−k²t²))`.
pub fn ellint_k(k: EllipticModulus) -> f64 {
    let k = k.get();
    let mut a = 1.0_f64;
    let mut b = (1.0 - k * k).sqrt();
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
    }
    core::f64::consts::FRAC_PI_2 / a
}

/// Complete elliptic integral of the second kind,
/// `E(k) = ∫₀¹ √((1−k²t²)/(1−t²)) dt`, for `k ∈ [0, 1]`.
pub fn ellint_e(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::Domain("elliptic modulus for E must lie in [0, 1]"));
    }
    if k == 1.0 {
        return Ok(1.0);
    }
    // E = K · (1 − Σ 2^{n−1} cₙ²) with c₀ = k, cₙ₊₁ = (aₙ − bₙ)/2.
    let mut a = 1.0_f64;
    let mut b = (1.0 - k * k).sqrt();
    let mut sum = 0.5 * k * k;
    let mut pow2 = 0.5;
    for _ in 0..AGM_MAX_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let an = 0.5 * (a + b);
        let cn = 0.5 * (a - b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        pow2 *= 2.0;
        sum += pow2 * cn * cn;
    }
    Ok(core::f64::consts::FRAC_PI_2 / a * (1.0 - sum))
}

/// Complete elliptic integral of the third kind,
/// `Π(n, k) = ∫₀¹ dt / ((1−nt²) √((1−t²)(1−k²t²)))`, for `n < 1`.
///
/// `n ≥ 1` puts a non-integrable pole inside the interval and is rejected.
pub fn ellint_pi(n: f64, k: EllipticModulus) -> Result<f64> {
    if n >= 1.0 {
        return Err(Error::Domain("characteristic of Π must satisfy n < 1"));
    }
    let kk = k.get();
    let y = 1.0 - kk * kk;
    let rf = carlson_rf(0.0, y, 1.0);
    if n == 0.0 {
        return Ok(rf);
    }
    Ok(rf + n / 3.0 * carlson_rj(0.0, y, 1.0, 1.0 - n))
}

/// Carlson symmetric integral `R_F(x, y, z)`, nonnegative arguments with at
/// most one zero.
fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let mut mu;
    let (mut dx, mut dy, mut dz);
    loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        mu = (x + y + z) / 3.0;
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_ERRTOL {
            break;
        }
    }
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / mu.sqrt()
}

/// Carlson degenerate integral `R_C(x, y)` for `x ≥ 0`, `y > 0`.
fn carlson_rc(x: f64, y: f64) -> f64 {
    let (mut x, mut y) = (x, y);
    let mut mu;
    let mut s;
    loop {
        let lam = 2.0 * x.sqrt() * y.sqrt() + y;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        mu = (x + 2.0 * y) / 3.0;
        s = (y - mu) / mu;
        if s.abs() < CARLSON_ERRTOL {
            break;
        }
    }
    (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / mu.sqrt()
}

/// Carlson symmetric integral `R_J(x, y, z, p)` for `p > 0`.
fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> f64 {
    const C1: f64 = 3.0 / 14.0;
    const C2: f64 = 1.0 / 3.0;
    const C3: f64 = 3.0 / 22.0;
    const C4: f64 = 3.0 / 26.0;
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let mut sum = 0.0;
    let mut fac = 1.0;
    let mut mu;
    let (mut dx, mut dy, mut dz, mut dp);
    loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        let alpha = (p * (sx + sy + sz) + sx * sy * sz).powi(2);
        let beta = p * (p + lam) * (p + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        p = 0.25 * (p + lam);
        mu = 0.2 * (x + y + z + 2.0 * p);
        dx = (mu - x) / mu;
        dy = (mu - y) / mu;
        dz = (mu - z) / mu;
        dp = (mu - p) / mu;
        if dx.abs().max(dy.abs()).max(dz.abs()).max(dp.abs()) < CARLSON_ERRTOL {
            break;
        }
    }
    let ea = dx * (dy + dz) + dy * dz;
    let eb = dx * dy * dz;
    let ec = dp * dp;
    let ed = ea - 3.0 * ec;
    let ee = eb + 2.0 * dp * (ea - ec);
    3.0 * sum
        + fac
            * (1.0 + ed * (-C1 + 0.75 * C3 * ed - 1.5 * C4 * ee)
                + eb * (0.5 * C2 + dp * (-2.0 * C3 + dp * C4))
                + dp * ea * (C2 - dp * C3)
                - C2 * dp * ec)
            / (mu * mu.sqrt())
}
