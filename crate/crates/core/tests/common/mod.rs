//! Independent oracles for the integration suites.
//!
//! Everything here evaluates defining integrals and series directly
//! (adaptive quadrature, brute-force summation, Landen recurrences) and must
//! stay independent of the library's AGM/Carlson/theta implementation paths.

#![allow(dead_code)]

use num_complex::Complex64;

/// Adaptive Simpson quadrature on [a, b].
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn rec(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        m: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        if depth == 0 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, lm, m, fa, flm, fm, left, tol / 2.0, depth - 1)
                + rec(f, m, rm, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    rec(f, a, m, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 48)
}

/// `K(k)` by quadrature of its defining integral (trig substitution removes
/// the endpoint singularity).
pub fn oracle_k(k: f64) -> f64 {
    adaptive_simpson(
        &|th: f64| {
            let s = th.sin();
            1.0 / (1.0 - k * k * s * s).sqrt()
        },
        0.0,
        core::f64::consts::FRAC_PI_2,
        1e-14,
    )
}

/// `E(k)` by quadrature.
pub fn oracle_e(k: f64) -> f64 {
    adaptive_simpson(
        &|th: f64| {
            let s = th.sin();
            (1.0 - k * k * s * s).sqrt()
        },
        0.0,
        core::f64::consts::FRAC_PI_2,
        1e-14,
    )
}

/// `Π(n, k)` by quadrature.
pub fn oracle_pi(n: f64, k: f64) -> f64 {
    adaptive_simpson(
        &|th: f64| {
            let s = th.sin();
            let s2 = s * s;
            1.0 / ((1.0 - n * s2) * (1.0 - k * k * s2).sqrt())
        },
        0.0,
        core::f64::consts::FRAC_PI_2,
        1e-14,
    )
}

/// Jacobi theta by direct 50-term summation of the defining series.
pub fn theta_direct(j: usize, z: Complex64, q: f64) -> Complex64 {
    let mut sum = Complex64::new(0.0, 0.0);
    match j {
        1 => {
            for m in 0..50 {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sum += sign * q.powi(m * (m + 1)) * ((2 * m + 1) as f64 * z).sin();
            }
            2.0 * q.powf(0.25) * sum
        }
        2 => {
            for m in 0..50 {
                sum += q.powi(m * (m + 1)) * ((2 * m + 1) as f64 * z).cos();
            }
            2.0 * q.powf(0.25) * sum
        }
        3 => {
            sum += 1.0;
            for m in 1..50 {
                sum += 2.0 * q.powi(m * m) * (2.0 * m as f64 * z).cos();
            }
            sum
        }
        4 => {
            sum += 1.0;
            for m in 1..50 {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                sum += 2.0 * sign * q.powi(m * m) * (2.0 * m as f64 * z).cos();
            }
            sum
        }
        _ => panic!("theta index must be 1..=4"),
    }
}

/// Inverse nome via the infinite-product form
/// `k(q) = 4√q Π[(1+q^{2j})/(1+q^{2j−1})]⁴`.
pub fn inverse_nome_product(q: f64) -> f64 {
    let mut prod = 1.0;
    for j in 1..400 {
        let even = 1.0 + q.powi(2 * j);
        let odd = 1.0 + q.powi(2 * j - 1);
        let f = (even / odd).powi(4);
        prod *= f;
        if f == 1.0 {
            break;
        }
    }
    4.0 * q.sqrt() * prod
}

/// Jacobi `sn(u, k)` for real `u` by the descending Landen (AGM) recurrence.
pub fn sn_agm(u: f64, k: f64) -> f64 {
    if k == 0.0 {
        return u.sin();
    }
    let mut a = vec![1.0_f64];
    let mut c = vec![k];
    let mut b = (1.0 - k * k).sqrt();
    while c.last().unwrap().abs() > 1e-16 && a.len() < 40 {
        let an = a.last().unwrap();
        let cn = 0.5 * (an - b);
        let bn = (an * b).sqrt();
        a.push(0.5 * (an + b));
        c.push(cn);
        b = bn;
    }
    let n = a.len() - 1;
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).asin());
    }
    phi.sin()
}

/// `I(r, α) = ∫₀^∞ dx/|x − re^{iα}|²` by direct quadrature plus a series
/// tail; independent of the `sinc` closed form.
pub fn wedge_i_quadrature(r: f64, alpha: f64) -> f64 {
    let cut = 1e4 * r;
    let f = |x: f64| {
        let dx = x - r * alpha.cos();
        let dy = r * alpha.sin();
        1.0 / (dx * dx + dy * dy)
    };
    let head = adaptive_simpson(&f, 0.0, cut, 1e-13 / r);
    // ∫_X^∞ = 1/X + r cos α / X² + (4cos²α − 1) r²/(3X³) + O(r³/X⁴)
    let c = alpha.cos();
    let tail = 1.0 / cut + r * c / (cut * cut) + (4.0 * c * c - 1.0) * r * r / (3.0 * cut.powi(3));
    head + tail
}

/// SplitMix64: deterministic pseudo-random stream for test geometry.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    pub fn complex_in_box(&mut self, re: f64, im: f64) -> Complex64 {
        Complex64::new(self.range(-re, re), self.range(-im, im))
    }
}
