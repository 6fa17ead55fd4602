//! Small numeric helpers shared across modules.

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

/// Neumaier-compensated accumulator. Quadrature sums and theta series can
/// cancel heavily (θ₄(0, q) for q near 1 is a tiny alternating sum of O(1)
/// terms), and the identity checks need the lost digits back.
#[derive(Clone, Copy, Default)]
pub(crate) struct Compensated {
    sum: f64,
    carry: f64,
}

impl Compensated {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

#[derive(Clone, Copy, Default)]
pub(crate) struct CompensatedComplex {
    re: Compensated,
    im: Compensated,
}

impl CompensatedComplex {
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

/// `sinc(t) = sin(t)/t` with the removable singularity filled in; a Taylor
/// fallback keeps full accuracy for |t| below 1e-4.
pub fn sinc(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        let t2 = t * t;
        1.0 - t2 / 6.0 + t2 * t2 / 120.0
    } else {
        t.sin() / t
    }
}

/// `1/sinc(π − x)` evaluated as `(π − x)/sin(x)`.
///
/// The identity `sin(π − x) = sin(x)` moves the sine evaluation away from
/// the ill-conditioned neighborhood of π, which matters when `x` is an edge
/// distance of order 1e-10. The removable point `x = π` goes through the
/// sinc Taylor guard.
pub(crate) fn inv_sinc_at_pi_minus(x: f64) -> f64 {
    let t = core::f64::consts::PI - x;
    if t.abs() < 1e-4 {
        1.0 / sinc(t)
    } else {
        t / x.sin()
    }
}

/// `cos((π/2)·(d₂ − d₁)/(d₁ + d₂))` expressed as `sin(π·min/(d₁+d₂))`,
/// stable when either edge distance `d₁, d₂ ≥ 0` is tiny.
pub(crate) fn cos_from_edge_distances(d1: f64, d2: f64) -> f64 {
    (core::f64::consts::PI * d1.min(d2) / (d1 + d2)).sin()
}

/// Euclidean remainder into `[0, period)`; `f64::rem_euclid` needs std.
pub(crate) fn wrap_into_period(t: f64, period: f64) -> f64 {
    let r = t % period;
    if r < 0.0 {
        r + period
    } else {
        r
    }
}
