//! Self-contained special functions: complete elliptic integrals, the
//! elliptic nome and its inverse, Jacobi theta functions and Jacobi `sn`.
//!
//! Conventions follow Whittaker & Watson: the integrals are functions of the
//! modulus `k`, not the parameter `m = k²`, and the third kind carries the
//! characteristic `n` through a `(1 - n t²)` factor.

mod elliptic;
mod theta;

pub use elliptic::{ellint_e, ellint_k, ellint_pi};
pub use theta::{inverse_nome, jacobi_sn, nome, theta, theta1_prime_at0, theta_z_deriv};

pub(crate) use theta::theta_at_zero;

use crate::error::{Error, Result};

/// Elliptic modulus `k ∈ [0, 1)`.
///
/// `k = 1` is rejected here; `K` diverges there and the one place it is
/// meaningful (`E(1) = 1`) takes a bare `f64`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if (0.0..1.0).contains(&k) {
            Ok(Self(k))
        } else {
            Err(Error::Domain("elliptic modulus must lie in [0, 1)"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Elliptic nome `q ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Nome(f64);

impl Nome {
    pub fn new(q: f64) -> Result<Self> {
        if (0.0..1.0).contains(&q) {
            Ok(Self(q))
        } else {
            Err(Error::Domain("nome must lie in [0, 1)"))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// Index of a Jacobi theta function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaIndex {
    One,
    Two,
    Three,
    Four,
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn k(v: f64) -> EllipticModulus {
        EllipticModulus::new(v).unwrap()
    }

    #[test]
    fn modulus_domain() {
        assert!(EllipticModulus::new(0.0).is_ok());
        assert!(EllipticModulus::new(0.999_999).is_ok());
        assert!(EllipticModulus::new(1.0).is_err());
        assert!(EllipticModulus::new(-0.1).is_err());
        assert!(Nome::new(1.0).is_err());
        assert!(Nome::new(-1e-12).is_err());
    }

    #[test]
    fn k_at_zero_is_half_pi() {
        assert!((ellint_k(k(0.0)) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn e_endpoints() {
        assert!((ellint_e(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert_eq!(ellint_e(1.0).unwrap(), 1.0);
        assert!(ellint_e(1.0 + 1e-9).is_err());
        assert!(ellint_e(-0.2).is_err());
    }

    #[test]
    fn pi_with_zero_characteristic_reduces_to_k() {
        for kv in [0.0, 0.3, 0.7, 0.95] {
            let diff = (ellint_pi(0.0, k(kv)).unwrap() - ellint_k(k(kv))).abs();
            assert!(diff < 1e-14, "k={kv}: diff={diff:e}");
        }
    }

    #[test]
    fn pi_closed_form_negative_characteristic() {
        // ∫₀¹ dt/((1+t²)√(1−t²)) = arctan(√2 t/√(1−t²))/√2 evaluated at 1.
        let expected = PI / (2.0 * 2f64.sqrt());
        assert!((ellint_pi(-1.0, k(0.0)).unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn pi_rejects_unit_characteristic() {
        assert!(ellint_pi(1.0, k(0.5)).is_err());
        assert!(ellint_pi(1.5, k(0.5)).is_err());
    }
}
