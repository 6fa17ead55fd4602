//! Möbius transformations with a pinned square-root branch.

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::ScalarPoint;
use crate::error::{Error, Result};

/// A Möbius transformation `Φ(z) = (az + b)/(cz + d)` with `ad − bc ≠ 0`,
/// carrying a chosen value of `√(ad − bc)`.
///
/// The stored root fixes the branch of `√Φ′(ζ) = √(ad−bc)/(cζ+d)`, which is
/// what the Cauchy and Szegő transformation laws consume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
    sqrt_det: Complex64,
}

impl MoebiusMap {
    /// Builds the map, picking the principal square root of the determinant.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() == 0.0 {
            return Err(Error::Domain("Möbius map needs ad − bc ≠ 0"));
        }
        Ok(Self {
            a,
            b,
            c,
            d,
            sqrt_det: det.sqrt(),
        })
    }

    /// Builds the map with an explicit root of the determinant.
    pub fn with_sqrt_det(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
        sqrt_det: Complex64,
    ) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() == 0.0 {
            return Err(Error::Domain("Möbius map needs ad − bc ≠ 0"));
        }
        if (sqrt_det * sqrt_det - det).norm() > 1e-12 * det.norm() {
            return Err(Error::Domain("sqrt_det² must equal ad − bc"));
        }
        Ok(Self { a, b, c, d, sqrt_det })
    }

    pub fn identity() -> Self {
        Self {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
            sqrt_det: Complex64::new(1.0, 0.0),
        }
    }

    /// The disc automorphism `φ_w(u) = (w − u)/(1 − w̄ u)`, so `φ_w(0) = w`.
    pub fn disc_automorphism(w: Complex64) -> Result<Self> {
        Self::new(
            Complex64::new(-1.0, 0.0),
            w,
            -w.conj(),
            Complex64::new(1.0, 0.0),
        )
    }

    /// The inversion `z ↦ 1/z`.
    pub fn inversion() -> Self {
        Self::new(
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        )
        .expect("inversion is invertible")
    }

    pub fn coefficients(&self) -> (Complex64, Complex64, Complex64, Complex64) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn sqrt_det(&self) -> Complex64 {
        self.sqrt_det
    }

    /// The inverse map; keeps the same determinant root, which squares to the
    /// same determinant.
    pub fn inverse(&self) -> Self {
        Self {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
            sqrt_det: self.sqrt_det,
        }
    }

    /// Composition `self ∘ other`; determinant roots multiply.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
            sqrt_det: self.sqrt_det * other.sqrt_det,
        }
    }

    /// Pole of the map: `−d/c`, or ∞ when the map is affine.
    pub fn pole(&self) -> ScalarPoint {
        if self.c.norm() == 0.0 {
            ScalarPoint::Infinity
        } else {
            ScalarPoint::Finite(-self.d / self.c)
        }
    }

    /// Extended evaluation on the sphere: the pole goes to ∞ and ∞ goes to
    /// `a/c` (or ∞ for affine maps). Total on the sphere.
    pub fn apply(&self, z: ScalarPoint) -> ScalarPoint {
        match z {
            ScalarPoint::Infinity => {
                if self.c.norm() == 0.0 {
                    ScalarPoint::Infinity
                } else {
                    ScalarPoint::Finite(self.a / self.c)
                }
            }
            ScalarPoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() == 0.0 {
                    ScalarPoint::Infinity
                } else {
                    ScalarPoint::Finite((self.a * z + self.b) / den)
                }
            }
        }
    }

    /// `Φ′(z) = (ad − bc)/(cz + d)²`.
    pub fn deriv(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(z));
        }
        Ok(self.sqrt_det * self.sqrt_det / (den * den))
    }

    /// The pinned branch `√Φ′(z) = √(ad−bc)/(cz+d)`.
    pub fn sqrt_deriv(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(z));
        }
        Ok(self.sqrt_det / den)
    }

    /// `Φ″(z) = −2c(ad − bc)/(cz + d)³`.
    pub fn second_deriv(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() == 0.0 {
            return Err(Error::Pole(z));
        }
        Ok(-2.0 * self.c * self.sqrt_det * self.sqrt_det / (den * den * den))
    }
}
