//! Curves, Möbius transformations, arc length, analytic capacity, and
//! quadrature rules over curve parametrizations.

mod curve;
mod mobius;
mod quadrature;

pub use curve::{capacity_inequalities, CapacityReport, Curve, SampledCurve};
pub use mobius::MoebiusMap;
pub use quadrature::{quadrature, QuadratureRule};

pub(crate) use curve::ellipse_modulus;

use num_complex::Complex64;

/// A point of the Riemann sphere: a finite complex value or ∞.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ScalarPoint {
    Finite(Complex64),
    Infinity,
}

impl ScalarPoint {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ScalarPoint::Finite(z) => Some(z),
            ScalarPoint::Infinity => None,
        }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, ScalarPoint::Infinity)
    }
}

impl From<Complex64> for ScalarPoint {
    fn from(z: Complex64) -> Self {
        ScalarPoint::Finite(z)
    }
}

impl core::fmt::Display for ScalarPoint {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            ScalarPoint::Finite(z) => write!(f, "{z}"),
            ScalarPoint::Infinity => write!(f, "inf"),
        }
    }
}
