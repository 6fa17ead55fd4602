//! Error type shared by every module of the crate.

use core::fmt;
use num_complex::Complex64;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// All operations are pure, so errors only report violated preconditions or
/// iteration failures; no error carries partially mutated state.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the mathematical domain of the operation.
    Domain(&'static str),
    /// Evaluation requested at a pole of the function.
    Pole(Complex64),
    /// Singular evaluation: the point coincides with a curve point.
    OnCurve,
    /// The operation needs a bounded curve but received an unbounded one.
    UnboundedCurve,
    /// Analytic capacity is not known for this curve family.
    CapacityUnknown,
    /// A sampled curve was queried off its parameter nodes.
    UnsupportedParameter(f64),
    /// The pole of a Möbius map lies on (or too close to) the curve.
    PoleOnCurve,
    /// The point does not lie strictly inside the requested side.
    SideMismatch,
    /// No Riemann map is available for this curve family.
    NoRiemannMap,
    /// The operator matrix is not in the frame the operation requires.
    Frame,
    /// An even node count is required.
    Parity(usize),
    /// An iteration cap was exceeded; carries the best estimate so far.
    NonConvergence(f64),
    /// A linear system was too ill-conditioned to trust.
    IllConditioned(f64),
    /// Too few data points for the requested fit.
    InsufficientData,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Pole(z) => write!(f, "evaluation at a pole (z = {z})"),
            Error::OnCurve => write!(f, "singular evaluation: point lies on the curve"),
            Error::UnboundedCurve => write!(f, "operation requires a bounded curve"),
            Error::CapacityUnknown => write!(f, "analytic capacity unknown for this curve"),
            Error::UnsupportedParameter(t) => {
                write!(f, "sampled curve has no node at parameter t = {t}")
            }
            Error::PoleOnCurve => write!(f, "Möbius pole lies on or too close to the curve"),
            Error::SideMismatch => write!(f, "point is not strictly inside the requested side"),
            Error::NoRiemannMap => write!(f, "no Riemann map available for this curve"),
            Error::Frame => write!(f, "operator matrix is not in the symmetrized frame"),
            Error::Parity(n) => write!(f, "node count must be even, got {n}"),
            Error::NonConvergence(best) => {
                write!(f, "iteration cap exceeded (best estimate {best})")
            }
            Error::IllConditioned(c) => write!(f, "system too ill-conditioned (estimate {c:.3e})"),
            Error::InsufficientData => write!(f, "not enough data points"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
