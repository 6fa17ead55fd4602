//! Cauchy transforms, Szegő kernels, and the Möbius-invariant Λ-function on
//! planar Jordan curves.
//!
//! The crate computes, at desk scale:
//!
//! - the Λ-function `Λ(γ, z) = ‖C(z,·)‖_{L²(γ)} / √S(z,z)` on the whole
//!   Riemann sphere, with its closed forms on circles, ellipses and wedges;
//! - Cauchy-kernel norms and Szegő kernel diagonals through explicit Riemann
//!   maps (disc automorphisms, wedge power maps, elliptic-function maps);
//! - Nyström discretizations of the boundary Cauchy transform, the
//!   Kerzman–Stein operator `A = C − C*`, its spectrum, operator norms, and
//!   the Kerzman–Stein–Trummer numerical Szegő kernel;
//! - analytic-capacity bounds and the norm sandwich
//!   `sup Λ ≤ ‖C‖ ≤ FKS upper bound` on ellipses.
//!
//! The core is `no_std`-compatible (with `alloc`); file formats and the CLI
//! live in the companion `cauchy-szego-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod kernels;
pub mod lambda;
pub mod operator;
pub mod specfun;
mod util;

pub use error::{Error, Result};
pub use num_complex::Complex64;
