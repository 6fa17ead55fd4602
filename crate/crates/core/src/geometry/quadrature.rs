//! Periodic trapezoid quadrature over curve parametrizations.
//!
//! All canonical curves here are analytic, so the uniform-parameter periodic
//! trapezoid rule converges spectrally; it is the only rule the crate uses.

#[allow(unused_imports)]
use num_traits::Float;

use alloc::vec::Vec;
use core::f64::consts::TAU;

use super::Curve;
use crate::error::{Error, Result};
use crate::util::Compensated;

/// Quadrature nodes in the parameter interval and arc-length weights
/// `w_j = |z′(t_j)| Δt`, so `Σ w_j ≈ σ(γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// Total weight; approximates the arc length.
    pub fn total_weight(&self) -> f64 {
        let mut acc = Compensated::default();
        for w in &self.weights {
            acc.add(*w);
        }
        acc.value()
    }

    /// The n/2-node sub-rule on every other node, for refinement estimates.
    pub fn coarsened(&self) -> QuadratureRule {
        QuadratureRule {
            nodes: self.nodes.iter().step_by(2).copied().collect(),
            weights: self.weights.iter().step_by(2).map(|w| 2.0 * w).collect(),
        }
    }

    /// Largest arc-length spacing of the rule.
    pub fn max_spacing(&self) -> f64 {
        self.weights.iter().copied().fold(0.0, f64::max)
    }
}

/// Builds the periodic trapezoid rule with `n` nodes (even, at least 16).
///
/// Sampled curves must be queried at their own resolution; the wedge is
/// never discretized and reports an unbounded-curve error.
pub fn quadrature(c: &Curve, n: usize) -> Result<QuadratureRule> {
    if !c.is_bounded() {
        return Err(Error::UnboundedCurve);
    }
    if !n.is_multiple_of(2) {
        return Err(Error::Parity(n));
    }
    if n < 16 {
        return Err(Error::Domain("quadrature needs at least 16 nodes"));
    }
    if let Some(count) = c.node_count() {
        if count != n {
            return Err(Error::Domain(
                "sampled curves must be integrated at their own node count",
            ));
        }
    }
    let dt = TAU / n as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for j in 0..n {
        let t = j as f64 * dt;
        nodes.push(t);
        weights.push(c.deriv(t)?.norm() * dt);
    }
    Ok(QuadratureRule { nodes, weights })
}
