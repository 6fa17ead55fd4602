//! Jacobi theta functions, the elliptic nome, and Jacobi's `sn`.

#[allow(unused_imports)]
use num_traits::Float;

use num_complex::Complex64;

use super::{ellint_k, EllipticModulus, Nome, ThetaIndex};
use crate::error::{Error, Result};
use crate::util::{Compensated, CompensatedComplex};

/// Series terms stop once they fall below this fraction of the partial sum.
const SERIES_EPS: f64 = 1e-16;
/// Term cap guarding the q → 1 regime.
const MAX_TERMS: usize = 200;

/// The elliptic nome `q(k) = exp(−π K(√(1−k²)) / K(k))`, extended by
/// continuity to `q(0) = 0`.
pub fn nome(k: EllipticModulus) -> Nome {
    let kv = k.get();
    if kv == 0.0 {
        return Nome::new(0.0).expect("0 is a valid nome");
    }
    let kc = EllipticModulus::new((1.0 - kv * kv).sqrt()).expect("complement stays in [0,1)");
    let q = (-core::f64::consts::PI * ellint_k(kc) / ellint_k(k)).exp();
    Nome::new(q).expect("nome formula lands in [0,1)")
}

/// The inverse nome `k(q) = θ₂(0,q)² / θ₃(0,q)²`.
pub fn inverse_nome(q: Nome) -> EllipticModulus {
    if q.get() == 0.0 {
        return EllipticModulus::new(0.0).expect("0 is a valid modulus");
    }
    let t2 = theta_at_zero(ThetaIndex::Two, q);
    let t3 = theta_at_zero(ThetaIndex::Three, q);
    let k = (t2 / t3) * (t2 / t3);
    EllipticModulus::new(k).expect("theta quotient lands in [0,1)")
}

/// Jacobi theta function `θ_j(z, q)` for complex `z`, by its defining series.
pub fn theta(j: ThetaIndex, z: Complex64, q: Nome) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        // The series for θ₄(0, q) cancels catastrophically as q grows; the
        // product form has no cancellation at the origin.
        return match j {
            ThetaIndex::One => Complex64::new(0.0, 0.0),
            _ => Complex64::new(theta_at_zero(j, q), 0.0),
        };
    }
    let q = q.get();
    match j {
        // θ₁(z,q) = 2 q^{1/4} Σ (−1)^m q^{m(m+1)} sin((2m+1)z)
        ThetaIndex::One => {
            let mut acc = CompensatedComplex::default();
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 0..MAX_TERMS {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let term = ((2 * m + 1) as f64 * z).sin() * (sign * pw);
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
                pw *= q.powi(2 * (m as i32 + 1));
            }
            2.0 * q.powf(0.25) * acc.value()
        }
        // θ₂(z,q) = 2 q^{1/4} Σ q^{m(m+1)} cos((2m+1)z)
        ThetaIndex::Two => {
            let mut acc = CompensatedComplex::default();
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 0..MAX_TERMS {
                let term = ((2 * m + 1) as f64 * z).cos() * pw;
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
                pw *= q.powi(2 * (m as i32 + 1));
            }
            2.0 * q.powf(0.25) * acc.value()
        }
        // θ₃(z,q) = 1 + 2 Σ q^{m²} cos(2mz),  θ₄ alternates signs
        ThetaIndex::Three | ThetaIndex::Four => {
            let alternating = j == ThetaIndex::Four;
            let mut acc = CompensatedComplex::default();
            acc.add(Complex64::new(1.0, 0.0));
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 1..MAX_TERMS {
                pw *= q.powi(2 * m as i32 - 1);
                let sign = if alternating && m % 2 == 1 { -1.0 } else { 1.0 };
                let term = (2.0 * m as f64 * z).cos() * (2.0 * sign * pw);
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
            }
            acc.value()
        }
    }
}

/// z-derivative `∂θ_j/∂z (z, q)`, term-by-term.
pub fn theta_z_deriv(j: ThetaIndex, z: Complex64, q: Nome) -> Complex64 {
    let q = q.get();
    match j {
        ThetaIndex::One => {
            let mut acc = CompensatedComplex::default();
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 0..MAX_TERMS {
                let n = (2 * m + 1) as f64;
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let term = (n * z).cos() * (sign * n * pw);
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
                pw *= q.powi(2 * (m as i32 + 1));
            }
            2.0 * q.powf(0.25) * acc.value()
        }
        ThetaIndex::Two => {
            let mut acc = CompensatedComplex::default();
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 0..MAX_TERMS {
                let n = (2 * m + 1) as f64;
                let term = (n * z).sin() * (-n * pw);
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
                pw *= q.powi(2 * (m as i32 + 1));
            }
            2.0 * q.powf(0.25) * acc.value()
        }
        ThetaIndex::Three | ThetaIndex::Four => {
            let alternating = j == ThetaIndex::Four;
            let mut acc = CompensatedComplex::default();
            let mut prev = f64::INFINITY;
            let mut pw = 1.0;
            for m in 1..MAX_TERMS {
                pw *= q.powi(2 * m as i32 - 1);
                let n = 2.0 * m as f64;
                let sign = if alternating && m % 2 == 1 { -1.0 } else { 1.0 };
                let term = (n * z).sin() * (-2.0 * sign * n * pw);
                acc.add(term);
                let mag = term.norm();
                if mag < SERIES_EPS * acc.value().norm() && mag <= prev {
                    break;
                }
                prev = mag;
            }
            acc.value()
        }
    }
}

/// `θ₁′(0, q)` by the term-by-term differentiated series,
/// `2 q^{1/4} Σ (−1)^m (2m+1) q^{m(m+1)}`.
///
/// Jacobi's identity says this equals `θ₂(0,q) θ₃(0,q) θ₄(0,q)`; the two
/// routes are kept independent so the identity stays a meaningful check.
pub fn theta1_prime_at0(q: Nome) -> f64 {
    let qv = q.get();
    if qv == 0.0 {
        return 0.0;
    }
    let mut acc = Compensated::default();
    let mut pw = 1.0;
    for m in 0..MAX_TERMS {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * (2 * m + 1) as f64 * pw;
        acc.add(term);
        if term.abs() < SERIES_EPS * acc.value().abs() {
            break;
        }
        pw *= qv.powi(2 * (m as i32 + 1));
    }
    2.0 * qv.powf(0.25) * acc.value()
}

/// Theta values at the origin through the infinite products; every factor is
/// near 1 and positive, so no cancellation occurs even as q → 1.
pub(crate) fn theta_at_zero(j: ThetaIndex, q: Nome) -> f64 {
    let q = q.get();
    if j == ThetaIndex::One {
        return 0.0;
    }
    if q == 0.0 {
        return match j {
            ThetaIndex::Two => 0.0,
            _ => 1.0,
        };
    }
    let mut value = 1.0;
    let mut q_even = 1.0; // q^{2n}
    let mut q_odd = 1.0 / q; // q^{2n-1}
    for _ in 1..2000 {
        q_even *= q * q;
        q_odd *= q * q;
        let g = 1.0 - q_even;
        let f = match j {
            ThetaIndex::Two => {
                let h = 1.0 + q_even;
                g * h * h
            }
            ThetaIndex::Three => {
                let h = 1.0 + q_odd;
                g * h * h
            }
            ThetaIndex::Four => {
                let h = 1.0 - q_odd;
                g * h * h
            }
            ThetaIndex::One => unreachable!(),
        };
        value *= f;
        if f == 1.0 {
            break;
        }
    }
    match j {
        ThetaIndex::Two => 2.0 * q.powf(0.25) * value,
        _ => value,
    }
}

/// Jacobi's elliptic `sn(u, k)` via the theta quotient
/// `sn(u,k) = (θ₃/θ₂)(0,q) · θ₁(u/θ₃(0,q)², q) / θ₄(u/θ₃(0,q)², q)`.
pub fn jacobi_sn(u: Complex64, k: EllipticModulus) -> Result<Complex64> {
    if k.get() == 0.0 {
        return Ok(u.sin());
    }
    let q = nome(k);
    let t2 = theta_at_zero(ThetaIndex::Two, q);
    let t3 = theta_at_zero(ThetaIndex::Three, q);
    let v = u / (t3 * t3);
    let denom = theta(ThetaIndex::Four, v, q);
    if denom.norm() < 1e-12 {
        return Err(Error::Pole(u));
    }
    Ok((t3 / t2) * theta(ThetaIndex::One, v, q) / denom)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: f64) -> Nome {
        Nome::new(v).unwrap()
    }

    #[test]
    fn theta3_at_zero_nome_is_one() {
        let v = theta(ThetaIndex::Three, Complex64::new(0.0, 0.0), q(0.0));
        assert_eq!(v, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn theta1_vanishes_at_origin() {
        for qv in [0.0, 0.1, 0.5, 0.9] {
            let v = theta(ThetaIndex::One, Complex64::new(0.0, 0.0), q(qv));
            assert_eq!(v, Complex64::new(0.0, 0.0));
        }
    }

    #[test]
    fn theta1_prime_at_zero_nome() {
        assert_eq!(theta1_prime_at0(q(0.0)), 0.0);
    }

    #[test]
    fn nome_at_zero_modulus() {
        assert_eq!(nome(EllipticModulus::new(0.0).unwrap()).get(), 0.0);
        assert_eq!(inverse_nome(q(0.0)).get(), 0.0);
    }

    #[test]
    fn series_and_product_agree_at_origin() {
        // Evaluate the series just off the origin and compare with the
        // product value at the origin.
        for qv in [0.05, 0.3, 0.6] {
            for j in [ThetaIndex::Two, ThetaIndex::Three, ThetaIndex::Four] {
                let prod = theta_at_zero(j, q(qv));
                let series = theta(j, Complex64::new(1e-9, 0.0), q(qv)).re;
                assert!(
                    (prod - series).abs() < 1e-12 * prod.abs().max(1.0),
                    "j={j:?} q={qv}: {prod} vs {series}"
                );
            }
        }
    }

    #[test]
    fn sn_vanishes_at_origin() {
        for kv in [0.0, 0.3, 0.8] {
            let k = EllipticModulus::new(kv).unwrap();
            let v = jacobi_sn(Complex64::new(0.0, 0.0), k).unwrap();
            assert!(v.norm() < 1e-15);
        }
    }

    #[test]
    fn sn_pole_detected() {
        // Poles of sn sit at u = i K'(k) mod periods; θ₄ vanishes there.
        let k = EllipticModulus::new(0.5).unwrap();
        let kc = EllipticModulus::new((1.0 - 0.25f64).sqrt()).unwrap();
        let kp = ellint_k(kc);
        let u = Complex64::new(0.0, kp);
        assert!(matches!(jacobi_sn(u, k), Err(Error::Pole(_))));
    }
}
