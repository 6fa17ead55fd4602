//! Parsing of the curve mini-language and complex literals.
//!
//! Curves: `circle:cx=0,cy=0,r=1`, `ellipse:r=2`, `wedge:theta=0.785`, and
//! `mobius(a,b,c,d)*<curve>` with complex coefficients. Complex literals are
//! shell-friendly: `a+bi`, `a-bi`, `bi`, `a`, or `inf`; no parentheses.
//! Everything is case-sensitive.

use cauchy_szego_core::geometry::{Curve, MoebiusMap, ScalarPoint};
use num_complex::Complex64;

/// A parsed curve request: either a canonical curve or a Möbius image of
/// one, to be sampled at the CLI's node count.
pub enum CurveRequest {
    Plain(Curve),
    Mapped { map: MoebiusMap, base: Curve },
}

impl CurveRequest {
    /// Materializes the request; Möbius images are sampled at `n` nodes.
    pub fn build(&self, n: usize) -> Result<Curve, cauchy_szego_core::Error> {
        match self {
            CurveRequest::Plain(c) => Ok(c.clone()),
            CurveRequest::Mapped { map, base } => base.pushforward(map, n),
        }
    }

    pub fn is_mapped(&self) -> bool {
        matches!(self, CurveRequest::Mapped { .. })
    }
}

/// Parses a complex literal or `inf`.
pub fn parse_point(s: &str) -> Result<ScalarPoint, String> {
    if s == "inf" {
        return Ok(ScalarPoint::Infinity);
    }
    parse_complex(s).map(ScalarPoint::Finite)
}

/// Parses `a+bi`, `a-bi`, `bi`, or `a`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let err = || format!("cannot parse complex literal `{s}`");
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some(body) = t.strip_suffix('i') {
        // Find the split between real and imaginary parts: the last sign
        // that is neither leading nor part of an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for (idx, &b) in bytes.iter().enumerate().skip(1) {
            if (b == b'+' || b == b'-') && bytes[idx - 1] != b'e' && bytes[idx - 1] != b'E' {
                split = Some(idx);
            }
        }
        match split {
            Some(idx) => {
                let re: f64 = body[..idx].parse().map_err(|_| err())?;
                let imag_str = &body[idx..];
                let im: f64 = match imag_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => imag_str.parse().map_err(|_| err())?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let im: f64 = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    _ => body.parse().map_err(|_| err())?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| err())?;
        Ok(Complex64::new(re, 0.0))
    }
}

/// Parses a curve request string.
pub fn parse_curve(s: &str) -> Result<CurveRequest, String> {
    if let Some(rest) = s.strip_prefix("mobius(") {
        let close = rest.find(')').ok_or("mobius(...) is missing `)`")?;
        let coeffs: Vec<&str> = rest[..close].split(',').collect();
        if coeffs.len() != 4 {
            return Err("mobius(...) needs exactly four coefficients".into());
        }
        let a = parse_complex(coeffs[0])?;
        let b = parse_complex(coeffs[1])?;
        let c = parse_complex(coeffs[2])?;
        let d = parse_complex(coeffs[3])?;
        let map = MoebiusMap::new(a, b, c, d).map_err(|e| e.to_string())?;
        let tail = &rest[close + 1..];
        let base_str = tail
            .strip_prefix('*')
            .ok_or("mobius(...) must be followed by `*<curve>`")?;
        let base = match parse_curve(base_str)? {
            CurveRequest::Plain(c) => c,
            CurveRequest::Mapped { .. } => {
                return Err("nested mobius(...) specifications are not supported".into())
            }
        };
        return Ok(CurveRequest::Mapped { map, base });
    }
    let (family, params) = s
        .split_once(':')
        .ok_or_else(|| format!("cannot parse curve `{s}`: expected `family:key=value,...`"))?;
    let mut fields = std::collections::BTreeMap::new();
    for kv in params.split(',') {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("bad parameter `{kv}` in curve `{s}`"))?;
        let val: f64 = v
            .parse()
            .map_err(|_| format!("parameter `{k}` in curve `{s}` is not a decimal literal"))?;
        fields.insert(k.to_string(), val);
    }
    let get = |key: &str| -> Result<f64, String> {
        fields
            .get(key)
            .copied()
            .ok_or_else(|| format!("curve `{s}` is missing parameter `{key}`"))
    };
    match family {
        "circle" => {
            let cx = get("cx")?;
            let cy = get("cy")?;
            let r = get("r")?;
            Curve::circle(Complex64::new(cx, cy), r)
                .map(CurveRequest::Plain)
                .map_err(|e| e.to_string())
        }
        "ellipse" => Curve::ellipse(get("r")?)
            .map(CurveRequest::Plain)
            .map_err(|e| e.to_string()),
        "wedge" => Curve::wedge(get("theta")?)
            .map(CurveRequest::Plain)
            .map_err(|e| e.to_string()),
        other => Err(format!("unknown curve family `{other}`")),
    }
}
