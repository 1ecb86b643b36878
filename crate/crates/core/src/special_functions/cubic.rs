//! Real roots of a cubic with real coefficients.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Gap (relative to the root scale) below which two roots count as coincident.
const DOUBLE_ROOT_TOL: f64 = 1e-10;

/// Real-root structure of a cubic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CubicRootsClassification {
    /// Three distinct real roots, `z1 < z2 < z3`.
    ThreeReal { z1: f64, z2: f64, z3: f64 },
    /// One real root `z0`; the monic cubic factors as `(x - z0)(x² + p x + q)` with `p² < 4q`.
    OneReal { z0: f64, p: f64, q: f64 },
}

impl CubicRootsClassification {
    /// Real roots in ascending order.
    pub fn real_roots(&self) -> Vec<f64> {
        match *self {
            Self::ThreeReal { z1, z2, z3 } => vec![z1, z2, z3],
            Self::OneReal { z0, .. } => vec![z0],
        }
    }

    /// Coefficients `(1, a2, a1, a0)` of the monic cubic with these roots.
    pub fn monic_coefficients(&self) -> [f64; 4] {
        match *self {
            Self::ThreeReal { z1, z2, z3 } => [
                1.0,
                -(z1 + z2 + z3),
                z1 * z2 + z1 * z3 + z2 * z3,
                -z1 * z2 * z3,
            ],
            Self::OneReal { z0, p, q } => [1.0, p - z0, q - z0 * p, -z0 * q],
        }
    }
}

/// Evaluates `c3 x³ + c2 x² + c1 x + c0` and its derivative.
fn eval_with_derivative(c: [f64; 4], x: f64) -> (f64, f64) {
    let value = ((c[0] * x + c[1]) * x + c[2]) * x + c[3];
    let slope = (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2];
    (value, slope)
}

fn polish(c: [f64; 4], mut x: f64) -> f64 {
    let (mut value, _) = eval_with_derivative(c, x);
    for _ in 0..8 {
        let (_, slope) = eval_with_derivative(c, x);
        if slope == 0.0 || value == 0.0 {
            break;
        }
        let candidate = x - value / slope;
        let (next_value, _) = eval_with_derivative(c, candidate);
        if next_value.abs() >= value.abs() {
            break;
        }
        x = candidate;
        value = next_value;
    }
    x
}

/// Solves `c3 x³ + c2 x² + c1 x + c0 = 0` over the reals.
///
/// Three real roots come from the trigonometric form, a single one from
/// Cardano's formula; both are Newton-polished on the original polynomial.
pub fn solve_cubic_real(c3: f64, c2: f64, c1: f64, c0: f64) -> Result<CubicRootsClassification> {
    let coeffs = [c3, c2, c1, c0];
    if coeffs.iter().any(|v| !v.is_finite()) {
        return Err(Error::Domain("cubic coefficients must be finite".into()));
    }
    if c3 == 0.0 {
        return Err(Error::Degenerate("leading coefficient vanishes".into()));
    }
    let (a, b, c) = (c2 / c3, c1 / c3, c0 / c3);
    // x = y - a/3 gives y³ + p y + q = 0.
    let shift = a / 3.0;
    let p = b - a * shift;
    let q = 2.0 * shift * shift * shift - b * shift + c;
    // Cauchy bound fixes the scale for the coincidence test.
    let scale = 1.0 + a.abs().max(b.abs()).max(c.abs());
    let disc = -(4.0 * p * p * p + 27.0 * q * q);

    if disc > 0.0 {
        let r = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut roots = [0, 1, 2].map(|j| {
            polish(
                coeffs,
                r * (theta - 2.0 * PI * j as f64 / 3.0).cos() - shift,
            )
        });
        roots.sort_by(f64::total_cmp);
        let gap = (roots[1] - roots[0]).min(roots[2] - roots[1]);
        if gap <= DOUBLE_ROOT_TOL * scale {
            return Err(Error::Degenerate(format!(
                "roots {roots:?} coincide within tolerance"
            )));
        }
        return Ok(CubicRootsClassification::ThreeReal {
            z1: roots[0],
            z2: roots[1],
            z3: roots[2],
        });
    }

    let sq = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
    let u = (-q / 2.0 + sq).cbrt();
    let v = (-q / 2.0 - sq).cbrt();
    let z0 = polish(coeffs, u + v - shift);
    // Deflate the monic cubic by (x - z0).
    let p_res = a + z0;
    let q_res = b + z0 * p_res;
    let imag_sq = q_res - p_res * p_res / 4.0;
    if imag_sq <= (DOUBLE_ROOT_TOL * scale).powi(2) {
        return Err(Error::Degenerate(format!(
            "complex pair of the cubic is numerically real (imaginary part² = {imag_sq:e})"
        )));
    }
    Ok(CubicRootsClassification::OneReal {
        z0,
        p: p_res,
        q: q_res,
    })
}
