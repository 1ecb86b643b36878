//! Series form of the height radicand and its reduction to Legendre normal form.
//!
//! With `Ẑ = 1/Z²` the order-6 truncation (when `C = c`) becomes `Ẑ⁻³` times a
//! cubic in `Ẑ`, and `dẐ/dt = ∓2 sqrt(cubic(Ẑ))`.

use super::cubic::CubicRootsClassification;
use super::elliptic::{elliptic_f, elliptic_k, jacobi_sn_cn_dn};
use crate::error::{Error, Result};
use crate::wave_model::VelocityCoefficients;

/// Fraction of the quarter period `K(m)` below which a validity window is treated as empty.
pub const MIN_WINDOW_FRACTION: f64 = 0.05;

/// Coefficients (index = power of `Z`) of the series of the radicand
/// `k²A² sinh²Z − [2β − k(C−c)Z − (B/2)Z²]²`, truncated at degree `order`.
pub fn sextic_coefficients(
    coeffs: &VelocityCoefficients,
    beta: f64,
    order: usize,
) -> Result<Vec<f64>> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "truncation order must be even and at least 4, got {order}"
        )));
    }
    let ka2 = (coeffs.k * coeffs.amplitude).powi(2);
    let d = coeffs.relative_drift();
    let b = coeffs.shear;

    let mut poly = vec![0.0; order + 1];
    poly[0] = -4.0 * beta * beta;
    poly[1] = 4.0 * beta * d;
    poly[2] = 2.0 * beta * b - d * d;
    poly[3] = -b * d;
    poly[4] = -b * b / 4.0;
    // sinh²Z = Σ_{n≥1} 2^{2n−1} Z^{2n} / (2n)!
    let mut term = 2.0;
    for n in 1..=order / 2 {
        let power = 2 * n;
        term /= (power * (power - 1)) as f64;
        poly[power] += ka2 * term;
        term *= 4.0;
    }
    Ok(poly)
}

/// Coefficients `(c3, c2, c1, c0)` of the cubic in `Ẑ = 1/Z²` obtained from the
/// order-6 truncation. Requires `C = c` (no odd powers).
pub fn reduction_cubic(coeffs: &VelocityCoefficients, beta: f64) -> Result<[f64; 4]> {
    let d = coeffs.relative_drift();
    let tol = 1e-12 * coeffs.speed.abs().max(1.0);
    if d.abs() > tol {
        return Err(Error::Precondition(format!(
            "cubic reduction needs C = c, but C - c = {d:e}"
        )));
    }
    let s = sextic_coefficients(coeffs, beta, 6)?;
    Ok([s[0], s[2], s[4], s[6]])
}

/// Which closed form applies to the reduced integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// Three positive roots: bounded orbit, valid for all `t`.
    Case1a,
    /// Roots `z1 < z2 < 0 < z3`: valid while `sn² < z3/(z3 − z2)`.
    Case1b,
    /// One real root: valid while `cn > threshold`.
    Case2,
    /// No usable elliptic form.
    HyperellipticOnly,
}

/// Legendre normal form data for one reduced integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticReduction {
    pub case: CaseTag,
    /// Parameter `m` of the Jacobi functions.
    pub modulus_sq: f64,
    /// Time scale: the Jacobi argument is `scale · t`.
    pub scale: f64,
    pub roots: CubicRootsClassification,
    /// Right-hand side of the validity inequality; `None` for Case 1a.
    pub validity_threshold: Option<f64>,
}

impl EllipticReduction {
    /// Half-width of the validity window in the Jacobi argument, `None` if unbounded.
    pub fn argument_window(&self) -> Result<Option<f64>> {
        let Some(threshold) = self.validity_threshold else {
            return Ok(None);
        };
        let amplitude = match self.roots {
            CubicRootsClassification::OneReal { .. } => threshold.clamp(-1.0, 1.0).acos(),
            CubicRootsClassification::ThreeReal { .. } => threshold.clamp(0.0, 1.0).sqrt().asin(),
        };
        Ok(Some(elliptic_f(amplitude, self.modulus_sq)?))
    }

    /// Half-width of the validity window in time, `None` if unbounded.
    pub fn time_window(&self) -> Result<Option<f64>> {
        Ok(self.argument_window()?.map(|u| u / self.scale))
    }

    /// Whether the window is wide enough to be worth using.
    pub fn window_is_usable(&self) -> Result<bool> {
        match self.argument_window()? {
            None => Ok(true),
            Some(u) => Ok(u >= MIN_WINDOW_FRACTION * elliptic_k(self.modulus_sq)?),
        }
    }

    /// Value of `Ẑ` at time `t` (measured from the root `Ẑ₃` or `Ẑ₀`), and the
    /// quantity compared against the validity threshold.
    pub(crate) fn hat_at(&self, t: f64) -> Result<(f64, f64, f64)> {
        let j = jacobi_sn_cn_dn(self.scale * t, self.modulus_sq)?;
        match self.roots {
            CubicRootsClassification::ThreeReal { z2, z3, .. } => {
                let base = z2 * j.sn * j.sn + z3 * j.cn * j.cn;
                // dẐ/dt = −2 scale (z3 − z2) sn cn dn
                let rate = -2.0 * self.scale * (z3 - z2) * j.sn * j.cn * j.dn;
                Ok((base, rate, j.sn * j.sn))
            }
            CubicRootsClassification::OneReal { z0, p, q } => {
                let s = (z0 * z0 + p * z0 + q).sqrt();
                let denom = 1.0 + j.cn;
                let base = z0 - s * (1.0 - j.cn) / denom;
                let rate = -2.0 * s * self.scale * j.sn * j.dn / (denom * denom);
                Ok((base, rate, j.cn))
            }
        }
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if beta == 0.0 || !beta.is_finite() {
        return Err(Error::Precondition(format!(
            "reduction needs a finite nonzero beta, got {beta}"
        )));
    }
    Ok(())
}

/// Case 1a: `0 < z1 < z2 < z3`.
pub fn reduce_case1a(roots: &CubicRootsClassification, beta: f64) -> Result<EllipticReduction> {
    check_beta(beta)?;
    let CubicRootsClassification::ThreeReal { z1, z2, z3 } = *roots else {
        return Err(Error::Precondition("case 1a needs three real roots".into()));
    };
    if z1 <= 0.0 {
        return Err(Error::Precondition(format!(
            "case 1a needs positive roots, smallest is {z1}"
        )));
    }
    Ok(EllipticReduction {
        case: CaseTag::Case1a,
        modulus_sq: (z3 - z2) / (z3 - z1),
        scale: 2.0 * beta.abs() * (z3 - z1).sqrt(),
        roots: *roots,
        validity_threshold: None,
    })
}

/// Case 1b (`z1 < z2 < 0 < z3`) or Case 2 (one real root).
///
/// Returns `HyperellipticOnly`, with the computed data kept, when the validity
/// window is narrower than [`MIN_WINDOW_FRACTION`] of the quarter period.
pub fn reduce_case1b_or_case2(
    roots: &CubicRootsClassification,
    beta: f64,
) -> Result<EllipticReduction> {
    check_beta(beta)?;
    let mut reduction = match *roots {
        CubicRootsClassification::ThreeReal { z1, z2, z3 } => {
            if !(z2 < 0.0 && z3 > 0.0) {
                return Err(Error::Precondition(format!(
                    "case 1b needs z1 < z2 < 0 < z3, got ({z1}, {z2}, {z3})"
                )));
            }
            EllipticReduction {
                case: CaseTag::Case1b,
                modulus_sq: (z3 - z2) / (z3 - z1),
                scale: 2.0 * beta.abs() * (z3 - z1).sqrt(),
                roots: *roots,
                validity_threshold: Some(z3 / (z3 - z2)),
            }
        }
        CubicRootsClassification::OneReal { z0, p, q } => {
            if z0 <= 0.0 {
                return Err(Error::Precondition(format!(
                    "case 2 needs a positive real root, got {z0}"
                )));
            }
            let s = (z0 * z0 + p * z0 + q).sqrt();
            EllipticReduction {
                case: CaseTag::Case2,
                modulus_sq: 0.5 * (1.0 + (z0 + 0.5 * p) / s),
                scale: 4.0 * beta.abs() * s.sqrt(),
                roots: *roots,
                validity_threshold: Some((s - z0) / (s + z0)),
            }
        }
    };
    if !reduction.window_is_usable()? {
        reduction.case = CaseTag::HyperellipticOnly;
    }
    Ok(reduction)
}
