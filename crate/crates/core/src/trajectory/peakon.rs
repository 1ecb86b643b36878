//! The particle path with a vertical asymptote, `z = (2/k) artanh(e^{−|kAt + const2|})`.

use std::f64::consts::FRAC_PI_2;

use super::TrajectoryState;
use crate::error::{Error, Result};
use crate::wave_model::VelocityCoefficients;

/// One point of the peakon path with its equation residuals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakonSample {
    pub state: TrajectoryState,
    /// `dz/dt` from differentiating the closed form.
    pub z_rate: f64,
    /// Phase branch `X = ∓π/2` on either side of the asymptote.
    pub phase: f64,
    /// `k·const1 − X` reduced to `(−π, π]`: zero only if `x` and `X` agree.
    pub phase_mismatch: f64,
    /// Horizontal equation residual, `−(Bz + C − c)` since `cos X = 0`.
    pub residual_x: f64,
    /// Vertical equation residual `dz/dt − A sinh(kz) sin X`.
    pub residual_z: f64,
}

/// Evaluates the path at time `t`.
///
/// The horizontal equation holds only when `B = 0` and `C = c`; otherwise a
/// `Validity` error is returned unless `force` is set, in which case the
/// residual is reported in the sample.
pub fn peakon_trajectory(
    coeffs: &VelocityCoefficients,
    const1: f64,
    const2: f64,
    t: f64,
    force: bool,
) -> Result<PeakonSample> {
    let k = coeffs.k;
    let s = k * coeffs.amplitude * t + const2;
    if s == 0.0 {
        return Err(Error::Asymptote { t });
    }
    let decay = (-s.abs()).exp();
    let z = 2.0 / k * decay.atanh();
    if !z.is_finite() {
        return Err(Error::Asymptote { t });
    }
    // d/dt of the closed form: −sign(s) A / sinh|s|.
    let z_rate = -s.signum() * coeffs.amplitude / s.abs().sinh();
    let phase = -s.signum() * FRAC_PI_2;
    let residual_z = z_rate - coeffs.amplitude * (k * z).sinh() * phase.sin();
    let residual_x = -(coeffs.shear * z + coeffs.drift - coeffs.speed);
    let tol = 1e-12 * (coeffs.shear.abs() * z + coeffs.drift.abs() + coeffs.speed.abs()).max(1.0);
    if !force && residual_x.abs() > tol {
        return Err(Error::Validity {
            residual: residual_x,
        });
    }
    let mismatch = (k * const1 - phase + std::f64::consts::PI)
        .rem_euclid(2.0 * std::f64::consts::PI)
        - std::f64::consts::PI;
    Ok(PeakonSample {
        state: TrajectoryState {
            t,
            x: coeffs.speed * t + const1,
            z,
        },
        z_rate,
        phase,
        phase_mismatch: mismatch,
        residual_x,
        residual_z,
    })
}
