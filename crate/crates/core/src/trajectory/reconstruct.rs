//! Horizontal position from the height history.
//!
//! `dZ/dt = kA sinh Z sin X` fixes `sin X`; the quadrant and the multiple of
//! 2π come from `dX/dt = kA cosh Z cos X + BZ + k(C − c)`.

use std::f64::consts::{PI, TAU};

use super::TrajectoryState;
use crate::error::{Error, Result};
use crate::wave_model::VelocityCoefficients;

/// Largest trapezoid mismatch (in radians) accepted for the chosen branch.
const BRANCH_TOL: f64 = 0.1;
/// How far `|sin X|` may exceed one before it is treated as inconsistent.
const CLAMP_TOL: f64 = 1e-12;

fn lift(candidate: f64, near: f64) -> f64 {
    candidate + TAU * ((near - candidate) / TAU).round()
}

struct Frame {
    ka: f64,
    b: f64,
    d: f64,
}

impl Frame {
    fn phase_rate(&self, phase: f64, height: f64) -> f64 {
        self.ka * height.cosh() * phase.cos() + self.b * height + self.d
    }

    fn candidates(&self, t: f64, height: f64, rate: f64) -> Result<[f64; 2]> {
        if !(height > 0.0) {
            return Err(Error::Domain(format!(
                "height must be positive, got Z = {height} at t = {t}"
            )));
        }
        let s = rate / (self.ka * height.sinh());
        if !s.is_finite() || s.abs() > 1.0 + CLAMP_TOL {
            return Err(Error::BranchAmbiguity {
                t,
                reason: format!("|sin X| = {} exceeds one", s.abs()),
            });
        }
        let base = s.clamp(-1.0, 1.0).asin();
        Ok([base, PI - base])
    }

    /// Best continuation of `prev` into `cands`, with its trapezoid mismatch.
    fn step(&self, prev: (f64, f64, f64), next: (f64, f64), cands: [f64; 2]) -> (f64, f64) {
        let (t0, x0, z0) = prev;
        let (t1, z1) = next;
        let dt = t1 - t0;
        let r0 = self.phase_rate(x0, z0);
        let predicted = x0 + dt * r0;
        cands
            .iter()
            .map(|&c| {
                let lifted = lift(c, predicted);
                let mismatch = (lifted - x0 - 0.5 * dt * (r0 + self.phase_rate(lifted, z1))).abs();
                (lifted, mismatch)
            })
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("two candidates")
    }
}

/// Rebuilds `x(t) = ct + X(t)/k` from samples `(t, Z, dZ/dt)`.
///
/// `anchor` optionally fixes the phase at the first sample (the branch
/// nearest to it is taken); otherwise the first branch is the one that best
/// continues into the second sample.
pub fn reconstruct_x(
    coeffs: &VelocityCoefficients,
    samples: &[(f64, f64, f64)],
    anchor: Option<f64>,
) -> Result<Vec<TrajectoryState>> {
    if coeffs.amplitude == 0.0 {
        return Err(Error::Domain(
            "phase is undefined without a wave (A = 0)".into(),
        ));
    }
    let frame = Frame {
        ka: coeffs.k * coeffs.amplitude,
        b: coeffs.shear,
        d: coeffs.relative_drift(),
    };
    let Some(&(t0, z0, r0)) = samples.first() else {
        return Ok(Vec::new());
    };
    let first = frame.candidates(t0, z0, r0)?;
    let x_first = match (anchor, samples.get(1)) {
        (Some(a), _) => first
            .iter()
            .map(|&c| lift(c, a))
            .min_by(|p, q| (p - a).abs().total_cmp(&(q - a).abs()))
            .expect("two candidates"),
        (None, None) => first[0],
        (None, Some(&(t1, z1, r1))) => {
            let next = frame.candidates(t1, z1, r1)?;
            first
                .iter()
                .map(|&c| (c, frame.step((t0, c, z0), (t1, z1), next).1))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .expect("two candidates")
                .0
        }
    };

    let mut phases = Vec::with_capacity(samples.len());
    phases.push(x_first);
    for w in samples.windows(2) {
        let (t_prev, z_prev, _) = w[0];
        let (t, z, rate) = w[1];
        let cands = frame.candidates(t, z, rate)?;
        let prev = *phases.last().expect("non-empty");
        let (phase, mismatch) = frame.step((t_prev, prev, z_prev), (t, z), cands);
        if mismatch > BRANCH_TOL {
            return Err(Error::BranchAmbiguity {
                t,
                reason: format!(
                    "no branch matches the phase equation (mismatch {mismatch:.3e} rad)"
                ),
            });
        }
        phases.push(phase);
    }
    Ok(samples
        .iter()
        .zip(phases)
        .map(|(&(t, z, _), phase)| TrajectoryState {
            t,
            x: coeffs.speed * t + phase / coeffs.k,
            z: z / coeffs.k,
        })
        .collect())
}
