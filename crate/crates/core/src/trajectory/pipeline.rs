//! Method selection and assembly of complete trajectories.

use std::f64::consts::PI;

use super::closed_form::{classify_case, closed_form_z_elliptic, elliptic_reduction, CaseClass};
use super::orbit::{invert_z_quadrature, ScanRange, ZOrbit};
use super::peakon::peakon_trajectory;
use super::radicand::FullRadicand;
use super::reconstruct::reconstruct_x;
use super::reference::{beta_from_initial, integrate_reference, uniform_times};
use super::{drift_per_period, Method, Trajectory, TrajectoryState};
use crate::error::{Error, Result};
use crate::special_functions::{CaseTag, CubicRootsClassification};
use crate::wave_model::VelocityCoefficients;

/// Where the particle starts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Start {
    /// Physical position at `t = 0`; `sign` picks the side of the asymptote for the peakon path.
    Initial { x0: f64, z0: f64, sign: f64 },
    /// Orbit constant only: the particle starts at the lowest point of the first bounded lobe.
    Beta { beta: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryRequest {
    pub start: Start,
    pub t_end: f64,
    pub n_samples: usize,
    /// `None` selects the method automatically.
    pub method: Option<Method>,
    /// Tolerance of the reference integrator.
    pub tol: f64,
    pub scan: ScanRange,
}

/// Resolved start in the moving frame.
struct Anchor {
    beta: f64,
    phase: f64,
    height: f64,
    rate_sign: f64,
}

fn anchor_from_initial(coeffs: &VelocityCoefficients, x0: f64, z0: f64) -> Anchor {
    let phase = coeffs.phase(x0, 0.0);
    let height = coeffs.k * z0;
    let rate = coeffs.k * coeffs.amplitude * height.sinh() * phase.sin();
    Anchor {
        beta: beta_from_initial(coeffs, phase, height),
        phase,
        height,
        rate_sign: rate.signum(),
    }
}

/// Phase at a turning point: `cos X = ±1` follows the sign of `2β − k(C−c)Z − (B/2)Z²` over `kA`.
fn turning_phase(coeffs: &VelocityCoefficients, beta: f64, height: f64) -> f64 {
    let r = FullRadicand::new(coeffs, beta);
    if r.rhs(height) / r.ka >= 0.0 {
        0.0
    } else {
        PI
    }
}

/// Builds the trajectory described by `request`.
pub fn compute_trajectory(
    coeffs: &VelocityCoefficients,
    request: &TrajectoryRequest,
) -> Result<Trajectory> {
    if !(request.t_end > 0.0) {
        return Err(Error::Domain(format!(
            "t_end must be positive, got {}",
            request.t_end
        )));
    }
    if request.n_samples < 2 {
        return Err(Error::Domain(format!(
            "need at least two samples, got {}",
            request.n_samples
        )));
    }
    let times = uniform_times(0.0, request.t_end, request.n_samples);
    match request.method {
        Some(method) => run(coeffs, request, method, &times),
        None => auto(coeffs, request, &times),
    }
}

fn auto(
    coeffs: &VelocityCoefficients,
    request: &TrajectoryRequest,
    times: &[f64],
) -> Result<Trajectory> {
    if coeffs.amplitude == 0.0 {
        return run(coeffs, request, Method::UniformDrift, times);
    }
    match request.start {
        Start::Beta { beta } => {
            let class = classify_case(coeffs, beta, 6);
            if matches!(
                class,
                CaseClass::Case1a | CaseClass::Case1b | CaseClass::Case2
            ) {
                match run(coeffs, request, Method::EllipticClosedForm, times) {
                    Err(Error::OutOfValidityWindow {
                        t,
                        value,
                        threshold,
                    }) => {
                        let mut traj = run(coeffs, request, Method::Quadrature, times)?;
                        traj.notes.push(format!(
                            "elliptic form leaves its validity window at t = {t} ({value} vs {threshold}); used quadrature"
                        ));
                        Ok(traj)
                    }
                    other => other,
                }
            } else {
                run(coeffs, request, Method::Quadrature, times)
            }
        }
        Start::Initial { .. } => match run(coeffs, request, Method::Quadrature, times) {
            Err(err @ (Error::NoOrbit(_) | Error::BranchAmbiguity { .. })) => {
                let mut traj = run(coeffs, request, Method::ReferenceODE, times)?;
                traj.notes.push(format!(
                    "quadrature unavailable ({err}); used the reference integrator"
                ));
                Ok(traj)
            }
            other => other,
        },
    }
}

fn with_orbit(
    mut traj: Trajectory,
    coeffs: &VelocityCoefficients,
    orbit: ZOrbit,
) -> Result<Trajectory> {
    traj.drift_per_period = Some(drift_per_period(coeffs, &orbit)?);
    traj.orbit = Some(orbit);
    Ok(traj)
}

fn run(
    coeffs: &VelocityCoefficients,
    request: &TrajectoryRequest,
    method: Method,
    times: &[f64],
) -> Result<Trajectory> {
    let k = coeffs.k;
    match method {
        Method::UniformDrift => {
            let Start::Initial { x0, z0, .. } = request.start else {
                return Err(Error::Precondition(
                    "uniform drift needs an initial position".into(),
                ));
            };
            if coeffs.amplitude != 0.0 {
                return Err(Error::Precondition("uniform drift requires A = 0".into()));
            }
            let u = coeffs.shear * z0 + coeffs.drift;
            let samples = times
                .iter()
                .map(|&t| TrajectoryState {
                    t,
                    x: x0 + u * t,
                    z: z0,
                })
                .collect();
            Ok(Trajectory {
                samples,
                method,
                orbit: None,
                drift_per_period: None,
                notes: Vec::new(),
            })
        }
        Method::ReferenceODE => {
            let (x0, z0, anchor) = match request.start {
                Start::Initial { x0, z0, .. } => (x0, z0, anchor_from_initial(coeffs, x0, z0)),
                Start::Beta { beta } => {
                    let orbit = ZOrbit::new(coeffs, beta, None, request.scan)?;
                    let phase = turning_phase(coeffs, beta, orbit.z_min);
                    let a = Anchor {
                        beta,
                        phase,
                        height: orbit.z_min,
                        rate_sign: 1.0,
                    };
                    (phase / k, orbit.z_min / k, a)
                }
            };
            let init = TrajectoryState {
                t: 0.0,
                x: x0,
                z: z0,
            };
            let traj = integrate_reference(coeffs, &init, request.t_end, request.tol, times)?;
            match ZOrbit::new(coeffs, anchor.beta, Some(anchor.height), request.scan) {
                Ok(orbit) if coeffs.amplitude != 0.0 => with_orbit(traj, coeffs, orbit),
                _ => Ok(traj),
            }
        }
        Method::Quadrature => {
            let (anchor, orbit) = match request.start {
                Start::Initial { x0, z0, .. } => {
                    let a = anchor_from_initial(coeffs, x0, z0);
                    let orbit = ZOrbit::new(coeffs, a.beta, Some(a.height), request.scan)?;
                    (a, orbit)
                }
                Start::Beta { beta } => {
                    let orbit = ZOrbit::new(coeffs, beta, None, request.scan)?;
                    let phase = turning_phase(coeffs, beta, orbit.z_min);
                    (
                        Anchor {
                            beta,
                            phase,
                            height: orbit.z_min,
                            rate_sign: 1.0,
                        },
                        orbit,
                    )
                }
            };
            let heights = invert_z_quadrature(&orbit, anchor.height, anchor.rate_sign, times)?;
            let samples: Vec<(f64, f64, f64)> = times
                .iter()
                .zip(heights)
                .map(|(&t, (z, r))| (t, z, r))
                .collect();
            let samples = reconstruct_x(coeffs, &samples, Some(anchor.phase))?;
            let traj = Trajectory {
                samples,
                method,
                orbit: None,
                drift_per_period: None,
                notes: Vec::new(),
            };
            with_orbit(traj, coeffs, orbit)
        }
        Method::EllipticClosedForm => {
            let Start::Beta { beta } = request.start else {
                return Err(Error::Unsupported(
                    "the elliptic form starts at a turning point; give the orbit constant beta"
                        .into(),
                ));
            };
            let reduction = elliptic_reduction(coeffs, beta)?;
            if reduction.case == CaseTag::HyperellipticOnly {
                return Err(Error::Unsupported(
                    "no usable elliptic form for this orbit".into(),
                ));
            }
            let mut samples = Vec::with_capacity(times.len());
            for &t in times {
                let (z, rate) = closed_form_z_elliptic(t, &reduction)?;
                samples.push((t, z, rate));
            }
            let z_start = samples[0].1;
            let phase = turning_phase(coeffs, beta, z_start);
            let samples = reconstruct_x(coeffs, &samples, Some(phase))?;
            let mut traj = Trajectory {
                samples,
                method,
                orbit: None,
                drift_per_period: None,
                notes: Vec::new(),
            };
            if let CubicRootsClassification::ThreeReal { z2, z3, .. } = reduction.roots {
                if reduction.case == CaseTag::Case1a {
                    let mid = 0.5 * (z2.powf(-0.5) + z3.powf(-0.5));
                    traj = with_orbit(
                        traj,
                        coeffs,
                        ZOrbit::truncated(coeffs, beta, 6, Some(mid), request.scan)?,
                    )?;
                }
            }
            traj.notes
                .push("elliptic form solves the order-6 truncation of the height equation".into());
            Ok(traj)
        }
        Method::Peakon => {
            let Start::Initial { x0, z0, sign } = request.start else {
                return Err(Error::Precondition(
                    "the peakon path needs an initial position".into(),
                ));
            };
            if !(z0 > 0.0) {
                return Err(Error::Domain(format!(
                    "peakon start height must be positive, got {z0}"
                )));
            }
            // |s0| from z0; rising (sign ≥ 0) needs sign(s0) = −sign(kA).
            let magnitude = -(k * z0 / 2.0).tanh().ln();
            let rising = if sign >= 0.0 { 1.0 } else { -1.0 };
            let const2 = -rising * coeffs.amplitude.signum() * magnitude;
            let samples = times
                .iter()
                .map(|&t| peakon_trajectory(coeffs, x0, const2, t, false).map(|p| p.state))
                .collect::<Result<Vec<_>>>()?;
            Ok(Trajectory {
                samples,
                method,
                orbit: None,
                drift_per_period: None,
                notes: Vec::new(),
            })
        }
    }
}
