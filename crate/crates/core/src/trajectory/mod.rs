//! Particle paths: reference integration, quadrature inversion, elliptic
//! closed forms, the peakon path, phase reconstruction and drift.

mod closed_form;
mod orbit;
mod peakon;
mod pipeline;
mod radicand;
mod reconstruct;
mod reference;

pub use closed_form::{
    classify_case, closed_form_z_elliptic, elliptic_reduction, truncation_gap, CaseClass,
    TruncationGap,
};
pub use orbit::{
    invert_z_quadrature, turning_points, z_period, z_rate_squared, OrbitForm, PhaseMap, ScanRange,
    ZOrbit,
};
pub use peakon::{peakon_trajectory, PeakonSample};
pub use pipeline::{compute_trajectory, Start, TrajectoryRequest};
pub use radicand::{FullRadicand, HarmonicRadicand, PolynomialRadicand, Radicand};
pub use reconstruct::reconstruct_x;
pub use reference::{
    beta_from_initial, integrate_reference, ode_rhs, solve_reference, uniform_times,
};

use crate::error::Result;
use crate::wave_model::VelocityCoefficients;

/// Position of a particle at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryState {
    pub t: f64,
    pub x: f64,
    pub z: f64,
}

/// Co-moving variables `X = k(x − ct)`, `Z = kz`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MovingFrameState {
    pub phase: f64,
    pub height: f64,
}

impl MovingFrameState {
    pub fn from_state(coeffs: &VelocityCoefficients, state: &TrajectoryState) -> Self {
        MovingFrameState {
            phase: coeffs.phase(state.x, state.t),
            height: coeffs.k * state.z,
        }
    }
}

/// How a trajectory was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ReferenceODE,
    Quadrature,
    EllipticClosedForm,
    Peakon,
    /// `A = 0`: no wave, the particle drifts at constant speed.
    UniformDrift,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ReferenceODE => "reference_ode",
            Method::Quadrature => "quadrature",
            Method::EllipticClosedForm => "elliptic",
            Method::Peakon => "peakon",
            Method::UniformDrift => "uniform_drift",
        }
    }
}

/// Time-stamped positions plus what is known about the underlying orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub samples: Vec<TrajectoryState>,
    pub method: Method,
    pub orbit: Option<ZOrbit>,
    /// Horizontal displacement over one period of `Z` [m].
    pub drift_per_period: Option<f64>,
    /// Non-fatal remarks such as method fallbacks.
    pub notes: Vec<String>,
}

/// Net horizontal displacement per period: `cT`, plus one wavelength per
/// full turn of the phase when the orbit rotates rather than librates.
pub fn drift_per_period(coeffs: &VelocityCoefficients, orbit: &ZOrbit) -> Result<f64> {
    let period = if orbit.period > 0.0 {
        orbit.period
    } else {
        z_period(orbit)?
    };
    let turns = f64::from(orbit.winding) * 2.0 * std::f64::consts::PI / coeffs.k;
    Ok(coeffs.speed * period + turns)
}
