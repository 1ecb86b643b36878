//! Linear wave solutions in physical variables.
//!
//! Both linearizations (about still water and about a laminar shear flow)
//! produce a velocity field of the same shape,
//!
//! ```text
//! u = A cosh(kz) cos[k(x - ct)] + B z + C
//! v = A sinh(kz) sin[k(x - ct)]
//! ```
//!
//! and differ only in the dispersion relation, the coefficients and the
//! pressure. Everything downstream works from [`VelocityCoefficients`].

use crate::error::{Error, Result};

/// Which small-amplitude expansion the wave belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linearization {
    /// Expansion about quiescent water; vorticity scales with the amplitude.
    StillWater,
    /// Expansion about the laminar flow `u = omega0 z + alpha sqrt(g h0)`.
    ShearFlow,
}

/// Branch of the square root in the dispersion relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootSign {
    Plus,
    Minus,
}

impl RootSign {
    pub fn value(self) -> f64 {
        match self {
            RootSign::Plus => 1.0,
            RootSign::Minus => -1.0,
        }
    }
}

/// Physical inputs of the linear wave.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveParameters {
    /// Gravitational acceleration [m/s²].
    pub g: f64,
    /// Undisturbed depth [m].
    pub h0: f64,
    /// Wave number 2π/λ [1/m].
    pub k: f64,
    /// Amplitude over depth, a/h0.
    pub epsilon: f64,
    /// Constant vorticity [1/s].
    pub omega0: f64,
    /// Shear-flow surface constant (dimensionless, multiplies sqrt(g h0)).
    pub alpha: f64,
    /// Background constant entering only the uniform drift `C`.
    pub c_bg: f64,
    /// Atmospheric pressure [Pa].
    pub p0: f64,
    pub linearization: Linearization,
    pub root_sign: RootSign,
}

impl WaveParameters {
    pub const DEFAULT_P0: f64 = 101_325.0;

    pub fn new(
        g: f64,
        h0: f64,
        k: f64,
        epsilon: f64,
        omega0: f64,
        linearization: Linearization,
        root_sign: RootSign,
    ) -> Self {
        WaveParameters {
            g,
            h0,
            k,
            epsilon,
            omega0,
            alpha: 0.0,
            c_bg: 0.0,
            p0: Self::DEFAULT_P0,
            linearization,
            root_sign,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            ("g", self.g),
            ("h0", self.h0),
            ("k", self.k),
            ("epsilon", self.epsilon),
            ("omega0", self.omega0),
            ("alpha", self.alpha),
            ("c_bg", self.c_bg),
            ("p0", self.p0),
        ];
        for (name, value) in finite {
            if !value.is_finite() {
                return Err(Error::Domain(format!("{name} must be finite, got {value}")));
            }
        }
        for (name, value) in [("g", self.g), ("h0", self.h0), ("k", self.k)] {
            if value <= 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(Error::Domain(format!(
                "epsilon must lie in (0, 1) for a small-amplitude wave, got {}",
                self.epsilon
            )));
        }
        Ok(())
    }

    /// Shallow-water speed sqrt(g h0).
    pub fn long_wave_speed(&self) -> f64 {
        (self.g * self.h0).sqrt()
    }

    /// Wave speed for the configured linearization.
    pub fn wave_speed(&self) -> Result<f64> {
        match self.linearization {
            Linearization::StillWater => wave_speed_still(self),
            Linearization::ShearFlow => wave_speed_shear(self),
        }
    }

    /// Returns a copy whose background constant makes the uniform drift `C`
    /// equal to the wave speed `c`.
    pub fn with_c_equal_c(mut self) -> Result<Self> {
        self.validate()?;
        let c = self.wave_speed()?;
        let root = self.long_wave_speed();
        self.c_bg = match self.linearization {
            Linearization::StillWater => c / (self.epsilon * root),
            Linearization::ShearFlow => (c - self.alpha * root) / (self.epsilon * root),
        };
        Ok(self)
    }
}

/// The `(A, B, C, c, k)` quintuple that fixes the particle dynamics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VelocityCoefficients {
    /// `A` [m/s].
    pub amplitude: f64,
    /// `B` [1/s].
    pub shear: f64,
    /// `C` [m/s].
    pub drift: f64,
    /// `c` [m/s].
    pub speed: f64,
    /// `k` [1/m].
    pub k: f64,
}

impl VelocityCoefficients {
    pub fn new(amplitude: f64, shear: f64, drift: f64, speed: f64, k: f64) -> Self {
        VelocityCoefficients {
            amplitude,
            shear,
            drift,
            speed,
            k,
        }
    }

    /// Moving-frame phase `k(x - ct)`.
    pub fn phase(&self, x: f64, t: f64) -> f64 {
        self.k * (x - self.speed * t)
    }

    /// `k (C - c)`, the frame-relative drift rate of the phase.
    pub fn relative_drift(&self) -> f64 {
        self.k * (self.drift - self.speed)
    }

    pub fn velocity(&self, x: f64, z: f64, t: f64) -> (f64, f64) {
        velocity_field(self, x, z, t)
    }
}

/// `c = ±sqrt(g tanh(k h0) / k)`.
pub fn wave_speed_still(params: &WaveParameters) -> Result<f64> {
    check_positive(params)?;
    let magnitude = (params.g * (params.k * params.h0).tanh() / params.k).sqrt();
    Ok(params.root_sign.value() * magnitude)
}

/// Shear-flow dispersion relation:
/// `c = h0 ω0 + α sqrt(g h0) + r`, where `r` is the root of
/// `k r² + ω0 tanh(k h0) r - g tanh(k h0) = 0` selected by `root_sign`
/// (the positive root for `Plus`).
pub fn wave_speed_shear(params: &WaveParameters) -> Result<f64> {
    check_positive(params)?;
    Ok(
        params.h0 * params.omega0
            + params.alpha * params.long_wave_speed()
            + relative_speed(params),
    )
}

/// `c - h0 ω0 - α sqrt(g h0)` for the shear linearization.
fn relative_speed(params: &WaveParameters) -> f64 {
    let th = (params.k * params.h0).tanh();
    let sign = params.root_sign.value();
    if params.omega0 == 0.0 {
        return sign * (params.g * th / params.k).sqrt();
    }
    let b = params.omega0 * th;
    let disc = (b * b + 4.0 * params.g * params.k * th).sqrt();
    // Stable pair of roots: q/k and -g th / q. Their product is negative,
    // so Plus is the positive one.
    let q = -0.5 * (b + b.signum() * disc);
    let (r1, r2) = (q / params.k, -params.g * th / q);
    let (pos, neg) = if r1 > 0.0 { (r1, r2) } else { (r2, r1) };
    match params.root_sign {
        RootSign::Plus => pos,
        RootSign::Minus => neg,
    }
}

fn check_positive(params: &WaveParameters) -> Result<()> {
    for (name, value) in [("g", params.g), ("h0", params.h0), ("k", params.k)] {
        if !(value > 0.0) || !value.is_finite() {
            return Err(Error::Domain(format!(
                "{name} must be positive, got {value}"
            )));
        }
    }
    Ok(())
}

/// Velocity coefficients for either linearization.
pub fn coefficients(params: &WaveParameters) -> Result<VelocityCoefficients> {
    params.validate()?;
    let WaveParameters {
        g,
        h0,
        k,
        epsilon,
        omega0,
        alpha,
        c_bg,
        ..
    } = *params;
    let root = (g * h0).sqrt();
    let kh = k * h0;
    let coeffs = match params.linearization {
        Linearization::StillWater => {
            let c = wave_speed_still(params)?;
            VelocityCoefficients {
                amplitude: epsilon * kh * c / kh.sinh(),
                shear: epsilon * omega0,
                drift: epsilon * root * c_bg,
                speed: c,
                k,
            }
        }
        Linearization::ShearFlow => {
            let rel = relative_speed(params);
            VelocityCoefficients {
                amplitude: epsilon * kh * rel / kh.sinh(),
                shear: omega0,
                drift: alpha * root + epsilon * root * c_bg,
                speed: h0 * omega0 + alpha * root + rel,
                k,
            }
        }
    };
    Ok(coeffs)
}

pub fn velocity_field(coeffs: &VelocityCoefficients, x: f64, z: f64, t: f64) -> (f64, f64) {
    let phase = coeffs.phase(x, t);
    let kz = coeffs.k * z;
    let u = coeffs.amplitude * kz.cosh() * phase.cos() + coeffs.shear * z + coeffs.drift;
    let v = coeffs.amplitude * kz.sinh() * phase.sin();
    (u, v)
}

/// `η = ε h0 cos[k(x - ct)]`.
pub fn surface_elevation(params: &WaveParameters, c: f64, x: f64, t: f64) -> f64 {
    params.epsilon * params.h0 * (params.k * (x - c * t)).cos()
}

/// Pressure (per unit density) plus the atmospheric constant.
pub fn pressure_field(
    params: &WaveParameters,
    coeffs: &VelocityCoefficients,
    x: f64,
    z: f64,
    t: f64,
) -> f64 {
    let WaveParameters {
        g,
        h0,
        k,
        epsilon,
        omega0,
        alpha,
        p0,
        ..
    } = *params;
    let c = coeffs.speed;
    let wave = (k * (x - c * t)).cos();
    let hydrostatic = p0 + g * (h0 - z);
    match params.linearization {
        Linearization::StillWater => {
            hydrostatic + epsilon * g * h0 * (k * z).cosh() * wave / (k * h0).cosh()
        }
        Linearization::ShearFlow => {
            let root = (g * h0).sqrt();
            let rel = c - h0 * omega0 - root * alpha;
            let bracket = k * h0 * (c - omega0 * z - root * alpha) * (k * z).cosh()
                + h0 * omega0 * (k * z).sinh();
            hydrostatic + epsilon * rel / (k * h0).sinh() * bracket * wave
        }
    }
}

/// All linear fields at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub eta: f64,
    pub p: f64,
    pub u: f64,
    pub v: f64,
}

pub fn field_sample(
    params: &WaveParameters,
    coeffs: &VelocityCoefficients,
    x: f64,
    z: f64,
    t: f64,
) -> FieldSample {
    let (u, v) = velocity_field(coeffs, x, z, t);
    FieldSample {
        eta: surface_elevation(params, coeffs.speed, x, t),
        p: pressure_field(params, coeffs, x, z, t),
        u,
        v,
    }
}
