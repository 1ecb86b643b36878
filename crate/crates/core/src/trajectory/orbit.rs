//! Bounded height orbits: turning points, period and quadrature inversion.

use std::f64::consts::PI;
use std::num::NonZeroUsize;

use gauss_quad::legendre::GaussLegendre;

use super::radicand::{FullRadicand, PolynomialRadicand, Radicand};
use crate::error::{Error, Result};
use crate::numerics::{bisect, march_to_nonpositive};
use crate::wave_model::{VelocityCoefficients, WaveParameters};

/// Height interval `(0, z_hi]` searched for roots, and its resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanRange {
    pub z_hi: f64,
    pub n_scan: usize,
}

impl ScanRange {
    pub const DEFAULT_NODES: usize = 4096;

    pub fn new(z_hi: f64, n_scan: usize) -> Result<Self> {
        if !(z_hi > 0.0) || !z_hi.is_finite() {
            return Err(Error::Domain(format!(
                "scan limit must be positive, got {z_hi}"
            )));
        }
        if n_scan < 256 {
            return Err(Error::Domain(format!(
                "scan needs at least 256 nodes, got {n_scan}"
            )));
        }
        Ok(ScanRange { z_hi, n_scan })
    }

    /// `k h0 (1 + ε) + 2`, a little above the linearised water column.
    pub fn for_params(params: &WaveParameters) -> Self {
        ScanRange {
            z_hi: params.k * params.h0 * (1.0 + params.epsilon) + 2.0,
            n_scan: Self::DEFAULT_NODES,
        }
    }

    fn step(&self) -> f64 {
        self.z_hi / self.n_scan as f64
    }
}

/// Which radicand an orbit was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitForm {
    /// The exact `sinh²` radicand.
    Full,
    /// Series truncated at the given even degree.
    Truncated(usize),
}

/// One bounded lobe of the height equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZOrbit {
    pub beta: f64,
    pub z_min: f64,
    pub z_max: f64,
    /// Period `T` of `Z(t)` [s].
    pub period: f64,
    pub coeffs: VelocityCoefficients,
    /// Net turns of the phase `X` per period: 0 when it librates, ±1 when it rotates.
    pub winding: i8,
    pub form: OrbitForm,
}

impl ZOrbit {
    /// Builds the orbit through `z_start` (or the first bounded lobe) of the full radicand.
    pub fn new(
        coeffs: &VelocityCoefficients,
        beta: f64,
        z_start: Option<f64>,
        scan: ScanRange,
    ) -> Result<Self> {
        let radicand = FullRadicand::new(coeffs, beta);
        let (z_min, z_max) = bracket_lobe(&radicand, z_start, scan)?;
        let period = PhaseMap::new(radicand, z_min, z_max)?.period();
        Ok(ZOrbit {
            beta,
            z_min,
            z_max,
            period,
            coeffs: *coeffs,
            winding: winding(coeffs, beta, z_min, z_max),
            form: OrbitForm::Full,
        })
    }

    /// Same, for the series truncation of the radicand at degree `order`.
    pub fn truncated(
        coeffs: &VelocityCoefficients,
        beta: f64,
        order: usize,
        z_start: Option<f64>,
        scan: ScanRange,
    ) -> Result<Self> {
        let radicand = PolynomialRadicand::truncated(coeffs, beta, order)?;
        let (z_min, z_max) = bracket_lobe(&radicand, z_start, scan)?;
        let period = PhaseMap::new(radicand, z_min, z_max)?.period();
        Ok(ZOrbit {
            beta,
            z_min,
            z_max,
            period,
            coeffs: *coeffs,
            winding: winding(coeffs, beta, z_min, z_max),
            form: OrbitForm::Truncated(order),
        })
    }

    /// Quadrature map for this orbit's radicand.
    pub fn phase_map(&self) -> Result<PhaseMap<Box<dyn Radicand + Send + Sync>>> {
        let radicand: Box<dyn Radicand + Send + Sync> = match self.form {
            OrbitForm::Full => Box::new(FullRadicand::new(&self.coeffs, self.beta)),
            OrbitForm::Truncated(order) => Box::new(PolynomialRadicand::truncated(
                &self.coeffs,
                self.beta,
                order,
            )?),
        };
        PhaseMap::new(radicand, self.z_min, self.z_max)
    }

    pub fn is_librating(&self) -> bool {
        self.winding == 0
    }
}

impl<R: Radicand + ?Sized> Radicand for Box<R> {
    fn value(&self, z: f64) -> f64 {
        (**self).value(z)
    }
    fn derivative(&self, z: f64) -> f64 {
        (**self).derivative(z)
    }
}

/// Phase turns per period. At a turning point `sin X = 0`, so `cos X` is the
/// sign of `2β − k(C−c)Z − (B/2)Z²` over `kA`; equal signs at both ends mean libration.
fn winding(coeffs: &VelocityCoefficients, beta: f64, z_min: f64, z_max: f64) -> i8 {
    let full = FullRadicand::new(coeffs, beta);
    if full.ka == 0.0 {
        return 0;
    }
    let cos_lo = (full.rhs(z_min) / full.ka).signum();
    let cos_hi = (full.rhs(z_max) / full.ka).signum();
    if cos_lo == cos_hi {
        return 0;
    }
    let rate = full.ka * z_min.cosh() * cos_lo + coeffs.shear * z_min + full.d;
    rate.signum() as i8
}

/// `F(Z) = k²A² sinh²Z − [2β − k(C−c)Z − (B/2)Z²]²`, or its truncation.
pub fn z_rate_squared(z: f64, orbit: &ZOrbit) -> Result<f64> {
    Ok(match orbit.form {
        OrbitForm::Full => FullRadicand::new(&orbit.coeffs, orbit.beta).value(z),
        OrbitForm::Truncated(order) => {
            PolynomialRadicand::truncated(&orbit.coeffs, orbit.beta, order)?.value(z)
        }
    })
}

/// Turning points of the full radicand around `z_start` (or of its first bounded lobe).
pub fn turning_points(
    coeffs: &VelocityCoefficients,
    beta: f64,
    z_start: Option<f64>,
    scan: ScanRange,
) -> Result<(f64, f64)> {
    bracket_lobe(&FullRadicand::new(coeffs, beta), z_start, scan)
}

/// `T = 2∫ dZ/√F` between the turning points.
pub fn z_period(orbit: &ZOrbit) -> Result<f64> {
    Ok(orbit.phase_map()?.period())
}

fn zero_tolerance<R: Radicand + ?Sized>(r: &R, z: f64) -> (f64, f64) {
    // Scale of the cancelling terms, estimated from the derivative size.
    let scale = r.value(z).abs().max(1.0);
    let slope = r.derivative(z).abs().max(1.0);
    (1e-12 * scale, 1e-9 * slope)
}

/// First point next to `z` (towards `dir`) where `r` is positive.
fn step_off<R: Radicand + ?Sized>(r: &R, z: f64, dir: f64, step: f64) -> Option<f64> {
    (0..48)
        .map(|j| z + dir * step * 0.5f64.powi(j))
        .find(|&p| p > 0.0 && r.value(p) > 0.0)
}

pub(crate) fn bracket_lobe<R: Radicand + ?Sized>(
    r: &R,
    z_start: Option<f64>,
    scan: ScanRange,
) -> Result<(f64, f64)> {
    let step = scan.step();
    let f = |z: f64| r.value(z);
    let root = |(inside, outside): (f64, f64)| bisect(f, inside, outside);

    let (z_min, z_max) = match z_start {
        Some(z0) => {
            if !(z0 > 0.0) {
                return Err(Error::Domain(format!(
                    "start height must be positive, got {z0}"
                )));
            }
            let value = f(z0);
            let (tol_value, tol_slope) = zero_tolerance(r, z0);
            if value > tol_value {
                let lower = march_to_nonpositive(f, z0, 0.0, step)
                    .ok_or_else(|| Error::NoOrbit("no lower turning point".into()))?;
                let upper = march_to_nonpositive(f, z0, scan.z_hi, step).ok_or_else(|| {
                    Error::NoOrbit(format!(
                        "height grows without a turning point below Z = {}",
                        scan.z_hi
                    ))
                })?;
                (root(lower), root(upper))
            } else if value >= -tol_value {
                let slope = r.derivative(z0);
                if slope.abs() <= tol_slope {
                    return Err(Error::NoOrbit(format!("start Z = {z0} is an equilibrium")));
                }
                let dir = slope.signum();
                let inside = step_off(r, z0, dir, step)
                    .ok_or_else(|| Error::NoOrbit(format!("no allowed motion next to Z = {z0}")))?;
                let limit = if dir > 0.0 { scan.z_hi } else { 0.0 };
                let far = march_to_nonpositive(f, inside, limit, step).ok_or_else(|| {
                    Error::NoOrbit(format!("no second turning point from Z = {z0}"))
                })?;
                let other = root(far);
                if dir > 0.0 {
                    (z0, other)
                } else {
                    (other, z0)
                }
            } else {
                return Err(Error::NoOrbit(format!(
                    "radicand is negative ({value:e}) at the start Z = {z0}"
                )));
            }
        }
        None => {
            let first = (1..=scan.n_scan)
                .map(|i| i as f64 * step)
                .find(|&z| f(z) > 0.0)
                .ok_or_else(|| {
                    Error::NoOrbit("radicand is nowhere positive in the scan range".into())
                })?;
            let lower = march_to_nonpositive(f, first, 0.0, step)
                .expect("the scan passed a non-positive node");
            let upper = march_to_nonpositive(f, first, scan.z_hi, step).ok_or_else(|| {
                Error::NoOrbit("first positive lobe is unbounded in the scan range".into())
            })?;
            (root(lower), root(upper))
        }
    };
    if z_min <= 1e-12 {
        return Err(Error::NoOrbit("the orbit reaches the bed".into()));
    }
    Ok((z_min, z_max))
}

const PANEL_TOL: f64 = 1e-14;
const MAX_PANEL_DEPTH: u32 = 12;

/// Monotone map between elapsed time and height on the rising half of an orbit.
///
/// With `Z = mid − half·cos φ`, the time from `z_min` is
/// `τ(φ) = ∫₀^φ half·sin ψ / √F dψ`, whose integrand stays finite at simple roots.
pub struct PhaseMap<R: Radicand> {
    radicand: R,
    mid: f64,
    half: f64,
    slope_lo: f64,
    slope_hi: f64,
    /// Below this distance from either end `F` is dominated by rounding of `Z`.
    phi_cut: f64,
    /// `(φ_lo, φ_hi, τ(φ_lo))`
    panels: Vec<(f64, f64, f64)>,
    half_period: f64,
    fine: GaussLegendre,
}

impl<R: Radicand> PhaseMap<R> {
    pub fn new(radicand: R, z_min: f64, z_max: f64) -> Result<Self> {
        if !(z_max > z_min) {
            return Err(Error::NoOrbit(format!("empty orbit [{z_min}, {z_max}]")));
        }
        let fine = GaussLegendre::new(NonZeroUsize::new(64).unwrap());
        let coarse = GaussLegendre::new(NonZeroUsize::new(32).unwrap());
        let mut map = PhaseMap {
            slope_lo: radicand.derivative(z_min).abs(),
            slope_hi: radicand.derivative(z_max).abs(),
            radicand,
            mid: 0.5 * (z_min + z_max),
            half: 0.5 * (z_max - z_min),
            // Balances the O(φ²) error of the endpoint limit against the
            // O(ε z / (half φ²)) rounding of the radicand.
            phi_cut: (f64::EPSILON * z_max.abs().max(z_min.abs()) / (0.5 * (z_max - z_min)))
                .powf(0.25),
            panels: Vec::new(),
            half_period: 0.0,
            fine,
        };

        const START_PANELS: usize = 8;
        let width = PI / START_PANELS as f64;
        let mut stack: Vec<(f64, f64, u32)> = (0..START_PANELS)
            .rev()
            .map(|i| (i as f64 * width, (i + 1) as f64 * width, 0))
            .collect();
        let rough_total: f64 = stack
            .iter()
            .map(|&(lo, hi, _)| map.fine.integrate(lo, hi, |p| map.integrand(p)))
            .sum();
        let mut tau = 0.0;
        while let Some((lo, hi, depth)) = stack.pop() {
            let accurate = map.fine.integrate(lo, hi, |p| map.integrand(p));
            let rough = coarse.integrate(lo, hi, |p| map.integrand(p));
            if !accurate.is_finite() {
                return Err(Error::NoOrbit("radicand vanishes inside the orbit".into()));
            }
            if (accurate - rough).abs() > PANEL_TOL * rough_total.abs() && depth < MAX_PANEL_DEPTH {
                let mid = 0.5 * (lo + hi);
                stack.push((mid, hi, depth + 1));
                stack.push((lo, mid, depth + 1));
                continue;
            }
            map.panels.push((lo, hi, tau));
            tau += accurate;
        }
        map.half_period = tau;
        Ok(map)
    }

    fn integrand(&self, phi: f64) -> f64 {
        let (s, c) = phi.sin_cos();
        let near_end = phi < self.phi_cut || PI - phi < self.phi_cut;
        let value = if near_end {
            0.0
        } else {
            self.radicand.value(self.mid - self.half * c)
        };
        if value > 0.0 {
            return self.half * s / value.sqrt();
        }
        // Next to a simple root: the limit half·sinφ/√(|F'| half (1 − cos φ)).
        let slope = if c > 0.0 {
            self.slope_lo
        } else {
            self.slope_hi
        };
        (2.0 * self.half / slope).sqrt()
    }

    pub fn z_min(&self) -> f64 {
        self.mid - self.half
    }

    pub fn z_max(&self) -> f64 {
        self.mid + self.half
    }

    pub fn period(&self) -> f64 {
        2.0 * self.half_period
    }

    /// Number of quadrature panels used.
    pub fn panel_count(&self) -> usize {
        self.panels.len()
    }

    fn panel_of_phi(&self, phi: f64) -> usize {
        self.panels
            .partition_point(|p| p.1 < phi)
            .min(self.panels.len() - 1)
    }

    fn tau_in_panel(&self, idx: usize, phi: f64) -> f64 {
        let (lo, _, tau_lo) = self.panels[idx];
        tau_lo + self.fine.integrate(lo, phi, |p| self.integrand(p))
    }

    /// Time to rise from `z_min` to `z`.
    pub fn rise_time(&self, z: f64) -> f64 {
        let phi = ((self.mid - z) / self.half).clamp(-1.0, 1.0).acos();
        self.tau_in_panel(self.panel_of_phi(phi), phi)
    }

    /// Angle `φ` reached after rising for time `tau ∈ [0, T/2]`.
    fn phi_at(&self, tau: f64) -> f64 {
        let tau = tau.clamp(0.0, self.half_period);
        let idx = self
            .panels
            .partition_point(|p| p.2 <= tau)
            .saturating_sub(1);
        let (mut lo, mut hi, tau_lo) = self.panels[idx];
        let tau_hi = self.panels.get(idx + 1).map_or(self.half_period, |p| p.2);
        let mut phi = lo + (hi - lo) * ((tau - tau_lo) / (tau_hi - tau_lo)).clamp(0.0, 1.0);
        for _ in 0..60 {
            let residual = self.tau_in_panel(idx, phi) - tau;
            if residual == 0.0 {
                break;
            }
            if residual > 0.0 {
                hi = phi;
            } else {
                lo = phi;
            }
            let newton = phi - residual / self.integrand(phi);
            let next = if newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            if (next - phi).abs() <= 4.0 * f64::EPSILON * phi.abs().max(1.0) {
                phi = next;
                break;
            }
            phi = next;
        }
        phi
    }

    /// Height and its rate after time `sigma` on the orbit, with `sigma = 0`
    /// at `z_min` and the orbit rising first.
    pub fn state_at_phase(&self, sigma: f64) -> (f64, f64) {
        let period = self.period();
        let sigma = sigma.rem_euclid(period);
        let (tau, sign) = if sigma <= self.half_period {
            (sigma, 1.0)
        } else {
            (period - sigma, -1.0)
        };
        let z = self.mid - self.half * self.phi_at(tau).cos();
        (z, sign * self.radicand.value(z).max(0.0).sqrt())
    }

    /// Orbit phase of a point at height `z` moving with the sign of `rate`.
    pub fn phase_of(&self, z: f64, rate_sign: f64) -> f64 {
        let tau = self.rise_time(z);
        if rate_sign >= 0.0 {
            tau
        } else {
            self.period() - tau
        }
    }
}

/// `Z(t)` and `dZ/dt` at `times` (with `t = 0` at `z0`), obtained by inverting
/// the quadrature and reflecting at the turning points.
pub fn invert_z_quadrature(
    orbit: &ZOrbit,
    z0: f64,
    sign0: f64,
    times: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let tol = 1e-9 * (orbit.z_max - orbit.z_min);
    if z0 < orbit.z_min - tol || z0 > orbit.z_max + tol {
        return Err(Error::Domain(format!(
            "start Z = {z0} lies outside [{}, {}]",
            orbit.z_min, orbit.z_max
        )));
    }
    let map = orbit.phase_map()?;
    let sigma0 = map.phase_of(z0, sign0);
    Ok(times
        .iter()
        .map(|&t| map.state_at_phase(sigma0 + t))
        .collect())
}
