//! Direct numerical integration of the particle equations.

use super::{Method, Trajectory, TrajectoryState};
use crate::error::{Error, Result};
use crate::numerics::{dopri5, DenseSolution};
use crate::wave_model::{velocity_field, VelocityCoefficients};

/// `(dx/dt, dz/dt)`: the particle moves with the fluid.
pub fn ode_rhs(coeffs: &VelocityCoefficients, state: &TrajectoryState) -> (f64, f64) {
    velocity_field(coeffs, state.x, state.z, state.t)
}

/// Orbit constant making `F(Z0) = (kA sinh Z0 sin X0)²` at the start:
/// `β = [kA cos X0 sinh Z0 + k(C−c)Z0 + (B/2)Z0²] / 2`.
pub fn beta_from_initial(coeffs: &VelocityCoefficients, phase0: f64, height0: f64) -> f64 {
    let ka = coeffs.k * coeffs.amplitude;
    0.5 * (ka * phase0.cos() * height0.sinh()
        + coeffs.relative_drift() * height0
        + 0.5 * coeffs.shear * height0 * height0)
}

fn check_tolerance(tol: f64) -> Result<()> {
    if !(1e-12..=1e-6).contains(&tol) {
        return Err(Error::Domain(format!(
            "tolerance must lie in [1e-12, 1e-6], got {tol}"
        )));
    }
    Ok(())
}

/// Continuous solution of the particle equations from `init` to `t_end`.
pub fn solve_reference(
    coeffs: &VelocityCoefficients,
    init: &TrajectoryState,
    t_end: f64,
    tol: f64,
) -> Result<DenseSolution<2>> {
    check_tolerance(tol)?;
    let c = *coeffs;
    dopri5(
        move |t, y: &[f64; 2]| {
            let (u, v) = velocity_field(&c, y[0], y[1], t);
            [u, v]
        },
        init.t,
        [init.x, init.z],
        t_end,
        tol,
    )
}

/// Reference trajectory sampled at `times` (each within `[init.t, t_end]`).
pub fn integrate_reference(
    coeffs: &VelocityCoefficients,
    init: &TrajectoryState,
    t_end: f64,
    tol: f64,
    times: &[f64],
) -> Result<Trajectory> {
    if let Some(&bad) = times.iter().find(|&&t| t < init.t || t > t_end) {
        return Err(Error::Domain(format!(
            "sample time {bad} lies outside [{}, {t_end}]",
            init.t
        )));
    }
    let solution = solve_reference(coeffs, init, t_end, tol)?;
    let samples = times
        .iter()
        .map(|&t| {
            let [x, z] = solution.eval(t);
            TrajectoryState { t, x, z }
        })
        .collect();
    Ok(Trajectory {
        samples,
        method: Method::ReferenceODE,
        orbit: None,
        drift_per_period: None,
        notes: Vec::new(),
    })
}

/// `n` equally spaced times covering `[t0, t_end]`, both ends included.
pub fn uniform_times(t0: f64, t_end: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![t0],
        _ => {
            let dt = (t_end - t0) / (n - 1) as f64;
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        t_end
                    } else {
                        t0 + dt * i as f64
                    }
                })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::{FullRadicand, Radicand};
    use approx::assert_relative_eq;
    use std::f64::consts::FRAC_PI_2;

    fn fig3() -> VelocityCoefficients {
        VelocityCoefficients::new(
            0.17652624090657,
            2.0,
            4.074538490228555,
            4.074538490228555,
            1.0,
        )
    }

    #[test]
    fn rhs_examples() {
        let c = fig3();
        let (_, w) = ode_rhs(
            &c,
            &TrajectoryState {
                t: 0.3,
                x: 1.0,
                z: 0.0,
            },
        );
        assert_eq!(w, 0.0);
        // Phase π/2: cos vanishes.
        let x = FRAC_PI_2 / c.k + c.speed * 0.7;
        let (u, _) = ode_rhs(&c, &TrajectoryState { t: 0.7, x, z: 0.4 });
        assert_relative_eq!(u, c.shear * 0.4 + c.drift, epsilon = 1e-15);
        let (u, v) = ode_rhs(
            &c,
            &TrajectoryState {
                t: 0.0,
                x: 0.0,
                z: 0.5,
            },
        );
        assert_relative_eq!(u - c.drift, 1.1990555727865262, max_relative = 1e-14);
        assert_eq!(v, 0.0);
    }

    #[test]
    fn beta_examples() {
        let c = fig3();
        assert_eq!(beta_from_initial(&c, 0.3, 0.0), 0.0);
        let d = c.relative_drift();
        assert_relative_eq!(
            beta_from_initial(&c, FRAC_PI_2, 0.5),
            0.5 * (d * 0.5 + 0.5 * 2.0 * 0.25),
            max_relative = 1e-12
        );
        let beta = beta_from_initial(&c, 0.0, 0.5);
        assert!(FullRadicand::new(&c, beta).value(0.5).abs() < 1e-15);
    }

    #[test]
    fn no_wave_is_a_straight_line() {
        let c = VelocityCoefficients::new(0.0, 1.5, 0.2, 3.0, 1.0);
        let init = TrajectoryState {
            t: 0.0,
            x: 0.3,
            z: 0.4,
        };
        let traj =
            integrate_reference(&c, &init, 5.0, 1e-10, &uniform_times(0.0, 5.0, 11)).unwrap();
        for s in &traj.samples {
            assert!((s.x - (0.3 + (1.5 * 0.4 + 0.2) * s.t)).abs() < 1e-9);
            assert_eq!(s.z, 0.4);
        }
    }

    #[test]
    fn invariant_is_conserved() {
        let c = fig3();
        let init = TrajectoryState {
            t: 0.0,
            x: 0.0,
            z: 0.5,
        };
        let sol = solve_reference(&c, &init, 10.0, 1e-11).unwrap();
        let beta = beta_from_initial(&c, 0.0, 0.5);
        let rad = FullRadicand::new(&c, beta);
        for i in 0..=100 {
            let t = 0.1 * i as f64;
            let [x, z] = sol.eval(t);
            let (_, w) = velocity_field(&c, x, z, t);
            let zdot = c.k * w;
            assert!((rad.value(c.k * z) - zdot * zdot).abs() < 1e-6, "t = {t}");
        }
    }

    #[test]
    fn times_and_tolerance_checks() {
        assert_eq!(uniform_times(0.0, 1.0, 3), vec![0.0, 0.5, 1.0]);
        assert!(uniform_times(0.0, 1.0, 0).is_empty());
        let init = TrajectoryState {
            t: 0.0,
            x: 0.0,
            z: 0.5,
        };
        assert!(integrate_reference(&fig3(), &init, 1.0, 1e-3, &[0.5]).is_err());
        assert!(integrate_reference(&fig3(), &init, 1.0, 1e-9, &[1.5]).is_err());
    }
}
