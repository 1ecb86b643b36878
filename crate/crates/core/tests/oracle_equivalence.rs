//! Quadrature inversion against adaptive Runge-Kutta from interior starts.

mod common;

use std::f64::consts::FRAC_PI_2;

use common::*;
use vortexpaths_core::trajectory::{
    beta_from_initial, compute_trajectory, Method, Start, TrajectoryRequest, ZOrbit,
};
use vortexpaths_core::wave_model::VelocityCoefficients;

fn compare(c: &VelocityCoefficients, x0: f64, z0: f64) {
    let beta = beta_from_initial(c, c.phase(x0, 0.0), c.k * z0);
    let orbit = ZOrbit::new(c, beta, Some(c.k * z0), scan()).unwrap();
    let t_end = 3.0 * orbit.period;
    let req = |method| TrajectoryRequest {
        start: Start::Initial { x0, z0, sign: 1.0 },
        t_end,
        n_samples: 3000,
        method: Some(method),
        tol: 1e-12,
        scan: scan(),
    };
    let quad = compute_trajectory(c, &req(Method::Quadrature)).unwrap();
    let ode = compute_trajectory(c, &req(Method::ReferenceODE)).unwrap();
    let (mut dz, mut dx) = (0.0f64, 0.0f64);
    for (q, r) in quad.samples.iter().zip(&ode.samples) {
        dz = dz.max((q.z - r.z).abs());
        dx = dx.max((q.x - r.x).abs());
    }
    assert!(dz <= 1e-6, "z deviation {dz}");
    assert!(dx <= 1e-5, "x deviation {dx}");
}

#[test]
fn fig3_interior_start() {
    compare(&fig3(), FRAC_PI_2, 2f64.sqrt());
}

#[test]
fn fig5_interior_start() {
    let c = fig5();
    compare(&c, FRAC_PI_2 / c.k, 2f64.sqrt());
}

#[test]
fn trapped_orbits() {
    compare(&fig3(), std::f64::consts::PI, 0.12);
    compare(&fig5(), 0.0, 0.2);
}
