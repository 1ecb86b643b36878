//! Jacobi closed form against direct quadrature of the same truncated equation.

mod common;

use common::*;
use vortexpaths_core::special_functions::CubicRootsClassification;
use vortexpaths_core::trajectory::{
    closed_form_z_elliptic, elliptic_reduction, invert_z_quadrature, truncation_gap, ZOrbit,
};

#[test]
fn case1a_over_one_period() {
    for c in [fig3(), fig5()] {
        let r = elliptic_reduction(&c, 1.0).unwrap();
        let CubicRootsClassification::ThreeReal { z2, z3, .. } = r.roots else {
            unreachable!()
        };
        let mid = 0.5 * (z2.powf(-0.5) + z3.powf(-0.5));
        let orbit = ZOrbit::truncated(&c, 1.0, 6, Some(mid), scan()).unwrap();
        let times: Vec<f64> = (0..=400).map(|i| orbit.period * i as f64 / 400.0).collect();
        let quad = invert_z_quadrature(&orbit, orbit.z_min, 1.0, &times).unwrap();
        let mut worst = 0.0f64;
        for (&t, (zq, _)) in times.iter().zip(quad) {
            let (ze, _) = closed_form_z_elliptic(t, &r).unwrap();
            worst = worst.max((ze - zq).abs());
        }
        assert!(worst <= 1e-8, "deviation {worst}");
    }
}

#[test]
fn truncation_error_is_visible_but_small() {
    let gap = truncation_gap(&fig3(), 1.0, scan()).unwrap();
    assert!(gap.period_gap != 0.0);
    assert!(gap.period_gap.abs() / gap.full.period < 0.05);
}
