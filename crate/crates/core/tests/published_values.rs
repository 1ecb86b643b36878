mod common;

use approx::assert_relative_eq;
use common::*;
use vortexpaths_core::special_functions::{CaseTag, CubicRootsClassification};
use vortexpaths_core::trajectory::{classify_case, elliptic_reduction, CaseClass};

fn check(c: vortexpaths_core::wave_model::VelocityCoefficients, speed: f64, amp: f64, shear: f64) {
    assert_relative_eq!(c.speed, speed, max_relative = 1e-4);
    assert_relative_eq!(c.amplitude, amp, max_relative = 1e-4);
    assert_relative_eq!(c.shear, shear, max_relative = 1e-4);
}

#[test]
fn fig3_set() {
    check(fig3(), 4.07454, 0.176526, 2.0);
    assert_eq!(classify_case(&fig3(), 1.0, 6), CaseClass::Case1a);
}

#[test]
fn fig4_set() {
    check(fig4(), 4.29294, -1.33654, 20.0);
}

#[test]
fn fig5_set() {
    check(fig5(), -1.59773, -0.306137, 2.0);
}

#[test]
fn negative_vorticity_set() {
    let r = elliptic_reduction(&neg20(), 1.0).unwrap();
    let CubicRootsClassification::OneReal { z0, p, q } = r.roots else {
        panic!("{:?}", r.roots)
    };
    assert!((z0 - 0.000798).abs() < 5e-6, "{z0}");
    assert_relative_eq!(p, 9.55422, max_relative = 1e-4);
    assert_relative_eq!(q, 24.8588, max_relative = 1e-4);
    assert!((r.validity_threshold.unwrap() - 0.99968).abs() < 1e-5);
    assert_eq!(r.case, CaseTag::HyperellipticOnly);
    assert_eq!(
        classify_case(&neg20(), 1.0, 6),
        CaseClass::HyperellipticOnly
    );
}
