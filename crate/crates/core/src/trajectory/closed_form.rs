//! Jacobi-elliptic solutions of the truncated height equation.

use super::orbit::{ScanRange, ZOrbit};
use crate::error::{Error, Result};
use crate::special_functions::{
    reduce_case1a, reduce_case1b_or_case2, reduction_cubic, solve_cubic_real, CaseTag,
    CubicRootsClassification, EllipticReduction,
};
use crate::wave_model::VelocityCoefficients;

/// Outcome of [`classify_case`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseClass {
    Case1a,
    Case1b,
    Case2,
    HyperellipticOnly,
    /// `β = 0`, `A = 0` or a repeated root of the cubic.
    Degenerate,
}

impl CaseClass {
    pub fn name(self) -> &'static str {
        match self {
            CaseClass::Case1a => "Case1a",
            CaseClass::Case1b => "Case1b",
            CaseClass::Case2 => "Case2",
            CaseClass::HyperellipticOnly => "HyperellipticOnly",
            CaseClass::Degenerate => "Degenerate",
        }
    }
}

impl From<CaseTag> for CaseClass {
    fn from(tag: CaseTag) -> Self {
        match tag {
            CaseTag::Case1a => CaseClass::Case1a,
            CaseTag::Case1b => CaseClass::Case1b,
            CaseTag::Case2 => CaseClass::Case2,
            CaseTag::HyperellipticOnly => CaseClass::HyperellipticOnly,
        }
    }
}

/// Cubic in `Ẑ = 1/Z²`, its roots, and the matching Legendre reduction.
///
/// Fails with `Precondition` unless `C = c`, `Degenerate` on repeated roots and
/// `Unsupported` when the root pattern has no elliptic form.
pub fn elliptic_reduction(coeffs: &VelocityCoefficients, beta: f64) -> Result<EllipticReduction> {
    let [c3, c2, c1, c0] = reduction_cubic(coeffs, beta)?;
    let roots = solve_cubic_real(c3, c2, c1, c0)?;
    match roots {
        CubicRootsClassification::ThreeReal { z1, .. } if z1 > 0.0 => reduce_case1a(&roots, beta),
        CubicRootsClassification::ThreeReal { z2, z3, .. } if z2 < 0.0 && z3 > 0.0 => {
            reduce_case1b_or_case2(&roots, beta)
        }
        CubicRootsClassification::OneReal { z0, .. } if z0 > 0.0 => {
            reduce_case1b_or_case2(&roots, beta)
        }
        _ => Err(Error::Unsupported(format!(
            "no elliptic form for the root pattern {roots:?}"
        ))),
    }
}

/// Which solution route the order-`order` truncation admits.
pub fn classify_case(coeffs: &VelocityCoefficients, beta: f64, order: usize) -> CaseClass {
    if beta == 0.0 || coeffs.amplitude == 0.0 {
        return CaseClass::Degenerate;
    }
    if order != 6 {
        return CaseClass::HyperellipticOnly;
    }
    match elliptic_reduction(coeffs, beta) {
        Ok(r) => r.case.into(),
        Err(Error::Degenerate(_)) => CaseClass::Degenerate,
        Err(_) => CaseClass::HyperellipticOnly,
    }
}

/// `Z(t)` and `dZ/dt` from the Jacobi-function solution, with `t = 0` at the
/// root `Ẑ₃` (Case 1a/1b) or `Ẑ₀` (Case 2), where `Z` is smallest.
pub fn closed_form_z_elliptic(t: f64, reduction: &EllipticReduction) -> Result<(f64, f64)> {
    if reduction.case == CaseTag::HyperellipticOnly {
        return Err(Error::Unsupported(
            "no usable elliptic form for this orbit".into(),
        ));
    }
    let (hat, rate, test) = reduction.hat_at(t)?;
    if let Some(threshold) = reduction.validity_threshold {
        let inside_first_window = match reduction.argument_window()? {
            Some(u) => (reduction.scale * t).abs() < u,
            None => true,
        };
        let holds = match reduction.case {
            CaseTag::Case1b => test < threshold,
            _ => test > threshold,
        };
        if !(holds && inside_first_window && hat > 0.0) {
            return Err(Error::OutOfValidityWindow {
                t,
                value: test,
                threshold,
            });
        }
    }
    let z = hat.powf(-0.5);
    Ok((z, -0.5 * rate * z * z * z))
}

/// Full and truncated orbits side by side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationGap {
    pub full: ZOrbit,
    pub truncated: ZOrbit,
    pub period_gap: f64,
    pub z_min_gap: f64,
    pub z_max_gap: f64,
}

/// How far the order-6 truncation moves the turning points and the period.
pub fn truncation_gap(
    coeffs: &VelocityCoefficients,
    beta: f64,
    scan: ScanRange,
) -> Result<TruncationGap> {
    let truncated = ZOrbit::truncated(coeffs, beta, 6, None, scan)?;
    let mid = 0.5 * (truncated.z_min + truncated.z_max);
    let full = ZOrbit::new(coeffs, beta, Some(mid), scan)?;
    Ok(TruncationGap {
        full,
        truncated,
        period_gap: full.period - truncated.period,
        z_min_gap: full.z_min - truncated.z_min,
        z_max_gap: full.z_max - truncated.z_max,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special_functions::elliptic_k;
    use crate::wave_model::{coefficients, Linearization, RootSign, WaveParameters};
    use approx::assert_relative_eq;

    fn preset(omega0: f64, sign: RootSign) -> VelocityCoefficients {
        let params =
            WaveParameters::new(9.8, 1.0, 1.0, 0.1, omega0, Linearization::ShearFlow, sign)
                .with_c_equal_c()
                .unwrap();
        coefficients(&params).unwrap()
    }

    #[test]
    fn published_classifications() {
        assert_eq!(
            classify_case(&preset(2.0, RootSign::Plus), 1.0, 6),
            CaseClass::Case1a
        );
        assert_eq!(
            classify_case(&preset(20.0, RootSign::Minus), 1.0, 6),
            CaseClass::Case1a
        );
        assert_eq!(
            classify_case(&preset(2.0, RootSign::Minus), 1.0, 6),
            CaseClass::Case1a
        );
        assert_eq!(
            classify_case(&preset(-20.0, RootSign::Plus), 1.0, 6),
            CaseClass::HyperellipticOnly
        );
    }

    #[test]
    fn classification_short_circuits() {
        let c = preset(2.0, RootSign::Plus);
        assert_eq!(classify_case(&c, 0.0, 6), CaseClass::Degenerate);
        assert_eq!(classify_case(&c, 1.0, 8), CaseClass::HyperellipticOnly);
        let shifted = VelocityCoefficients {
            drift: c.drift + 0.5,
            ..c
        };
        assert_eq!(
            classify_case(&shifted, 1.0, 6),
            CaseClass::HyperellipticOnly
        );
    }

    #[test]
    fn classification_is_scale_invariant() {
        let c = preset(2.0, RootSign::Plus);
        for lambda in [0.3, 2.0, 7.5] {
            let scaled = VelocityCoefficients {
                amplitude: lambda * c.amplitude,
                shear: lambda * c.shear,
                drift: lambda * c.drift,
                speed: lambda * c.speed,
                k: c.k,
            };
            assert_eq!(classify_case(&scaled, lambda, 6), CaseClass::Case1a);
        }
    }

    #[test]
    fn start_values() {
        let c = preset(2.0, RootSign::Plus);
        let r = elliptic_reduction(&c, 1.0).unwrap();
        let CubicRootsClassification::ThreeReal { z2, z3, .. } = r.roots else {
            unreachable!()
        };
        let (z, rate) = closed_form_z_elliptic(0.0, &r).unwrap();
        assert_relative_eq!(z, z3.powf(-0.5), max_relative = 1e-15);
        assert_eq!(rate, 0.0);
        // Half a period later Z reaches 1/√z2.
        let half = elliptic_k(r.modulus_sq).unwrap() / r.scale;
        let (z, _) = closed_form_z_elliptic(half, &r).unwrap();
        assert_relative_eq!(z, z2.powf(-0.5), max_relative = 1e-12);
        assert_relative_eq!(2.0 * half, 2.22959386386171, max_relative = 1e-10);
    }

    #[test]
    fn case2_start_and_window() {
        let roots = CubicRootsClassification::OneReal {
            z0: 1.0,
            p: 0.0,
            q: 1.0,
        };
        let r = reduce_case1b_or_case2(&roots, 1.0).unwrap();
        let (z, _) = closed_form_z_elliptic(0.0, &r).unwrap();
        assert_eq!(z, 1.0);
        let window = r.time_window().unwrap().unwrap();
        assert!(closed_form_z_elliptic(0.9 * window, &r).is_ok());
        assert!(matches!(
            closed_form_z_elliptic(1.01 * window, &r),
            Err(Error::OutOfValidityWindow { .. })
        ));
        let neg20 = elliptic_reduction(&preset(-20.0, RootSign::Plus), 1.0).unwrap();
        assert!(matches!(
            closed_form_z_elliptic(0.0, &neg20),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn case1b_window() {
        let roots = CubicRootsClassification::ThreeReal {
            z1: -2.0,
            z2: -1.0,
            z3: 3.0,
        };
        let r = reduce_case1b_or_case2(&roots, 1.0).unwrap();
        let window = r.time_window().unwrap().unwrap();
        let (z, _) = closed_form_z_elliptic(0.5 * window, &r).unwrap();
        assert!(z > 3f64.powf(-0.5));
        assert!(matches!(
            closed_form_z_elliptic(-1.2 * window, &r),
            Err(Error::OutOfValidityWindow { .. })
        ));
    }

    #[test]
    fn closed_form_solves_the_truncated_equation() {
        // (dZ/dt)² must equal the order-6 polynomial at every time.
        let c = preset(2.0, RootSign::Minus);
        let r = elliptic_reduction(&c, 1.0).unwrap();
        let poly = crate::special_functions::sextic_coefficients(&c, 1.0, 6).unwrap();
        for i in 0..40 {
            let t = 0.05 * i as f64;
            let (z, rate) = closed_form_z_elliptic(t, &r).unwrap();
            let p: f64 = poly
                .iter()
                .enumerate()
                .map(|(n, a)| a * z.powi(n as i32))
                .sum();
            assert!((rate * rate - p).abs() < 1e-10, "t = {t}");
        }
    }

    #[test]
    fn truncation_moves_the_orbit_slightly() {
        let c = preset(2.0, RootSign::Plus);
        let gap = truncation_gap(&c, 1.0, ScanRange::new(4.2, 4096).unwrap()).unwrap();
        assert!(gap.period_gap.abs() < 0.05 * gap.full.period);
        assert!(gap.z_max_gap.abs() < 0.05);
        assert_relative_eq!(gap.truncated.period, 2.22959386386171, max_relative = 1e-9);
    }
}
