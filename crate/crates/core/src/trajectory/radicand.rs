//! The squared height rate `F(Z) = (dZ/dt)²` and its stand-ins.

use crate::error::Result;
use crate::special_functions::sextic_coefficients;
use crate::wave_model::VelocityCoefficients;

/// A function whose positive lobes define periodic height motion.
pub trait Radicand {
    fn value(&self, z: f64) -> f64;
    fn derivative(&self, z: f64) -> f64;
}

/// `F(Z) = k²A² sinh²Z − [2β − k(C−c)Z − (B/2)Z²]²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FullRadicand {
    /// `kA`
    pub ka: f64,
    /// `k(C − c)`
    pub d: f64,
    /// `B/2`
    pub e: f64,
    pub beta: f64,
}

impl FullRadicand {
    pub fn new(coeffs: &VelocityCoefficients, beta: f64) -> Self {
        FullRadicand {
            ka: coeffs.k * coeffs.amplitude,
            d: coeffs.relative_drift(),
            e: 0.5 * coeffs.shear,
            beta,
        }
    }

    /// `2β − k(C−c)Z − (B/2)Z²`, which equals `kA cos X sinh Z` along a path.
    pub fn rhs(&self, z: f64) -> f64 {
        2.0 * self.beta - self.d * z - self.e * z * z
    }

    /// `kA sinh Z`
    pub fn lhs(&self, z: f64) -> f64 {
        self.ka * z.sinh()
    }

    pub fn second_derivative(&self, z: f64) -> f64 {
        let a = self.lhs(z);
        let a1 = self.ka * z.cosh();
        let g = self.rhs(z);
        let g1 = -self.d - 2.0 * self.e * z;
        let g2 = -2.0 * self.e;
        2.0 * a1 * a1 + 2.0 * a * a - 2.0 * g1 * g1 - 2.0 * g * g2
    }
}

impl Radicand for FullRadicand {
    fn value(&self, z: f64) -> f64 {
        let a = self.lhs(z);
        let g = self.rhs(z);
        (a.abs() - g.abs()) * (a.abs() + g.abs())
    }

    fn derivative(&self, z: f64) -> f64 {
        let g1 = -self.d - 2.0 * self.e * z;
        2.0 * self.lhs(z) * self.ka * z.cosh() - 2.0 * self.rhs(z) * g1
    }
}

/// A polynomial in `Z`, coefficients indexed by power.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialRadicand {
    pub coeffs: Vec<f64>,
}

impl PolynomialRadicand {
    /// Series truncation of [`FullRadicand`] at degree `order`.
    pub fn truncated(coeffs: &VelocityCoefficients, beta: f64, order: usize) -> Result<Self> {
        Ok(PolynomialRadicand {
            coeffs: sextic_coefficients(coeffs, beta, order)?,
        })
    }
}

impl Radicand for PolynomialRadicand {
    fn value(&self, z: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * z + c)
    }

    fn derivative(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(0.0, |acc, (i, c)| acc * z + i as f64 * c)
    }
}

/// `a²(Z − z_min)(z_max − Z)`, whose period is exactly `2π/a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicRadicand {
    pub a: f64,
    pub z_min: f64,
    pub z_max: f64,
}

impl Radicand for HarmonicRadicand {
    fn value(&self, z: f64) -> f64 {
        self.a * self.a * (z - self.z_min) * (self.z_max - z)
    }

    fn derivative(&self, z: f64) -> f64 {
        self.a * self.a * (self.z_max + self.z_min - 2.0 * z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn derivatives_match_finite_differences() {
        let coeffs = VelocityCoefficients::new(0.3, 2.0, 0.5, 1.2, 1.5);
        let full = FullRadicand::new(&coeffs, 0.4);
        let poly = PolynomialRadicand::truncated(&coeffs, 0.4, 8).unwrap();
        let h = 1e-5;
        for z in [0.1, 0.6, 1.3] {
            let fd = (full.value(z + h) - full.value(z - h)) / (2.0 * h);
            assert_relative_eq!(full.derivative(z), fd, max_relative = 1e-8);
            let fd2 = (full.derivative(z + h) - full.derivative(z - h)) / (2.0 * h);
            assert_relative_eq!(full.second_derivative(z), fd2, max_relative = 1e-8);
            let fdp = (poly.value(z + h) - poly.value(z - h)) / (2.0 * h);
            assert_relative_eq!(poly.derivative(z), fdp, max_relative = 1e-8);
        }
    }

    #[test]
    fn truncation_tracks_full_radicand_for_small_heights() {
        let coeffs = VelocityCoefficients::new(0.3, 2.0, 1.2, 1.2, 1.0);
        let full = FullRadicand::new(&coeffs, 0.4);
        let poly = PolynomialRadicand::truncated(&coeffs, 0.4, 6).unwrap();
        for z in [0.05, 0.1, 0.2] {
            let gap = (full.value(z) - poly.value(z)).abs();
            // First omitted term: 2⁷ k²A² Z⁸ / 8!
            let bound = 1.1 * 128.0 * 0.09 * z.powi(8) / 40320.0;
            assert!(gap <= bound, "z = {z}: {gap} > {bound}");
        }
    }

    #[test]
    fn flat_radicand_without_drift_or_shear() {
        let coeffs = VelocityCoefficients::new(0.7, 0.0, 2.0, 2.0, 1.0);
        let full = FullRadicand::new(&coeffs, 0.0);
        for z in [0.2, 1.0, 3.0] {
            assert_relative_eq!(
                full.value(z),
                (0.7 * z.sinh()).powi(2),
                max_relative = 1e-15
            );
            assert!(full.value(z) >= 0.0);
        }
    }
}
