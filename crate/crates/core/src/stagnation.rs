//! Stagnation candidates: heights where `|kA sinh Z| = |2β − k(C−c)Z − (B/2)Z²|`,
//! and points of the velocity field where `(u, v) = (c, 0)`.

use std::f64::consts::PI;

use crate::numerics::bisect;
use crate::trajectory::{FullRadicand, Radicand, ScanRange};
use crate::wave_model::VelocityCoefficients;

/// Largest `|f|` accepted at a reported root.
const RESIDUAL_TOL: f64 = 1e-10;
/// `|dF/dZ| ≤ EQUILIBRIUM_TOL · scale` marks a double root of `F`.
const EQUILIBRIUM_TOL: f64 = 1e-6;
/// Roots closer than this (relative to the scan step) are merged.
const MERGE_FRACTION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootKind {
    /// Simple root of `F`: the height rate vanishes and reverses.
    TurningPoint,
    /// Double root of `F`: the particle sits still in the moving frame.
    Equilibrium,
}

impl RootKind {
    pub fn name(self) -> &'static str {
        match self {
            RootKind::TurningPoint => "turning_point",
            RootKind::Equilibrium => "equilibrium",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StagnationRoot {
    /// Dimensionless height `Z = kz`.
    pub z: f64,
    /// `|f(Z)|` at the returned location.
    pub residual: f64,
    pub kind: RootKind,
    /// `dF/dZ` at the root.
    pub f_derivative: f64,
    /// Phase `X ∈ {0, π}` with `cos X = sign(rhs / kA sinh Z)`; zero on the bed.
    pub phase: f64,
}

/// `f(Z) = |kA sinh Z| − |2β − k(C−c)Z − (B/2)Z²|`.
pub fn stagnation_residual(z: f64, beta: f64, coeffs: &VelocityCoefficients) -> f64 {
    let r = FullRadicand::new(coeffs, beta);
    r.lhs(z).abs() - r.rhs(z).abs()
}

fn residual_slope(r: &FullRadicand, z: f64) -> f64 {
    let a = r.lhs(z);
    let g = r.rhs(z);
    let g1 = -r.d - 2.0 * r.e * z;
    a.signum() * r.ka * z.cosh() - g.signum() * g1
}

/// Roots of `f` on `[lo, hi]`: sign changes on a uniform grid are bisected;
/// local minima of `|f|` without a sign change are polished on the zero of
/// `f'` and kept when `|f| ≤ accept` there.
pub(crate) fn scan_roots<F, D>(f: F, df: D, lo: f64, hi: f64, n: usize, accept: f64) -> Vec<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let step = (hi - lo) / n as f64;
    let grid: Vec<f64> = (0..=n)
        .map(|i| if i == n { hi } else { lo + step * i as f64 })
        .collect();
    let vals: Vec<f64> = grid.iter().map(|&z| f(z)).collect();
    let mut roots = Vec::new();
    for i in 0..=n {
        if vals[i] == 0.0 {
            roots.push(grid[i]);
            continue;
        }
        if i < n && vals[i + 1] != 0.0 && (vals[i] > 0.0) != (vals[i + 1] > 0.0) {
            roots.push(bisect(&f, grid[i], grid[i + 1]));
        }
        // Tangential approach: |f| dips without crossing.
        if i > 0 && i < n {
            let (l, m, r) = (vals[i - 1], vals[i], vals[i + 1]);
            let same_sign =
                (l > 0.0) == (m > 0.0) && (m > 0.0) == (r > 0.0) && l != 0.0 && r != 0.0;
            if same_sign && m.abs() <= l.abs() && m.abs() <= r.abs() {
                let (a, b) = (grid[i - 1], grid[i + 1]);
                let z = if (df(a) > 0.0) != (df(b) > 0.0) {
                    bisect(&df, a, b)
                } else {
                    grid[i]
                };
                if f(z).abs() <= accept {
                    roots.push(z);
                }
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= MERGE_FRACTION * step.abs());
    roots
}

fn classify(r: &FullRadicand, z: f64) -> StagnationRoot {
    let a = r.lhs(z);
    let g = r.rhs(z);
    let g1 = -r.d - 2.0 * r.e * z;
    let f_derivative = r.derivative(z);
    let scale = (a.abs() * (r.ka * z.cosh()).abs() + g.abs() * g1.abs()).max(1.0);
    let kind = if f_derivative.abs() <= EQUILIBRIUM_TOL * scale {
        RootKind::Equilibrium
    } else {
        RootKind::TurningPoint
    };
    let phase = if a != 0.0 && g / a < 0.0 { PI } else { 0.0 };
    StagnationRoot {
        z,
        residual: (a.abs() - g.abs()).abs(),
        kind,
        f_derivative,
        phase,
    }
}

fn roots_between(
    coeffs: &VelocityCoefficients,
    beta: f64,
    lo: f64,
    hi: f64,
    n: usize,
) -> Vec<StagnationRoot> {
    let r = FullRadicand::new(coeffs, beta);
    scan_roots(
        |z| r.lhs(z).abs() - r.rhs(z).abs(),
        |z| residual_slope(&r, z),
        lo,
        hi,
        n,
        RESIDUAL_TOL,
    )
    .into_iter()
    .map(|z| classify(&r, z))
    .filter(|root| root.residual <= RESIDUAL_TOL)
    .collect()
}

/// Zeros of `f` on `[0, Z_hi]`, each tagged as a turning point or an equilibrium.
pub fn find_z_stagnation(
    beta: f64,
    coeffs: &VelocityCoefficients,
    scan: ScanRange,
) -> Vec<StagnationRoot> {
    roots_between(coeffs, beta, 0.0, scan.z_hi, scan.n_scan)
}

/// Half-width beyond which `|kA sinh Z|` outgrows `|2β| + |k(C−c)||Z| + |B/2|Z²`
/// together with its first two derivatives, so no root lies further out.
fn dominance_span(r: &FullRadicand) -> Option<f64> {
    if r.ka == 0.0 {
        return None;
    }
    let ka = r.ka.abs();
    let (b0, b1, b2) = (2.0 * r.beta.abs(), r.d.abs(), r.e.abs());
    let mut s: f64 = 1.0;
    while s < 700.0 {
        if ka * s.sinh() > b0 + b1 * s + b2 * s * s
            && ka * s.cosh() > b1 + 2.0 * b2 * s
            && ka * s.sinh() > 2.0 * b2
        {
            return Some(s);
        }
        s *= 1.5;
    }
    None
}

/// Every real solution of `|kA sinh Z| = |2β − k(C−c)Z − (B/2)Z²|`, negative
/// heights included, as read off the two curves. Empty when `A = 0`.
pub fn graphical_solutions(
    coeffs: &VelocityCoefficients,
    beta: f64,
    n_scan: usize,
) -> Vec<StagnationRoot> {
    let r = FullRadicand::new(coeffs, beta);
    let Some(span) = dominance_span(&r) else {
        return Vec::new();
    };
    roots_between(coeffs, beta, -span, span, n_scan.max(256))
}

/// A stagnation point of the velocity field in the wave frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldStagnation {
    /// `X = k(x − ct)`, either 0 or π.
    pub phase: f64,
    /// Height above the bed [m].
    pub z: f64,
}

/// Points off the bed where `v = 0` (`sin X = 0`) and
/// `u − c = ±A cosh(kz) + Bz + C − c = 0`, for `0 < z ≤ z_hi`.
pub fn field_stagnation(coeffs: &VelocityCoefficients, z_hi: f64) -> Vec<FieldStagnation> {
    if !(z_hi > 0.0) {
        return Vec::new();
    }
    let k = coeffs.k;
    let mut out = Vec::new();
    for (phase, sign) in [(0.0, 1.0), (PI, -1.0)] {
        let h = |z: f64| {
            sign * coeffs.amplitude * (k * z).cosh() + coeffs.shear * z + coeffs.drift
                - coeffs.speed
        };
        let dh = |z: f64| sign * coeffs.amplitude * k * (k * z).sinh() + coeffs.shear;
        let scale = (coeffs.amplitude.abs() + coeffs.drift.abs() + coeffs.speed.abs()).max(1.0);
        for z in scan_roots(h, dh, 0.0, z_hi, ScanRange::DEFAULT_NODES, 1e-12 * scale) {
            if z > 0.0 {
                out.push(FieldStagnation { phase, z });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn scan() -> ScanRange {
        ScanRange::new(6.0, 4096).unwrap()
    }

    #[test]
    fn bed_root_when_beta_vanishes() {
        let c = VelocityCoefficients::new(0.7, 0.0, 2.0, 2.0, 1.0);
        assert_eq!(stagnation_residual(0.0, 0.0, &c), 0.0);
        let roots = find_z_stagnation(0.0, &c, scan());
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].z, 0.0);
    }

    #[test]
    fn arcsinh_root() {
        let c = VelocityCoefficients::new(1.0, 0.0, 3.0, 3.0, 1.0);
        let roots = find_z_stagnation(0.5, &c, scan());
        assert_eq!(roots.len(), 1);
        assert!((roots[0].z - 1f64.asinh()).abs() < 1e-9);
        assert_relative_eq!(roots[0].z, 0.881374, max_relative = 1e-6);
        assert_eq!(roots[0].kind, RootKind::TurningPoint);
    }

    #[test]
    fn flat_current_gives_one_positive_root() {
        for (a, beta) in [(0.3, 0.2), (-1.7, 2.0), (0.05, -0.4)] {
            let c = VelocityCoefficients::new(a, 0.0, 1.0, 1.0, 2.0);
            let roots = find_z_stagnation(beta, &c, ScanRange::new(12.0, 4096).unwrap());
            assert_eq!(roots.len(), 1, "A = {a}, β = {beta}");
        }
    }

    #[test]
    fn field_example() {
        let c = VelocityCoefficients::new(0.5, 2.0, 1.0, 1.0, 1.0);
        let pts = field_stagnation(&c, 3.0);
        let trough: Vec<_> = pts.iter().filter(|p| p.phase == PI).collect();
        assert_eq!(trough.len(), 1);
        // 2z = 0.5 cosh z; mpmath: 0.258392365...
        assert!((trough[0].z - 0.2583923655).abs() < 1e-9);
        assert!(pts.iter().all(|p| p.phase == PI));
    }

    #[test]
    fn positive_branch_has_no_root() {
        let c = VelocityCoefficients::new(0.5, 1.0, 2.0, 1.5, 1.0);
        assert!(field_stagnation(&c, 5.0).iter().all(|p| p.phase == PI));
    }

    #[test]
    fn tangential_root_is_an_equilibrium() {
        let c = VelocityCoefficients::new(0.5, 2.0, 1.0, 1.0, 1.0);
        let p = field_stagnation(&c, 3.0)[0];
        let z = c.k * p.z;
        let r = FullRadicand::new(&c, 0.0);
        let beta = 0.5 * (-r.lhs(z) + r.d * z + r.e * z * z);
        let roots = find_z_stagnation(beta, &c, scan());
        let eq: Vec<_> = roots
            .iter()
            .filter(|s| s.kind == RootKind::Equilibrium)
            .collect();
        assert_eq!(eq.len(), 1, "{roots:?}");
        assert!((eq[0].z - z).abs() < 1e-8);
        assert_eq!(eq[0].phase, PI);
        for s in &roots {
            assert!(s.residual <= 1e-10);
        }
    }

    #[test]
    fn graphical_count_is_even_off_the_bed() {
        let c = VelocityCoefficients::new(0.2, 2.0, 4.07, 4.07, 1.0);
        let n = graphical_solutions(&c, 1.0, 8192).len();
        assert!(n.is_multiple_of(2) && n >= 2, "{n}");
        assert!(graphical_solutions(
            &VelocityCoefficients::new(0.0, 1.0, 0.0, 1.0, 1.0),
            1.0,
            8192
        )
        .is_empty());
    }
}
