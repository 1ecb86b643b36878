//! Dormand–Prince 5(4) with embedded error control and continuous output.

use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// Difference between the 5th- and 4th-order weights.
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

// Continuous extension (Hairer, Nørsett & Wanner).
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

/// One accepted step with its interpolation coefficients.
#[derive(Debug, Clone)]
struct Segment<const N: usize> {
    t0: f64,
    h: f64,
    r: [[f64; N]; 5],
}

impl<const N: usize> Segment<N> {
    fn eval(&self, t: f64) -> [f64; N] {
        let theta = (t - self.t0) / self.h;
        let theta1 = 1.0 - theta;
        std::array::from_fn(|i| {
            let r = &self.r;
            r[0][i] + theta * (r[1][i] + theta1 * (r[2][i] + theta * (r[3][i] + theta1 * r[4][i])))
        })
    }
}

/// Piecewise-polynomial solution on `[t_start, t_end]`.
#[derive(Debug, Clone)]
pub struct DenseSolution<const N: usize> {
    segments: Vec<Segment<N>>,
    t_start: f64,
    t_end: f64,
    y_start: [f64; N],
}

impl<const N: usize> DenseSolution<N> {
    pub fn t_start(&self) -> f64 {
        self.t_start
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    /// Number of accepted steps.
    pub fn steps(&self) -> usize {
        self.segments.len()
    }

    /// State at `t`, clamped to the integration interval.
    pub fn eval(&self, t: f64) -> [f64; N] {
        if self.segments.is_empty() {
            return self.y_start;
        }
        let t = t.clamp(self.t_start, self.t_end);
        let idx = self
            .segments
            .partition_point(|s| s.t0 + s.h < t)
            .min(self.segments.len() - 1);
        self.segments[idx].eval(t)
    }
}

fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    std::array::from_fn(|i| y[i] + h * terms.iter().map(|(a, k)| a * k[i]).sum::<f64>())
}

/// Integrates `y' = f(t, y)` from `t0` to `t_end` (forward only) with mixed
/// absolute/relative tolerance `tol`.
pub fn dopri5<const N: usize, F>(
    f: F,
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    tol: f64,
) -> Result<DenseSolution<N>>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    if !(t_end >= t0) {
        return Err(Error::Domain(format!(
            "integration end {t_end} precedes start {t0}"
        )));
    }
    let mut solution = DenseSolution {
        segments: Vec::new(),
        t_start: t0,
        t_end,
        y_start: y0,
    };
    if t_end == t0 {
        return Ok(solution);
    }

    let err_norm = |y: &[f64; N], y_new: &[f64; N], err: &[f64; N]| -> f64 {
        let sum: f64 = (0..N)
            .map(|i| {
                let sc = tol + tol * y[i].abs().max(y_new[i].abs());
                (err[i] / sc).powi(2)
            })
            .sum();
        (sum / N as f64).sqrt()
    };

    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    // Initial step from the usual two-norm heuristic.
    let d0 = err_norm(&y, &y, &y).max(1e-5);
    let d1 = err_norm(&y, &y, &k1).max(1e-5);
    let mut h = (0.01 * d0 / d1).min(t_end - t0);
    let mut fac_old: f64 = 1e-4;

    while t < t_end {
        if h < 1e-14 * t.abs().max(1.0) {
            return Err(Error::StepSizeUnderflow { t });
        }
        let last = t + h >= t_end;
        if last {
            h = t_end - t;
        }
        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(
            t + C4 * h,
            &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = f(
            t + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = f(
            t + h,
            &axpy(
                &y,
                h,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let y_new = axpy(
            &y,
            h,
            &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)],
        );
        let k7 = f(t + h, &y_new);
        let err: [f64; N] = std::array::from_fn(|i| {
            h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i])
        });
        let e = err_norm(&y, &y_new, &err);
        if !e.is_finite() {
            h *= 0.1;
            continue;
        }

        if e <= 1.0 {
            // Lund stabilisation as in DOPRI5.
            let fac = (e.powf(0.17) / fac_old.powf(0.04) / 0.9).clamp(0.1, 5.0);
            fac_old = e.max(1e-4);
            let r: [[f64; N]; 5] = {
                let ydiff: [f64; N] = std::array::from_fn(|i| y_new[i] - y[i]);
                let bspl: [f64; N] = std::array::from_fn(|i| h * k1[i] - ydiff[i]);
                [
                    y,
                    ydiff,
                    bspl,
                    std::array::from_fn(|i| ydiff[i] - h * k7[i] - bspl[i]),
                    std::array::from_fn(|i| {
                        h * (D1 * k1[i]
                            + D3 * k3[i]
                            + D4 * k4[i]
                            + D5 * k5[i]
                            + D6 * k6[i]
                            + D7 * k7[i])
                    }),
                ]
            };
            solution.segments.push(Segment { t0: t, h, r });
            t = if last { t_end } else { t + h };
            y = y_new;
            k1 = k7;
            h /= fac;
        } else {
            h /= (e.powf(0.17) / 0.9).min(10.0);
        }
    }
    Ok(solution)
}
