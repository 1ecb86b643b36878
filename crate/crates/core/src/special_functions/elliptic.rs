//! Real elliptic integral of the first kind and Jacobi elliptic functions.
//!
//! All routines take the parameter `m = k²`, never the modulus `k`.
//! Both the integral and the inverse functions use the arithmetic-geometric
//! mean: the integral by the descending Landen transformation of the
//! amplitude, the Jacobi functions by the matching ascending recurrence.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

const MAX_AGM_STEPS: usize = 64;

fn check_parameter(m: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&m) {
        return Err(Error::Domain(format!(
            "elliptic parameter m must lie in [0, 1], got {m}"
        )));
    }
    Ok(())
}

/// Arithmetic-geometric mean of two non-negative numbers.
pub fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..MAX_AGM_STEPS {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    a
}

/// Complete integral `K(m) = π / (2 AGM(1, sqrt(1 - m)))`; infinite at `m = 1`.
pub fn elliptic_k(m: f64) -> Result<f64> {
    check_parameter(m)?;
    if m == 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(PI / (2.0 * agm(1.0, (1.0 - m).sqrt())))
}

/// Incomplete integral `F(φ, m) = ∫₀^φ dθ / sqrt(1 - m sin²θ)` for any real `φ`.
pub fn elliptic_f(phi: f64, m: f64) -> Result<f64> {
    check_parameter(m)?;
    if !phi.is_finite() {
        return Err(Error::Domain(format!(
            "amplitude must be finite, got {phi}"
        )));
    }
    if m == 0.0 {
        return Ok(phi);
    }
    if m == 1.0 {
        return Ok(if phi.abs() >= FRAC_PI_2 {
            f64::INFINITY.copysign(phi)
        } else {
            phi.tan().asinh()
        });
    }
    // F(φ + jπ) = F(φ) + 2jK, reduced to φ ∈ [-π/2, π/2].
    let j = (phi / PI).round();
    let reduced = phi - j * PI;
    let base = if reduced < 0.0 {
        -landen_f(-reduced, m)
    } else {
        landen_f(reduced, m)
    };
    if j == 0.0 {
        return Ok(base);
    }
    Ok(base + 2.0 * j * elliptic_k(m)?)
}

/// Descending Landen / AGM evaluation on `φ ∈ [0, π/2]`.
fn landen_f(phi: f64, m: f64) -> f64 {
    let mut a = 1.0;
    let mut b = (1.0 - m).sqrt();
    let mut c = m.sqrt();
    let mut amp = phi;
    let mut scale = 1.0;
    for _ in 0..MAX_AGM_STEPS {
        if c.abs() <= f64::EPSILON * a {
            break;
        }
        // tan(φ_{n+1} - φ_n) = (b/a) tan φ_n, with the quadrant of φ_n kept.
        let turn = (b * amp.sin()).atan2(a * amp.cos());
        let lift = 2.0 * PI * ((amp - turn) / (2.0 * PI)).round();
        amp += turn + lift;
        c = 0.5 * (a - b);
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
        scale *= 2.0;
    }
    amp / (scale * a)
}

/// Values of the three Jacobi elliptic functions at one argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiTriple {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
}

/// `(sn, cn, dn)(u | m)` for real `u` and `m ∈ [0, 1]`.
pub fn jacobi_sn_cn_dn(u: f64, m: f64) -> Result<JacobiTriple> {
    check_parameter(m)?;
    if !u.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {u}")));
    }
    if m == 0.0 {
        return Ok(JacobiTriple {
            sn: u.sin(),
            cn: u.cos(),
            dn: 1.0,
        });
    }
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return Ok(JacobiTriple {
            sn: u.tanh(),
            cn: sech,
            dn: sech,
        });
    }

    let mut a = [0.0f64; MAX_AGM_STEPS + 1];
    let mut c = [0.0f64; MAX_AGM_STEPS + 1];
    a[0] = 1.0;
    let mut b = (1.0 - m).sqrt();
    c[0] = m.sqrt();
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n < MAX_AGM_STEPS {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut amp = (2.0f64).powi(n as i32) * a[n] * u;
    for i in (1..=n).rev() {
        amp = 0.5 * (amp + (c[i] / a[i] * amp.sin()).asin());
    }
    let (sn, cn) = amp.sin_cos();
    let dn = (1.0 - m * sn * sn).sqrt();
    Ok(JacobiTriple { sn, cn, dn })
}
