//! Scalar bracketing helpers.

/// Bisects `f` on a bracket with `f(lo)` and `f(hi)` of opposite sign (or zero)
/// until the midpoint no longer moves in floating point.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    if f(hi) == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo.min(hi) || mid >= lo.max(hi) {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Walks from `from` towards `to` in steps of `step` and returns the first
/// bracket `(a, b)` with `f(a) > 0 >= f(b)`. `f(from)` is assumed positive.
pub fn march_to_nonpositive<F: Fn(f64) -> f64>(
    f: F,
    from: f64,
    to: f64,
    step: f64,
) -> Option<(f64, f64)> {
    let dir = (to - from).signum();
    let n = ((to - from).abs() / step).ceil() as usize;
    let mut prev = from;
    for i in 1..=n {
        let z = if i == n {
            to
        } else {
            from + dir * step * i as f64
        };
        if f(z) <= 0.0 {
            return Some((prev, z));
        }
        prev = z;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bisection_reaches_machine_precision() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0);
        assert!((root - 2f64.sqrt()).abs() <= 2.0 * f64::EPSILON);
        let root = bisect(|x| (x - 1.0f64).sinh(), 3.0, -1.0);
        assert!((root - 1.0).abs() <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn march_finds_first_crossing() {
        let f = |x: f64| (x * 3.0).cos();
        let (a, b) = march_to_nonpositive(f, 0.0, 10.0, 0.01).unwrap();
        assert!(f(a) > 0.0 && f(b) <= 0.0 && a < b && b - a <= 0.01 + 1e-15);
        assert!(march_to_nonpositive(|_| 1.0, 0.0, 1.0, 0.1).is_none());
        let (a, b) = march_to_nonpositive(|x| -f(x), 1.0, 0.0, 0.01).unwrap();
        assert!(a > std::f64::consts::FRAC_PI_6 && b <= std::f64::consts::FRAC_PI_6);
    }
}
