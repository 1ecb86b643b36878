//! CSV and SVG writers.

use std::fs;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// 17 significant digits: enough to round-trip any `f64`.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Header plus rows, LF line endings, `.` as decimal separator.
pub fn csv_bytes(header: &[&str], rows: &[Vec<String>]) -> CliResult<Vec<u8>> {
    if let Some((i, row)) = rows
        .iter()
        .enumerate()
        .find(|(_, r)| r.len() != header.len())
    {
        return Err(CliError::Validation(format!(
            "row {i} has {} fields but the header has {}",
            row.len(),
            header.len()
        )));
    }
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    let to_err = |e: csv::Error| CliError::Validation(format!("csv encoding failed: {e}"));
    w.write_record(header).map_err(to_err)?;
    for row in rows {
        w.write_record(row).map_err(to_err)?;
    }
    w.into_inner()
        .map_err(|e| CliError::Validation(format!("csv encoding failed: {}", e.error())))
}

pub fn write_csv(header: &[&str], rows: &[Vec<String>], path: &Path) -> CliResult<()> {
    let bytes = csv_bytes(header, rows)?;
    fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

/// Standalone SVG with one polyline through `points` (`(x, z)`), `z` up.
pub fn svg_string(points: &[(f64, f64)]) -> CliResult<String> {
    if points.len() < 2 {
        return Err(CliError::Validation(format!(
            "a polyline needs at least 2 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|(x, z)| !x.is_finite() || !z.is_finite()) {
        return Err(CliError::Validation(
            "polyline contains non-finite coordinates".into(),
        ));
    }
    let (x0, z0) = points[0];
    if points.iter().all(|&p| p == (x0, z0)) {
        return Err(CliError::Validation("all polyline points coincide".into()));
    }
    let fold = |f: fn(f64, f64) -> f64, init: f64, pick: fn(&(f64, f64)) -> f64| {
        points.iter().map(pick).fold(init, f)
    };
    let (x_lo, x_hi) = (
        fold(f64::min, f64::INFINITY, |p| p.0),
        fold(f64::max, f64::NEG_INFINITY, |p| p.0),
    );
    let (z_lo, z_hi) = (
        fold(f64::min, f64::INFINITY, |p| p.1),
        fold(f64::max, f64::NEG_INFINITY, |p| p.1),
    );
    // A flat extent borrows the other axis so the margin never vanishes.
    let (w, h) = (x_hi - x_lo, z_hi - z_lo);
    let (w, h) = (
        if w > 0.0 { w } else { 0.1 * h },
        if h > 0.0 { h } else { 0.1 * w },
    );
    let (mx, mz) = (0.05 * w, 0.05 * h);
    let view = [x_lo - mx, -(z_hi + mz), w + 2.0 * mx, h + 2.0 * mz];
    let coords: Vec<String> = points.iter().map(|(x, z)| format!("{x},{}", -z)).collect();
    Ok(format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n\
         <svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\" preserveAspectRatio=\"none\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\" points=\"{}\"/>\n\
         </svg>\n",
        view[0],
        view[1],
        view[2],
        view[3],
        (800.0 * view[3] / view[2]).round().clamp(100.0, 800.0),
        coords.join(" ")
    ))
}

pub fn write_svg(points: &[(f64, f64)], path: &Path) -> CliResult<()> {
    let text = svg_string(points)?;
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only() {
        assert_eq!(csv_bytes(&["a", "b"], &[]).unwrap(), b"a,b\n");
    }

    #[test]
    fn zero_row_is_pinned() {
        let row = vec![fmt_f64(0.0); 3];
        let bytes = csv_bytes(&["x", "y", "z"], &[row]).unwrap();
        assert_eq!(
            String::from_utf8(bytes).unwrap(),
            "x,y,z\n0.0000000000000000e0,0.0000000000000000e0,0.0000000000000000e0\n"
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(csv_bytes(&["a", "b"], &[vec!["1".into()]]).is_err());
    }

    #[test]
    fn values_round_trip() {
        for x in [
            std::f64::consts::PI,
            -1.0e-300,
            4.074538490228555,
            1.0 / 3.0,
            f64::MAX,
        ] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn two_points_make_one_segment() {
        let svg = svg_string(&[(0.0, 0.0), (1.0, 2.0)]).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("points=\"0,-0 1,-2\""));
        assert!(svg.contains("viewBox=\"-0.05 -2.1 1.1 2.2\""));
    }

    #[test]
    fn flat_line_keeps_a_margin() {
        let svg = svg_string(&[(0.0, 0.4), (5.0, 0.4)]).unwrap();
        let view: Vec<f64> = svg
            .split("viewBox=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap()
            .split(' ')
            .map(|v| v.parse().unwrap())
            .collect();
        for (got, want) in view.iter().zip([-0.25, -0.425, 5.5, 0.55]) {
            assert!((got - want).abs() < 1e-12, "{svg}");
        }
    }

    #[test]
    fn degenerate_polylines() {
        assert!(matches!(
            svg_string(&[(1.0, 1.0), (1.0, 1.0)]),
            Err(CliError::Validation(_))
        ));
        assert!(svg_string(&[(1.0, 1.0)]).is_err());
    }
}
