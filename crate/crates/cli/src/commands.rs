//! Subcommand bodies.

use std::path::PathBuf;

use log::{info, warn};
use vortexpaths_core::special_functions::CubicRootsClassification;
use vortexpaths_core::stagnation::find_z_stagnation;
use vortexpaths_core::trajectory::{
    beta_from_initial, classify_case, compute_trajectory, elliptic_reduction, uniform_times, Start,
    Trajectory, TrajectoryRequest,
};
use vortexpaths_core::wave_model::{
    coefficients, field_sample, velocity_field, VelocityCoefficients,
};

use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{fmt_f64, write_csv, write_svg};
use crate::presets::{Preset, Published};

pub fn output_path(prefix: &str, suffix: &str) -> PathBuf {
    PathBuf::from(format!("{prefix}_{suffix}"))
}

/// `c, A, B, C` as `name = value` lines.
pub fn speed(cfg: &RunConfig) -> CliResult<String> {
    let c = coefficients(&cfg.params)?;
    Ok(format!(
        "c = {}\nA = {}\nB = {}\nC = {}\n",
        fmt_f64(c.speed),
        fmt_f64(c.amplitude),
        fmt_f64(c.shear),
        fmt_f64(c.drift)
    ))
}

/// `(x, z, u, v, p, eta)` over one wavelength and the undisturbed depth.
pub fn field(cfg: &RunConfig, prefix: &str) -> CliResult<PathBuf> {
    let c = coefficients(&cfg.params)?;
    let xs = uniform_times(0.0, 2.0 * std::f64::consts::PI / cfg.params.k, cfg.field.nx);
    let zs = uniform_times(0.0, cfg.params.h0, cfg.field.nz);
    let mut rows = Vec::with_capacity(xs.len() * zs.len());
    for &z in &zs {
        for &x in &xs {
            let s = field_sample(&cfg.params, &c, x, z, cfg.field.t);
            rows.push(vec![
                fmt_f64(x),
                fmt_f64(z),
                fmt_f64(s.u),
                fmt_f64(s.v),
                fmt_f64(s.p),
                fmt_f64(s.eta),
            ]);
        }
    }
    let path = output_path(prefix, "field.csv");
    write_csv(&["x", "z", "u", "v", "p", "eta"], &rows, &path)?;
    Ok(path)
}

fn start(cfg: &RunConfig) -> CliResult<Start> {
    match (cfg.beta, cfg.initial) {
        (Some(beta), _) => Ok(Start::Beta { beta }),
        (None, Some(i)) => Ok(Start::Initial {
            x0: i.x0,
            z0: i.z0,
            sign: i.sign,
        }),
        (None, None) => Err(CliError::Validation(
            "a trajectory needs either beta or initial".into(),
        )),
    }
}

pub fn solve(cfg: &RunConfig) -> CliResult<(VelocityCoefficients, Trajectory)> {
    let c = coefficients(&cfg.params)?;
    let request = TrajectoryRequest {
        start: start(cfg)?,
        t_end: cfg.t_end,
        n_samples: cfg.n_samples,
        method: cfg.method.method(),
        tol: cfg.tol,
        scan: cfg.scan,
    };
    let traj = compute_trajectory(&c, &request)?;
    for note in &traj.notes {
        // Fallback notes end in "; used <method>".
        if note.contains("; used ") {
            warn!("{note}");
        } else {
            info!("{note}");
        }
    }
    info!("trajectory by {}", traj.method.name());
    if let (Some(orbit), Some(drift)) = (traj.orbit, traj.drift_per_period) {
        info!(
            "height period {} s, drift per period {} m",
            orbit.period, drift
        );
    }
    Ok((c, traj))
}

/// Writes `(t, x, z, u, v, X, Z, method)` and, if asked, the `(x, z)` polyline.
pub fn trajectory(cfg: &RunConfig, prefix: &str, svg: bool) -> CliResult<Vec<PathBuf>> {
    let (c, traj) = solve(cfg)?;
    let method = traj.method.name();
    let rows: Vec<Vec<String>> = traj
        .samples
        .iter()
        .map(|s| {
            let (u, v) = velocity_field(&c, s.x, s.z, s.t);
            vec![
                fmt_f64(s.t),
                fmt_f64(s.x),
                fmt_f64(s.z),
                fmt_f64(u),
                fmt_f64(v),
                fmt_f64(c.phase(s.x, s.t)),
                fmt_f64(c.k * s.z),
                method.to_string(),
            ]
        })
        .collect();
    let csv_path = output_path(prefix, "trajectory.csv");
    write_csv(
        &["t", "x", "z", "u", "v", "X", "Z", "method"],
        &rows,
        &csv_path,
    )?;
    let mut written = vec![csv_path];
    if svg {
        let path = output_path(prefix, "trajectory.svg");
        let points: Vec<(f64, f64)> = traj.samples.iter().map(|s| (s.x, s.z)).collect();
        write_svg(&points, &path)?;
        written.push(path);
    }
    Ok(written)
}

/// Roots of the stagnation equation for the configured orbit constant.
pub fn stagnation(cfg: &RunConfig, prefix: &str) -> CliResult<PathBuf> {
    let c = coefficients(&cfg.params)?;
    let beta = match (cfg.beta, cfg.initial) {
        (Some(beta), _) => beta,
        (None, Some(i)) => beta_from_initial(&c, c.phase(i.x0, 0.0), c.k * i.z0),
        (None, None) => {
            return Err(CliError::Validation(
                "stagnation needs either beta or initial".into(),
            ))
        }
    };
    let rows: Vec<Vec<String>> = find_z_stagnation(beta, &c, cfg.scan)
        .iter()
        .map(|r| {
            vec![
                fmt_f64(r.z),
                fmt_f64(r.z / c.k),
                r.kind.name().to_string(),
                fmt_f64(r.residual),
                fmt_f64(r.phase),
                fmt_f64(r.f_derivative),
            ]
        })
        .collect();
    info!("{} stagnation roots for beta = {beta}", rows.len());
    let path = output_path(prefix, "stagnation.csv");
    write_csv(&["Z", "z", "kind", "residual", "X", "dF_dZ"], &rows, &path)?;
    Ok(path)
}

/// One line of the reproduction summary.
#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub quantity: &'static str,
    pub computed: String,
    pub published: String,
    pub error: String,
    pub pass: bool,
}

/// Computed values next to the printed ones.
pub fn summary(cfg: &RunConfig, preset: Preset) -> CliResult<Vec<SummaryRow>> {
    let c = coefficients(&cfg.params)?;
    let beta = cfg.beta.unwrap_or(1.0);
    let reduction = elliptic_reduction(&c, beta);
    let roots = reduction.as_ref().ok().map(|r| r.roots);
    let number = |name: &str| -> Option<f64> {
        match (name, roots) {
            ("c", _) => Some(c.speed),
            ("A", _) => Some(c.amplitude),
            ("B", _) => Some(c.shear),
            ("Z0_hat", Some(CubicRootsClassification::OneReal { z0, .. })) => Some(z0),
            ("p", Some(CubicRootsClassification::OneReal { p, .. })) => Some(p),
            ("q", Some(CubicRootsClassification::OneReal { q, .. })) => Some(q),
            ("threshold", _) => reduction.as_ref().ok().and_then(|r| r.validity_threshold),
            _ => None,
        }
    };
    let label = |name: &str| -> String {
        match name {
            "cubic_roots" => match roots {
                Some(CubicRootsClassification::ThreeReal { .. }) => "ThreeReal".into(),
                Some(CubicRootsClassification::OneReal { .. }) => "OneReal".into(),
                None => "unavailable".into(),
            },
            "classification" => classify_case(&c, beta, 6).name().into(),
            _ => "unavailable".into(),
        }
    };
    let rows = preset
        .published()
        .into_iter()
        .map(|p| match p {
            Published::Relative(q, want) | Published::Absolute(q, want, _) => {
                let (tol, relative) = match p {
                    Published::Absolute(_, _, tol) => (tol, false),
                    _ => (crate::presets::REL_TOL, true),
                };
                match number(q) {
                    Some(got) => {
                        let err = if relative {
                            ((got - want) / want).abs()
                        } else {
                            (got - want).abs()
                        };
                        SummaryRow {
                            quantity: q,
                            computed: fmt_f64(got),
                            published: want.to_string(),
                            error: fmt_f64(err),
                            pass: err <= tol,
                        }
                    }
                    None => SummaryRow {
                        quantity: q,
                        computed: "unavailable".into(),
                        published: want.to_string(),
                        error: String::new(),
                        pass: false,
                    },
                }
            }
            Published::Label(q, want) => {
                let got = label(q);
                let pass = got == want;
                SummaryRow {
                    quantity: q,
                    computed: got,
                    published: want.into(),
                    error: String::new(),
                    pass,
                }
            }
        })
        .collect();
    Ok(rows)
}

/// Runs a preset end to end: summary, trajectory (CSV + SVG) and stagnation roots.
pub fn reproduce(cfg: &RunConfig, preset: Preset, prefix: &str) -> CliResult<(Vec<PathBuf>, bool)> {
    let rows = summary(cfg, preset)?;
    let all_pass = rows.iter().all(|r| r.pass);
    for r in rows.iter().filter(|r| !r.pass) {
        warn!(
            "{}: computed {} but {} was printed",
            r.quantity, r.computed, r.published
        );
    }
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.quantity.to_string(),
                r.computed.clone(),
                r.published.clone(),
                r.error.clone(),
                if r.pass { "pass" } else { "fail" }.to_string(),
            ]
        })
        .collect();
    let summary_path = output_path(prefix, "summary.csv");
    write_csv(
        &["quantity", "computed", "published", "error", "verdict"],
        &table,
        &summary_path,
    )?;
    let mut written = vec![summary_path];
    match trajectory(cfg, prefix, true) {
        Ok(paths) => written.extend(paths),
        // Printed values can be checked even when β admits no orbit in the water column.
        Err(CliError::Numerical(vortexpaths_core::Error::NoOrbit(reason))) => {
            warn!("no trajectory for {}: {reason}", preset.name());
        }
        Err(e) => return Err(e),
    }
    written.push(stagnation(cfg, prefix)?);
    Ok((written, all_pass))
}
