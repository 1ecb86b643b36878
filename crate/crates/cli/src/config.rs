//! JSON run configuration.

use serde::Deserialize;
use vortexpaths_core::trajectory::{Method, ScanRange};
use vortexpaths_core::wave_model::{Linearization, RootSign, WaveParameters};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LinearizationName {
    #[serde(alias = "still_water")]
    Still,
    #[serde(alias = "shear_flow")]
    Shear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
pub enum SignName {
    #[serde(rename = "+", alias = "plus")]
    Plus,
    #[serde(rename = "-", alias = "minus")]
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodName {
    #[default]
    Auto,
    ReferenceOde,
    Quadrature,
    Elliptic,
    Peakon,
    UniformDrift,
}

impl MethodName {
    pub fn method(self) -> Option<Method> {
        match self {
            MethodName::Auto => None,
            MethodName::ReferenceOde => Some(Method::ReferenceODE),
            MethodName::Quadrature => Some(Method::Quadrature),
            MethodName::Elliptic => Some(Method::EllipticClosedForm),
            MethodName::Peakon => Some(Method::Peakon),
            MethodName::UniformDrift => Some(Method::UniformDrift),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InitialPosition {
    pub x0: f64,
    pub z0: f64,
    #[serde(default = "one")]
    pub sign: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSettings {
    pub z_hi: Option<f64>,
    pub n_scan: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldGrid {
    #[serde(default = "default_nx")]
    pub nx: usize,
    #[serde(default = "default_nz")]
    pub nz: usize,
    #[serde(default)]
    pub t: f64,
}

impl Default for FieldGrid {
    fn default() -> Self {
        FieldGrid {
            nx: default_nx(),
            nz: default_nz(),
            t: 0.0,
        }
    }
}

fn one() -> f64 {
    1.0
}
fn default_nx() -> usize {
    64
}
fn default_nz() -> usize {
    32
}
fn default_t_end() -> f64 {
    10.0
}
fn default_n_samples() -> usize {
    1000
}
fn default_tol() -> f64 {
    1e-11
}
fn default_p0() -> f64 {
    WaveParameters::DEFAULT_P0
}
fn default_output() -> String {
    "vortexpaths".into()
}

/// The document as written, before defaults that depend on other fields.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawConfig {
    pub g: f64,
    pub h0: f64,
    pub k: f64,
    pub epsilon: f64,
    pub omega0: f64,
    pub linearization: LinearizationName,
    pub root_sign: SignName,
    #[serde(default)]
    pub alpha: f64,
    #[serde(default = "default_p0")]
    pub p0: f64,
    pub c_bg: Option<f64>,
    pub beta: Option<f64>,
    pub initial: Option<InitialPosition>,
    #[serde(default = "default_t_end")]
    pub t_end: f64,
    #[serde(default = "default_n_samples")]
    pub n_samples: usize,
    #[serde(default)]
    pub method: MethodName,
    #[serde(default = "default_tol")]
    pub tol: f64,
    pub scan: Option<ScanSettings>,
    #[serde(default)]
    pub field: FieldGrid,
    #[serde(default = "default_output")]
    pub output: String,
    #[serde(default)]
    pub emit_svg: bool,
}

/// Validated configuration with every default filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub params: WaveParameters,
    pub beta: Option<f64>,
    pub initial: Option<InitialPosition>,
    pub t_end: f64,
    pub n_samples: usize,
    pub method: MethodName,
    pub tol: f64,
    pub scan: ScanRange,
    pub field: FieldGrid,
    pub output: String,
    pub emit_svg: bool,
}

/// Parses and validates a JSON document.
pub fn parse_config(text: &str) -> CliResult<RunConfig> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::Validation(format!("config schema error at `{path}`: {}", e.inner()))
    })?;
    raw.resolve()
}

impl RawConfig {
    pub fn resolve(self) -> CliResult<RunConfig> {
        let linearization = match self.linearization {
            LinearizationName::Still => Linearization::StillWater,
            LinearizationName::Shear => Linearization::ShearFlow,
        };
        let root_sign = match self.root_sign {
            SignName::Plus => RootSign::Plus,
            SignName::Minus => RootSign::Minus,
        };
        let mut params = WaveParameters::new(
            self.g,
            self.h0,
            self.k,
            self.epsilon,
            self.omega0,
            linearization,
            root_sign,
        );
        params.alpha = self.alpha;
        params.p0 = self.p0;
        params.validate()?;
        params = match self.c_bg {
            Some(c_bg) => WaveParameters { c_bg, ..params },
            // Elliptic and peakon paths need C = c; so does the β-only start in auto mode.
            None if self.needs_matched_drift() => params.with_c_equal_c()?,
            None => params,
        };
        params.validate()?;

        if !(self.t_end > 0.0) || !self.t_end.is_finite() {
            return Err(CliError::Validation(format!(
                "t_end must be positive, got {}",
                self.t_end
            )));
        }
        if self.n_samples < 2 {
            return Err(CliError::Validation(format!(
                "n_samples must be at least 2, got {}",
                self.n_samples
            )));
        }
        if !(1e-12..=1e-6).contains(&self.tol) {
            return Err(CliError::Validation(format!(
                "tol must lie in [1e-12, 1e-6], got {}",
                self.tol
            )));
        }
        if self.beta.is_some() && self.initial.is_some() {
            return Err(CliError::Validation(
                "give either beta or initial, not both".into(),
            ));
        }
        if let Some(beta) = self.beta {
            if !beta.is_finite() {
                return Err(CliError::Validation(format!(
                    "beta must be finite, got {beta}"
                )));
            }
        }
        if let Some(init) = self.initial {
            if !(init.z0 >= 0.0) || !init.x0.is_finite() || !init.z0.is_finite() {
                return Err(CliError::Validation(format!(
                    "initial position must be finite with z0 >= 0, got {init:?}"
                )));
            }
        }
        if self.field.nx < 2 || self.field.nz < 2 {
            return Err(CliError::Validation(
                "field grid needs at least 2 points per axis".into(),
            ));
        }
        let default_scan = ScanRange::for_params(&params);
        let scan = match self.scan {
            Some(s) => ScanRange::new(
                s.z_hi.unwrap_or(default_scan.z_hi),
                s.n_scan.unwrap_or(default_scan.n_scan),
            )?,
            None => default_scan,
        };
        Ok(RunConfig {
            params,
            beta: self.beta,
            initial: self.initial,
            t_end: self.t_end,
            n_samples: self.n_samples,
            method: self.method,
            tol: self.tol,
            scan,
            field: self.field,
            output: self.output,
            emit_svg: self.emit_svg,
        })
    }

    fn needs_matched_drift(&self) -> bool {
        match self.method {
            MethodName::Elliptic | MethodName::Peakon => true,
            MethodName::Auto => self.beta.is_some(),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG3: &str = r#"{"g":9.8,"h0":1,"k":1,"epsilon":0.1,"omega0":2,"linearization":"shear","root_sign":"+","beta":1,"t_end":10,"n_samples":1000}"#;

    #[test]
    fn fig3_document() {
        let cfg = parse_config(FIG3).unwrap();
        assert_eq!(cfg.beta, Some(1.0));
        assert_eq!(cfg.params.p0, 101_325.0);
        assert_eq!(cfg.params.alpha, 0.0);
        let c = vortexpaths_core::wave_model::coefficients(&cfg.params).unwrap();
        assert!((c.speed - 4.07454).abs() < 1e-5);
        assert!((c.drift - c.speed).abs() < 1e-12);
    }

    #[test]
    fn missing_field_is_named() {
        let text = FIG3.replace("\"g\":9.8,", "");
        let err = parse_config(&text).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        assert!(err.to_string().contains("`g`"), "{err}");
    }

    #[test]
    fn nested_path_is_reported() {
        let text = FIG3.replace("\"beta\":1", "\"initial\":{\"x0\":0,\"z0\":\"high\"}");
        let err = parse_config(&text).unwrap_err().to_string();
        assert!(err.contains("initial.z0"), "{err}");
    }

    #[test]
    fn large_amplitude_is_rejected() {
        let err = parse_config(&FIG3.replace("0.1", "1.5")).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        assert!(err.to_string().contains("epsilon"));
    }

    #[test]
    fn unknown_keys_and_bad_ranges() {
        assert!(parse_config(&FIG3.replace("\"beta\"", "\"betta\"")).is_err());
        assert!(parse_config(&FIG3.replace("\"n_samples\":1000", "\"n_samples\":1")).is_err());
        assert!(parse_config(&FIG3.replace("\"t_end\":10", "\"t_end\":0")).is_err());
    }

    #[test]
    fn drift_left_alone_for_explicit_ode() {
        let text = FIG3.replace(
            "\"beta\":1",
            "\"initial\":{\"x0\":0,\"z0\":0.5},\"method\":\"reference_ode\"",
        );
        let cfg = parse_config(&text).unwrap();
        assert_eq!(cfg.params.c_bg, 0.0);
    }
}
