//! Parameter sets of the published figures, with their printed values.

use clap::ValueEnum;

use crate::config::{LinearizationName, MethodName, RawConfig, SignName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    Fig3,
    Fig4,
    Fig5,
    Neg20,
}

/// A printed value and how closely it must be matched.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Published {
    Relative(&'static str, f64),
    Absolute(&'static str, f64, f64),
    Label(&'static str, &'static str),
}

pub const REL_TOL: f64 = 1e-4;

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
            Preset::Neg20 => "neg20",
        }
    }

    fn vorticity(self) -> (f64, SignName) {
        match self {
            Preset::Fig3 => (2.0, SignName::Plus),
            Preset::Fig4 => (20.0, SignName::Minus),
            Preset::Fig5 => (2.0, SignName::Minus),
            Preset::Neg20 => (-20.0, SignName::Plus),
        }
    }

    /// `k = 1`, `h0 = 1`, `g = 9.8`, `ε = 0.1`, `α = 0`, `β = 1`, `C = c`.
    pub fn config(self) -> RawConfig {
        let (omega0, root_sign) = self.vorticity();
        RawConfig {
            g: 9.8,
            h0: 1.0,
            k: 1.0,
            epsilon: 0.1,
            omega0,
            linearization: LinearizationName::Shear,
            root_sign,
            alpha: 0.0,
            p0: vortexpaths_core::wave_model::WaveParameters::DEFAULT_P0,
            c_bg: None,
            beta: Some(1.0),
            initial: None,
            t_end: 10.0,
            n_samples: 1000,
            method: MethodName::Auto,
            tol: 1e-11,
            scan: None,
            field: Default::default(),
            output: self.name().into(),
            emit_svg: true,
        }
    }

    pub fn published(self) -> Vec<Published> {
        use Published::*;
        match self {
            Preset::Fig3 => vec![
                Relative("c", 4.07454),
                Relative("A", 0.176526),
                Relative("B", 2.0),
                Label("cubic_roots", "ThreeReal"),
            ],
            Preset::Fig4 => vec![
                Relative("c", 4.29294),
                Relative("A", -1.33654),
                Relative("B", 20.0),
                Label("cubic_roots", "ThreeReal"),
            ],
            Preset::Fig5 => vec![
                Relative("c", -1.59773),
                Relative("A", -0.306137),
                Relative("B", 2.0),
                Label("cubic_roots", "ThreeReal"),
            ],
            Preset::Neg20 => vec![
                Relative("c", -4.29294),
                Relative("A", 1.33654),
                Relative("B", -20.0),
                Label("cubic_roots", "OneReal"),
                Absolute("Z0_hat", 0.000798, 5e-6),
                Relative("p", 9.55422),
                Relative("q", 24.8588),
                Absolute("threshold", 0.99968, 1e-5),
                Label("classification", "HyperellipticOnly"),
            ],
        }
    }
}
