#![allow(dead_code)]

use vortexpaths_core::trajectory::ScanRange;
use vortexpaths_core::wave_model::{
    coefficients, Linearization, RootSign, VelocityCoefficients, WaveParameters,
};

pub fn params(omega0: f64, sign: RootSign) -> WaveParameters {
    WaveParameters::new(9.8, 1.0, 1.0, 0.1, omega0, Linearization::ShearFlow, sign)
        .with_c_equal_c()
        .unwrap()
}

pub fn fig3() -> VelocityCoefficients {
    coefficients(&params(2.0, RootSign::Plus)).unwrap()
}

pub fn fig4() -> VelocityCoefficients {
    coefficients(&params(20.0, RootSign::Minus)).unwrap()
}

pub fn fig5() -> VelocityCoefficients {
    coefficients(&params(2.0, RootSign::Minus)).unwrap()
}

pub fn neg20() -> VelocityCoefficients {
    coefficients(&params(-20.0, RootSign::Plus)).unwrap()
}

pub fn scan() -> ScanRange {
    ScanRange::new(4.2, 4096).unwrap()
}
