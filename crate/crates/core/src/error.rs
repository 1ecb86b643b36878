use thiserror::Error;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the function being evaluated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A precondition on structured input (root pattern, case tag, ...) failed.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Polynomial with a vanishing leading coefficient or a (numerically) repeated root.
    #[error("degenerate polynomial: {0}")]
    Degenerate(String),

    /// No bounded orbit of the height equation contains the requested start.
    #[error("no bounded orbit: {0}")]
    NoOrbit(String),

    /// The adaptive integrator could not keep the step above round-off.
    #[error("step size underflow at t = {t}")]
    StepSizeUnderflow { t: f64 },

    /// A closed-form solution was requested outside the time window where it stays real.
    #[error("t = {t} is outside the validity window ({value} vs threshold {threshold})")]
    OutOfValidityWindow { t: f64, value: f64, threshold: f64 },

    /// The closed form does not exist for the given reduction case.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The peakon height is unbounded at this time.
    #[error("peakon asymptote at t = {t}")]
    Asymptote { t: f64 },

    /// The peakon solution only solves the horizontal equation when B = 0 and C = c.
    #[error("peakon requires B = 0 and C = c (horizontal residual {residual})")]
    Validity { residual: f64 },

    /// Neither arcsine branch reproduces the horizontal phase equation.
    #[error("phase branch ambiguous at t = {t}: {reason}")]
    BranchAmbiguity { t: f64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
