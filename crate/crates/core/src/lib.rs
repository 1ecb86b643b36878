//! Particle paths under small-amplitude gravity waves on flows of constant vorticity.
//!
//! The crate is organised bottom-up:
//! [`wave_model`] gives the linear wave and its velocity field,
//! [`special_functions`] the elliptic machinery,
//! [`trajectory`] the particle paths and [`stagnation`] the stagnation analysis.

// `!(x > 0.0)` is how NaN gets rejected along with the rest.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod numerics;
pub mod special_functions;
pub mod stagnation;
pub mod trajectory;
pub mod wave_model;

pub use error::{Error, Result};
