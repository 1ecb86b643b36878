//! Generic numerical building blocks.

pub mod ode;
pub mod roots;

pub use ode::{dopri5, DenseSolution};
pub use roots::{bisect, march_to_nonpositive};
