//! Elliptic integrals, Jacobi functions, real cubics and the elliptic reductions.

mod cubic;
mod elliptic;
mod reduction;

pub use cubic::{solve_cubic_real, CubicRootsClassification};
pub use elliptic::{agm, elliptic_f, elliptic_k, jacobi_sn_cn_dn, JacobiTriple};
pub use reduction::{
    reduce_case1a, reduce_case1b_or_case2, reduction_cubic, sextic_coefficients, CaseTag,
    EllipticReduction, MIN_WINDOW_FRACTION,
};
