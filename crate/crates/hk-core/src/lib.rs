//! Numerical kernel for the operator `L + α|T|` on the Heisenberg group `H_n`.
//!
//! The crate is organised around five layers:
//!
//! * [`specfun`] — scalar special functions: normalized Laguerre polynomials,
//!   Pochhammer/Gamma utilities, the Gauss hypergeometric function on the open
//!   disk and on the unit circle, the incomplete Beta function, and the forced
//!   oscillation kernel `m_α`.
//! * [`heisenberg`] — the group itself: points, product, inversion, dilations,
//!   the homogeneous gauge, sphere averages and the spherical functions
//!   `φ_{λ,k}`.
//! * [`operators`] — finite-difference realizations of the left-invariant
//!   fields `X_j, Y_j, T`, the sublaplacian `L`, the spectral operator `|T|`
//!   and `L_α = L + α|T|` on sampled fields.
//! * [`kernel`] — the fundamental-solution density in both its hypergeometric
//!   and closed forms, the intermediate series/contour/transform identities,
//!   the three distribution pairings (spatial, angular, spectral) and group
//!   convolution against the kernel.
//! * [`harness`] — gallery test functions, verification suites, calibration
//!   and tabulation used by the `hk` command line tool.
//!
//! All numerical work is pure and deterministic: random sampling is seeded,
//! reductions use fixed-shape pairwise trees, and the data-parallel loops
//! (behind the default `parallel` feature) never change the summation order.

pub mod config;
pub mod gallery;
pub mod harness;
pub mod heisenberg;
pub mod kernel;
pub mod operators;
pub mod par;
pub mod quad;
pub mod specfun;

pub use num_complex::Complex64;
