//! Scalar special functions.
//!
//! Everything downstream of this module reduces to five primitives:
//! normalized generalized Laguerre polynomials, Pochhammer/Gamma utilities,
//! the Gauss hypergeometric function ₂F₁ (interior disk, unit-circle boundary,
//! and Euler integral representation), the incomplete Beta function, and the
//! forced-oscillation kernel m_α.

mod beta_inc;
mod gamma;
mod hyp2f1;
mod laguerre;
mod malpha;

pub use beta_inc::incomplete_beta;
pub(crate) use beta_inc::incomplete_beta_extended;
pub(crate) use hyp2f1::complex_int_pow;
pub use gamma::{gamma, ln_beta, ln_gamma, pochhammer};
pub use hyp2f1::{
    gauss_2f1_boundary, gauss_2f1_boundary_abel, gauss_2f1_boundary_integral, gauss_2f1_interior,
    BoundaryPath, BoundaryValue, HypergeometricParams, SeriesValue,
};
pub use laguerre::{laguerre, laguerre_weighted, laguerre_weighted_all};
pub use malpha::{m_alpha, MAlphaParams};
pub(crate) use malpha::m_alpha_endpoint_limit_n1;

use std::fmt;

/// Errors from special-function evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum SpecFunError {
    /// Series / extrapolation did not meet its termination bound.
    NonConverged { context: &'static str, achieved: f64 },
    /// Parameter hits the excluded set α ∈ {2k+n}.
    PoleParameter { alpha: f64 },
    /// Input outside the function's domain.
    Domain { context: &'static str },
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::NonConverged { context, achieved } => {
                write!(f, "{context}: did not converge (achieved {achieved:.3e})")
            }
            SpecFunError::PoleParameter { alpha } => {
                write!(f, "alpha = {alpha} lies in the excluded set {{2k+n}}")
            }
            SpecFunError::Domain { context } => write!(f, "{context}: input outside domain"),
        }
    }
}

impl std::error::Error for SpecFunError {}

/// True when `alpha` is within `tol` of some 2k+n, k = 0, 1, 2, ...
pub fn is_pole_parameter(n: u32, alpha: f64, tol: f64) -> bool {
    if alpha < n as f64 - tol {
        return false;
    }
    let k = ((alpha - n as f64) / 2.0).round();
    k >= 0.0 && (alpha - (2.0 * k + n as f64)).abs() <= tol
}
