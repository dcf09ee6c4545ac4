//! Discrete realizations of the invariant differential operators on sampled
//! fields over H_n: the left-invariant fields X_j, Y_j, T, the rotation R,
//! the sublaplacian L, the spectral operator |T| and L_α = L + α|T|.

mod diff;
mod grid;
mod spectral;

pub use diff::{apply_l, apply_l_alpha, apply_r, apply_vector_field, VectorField};
pub use grid::{Axis, Grid, SampledField};
pub use spectral::{abs_t, spectral_multiplier, AbsTResult};

use std::fmt;

/// Dimension and coupling of L_α; α must avoid {2k+n : k ∈ N₀}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    pub n: u32,
    pub alpha: f64,
}

impl OperatorParams {
    pub fn new(n: u32, alpha: f64) -> Result<Self, OperatorError> {
        if n == 0 {
            return Err(OperatorError::GridTooSmall { axis: 0 });
        }
        if crate::specfun::is_pole_parameter(n, alpha, 1e-12) {
            return Err(OperatorError::PoleParameter { alpha });
        }
        Ok(OperatorParams { n, alpha })
    }
}

/// Errors from the discrete-operator layer.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorError {
    GridTooSmall { axis: usize },
    PoleParameter { alpha: f64 },
    DimensionMismatch,
}

impl fmt::Display for OperatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorError::GridTooSmall { axis } => {
                write!(f, "axis {axis} too small for the stencil")
            }
            OperatorError::PoleParameter { alpha } => {
                write!(f, "alpha = {alpha} lies in the excluded set {{2k+n}}")
            }
            OperatorError::DimensionMismatch => write!(f, "field/parameter dimension mismatch"),
        }
    }
}

impl std::error::Error for OperatorError {}
