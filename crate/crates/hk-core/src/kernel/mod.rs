//! The fundamental-solution kernel Φ_α and everything built on it:
//! pointwise densities (hypergeometric and closed forms), the series,
//! contour and Laguerre-transform identities connecting them, three
//! independent distribution pairings, and group convolution.

mod constants;
mod contour;
mod convolve;
mod density;
mod integrability;
mod lag_transform;
mod pairing;
mod psi;

pub use constants::KernelConstants;
pub use contour::{contour_i, ContourValue};
pub use convolve::{convolve, convolve_field, convolve_to_grid};
pub use density::{density_closed, density_grid, density_grid_seq, density_hypergeometric, RePsiProfile};
pub use integrability::{integrability_check, IntegrabilityReport};
pub use lag_transform::{laguerre_transform, LaguerreTransformValue};
pub use pairing::{angular_profile_k, pair_angular, pair_spatial, pair_spectral, PairingOutcome};
pub use psi::{psi_r_alpha, PsiValue};

use crate::specfun::SpecFunError;
use std::fmt;

/// Errors from the kernel layer.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelError {
    /// Kernel evaluated at the group identity.
    Origin,
    /// α in the excluded set {2k+n}.
    PoleParameter { alpha: f64 },
    /// Closed form requested with α >= n.
    AlphaOutOfRange { alpha: f64, n: u32 },
    /// z = 0 axis where the closed form's angular limit diverges (n >= 2).
    CentralAxis,
    /// Contour identity residual exceeded its tolerance.
    ContourMismatch { residual: f64 },
    /// Ψ_{r,α} series and closed form disagree beyond tolerance.
    SeriesMismatch { residual: f64 },
    /// Angular profile failed the vanishing gate at ±π/2.
    ProfileInvalid { value: f64 },
    /// Spectral tail estimate dominates the requested tolerance.
    TruncationDominant { tail: f64 },
    /// Quadrature failed to meet its error estimate.
    QuadratureFail { context: &'static str },
    /// Underlying special-function failure.
    SpecFun(SpecFunError),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::Origin => write!(f, "kernel is singular at the identity"),
            KernelError::PoleParameter { alpha } => {
                write!(f, "alpha = {alpha} lies in the excluded set {{2k+n}}")
            }
            KernelError::AlphaOutOfRange { alpha, n } => {
                write!(f, "closed form requires alpha < n (alpha = {alpha}, n = {n})")
            }
            KernelError::CentralAxis => {
                write!(f, "z = 0 axis: angular limit diverges for n >= 2")
            }
            KernelError::ContourMismatch { residual } => {
                write!(f, "contour identity residual {residual:.3e} above tolerance")
            }
            KernelError::SeriesMismatch { residual } => {
                write!(f, "psi series/closed-form residual {residual:.3e} above tolerance")
            }
            KernelError::ProfileInvalid { value } => {
                write!(f, "angular profile fails the vanishing gate (edge value {value:.3e})")
            }
            KernelError::TruncationDominant { tail } => {
                write!(f, "spectral tail estimate {tail:.3e} dominates the requested tolerance")
            }
            KernelError::QuadratureFail { context } => write!(f, "{context}: quadrature failed"),
            KernelError::SpecFun(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for KernelError {}

impl From<SpecFunError> for KernelError {
    fn from(e: SpecFunError) -> Self {
        match e {
            SpecFunError::PoleParameter { alpha } => KernelError::PoleParameter { alpha },
            other => KernelError::SpecFun(other),
        }
    }
}
