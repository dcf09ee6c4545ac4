//! Circular-sector contour identity behind the closed form (α < n):
//!
//! ```text
//! I  = 2 ∫₀¹ u^{n-α-1} (1 + e^{2iθ} u²)^{-n} du
//!    = 2 e^{-iθ(n-α)} (I₁ + I₂),
//! I₁ = ½ B_{1/2}((n-α)/2, (n+α)/2),
//! I₂ = (1/2ⁿ) ∫₀^θ sin(ασ) secⁿσ dσ + (i/2ⁿ) ∫₀^θ cos(ασ) secⁿσ dσ.
//! ```
//!
//! All three pieces are computed by independent quadratures and the identity
//! residual is asserted; a residual above tolerance signals a special-function
//! bug, not an input problem.

use super::KernelError;
use crate::config::Tolerances;
use crate::quad::tanh_sinh;
use crate::specfun::incomplete_beta_extended;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourValue {
    /// Direct quadrature of the radial-segment integral I.
    pub i_direct: Complex64,
    /// Real incomplete-Beta piece I₁.
    pub i1: f64,
    /// Arc piece I₂.
    pub i2: Complex64,
    /// |I - 2e^{-iθ(n-α)}(I₁+I₂)|.
    pub residual: f64,
}

/// Evaluate the contour triple for α < n, |θ| < π/2.
pub fn contour_i(n: u32, alpha: f64, theta: f64, tol: &Tolerances) -> Result<ContourValue, KernelError> {
    if alpha >= n as f64 {
        return Err(KernelError::AlphaOutOfRange { alpha, n });
    }
    if !(theta.abs() < std::f64::consts::FRAC_PI_2) {
        return Err(KernelError::QuadratureFail { context: "contour: |theta| must be < pi/2" });
    }
    let nf = n as f64;

    let phase2 = Complex64::new(0.0, 2.0 * theta).exp();
    let direct = tanh_sinh(
        &|u: f64| {
            let base = Complex64::new(1.0, 0.0) + phase2 * (u * u);
            u.powf(nf - alpha - 1.0) / crate::specfun::complex_int_pow(base, n)
        },
        0.0,
        1.0,
        1e-13,
    );
    let i_direct = direct.value * 2.0;

    let i1 = 0.5 * incomplete_beta_extended(0.5, 0.5 * (nf - alpha), 0.5 * (nf + alpha))?;

    let i2 = if theta == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        let re = tanh_sinh(
            &|s: f64| (alpha * s).sin() / s.cos().powi(n as i32),
            0.0f64.min(theta),
            0.0f64.max(theta),
            1e-13,
        );
        let im = tanh_sinh(
            &|s: f64| (alpha * s).cos() / s.cos().powi(n as i32),
            0.0f64.min(theta),
            0.0f64.max(theta),
            1e-13,
        );
        let sign = theta.signum();
        Complex64::new(sign * re.value, sign * im.value) / 2f64.powi(n as i32)
    };

    let rhs = Complex64::new(0.0, -theta * (nf - alpha)).exp() * (Complex64::new(i1, 0.0) + i2) * 2.0;
    let residual = (i_direct - rhs).norm();
    if residual > tol.contour_tol * i_direct.norm().max(1.0) {
        return Err(KernelError::ContourMismatch { residual });
    }
    Ok(ContourValue { i_direct, i1, i2, residual })
}
