//! The partial kernel profile
//!
//! ```text
//! Ψ_{r,α}(θ) = Σ_k α_k r^{2k+n-α} e^{i(2k+n)θ} / (2k+n-α)
//!            = (r^{n-α} e^{inθ}/(n-α)) ₂F₁(n, (n-α)/2, (n-α)/2+1; -r²e^{2iθ})
//! ```
//!
//! evaluated BOTH ways; the closed form is returned and the raw series is
//! asserted against it.

use super::constants::KernelConstants;
use super::KernelError;
use crate::config::Tolerances;
use crate::specfun::{gauss_2f1_interior, HypergeometricParams};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiValue {
    /// Hypergeometric closed form (the returned value).
    pub value: Complex64,
    /// Raw-series evaluation.
    pub series: Complex64,
    /// |value - series|.
    pub residual: f64,
}

/// Ψ_{r,α}(θ) for 0 < r < 1.
pub fn psi_r_alpha(
    constants: &KernelConstants,
    alpha: f64,
    r: f64,
    theta: f64,
    tol: &Tolerances,
) -> Result<PsiValue, KernelError> {
    let n = constants.n;
    if !(0.0 < r && r < 1.0) {
        return Err(KernelError::QuadratureFail { context: "psi: r must be in (0,1)" });
    }
    if crate::specfun::is_pole_parameter(n, alpha, 1e-12) {
        return Err(KernelError::PoleParameter { alpha });
    }

    // raw series
    let rot = Complex64::new(0.0, 2.0 * theta).exp() * (r * r);
    let mut term_angular = Complex64::new(0.0, n as f64 * theta).exp() * r.powf(n as f64 - alpha);
    let mut series = Complex64::new(0.0, 0.0);
    let mut small = 0usize;
    for k in 0..tol.max_terms {
        let denom = 2.0 * k as f64 + n as f64 - alpha;
        let contribution = term_angular * (constants.alpha_k(k) / denom);
        series += contribution;
        if contribution.norm() <= tol.series_tol * series.norm().max(f64::MIN_POSITIVE) {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
        term_angular *= rot;
    }

    // hypergeometric closed form
    let p = HypergeometricParams::kernel_instance(n, alpha)?;
    let f = gauss_2f1_interior(&p, -rot, tol)?;
    let value = Complex64::new(0.0, n as f64 * theta).exp() * r.powf(n as f64 - alpha)
        / (n as f64 - alpha)
        * f.value;

    let residual = (value - series).norm();
    if residual > tol.psi_series_tol * value.norm().max(1.0) {
        return Err(KernelError::SeriesMismatch { residual });
    }
    Ok(PsiValue { value, series, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn arctan_anchor() {
        // n=1, α=0, θ=0, r=0.9: Σ (-1)^k r^{2k+1}/(2k+1) = arctan r
        let c = KernelConstants::new(1);
        let v = psi_r_alpha(&c, 0.0, 0.9, 0.0, &tol()).unwrap();
        let expect = 0.9f64.atan();
        assert!((v.value.re - expect).abs() < 1e-12);
        assert!(v.value.im.abs() < 1e-14);
        assert!(v.residual < 1e-12);
    }

    #[test]
    fn small_r_leading_behaviour() {
        // r → 0: Ψ ≈ r^{n-α} e^{inθ}/(n-α)
        let c = KernelConstants::new(2);
        let (alpha, r, theta) = (0.7, 1e-4, 0.4);
        let v = psi_r_alpha(&c, alpha, r, theta, &tol()).unwrap();
        let lead = Complex64::new(0.0, 2.0 * theta).exp() * r.powf(2.0 - alpha) / (2.0 - alpha);
        assert!((v.value - lead).norm() < 1e-8 * lead.norm());
    }

    #[test]
    fn conjugation_symmetry() {
        let c = KernelConstants::new(3);
        let v1 = psi_r_alpha(&c, -1.2, 0.8, 0.6, &tol()).unwrap();
        let v2 = psi_r_alpha(&c, -1.2, 0.8, -0.6, &tol()).unwrap();
        assert!((v1.value.conj() - v2.value).norm() < 1e-13);
    }

    #[test]
    fn series_matches_closed_form_randomized() {
        // deterministic LCG sample of (n, α, θ) at r = 0.9
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..40 {
            let n = 1 + (next() * 3.0) as u32;
            let mut alpha = -3.0 + 6.0 * next();
            if crate::specfun::is_pole_parameter(n, alpha, 1e-3) {
                alpha += 0.11;
            }
            let theta = (next() - 0.5) * 3.0;
            let v = psi_r_alpha(&KernelConstants::new(n), alpha, 0.9, theta, &tol()).unwrap();
            assert!(
                v.residual <= 1e-10 * v.value.norm().max(1.0),
                "n={n} alpha={alpha} theta={theta}: residual {}",
                v.residual
            );
        }
    }

    #[test]
    fn pole_and_range_rejection() {
        let c = KernelConstants::new(1);
        assert!(matches!(
            psi_r_alpha(&c, 3.0, 0.9, 0.0, &tol()),
            Err(KernelError::PoleParameter { .. })
        ));
        assert!(psi_r_alpha(&c, 0.5, 1.0, 0.0, &tol()).is_err());
    }
}
