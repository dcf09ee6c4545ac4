//! The damped Laguerre transform identity connecting the central-frequency
//! integral of a spherical function to a closed rational form. With the
//! Laguerre polynomial normalized to 1 at 0 (the convention of the spherical
//! functions), the generating identity gives
//!
//! ```text
//! ∫ e^{-ε|λ|} e^{iλt} Ltₖ^{n-1}(|λ||z|²/2) e^{-|λ||z|²/4} |λ|^{n-1} dλ
//!   = 2 β_n (-1)^k Re( (|z|²-4ε+4it)^k / (|z|²+4ε-4it)^{n+k} ),
//! ```
//!
//! i.e. the unnormalized-polynomial form carries the extra C(k+n-1,k) that
//! turns (-1)^k into α_k, and the damping enters the numerator with a minus
//! sign (both factors are ε-insensitive at k = 0 and in the ε → 0 limit).
//! Left side by adaptive quadrature over λ, right side by the closed formula;
//! both are returned so callers can assert the identity at their own
//! tolerance.

use super::constants::KernelConstants;
use super::KernelError;
use crate::config::Tolerances;
use crate::quad::adaptive;
use crate::specfun::{complex_int_pow, laguerre_weighted};
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreTransformValue {
    pub lhs: f64,
    pub rhs: f64,
}

/// Evaluate both sides for degree k, |z| = z_norm, central coordinate t and
/// damping ε > 0.
pub fn laguerre_transform(
    constants: &KernelConstants,
    k: usize,
    z_norm: f64,
    t: f64,
    eps: f64,
    tol: &Tolerances,
) -> Result<LaguerreTransformValue, KernelError> {
    if eps <= 0.0 {
        return Err(KernelError::QuadratureFail { context: "laguerre_transform: eps must be > 0" });
    }
    let n = constants.n;
    let zsq = z_norm * z_norm;

    // the integrand is even in λ apart from e^{iλt}; fold onto λ > 0
    let decay = eps + zsq / 4.0;
    let lambda_max = (45.0 / decay).min(1e7);
    let f = |lam: f64| -> Complex64 {
        let radial = laguerre_weighted(k, n as usize - 1, lam * zsq / 2.0);
        Complex64::new(0.0, lam * t).exp()
            * ((-eps * lam).exp() * radial * lam.powi(n as i32 - 1))
    };
    let q = adaptive(&f, 0.0, lambda_max, tol.quad_abs_tol, tol.quad_rel_tol, 28);
    let lhs = 2.0 * q.value.re;

    let num = Complex64::new(zsq - 4.0 * eps, 4.0 * t);
    let den = Complex64::new(zsq + 4.0 * eps, -4.0 * t);
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let rhs = 2.0 * constants.beta_n * sign
        * (complex_int_pow(num, k as u32) / complex_int_pow(den, n + k as u32)).re;

    Ok(LaguerreTransformValue { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn undamped_limit_anchor_eight() {
        // n=1, k=0, |z|=1, t=0, ε→0⁺: both sides → 8
        let c = KernelConstants::new(1);
        let v = laguerre_transform(&c, 0, 1.0, 0.0, 1e-8, &tol()).unwrap();
        assert!((v.lhs - 8.0).abs() < 1e-6, "lhs {}", v.lhs);
        assert!((v.rhs - 8.0).abs() < 1e-6, "rhs {}", v.rhs);
    }

    #[test]
    fn degree_one_sign_flip() {
        // n=1, k=1, |z|=1, t=0, ε→0: ∫(1-λ/2)e^{-λ/4}dλ = -8 on both sides
        let c = KernelConstants::new(1);
        let v = laguerre_transform(&c, 1, 1.0, 0.0, 1e-8, &tol()).unwrap();
        assert!((v.lhs + 8.0).abs() < 1e-5, "lhs {}", v.lhs);
        assert!((v.rhs + 8.0).abs() < 1e-5, "rhs {}", v.rhs);
    }

    #[test]
    fn n2_k0_anchor_thirty_two() {
        let c = KernelConstants::new(2);
        let v = laguerre_transform(&c, 0, 1.0, 0.0, 1e-8, &tol()).unwrap();
        assert!((v.lhs - 32.0).abs() < 2e-5, "lhs {}", v.lhs);
        assert!((v.rhs - 32.0).abs() < 2e-5, "rhs {}", v.rhs);
    }

    #[test]
    fn k0_rhs_reduces_to_single_power() {
        // α₀ = 1 and the numerator power is 0: rhs = 2 β_n Re((|z|²-4it+4ε)^{-n})
        let c = KernelConstants::new(2);
        let (z, t, eps) = (1.3, 0.4, 0.1);
        let v = laguerre_transform(&c, 0, z, t, eps, &tol()).unwrap();
        let den = Complex64::new(z * z + 4.0 * eps, -4.0 * t);
        let expect = 2.0 * c.beta_n * (1.0 / complex_int_pow(den, 2)).re;
        assert!((v.rhs - expect).abs() < 1e-12 * expect.abs());
    }

    #[test]
    fn identity_holds_for_random_inputs() {
        let mut state = 0xA5A5A5A5DEADBEEFu64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..12 {
            let n = 1 + (next() * 3.0) as u32;
            let k = (next() * 6.0) as usize;
            let z = 0.5 + 1.5 * next();
            let t = (next() - 0.5) * 3.0;
            let eps = [1.0, 0.1, 0.01][(next() * 3.0) as usize];
            let c = KernelConstants::new(n);
            let v = laguerre_transform(&c, k, z, t, eps, &tol()).unwrap();
            assert!(
                (v.lhs - v.rhs).abs() <= 1e-6 * (1.0 + v.rhs.abs()),
                "n={n} k={k} z={z} t={t} eps={eps}: {} vs {}",
                v.lhs,
                v.rhs
            );
        }
    }

    #[test]
    fn rejects_nonpositive_eps() {
        let c = KernelConstants::new(1);
        assert!(laguerre_transform(&c, 0, 1.0, 0.0, 0.0, &tol()).is_err());
    }
}
