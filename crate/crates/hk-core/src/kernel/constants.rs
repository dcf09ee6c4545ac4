//! The constants β_n = 4ⁿ(n-1)!, α_k = (-1)ᵏ C(k+n-1, n-1) and
//! β̂_n = |S^{2n-1}| β_n / 8 tying the spectral, angular and spatial forms of
//! the kernel together, plus the run-time calibration scale.

use crate::heisenberg::sphere_area;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelConstants {
    pub n: u32,
    /// β_n = 4ⁿ (n-1)!.
    pub beta_n: f64,
    /// β̂_n = |S^{2n-1}| β_n / 8.
    pub beta_hat: f64,
    /// |S^{2n-1}| = 2πⁿ/(n-1)!.
    pub sphere: f64,
    /// Calibration constant; 1 until `calibrate` fits it. Reported, never
    /// silently absorbed into the densities.
    pub global_scale: f64,
}

impl KernelConstants {
    pub fn new(n: u32) -> KernelConstants {
        assert!(n >= 1);
        let factorial: f64 = (1..n as u64).map(|j| j as f64).product();
        let beta_n = 4f64.powi(n as i32) * factorial;
        let sphere = sphere_area(n);
        KernelConstants { n, beta_n, beta_hat: sphere * beta_n / 8.0, sphere, global_scale: 1.0 }
    }

    /// α_k = (-1)ᵏ C(k+n-1, n-1), signed and exact for moderate k.
    pub fn alpha_k(&self, k: usize) -> f64 {
        let n = self.n as usize;
        let mut binom = 1.0f64;
        for i in 1..n {
            binom *= (k + i) as f64 / i as f64;
        }
        if k % 2 == 0 {
            binom
        } else {
            -binom
        }
    }
}
