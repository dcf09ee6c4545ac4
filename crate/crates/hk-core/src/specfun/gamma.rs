//! Gamma-family utilities: log-Gamma (Lanczos), Gamma with reflection,
//! log-Beta, and the Pochhammer symbol.
//!
//! All Gamma evaluations in the crate go through `ln_gamma` so n-dependent
//! arguments like Γ(k + n/2) never overflow before the final combination.

/// Lanczos parameter g = 7, 9 coefficients (Godfrey / Boost / CPython set).
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0, got {x}");
    if x < 0.5 {
        // reflection: Γ(x)Γ(1-x) = π / sin(πx)
        return (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).ln()
            - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS[1..].iter().enumerate() {
        sum += c / (z + (i + 1) as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + sum.ln()
}

/// Γ(x); any real x off the poles (0, -1, -2, ...).
pub fn gamma(x: f64) -> f64 {
    if x > 0.0 {
        ln_gamma(x).exp()
    } else {
        // reflection for x <= 0
        let s = (std::f64::consts::PI * x).sin();
        assert!(s != 0.0, "gamma pole at {x}");
        std::f64::consts::PI / (s * gamma(1.0 - x))
    }
}

/// ln B(a, b) = ln Γ(a) + ln Γ(b) - ln Γ(a+b), a, b > 0.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Pochhammer symbol (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    let mut p = 1.0;
    for i in 0..k {
        p *= a + i as f64;
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_factorials() {
        for n in 1..12u32 {
            let fact: f64 = (1..n).map(|j| j as f64).product();
            assert!((gamma(n as f64) - fact).abs() <= 1e-12 * fact.max(1.0));
        }
    }

    #[test]
    fn gamma_half() {
        let s = std::f64::consts::PI.sqrt();
        assert!((gamma(0.5) - s).abs() < 1e-14);
        assert!((gamma(1.5) - 0.5 * s).abs() < 1e-14);
        assert!((gamma(-0.5) + 2.0 * s).abs() < 1e-13);
    }

    #[test]
    fn pochhammer_examples() {
        // (a)_0 = 1 for every a
        assert_eq!(pochhammer(3.7, 0), 1.0);
        assert_eq!(pochhammer(-2.0, 0), 1.0);
        // (1)_k = k!
        assert_eq!(pochhammer(1.0, 3), 6.0);
        // direct product oracle 0.5 * 1.5
        assert_eq!(pochhammer(0.5, 2), 0.75);
    }

    #[test]
    fn pochhammer_matches_gamma_quotient() {
        for &(a, k) in &[(2.5, 7), (0.25, 12), (5.0, 3)] {
            let via_gamma = (ln_gamma(a + k as f64) - ln_gamma(a)).exp();
            let direct = pochhammer(a, k);
            assert!((via_gamma - direct).abs() < 1e-10 * direct.abs());
        }
    }

    #[test]
    fn ln_beta_symmetry() {
        assert!((ln_beta(2.0, 3.0) - ln_beta(3.0, 2.0)).abs() < 1e-14);
        // B(1,1) = 1
        assert!(ln_beta(1.0, 1.0).abs() < 1e-14);
    }
}
