//! Gauss hypergeometric function ₂F₁ in the two regimes the kernel needs.
//!
//! * Interior of the unit disk: the defining series, summed by term
//!   recurrence until the term magnitude falls under the configured cutoff.
//! * Unit circle at the kernel's argument `-e^{2iθ}` with the kernel's
//!   parameter triple (n, b, b+1), b = (n-α)/2:
//!   - for α < n (Re b > 0) the Euler integral collapses to
//!     `b ∫₀¹ s^{b-1} (1+e^{2iθ}s)^{-n} ds` because c-b = 1, evaluated by
//!     tanh-sinh quadrature;
//!   - for α >= n the raw boundary series diverges (c-a-b = 1-n <= 0), so the
//!     value is recovered by Abel summation: interior evaluations at radii
//!     r_j = 1 - 2^{-j}, j = 4..=14, Richardson-extrapolated to r = 1 in the
//!     variable 1-r. The function is analytic in r at r = 1 for |θ| < π/2,
//!     which is what makes polynomial extrapolation legitimate.

use super::SpecFunError;
use crate::config::Tolerances;
use crate::quad::tanh_sinh;
use num_complex::Complex64;

/// Parameter triple (a, b, c) of ₂F₁; c must avoid {0, -1, -2, ...}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl HypergeometricParams {
    pub fn new(a: Complex64, b: Complex64, c: Complex64) -> Result<Self, SpecFunError> {
        let near_int = (c.re - c.re.round()).abs() < 1e-12 && c.im.abs() < 1e-12;
        if near_int && c.re.round() <= 0.0 {
            return Err(SpecFunError::Domain { context: "2F1: c is a nonpositive integer" });
        }
        Ok(HypergeometricParams { a, b, c })
    }

    /// Real-parameter convenience constructor.
    pub fn real(a: f64, b: f64, c: f64) -> Result<Self, SpecFunError> {
        Self::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0), Complex64::new(c, 0.0))
    }

    /// The kernel's triple (n, (n-α)/2, (n-α)/2 + 1); c - b = 1 exactly.
    pub fn kernel_instance(n: u32, alpha: f64) -> Result<Self, SpecFunError> {
        let b = 0.5 * (n as f64 - alpha);
        Self::real(n as f64, b, b + 1.0)
    }
}

/// Value of a truncated series together with its achieved tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: Complex64,
    /// |last term| / |sum| at termination.
    pub achieved_tol: f64,
    pub terms: usize,
}

/// ₂F₁(a, b, c; ω) on |ω| <= 1 - δ by direct summation.
pub fn gauss_2f1_interior(
    p: &HypergeometricParams,
    omega: Complex64,
    tol: &Tolerances,
) -> Result<SeriesValue, SpecFunError> {
    if omega.norm() > 1.0 - tol.interior_margin {
        return Err(SpecFunError::Domain { context: "2F1 interior: |omega| too close to 1" });
    }
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut small_streak = 0usize;
    for k in 0..tol.max_terms {
        let kf = k as f64;
        term *= (p.a + kf) * (p.b + kf) / ((p.c + kf) * (kf + 1.0)) * omega;
        sum += term;
        if term.norm() <= tol.series_tol * sum.norm() {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(SeriesValue {
                    value: sum,
                    achieved_tol: term.norm() / sum.norm().max(f64::MIN_POSITIVE),
                    terms: k + 1,
                });
            }
        } else {
            small_streak = 0;
        }
    }
    Err(SpecFunError::NonConverged {
        context: "2F1 interior series",
        achieved: term.norm() / sum.norm().max(f64::MIN_POSITIVE),
    })
}

/// Which strategy produced a boundary value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryPath {
    IntegralRep,
    AbelRichardson,
}

/// Boundary value F_α(-e^{2iθ}) plus an internal accuracy estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryValue {
    pub value: Complex64,
    pub achieved_tol: f64,
    pub path: BoundaryPath,
}

/// Integer power of a complex number by binary exponentiation.
pub(crate) fn complex_int_pow(z: Complex64, n: u32) -> Complex64 {
    let mut base = z;
    let mut exp = n;
    let mut acc = Complex64::new(1.0, 0.0);
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= base;
        }
        base *= base;
        exp >>= 1;
    }
    acc
}

/// Euler-integral path, valid for α < n:
/// F = b ∫₀¹ s^{b-1} (1 + e^{2iθ} s)^{-n} ds with b = (n-α)/2 > 0.
pub fn gauss_2f1_boundary_integral(
    n: u32,
    alpha: f64,
    theta: f64,
    tol: &Tolerances,
) -> Result<BoundaryValue, SpecFunError> {
    if alpha >= n as f64 {
        return Err(SpecFunError::Domain { context: "integral representation needs alpha < n" });
    }
    let b = 0.5 * (n as f64 - alpha);
    let phase = Complex64::new(0.0, 2.0 * theta).exp();
    let integrand = |s: f64| -> Complex64 {
        let base = Complex64::new(1.0, 0.0) + phase * s;
        s.powf(b - 1.0) / complex_int_pow(base, n)
    };
    let q = tanh_sinh(&integrand, 0.0, 1.0, tol.quad_abs_tol * 1e-2);
    Ok(BoundaryValue {
        value: q.value * b,
        achieved_tol: q.abs_error * b,
        path: BoundaryPath::IntegralRep,
    })
}

/// Abel-summation path: interior values at r_j = 1 - 2^{-j} extrapolated to
/// r = 1 by a Neville tableau in ε = 1 - r.
pub fn gauss_2f1_boundary_abel(
    n: u32,
    alpha: f64,
    theta: f64,
    tol: &Tolerances,
) -> Result<BoundaryValue, SpecFunError> {
    let params = HypergeometricParams::kernel_instance(n, alpha)?;
    let phase = Complex64::new(0.0, 2.0 * theta).exp();
    let js: Vec<u32> = (4..=14).collect();
    let mut eps: Vec<f64> = Vec::with_capacity(js.len());
    let mut vals: Vec<Complex64> = Vec::with_capacity(js.len());
    for &j in &js {
        let e = 0.5f64.powi(j as i32);
        let r = 1.0 - e;
        let omega = -phase * (r * r);
        vals.push(gauss_2f1_interior(&params, omega, tol)?.value);
        eps.push(e);
    }
    // Neville interpolation at eps = 0; track the last two tableau heads.
    let mut prev_head = vals[0];
    let mut head = vals[0];
    let m = vals.len();
    for order in 1..m {
        for i in 0..(m - order) {
            vals[i] = (vals[i] * eps[i + order] - vals[i + 1] * eps[i]) / (eps[i + order] - eps[i]);
        }
        prev_head = head;
        head = vals[0];
    }
    let disc = (head - prev_head).norm();
    if disc > tol.abel_consistency * (1.0 + head.norm()) {
        return Err(SpecFunError::NonConverged { context: "Abel extrapolation", achieved: disc });
    }
    Ok(BoundaryValue { value: head, achieved_tol: disc, path: BoundaryPath::AbelRichardson })
}

/// F_α(-e^{2iθ}) = ₂F₁(n, (n-α)/2, (n-α)/2 + 1; -e^{2iθ}).
///
/// Strategy selection: integral representation when α < n (Re b > 0),
/// Abel summation + Richardson otherwise. Never evaluates the raw series at
/// |ω| = 1, where it diverges for every n >= 1.
pub fn gauss_2f1_boundary(
    n: u32,
    alpha: f64,
    theta: f64,
    tol: &Tolerances,
) -> Result<BoundaryValue, SpecFunError> {
    if !(theta.abs() < std::f64::consts::FRAC_PI_2) {
        return Err(SpecFunError::Domain { context: "2F1 boundary: |theta| must be < pi/2" });
    }
    if super::is_pole_parameter(n, alpha, 1e-12) {
        return Err(SpecFunError::PoleParameter { alpha });
    }
    if alpha < n as f64 {
        gauss_2f1_boundary_integral(n, alpha, theta, tol)
    } else {
        gauss_2f1_boundary_abel(n, alpha, theta, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn interior_at_zero_is_one() {
        let p = HypergeometricParams::real(2.3, -0.7, 1.9).unwrap();
        let v = gauss_2f1_interior(&p, Complex64::new(0.0, 0.0), &tol()).unwrap();
        assert_eq!(v.value, Complex64::new(1.0, 0.0));
    }

    #[test]
    fn interior_log_identity() {
        // 2F1(1,1,2; 1/2) = -ln(1-w)/w = 2 ln 2
        let p = HypergeometricParams::real(1.0, 1.0, 2.0).unwrap();
        let v = gauss_2f1_interior(&p, Complex64::new(0.5, 0.0), &tol()).unwrap();
        let expect = 2.0 * std::f64::consts::LN_2;
        assert!((v.value.re - expect).abs() < 1e-13);
        assert!(v.value.im.abs() < 1e-15);
        assert!(v.achieved_tol <= 1e-14);
    }

    #[test]
    fn interior_binomial_when_b_equals_c() {
        // (b)_k/(c)_k cancels, leaving the binomial series (1-w)^{-a}
        for &(a, w_re, w_im) in &[(3.0, 0.4, 0.2), (1.5, -0.8, 0.1), (2.0, 0.0, 0.9)] {
            let p = HypergeometricParams::real(a, 2.2, 2.2).unwrap();
            let w = Complex64::new(w_re, w_im);
            let v = gauss_2f1_interior(&p, w, &tol()).unwrap().value;
            let expect = ((Complex64::new(1.0, 0.0) - w).ln() * (-a)).exp();
            assert!((v - expect).norm() < 1e-10 * expect.norm());
        }
    }

    #[test]
    fn interior_rejects_near_boundary_argument() {
        let p = HypergeometricParams::real(1.0, 1.0, 2.0).unwrap();
        let err = gauss_2f1_interior(&p, Complex64::new(0.9999999, 0.0), &tol());
        assert!(matches!(err, Err(SpecFunError::Domain { .. })));
    }

    #[test]
    fn params_reject_nonpositive_integer_c() {
        assert!(HypergeometricParams::real(1.0, 1.0, 0.0).is_err());
        assert!(HypergeometricParams::real(1.0, 1.0, -3.0).is_err());
        assert!(HypergeometricParams::real(1.0, 1.0, -3.000001).is_ok());
    }

    #[test]
    fn boundary_arctan_anchor() {
        // 2F1(1, 1/2, 3/2; -1) = pi/4 (from r 2F1(1,1/2,3/2;-r^2) = arctan r)
        let v = gauss_2f1_boundary(1, 0.0, 0.0, &tol()).unwrap();
        assert!((v.value.re - std::f64::consts::FRAC_PI_4).abs() < 1e-11);
        assert!(v.value.im.abs() < 1e-12);
        assert_eq!(v.path, BoundaryPath::IntegralRep);
    }

    #[test]
    fn boundary_rejects_pole_and_domain() {
        assert!(matches!(
            gauss_2f1_boundary(1, 3.0, 0.2, &tol()),
            Err(SpecFunError::PoleParameter { .. })
        ));
        assert!(matches!(
            gauss_2f1_boundary(1, 0.0, 1.6, &tol()),
            Err(SpecFunError::Domain { .. })
        ));
    }

    #[test]
    fn integral_rep_agrees_with_abel_for_alpha_below_n() {
        // boundary-consistency invariant at theta in {-1.2,-0.6,0,0.6,1.2}
        for &(n, alpha) in &[(1u32, 0.0), (1, 0.5), (2, 1.0), (3, -1.0)] {
            for &theta in &[-1.2, -0.6, 0.0, 0.6, 1.2] {
                let a = gauss_2f1_boundary_integral(n, alpha, theta, &tol()).unwrap();
                let b = gauss_2f1_boundary_abel(n, alpha, theta, &tol()).unwrap();
                let scale = a.value.norm().max(1.0);
                assert!(
                    (a.value - b.value).norm() <= 1e-6 * scale,
                    "n={n} alpha={alpha} theta={theta}: {:?} vs {:?}",
                    a.value,
                    b.value
                );
            }
        }
    }

    #[test]
    fn abel_path_matches_pfaff_transform_for_alpha_above_n() {
        // Independent oracle: Pfaff, 2F1(a,b,c;z) = (1-z)^{-b} 2F1(c-a,b,c; z/(z-1)),
        // whose transformed argument lies inside the disk for |theta| < pi/3.
        let t = tol();
        for &(n, alpha) in &[(1u32, 1.5), (1, 2.5), (2, 3.3)] {
            for &theta in &[0.0, 0.5, -0.9] {
                let got = gauss_2f1_boundary(n, alpha, theta, &t).unwrap();
                assert_eq!(got.path, BoundaryPath::AbelRichardson);
                let b = 0.5 * (n as f64 - alpha);
                let z = -Complex64::new(0.0, 2.0 * theta).exp();
                let zt = z / (z - 1.0);
                let p = HypergeometricParams::real(b + 1.0 - n as f64, b, b + 1.0).unwrap();
                let f2 = gauss_2f1_interior(&p, zt, &t).unwrap().value;
                let oracle = ((Complex64::new(1.0, 0.0) - z).ln() * (-b)).exp() * f2;
                assert!(
                    (got.value - oracle).norm() < 2e-6 * oracle.norm().max(1.0),
                    "n={n} alpha={alpha} theta={theta}: abel={:?} pfaff={:?}",
                    got.value,
                    oracle
                );
            }
        }
    }

    #[test]
    fn boundary_consistent_with_interior_near_circle() {
        // cross-check against the plain interior series at r = 0.999
        let t = tol();
        let v1 = gauss_2f1_boundary(2, 0.5, 0.0, &t).unwrap().value;
        let p = HypergeometricParams::kernel_instance(2, 0.5).unwrap();
        let r: f64 = 0.999;
        let v2 = gauss_2f1_interior(&p, Complex64::new(-r * r, 0.0), &t).unwrap().value;
        assert!((v1 - v2).norm() < 5e-3 * v1.norm());
    }
}
