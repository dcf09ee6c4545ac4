//! The Heisenberg group H_n = C^n × R and its spherical functions.
//!
//! Conventions fixed here and used everywhere else:
//!
//! * product `(z,t)·(w,s) = (z+w, t+s+½ Im⟨z̄,w⟩)` — the unique polarized law
//!   making `X_j = ∂x_j - ½ y_j ∂t`, `Y_j = ∂y_j + ½ x_j ∂t` left invariant;
//! * homogeneous gauge `|(z,t)| = (|z|⁴ + 16 t²)^{1/2}`, which scales as r²
//!   under the parabolic dilation `(z,t) ↦ (rz, r²t)`;
//! * Haar measure = Lebesgue measure dz dt;
//! * sphere measure |S^{2n-1}| = 2πⁿ/(n-1)!.
//!
//! The spherical functions of the Gelfand pair (H_n, U(n)) indexed by
//! (λ, k) ∈ R* × N₀ are
//!
//! ```text
//! φ_{λ,k}(z,t) = e^{iλt} Lt_k^{n-1}(|λ||z|²/2) e^{-|λ||z|²/4},
//! ```
//!
//! with the Laguerre polynomial normalized to 1 at 0, so φ_{λ,k}(0,0) = 1.

use crate::config::SphereRule;
use crate::specfun::{laguerre_weighted, ln_gamma};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

/// Errors from group-layer operations.
#[derive(Debug, Clone, PartialEq)]
pub enum HeisenbergError {
    DimensionMismatch { left: usize, right: usize },
    LambdaZero,
    QuadratureFail { context: &'static str },
}

impl fmt::Display for HeisenbergError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeisenbergError::DimensionMismatch { left, right } => {
                write!(f, "group points of dimensions {left} and {right}")
            }
            HeisenbergError::LambdaZero => write!(f, "spherical index requires lambda != 0"),
            HeisenbergError::QuadratureFail { context } => {
                write!(f, "{context}: sphere quadrature failed its error estimate")
            }
        }
    }
}

impl std::error::Error for HeisenbergError {}

/// An element (z, t) of H_n.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupPoint {
    pub z: Vec<Complex64>,
    pub t: f64,
}

impl GroupPoint {
    pub fn new(z: Vec<Complex64>, t: f64) -> Self {
        GroupPoint { z, t }
    }

    /// Identity element of H_n.
    pub fn origin(n: usize) -> Self {
        GroupPoint { z: vec![Complex64::new(0.0, 0.0); n], t: 0.0 }
    }

    /// Convenience constructor on H_1.
    pub fn h1(x: f64, y: f64, t: f64) -> Self {
        GroupPoint { z: vec![Complex64::new(x, y)], t }
    }

    pub fn dim(&self) -> usize {
        self.z.len()
    }

    /// |z|² = Σ |z_j|².
    pub fn z_norm_sq(&self) -> f64 {
        self.z.iter().map(|w| w.norm_sqr()).sum()
    }
}

/// Group product (z,t)·(w,s) = (z+w, t+s+½ Im⟨z̄,w⟩).
pub fn group_mul(g: &GroupPoint, h: &GroupPoint) -> Result<GroupPoint, HeisenbergError> {
    if g.dim() != h.dim() {
        return Err(HeisenbergError::DimensionMismatch { left: g.dim(), right: h.dim() });
    }
    let mut z = Vec::with_capacity(g.dim());
    let mut twist = 0.0;
    for (a, b) in g.z.iter().zip(&h.z) {
        z.push(a + b);
        twist += (a.conj() * b).im;
    }
    Ok(GroupPoint { z, t: g.t + h.t + 0.5 * twist })
}

/// Group inverse (-z, -t).
pub fn group_inv(g: &GroupPoint) -> GroupPoint {
    GroupPoint { z: g.z.iter().map(|w| -w).collect(), t: -g.t }
}

/// Parabolic dilation (z, t) ↦ (rz, r²t), r > 0; a group automorphism.
pub fn dilation(g: &GroupPoint, r: f64) -> GroupPoint {
    assert!(r > 0.0, "dilation requires r > 0");
    GroupPoint { z: g.z.iter().map(|w| w * r).collect(), t: r * r * g.t }
}

/// Homogeneous gauge (|z|⁴ + 16 t²)^{1/2}.
///
/// Under dilation(r) this scales as r² (degree 2); the degree-1 gauge is its
/// square root, cf. [`folland_gauge`].
pub fn cc_norm(g: &GroupPoint) -> f64 {
    let zn = g.z_norm_sq();
    (zn * zn + 16.0 * g.t * g.t).sqrt()
}

/// Degree-1 homogeneous gauge (|z|⁴ + 16 t²)^{1/4}.
pub fn folland_gauge(g: &GroupPoint) -> f64 {
    cc_norm(g).sqrt()
}

/// Spherical index (λ, k), λ ∈ R*, k ∈ N₀.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalIndex {
    pub lambda: f64,
    pub k: usize,
}

impl SphericalIndex {
    pub fn new(lambda: f64, k: usize) -> Result<Self, HeisenbergError> {
        if lambda == 0.0 {
            return Err(HeisenbergError::LambdaZero);
        }
        Ok(SphericalIndex { lambda, k })
    }
}

/// φ_{λ,k}(z,t) for the pair (H_n, U(n)); n is read off the point.
pub fn spherical_phi(idx: &SphericalIndex, g: &GroupPoint) -> Result<Complex64, HeisenbergError> {
    if idx.lambda == 0.0 {
        return Err(HeisenbergError::LambdaZero);
    }
    let n = g.dim();
    let x = idx.lambda.abs() * g.z_norm_sq() / 2.0;
    let radial = laguerre_weighted(idx.k, n - 1, x);
    Ok(Complex64::new(0.0, idx.lambda * g.t).exp() * radial)
}

/// Surface measure of the unit sphere S^{2n-1} in C^n: 2πⁿ/(n-1)!.
pub fn sphere_area(n: u32) -> f64 {
    let nf = n as f64;
    2.0 * std::f64::consts::PI.powi(n as i32) / ln_gamma(nf).exp()
}

/// Sphere average `Af(R, t) = |S^{2n-1}|⁻¹ ∫_{S^{2n-1}} f(ξR, t) dσ(ξ)`.
///
/// Product rules for n = 1 (periodic trapezoid in the circle angle, which is
/// spectrally accurate) and n = 2 (Gauss–Legendre × trapezoid on the Hopf
/// parametrization); for n >= 3 a seeded, reproducible quasi-random normal
/// projection onto the sphere.
pub fn average_a<F>(f: F, n: usize, radius: f64, t: f64, rule: &SphereRule) -> Complex64
where
    F: Fn(&GroupPoint) -> Complex64,
{
    match n {
        1 => {
            let m = rule.points.max(8);
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..m {
                let phi = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
                let p = GroupPoint::new(vec![Complex64::from_polar(radius, phi)], t);
                acc += f(&p);
            }
            acc / m as f64
        }
        2 => {
            // z1 = R cos(eta) e^{i phi1}, z2 = R sin(eta) e^{i phi2};
            // dσ = cos(eta) sin(eta) d eta d phi1 d phi2, |S^3| = 2 pi^2.
            let m = rule.points.max(8);
            let eta_rule = crate::quad::gauss_legendre(m / 2);
            let mut acc = Complex64::new(0.0, 0.0);
            let half = std::f64::consts::FRAC_PI_4;
            for (xe, we) in eta_rule.nodes.iter().zip(&eta_rule.weights) {
                let eta = half + half * xe;
                let jac = eta.cos() * eta.sin() * we * half;
                let mut circ = Complex64::new(0.0, 0.0);
                for j1 in 0..m {
                    let p1 = 2.0 * std::f64::consts::PI * j1 as f64 / m as f64;
                    for j2 in 0..m {
                        let p2 = 2.0 * std::f64::consts::PI * j2 as f64 / m as f64;
                        let p = GroupPoint::new(
                            vec![
                                Complex64::from_polar(radius * eta.cos(), p1),
                                Complex64::from_polar(radius * eta.sin(), p2),
                            ],
                            t,
                        );
                        circ += f(&p);
                    }
                }
                acc += circ * (jac * (2.0 * std::f64::consts::PI / m as f64).powi(2));
            }
            acc / (2.0 * std::f64::consts::PI * std::f64::consts::PI)
        }
        _ => {
            let samples = rule.points.max(1024);
            let mut rng = ChaCha8Rng::seed_from_u64(rule.seed ^ (n as u64));
            let mut acc = Complex64::new(0.0, 0.0);
            for _ in 0..samples {
                let mut v = Vec::with_capacity(n);
                let mut norm_sq = 0.0;
                for _ in 0..n {
                    let re: f64 = rng.sample(rand_distr::StandardNormal);
                    let im: f64 = rng.sample(rand_distr::StandardNormal);
                    norm_sq += re * re + im * im;
                    v.push(Complex64::new(re, im));
                }
                let scale = radius / norm_sq.sqrt();
                let p = GroupPoint::new(v.iter().map(|w| w * scale).collect(), t);
                acc += f(&p);
            }
            acc / samples as f64
        }
    }
}

/// Quadrature nodes on the unit sphere S^{2n-1}: unit z-vectors and weights
/// summing to |S^{2n-1}|. Product rules for n = 1, 2; seeded equal-weight
/// samples for n >= 3.
pub fn sphere_nodes(n: usize, rule: &SphereRule) -> Vec<(Vec<Complex64>, f64)> {
    match n {
        1 => {
            let m = rule.points.max(8);
            let w = 2.0 * std::f64::consts::PI / m as f64;
            (0..m)
                .map(|j| {
                    let phi = 2.0 * std::f64::consts::PI * j as f64 / m as f64;
                    (vec![Complex64::from_polar(1.0, phi)], w)
                })
                .collect()
        }
        2 => {
            let m = rule.points.max(8);
            let eta_rule = crate::quad::gauss_legendre(m / 2);
            let half = std::f64::consts::FRAC_PI_4;
            let wphi = 2.0 * std::f64::consts::PI / m as f64;
            let mut nodes = Vec::new();
            for (xe, we) in eta_rule.nodes.iter().zip(&eta_rule.weights) {
                let eta = half + half * xe;
                let wj = eta.cos() * eta.sin() * we * half * wphi * wphi;
                for j1 in 0..m {
                    let p1 = 2.0 * std::f64::consts::PI * j1 as f64 / m as f64;
                    for j2 in 0..m {
                        let p2 = 2.0 * std::f64::consts::PI * j2 as f64 / m as f64;
                        nodes.push((
                            vec![
                                Complex64::from_polar(eta.cos(), p1),
                                Complex64::from_polar(eta.sin(), p2),
                            ],
                            wj,
                        ));
                    }
                }
            }
            nodes
        }
        _ => {
            let samples = rule.points.max(1024);
            let mut rng = ChaCha8Rng::seed_from_u64(rule.seed ^ (n as u64));
            let w = sphere_area(n as u32) / samples as f64;
            (0..samples)
                .map(|_| {
                    let mut v = Vec::with_capacity(n);
                    let mut norm_sq = 0.0;
                    for _ in 0..n {
                        let re: f64 = rng.sample(rand_distr::StandardNormal);
                        let im: f64 = rng.sample(rand_distr::StandardNormal);
                        norm_sq += re * re + im * im;
                        v.push(Complex64::new(re, im));
                    }
                    let s = 1.0 / norm_sq.sqrt();
                    (v.iter().map(|z| z * s).collect(), w)
                })
                .collect()
        }
    }
}
