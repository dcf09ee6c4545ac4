//! Numeric replacement for the half-plane integrability lemma: integrate
//! |g(τ,t)| = (τ²+16t²)^{-n/2} |Af(τ^{1/2}, t)| τ^{n-1} over the half-ellipse
//! B = {τ²+16t² < 1}, the strip S = {|t| < 1/8} \ B and the remaining
//! complement, reporting the three finite values.

use super::KernelError;
use crate::config::QuadratureSpec;
use crate::gallery::GroupField;
use crate::heisenberg::{average_a, GroupPoint};
use crate::quad::gauss_legendre;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegrabilityReport {
    pub region_b: f64,
    pub region_strip: f64,
    pub region_complement: f64,
    pub all_finite: bool,
}

fn af_abs(f: &dyn GroupField, n: usize, radius: f64, t: f64, quad: &QuadratureSpec) -> f64 {
    if f.u_n_invariant() {
        let p = GroupPoint::new(
            std::iter::once(Complex64::new(radius, 0.0))
                .chain(std::iter::repeat(Complex64::new(0.0, 0.0)))
                .take(n)
                .collect(),
            t,
        );
        f.eval(&p).norm()
    } else {
        average_a(|p| f.eval(p), n, radius, t, &quad.sphere).norm()
    }
}

/// |g| over the scaled half-ellipse {τ² + 16t² < radius²}; in polar
/// coordinates the singular factor cancels and the integrand is bounded.
pub(crate) fn region_b_integral(
    f: &dyn GroupField,
    n: usize,
    radius: f64,
    quad: &QuadratureSpec,
) -> f64 {
    let gl = gauss_legendre(24);
    let hp = std::f64::consts::FRAC_PI_2;
    let mut acc = 0.0;
    for (xt, wt) in gl.nodes.iter().zip(&gl.weights) {
        let theta = hp * xt;
        let cos_t = theta.cos();
        let mut inner = 0.0;
        for (xr, wr) in gl.nodes.iter().zip(&gl.weights) {
            let rho = 0.5 * radius * (xr + 1.0);
            inner += af_abs(f, n, (rho * cos_t).max(0.0).sqrt(), rho * theta.sin() / 4.0, quad)
                * wr
                * (0.5 * radius);
        }
        acc += inner * cos_t.powi(n as i32 - 1) * wt * hp / 4.0;
    }
    acc
}

fn tau_integral(
    f: &dyn GroupField,
    n: usize,
    t: f64,
    tau_lo: f64,
    tau_hi: f64,
    quad: &QuadratureSpec,
) -> f64 {
    if tau_hi <= tau_lo {
        return 0.0;
    }
    let gl = gauss_legendre(20);
    let mut breaks = vec![tau_lo];
    let mut x = (tau_lo + 0.5).max(0.5);
    while x < tau_hi {
        breaks.push(x);
        x *= 1.8;
    }
    breaks.push(tau_hi);
    let mut acc = 0.0;
    for w in breaks.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        let mid = 0.5 * (w[0] + w[1]);
        for (xn, wn) in gl.nodes.iter().zip(&gl.weights) {
            let tau = mid + half * xn;
            let weight = (tau * tau + 16.0 * t * t).powf(-(n as f64) / 2.0) * tau.powi(n as i32 - 1);
            acc += af_abs(f, n, tau.sqrt(), t, quad) * weight * wn * half;
        }
    }
    acc
}

/// Integrate |g| over the three regions for a gallery-class field.
pub fn integrability_check(
    f: &dyn GroupField,
    n: usize,
    quad: &QuadratureSpec,
) -> Result<IntegrabilityReport, KernelError> {
    let region_b = region_b_integral(f, n, 1.0, quad);

    let tau_max = (quad.box_radius_z * quad.box_radius_z).max(1.0) * 1.5;
    let t_max = quad.box_radius_t.max(0.5);
    let gl = gauss_legendre(20);

    // strip: |t| < 1/8, τ > sqrt(1 - 16 t²)
    let mut strip = 0.0;
    for (xn, wn) in gl.nodes.iter().zip(&gl.weights) {
        let t = 0.125 * xn;
        let tau_lo = (1.0 - 16.0 * t * t).max(0.0).sqrt();
        strip += tau_integral(f, n, t, tau_lo, tau_max, quad) * wn * 0.125;
    }

    // complement: |t| >= 1/8, τ > max(0, sqrt(1-16t²)) (the root is 0 there)
    let mut comp = 0.0;
    let t_breaks = [0.125, 0.25, 0.5, 1.0, 2.0, 4.0, t_max.max(4.5)];
    for sign in [-1.0, 1.0] {
        for w in t_breaks.windows(2) {
            let half = 0.5 * (w[1] - w[0]);
            let mid = 0.5 * (w[0] + w[1]);
            for (xn, wn) in gl.nodes.iter().zip(&gl.weights) {
                let t = sign * (mid + half * xn);
                comp += tau_integral(f, n, t, 0.0, tau_max, quad) * wn * half;
            }
        }
    }

    let all_finite = region_b.is_finite() && strip.is_finite() && comp.is_finite();
    Ok(IntegrabilityReport { region_b, region_strip: strip, region_complement: comp, all_finite })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::GalleryFunction;

    struct One;
    impl GroupField for One {
        fn eval(&self, _: &GroupPoint) -> Complex64 {
            Complex64::new(1.0, 0.0)
        }
        fn u_n_invariant(&self) -> bool {
            true
        }
    }

    #[test]
    fn unit_profile_over_b_matches_closed_value() {
        // |g| with Af ≡ 1 over B reduces to ¼ ∫cos^{n-1}θ dθ ∫₀¹ dρ
        let quad = QuadratureSpec::default();
        let got = region_b_integral(&One, 1, 1.0, &quad);
        assert!((got - std::f64::consts::PI / 4.0).abs() < 1e-10, "{got}");
        let got2 = region_b_integral(&One, 2, 1.0, &quad);
        assert!((got2 - 0.5).abs() < 1e-10, "{got2}");
    }

    #[test]
    fn gaussian_gallery_is_integrable_everywhere() {
        let quad = QuadratureSpec::default();
        for n in [1usize, 2] {
            let f = GalleryFunction::g1(n);
            let rep = integrability_check(&f, n, &quad).unwrap();
            assert!(rep.all_finite);
            assert!(rep.region_b > 0.0 && rep.region_strip > 0.0 && rep.region_complement > 0.0);
        }
    }

    #[test]
    fn shrinking_b_shrinks_its_integral() {
        let quad = QuadratureSpec::default();
        let f = GalleryFunction::g1(1);
        let big = region_b_integral(&f, 1, 1.0, &quad);
        let small = region_b_integral(&f, 1, 0.5, &quad);
        assert!(small < big);
    }
}
