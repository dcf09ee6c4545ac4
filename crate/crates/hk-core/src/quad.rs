//! One-dimensional quadrature building blocks.
//!
//! Three rules cover every integral in the crate:
//!
//! * fixed-order Gauss–Legendre panels for smooth integrands,
//! * a recursive adaptive Gauss–Legendre driver (order-n vs order-2n
//!   difference as the error estimate),
//! * tanh-sinh (double exponential) for endpoint-singular integrands such as
//!   `s^{b-1}` weights and `sec^n σ` blow-ups.
//!
//! All rules work for both real and complex integrands through the small
//! [`Integrand`] scalar abstraction.

use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Scalar values a quadrature rule can accumulate.
pub trait Integrand: Copy + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> {
    fn zero() -> Self;
    fn scale(self, w: f64) -> Self;
    fn norm(self) -> f64;
    fn is_finite(self) -> bool;
}

impl Integrand for f64 {
    fn zero() -> Self {
        0.0
    }
    fn scale(self, w: f64) -> Self {
        self * w
    }
    fn norm(self) -> f64 {
        self.abs()
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl Integrand for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn scale(self, w: f64) -> Self {
        self * w
    }
    fn norm(self) -> f64 {
        Complex64::norm(self)
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Build the rule by Newton iteration on the Legendre polynomial roots.
    fn build(n: usize) -> GaussLegendre {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Chebyshev-based initial guess for the i-th positive root.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre recurrence for P_n(x) and P'_n(x).
                let mut p0 = 1.0;
                let mut p1 = x;
                for j in 2..=n {
                    let jf = j as f64;
                    let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                    p0 = p1;
                    p1 = p2;
                }
                let p = if n == 1 { x } else { p1 };
                dp = n as f64 * (x * p - p0) / (x * x - 1.0);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    /// Integrate `f` over [a, b] with this rule.
    pub fn integrate<T: Integrand>(&self, a: f64, b: f64, f: impl Fn(f64) -> T) -> T {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = T::zero();
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc = acc + f(mid + half * x).scale(w * half);
        }
        acc
    }
}

/// Shared cache of Gauss–Legendre rules keyed by order.
pub fn gauss_legendre(n: usize) -> GaussLegendre {
    static CACHE: OnceLock<Mutex<HashMap<usize, GaussLegendre>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(n).or_insert_with(|| GaussLegendre::build(n)).clone()
}

/// Integrate over consecutive panels given by `breaks` with a fixed GL order.
pub fn panels<T: Integrand>(breaks: &[f64], order: usize, f: impl Fn(f64) -> T) -> T {
    let rule = gauss_legendre(order);
    let mut acc = T::zero();
    for w in breaks.windows(2) {
        acc = acc + rule.integrate(w[0], w[1], &f);
    }
    acc
}

/// Geometric + linear break points from 0 to `end`, refined toward 0.
pub fn graded_breaks(end: f64, first: f64, count: usize) -> Vec<f64> {
    let mut b = vec![0.0];
    let mut x = first;
    while x < end && b.len() < count {
        b.push(x);
        x *= 2.0;
    }
    b.push(end);
    b
}

/// Error outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error: f64,
}

/// Adaptive Gauss–Legendre on [a, b]: bisect while the order-12 vs order-24
/// difference exceeds the local tolerance share.
pub fn adaptive<T: Integrand>(
    f: &impl Fn(f64) -> T,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_depth: usize,
) -> QuadResult<T> {
    let lo = gauss_legendre(12);
    let hi = gauss_legendre(24);
    fn recurse<T: Integrand>(
        f: &impl Fn(f64) -> T,
        a: f64,
        b: f64,
        tol: f64,
        rel_tol: f64,
        depth: usize,
        lo: &GaussLegendre,
        hi: &GaussLegendre,
    ) -> QuadResult<T> {
        let coarse = lo.integrate(a, b, f);
        let fine = hi.integrate(a, b, f);
        let err = (fine - coarse).norm();
        if err <= tol.max(rel_tol * fine.norm()) || depth == 0 {
            return QuadResult { value: fine, abs_error: err };
        }
        let mid = 0.5 * (a + b);
        let left = recurse(f, a, mid, 0.5 * tol, rel_tol, depth - 1, lo, hi);
        let right = recurse(f, mid, b, 0.5 * tol, rel_tol, depth - 1, lo, hi);
        QuadResult {
            value: left.value + right.value,
            abs_error: left.abs_error + right.abs_error,
        }
    }
    recurse(f, a, b, abs_tol, rel_tol, max_depth, &lo, &hi)
}

/// One tanh-sinh abscissa with stably computed endpoint distances, so
/// integrands singular at either end see full relative precision.
#[derive(Debug, Clone, Copy)]
pub struct TsPoint {
    pub x: f64,
    /// x - a, exact near the left endpoint.
    pub from_a: f64,
    /// b - x, exact near the right endpoint.
    pub from_b: f64,
}

/// Tanh-sinh rule on (a, b); robust to integrable endpoint singularities.
///
/// Doubles the node density per level until the level-to-level change falls
/// under the tolerance. Node abscissae never touch the endpoints; non-finite
/// samples (which can only arise from over-resolved endpoint underflow) are
/// dropped with their double-exponentially small weights.
pub fn tanh_sinh<T: Integrand>(f: &impl Fn(f64) -> T, a: f64, b: f64, tol: f64) -> QuadResult<T> {
    tanh_sinh_pt(&|p: TsPoint| f(p.x), a, b, tol)
}

/// [`tanh_sinh`] variant whose integrand receives the stable endpoint
/// distances; required when the integrand is singular at the right endpoint
/// through an expression like `b - x`.
pub fn tanh_sinh_pt<T: Integrand>(
    f: &impl Fn(TsPoint) -> T,
    a: f64,
    b: f64,
    tol: f64,
) -> QuadResult<T> {
    let half = 0.5 * (b - a);
    let sample = |u: f64| -> T {
        // x(u) = mid + half tanh(s), s = pi/2 sinh(u); the distance to the
        // nearer endpoint is half (1 - |tanh s|) = half * 2/(1+e^{2|s|}).
        let s = std::f64::consts::FRAC_PI_2 * u.sinh();
        let dist = half * 2.0 / (1.0 + (2.0 * s.abs()).exp());
        let p = if u >= 0.0 {
            TsPoint { x: b - dist, from_a: b - dist - a, from_b: dist }
        } else {
            TsPoint { x: a + dist, from_a: dist, from_b: b - a - dist }
        };
        let w = half * std::f64::consts::FRAC_PI_2 * u.cosh() / (s.cosh() * s.cosh());
        // key the cutoff on the stable distance, not on x, which rounds onto
        // the endpoint long before the node weight is negligible
        if dist <= 0.0 || w == 0.0 {
            return T::zero();
        }
        let v = f(p);
        if v.is_finite() {
            v.scale(w)
        } else {
            T::zero()
        }
    };
    let u_max = 4.0;
    let mut h = 1.0;
    let mut acc = sample(0.0);
    let mut k = 1;
    while (k as f64) * h <= u_max {
        acc = acc + sample(k as f64 * h) + sample(-(k as f64) * h);
        k += 1;
    }
    let mut value = acc.scale(h);
    let mut err = f64::INFINITY;
    for _level in 0..12 {
        h *= 0.5;
        // new nodes are the odd multiples of the refined step
        let mut extra = T::zero();
        let mut j = 1;
        while (j as f64) * h <= u_max {
            extra = extra + sample(j as f64 * h) + sample(-(j as f64) * h);
            j += 2;
        }
        let new_value = (value.scale(0.5)) + extra.scale(h);
        err = (new_value - value).norm();
        value = new_value;
        if err <= tol * (1.0 + value.norm()) {
            break;
        }
    }
    QuadResult { value, abs_error: err }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_is_exact_on_polynomials() {
        let rule = gauss_legendre(8);
        // degree-15 polynomial is integrated exactly by 8-point GL
        let v = rule.integrate(0.0, 1.0, |x| x.powi(15));
        assert!((v - 1.0 / 16.0).abs() < 1e-14);
    }

    #[test]
    fn adaptive_handles_peaked_integrand() {
        let r = adaptive(&|x: f64| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-12, 1e-12, 40);
        let exact = 2.0 * (1.0f64 / 1e-2).atan() / 1e-2;
        assert!((r.value - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn tanh_sinh_integrates_endpoint_singularity() {
        // ∫_0^1 x^{-1/2} dx = 2
        let r = tanh_sinh(&|x: f64| x.powf(-0.5), 0.0, 1.0, 1e-13);
        assert!((r.value - 2.0).abs() < 1e-11);
        // ∫_0^1 x^{-1/2}(1-x)^{-1/2} dx = pi, both endpoints singular
        let r2 = tanh_sinh_pt(&|p: TsPoint| (p.from_a * p.from_b).powf(-0.5), 0.0, 1.0, 1e-13);
        assert!((r2.value - std::f64::consts::PI).abs() < 1e-11, "{}", r2.value);
    }

    #[test]
    fn tanh_sinh_complex() {
        let r = tanh_sinh(
            &|x: f64| Complex64::new(0.0, 2.0 * x).exp(),
            0.0,
            1.0,
            1e-13,
        );
        let exact = (Complex64::new(0.0, 2.0).exp() - 1.0) / Complex64::new(0.0, 2.0);
        assert!((r.value - exact).norm() < 1e-12);
    }

    #[test]
    fn panel_driver_matches_single_panel() {
        let f = |x: f64| (3.0 * x).cos();
        let one = gauss_legendre(32).integrate(0.0, 2.0, f);
        let many = panels(&[0.0, 0.5, 1.1, 2.0], 32, f);
        assert!((one - many).abs() < 1e-13);
    }
}
