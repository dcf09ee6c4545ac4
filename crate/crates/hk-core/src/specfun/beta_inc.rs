//! Incomplete Beta function B_x(a, b) = ∫₀ˣ ν^{a-1} (1-ν)^{b-1} dν
//! (unregularized), by Lentz's continued fraction for the regularized
//! function scaled back with exp(ln B(a, b)).

use super::gamma::ln_beta;
use super::SpecFunError;
use crate::quad::tanh_sinh;

/// Regularized I_x(a,b) continued fraction (Lentz), valid for
/// x < (a+1)/(a+b+2); callers apply the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
fn bet_cf(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..400 {
        let mf = m as f64;
        let m2 = 2.0 * mf;
        let aa = mf * (b - mf) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + mf) * (qab + mf) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

fn regularized(a: f64, b: f64, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if x == 1.0 {
        return 1.0;
    }
    let front = (a * x.ln() + b * (1.0 - x).ln() - ln_beta(a, b)).exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        front * bet_cf(a, b, x) / a
    } else {
        1.0 - front * bet_cf(b, a, 1.0 - x) / b
    }
}

/// Unregularized incomplete Beta B_x(a, b); requires a > 0, b > 0, x in [0, 1].
pub fn incomplete_beta(x: f64, a: f64, b: f64) -> Result<f64, SpecFunError> {
    if !(a > 0.0 && b > 0.0) {
        return Err(SpecFunError::Domain { context: "incomplete_beta: a, b must be > 0" });
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(SpecFunError::Domain { context: "incomplete_beta: x must be in [0,1]" });
    }
    Ok(regularized(a, b, x) * ln_beta(a, b).exp())
}

/// B_x(a, b) for x strictly below 1 with arbitrary real b (the integral is
/// finite whenever a > 0 and x < 1). Used by the closed-form kernel, where
/// b = (n+α)/2 can drop to 0 or below for strongly negative α.
pub(crate) fn incomplete_beta_extended(x: f64, a: f64, b: f64) -> Result<f64, SpecFunError> {
    if !(a > 0.0) || !(0.0..1.0).contains(&x) {
        return Err(SpecFunError::Domain { context: "incomplete_beta_extended: a > 0, 0 <= x < 1" });
    }
    if b > 0.0 {
        return incomplete_beta(x, a, b);
    }
    let r = tanh_sinh(&|v: f64| v.powf(a - 1.0) * (1.0 - v).powf(b - 1.0), 0.0, x, 1e-14);
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::super::gamma::ln_gamma;
    use super::*;

    #[test]
    fn constant_integrand() {
        assert!((incomplete_beta(0.5, 1.0, 1.0).unwrap() - 0.5).abs() < 5e-15);
    }

    #[test]
    fn half_point_symmetric_identity() {
        // B_{1/2}(n/2, n/2) = Γ(n/2)² / (2 Γ(n)), n <= 10
        for n in 1..=10u32 {
            let a = n as f64 / 2.0;
            let got = incomplete_beta(0.5, a, a).unwrap();
            let expect = (2.0 * ln_gamma(a) - ln_gamma(n as f64)).exp() / 2.0;
            assert!(
                (got - expect).abs() <= 1e-12 * expect,
                "n={n}: {got} vs {expect}"
            );
        }
    }

    #[test]
    fn half_half_is_pi_over_two() {
        let got = incomplete_beta(0.5, 0.5, 0.5).unwrap();
        assert!((got - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
    }

    #[test]
    fn full_range_is_beta() {
        for &(a, b) in &[(0.5, 0.5), (2.0, 3.0), (7.5, 12.0), (30.0, 45.0)] {
            let got = incomplete_beta(1.0, a, b).unwrap();
            let expect = (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp();
            assert!((got - expect).abs() <= 1e-10 * expect, "a={a} b={b}");
        }
    }

    #[test]
    fn matches_quadrature_midrange() {
        for &(x, a, b) in &[(0.3, 1.7, 4.2), (0.9, 0.4, 2.0), (0.5, 6.0, 0.25)] {
            let got = incomplete_beta(x, a, b).unwrap();
            let q = tanh_sinh(&|v: f64| v.powf(a - 1.0) * (1.0 - v).powf(b - 1.0), 0.0, x, 1e-14);
            assert!((got - q.value).abs() < 1e-11 * got.abs().max(1.0));
        }
    }

    #[test]
    fn domain_errors() {
        assert!(incomplete_beta(0.5, 0.0, 1.0).is_err());
        assert!(incomplete_beta(0.5, 1.0, -2.0).is_err());
        assert!(incomplete_beta(1.5, 1.0, 1.0).is_err());
    }

    #[test]
    fn extended_handles_nonpositive_b() {
        // B_{1/2}(1, 0) = ∫₀^{1/2} (1-v)^{-1} dv = ln 2
        let got = incomplete_beta_extended(0.5, 1.0, 0.0).unwrap();
        assert!((got - std::f64::consts::LN_2).abs() < 1e-11);
        // and it matches the CF path when b > 0
        let a = incomplete_beta_extended(0.5, 2.0, 1.5).unwrap();
        let b = incomplete_beta(0.5, 2.0, 1.5).unwrap();
        assert!((a - b).abs() < 1e-14);
    }
}
