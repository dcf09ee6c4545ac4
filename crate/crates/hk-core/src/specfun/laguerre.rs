//! Generalized Laguerre polynomials in the convention normalized to 1 at 0.
//!
//! With a = order and binom(k+a, k) the standard value at zero, the
//! normalized polynomial satisfies the three-term recurrence
//!
//! ```text
//! (j+1+a) Lt_{j+1}(x) = (2j+1+a-x) Lt_j(x) - j Lt_{j-1}(x),
//! Lt_0 = 1,  Lt_1 = 1 - x/(a+1),
//! ```
//!
//! obtained by dividing the classical recurrence by binom(j+a, j). The
//! naive factorial sum cancels catastrophically for large k; the recurrence
//! is stable through the oscillatory regime because the wanted solution is
//! the bounded one (|Lt_k(x) e^{-x/2}| <= 1 for x >= 0).

/// Normalized generalized Laguerre value Lt_k^order(x), Lt(0) = 1.
pub fn laguerre(k: usize, order: usize, x: f64) -> f64 {
    let a = order as f64;
    if k == 0 {
        return 1.0;
    }
    let mut lm1 = 1.0;
    let mut l = 1.0 - x / (a + 1.0);
    for j in 1..k {
        let jf = j as f64;
        let lp1 = ((2.0 * jf + 1.0 + a - x) * l - jf * lm1) / (jf + 1.0 + a);
        lm1 = l;
        l = lp1;
    }
    l
}

/// Lt_k^order(x) * e^{-x/2}: the Gaussian-weighted value used by the
/// spherical functions. The exponential is absorbed into the recurrence seed
/// so no intermediate exceeds ~1 in magnitude for any x >= 0.
pub fn laguerre_weighted(k: usize, order: usize, x: f64) -> f64 {
    let a = order as f64;
    let w = (-0.5 * x).exp();
    if k == 0 {
        return w;
    }
    let mut lm1 = w;
    let mut l = (1.0 - x / (a + 1.0)) * w;
    for j in 1..k {
        let jf = j as f64;
        let lp1 = ((2.0 * jf + 1.0 + a - x) * l - jf * lm1) / (jf + 1.0 + a);
        lm1 = l;
        l = lp1;
    }
    l
}

/// All weighted values Lt_j^order(x) e^{-x/2} for j = 0..=k_max in one sweep.
pub fn laguerre_weighted_all(k_max: usize, order: usize, x: f64, out: &mut Vec<f64>) {
    let a = order as f64;
    out.clear();
    let w = (-0.5 * x).exp();
    out.push(w);
    if k_max == 0 {
        return;
    }
    out.push((1.0 - x / (a + 1.0)) * w);
    for j in 1..k_max {
        let jf = j as f64;
        let lp1 = ((2.0 * jf + 1.0 + a - x) * out[j] - jf * out[j - 1]) / (jf + 1.0 + a);
        out.push(lp1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Compensated (Kahan) evaluation of the explicit finite sum
    /// (n-1)! Σ_j C(k,j) (-x)^j / (j+n-1)! — the independent oracle.
    /// Also returns the largest term magnitude, which bounds what f64 can
    /// resolve after cancellation.
    fn laguerre_finite_sum(k: usize, order: usize, x: f64) -> (f64, f64) {
        let a = order as f64;
        let mut term = 1.0f64; // j = 0 term
        let mut sum = 0.0;
        let mut comp = 0.0;
        let mut max_term = 0.0f64;
        for j in 0..=k {
            max_term = max_term.max(term.abs());
            let y = term - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            // C(k,j+1)/C(k,j) = (k-j)/(j+1); extra 1/(j+1+a) from the factorial
            term *= -x * (k - j) as f64 / ((j + 1) as f64 * (j as f64 + 1.0 + a));
        }
        (sum, max_term)
    }

    #[test]
    fn value_one_at_zero_up_to_k200() {
        for n in 1..=8usize {
            for k in [0, 1, 5, 50, 120, 200] {
                assert!(
                    (laguerre(k, n - 1, 0.0) - 1.0).abs() <= 1e-12,
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn degree_zero_is_one_everywhere() {
        for x in [0.0, 0.3, 7.0, 50.0] {
            assert_eq!(laguerre(0, 4, x), 1.0);
        }
    }

    #[test]
    fn degree_one_order_zero() {
        // explicit finite-sum formula at n = 1, k = 1 gives 1 - x
        assert!((laguerre(1, 0, 2.0) - (-1.0)).abs() < 1e-15);
        assert!((laguerre(1, 0, 0.25) - 0.75).abs() < 1e-15);
    }

    #[test]
    fn recurrence_matches_finite_sum_on_log_grid() {
        // k <= 25, x on a log grid in [1e-3, 50]: relative 1e-9
        for n in 1..=4usize {
            for k in [1, 2, 5, 12, 25] {
                for i in 0..=20 {
                    let x = 1e-3 * (50.0f64 / 1e-3).powf(i as f64 / 20.0);
                    let r = laguerre(k, n - 1, x);
                    let (s, max_term) = laguerre_finite_sum(k, n - 1, x);
                    // the oracle itself cannot beat eps * (largest term): the
                    // alternating sum is that ill-conditioned in f64
                    let scale = r.abs().max(s.abs()).max(1e-12);
                    let floor = 64.0 * f64::EPSILON * max_term;
                    assert!(
                        (r - s).abs() <= (1e-9 * scale).max(floor),
                        "k={k} n={n} x={x}: rec={r} sum={s} floor={floor:e}"
                    );
                }
            }
        }
    }

    #[test]
    fn weighted_is_bounded_by_one() {
        for k in [0, 3, 17, 80, 300] {
            for order in [0, 1, 2] {
                for i in 0..60 {
                    let x = 0.5 * i as f64 * i as f64;
                    let v = laguerre_weighted(k, order, x);
                    assert!(v.abs() <= 1.0 + 1e-10, "k={k} a={order} x={x}: {v}");
                }
            }
        }
    }

    #[test]
    fn weighted_all_agrees_with_single() {
        let mut buf = Vec::new();
        laguerre_weighted_all(20, 2, 7.3, &mut buf);
        for (j, v) in buf.iter().enumerate() {
            assert!((v - laguerre_weighted(j, 2, 7.3)).abs() < 1e-14);
        }
    }
}
