//! Three independent evaluations of the distribution pairing ⟨Φ_α, f⟩.
//!
//! * [`pair_spatial`] — direct quadrature of ∫ density(g) f(g) dg, split by a
//!   smooth partition of unity at the exclusion radius: a fully polar patch
//!   over the singular ball (where the kernel's ρ^{-n} cancels against the
//!   Jacobian, leaving a bounded integrand) plus Cartesian Gauss–Legendre
//!   panels outside. Richardson over two exclusion radii gives the error
//!   estimate.
//! * [`pair_angular`] — the reduced one-dimensional form
//!   `-β̂_n ∫ ReΨ_α(θ) K_f(θ) dθ` with
//!   `K_f(θ) = cos^{n-1}θ ∫₀^∞ Af(√(ρ cos θ), ρ sin θ / 4) dρ`.
//! * [`pair_spectral`] — the spherical-expansion sum over (λ, k) with the
//!   kernel multiplier -1/(|λ|(2k+n-α)), the multiplicity weight C(k+n-1,k)
//!   of the degree-k eigenspace, and measure |λ|ⁿ dλ, truncated at (Λ, K)
//!   with a reported tail estimate. The sum carries an explicit ½ relative to
//!   its weighted raw form: propagating the expansion through the damped
//!   Laguerre transform and the half-plane polar change of variables shows
//!   the raw sum equals exactly twice the spatial normalization used by the
//!   density, and all public routes return the same convention.
//!
//! Route agreement is the strongest correctness check in the crate: the three
//! paths share no quadrature machinery beyond scalar special functions.

use super::constants::KernelConstants;
use super::density::RePsiProfile;
use super::KernelError;
use crate::config::{QuadratureSpec, Tolerances};
use crate::gallery::GroupField;
use crate::heisenberg::{average_a, sphere_nodes, GroupPoint};
use crate::operators::OperatorParams;
use crate::par::{par_map, tree_sum_complex};
use crate::quad::gauss_legendre;
use crate::specfun::laguerre_weighted_all;
use num_complex::Complex64;

/// A pairing value with its internal accuracy diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairingOutcome {
    pub value: Complex64,
    pub error_estimate: f64,
    /// Spectral-route truncation tail (2x the last k-octave), when relevant.
    pub tail_estimate: Option<f64>,
}

/// C^∞ cutoff: 1 on u <= 1, 0 on u >= 2.
fn smooth_cutoff(u: f64) -> f64 {
    if u <= 1.0 {
        1.0
    } else if u >= 2.0 {
        0.0
    } else {
        let a = (-1.0 / (u - 1.0)).exp();
        let b = (-1.0 / (2.0 - u)).exp();
        b / (a + b)
    }
}

/// Symmetric graded panel breaks: refined at 0 and at the exclusion scale.
fn graded_sym_breaks(max: f64, eps0: f64) -> Vec<f64> {
    let mut pos = vec![0.0, 0.5 * eps0, eps0, 2.0 * eps0];
    let mut x: f64 = 2.0 * eps0;
    while x < max {
        x = (x * 1.6).min(max);
        pos.push(x);
    }
    pos.retain(|v| *v <= max + 1e-12);
    if *pos.last().unwrap() < max {
        pos.push(max);
    }
    let mut all: Vec<f64> = pos.iter().map(|v| -v).chain(pos.iter().copied()).collect();
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all.dedup();
    all
}

/// θ panel breaks over (-edge, edge), geometrically refined at both ends.
fn theta_breaks(edge: f64) -> Vec<f64> {
    let hp = std::f64::consts::FRAC_PI_2;
    let mut pos = vec![0.0, 0.3, 0.6, 0.9, 1.2];
    for k in [0.2, 0.05, 0.01, 1e-3, 1e-5, 1e-8, 1e-11] {
        if hp - k < edge {
            pos.push(hp - k);
        }
    }
    pos.push(edge);
    pos.retain(|v| *v <= edge);
    let mut all: Vec<f64> = pos.iter().map(|v| -v).chain(pos.iter().copied()).collect();
    all.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all.dedup();
    all
}

struct ThetaRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    re_psi: Vec<f64>,
}

fn theta_rule(profile: &RePsiProfile, order: usize) -> Result<ThetaRule, KernelError> {
    let gl = gauss_legendre(order);
    let breaks = theta_breaks(profile.theta_edge());
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for w in breaks.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        let mid = 0.5 * (w[0] + w[1]);
        for (x, wt) in gl.nodes.iter().zip(&gl.weights) {
            nodes.push(mid + half * x);
            weights.push(wt * half);
        }
    }
    let re_psi = nodes.iter().map(|&t| profile.eval(t)).collect::<Result<Vec<_>, _>>()?;
    Ok(ThetaRule { nodes, weights, re_psi })
}

/// Polar-coordinate integral of χ_scaled(ρ) · density · f over ρ ∈ (0, ρ_max].
///
/// In the coordinates ρ e^{iθ} = |z|² + 4it, ξ ∈ S^{2n-1} the measure is
/// dg = ρⁿ cos^{n-1}θ / 8 dρ dθ dσ(ξ) and the kernel contributes ρ^{-n}, so
/// the integrand is bounded: no regularization is needed at the identity.
#[allow(clippy::too_many_arguments)]
fn polar_piece(
    constants: &KernelConstants,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    rho_breaks: &[f64],
    theta: &ThetaRule,
    cutoff: impl Fn(f64) -> f64 + Sync,
) -> Complex64 {
    let n = constants.n as usize;
    let gl = gauss_legendre(quad.gl_order.max(8));
    let sphere: Vec<(Vec<Complex64>, f64)> = if f.u_n_invariant() {
        vec![(
            std::iter::once(Complex64::new(1.0, 0.0))
                .chain(std::iter::repeat(Complex64::new(0.0, 0.0)))
                .take(n)
                .collect(),
            constants.sphere,
        )]
    } else {
        sphere_nodes(n, &quad.sphere)
    };

    let prefactor = -constants.beta_n * constants.global_scale / 8.0;
    let contributions = par_map(theta.nodes.len(), |ti| {
        let th = theta.nodes[ti];
        let (sin_t, cos_t) = th.sin_cos();
        let angular = theta.weights[ti] * theta.re_psi[ti] * cos_t.powi(n as i32 - 1);
        if angular == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for w in rho_breaks.windows(2) {
            let half = 0.5 * (w[1] - w[0]);
            let mid = 0.5 * (w[0] + w[1]);
            for (x, wr) in gl.nodes.iter().zip(&gl.weights) {
                let rho = mid + half * x;
                let chi = cutoff(rho);
                if chi == 0.0 {
                    continue;
                }
                let radius = (rho * cos_t).max(0.0).sqrt();
                let t_coord = rho * sin_t / 4.0;
                let mut sph = Complex64::new(0.0, 0.0);
                for (xi, wxi) in &sphere {
                    let p = GroupPoint::new(xi.iter().map(|v| v * radius).collect(), t_coord);
                    sph += f.eval(&p) * *wxi;
                }
                acc += sph * (chi * wr * half);
            }
        }
        acc * angular
    });
    tree_sum_complex(&contributions) * prefactor
}

/// Cartesian Gauss–Legendre sweep of (1-χ(ρ/ε₀)) · density · f (n = 1 only).
fn cartesian_piece(
    constants: &KernelConstants,
    profile: &RePsiProfile,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    eps0: f64,
) -> Complex64 {
    let gl = gauss_legendre(quad.gl_order.max(8));
    let xy_breaks = graded_sym_breaks(quad.box_radius_z, eps0);
    let t_breaks = graded_sym_breaks(quad.box_radius_t, 0.5 * eps0);

    let expand = |breaks: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for w in breaks.windows(2) {
            let half = 0.5 * (w[1] - w[0]);
            let mid = 0.5 * (w[0] + w[1]);
            for (x, wt) in gl.nodes.iter().zip(&gl.weights) {
                nodes.push(mid + half * x);
                weights.push(wt * half);
            }
        }
        (nodes, weights)
    };
    let (xs, wxs) = expand(&xy_breaks);
    let (ts, wts) = expand(&t_breaks);

    let columns = par_map(xs.len(), |ix| {
        let x = xs[ix];
        let mut acc = Complex64::new(0.0, 0.0);
        for (iy, y) in xs.iter().enumerate() {
            let zsq = x * x + y * y;
            let zp = [Complex64::new(x, *y)];
            for (it, t) in ts.iter().enumerate() {
                let rho = (zsq * zsq + 16.0 * t * t).sqrt();
                let one_minus_chi = 1.0 - smooth_cutoff(rho / eps0);
                if one_minus_chi == 0.0 {
                    continue;
                }
                let theta = (4.0 * t).atan2(zsq);
                let re_psi = profile.eval(theta).unwrap_or(0.0);
                let dens = -constants.beta_n * re_psi / rho * constants.global_scale;
                let p = GroupPoint { z: zp.to_vec(), t: *t };
                acc += f.eval(&p) * (dens * one_minus_chi * wxs[iy] * wts[it]);
            }
        }
        acc * wxs[ix]
    });
    tree_sum_complex(&columns)
}

fn spatial_once(
    p: &OperatorParams,
    constants: &KernelConstants,
    profile: &RePsiProfile,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    eps0: f64,
) -> Result<Complex64, KernelError> {
    let theta = theta_rule(profile, quad.angular_order.min(16))?;
    if p.n == 1 {
        let rho_breaks: Vec<f64> =
            vec![0.0, 0.25 * eps0, 0.5 * eps0, eps0, 1.5 * eps0, 2.0 * eps0];
        let patch = polar_piece(constants, f, quad, &rho_breaks, &theta, |rho| {
            smooth_cutoff(rho / eps0)
        });
        let outside = cartesian_piece(constants, profile, f, quad, eps0);
        Ok(patch + outside)
    } else {
        // full polar sweep; the (ρ,θ) integrand is bounded everywhere
        let rho_max = (quad.box_radius_z * quad.box_radius_z).max(4.0 * quad.box_radius_t);
        let mut rho_breaks = vec![0.0, 0.5, 1.0, 2.0];
        let mut x: f64 = 2.0;
        while x < rho_max {
            x = (x * 1.6).min(rho_max);
            rho_breaks.push(x);
        }
        Ok(polar_piece(constants, f, quad, &rho_breaks, &theta, |_| 1.0))
    }
}

/// ⟨Φ_α, f⟩ by spatial quadrature against the kernel density.
pub fn pair_spatial(
    p: &OperatorParams,
    constants: &KernelConstants,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    tol: &Tolerances,
) -> Result<PairingOutcome, KernelError> {
    let profile = RePsiProfile::auto(p.n, p.alpha, tol)?.with_table()?;
    let eps0 = quad.exclusion_radius;
    let coarse = spatial_once(p, constants, &profile, f, quad, eps0)?;
    let fine = spatial_once(p, constants, &profile, f, quad, 0.5 * eps0)?;
    Ok(PairingOutcome {
        value: fine,
        error_estimate: (fine - coarse).norm(),
        tail_estimate: None,
    })
}

/// The angular weight K_f(θ) = cos^{n-1}θ ∫₀^∞ Af(√(ρcosθ), ρ sinθ/4) dρ.
pub fn angular_profile_k(
    f: &dyn GroupField,
    n: usize,
    theta: f64,
    quad: &QuadratureSpec,
) -> Complex64 {
    let (sin_t, cos_t) = theta.sin_cos();
    let rho_max = (quad.box_radius_z * quad.box_radius_z).max(4.0 * quad.box_radius_t);
    let mut breaks = vec![0.0, 0.5, 1.0, 2.0, 4.0];
    let mut x: f64 = 4.0;
    while x < rho_max {
        x = (x * 1.5).min(rho_max);
        breaks.push(x);
    }
    let gl = gauss_legendre(16);
    let mut acc = Complex64::new(0.0, 0.0);
    for w in breaks.windows(2) {
        let half = 0.5 * (w[1] - w[0]);
        let mid = 0.5 * (w[0] + w[1]);
        for (xn, wt) in gl.nodes.iter().zip(&gl.weights) {
            let rho = mid + half * xn;
            let radius = (rho * cos_t).max(0.0).sqrt();
            let t_coord = rho * sin_t / 4.0;
            let af = if f.u_n_invariant() {
                let p = GroupPoint::new(
                    std::iter::once(Complex64::new(radius, 0.0))
                        .chain(std::iter::repeat(Complex64::new(0.0, 0.0)))
                        .take(n)
                        .collect(),
                    t_coord,
                );
                f.eval(&p)
            } else {
                average_a(|p| f.eval(p), n, radius, t_coord, &quad.sphere)
            };
            acc += af * (wt * half);
        }
    }
    acc * cos_t.powi(n as i32 - 1)
}

/// ⟨Φ_α, f⟩ through the angular reduction -β̂_n ∫ ReΨ_α(θ) K_f(θ) dθ.
pub fn pair_angular(
    p: &OperatorParams,
    constants: &KernelConstants,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    tol: &Tolerances,
) -> Result<PairingOutcome, KernelError> {
    let n = p.n as usize;
    // membership gate for the angular test space: K_f and its first n-2
    // derivatives must vanish at ±π/2; checked numerically on the values.
    if n >= 2 {
        let probe = std::f64::consts::FRAC_PI_2 - 1e-5;
        let scale = angular_profile_k(f, n, 0.0, quad).norm().max(1e-30);
        for s in [-1.0, 1.0] {
            let edge = angular_profile_k(f, n, s * probe, quad).norm();
            if edge > 1e-4 * scale {
                return Err(KernelError::ProfileInvalid { value: edge });
            }
        }
    }
    let profile = RePsiProfile::auto(p.n, p.alpha, tol)?;
    let run = |order: usize| -> Result<Complex64, KernelError> {
        let rule = theta_rule(&profile, order)?;
        let vals = par_map(rule.nodes.len(), |i| {
            angular_profile_k(f, n, rule.nodes[i], quad) * (rule.weights[i] * rule.re_psi[i])
        });
        Ok(tree_sum_complex(&vals) * (-constants.beta_hat * constants.global_scale))
    };
    let coarse = run(10)?;
    let fine = run(14)?;
    Ok(PairingOutcome {
        value: fine,
        error_estimate: (fine - coarse).norm(),
        tail_estimate: None,
    })
}

/// ⟨Φ_α, f⟩ through the (λ, k) spherical expansion.
pub fn pair_spectral(
    p: &OperatorParams,
    constants: &KernelConstants,
    f: &dyn GroupField,
    quad: &QuadratureSpec,
    _tol: &Tolerances,
) -> Result<PairingOutcome, KernelError> {
    let n = p.n as usize;
    let big_k = quad.k_cutoff;

    // (R, t) product mesh for <phi_{lam,k}, f>
    let gl = gauss_legendre(10);
    let mesh_1d = |lo: f64, hi: f64, width: f64| -> (Vec<f64>, Vec<f64>) {
        let panels = ((hi - lo) / width).ceil() as usize;
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for j in 0..panels {
            let a = lo + (hi - lo) * j as f64 / panels as f64;
            let b = lo + (hi - lo) * (j + 1) as f64 / panels as f64;
            let half = 0.5 * (b - a);
            let mid = 0.5 * (a + b);
            for (x, w) in gl.nodes.iter().zip(&gl.weights) {
                nodes.push(mid + half * x);
                weights.push(w * half);
            }
        }
        (nodes, weights)
    };
    let (r_nodes, r_weights) = mesh_1d(0.0, quad.box_radius_z, 0.5);
    let (t_nodes, t_weights) = mesh_1d(-quad.box_radius_t, quad.box_radius_t, 0.5);

    // sphere average of f on the mesh
    let af: Vec<Complex64> = {
        let nr = r_nodes.len();
        let vals = par_map(nr * t_nodes.len(), |idx| {
            let (ir, it) = (idx / t_nodes.len(), idx % t_nodes.len());
            if f.u_n_invariant() {
                let pt = GroupPoint::new(
                    std::iter::once(Complex64::new(r_nodes[ir], 0.0))
                        .chain(std::iter::repeat(Complex64::new(0.0, 0.0)))
                        .take(n)
                        .collect(),
                    t_nodes[it],
                );
                f.eval(&pt)
            } else {
                average_a(|q| f.eval(q), n, r_nodes[ir], t_nodes[it], &quad.sphere)
            }
        });
        vals
    };

    // λ panels, geometric on [λ_min, Λ], both signs
    let panels = 16usize.max(quad.refinement_depth / 2);
    let gl_lambda = gauss_legendre(12);
    let mut lam_nodes = Vec::new();
    let mut lam_weights = Vec::new();
    for j in 0..panels {
        let a = quad.lambda_min * (quad.lambda_cutoff / quad.lambda_min).powf(j as f64 / panels as f64);
        let b = quad.lambda_min
            * (quad.lambda_cutoff / quad.lambda_min).powf((j + 1) as f64 / panels as f64);
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        for (x, w) in gl_lambda.nodes.iter().zip(&gl_lambda.weights) {
            lam_nodes.push(mid + half * x);
            lam_weights.push(w * half);
        }
    }

    let nt = t_nodes.len();
    let per_lambda = par_map(2 * lam_nodes.len(), |li| {
        let sign = if li < lam_nodes.len() { 1.0 } else { -1.0 };
        let lam = sign * lam_nodes[li % lam_nodes.len()];
        let w_lam = lam_weights[li % lam_nodes.len()];
        let abs_lam = lam.abs();

        // t-transform of Af per radius
        let mut s_of_r = vec![Complex64::new(0.0, 0.0); r_nodes.len()];
        for (ir, s) in s_of_r.iter_mut().enumerate() {
            let mut acc = Complex64::new(0.0, 0.0);
            for it in 0..nt {
                acc += af[ir * nt + it] * Complex64::new(0.0, lam * t_nodes[it]).exp() * t_weights[it];
            }
            *s = acc;
        }

        // all Laguerre degrees at once per radius
        let mut lag = Vec::new();
        let mut sum_k = Complex64::new(0.0, 0.0);
        let mut tail_k = Complex64::new(0.0, 0.0);
        let mut mass = vec![Complex64::new(0.0, 0.0); big_k + 1];
        for (ir, &r) in r_nodes.iter().enumerate() {
            laguerre_weighted_all(big_k, n - 1, abs_lam * r * r / 2.0, &mut lag);
            let geom = r_weights[ir] * r.powi(2 * n as i32 - 1);
            for (k, m) in mass.iter_mut().enumerate() {
                *m += s_of_r[ir] * (lag[k] * geom);
            }
        }
        let mut multiplicity = 1.0f64; // C(k+n-1, k), built incrementally
        for (k, m) in mass.iter().enumerate() {
            if k > 0 {
                multiplicity *= (k + n - 1) as f64 / k as f64;
            }
            let eig = -1.0 / (abs_lam * (2.0 * k as f64 + n as f64 - p.alpha));
            let contrib = m * (constants.sphere * multiplicity * eig * abs_lam.powi(n as i32));
            sum_k += contrib;
            if 2 * k > big_k {
                tail_k += contrib;
            }
        }
        (sum_k * w_lam, tail_k * w_lam)
    });

    let raw: Complex64 = tree_sum_complex(&per_lambda.iter().map(|x| x.0).collect::<Vec<_>>());
    let tail_raw: Complex64 = tree_sum_complex(&per_lambda.iter().map(|x| x.1).collect::<Vec<_>>());

    // spectral-to-spatial normalization: the raw expansion sum is exactly
    // twice the density normalization shared by the other two routes
    let value = raw * (0.5 * constants.global_scale);
    let tail = tail_raw.norm();
    if tail > quad.spectral_tail_tol * value.norm().max(1e-30) {
        return Err(KernelError::TruncationDominant { tail });
    }
    Ok(PairingOutcome { value, error_estimate: tail, tail_estimate: Some(tail) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::GalleryFunction;

    #[test]
    fn cutoff_shape() {
        assert_eq!(smooth_cutoff(0.3), 1.0);
        assert_eq!(smooth_cutoff(2.5), 0.0);
        let mid = smooth_cutoff(1.5);
        assert!(mid > 0.4 && mid < 0.6);
        assert!(smooth_cutoff(1.2) > smooth_cutoff(1.8));
    }

    #[test]
    fn k_profile_anchor_at_zero() {
        // G1, n = 1: K_f(0) = ∫₀^∞ e^{-ρ} dρ = 1
        let f = GalleryFunction::g1(1);
        let quad = QuadratureSpec::default();
        let v = angular_profile_k(&f, 1, 0.0, &quad);
        assert!((v.re - 1.0).abs() < 1e-10, "{}", v.re);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn angular_pairing_of_odd_function_vanishes() {
        let f = GalleryFunction::g2(1);
        let p = OperatorParams::new(1, 0.0).unwrap();
        let c = KernelConstants::new(1);
        let out = pair_angular(&p, &c, &f, &QuadratureSpec::default(), &Tolerances::default())
            .unwrap();
        assert!(out.value.norm() < 1e-8, "{:?}", out.value);
    }

    #[test]
    fn spectral_truncation_guard_fires() {
        let f = GalleryFunction::g1(1);
        let p = OperatorParams::new(1, 0.0).unwrap();
        let c = KernelConstants::new(1);
        let quad = QuadratureSpec { k_cutoff: 8, spectral_tail_tol: 1e-4, ..Default::default() };
        assert!(matches!(
            pair_spectral(&p, &c, &f, &quad, &Tolerances::default()),
            Err(KernelError::TruncationDominant { .. })
        ));
    }
}
