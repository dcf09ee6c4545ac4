//! Pointwise kernel density in its two forms.
//!
//! Both reduce to `-β_n · ReΨ_α(θ) · ρ^{-n}` with `ρ e^{iθ} = |z|² + 4it`
//! (so ρ is the homogeneous gauge and θ ∈ (-π/2, π/2) off the z = 0 axis);
//! the two forms differ in how the angular profile ReΨ_α is produced:
//!
//! * hypergeometric: `ReΨ_α(θ) = Re(e^{inθ} F_α(-e^{2iθ}))/(n-α)` through the
//!   boundary ₂F₁ machinery (Euler integral for α < n, Abel summation
//!   otherwise);
//! * closed (α < n only):
//!   `ReΨ_α(θ) = ½ B_{1/2}((n-α)/2,(n+α)/2) cos(αθ) + 2^{-n} m_α(θ)`.
//!
//! The two never share a numerical path, which is what makes their pointwise
//! agreement a meaningful check.

use super::constants::KernelConstants;
use super::KernelError;
use crate::config::Tolerances;
use crate::heisenberg::{cc_norm, GroupPoint};
use crate::operators::OperatorParams;
use crate::specfun::{gauss_2f1_boundary, incomplete_beta_extended, m_alpha, MAlphaParams};
use num_complex::Complex64;

const THETA_CORE: f64 = 1.2;
const CORE_STEP: f64 = 1e-3;
const EDGE_STEP: f64 = 0.01;
/// Closed path: the profile is finite (n = 1) or log-divergent but evaluable
/// arbitrarily close to ±π/2.
const EDGE_U_MIN_CLOSED: f64 = 1e-10;
/// Boundary path: Abel extrapolation needs the ₂F₁ argument to stay an
/// analyticity-radius 2cosθ away from the singular point, which caps how
/// close to ±π/2 it can go.
const EDGE_U_MIN_BOUNDARY: f64 = 5e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ProfilePath {
    Closed,
    Boundary,
}

/// Tabulated angular profile on a core-uniform + edge-log mesh.
///
/// Near ±π/2 the profile is smooth in v = ln(π/2 - θ) even where its
/// θ-derivative (n = 1) or its value (n >= 2) blows up logarithmically, so a
/// uniform-in-v cubic stays accurate to ~1e-9 all the way to u = 1e-10.
#[derive(Debug, Clone)]
struct ProfileTable {
    core: Vec<f64>,
    edge: Vec<f64>,
    v_min: f64,
}

fn cubic_interp(values: &[f64], x0: f64, h: f64, x: f64) -> f64 {
    let m = values.len();
    let j = (((x - x0) / h).floor() as isize).clamp(1, m as isize - 3) as usize;
    let s = (x - (x0 + j as f64 * h)) / h;
    let (a, b, c, d) = (values[j - 1], values[j], values[j + 1], values[j + 2]);
    // Lagrange cubic on nodes -1, 0, 1, 2 in units of h
    let w0 = -s * (s - 1.0) * (s - 2.0) / 6.0;
    let w1 = (s + 1.0) * (s - 1.0) * (s - 2.0) / 2.0;
    let w2 = -(s + 1.0) * s * (s - 2.0) / 2.0;
    let w3 = (s + 1.0) * s * (s - 1.0) / 6.0;
    a * w0 + b * w1 + c * w2 + d * w3
}

/// The angular profile ReΨ_α with an optional evaluation table.
#[derive(Debug, Clone)]
pub struct RePsiProfile {
    pub n: u32,
    pub alpha: f64,
    tol: Tolerances,
    path: ProfilePath,
    /// ½ B_{1/2}((n-α)/2, (n+α)/2); only for the closed path.
    b_half: f64,
    table: Option<ProfileTable>,
}

impl RePsiProfile {
    /// Closed-form profile (α < n).
    pub fn closed(n: u32, alpha: f64, tol: &Tolerances) -> Result<Self, KernelError> {
        if crate::specfun::is_pole_parameter(n, alpha, 1e-12) {
            return Err(KernelError::PoleParameter { alpha });
        }
        if alpha >= n as f64 {
            return Err(KernelError::AlphaOutOfRange { alpha, n });
        }
        let b_half =
            0.5 * incomplete_beta_extended(0.5, 0.5 * (n as f64 - alpha), 0.5 * (n as f64 + alpha))?;
        Ok(RePsiProfile { n, alpha, tol: *tol, path: ProfilePath::Closed, b_half, table: None })
    }

    /// Hypergeometric-boundary profile (any α off the poles).
    pub fn boundary(n: u32, alpha: f64, tol: &Tolerances) -> Result<Self, KernelError> {
        if crate::specfun::is_pole_parameter(n, alpha, 1e-12) {
            return Err(KernelError::PoleParameter { alpha });
        }
        Ok(RePsiProfile {
            n,
            alpha,
            tol: *tol,
            path: ProfilePath::Boundary,
            b_half: 0.0,
            table: None,
        })
    }

    /// Profile for the preferred route: closed when α < n, boundary otherwise.
    pub fn auto(n: u32, alpha: f64, tol: &Tolerances) -> Result<Self, KernelError> {
        if alpha < n as f64 {
            Self::closed(n, alpha, tol)
        } else {
            Self::boundary(n, alpha, tol)
        }
    }

    fn eval_direct(&self, theta: f64) -> Result<f64, KernelError> {
        let t = theta.abs();
        if t >= std::f64::consts::FRAC_PI_2 {
            return Err(KernelError::CentralAxis);
        }
        match self.path {
            ProfilePath::Closed => {
                let m = m_alpha(&MAlphaParams::new(self.n, self.alpha, theta)?)?;
                Ok(self.b_half * (self.alpha * theta).cos() + m / 2f64.powi(self.n as i32))
            }
            ProfilePath::Boundary => {
                let f = gauss_2f1_boundary(self.n, self.alpha, theta, &self.tol)?;
                let phase = Complex64::new(0.0, self.n as f64 * theta).exp();
                Ok((phase * f.value).re / (self.n as f64 - self.alpha))
            }
        }
    }

    /// Largest |θ| this profile can evaluate.
    pub fn theta_edge(&self) -> f64 {
        std::f64::consts::FRAC_PI_2 - self.edge_u_min()
    }

    fn edge_u_min(&self) -> f64 {
        match self.path {
            ProfilePath::Closed => EDGE_U_MIN_CLOSED,
            ProfilePath::Boundary => EDGE_U_MIN_BOUNDARY,
        }
    }

    /// Precompute the evaluation table (for bulk sweeps).
    pub fn with_table(mut self) -> Result<Self, KernelError> {
        let core_n = (THETA_CORE / CORE_STEP).round() as usize + 4;
        let mut core = Vec::with_capacity(core_n);
        for j in 0..core_n {
            core.push(self.eval_direct(j as f64 * CORE_STEP)?);
        }
        let v_min = self.edge_u_min().ln();
        let v_max = (std::f64::consts::FRAC_PI_2 - (THETA_CORE - 4.0 * CORE_STEP)).ln();
        let edge_n = ((v_max - v_min) / EDGE_STEP).ceil() as usize + 4;
        let mut edge = Vec::with_capacity(edge_n);
        for j in 0..edge_n {
            let u = (v_min + j as f64 * EDGE_STEP).exp();
            edge.push(self.eval_direct(std::f64::consts::FRAC_PI_2 - u)?);
        }
        self.table = Some(ProfileTable { core, edge, v_min });
        Ok(self)
    }

    /// ReΨ_α(θ); the profile is even in θ.
    pub fn eval(&self, theta: f64) -> Result<f64, KernelError> {
        let t = theta.abs();
        if t >= std::f64::consts::FRAC_PI_2 {
            return Err(KernelError::CentralAxis);
        }
        if let Some(tab) = &self.table {
            if t <= THETA_CORE {
                return Ok(cubic_interp(&tab.core, 0.0, CORE_STEP, t));
            }
            let u = std::f64::consts::FRAC_PI_2 - t;
            if u >= self.edge_u_min() * 1.01 {
                return Ok(cubic_interp(&tab.edge, tab.v_min, EDGE_STEP, u.ln()));
            }
        }
        self.eval_direct(theta)
    }

    /// Limit value on the z = 0 axis; finite only for n = 1.
    pub fn eval_axis(&self, t_sign: f64) -> Result<f64, KernelError> {
        if self.n != 1 {
            return Err(KernelError::CentralAxis);
        }
        match self.path {
            ProfilePath::Closed => {
                let m = crate::specfun::m_alpha_endpoint_limit_n1(self.alpha, t_sign);
                Ok(self.b_half * (self.alpha * std::f64::consts::FRAC_PI_2).cos() + 0.5 * m)
            }
            ProfilePath::Boundary => {
                self.eval_direct(t_sign.signum() * (std::f64::consts::FRAC_PI_2 - 1e-9))
            }
        }
    }
}

/// Gauge ρ and angle θ of a point: ρ e^{iθ} = |z|² + 4it.
pub(crate) fn polar_angle(g: &GroupPoint) -> (f64, f64) {
    let rho = cc_norm(g);
    (rho, (4.0 * g.t).atan2(g.z_norm_sq()))
}

fn density_from_profile(
    profile: &RePsiProfile,
    constants: &KernelConstants,
    g: &GroupPoint,
) -> Result<f64, KernelError> {
    let (rho, theta) = polar_angle(g);
    if rho == 0.0 {
        return Err(KernelError::Origin);
    }
    let re_psi = if g.z_norm_sq() == 0.0 {
        profile.eval_axis(g.t)?
    } else {
        profile.eval(theta)?
    };
    Ok(-constants.beta_n * re_psi * rho.powi(-(constants.n as i32)) * constants.global_scale)
}

/// Kernel density via the ₂F₁ boundary evaluation (valid for all α off the
/// excluded set).
pub fn density_hypergeometric(
    p: &OperatorParams,
    constants: &KernelConstants,
    g: &GroupPoint,
    tol: &Tolerances,
) -> Result<f64, KernelError> {
    let profile = RePsiProfile::boundary(p.n, p.alpha, tol)?;
    density_from_profile(&profile, constants, g)
}

/// Kernel density via the closed angular form (α < n).
pub fn density_closed(
    p: &OperatorParams,
    constants: &KernelConstants,
    g: &GroupPoint,
    tol: &Tolerances,
) -> Result<f64, KernelError> {
    let profile = RePsiProfile::closed(p.n, p.alpha, tol)?;
    density_from_profile(&profile, constants, g)
}

/// Bulk density evaluation over a point set (auto route, tabulated profile),
/// data-parallel.
pub fn density_grid(
    p: &OperatorParams,
    constants: &KernelConstants,
    points: &[GroupPoint],
    tol: &Tolerances,
) -> Result<Vec<f64>, KernelError> {
    let profile = RePsiProfile::auto(p.n, p.alpha, tol)?.with_table()?;
    let vals = crate::par::par_map(points.len(), |i| {
        density_from_profile(&profile, constants, &points[i]).unwrap_or(f64::NAN)
    });
    Ok(vals)
}

/// Sequential twin of [`density_grid`], kept for throughput comparison.
pub fn density_grid_seq(
    p: &OperatorParams,
    constants: &KernelConstants,
    points: &[GroupPoint],
    tol: &Tolerances,
) -> Result<Vec<f64>, KernelError> {
    let profile = RePsiProfile::auto(p.n, p.alpha, tol)?.with_table()?;
    let vals = crate::par::seq_map(points.len(), |i| {
        density_from_profile(&profile, constants, &points[i]).unwrap_or(f64::NAN)
    });
    Ok(vals)
}

impl From<crate::heisenberg::HeisenbergError> for KernelError {
    fn from(_: crate::heisenberg::HeisenbergError) -> Self {
        KernelError::QuadratureFail { context: "group-layer failure" }
    }
}

impl From<crate::operators::OperatorError> for KernelError {
    fn from(e: crate::operators::OperatorError) -> Self {
        match e {
            crate::operators::OperatorError::PoleParameter { alpha } => {
                KernelError::PoleParameter { alpha }
            }
            _ => KernelError::QuadratureFail { context: "operator-layer failure" },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::dilation;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn params(n: u32, alpha: f64) -> (OperatorParams, KernelConstants) {
        (OperatorParams::new(n, alpha).unwrap(), KernelConstants::new(n))
    }

    #[test]
    fn folland_spot_value_minus_pi() {
        let (p, c) = params(1, 0.0);
        let g = GroupPoint::h1(1.0, 0.0, 0.0);
        let d = density_closed(&p, &c, &g, &tol()).unwrap();
        assert!((d + std::f64::consts::PI).abs() < 1e-12, "{d}");
        let dh = density_hypergeometric(&p, &c, &g, &tol()).unwrap();
        assert!((dh + std::f64::consts::PI).abs() < 1e-9, "{dh}");
    }

    #[test]
    fn alpha_zero_matches_folland_profile() {
        // -4^{n-1} Γ(n/2)² (|z|⁴+16t²)^{-n/2}
        for n in [1u32, 2, 3] {
            let (p, c) = params(n, 0.0);
            let g = GroupPoint::new(
                (0..n as usize)
                    .map(|j| Complex64::new(0.6 + 0.1 * j as f64, -0.2))
                    .collect(),
                0.37,
            );
            let d = density_closed(&p, &c, &g, &tol()).unwrap();
            let gam = crate::specfun::gamma(n as f64 / 2.0);
            let expect = -4f64.powi(n as i32 - 1) * gam * gam
                * cc_norm(&g).powi(-(n as i32));
            assert!((d - expect).abs() < 1e-10 * expect.abs(), "n={n}: {d} vs {expect}");
        }
    }

    #[test]
    fn homogeneity_degree_minus_2n() {
        for &(n, alpha) in &[(1u32, 0.5), (2, 1.0), (1, 2.5)] {
            let (p, c) = params(n, alpha);
            let g = GroupPoint::new(vec![Complex64::new(0.8, 0.3); n as usize], -0.4);
            let d = density_hypergeometric(&p, &c, &g, &tol()).unwrap();
            for r in [0.5, 2.0, 5.0] {
                let dr = density_hypergeometric(&p, &c, &dilation(&g, r), &tol()).unwrap();
                let expect = d * r.powi(-2 * n as i32);
                assert!(
                    (dr - expect).abs() <= 1e-9 * expect.abs(),
                    "n={n} alpha={alpha} r={r}"
                );
            }
        }
    }

    #[test]
    fn even_in_t() {
        let (p, c) = params(2, 1.0);
        let mk = |t: f64| GroupPoint::new(vec![Complex64::new(0.5, 0.1), Complex64::new(0.0, 0.7)], t);
        let a = density_closed(&p, &c, &mk(0.9), &tol()).unwrap();
        let b = density_closed(&p, &c, &mk(-0.9), &tol()).unwrap();
        assert!((a - b).abs() < 1e-12 * a.abs());
        let ah = density_hypergeometric(&p, &c, &mk(0.9), &tol()).unwrap();
        let bh = density_hypergeometric(&p, &c, &mk(-0.9), &tol()).unwrap();
        assert!((ah - bh).abs() < 1e-9 * ah.abs());
    }

    #[test]
    fn closed_vs_hypergeometric_cross_path() {
        for &(n, alpha) in &[(1u32, 0.0), (1, 0.5), (2, 1.0), (3, -1.0)] {
            let (p, c) = params(n, alpha);
            for i in 0..8 {
                let s = 0.15 + 1.1 * i as f64 / 7.0;
                let g = GroupPoint::new(
                    vec![Complex64::new(0.5 * s, -0.3 * s); n as usize],
                    0.2 * s * s,
                );
                let dc = density_closed(&p, &c, &g, &tol()).unwrap();
                let dh = density_hypergeometric(&p, &c, &g, &tol()).unwrap();
                assert!(
                    (dc - dh).abs() <= 1e-6 * dc.abs(),
                    "n={n} alpha={alpha} i={i}: {dc} vs {dh}"
                );
            }
        }
    }

    #[test]
    fn origin_and_pole_rejected() {
        let (p, c) = params(1, 0.5);
        assert!(matches!(
            density_closed(&p, &c, &GroupPoint::origin(1), &tol()),
            Err(KernelError::Origin)
        ));
        assert!(matches!(
            density_closed(&OperatorParams { n: 1, alpha: 1.5 }, &c, &GroupPoint::h1(1.0, 0.0, 0.0), &tol()),
            Err(KernelError::AlphaOutOfRange { .. })
        ));
    }

    #[test]
    fn z_axis_closed_form_n1_matches_nearby() {
        let (p, c) = params(1, 0.5);
        let on_axis = density_closed(&p, &c, &GroupPoint::h1(0.0, 0.0, 0.5), &tol()).unwrap();
        let near = density_closed(&p, &c, &GroupPoint::h1(1e-5, 0.0, 0.5), &tol()).unwrap();
        assert!((on_axis - near).abs() < 1e-4 * on_axis.abs(), "{on_axis} vs {near}");
        // n >= 2 on the axis diverges and is reported as such
        let (p2, c2) = params(2, 0.5);
        assert!(matches!(
            density_closed(&p2, &c2, &GroupPoint::new(vec![Complex64::new(0.0, 0.0); 2], 0.5), &tol()),
            Err(KernelError::CentralAxis)
        ));
    }

    #[test]
    fn profile_table_matches_direct() {
        for &(n, alpha) in &[(1u32, 0.5), (2, 1.0), (1, 2.5)] {
            let profile = RePsiProfile::auto(n, alpha, &tol()).unwrap();
            let tabled = profile.clone().with_table().unwrap();
            let mut thetas = vec![0.0, 0.3, -0.9, 1.19, 1.3, 1.45];
            if alpha < n as f64 {
                thetas.push(std::f64::consts::FRAC_PI_2 - 1e-4);
                thetas.push(-(std::f64::consts::FRAC_PI_2 - 1e-7));
            }
            for &theta in &thetas {
                let a = profile.eval(theta).unwrap();
                let b = tabled.eval(theta).unwrap();
                assert!(
                    (a - b).abs() <= 1e-8 * (1.0 + a.abs()),
                    "n={n} alpha={alpha} theta={theta}: {a} vs {b}"
                );
            }
        }
    }
}
