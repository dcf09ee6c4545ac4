//! Gallery of closed-form Schwartz-class stand-ins used by the pairing,
//! convolution and calibration machinery:
//!
//! * `G1 = exp(-|z|² - t²)` — U(n)-invariant, even in t;
//! * `G2 = exp(-|z|² - t²) · t` — U(n)-invariant, odd in t;
//! * `G3 = φ_{λ₀,k₀}(z,t) · exp(-(|z|²+t²)/σ²)` — a windowed spherical
//!   function concentrating its spectral mass near (λ₀, k₀).

use crate::heisenberg::GroupPoint;
use crate::specfun::laguerre_weighted;
use num_complex::Complex64;

/// Declared symmetry of a field in the central variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TParity {
    Even,
    Odd,
    None,
}

/// A scalar field on H_n usable by the quadrature engines.
///
/// `is_separable` opts a field into the fast convolution path; implementors
/// returning `true` must guarantee `eval((z,t)) = z_part(z) * t_part(t)`.
pub trait GroupField: Sync {
    fn eval(&self, g: &GroupPoint) -> Complex64;

    /// Whether the field depends on z only through U(n)-invariants.
    fn u_n_invariant(&self) -> bool {
        false
    }

    fn is_separable(&self) -> bool {
        false
    }

    fn z_part(&self, _z: &[Complex64]) -> Complex64 {
        unimplemented!("z_part called on a non-separable field")
    }

    fn t_part(&self, _t: f64) -> Complex64 {
        unimplemented!("t_part called on a non-separable field")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    G1,
    G2,
    G3 { lambda0: f64, k0: usize, sigma: f64 },
}

/// A named gallery function on H_n.
#[derive(Debug, Clone, PartialEq)]
pub struct GalleryFunction {
    pub name: &'static str,
    pub n: usize,
    kind: Kind,
}

impl GalleryFunction {
    pub fn g1(n: usize) -> Self {
        GalleryFunction { name: "G1", n, kind: Kind::G1 }
    }

    pub fn g2(n: usize) -> Self {
        GalleryFunction { name: "G2", n, kind: Kind::G2 }
    }

    /// Windowed spherical function; σ = 4 is the standard window width.
    pub fn g3(n: usize, lambda0: f64, k0: usize, sigma: f64) -> Self {
        assert!(lambda0 != 0.0 && sigma > 0.0);
        GalleryFunction { name: "G3", n, kind: Kind::G3 { lambda0, k0, sigma } }
    }

    /// Default G3 instance (λ₀ = 2, k₀ = 0, σ = 4).
    pub fn g3_default(n: usize) -> Self {
        Self::g3(n, 2.0, 0, 4.0)
    }

    pub fn by_name(name: &str, n: usize) -> Option<Self> {
        match name {
            "G1" | "g1" => Some(Self::g1(n)),
            "G2" | "g2" => Some(Self::g2(n)),
            "G3" | "g3" => Some(Self::g3_default(n)),
            _ => None,
        }
    }

    pub fn t_parity(&self) -> TParity {
        match self.kind {
            Kind::G1 => TParity::Even,
            Kind::G2 => TParity::Odd,
            Kind::G3 { .. } => TParity::None,
        }
    }

    /// Quadratic decay rates (a_z, a_t) with |f| <= C e^{-a_z |z|² - a_t t²}.
    pub fn decay_rates(&self) -> (f64, f64) {
        match self.kind {
            Kind::G1 | Kind::G2 => (1.0, 1.0),
            Kind::G3 { lambda0, sigma, .. } => {
                (lambda0.abs() / 4.0 + 1.0 / (sigma * sigma), 1.0 / (sigma * sigma))
            }
        }
    }

    /// Half-width beyond which |f| < e^{-budget} in each direction.
    pub fn support_radius(&self, budget: f64) -> (f64, f64) {
        let (az, at) = self.decay_rates();
        ((budget / az).sqrt(), (budget / at).sqrt())
    }

    fn z_profile(&self, z_norm_sq: f64) -> Complex64 {
        match self.kind {
            Kind::G1 | Kind::G2 => Complex64::new((-z_norm_sq).exp(), 0.0),
            Kind::G3 { lambda0, k0, sigma } => {
                let radial = laguerre_weighted(k0, self.n - 1, lambda0.abs() * z_norm_sq / 2.0);
                Complex64::new(radial * (-z_norm_sq / (sigma * sigma)).exp(), 0.0)
            }
        }
    }
}

impl GroupField for GalleryFunction {
    fn eval(&self, g: &GroupPoint) -> Complex64 {
        debug_assert_eq!(g.dim(), self.n);
        self.z_part(&g.z) * self.t_part(g.t)
    }

    fn u_n_invariant(&self) -> bool {
        true
    }

    fn is_separable(&self) -> bool {
        true
    }

    fn z_part(&self, z: &[Complex64]) -> Complex64 {
        self.z_profile(z.iter().map(|w| w.norm_sqr()).sum())
    }

    fn t_part(&self, t: f64) -> Complex64 {
        match self.kind {
            Kind::G1 => Complex64::new((-t * t).exp(), 0.0),
            Kind::G2 => Complex64::new(t * (-t * t).exp(), 0.0),
            Kind::G3 { lambda0, sigma, .. } => {
                Complex64::new(0.0, lambda0 * t).exp() * (-t * t / (sigma * sigma)).exp()
            }
        }
    }
}

/// Field scaled and dilated: c · f(δ_{1/r} g). Used by the scaling checks.
pub struct DilatedField<'a> {
    pub inner: &'a GalleryFunction,
    pub inv_r: f64,
    pub scale: f64,
}

impl GroupField for DilatedField<'_> {
    fn eval(&self, g: &GroupPoint) -> Complex64 {
        self.inner.eval(&crate::heisenberg::dilation(g, self.inv_r)) * self.scale
    }

    fn u_n_invariant(&self) -> bool {
        true
    }

    fn is_separable(&self) -> bool {
        true
    }

    fn z_part(&self, z: &[Complex64]) -> Complex64 {
        let scaled: Vec<Complex64> = z.iter().map(|w| w * self.inv_r).collect();
        self.inner.z_part(&scaled) * self.scale
    }

    fn t_part(&self, t: f64) -> Complex64 {
        self.inner.t_part(t * self.inv_r * self.inv_r)
    }
}
