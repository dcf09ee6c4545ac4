//! Named verification suites driving every identity the library exposes.
//!
//! Each check is deterministic (fixed seeds, tree summation) and returns a
//! [`VerificationReport`]; a suite is just an ordered list of checks, run
//! concurrently and merged by id.

use super::report::VerificationReport;
use super::HarnessError;
use crate::config::Config;
use crate::gallery::{DilatedField, GalleryFunction};
use crate::heisenberg::{
    average_a, cc_norm, dilation, group_inv, group_mul, sphere_area, spherical_phi, GroupPoint,
    SphericalIndex,
};
use crate::kernel::{
    contour_i, integrability_check, laguerre_transform, pair_angular, pair_spatial, pair_spectral,
    psi_r_alpha, KernelConstants,
};
use crate::operators::{
    abs_t, apply_l, apply_l_alpha, apply_vector_field, spectral_multiplier, Axis, Grid,
    OperatorParams, SampledField, VectorField,
};
use crate::par::par_map;
use crate::specfun::{
    gauss_2f1_boundary, gauss_2f1_boundary_abel, gauss_2f1_boundary_integral, gauss_2f1_interior,
    incomplete_beta, laguerre, ln_gamma, m_alpha, pochhammer, HypergeometricParams, MAlphaParams,
};
use num_complex::Complex64;
use std::str::FromStr;
use std::time::Instant;

/// The six verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Specfun,
    Group,
    Operators,
    Identities,
    Pairing,
    Fundamental,
}

impl FromStr for SuiteName {
    type Err = HarnessError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "specfun" => Ok(SuiteName::Specfun),
            "group" => Ok(SuiteName::Group),
            "operators" => Ok(SuiteName::Operators),
            "identities" => Ok(SuiteName::Identities),
            "pairing" => Ok(SuiteName::Pairing),
            "fundamental" => Ok(SuiteName::Fundamental),
            other => Err(HarnessError::UnknownSuite { name: other.to_string() }),
        }
    }
}

impl SuiteName {
    pub fn all() -> [SuiteName; 6] {
        [
            SuiteName::Specfun,
            SuiteName::Group,
            SuiteName::Operators,
            SuiteName::Identities,
            SuiteName::Pairing,
            SuiteName::Fundamental,
        ]
    }
}

type Check = Box<dyn Fn(&Config) -> VerificationReport + Sync + Send>;

fn threshold_at_least(
    id: &str,
    params: String,
    value: f64,
    least: f64,
) -> VerificationReport {
    VerificationReport {
        id: id.to_string(),
        params,
        lhs: value,
        rhs: least,
        abs_err: (least - value).max(0.0),
        rel_err: ((least - value) / least).max(0.0),
        tolerance: 0.0,
        relative: false,
        pass: value >= least,
        wall_ms: 0.0,
    }
}

/// Deterministic xorshift-multiply stream for reproducible sample points.
struct Lcg(u64);
impl Lcg {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn sym(&mut self, half: f64) -> f64 {
        (self.next() - 0.5) * 2.0 * half
    }
}

fn specfun_checks() -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "specfun.laguerre.normalization".into(),
        Box::new(|_cfg| {
            let mut worst = 0.0f64;
            for n in 1..=8usize {
                for k in [0, 1, 10, 50, 120, 200] {
                    worst = worst.max((laguerre(k, n - 1, 0.0) - 1.0).abs());
                }
            }
            VerificationReport::residual("specfun.laguerre.normalization", "k<=200, n<=8", worst, 1e-12)
        }),
    ));

    checks.push((
        "specfun.pochhammer.anchors".into(),
        Box::new(|_cfg| {
            let worst = (pochhammer(0.5, 2) - 0.75)
                .abs()
                .max((pochhammer(1.0, 3) - 6.0).abs())
                .max((pochhammer(-2.5, 0) - 1.0).abs());
            VerificationReport::residual("specfun.pochhammer.anchors", "(0.5)_2, (1)_3, (a)_0", worst, 1e-15)
        }),
    ));

    checks.push((
        "specfun.hyp2f1.log.anchor".into(),
        Box::new(|cfg| {
            let p = HypergeometricParams::real(1.0, 1.0, 2.0).unwrap();
            let v = gauss_2f1_interior(&p, Complex64::new(0.5, 0.0), &cfg.tol).unwrap();
            VerificationReport::compare(
                "specfun.hyp2f1.log.anchor",
                "2F1(1,1,2;1/2)",
                v.value.re,
                2.0 * std::f64::consts::LN_2,
                1e-12,
                true,
            )
        }),
    ));

    checks.push((
        "specfun.hyp2f1.binomial".into(),
        Box::new(|cfg| {
            let mut worst = 0.0f64;
            for &a in &[0.5, 2.0, 3.7] {
                for &(re, im) in &[(0.6, 0.3), (-0.85, 0.0), (0.0, 0.9)] {
                    let p = HypergeometricParams::real(a, 1.3, 1.3).unwrap();
                    let w = Complex64::new(re, im);
                    let got = gauss_2f1_interior(&p, w, &cfg.tol).unwrap().value;
                    let expect = ((Complex64::new(1.0, 0.0) - w).ln() * (-a)).exp();
                    worst = worst.max((got - expect).norm() / expect.norm());
                }
            }
            VerificationReport::residual(
                "specfun.hyp2f1.binomial",
                "b=c cancellation, |w|<=0.9",
                worst,
                1e-10,
            )
        }),
    ));

    checks.push((
        "specfun.beta.half.identity".into(),
        Box::new(|_cfg| {
            let mut worst = 0.0f64;
            for n in 1..=10u32 {
                let a = n as f64 / 2.0;
                let got = incomplete_beta(0.5, a, a).unwrap();
                let expect = (2.0 * ln_gamma(a) - ln_gamma(n as f64)).exp() / 2.0;
                worst = worst.max((got - expect).abs() / expect);
            }
            VerificationReport::residual(
                "specfun.beta.half.identity",
                "B_1/2(n/2,n/2) vs gamma quotient, n<=10",
                worst,
                1e-12,
            )
        }),
    ));

    checks.push((
        "specfun.beta.full".into(),
        Box::new(|_cfg| {
            let mut worst = 0.0f64;
            for &(a, b) in &[(0.5, 0.5), (2.0, 3.0), (7.5, 12.0), (30.0, 45.0)] {
                let got = incomplete_beta(1.0, a, b).unwrap();
                let expect = (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp();
                worst = worst.max((got - expect).abs() / expect);
            }
            VerificationReport::residual("specfun.beta.full", "B_1(a,b) vs gamma quotient", worst, 1e-10)
        }),
    ));

    checks.push((
        "specfun.malpha.zero".into(),
        Box::new(|_cfg| {
            let mut worst = 0.0f64;
            for &theta in &[-1.3, -0.4, 0.0, 0.8, 1.45] {
                for n in 1..=3u32 {
                    worst = worst
                        .max(m_alpha(&MAlphaParams::new(n, 0.0, theta).unwrap()).unwrap().abs());
                }
            }
            VerificationReport::residual("specfun.malpha.zero", "m_0 == 0", worst, 1e-14)
        }),
    ));

    checks.push((
        "specfun.malpha.ode.residual".into(),
        Box::new(|_cfg| {
            // residual |m'' + α²m + α secⁿθ| / (1 + |α| secⁿθ), m'' by the
            // 5-point central second difference at δ = 5e-3
            let delta = 5e-3;
            let mut worst = 0.0f64;
            for n in 1..=3u32 {
                for &alpha in &[-1.0, 0.0, 0.5, n as f64 - 0.5] {
                    for &theta in &[-1.2, -0.9, -0.6, -0.3, 0.1, 0.4, 0.7, 1.0, 1.2] {
                        let m = |th: f64| {
                            m_alpha(&MAlphaParams::new(n, alpha, th).unwrap()).unwrap()
                        };
                        let second = (-m(theta + 2.0 * delta) + 16.0 * m(theta + delta)
                            - 30.0 * m(theta)
                            + 16.0 * m(theta - delta)
                            - m(theta - 2.0 * delta))
                            / (12.0 * delta * delta);
                        let sec_n = 1.0 / theta.cos().powi(n as i32);
                        let residual = (second + alpha * alpha * m(theta) + alpha * sec_n).abs()
                            / (1.0 + alpha.abs() * sec_n);
                        worst = worst.max(residual);
                    }
                }
            }
            VerificationReport::residual(
                "specfun.malpha.ode.residual",
                "(n,alpha) in {1,2,3}x{-1,0,0.5,n-0.5}, theta grid",
                worst,
                1e-6,
            )
        }),
    ));

    checks.push((
        "specfun.hyp2f1.boundary.anchor".into(),
        Box::new(|cfg| {
            let v = gauss_2f1_boundary(1, 0.0, 0.0, &cfg.tol).unwrap();
            VerificationReport::compare(
                "specfun.hyp2f1.boundary.anchor",
                "2F1(1,1/2,3/2;-1)",
                v.value.re,
                std::f64::consts::FRAC_PI_4,
                1e-10,
                true,
            )
        }),
    ));

    checks.push((
        "specfun.hyp2f1.boundary.consistency".into(),
        Box::new(|cfg| {
            let mut worst = 0.0f64;
            for &(n, alpha) in &[(1u32, 0.0), (1, 0.5), (2, 1.0), (3, -1.0)] {
                for &theta in &[-1.2, -0.6, 0.0, 0.6, 1.2] {
                    let a = gauss_2f1_boundary_integral(n, alpha, theta, &cfg.tol).unwrap();
                    let b = gauss_2f1_boundary_abel(n, alpha, theta, &cfg.tol).unwrap();
                    worst = worst.max((a.value - b.value).norm() / a.value.norm().max(1.0));
                }
            }
            VerificationReport::residual(
                "specfun.hyp2f1.boundary.consistency",
                "integral rep vs Abel, alpha<n, theta in {-1.2..1.2}",
                worst,
                1e-6,
            )
        }),
    ));

    checks
}

fn group_checks() -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "group.associativity".into(),
        Box::new(|_cfg| {
            let mut rng = Lcg(0xDE01);
            let mut worst = 0.0f64;
            for _ in 0..100 {
                let mut p = || GroupPoint::h1(rng.sym(3.0), rng.sym(3.0), rng.sym(3.0));
                let (a, b, c) = (p(), p(), p());
                let l = group_mul(&group_mul(&a, &b).unwrap(), &c).unwrap();
                let r = group_mul(&a, &group_mul(&b, &c).unwrap()).unwrap();
                let scale = cc_norm(&l).max(1.0);
                worst = worst
                    .max((l.z[0] - r.z[0]).norm() / scale)
                    .max((l.t - r.t).abs() / scale);
            }
            VerificationReport::residual("group.associativity", "100 seeded triples", worst, 1e-13)
        }),
    ));

    checks.push((
        "group.inverse".into(),
        Box::new(|_cfg| {
            let mut rng = Lcg(0xDE02);
            let mut worst = 0.0f64;
            for _ in 0..50 {
                let g = GroupPoint::h1(rng.sym(4.0), rng.sym(4.0), rng.sym(4.0));
                let e = group_mul(&g, &group_inv(&g)).unwrap();
                worst = worst.max(e.z[0].norm()).max(e.t.abs());
            }
            VerificationReport::residual("group.inverse", "g * g^{-1} = e", worst, 1e-13)
        }),
    ));

    checks.push((
        "group.ccnorm.anchors".into(),
        Box::new(|_cfg| {
            let a = (cc_norm(&GroupPoint::h1(0.0, 0.0, -0.7)) - 2.8).abs();
            let b = (cc_norm(&GroupPoint::h1(0.6, 0.8, 0.0)) - 1.0).abs();
            let c = cc_norm(&GroupPoint::origin(1));
            VerificationReport::residual(
                "group.ccnorm.anchors",
                "(0,t) -> 4|t|; unit z -> 1; origin -> 0",
                a.max(b).max(c),
                1e-14,
            )
        }),
    ));

    checks.push((
        "group.dilation.gauge".into(),
        Box::new(|_cfg| {
            let mut rng = Lcg(0xDE03);
            let mut worst = 0.0f64;
            for _ in 0..50 {
                let g = GroupPoint::h1(rng.sym(2.0), rng.sym(2.0), rng.sym(2.0));
                let r = 0.25 + 3.0 * rng.next();
                let lhs = cc_norm(&dilation(&g, r));
                let rhs = r * r * cc_norm(&g);
                worst = worst.max((lhs - rhs).abs() / rhs.max(1e-30));
            }
            VerificationReport::residual("group.dilation.gauge", "gauge(δ_r g) = r² gauge(g)", worst, 1e-13)
        }),
    ));

    checks.push((
        "group.phi.anchors".into(),
        Box::new(|_cfg| {
            let idx = SphericalIndex::new(1.3, 4).unwrap();
            let one = (spherical_phi(&idx, &GroupPoint::origin(1)).unwrap()
                - Complex64::new(1.0, 0.0))
            .norm();
            let p = GroupPoint::h1(0.4, 0.1, 0.9);
            let plus = spherical_phi(&SphericalIndex::new(1.7, 2).unwrap(), &p).unwrap();
            let minus = spherical_phi(&SphericalIndex::new(-1.7, 2).unwrap(), &p).unwrap();
            let conj = (plus.conj() - minus).norm();
            let central = spherical_phi(&SphericalIndex::new(0.9, 7).unwrap(), &GroupPoint::h1(0.0, 0.0, 5.0))
                .unwrap();
            let modulus = (central.norm() - 1.0).abs();
            VerificationReport::residual(
                "group.phi.anchors",
                "phi(0,0)=1; conjugation; |phi(0,t)|=1",
                one.max(conj).max(modulus),
                1e-14,
            )
        }),
    ));

    checks.push((
        "group.average.invariant".into(),
        Box::new(|cfg| {
            let f = |p: &GroupPoint| Complex64::new((-p.z_norm_sq()).exp() * (1.0 + p.t), 0.0);
            let mut worst = 0.0f64;
            for n in [1usize, 2] {
                let got = average_a(f, n, 1.3, 0.5, &cfg.quad.sphere);
                let probe = GroupPoint::new(
                    std::iter::once(Complex64::new(1.3, 0.0))
                        .chain(std::iter::repeat(Complex64::new(0.0, 0.0)))
                        .take(n)
                        .collect(),
                    0.5,
                );
                worst = worst.max((got - f(&probe)).norm());
            }
            VerificationReport::residual("group.average.invariant", "Af = f for invariant f", worst, 1e-12)
        }),
    ));

    checks.push((
        "group.average.zsq".into(),
        Box::new(|cfg| {
            let f = |p: &GroupPoint| Complex64::new(p.z[0].norm_sqr(), 0.0);
            let r = 1.7;
            let mut worst = 0.0f64;
            for n in [1usize, 2] {
                let got = average_a(f, n, r, 0.0, &cfg.quad.sphere).re;
                worst = worst.max((got - r * r / n as f64).abs() / (r * r / n as f64));
            }
            VerificationReport::residual(
                "group.average.zsq",
                "<|z1|^2> = R^2/n (product rules)",
                worst,
                1e-12,
            )
        }),
    ));

    checks.push((
        "group.average.zsq.seeded".into(),
        Box::new(|cfg| {
            let f = |p: &GroupPoint| Complex64::new(p.z[0].norm_sqr(), 0.0);
            let r = 1.7;
            let rule = crate::config::SphereRule { points: 200_000, seed: cfg.quad.sphere.seed };
            let got = average_a(f, 3, r, 0.0, &rule).re;
            let expect = r * r / 3.0;
            VerificationReport::compare(
                "group.average.zsq.seeded",
                "n=3 seeded sampler, 2e5 points",
                got,
                expect,
                1e-2,
                true,
            )
        }),
    ));

    checks.push((
        "group.sphere.area".into(),
        Box::new(|_cfg| {
            let worst = (sphere_area(1) - 2.0 * std::f64::consts::PI)
                .abs()
                .max((sphere_area(2) - 2.0 * std::f64::consts::PI.powi(2)).abs());
            VerificationReport::residual("group.sphere.area", "|S^1|, |S^3|", worst, 1e-12)
        }),
    ));

    checks
}

fn eigen_relation_error(n_half: f64, nz: usize, lambda: f64, k: usize, alpha: f64) -> f64 {
    let grid = Grid::new(vec![
        Axis::symmetric_closed(n_half, nz),
        Axis::symmetric_closed(n_half, nz),
        Axis::symmetric(2.0 * std::f64::consts::PI, 64),
    ]);
    let idx = SphericalIndex::new(lambda, k).unwrap();
    let f = SampledField::sample(grid.clone(), |p| spherical_phi(&idx, p).unwrap());
    let applied = if alpha == 0.0 {
        apply_l(&f).unwrap()
    } else {
        apply_l_alpha(&OperatorParams::new(1, alpha).unwrap(), &f).unwrap()
    };
    let eig = -lambda.abs() * (2.0 * k as f64 + 1.0 - alpha);
    let target = f.axpby(eig, &f.zeros_like(), 0.0);
    let err = applied.max_interior_diff(&target, 4, true);
    let scale = target.max_interior_abs(4, true);
    err / scale
}

fn operators_checks(alpha: f64) -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "op.vectorfield.symbolic".into(),
        Box::new(|_cfg| {
            let g = Grid::h1(1.5, 9, 2.0, 12);
            let f = SampledField::sample(g.clone(), |p| Complex64::new(p.z[0].re * p.t, 0.0));
            let xf = apply_vector_field(VectorField::X(1), &f).unwrap();
            let expect =
                SampledField::sample(g, |p| Complex64::new(p.t - 0.5 * p.z[0].im * p.z[0].re, 0.0));
            let worst = xf.max_interior_diff(&expect, 2, true);
            VerificationReport::residual("op.vectorfield.symbolic", "X1(x1 t) = t - y1 x1/2", worst, 1e-12)
        }),
    ));

    checks.push((
        "op.eigen.L".into(),
        Box::new(|_cfg| {
            let mut worst = 0.0f64;
            for &lambda in &[0.5, 1.0] {
                for k in 0..=2usize {
                    worst = worst.max(eigen_relation_error(6.0, 49, lambda, k, 0.0));
                }
            }
            VerificationReport::residual(
                "op.eigen.L",
                "L phi = -|lambda|(2k+1) phi, h=0.25, lambda<=1, k<=2",
                worst,
                2e-3,
            )
        }),
    ));

    checks.push((
        "op.eigen.Lalpha".into(),
        Box::new(move |_cfg| {
            let mut worst = 0.0f64;
            for k in 0..=2usize {
                worst = worst.max(eigen_relation_error(6.0, 49, 1.0, k, alpha));
            }
            VerificationReport::residual(
                "op.eigen.Lalpha",
                format!("L_a phi = -|lambda|(2k+1-a) phi, h=0.25, alpha={alpha}"),
                worst,
                2e-3,
            )
        }),
    ));

    checks.push((
        "op.absT.lattice".into(),
        Box::new(|_cfg| {
            let g = Grid::h1(2.0, 9, 8.0, 128);
            let lam = std::f64::consts::PI / 2.0;
            let f = SampledField::sample(g, |p| {
                Complex64::new(0.0, lam * p.t).exp() * (-p.z_norm_sq()).exp()
            });
            let r = abs_t(&f);
            let target = f.axpby(lam, &f.zeros_like(), 0.0);
            let worst = r.field.max_interior_diff(&target, 0, false);
            VerificationReport::residual("op.absT.lattice", "lattice mode lambda=pi/2", worst, 1e-9)
        }),
    ));

    checks.push((
        "op.absT.squared".into(),
        Box::new(|_cfg| {
            let g = Grid::h1(1.5, 7, 8.0, 64);
            let f = SampledField::sample(g, |p| {
                Complex64::new((-p.z_norm_sq() - p.t * p.t).exp() * (1.0 + 0.3 * p.t), 0.0)
            });
            let twice = abs_t(&abs_t(&f).field).field;
            let sq = spectral_multiplier(&f, |l| l * l);
            let worst = twice.max_interior_diff(&sq, 0, false);
            VerificationReport::residual("op.absT.squared", "|T|^2 = lambda^2 multiplier", worst, 1e-10)
        }),
    ));

    checks.push((
        "op.bracket".into(),
        Box::new(|_cfg| {
            let g = Grid::h1(3.0, 49, 2.0, 32);
            let f = SampledField::sample(g, |p| {
                Complex64::new((-p.z_norm_sq() - 0.5 * p.t * p.t).exp() * (p.z[0].re + 0.3 * p.t), 0.0)
            });
            let xy = apply_vector_field(VectorField::X(1), &apply_vector_field(VectorField::Y(1), &f).unwrap())
                .unwrap();
            let yx = apply_vector_field(VectorField::Y(1), &apply_vector_field(VectorField::X(1), &f).unwrap())
                .unwrap();
            let bracket = xy.axpby(1.0, &yx, -1.0);
            let tf = apply_vector_field(VectorField::T, &f).unwrap();
            let worst = bracket.max_interior_diff(&tf, 4, true);
            VerificationReport::residual("op.bracket", "[X1,Y1] = T on smooth data", worst, 1e-3)
        }),
    ));

    checks.push((
        "op.composition".into(),
        Box::new(|_cfg| {
            let g = Grid::h1(3.0, 49, 2.0, 32);
            let f = SampledField::sample(g, |p| Complex64::new((-p.z_norm_sq() - p.t * p.t).exp(), 0.0));
            let lf = apply_l(&f).unwrap();
            let xx = apply_vector_field(VectorField::X(1), &apply_vector_field(VectorField::X(1), &f).unwrap())
                .unwrap();
            let yy = apply_vector_field(VectorField::Y(1), &apply_vector_field(VectorField::Y(1), &f).unwrap())
                .unwrap();
            let comp = xx.axpby(1.0, &yy, 1.0);
            let worst = lf.max_interior_diff(&comp, 4, true);
            VerificationReport::residual("op.composition", "sum X^2+Y^2 vs coordinate L", worst, 5e-3)
        }),
    ));

    checks.push((
        "op.convergence.order".into(),
        Box::new(|_cfg| {
            let coarse = eigen_relation_error(6.0, 25, 1.0, 0, 0.0); // h = 0.5
            let fine = eigen_relation_error(6.0, 49, 1.0, 0, 0.0); // h = 0.25
            threshold_at_least(
                "op.convergence.order",
                format!("error ratio under h: 0.5 -> 0.25 (coarse {coarse:.2e}, fine {fine:.2e})"),
                coarse / fine,
                3.5,
            )
        }),
    ));

    checks
}

fn identities_checks() -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "id.psi.anchor".into(),
        Box::new(|cfg| {
            let c = KernelConstants::new(1);
            let v = psi_r_alpha(&c, 0.0, 0.9, 0.0, &cfg.tol).unwrap();
            VerificationReport::compare(
                "id.psi.anchor",
                "Psi_{0.9,0}(0) vs arctan(0.9)",
                v.value.re,
                0.9f64.atan(),
                1e-10,
                true,
            )
        }),
    ));

    checks.push((
        "id.psi.series".into(),
        Box::new(|cfg| {
            let mut rng = Lcg(0x1D51);
            let mut worst = 0.0f64;
            for _ in 0..40 {
                let n = 1 + (rng.next() * 3.0) as u32;
                let mut alpha = -3.0 + 6.0 * rng.next();
                if crate::specfun::is_pole_parameter(n, alpha, 1e-3) {
                    alpha += 0.11;
                }
                let theta = rng.sym(1.5);
                let v = psi_r_alpha(&KernelConstants::new(n), alpha, 0.9, theta, &cfg.tol).unwrap();
                worst = worst.max(v.residual / v.value.norm().max(1.0));
            }
            VerificationReport::residual(
                "id.psi.series",
                "raw series vs closed form, r=0.9, 40 seeded (n,alpha,theta)",
                worst,
                1e-10,
            )
        }),
    ));

    checks.push((
        "id.lagtransform.anchor".into(),
        Box::new(|cfg| {
            let c = KernelConstants::new(1);
            let v = laguerre_transform(&c, 0, 1.0, 0.0, 1e-8, &cfg.tol).unwrap();
            let worst = (v.lhs - 8.0).abs().max((v.rhs - 8.0).abs());
            VerificationReport::residual(
                "id.lagtransform.anchor",
                "n=1,k=0,|z|=1,t=0,eps->0: both sides -> 8",
                worst,
                1e-6,
            )
        }),
    ));

    checks.push((
        "id.lagtransform.sweep".into(),
        Box::new(|cfg| {
            let mut rng = Lcg(0x1D52);
            let mut worst = 0.0f64;
            for n in 1..=3u32 {
                let c = KernelConstants::new(n);
                for &eps in &[1.0, 0.1, 0.01] {
                    for k in 0..=5usize {
                        let z = 0.6 + 1.2 * rng.next();
                        let t = rng.sym(1.5);
                        let v = laguerre_transform(&c, k, z, t, eps, &cfg.tol).unwrap();
                        worst = worst.max((v.lhs - v.rhs).abs() / (1.0 + v.rhs.abs()));
                    }
                }
            }
            VerificationReport::residual(
                "id.lagtransform.sweep",
                "k<=5, n<=3, eps in {1,0.1,0.01}",
                worst,
                1e-6,
            )
        }),
    ));

    checks.push((
        "id.contour.theta0".into(),
        Box::new(|cfg| {
            let v = contour_i(1, 0.0, 0.0, &cfg.tol).unwrap();
            let worst = v.i2.norm().max((v.i_direct.re - std::f64::consts::FRAC_PI_2).abs());
            VerificationReport::residual(
                "id.contour.theta0",
                "I2(0) = 0 and I(1,0,0) = pi/2",
                worst,
                1e-10,
            )
        }),
    ));

    checks.push((
        "id.contour.random".into(),
        Box::new(|cfg| {
            let mut rng = Lcg(0x1D53);
            let mut worst = 0.0f64;
            for _ in 0..20 {
                let n = 1 + (rng.next() * 3.0) as u32;
                let alpha = n as f64 - 0.1 - 3.0 * rng.next();
                let theta = rng.sym(1.4);
                let v = contour_i(n, alpha, theta, &cfg.tol).unwrap();
                worst = worst.max(v.residual / v.i_direct.norm().max(1.0));
            }
            VerificationReport::residual(
                "id.contour.random",
                "20 seeded (n, alpha<n, theta) triples",
                worst,
                1e-8,
            )
        }),
    ));

    checks.push((
        "id.integrability".into(),
        Box::new(|cfg| {
            let f = GalleryFunction::g1(1);
            let rep = integrability_check(&f, 1, &cfg.quad).unwrap();
            let finite = rep.all_finite
                && rep.region_b.is_finite()
                && rep.region_strip < 1e6
                && rep.region_complement < 1e6;
            VerificationReport {
                id: "id.integrability".into(),
                params: format!(
                    "G1 halfplane integrals: B={:.6e}, S={:.6e}, C={:.6e}",
                    rep.region_b, rep.region_strip, rep.region_complement
                ),
                lhs: rep.region_b + rep.region_strip + rep.region_complement,
                rhs: 0.0,
                abs_err: 0.0,
                rel_err: 0.0,
                tolerance: f64::INFINITY,
                relative: false,
                pass: finite,
                wall_ms: 0.0,
            }
        }),
    ));

    checks
}

fn pairing_checks(alpha: f64) -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "pair.kf.anchor".into(),
        Box::new(|cfg| {
            let f = GalleryFunction::g1(1);
            let v = crate::kernel::angular_profile_k(&f, 1, 0.0, &cfg.quad);
            VerificationReport::compare("pair.kf.anchor", "K_f(0) for G1, n=1", v.re, 1.0, 1e-9, true)
        }),
    ));

    checks.push((
        "pair.odd.vanishes".into(),
        Box::new(|cfg| {
            let f = GalleryFunction::g2(1);
            let p = OperatorParams::new(1, 0.0).unwrap();
            let c = KernelConstants::new(1);
            let out = pair_angular(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            VerificationReport::residual(
                "pair.odd.vanishes",
                "alpha=0, t-odd G2: even kernel kills the pairing",
                out.value.norm(),
                1e-8,
            )
        }),
    ));

    checks.push((
        "pair.scaling".into(),
        Box::new(|cfg| {
            let f = GalleryFunction::g1(1);
            let p = OperatorParams::new(1, 0.0).unwrap();
            let c = KernelConstants::new(1);
            let base = pair_spatial(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            let dil = DilatedField { inner: &f, inv_r: 0.5, scale: 1.0 };
            let mut wide = cfg.quad;
            wide.box_radius_z = 2.0 * cfg.quad.box_radius_z;
            wide.box_radius_t = 4.0 * cfg.quad.box_radius_t;
            let scaled = pair_spatial(&p, &c, &dil, &wide, &cfg.tol).unwrap();
            VerificationReport::compare(
                "pair.scaling",
                "<Phi, f(δ_{1/2}·)> vs 4 <Phi, f>",
                scaled.value.re,
                4.0 * base.value.re,
                1e-4,
                true,
            )
        }),
    ));

    checks.push((
        "pair.concordance.spatial.angular".into(),
        Box::new(move |cfg| {
            let f = GalleryFunction::g1(1);
            let p = OperatorParams::new(1, alpha).unwrap();
            let c = KernelConstants::new(1);
            let a = pair_spatial(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            let b = pair_angular(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            VerificationReport::compare(
                "pair.concordance.spatial.angular",
                format!("G1, n=1, alpha={alpha}"),
                a.value.re,
                b.value.re,
                2e-3,
                true,
            )
        }),
    ));

    checks.push((
        "pair.concordance.spatial.spectral".into(),
        Box::new(move |cfg| {
            let f = GalleryFunction::g1(1);
            let p = OperatorParams::new(1, alpha).unwrap();
            let c = KernelConstants::new(1);
            let a = pair_spatial(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            let b = pair_spectral(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
            VerificationReport::compare(
                "pair.concordance.spatial.spectral",
                format!("G1, n=1, alpha={alpha}, K={}, Lambda={}", cfg.quad.k_cutoff, cfg.quad.lambda_cutoff),
                a.value.re,
                b.value.re,
                2e-3,
                true,
            )
        }),
    ));

    checks
}

fn fundamental_checks(alpha: f64) -> Vec<(String, Check)> {
    let mut checks: Vec<(String, Check)> = Vec::new();

    checks.push((
        "fund.solution".into(),
        Box::new(move |cfg| {
            let grid = super::calibrate::calibration_grid(3.0, 21, 24.0, 160);
            let galleries = [GalleryFunction::g1(1), GalleryFunction::g3_default(1)];
            match super::calibrate::calibrate(&galleries, alpha, &grid, cfg) {
                Err(e) => VerificationReport {
                    id: "fund.solution".into(),
                    params: format!("calibration failed: {e}"),
                    lhs: f64::NAN,
                    rhs: f64::NAN,
                    abs_err: f64::INFINITY,
                    rel_err: f64::INFINITY,
                    tolerance: 5e-2,
                    relative: true,
                    pass: false,
                    wall_ms: 0.0,
                },
                Ok(out) => {
                    let worst_residual = out
                        .per_gallery
                        .iter()
                        .map(|g| g.residual_rel_sup)
                        .fold(0.0, f64::max);
                    let pass = worst_residual <= 5e-2 && out.consistency <= 0.1;
                    VerificationReport {
                        id: "fund.solution".into(),
                        params: format!(
                            "alpha={alpha}; fitted c: {}; consistency {:.3e}",
                            out.per_gallery
                                .iter()
                                .map(|g| format!("{}={:.6}", g.gallery, g.scale))
                                .collect::<Vec<_>>()
                                .join(", "),
                            out.consistency
                        ),
                        lhs: worst_residual,
                        rhs: 0.0,
                        abs_err: worst_residual,
                        rel_err: out.consistency,
                        tolerance: 5e-2,
                        relative: false,
                        pass,
                        wall_ms: 0.0,
                    }
                }
            }
        }),
    ));

    checks
}

/// Suite parameters: the (n, α) instance used by the parameterized checks.
#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    pub alpha: f64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { alpha: 0.5 }
    }
}

/// Run one suite; reports are ordered by check id.
pub fn run_suite(
    name: SuiteName,
    cfg: &Config,
    params: SuiteParams,
) -> Result<Vec<VerificationReport>, HarnessError> {
    if !params.alpha.is_finite() {
        return Err(HarnessError::ConfigInvalid { message: "alpha must be finite".into() });
    }
    let checks = match name {
        SuiteName::Specfun => specfun_checks(),
        SuiteName::Group => group_checks(),
        SuiteName::Operators => operators_checks(params.alpha),
        SuiteName::Identities => identities_checks(),
        SuiteName::Pairing => pairing_checks(params.alpha),
        SuiteName::Fundamental => fundamental_checks(params.alpha),
    };
    let cfg = *cfg;
    let mut reports = par_map(checks.len(), |i| {
        let started = Instant::now();
        let mut report = (checks[i].1)(&cfg);
        report.wall_ms = started.elapsed().as_secs_f64() * 1e3;
        report
    });
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(matches!(
            "frobnicate".parse::<SuiteName>(),
            Err(HarnessError::UnknownSuite { .. })
        ));
        assert_eq!("specfun".parse::<SuiteName>().unwrap(), SuiteName::Specfun);
    }

    #[test]
    fn specfun_suite_passes() {
        let reports = run_suite(SuiteName::Specfun, &Config::default(), SuiteParams::default()).unwrap();
        for r in &reports {
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn group_suite_passes() {
        let reports = run_suite(SuiteName::Group, &Config::default(), SuiteParams::default()).unwrap();
        for r in &reports {
            assert!(r.pass, "{}", r.line());
        }
    }

    #[test]
    fn identities_suite_passes() {
        let reports =
            run_suite(SuiteName::Identities, &Config::default(), SuiteParams::default()).unwrap();
        for r in &reports {
            assert!(r.pass, "{}", r.line());
        }
    }
}
