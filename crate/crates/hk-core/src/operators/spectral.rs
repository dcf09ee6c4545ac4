//! The spectral operator |T|: Fourier multiplier |λ| along the central axis.
//!
//! On fields of the form g(z) e^{iλ₀ t} with λ₀ on the discrete frequency
//! lattice 2πm/(N Δt) the result is exactly |λ₀|·f up to rounding. The
//! operator is the multiplier realization of the spherical-expansion
//! definition; on the span of the spherical functions the two coincide, which
//! the operator tests assert rather than assume.

use super::grid::SampledField;
use crate::par::par_map;
use num_complex::Complex64;
use rustfft::FftPlanner;

/// |T| output with the boundary-decay diagnostic.
#[derive(Debug, Clone)]
pub struct AbsTResult {
    pub field: SampledField,
    /// Max |f| over the first and last t-slices; the Fourier path presumes
    /// this is small (or the content is grid-periodic).
    pub tail_magnitude: f64,
}

/// Apply a real multiplier g(λ) along the t axis.
pub fn spectral_multiplier<G>(f: &SampledField, g: G) -> SampledField
where
    G: Fn(f64) -> f64 + Sync + Send,
{
    let nt = f.grid.t_axis().count;
    let dt = f.grid.t_axis().spacing;
    let columns = f.values.len() / nt;

    let mut planner = FftPlanner::<f64>::new();
    let fwd = planner.plan_fft_forward(nt);
    let inv = planner.plan_fft_inverse(nt);

    let mults: Vec<f64> = (0..nt)
        .map(|m| {
            let signed = if m <= nt / 2 { m as isize } else { m as isize - nt as isize };
            let lambda = 2.0 * std::f64::consts::PI * signed as f64 / (nt as f64 * dt);
            g(lambda)
        })
        .collect();

    let out_cols = par_map(columns, |cidx| {
        let mut buf: Vec<Complex64> = f.values[cidx * nt..(cidx + 1) * nt].to_vec();
        fwd.process(&mut buf);
        for (v, m) in buf.iter_mut().zip(&mults) {
            *v *= *m;
        }
        inv.process(&mut buf);
        let scale = 1.0 / nt as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
        buf
    });
    let mut values = Vec::with_capacity(f.values.len());
    for col in out_cols {
        values.extend(col);
    }
    SampledField { grid: f.grid.clone(), values, invalid_margin: f.invalid_margin }
}

/// |T| f: multiplier |λ| in the central frequency.
pub fn abs_t(f: &SampledField) -> AbsTResult {
    let nt = f.grid.t_axis().count;
    let columns = f.values.len() / nt;
    let mut tail = 0.0f64;
    for c in 0..columns {
        tail = tail
            .max(f.values[c * nt].norm())
            .max(f.values[c * nt + nt - 1].norm());
    }
    AbsTResult { field: spectral_multiplier(f, |l| l.abs()), tail_magnitude: tail }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::GroupPoint;
    use crate::operators::grid::Grid;

    #[test]
    fn t_independent_field_maps_to_zero() {
        let g = Grid::h1(2.0, 9, 8.0, 64);
        let f = SampledField::sample(g, |p: &GroupPoint| {
            Complex64::new((-p.z_norm_sq()).exp(), 0.0)
        });
        let r = abs_t(&f);
        let max = r.field.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        assert!(max < 1e-13);
    }

    #[test]
    fn lattice_mode_is_eigenvector() {
        // t in [-8, 8), lattice λ = π m/8; pick m = 4 → λ₀ = π/2
        let g = Grid::h1(2.0, 9, 8.0, 128);
        let lam = std::f64::consts::PI / 2.0;
        let f = SampledField::sample(g, |p: &GroupPoint| {
            Complex64::new(0.0, lam * p.t).exp() * (-p.z_norm_sq()).exp()
        });
        let r = abs_t(&f);
        let scaled = f.axpby(lam, &f.zeros_like(), 0.0);
        let err = r.field.max_interior_diff(&scaled, 0, false);
        assert!(err < 1e-9, "err {err}");
        assert!(r.tail_magnitude > 0.1); // modulated Gaussian does not decay in t
    }

    #[test]
    fn cosine_mode_by_linearity() {
        let g = Grid::h1(1.5, 7, 4.0, 64);
        let lam = std::f64::consts::PI; // lattice: 2π m / 8 with m = 4
        let f = SampledField::sample(g, |p: &GroupPoint| {
            Complex64::new((lam * p.t).cos() * (-p.z_norm_sq()).exp(), 0.0)
        });
        let r = abs_t(&f);
        let scaled = f.axpby(lam, &f.zeros_like(), 0.0);
        assert!(r.field.max_interior_diff(&scaled, 0, false) < 1e-10);
    }

    #[test]
    fn twice_abs_t_is_lambda_squared() {
        let g = Grid::h1(1.5, 7, 8.0, 64);
        let f = SampledField::sample(g, |p: &GroupPoint| {
            Complex64::new((-p.z_norm_sq() - p.t * p.t).exp() * (1.0 + 0.3 * p.t), 0.0)
        });
        let twice = abs_t(&abs_t(&f).field).field;
        let sq = spectral_multiplier(&f, |l| l * l);
        assert!(twice.max_interior_diff(&sq, 0, false) < 1e-10);
    }
}
