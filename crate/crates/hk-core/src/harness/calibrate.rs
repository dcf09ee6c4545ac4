//! Calibration of the kernel's overall normalization: convolve a gallery
//! function with the kernel, apply L_α on the grid, and fit the scalar c
//! minimizing ‖L_α(f∗Φ_α) - c·f‖² over interior points.
//!
//! The fitted c is reported per gallery together with the post-fit sup
//! residual; cross-gallery consistency of c is the meaningful outcome, and
//! nothing is silently folded back into the kernel.

use super::HarnessError;
use crate::config::Config;
use crate::gallery::{GalleryFunction, GroupField};
use crate::kernel::{convolve_to_grid, KernelConstants};
use crate::operators::{apply_l_alpha, Axis, Grid, OperatorParams, SampledField};

/// Per-gallery fit outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct GalleryCalibration {
    pub gallery: String,
    pub scale: f64,
    /// sup |L_α u - c f| / sup |f| over the fit mask.
    pub residual_rel_sup: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationOutcome {
    pub per_gallery: Vec<GalleryCalibration>,
    pub mean_scale: f64,
    /// max_i |c_i - mean| / mean.
    pub consistency: f64,
}

/// Least-squares scalar fit of `applied ≈ c · target` over the mask, plus the
/// post-fit sup residual normalized by sup |target|.
pub fn fit_scale(
    applied: &SampledField,
    target: &SampledField,
    mask: &[bool],
) -> Result<(f64, f64), HarnessError> {
    assert_eq!(applied.values.len(), target.values.len());
    assert_eq!(mask.len(), target.values.len());
    let mut num = 0.0;
    let mut den = 0.0;
    for ((a, t), m) in applied.values.iter().zip(&target.values).zip(mask) {
        if *m {
            num += (a * t.conj()).re;
            den += t.norm_sqr();
        }
    }
    if den < 1e-12 {
        return Err(HarnessError::IllConditioned { norm: den });
    }
    let c = num / den;
    let mut worst = 0.0f64;
    let mut fmax = 0.0f64;
    for ((a, t), m) in applied.values.iter().zip(&target.values).zip(mask) {
        if *m {
            worst = worst.max((a - t * c).norm());
            fmax = fmax.max(t.norm());
        }
    }
    Ok((c, worst / fmax))
}

/// Fit mask: clear of the stencil margin in every axis and restricted to
/// |t| <= t_limit, away from the periodic wrap where the spectral |T| path
/// sees the kernel's slow central tail.
fn interior_mask(grid: &Grid, margin: usize, t_limit: f64) -> Vec<bool> {
    let n_axes = grid.axes.len();
    (0..grid.len())
        .map(|flat| {
            let idx = grid.unravel(flat);
            for (ax, &i) in idx.iter().enumerate() {
                if i < margin || i + margin >= grid.axes[ax].count {
                    return false;
                }
            }
            grid.t_axis().coord(idx[n_axes - 1]).abs() <= t_limit
        })
        .collect()
}

/// Grid used by the fundamental-solution experiment (n = 1).
pub fn calibration_grid(half_z: f64, nz: usize, half_t: f64, nt: usize) -> Grid {
    Grid::new(vec![
        Axis::symmetric_closed(half_z, nz),
        Axis::symmetric_closed(half_z, nz),
        Axis::symmetric(half_t, nt),
    ])
}

/// Run the experiment for one gallery function at the given α.
pub fn calibrate_gallery(
    f: &GalleryFunction,
    alpha: f64,
    grid: &Grid,
    cfg: &Config,
) -> Result<GalleryCalibration, HarnessError> {
    let p = OperatorParams::new(1, alpha).map_err(crate::kernel::KernelError::from)?;
    let constants = KernelConstants::new(1);

    let (zr, tr) = f.support_radius(41.0);
    let mut quad = cfg.quad;
    quad.box_radius_z = zr;
    quad.box_radius_t = tr;

    let u = convolve_to_grid(f, &p, &constants, &quad, &cfg.tol, grid)?;
    let lu = apply_l_alpha(&p, &u).map_err(crate::kernel::KernelError::from)?;
    let target = SampledField::sample(grid.clone(), |g| f.eval(g));
    let mask = interior_mask(grid, lu.invalid_margin.max(2), 3.0);
    let (scale, residual) = fit_scale(&lu, &target, &mask)?;
    Ok(GalleryCalibration { gallery: f.name.to_string(), scale, residual_rel_sup: residual })
}

/// Full calibration over a set of galleries; reports per-gallery fits, the
/// mean scale and the cross-gallery consistency.
pub fn calibrate(
    galleries: &[GalleryFunction],
    alpha: f64,
    grid: &Grid,
    cfg: &Config,
) -> Result<CalibrationOutcome, HarnessError> {
    let mut per_gallery = Vec::with_capacity(galleries.len());
    for f in galleries {
        per_gallery.push(calibrate_gallery(f, alpha, grid, cfg)?);
    }
    let mean = per_gallery.iter().map(|g| g.scale).sum::<f64>() / per_gallery.len() as f64;
    let consistency = per_gallery
        .iter()
        .map(|g| (g.scale - mean).abs() / mean.abs().max(1e-300))
        .fold(0.0, f64::max);
    Ok(CalibrationOutcome { per_gallery, mean_scale: mean, consistency })
}
