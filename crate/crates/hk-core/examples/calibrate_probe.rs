//! Diagnostic: where does the fundamental-solution residual concentrate for
//! the spectral-|T| case, and how does it respond to the quadrature budget?

use hk_core::config::Config;
use hk_core::gallery::{GalleryFunction, GroupField};
use hk_core::harness::{calibration_grid, fit_scale};
use hk_core::kernel::{convolve_to_grid, KernelConstants};
use hk_core::operators::{apply_l_alpha, OperatorParams, SampledField};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let alpha: f64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(0.5);
    let nz: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(21);
    let half_t: f64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(24.0);
    let nt: usize = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(160);
    let cfg = Config::default();
    let f = GalleryFunction::g1(1);
    let p = OperatorParams::new(1, alpha).unwrap();
    let constants = KernelConstants::new(1);
    let grid = calibration_grid(3.0, nz, half_t, nt);

    let (zr, tr) = f.support_radius(41.0);
    let mut quad = cfg.quad;
    quad.box_radius_z = zr;
    quad.box_radius_t = tr;

    let u = convolve_to_grid(&f, &p, &constants, &quad, &cfg.tol, &grid).unwrap();
    let lu = apply_l_alpha(&p, &u).unwrap();
    let target = SampledField::sample(grid.clone(), |g| f.eval(g));

    for t_limit in [1.0, 2.0, 3.0, 4.0, 6.0] {
        let mask: Vec<bool> = (0..grid.len())
            .map(|flat| {
                let idx = grid.unravel(flat);
                idx.iter()
                    .enumerate()
                    .all(|(ax, &i)| i >= 4 && i + 4 < grid.axes[ax].count)
                    && grid.t_axis().coord(idx[2]).abs() <= t_limit
            })
            .collect();
        let (c, r) = fit_scale(&lu, &target, &mask).unwrap();
        println!("t_limit {t_limit}: c = {c:.6}, residual = {r:.4}");
    }

    // residual profile along t at the worst column and along x at t ~ 0
    let mask: Vec<bool> = vec![true; grid.len()];
    let (c, _) = fit_scale(&lu, &target, &mask).unwrap();
    let nt = grid.t_axis().count;
    println!("-- residual |Lu - c f| along t at (x,y) = (dx, 0):");
    let ix = nz / 2 + 2;
    let iy = nz / 2;
    for jt in (0..nt).step_by(8) {
        let idx = [ix, iy, jt];
        let d = (lu.at(&idx) - target.at(&idx) * c).norm();
        println!("  t = {:+.2}: |res| = {:.5}, |f| = {:.5}", grid.t_axis().coord(jt), d, target.at(&idx).norm());
    }
    println!("-- residual along x at (y, t) = (0, {:.3}):", grid.t_axis().coord(nt / 2));
    for ix in (4..nz - 4).step_by((nz - 8) / 7) {
        let idx = [ix, nz / 2, nt / 2];
        let d = (lu.at(&idx) - target.at(&idx) * c).norm();
        println!("  x = {:+.2}: |res| = {:.5}", grid.axes[0].coord(ix), d);
    }
}
