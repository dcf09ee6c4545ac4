//! Parallel-vs-sequential throughput comparison for the data-parallel hot
//! loops: bulk kernel-density evaluation, the spatial pairing sweep and the
//! spectral pairing sum. The `*_seq` twins always run single-threaded; the
//! plain entries use rayon when the (default) `parallel` feature is on.

use criterion::{criterion_group, criterion_main, Criterion};
use hk_core::config::{Config, QuadratureSpec};
use hk_core::gallery::GalleryFunction;
use hk_core::heisenberg::GroupPoint;
use hk_core::kernel::{
    density_grid, density_grid_seq, pair_spatial, pair_spectral, KernelConstants,
};
use hk_core::operators::OperatorParams;

fn density_points() -> Vec<GroupPoint> {
    let mut pts = Vec::new();
    for i in 0..40 {
        for j in 0..40 {
            for k in 0..8 {
                let x = -3.0 + 6.0 * i as f64 / 39.0;
                let y = -3.0 + 6.0 * j as f64 / 39.0;
                let t = -2.0 + 4.0 * k as f64 / 7.0;
                if x * x + y * y + t * t > 1e-3 {
                    pts.push(GroupPoint::h1(x, y, t));
                }
            }
        }
    }
    pts
}

fn bench_density(c: &mut Criterion) {
    let cfg = Config::default();
    let p = OperatorParams::new(1, 0.5).unwrap();
    let constants = KernelConstants::new(1);
    let pts = density_points();
    let mut group = c.benchmark_group("density_sweep");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| density_grid(&p, &constants, &pts, &cfg.tol).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| density_grid_seq(&p, &constants, &pts, &cfg.tol).unwrap())
    });
    group.finish();
}

fn bench_pairings(c: &mut Criterion) {
    let cfg = Config {
        quad: QuadratureSpec { box_radius_z: 4.5, box_radius_t: 4.5, ..Default::default() },
        ..Default::default()
    };
    let p = OperatorParams::new(1, 0.5).unwrap();
    let constants = KernelConstants::new(1);
    let f = GalleryFunction::g1(1);
    let mut group = c.benchmark_group("pairing");
    group.sample_size(10);
    group.bench_function("spatial", |b| {
        b.iter(|| pair_spatial(&p, &constants, &f, &cfg.quad, &cfg.tol).unwrap())
    });
    group.bench_function("spectral", |b| {
        b.iter(|| pair_spectral(&p, &constants, &f, &cfg.quad, &cfg.tol).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_density, bench_pairings);
criterion_main!(benches);
