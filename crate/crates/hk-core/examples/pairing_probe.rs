use hk_core::config::Config;
use hk_core::gallery::GalleryFunction;
use hk_core::harness::{run_suite, SuiteName, SuiteParams};
use hk_core::kernel::{pair_angular, pair_spatial, pair_spectral, KernelConstants};
use hk_core::operators::OperatorParams;

fn main() {
    let cfg = Config::default();
    let f = GalleryFunction::g1(1);
    let c = KernelConstants::new(1);
    for alpha in [0.0, 0.5] {
        let p = OperatorParams::new(1, alpha).unwrap();
        let t0 = std::time::Instant::now();
        let s = pair_spatial(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
        let t1 = std::time::Instant::now();
        let a = pair_angular(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
        let t2 = std::time::Instant::now();
        let k = pair_spectral(&p, &c, &f, &cfg.quad, &cfg.tol).unwrap();
        let t3 = std::time::Instant::now();
        println!(
            "alpha={alpha}: spatial={:.9} ({:?} est {:.2e}) angular={:.9} ({:?}) spectral={:.9} ({:?} tail {:.2e})",
            s.value.re, t1 - t0, s.error_estimate, a.value.re, t2 - t1, k.value.re, t3 - t2,
            k.tail_estimate.unwrap_or(0.0)
        );
        println!(
            "  s-a rel {:.3e}  s-k rel {:.3e}  a-k rel {:.3e}",
            (s.value - a.value).norm() / s.value.norm(),
            (s.value - k.value).norm() / s.value.norm(),
            (a.value - k.value).norm() / a.value.norm()
        );
    }
    let reports = run_suite(SuiteName::Operators, &cfg, SuiteParams::default()).unwrap();
    for r in &reports { println!("{}", r.line()); }
}
