//! Data-parallel primitives with a sequential fallback.
//!
//! With the default `parallel` feature the hot loops run on rayon; without it
//! the same code compiles to plain sequential iteration. Results are written
//! into index-addressed buffers and reduced with a fixed-shape pairwise tree,
//! so the output is bit-identical regardless of thread count or feature set.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Bound the worker-thread count. Call once, before any parallel work; later
/// calls are ignored (rayon's global pool is build-once). No-op in
/// sequential builds.
pub fn configure_threads(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = jobs;
    }
}

/// Map `f` over `0..n` into a `Vec`, in parallel when available.
///
/// Element `i` of the result is always `f(i)`; ordering never depends on the
/// scheduler.
pub fn par_map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Sequential twin of [`par_map`], always single-threaded.
///
/// Kept unconditionally so benchmarks can compare the two paths in one build.
pub fn seq_map<T, F>(n: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n).map(f).collect()
}

/// Pairwise (tree) sum of a slice; deterministic shape, O(log n) error growth.
pub fn tree_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            tree_sum(&values[..mid]) + tree_sum(&values[mid..])
        }
    }
}

/// Pairwise sum for complex accumulators.
pub fn tree_sum_complex(values: &[num_complex::Complex64]) -> num_complex::Complex64 {
    match values.len() {
        0 => num_complex::Complex64::new(0.0, 0.0),
        1 => values[0],
        2 => values[0] + values[1],
        n => {
            let mid = n / 2;
            tree_sum_complex(&values[..mid]) + tree_sum_complex(&values[mid..])
        }
    }
}

/// Map `f` over `0..n` and tree-sum the results (parallel map, deterministic sum).
pub fn par_sum<F>(n: usize, f: F) -> f64
where
    F: Fn(usize) -> f64 + Sync + Send,
{
    tree_sum(&par_map(n, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sum_matches_naive_on_benign_data() {
        let v: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = v.iter().sum();
        assert!((tree_sum(&v) - naive).abs() < 1e-10);
    }

    #[test]
    fn par_map_is_index_ordered() {
        let v = par_map(100, |i| i * i);
        for (i, x) in v.iter().enumerate() {
            assert_eq!(*x, i * i);
        }
    }

    #[test]
    fn seq_and_par_sums_agree_bitwise() {
        let a = par_sum(513, |i| 1.0 / (1.0 + i as f64));
        let b = tree_sum(&seq_map(513, |i| 1.0 / (1.0 + i as f64)));
        assert_eq!(a, b);
    }
}
