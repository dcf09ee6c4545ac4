//! Rectangular sampling grids and sampled scalar fields.
//!
//! Axis order is `x_1..x_n, y_1..y_n, t` (2n+1 axes); the t axis is last and
//! contiguous in memory so the Fourier path can work on whole columns. The t
//! axis is half-open (`origin + j*spacing`, `j < count`) and its count must be
//! even, as the spectral multiplier requires.

use crate::heisenberg::GroupPoint;
use crate::par::par_map;
use num_complex::Complex64;

/// One uniformly spaced axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub origin: f64,
    pub spacing: f64,
    pub count: usize,
}

impl Axis {
    /// Symmetric half-open axis [-half, half) with `count` points.
    pub fn symmetric(half: f64, count: usize) -> Axis {
        Axis { origin: -half, spacing: 2.0 * half / count as f64, count }
    }

    /// Symmetric closed axis [-half, half] with `count` points (count odd
    /// puts a node exactly at 0).
    pub fn symmetric_closed(half: f64, count: usize) -> Axis {
        Axis { origin: -half, spacing: 2.0 * half / (count as f64 - 1.0), count }
    }

    pub fn coord(&self, j: usize) -> f64 {
        self.origin + self.spacing * j as f64
    }
}

/// Sampling grid over H_n with axes x_1..x_n, y_1..y_n, t.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub axes: Vec<Axis>,
}

impl Grid {
    pub fn new(axes: Vec<Axis>) -> Grid {
        assert!(axes.len() % 2 == 1, "grid needs 2n+1 axes");
        assert!(axes.last().unwrap().count % 2 == 0, "t-axis count must be even");
        Grid { axes }
    }

    /// Standard H_1 grid: x, y on closed symmetric axes, t half-open.
    pub fn h1(half_z: f64, nz: usize, half_t: f64, nt: usize) -> Grid {
        Grid::new(vec![
            Axis::symmetric_closed(half_z, nz),
            Axis::symmetric_closed(half_z, nz),
            Axis::symmetric(half_t, nt),
        ])
    }

    pub fn n(&self) -> usize {
        self.axes.len() / 2
    }

    pub fn t_axis(&self) -> &Axis {
        self.axes.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Row-major strides; last axis contiguous.
    pub fn strides(&self) -> Vec<usize> {
        let mut s = vec![1usize; self.axes.len()];
        for i in (0..self.axes.len() - 1).rev() {
            s[i] = s[i + 1] * self.axes[i + 1].count;
        }
        s
    }

    /// Multi-index of a flat index.
    pub fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let strides = self.strides();
        let mut idx = vec![0usize; self.axes.len()];
        for (i, s) in strides.iter().enumerate() {
            idx[i] = flat / s;
            flat %= s;
        }
        idx
    }

    /// The group point at a multi-index.
    pub fn point(&self, idx: &[usize]) -> GroupPoint {
        let n = self.n();
        let mut z = Vec::with_capacity(n);
        for j in 0..n {
            z.push(Complex64::new(
                self.axes[j].coord(idx[j]),
                self.axes[n + j].coord(idx[n + j]),
            ));
        }
        GroupPoint::new(z, self.t_axis().coord(idx[2 * n]))
    }
}

/// Complex scalar field sampled on a [`Grid`].
///
/// `invalid_margin` counts boundary cells (per non-periodic axis end) whose
/// values are stencil-contaminated; every derivative application widens it.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    pub grid: Grid,
    pub values: Vec<Complex64>,
    pub invalid_margin: usize,
}

impl SampledField {
    /// Sample a closure over the grid (parallel over t-columns).
    pub fn sample<F>(grid: Grid, f: F) -> SampledField
    where
        F: Fn(&GroupPoint) -> Complex64 + Sync + Send,
    {
        let nt = grid.t_axis().count;
        let columns = grid.len() / nt;
        let values_by_col = par_map(columns, |c| {
            let mut col = Vec::with_capacity(nt);
            let mut idx = grid.unravel(c * nt);
            for j in 0..nt {
                *idx.last_mut().unwrap() = j;
                col.push(f(&grid.point(&idx)));
            }
            col
        });
        let mut values = Vec::with_capacity(grid.len());
        for col in values_by_col {
            values.extend(col);
        }
        SampledField { grid, values, invalid_margin: 0 }
    }

    pub fn zeros_like(&self) -> SampledField {
        SampledField {
            grid: self.grid.clone(),
            values: vec![Complex64::new(0.0, 0.0); self.values.len()],
            invalid_margin: self.invalid_margin,
        }
    }

    pub fn at(&self, idx: &[usize]) -> Complex64 {
        let strides = self.grid.strides();
        let flat: usize = idx.iter().zip(&strides).map(|(i, s)| i * s).sum();
        self.values[flat]
    }

    /// Linear combination a*self + b*other (grids must match).
    pub fn axpby(&self, a: f64, other: &SampledField, b: f64) -> SampledField {
        assert_eq!(self.grid, other.grid);
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(x, y)| x * a + y * b)
            .collect();
        SampledField {
            grid: self.grid.clone(),
            values,
            invalid_margin: self.invalid_margin.max(other.invalid_margin),
        }
    }

    /// Max |self - other| over the interior, skipping `margin` cells at each
    /// end of every axis except the (periodic) t axis unless asked.
    pub fn max_interior_diff(&self, other: &SampledField, margin: usize, include_t_margin: bool) -> f64 {
        assert_eq!(self.grid, other.grid);
        let axes = &self.grid.axes;
        let last = axes.len() - 1;
        let mut worst = 0.0f64;
        for flat in 0..self.values.len() {
            let idx = self.grid.unravel(flat);
            let mut interior = true;
            for (ax, &i) in idx.iter().enumerate() {
                let skip_t = ax == last && !include_t_margin;
                if skip_t {
                    continue;
                }
                if i < margin || i + margin >= axes[ax].count {
                    interior = false;
                    break;
                }
            }
            if interior {
                worst = worst.max((self.values[flat] - other.values[flat]).norm());
            }
        }
        worst
    }

    /// Smooth off-grid evaluation by a separable Keys cubic (4 taps per
    /// axis); points outside the grid read as 0, matching the decayed-field
    /// precondition of the consumers.
    pub fn interpolate(&self, g: &GroupPoint) -> Complex64 {
        fn keys(s: f64) -> f64 {
            let a = s.abs();
            if a < 1.0 {
                (1.5 * a - 2.5) * a * a + 1.0
            } else if a < 2.0 {
                ((-0.5 * a + 2.5) * a - 4.0) * a + 2.0
            } else {
                0.0
            }
        }
        let n = self.grid.n();
        let mut coords = Vec::with_capacity(2 * n + 1);
        for j in 0..n {
            coords.push(g.z[j].re);
        }
        for j in 0..n {
            coords.push(g.z[j].im);
        }
        coords.push(g.t);

        let strides = self.grid.strides();
        // per-axis taps: (flat-offset contribution, weight); out-of-grid taps dropped
        let mut taps: Vec<Vec<(usize, f64)>> = Vec::with_capacity(coords.len());
        for (ax, &x) in coords.iter().enumerate() {
            let a = self.grid.axes[ax];
            let u = (x - a.origin) / a.spacing;
            if !(-2.0..=(a.count as f64 + 1.0)).contains(&u) {
                return Complex64::new(0.0, 0.0);
            }
            let base = u.floor() as isize;
            let mut row = Vec::with_capacity(4);
            for tap in (base - 1)..=(base + 2) {
                if tap < 0 || tap as usize >= a.count {
                    continue;
                }
                let w = keys(u - tap as f64);
                if w != 0.0 {
                    row.push((tap as usize * strides[ax], w));
                }
            }
            if row.is_empty() {
                return Complex64::new(0.0, 0.0);
            }
            taps.push(row);
        }
        fn accumulate(
            taps: &[Vec<(usize, f64)>],
            values: &[Complex64],
            offset: usize,
            weight: f64,
        ) -> Complex64 {
            match taps.split_first() {
                None => values[offset] * weight,
                Some((row, rest)) => {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for (off, w) in row {
                        acc += accumulate(rest, values, offset + off, weight * w);
                    }
                    acc
                }
            }
        }
        accumulate(&taps, &self.values, 0, 1.0)
    }

    /// Max |self| over the same interior region.
    pub fn max_interior_abs(&self, margin: usize, include_t_margin: bool) -> f64 {
        let zero = SampledField {
            grid: self.grid.clone(),
            values: vec![Complex64::new(0.0, 0.0); self.values.len()],
            invalid_margin: 0,
        };
        self.max_interior_diff(&zero, margin, include_t_margin)
    }
}
