//! Tabulation of kernel densities, spherical functions and the Ψ profile
//! into CSV or JSON grids.

use super::HarnessError;
use crate::config::Config;
use crate::heisenberg::{cc_norm, spherical_phi, GroupPoint, SphericalIndex};
use crate::kernel::{density_closed, density_hypergeometric, psi_r_alpha, KernelConstants};
use crate::operators::OperatorParams;

/// What to tabulate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TabulateKind {
    /// Kernel density along a (x, y, t) grid (z = (x+iy, 0, ..)).
    Density { n: u32, alpha: f64 },
    /// φ_{λ,k} along a (x, y, t) grid.
    Spherical { n: u32, lambda: f64, k: usize },
    /// Ψ_{r,α}(θ) along a θ grid.
    Psi { n: u32, alpha: f64, r: f64 },
}

/// Inclusive uniform range with `count` samples (count = 1 pins `min`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl RangeSpec {
    pub fn parse(text: &str) -> Result<RangeSpec, HarnessError> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(HarnessError::ConfigInvalid {
                message: format!("range `{text}` is not min:max:count"),
            });
        }
        let min = parts[0].parse().map_err(|_| HarnessError::ConfigInvalid {
            message: format!("bad range min `{}`", parts[0]),
        })?;
        let max = parts[1].parse().map_err(|_| HarnessError::ConfigInvalid {
            message: format!("bad range max `{}`", parts[1]),
        })?;
        let count = parts[2].parse().map_err(|_| HarnessError::ConfigInvalid {
            message: format!("bad range count `{}`", parts[2]),
        })?;
        Ok(RangeSpec { min, max, count })
    }

    pub fn values(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.min],
            c => (0..c)
                .map(|i| self.min + (self.max - self.min) * i as f64 / (c - 1) as f64)
                .collect(),
        }
    }
}

/// Output format of a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn render(columns: &[&str], rows: Vec<Vec<Option<f64>>>, format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = columns.join(",");
            out.push('\n');
            for row in rows {
                let cells: Vec<String> = row
                    .iter()
                    .map(|v| v.map(|x| format!("{x}")).unwrap_or_default())
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        TableFormat::Json => {
            let obj = serde_json::json!({
                "columns": columns,
                "rows": rows,
            });
            serde_json::to_string_pretty(&obj).expect("table serialization cannot fail")
        }
    }
}

/// Build a table; the point grid is the Cartesian product of the ranges.
pub fn tabulate(
    kind: TabulateKind,
    x: RangeSpec,
    y: RangeSpec,
    t: RangeSpec,
    format: TableFormat,
    cfg: &Config,
) -> Result<String, HarnessError> {
    match kind {
        TabulateKind::Density { n, alpha } => {
            let p = OperatorParams::new(n, alpha).map_err(crate::kernel::KernelError::from)?;
            let constants = KernelConstants::new(n);
            let mut rows = Vec::new();
            for &xv in &x.values() {
                for &yv in &y.values() {
                    for &tv in &t.values() {
                        let mut z = vec![num_complex::Complex64::new(0.0, 0.0); n as usize];
                        z[0] = num_complex::Complex64::new(xv, yv);
                        let g = GroupPoint::new(z, tv);
                        let dc = density_closed(&p, &constants, &g, &cfg.tol).ok();
                        let dh = density_hypergeometric(&p, &constants, &g, &cfg.tol).ok();
                        let rel = match (dc, dh) {
                            (Some(a), Some(b)) if a != 0.0 => Some((a - b).abs() / a.abs()),
                            _ => None,
                        };
                        rows.push(vec![
                            Some(xv),
                            Some(yv),
                            Some(tv),
                            Some(cc_norm(&g)),
                            dc,
                            dh,
                            rel,
                        ]);
                    }
                }
            }
            Ok(render(
                &["x", "y", "t", "cc_norm", "density_closed", "density_hypergeometric", "rel_diff"],
                rows,
                format,
            ))
        }
        TabulateKind::Spherical { n, lambda, k } => {
            let idx = SphericalIndex::new(lambda, k)
                .map_err(|e| HarnessError::ConfigInvalid { message: e.to_string() })?;
            let mut rows = Vec::new();
            for &xv in &x.values() {
                for &yv in &y.values() {
                    for &tv in &t.values() {
                        let mut z = vec![num_complex::Complex64::new(0.0, 0.0); n as usize];
                        z[0] = num_complex::Complex64::new(xv, yv);
                        let g = GroupPoint::new(z, tv);
                        let v = spherical_phi(&idx, &g)
                            .map_err(|e| HarnessError::ConfigInvalid { message: e.to_string() })?;
                        rows.push(vec![Some(xv), Some(yv), Some(tv), Some(v.re), Some(v.im)]);
                    }
                }
            }
            Ok(render(&["x", "y", "t", "re_phi", "im_phi"], rows, format))
        }
        TabulateKind::Psi { n, alpha, r } => {
            let constants = KernelConstants::new(n);
            let mut rows = Vec::new();
            for &theta in &t.values() {
                let v = psi_r_alpha(&constants, alpha, r, theta, &cfg.tol)?;
                rows.push(vec![
                    Some(theta),
                    Some(v.value.re),
                    Some(v.value.im),
                    Some(v.residual),
                ]);
            }
            Ok(render(&["theta", "re_psi", "im_psi", "series_residual"], rows, format))
        }
    }
}
