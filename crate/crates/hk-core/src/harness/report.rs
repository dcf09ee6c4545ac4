//! Machine-readable per-check verification records.

use serde::{Deserialize, Serialize};

/// Result of one verification check.
///
/// `pass` is always recomputable from the stored fields:
/// `pass == (governed_error() <= tolerance)` where the governing error is
/// relative when `relative` is set and absolute otherwise.
///
/// Wall time is measured but excluded from the canonical JSON encoding so
/// identical configurations produce byte-identical reports.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    pub params: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    /// Whether `tolerance` governs the relative (true) or absolute error.
    pub relative: bool,
    pub pass: bool,
    #[serde(skip)]
    pub wall_ms: f64,
}

impl VerificationReport {
    pub fn compare(
        id: impl Into<String>,
        params: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        relative: bool,
    ) -> VerificationReport {
        let abs_err = (lhs - rhs).abs();
        let scale = lhs.abs().max(rhs.abs());
        let rel_err = if scale > 0.0 { abs_err / scale } else { 0.0 };
        let governed = if relative { rel_err } else { abs_err };
        VerificationReport {
            id: id.into(),
            params: params.into(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance,
            relative,
            pass: governed <= tolerance,
            wall_ms: 0.0,
        }
    }

    /// A check that already carries its own scalar error measure.
    pub fn residual(
        id: impl Into<String>,
        params: impl Into<String>,
        residual: f64,
        tolerance: f64,
    ) -> VerificationReport {
        VerificationReport {
            id: id.into(),
            params: params.into(),
            lhs: residual,
            rhs: 0.0,
            abs_err: residual,
            rel_err: residual,
            tolerance,
            relative: false,
            pass: residual <= tolerance,
            wall_ms: 0.0,
        }
    }

    pub fn governed_error(&self) -> f64 {
        if self.relative {
            self.rel_err
        } else {
            self.abs_err
        }
    }

    /// One human-readable summary line.
    pub fn line(&self) -> String {
        format!(
            "{} {} | {} | err {:.3e} (tol {:.1e} {}) [{:.0} ms]",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.params,
            self.governed_error(),
            self.tolerance,
            if self.relative { "rel" } else { "abs" },
            self.wall_ms,
        )
    }
}

/// Canonical JSON for a batch of reports (sorted by id, no timing fields).
pub fn to_canonical_json(reports: &[VerificationReport]) -> String {
    let mut sorted: Vec<&VerificationReport> = reports.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    serde_json::to_string_pretty(&sorted).expect("report serialization cannot fail")
}

/// Flat CSV rendering (header + one row per report), timing included.
pub fn to_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("id,params,lhs,rhs,abs_err,rel_err,tolerance,relative,pass,wall_ms\n");
    for r in reports {
        out.push_str(&format!(
            "{},\"{}\",{},{},{},{},{},{},{},{}\n",
            r.id, r.params, r.lhs, r.rhs, r.abs_err, r.rel_err, r.tolerance, r.relative, r.pass,
            r.wall_ms
        ));
    }
    out
}
