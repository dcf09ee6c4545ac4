//! Verification-suite runner, calibration and tabulation used by the CLI.

mod calibrate;
mod report;
mod suites;
mod tabulate;

pub use calibrate::{calibrate, calibrate_gallery, calibration_grid, fit_scale, CalibrationOutcome, GalleryCalibration};
pub use report::VerificationReport;
pub use report::{to_canonical_json, to_csv};
pub use suites::{run_suite, SuiteName, SuiteParams};
pub use tabulate::{tabulate, RangeSpec, TableFormat, TabulateKind};

use std::fmt;

/// Harness-level errors.
#[derive(Debug, Clone, PartialEq)]
pub enum HarnessError {
    UnknownSuite { name: String },
    ConfigInvalid { message: String },
    IllConditioned { norm: f64 },
    Io { message: String },
    Kernel(crate::kernel::KernelError),
}

impl fmt::Display for HarnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HarnessError::UnknownSuite { name } => write!(f, "unknown suite `{name}`"),
            HarnessError::ConfigInvalid { message } => write!(f, "invalid configuration: {message}"),
            HarnessError::IllConditioned { norm } => {
                write!(f, "calibration target norm {norm:.3e} below threshold")
            }
            HarnessError::Io { message } => write!(f, "io error: {message}"),
            HarnessError::Kernel(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HarnessError {}

impl From<crate::kernel::KernelError> for HarnessError {
    fn from(e: crate::kernel::KernelError) -> Self {
        HarnessError::Kernel(e)
    }
}

impl From<std::io::Error> for HarnessError {
    fn from(e: std::io::Error) -> Self {
        HarnessError::Io { message: e.to_string() }
    }
}
