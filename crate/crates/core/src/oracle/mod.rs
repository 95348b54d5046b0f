//! Independent reference implementations used to validate the H-function
//! kernels: direct Fourier quadrature of the momentum representation,
//! Mellin–Barnes contour quadrature of the defining integral, and seeded
//! α-stable Monte Carlo for the Wick-rotated kernel.

mod fourier;
mod mellin;
mod quad;
mod stable;

pub use fourier::{check_normalization, fourier_kernel_1d};
pub use mellin::{mellin_barnes_kernel_1d, mellin_barnes_kernel_1d_at};
pub use quad::{adaptive_gk, QuadratureControl};
pub use stable::{ks_test, stable_sample, SampleStats};

pub(crate) use quad::{gauss_legendre_15, gl15, wynn_epsilon};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::kernels::KernelError;

#[derive(Debug)]
pub enum OracleError {
    /// Adaptive quadrature could not reach its tolerance.
    QuadratureFailure { reason: &'static str, achieved: f64 },
    /// Sequence acceleration failed to stabilize; the partial-sum trace is
    /// attached for inspection.
    AccelerationFailure { partials: Vec<Complex64> },
    /// Argument outside an oracle's domain.
    Domain(&'static str),
    /// A library kernel call inside an oracle failed.
    Kernel(KernelError),
}

impl std::fmt::Display for OracleError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OracleError::QuadratureFailure { reason, achieved } => {
                write!(f, "quadrature failure: {reason} (achieved {achieved:.3e})")
            }
            OracleError::AccelerationFailure { partials } => write!(
                f,
                "sequence acceleration did not stabilize after {} panels \
                 (last partial sums: {:?})",
                partials.len(),
                &partials[partials.len().saturating_sub(4)..]
            ),
            OracleError::Domain(what) => write!(f, "domain error: {what}"),
            OracleError::Kernel(e) => write!(f, "kernel error inside oracle: {e}"),
        }
    }
}

impl std::error::Error for OracleError {}

/// One row of an oracle-vs-library comparison report.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationRecord {
    pub point: String,
    pub library_value: [f64; 2],
    pub oracle_value: [f64; 2],
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub oracle_name: String,
}

impl ValidationRecord {
    pub fn new(
        point: String,
        library: Complex64,
        oracle: Complex64,
        oracle_name: &str,
    ) -> Self {
        let abs_diff = (library - oracle).norm();
        ValidationRecord {
            point,
            library_value: [library.re, library.im],
            oracle_value: [oracle.re, oracle.im],
            abs_diff,
            rel_diff: abs_diff / oracle.norm().max(f64::MIN_POSITIVE),
            oracle_name: oracle_name.to_string(),
        }
    }
}
