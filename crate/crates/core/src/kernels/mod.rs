//! The physics layer: Lévy free-particle kernels and their transforms, the
//! particle-in-a-box kernel in spectral and method-of-images form, and
//! wavefunction evolution.
//!
//! Every kernel is assembled from the H-function series of [`crate::foxh`].
//! Where the power series cannot reach (large scaled arguments lose all
//! digits to cancellation in f64), the free kernels fall back to two routes
//! that are themselves part of the same framework:
//!
//! - the reciprocal-argument dual set summed to its smallest term
//!   (imaginary time only, where the neglected exponentially-small
//!   contributions are genuinely subdominant to the algebraic tail), and
//! - at α = 2 exactly, the closed Gaussian/exponential reductions that the
//!   series collapses to termwise.
//!
//! A kernel evaluation that no route can certify is an error, not a number.

mod boxed;
mod config;
mod evolve;
mod free;
mod transforms;

pub use boxed::{
    box_eigen, box_fixed_energy_spectral, box_kernel_images, box_kernel_spectral, wall_kernel,
    BoxEigenstate, BoxKernelEval,
};
pub use config::{BoxConfig, PhysicalConfig, TimeMode};
pub use evolve::{evolve_wavefunction, EvolveOutcome, SampledFunction};
pub use free::{
    feynman_kernel_1d, free_kernel_1d, free_kernel_3d, momentum_kernel, phase_wavelength,
    KernelEval,
};
pub use transforms::{fixed_energy_kernel_3d, laplace_kernel_1d};

use crate::foxh::HError;

#[derive(Debug, Clone, PartialEq)]
pub enum KernelError {
    /// Argument outside the kernel's domain (t ≤ 0, r = 0, …).
    Domain(&'static str),
    /// Underlying series machinery failed (pole hit, overflow, …).
    Series(HError),
    /// No evaluation route reached the requested accuracy; the best
    /// achieved error estimate is attached.
    NotConverged { abs_error_estimate: f64 },
    /// A regime the formulas do not cover (positive-energy branch).
    UnsupportedBranch(&'static str),
    /// Invalid configuration value, named by key.
    Config { key: &'static str, message: String },
}

impl std::fmt::Display for KernelError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KernelError::Domain(what) => write!(f, "domain error: {what}"),
            KernelError::Series(e) => write!(f, "series evaluation failed: {e}"),
            KernelError::NotConverged { abs_error_estimate } => write!(
                f,
                "no evaluation route converged (best error estimate {abs_error_estimate:.3e})"
            ),
            KernelError::UnsupportedBranch(what) => write!(f, "unsupported branch: {what}"),
            KernelError::Config { key, message } => write!(f, "config error [{key}]: {message}"),
        }
    }
}

impl std::error::Error for KernelError {}

impl From<HError> for KernelError {
    fn from(e: HError) -> Self {
        KernelError::Series(e)
    }
}
