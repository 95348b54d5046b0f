//! Lévy path-integral propagators built on a from-scratch Fox H-function
//! evaluator.
//!
//! The library computes the quantum-mechanical kernel (propagator) of a free
//! particle whose paths are Lévy flights with stability index `1 < α ≤ 2`,
//! together with its Laplace, fixed-energy and momentum transforms, and the
//! particle-in-a-box kernel in both spectral and method-of-images form. At
//! `α = 2` every kernel collapses to the familiar Gaussian/Feynman closed
//! forms, which the test suite uses as exact cross-checks.
//!
//! Layout:
//!
//! - [`gamma`] — complex gamma, log-gamma and reciprocal gamma primitives.
//! - [`foxh`] — H-function parameter sets, the Mellin–Barnes power series,
//!   and the standard parameter identities (reduce / invert / scale /
//!   power-shift / Laplace lift).
//! - [`kernels`] — the physics layer: free kernels in 1D and 3D, transforms,
//!   box and wall kernels, wavefunction evolution.
//! - [`oracle`] — independent reference implementations (Fourier quadrature,
//!   Mellin–Barnes contour quadrature, α-stable Monte Carlo) used to validate
//!   the H-function route.
//! - [`validate`] — the full validation suite shared by the CLI and the
//!   acceptance tests.

pub mod foxh;
pub mod gamma;
pub mod kernels;
pub mod oracle;
pub mod validate;

pub use num_complex::Complex64;
