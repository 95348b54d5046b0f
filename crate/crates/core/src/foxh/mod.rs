//! Fox H-function machinery: parameter sets, the computable power series,
//! and the standard parameter identities.
//!
//! The H-function is defined by a Mellin–Barnes integral
//!
//! ```text
//! H[z] = (1/2πi) ∫_L z^s χ(s) ds,
//! χ(s) = Π_{j≤m} Γ(b_j − B_j s) · Π_{j≤n} Γ(1 − a_j + A_j s)
//!        ─────────────────────────────────────────────────────
//!        Π_{j>m} Γ(1 − b_j + B_j s) · Π_{j>n} Γ(a_j − A_j s)
//! ```
//!
//! over a contour separating the poles of the first m lower-row gammas
//! (at `s = (b_h + ν)/B_h`) from the poles of the first n upper-row gammas.
//! Collapsing the contour onto the first family turns the integral into the
//! power series implemented by [`eval_series`]; the series converges for
//! every `z ≠ 0` when `μ = ΣB − ΣA > 0`, and for `|z| < 1/β` when `μ = 0`.
//!
//! [`HParams::invert`] swaps a set with its reciprocal-argument dual, whose
//! series is the large-argument expansion of the original function;
//! [`eval_asymptotic`] sums that (generally divergent) dual series to its
//! smallest term, which is how the kernel layer reaches large arguments
//! that defeat the power series in double precision.

mod params;
mod series;
mod transforms;

pub use params::{HPair, HParams, HParamsError};
pub use series::{chi, eval_asymptotic, eval_series, HError, SeriesControl, SeriesResult};
