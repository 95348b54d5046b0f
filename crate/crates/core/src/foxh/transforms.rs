//! Parameter-level identities of the H-function.
//!
//! Each method returns a new parameter set related to the original by an
//! exact functional identity; the numerical contracts are exercised by the
//! property suite in `tests/h_identities.rs`.

use num_complex::Complex64;

use super::params::{HPair, HParams};
use super::series::HError;

impl HParams {
    /// Order reduction: when the first upper pair equals the last lower
    /// pair (and `n ≥ 1`, `q > m`), both cancel from the gamma ratio and
    /// the function equals the `(p−1, q−1)` set with `n` decremented.
    pub fn reduce(&self) -> Result<HParams, HError> {
        if self.n() < 1 || self.q() <= self.m() {
            return Err(HError::NotApplicable(
                "reduction needs n >= 1 and q > m",
            ));
        }
        let first_upper = self.upper()[0];
        let last_lower = self.lower()[self.q() - 1];
        if first_upper != last_lower {
            return Err(HError::NotApplicable(
                "first upper pair does not match last lower pair",
            ));
        }
        let upper = self.upper()[1..].to_vec();
        let lower = self.lower()[..self.q() - 1].to_vec();
        Ok(HParams::new(self.m(), self.n() - 1, upper, lower)?)
    }

    /// Argument inversion: `H(z)` with this set equals `H(1/z)` with the
    /// swapped set `(1−b_q, B_q); (1−a_p, A_p)` and `m ↔ n`. The swapped
    /// set has `μ' = −μ`, so its series is the large-argument expansion of
    /// the original function.
    pub fn invert(&self) -> HParams {
        let one = Complex64::new(1.0, 0.0);
        let flip = |pairs: &[HPair]| {
            pairs
                .iter()
                .map(|p| HPair {
                    offset: one - p.offset,
                    slope: p.slope,
                })
                .collect::<Vec<_>>()
        };
        let upper = flip(self.lower());
        let lower = flip(self.upper());
        HParams::new(self.m().min(lower.len()), self.n().min(upper.len()), upper, lower)
            .map(|mut p| {
                // m' = n, n' = m by the identity; the constructor call above
                // only guarded against count overflow
                p = HParams::new(self.n(), self.m(), p.upper().to_vec(), p.lower().to_vec())
                    .expect("swapped counts are within range");
                p
            })
            .expect("inverted parameter set is structurally valid")
    }

    /// Slope scaling: `(1/k)·H(z)` with this set equals `H(z^k)` with every
    /// slope multiplied by `k > 0`.
    pub fn scale(&self, k: f64) -> Result<HParams, HError> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(HError::NotApplicable("scale factor must be positive"));
        }
        let scale = |pairs: &[HPair]| {
            pairs
                .iter()
                .map(|p| HPair {
                    offset: p.offset,
                    slope: p.slope * k,
                })
                .collect::<Vec<_>>()
        };
        Ok(HParams::new(
            self.m(),
            self.n(),
            scale(self.upper()),
            scale(self.lower()),
        )?)
    }

    /// Power shift: `z^σ·H(z)` with this set equals `H(z)` with every
    /// offset shifted by `σ` times its slope.
    pub fn power_shift(&self, sigma: f64) -> HParams {
        let shift = |pairs: &[HPair]| {
            pairs
                .iter()
                .map(|p| HPair {
                    offset: p.offset + sigma * p.slope,
                    slope: p.slope,
                })
                .collect::<Vec<_>>()
        };
        HParams::new(self.m(), self.n(), shift(self.upper()), shift(self.lower()))
            .expect("power shift preserves structural validity")
    }

    /// Laplace lift: the weighted transform
    /// `∫_0^∞ dx x^{α−1} e^{−σx} H[ω x^r]` equals `σ^{−α}` times the H
    /// function of the `(p+1, q)` set with `(1−α, r)` prepended to the
    /// upper row and `n` incremented, evaluated at `ω/σ^r`.
    ///
    /// Requires `α + r·min_j Re(b_j/B_j) > 0` over the first m lower pairs.
    pub fn laplace_lift(&self, alpha_exp: f64, r: f64) -> Result<HParams, HError> {
        let min_ratio = self
            .lower()
            .iter()
            .take(self.m())
            .map(|p| (p.offset / p.slope).re)
            .fold(f64::INFINITY, f64::min);
        if self.m() == 0 || !(alpha_exp + r * min_ratio > 0.0) {
            return Err(HError::NotApplicable(
                "Laplace lift needs alpha + r*min Re(b_j/B_j) > 0",
            ));
        }
        let mut upper = Vec::with_capacity(self.p() + 1);
        upper.push(HPair::real(1.0 - alpha_exp, r));
        upper.extend_from_slice(self.upper());
        Ok(HParams::new(
            self.m(),
            self.n() + 1,
            upper,
            self.lower().to_vec(),
        )?)
    }
}
