//! Seeded Monte Carlo sampling of the standard symmetric α-stable law
//! (characteristic function `exp(−|u|^α)`), which is the imaginary-time
//! free kernel at unit scale: `K(x, τ) = p_α(x/σ)/σ` with
//! `σ = (ħ^{α−1} D_α τ)^{1/α}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use super::OracleError;

/// `n` i.i.d. draws by the trigonometric (Chambers–Mallows–Stuck) method:
/// with Θ uniform on (−π/2, π/2) and W standard exponential,
///
/// ```text
/// X = sin(αΘ)/cos(Θ)^{1/α} · (cos((α−1)Θ)/W)^{(1−α)/α}.
/// ```
///
/// Deterministic for a given seed (ChaCha8 stream, fixed draw order).
pub fn stable_sample(alpha: f64, n: usize, seed: u64) -> Result<Vec<f64>, OracleError> {
    if !(alpha > 1.0 && alpha <= 2.0) {
        return Err(OracleError::Domain("stable sampler needs 1 < alpha <= 2"));
    }
    if n == 0 {
        return Err(OracleError::Domain("sample count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        let u: f64 = rng.gen_range(1e-15..(1.0 - 1e-15));
        let theta = PI * (u - 0.5);
        let e: f64 = rng.gen_range(1e-15..(1.0 - 1e-15));
        let w = -e.ln();
        let x = (alpha * theta).sin() / theta.cos().powf(1.0 / alpha)
            * (((alpha - 1.0) * theta).cos() / w).powf((1.0 - alpha) / alpha);
        out.push(x);
    }
    Ok(out)
}

/// Two-sided Kolmogorov–Smirnov statistics of a sample against a CDF.
#[derive(Debug, Clone, Copy)]
pub struct SampleStats {
    pub n_samples: usize,
    pub ks_statistic: f64,
    pub p_value: f64,
}

/// KS distance and asymptotic p-value of `samples` against `cdf`.
pub fn ks_test<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> SampleStats {
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let mut d = 0.0f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let lo = i as f64 / n as f64;
        let hi = (i + 1) as f64 / n as f64;
        d = d.max((f - lo).abs()).max((hi - f).abs());
    }
    // Kolmogorov asymptotic with the Stephens finite-n correction
    let sqrt_n = (n as f64).sqrt();
    let lambda = d * (sqrt_n + 0.12 + 0.11 / sqrt_n);
    let mut p = 0.0;
    for k in 1..=100 {
        let term = (-2.0 * (k as f64 * lambda).powi(2)).exp();
        p += if k % 2 == 1 { 2.0 * term } else { -2.0 * term };
        if term < 1e-18 {
            break;
        }
    }
    SampleStats {
        n_samples: n,
        ks_statistic: d,
        p_value: p.clamp(0.0, 1.0),
    }
}
