//! Direct Fourier-quadrature oracle for the 1D free kernel, plus the
//! normalization check.
//!
//! The kernel's momentum representation is
//! `K(x, τ) = (1/πħ) ∫_0^∞ cos(px/ħ)·exp(−(i/ħ) D_α p^α τ) dp`.
//! After Wick rotation the integrand decays monotonically and plain
//! adaptive quadrature suffices. In real time nothing decays: the integral
//! is summed over half-period panels of the cosine (of the kernel phase at
//! x = 0) and the alternating panel series is resummed with the epsilon
//! algorithm.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::foxh::SeriesControl;
use crate::kernels::{free_kernel_1d, PhysicalConfig};

use super::quad::{adaptive_gk, gl15, wynn_epsilon, QuadratureControl};
use super::OracleError;

/// Reference evaluation of the 1D free kernel by momentum quadrature.
pub fn fourier_kernel_1d(
    x: f64,
    t: f64,
    cfg: &PhysicalConfig,
    qc: &QuadratureControl,
) -> Result<Complex64, OracleError> {
    cfg.validate().map_err(OracleError::Kernel)?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(OracleError::Domain("kernel time t must be positive"));
    }
    let x = x.abs(); // cosine evenness
    let rate = cfg.d_alpha * t / cfg.hbar;

    if cfg.is_imaginary() {
        // exp(−rate·p^α) < 1e-20 beyond the cutoff
        let p_max = (46.0 / rate).powf(1.0 / cfg.alpha);
        let f = |p: f64| {
            Complex64::new(
                (p * x / cfg.hbar).cos() * (-rate * p.powf(cfg.alpha)).exp(),
                0.0,
            )
        };
        let (val, _) = adaptive_gk(&f, 0.0, p_max, qc)?;
        return Ok(val / (PI * cfg.hbar));
    }

    // real time: oscillatory integrand of unit modulus
    let f = |p: f64| {
        Complex64::new((p * x / cfg.hbar).cos(), 0.0)
            * Complex64::new(0.0, -rate * p.powf(cfg.alpha)).exp()
    };
    // panel boundaries: zeros of cos(px/ħ) when x > 0, phase-π crossings of
    // the kernel exponent when x = 0
    let boundary = |j: usize| -> f64 {
        if x > 0.0 {
            PI * cfg.hbar * (j as f64 + 0.5) / x
        } else {
            (PI * (j + 1) as f64 / rate).powf(1.0 / cfg.alpha)
        }
    };

    let mut partials: Vec<Complex64> = Vec::new();
    let mut running = Complex64::new(0.0, 0.0);
    let mut stable_count = 0usize;
    let mut last_estimate = Complex64::new(0.0, 0.0);
    let window = 2 * qc.acceleration_order + 1;

    for j in 0..qc.max_subdivisions {
        let (lo, hi) = if j == 0 {
            (0.0, boundary(0))
        } else {
            (boundary(j - 1), boundary(j))
        };
        // subdivide the panel so the kernel phase advances ≲ π/2 per piece
        let dphase = rate * (hi.powf(cfg.alpha) - lo.powf(cfg.alpha));
        let pieces = ((dphase / (PI / 2.0)).ceil() as usize).clamp(1, 512);
        let step = (hi - lo) / pieces as f64;
        let mut panel = Complex64::new(0.0, 0.0);
        for i in 0..pieces {
            panel += gl15(&f, lo + i as f64 * step, lo + (i + 1) as f64 * step);
        }
        running += panel;
        partials.push(running);

        if partials.len() >= window {
            let estimate = wynn_epsilon(&partials[partials.len() - window..]);
            let delta = (estimate - last_estimate).norm();
            last_estimate = estimate;
            if delta <= qc.abs_tol.max(qc.rel_tol * estimate.norm()) {
                stable_count += 1;
                if stable_count >= 2 {
                    return Ok(estimate / (PI * cfg.hbar));
                }
            } else {
                stable_count = 0;
            }
        }
    }
    Err(OracleError::AccelerationFailure { partials })
}

/// `∫ dx K(x, t)` of the library's 1D kernel by quadrature: 2·∫_0^X plus an
/// algebraic tail extension `K(X)·X/α` (exact for a pure `|x|^{−1−α}`
/// tail). Unit mass is the contract in imaginary time.
pub fn check_normalization(
    t: f64,
    cfg: &PhysicalConfig,
    ctl: &SeriesControl,
    qc: &QuadratureControl,
) -> Result<f64, OracleError> {
    cfg.validate().map_err(OracleError::Kernel)?;
    if !(t > 0.0) {
        return Err(OracleError::Domain("kernel time t must be positive"));
    }
    if !cfg.is_imaginary() {
        return Err(OracleError::Domain(
            "normalization quadrature needs the imaginary-time kernel",
        ));
    }
    let sigma = cfg.length_scale(t);
    let kernel = |x: f64| -> Complex64 {
        free_kernel_1d(x, t, cfg, ctl)
            .map(|k| k.value)
            .unwrap_or(Complex64::new(f64::NAN, 0.0))
    };
    // geometric panels out to 512σ keep the adaptive rule honest on the
    // heavy tail without drowning it in subdivisions
    let mut mass = 0.0;
    let mut lo = 0.0;
    let mut hi = sigma;
    while lo < 512.0 * sigma {
        let (val, _) = adaptive_gk(&kernel, lo, hi.min(512.0 * sigma), qc)?;
        if !val.re.is_finite() {
            return Err(OracleError::QuadratureFailure {
                reason: "kernel evaluation failed inside normalization quadrature",
                achieved: f64::NAN,
            });
        }
        mass += val.re;
        lo = hi;
        hi *= 2.0;
    }
    let edge = 512.0 * sigma;
    let tail = kernel(edge).re * edge / cfg.alpha;
    Ok(2.0 * (mass + tail))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::{feynman_kernel_1d, TimeMode};

    #[test]
    fn real_time_alpha_two_matches_feynman() {
        let cfg = PhysicalConfig::new(2.0, 1.0, 0.5, TimeMode::RealTime).unwrap();
        let qc = QuadratureControl::default();
        for (x, t) in [(0.0, 1.0), (1.0, 1.0), (2.5, 0.8)] {
            let got = fourier_kernel_1d(x, t, &cfg, &qc).unwrap();
            let want = feynman_kernel_1d(x, t, 1.0, 1.0, TimeMode::RealTime).unwrap();
            let rel = (got - want).norm() / want.norm();
            assert!(rel <= 1e-8, "x={x} t={t}: rel err {rel:.3e}");
        }
    }

    #[test]
    fn imaginary_time_x_zero_closed_integral() {
        // (1/π)∫ exp(−p^{3/2}) dp = Γ(1 + 2/3)/π
        let cfg = PhysicalConfig::natural(1.5).unwrap();
        let got = fourier_kernel_1d(0.0, 1.0, &cfg, &QuadratureControl::default()).unwrap();
        assert!((got.re - 0.28735275145216445).abs() < 1e-12);
        assert!(got.im == 0.0);
    }

    #[test]
    fn evenness_in_x() {
        let cfg = PhysicalConfig::natural(1.7).unwrap();
        let qc = QuadratureControl::default();
        let a = fourier_kernel_1d(1.3, 1.0, &cfg, &qc).unwrap();
        let b = fourier_kernel_1d(-1.3, 1.0, &cfg, &qc).unwrap();
        assert_eq!(a, b);
    }

    // offline high-precision stable densities, as in the kernel tests
    #[test]
    fn imaginary_time_matches_stable_density_oracle() {
        let qc = QuadratureControl::default();
        for (alpha, x, want) in [
            (1.2, 2.0, 0.071920113170471865),
            (1.5, 5.0, 0.0071117360476548068),
            (1.8, 0.5, 0.26385189589824977),
        ] {
            let cfg = PhysicalConfig::natural(alpha).unwrap();
            let got = fourier_kernel_1d(x, 1.0, &cfg, &qc).unwrap();
            assert!(
                (got.re - want).abs() / want < 1e-9,
                "alpha={alpha} x={x}: got {}",
                got.re
            );
        }
    }

    #[test]
    fn normalization_is_unit_mass() {
        let ctl = SeriesControl {
            tol: 1e-8,
            ..SeriesControl::default()
        };
        let qc = QuadratureControl {
            abs_tol: 1e-9,
            rel_tol: 1e-9,
            ..QuadratureControl::default()
        };
        for alpha in [1.2, 1.5, 1.8, 2.0] {
            let cfg = PhysicalConfig::natural(alpha).unwrap();
            let mass = check_normalization(0.7, &cfg, &ctl, &qc).unwrap();
            assert!(
                (mass - 1.0).abs() < 1e-6,
                "alpha={alpha}: mass deviates by {:.3e}",
                mass - 1.0
            );
        }
    }
}
