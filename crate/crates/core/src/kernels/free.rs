//! Free-particle kernels in one and three dimensions, the momentum-space
//! kernel, and the Gaussian (α = 2) closed form they all collapse to.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::foxh::{eval_asymptotic, eval_series, HError, HPair, HParams, SeriesControl};
use crate::gamma::gamma_unchecked;

use super::config::PhysicalConfig;
use super::KernelError;

/// A kernel value with the evaluation metadata the CLI reports per row.
#[derive(Debug, Clone, Copy)]
pub struct KernelEval {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
}

/// `H^{1,1}_{2,2}` parameter set of the 1D free kernel:
/// `(1, 1/α), (1, 1/2); (1, 1), (1, 1/2)`.
pub(crate) fn h_set_free_1d(alpha: f64) -> HParams {
    HParams::new(
        1,
        1,
        vec![HPair::real(1.0, 1.0 / alpha), HPair::real(1.0, 0.5)],
        vec![HPair::real(1.0, 1.0), HPair::real(1.0, 0.5)],
    )
    .expect("free 1D kernel set is valid")
}

/// `H^{1,2}_{3,3}` parameter set of the 3D free kernel:
/// `(1, 1), (1, 1/α), (1, 1/2); (1, 1), (1, 1/2), (2, 1)`.
pub(crate) fn h_set_free_3d(alpha: f64) -> HParams {
    HParams::new(
        1,
        2,
        vec![
            HPair::real(1.0, 1.0),
            HPair::real(1.0, 1.0 / alpha),
            HPair::real(1.0, 0.5),
        ],
        vec![
            HPair::real(1.0, 1.0),
            HPair::real(1.0, 0.5),
            HPair::real(2.0, 1.0),
        ],
    )
    .expect("free 3D kernel set is valid")
}

/// The argument scale `A(t) = (1/ħ)(ħ/(i D_α t))^{1/α}`: the kernel's H
/// argument is `A(t)·|x|`. The principal root fixes
/// `arg A = −π/(2α)` in real time (the unique branch that reproduces the
/// Feynman phase at α = 2); the Wick rotation drops the phase entirely.
pub(crate) fn argument_scale(cfg: &PhysicalConfig, t: f64) -> Complex64 {
    let mag = (cfg.hbar / (cfg.d_alpha * t)).powf(1.0 / cfg.alpha) / cfg.hbar;
    if cfg.is_imaginary() {
        Complex64::new(mag, 0.0)
    } else {
        Complex64::from_polar(mag, -PI / (2.0 * cfg.alpha))
    }
}

/// Evaluation strategy shared by the kernel assemblies: power series first,
/// then (α = 2) the exact closed reduction, then (imaginary time) the dual
/// series at the reciprocal argument. Whichever certifies its error wins;
/// if none does, the best estimate is surfaced as `NotConverged`.
pub(crate) fn eval_kernel_h(
    z: Complex64,
    params: &HParams,
    closed_alpha2: Option<(f64, fn(Complex64) -> Complex64)>,
    dual_ok: bool,
    imaginary: bool,
    ctl: &SeriesControl,
) -> Result<KernelEval, KernelError> {
    let z_abs = z.norm();
    let alpha2 = matches!(closed_alpha2, Some((alpha, _)) if alpha == 2.0);
    // at large arguments the power series burns its budget climbing a
    // hump it can never cancel in f64; go to the dual expansion first
    let dual_first = imaginary && dual_ok && !alpha2 && z_abs > 3.0;

    let mut best: Option<KernelEval> = None;
    let mut hard_error: Option<HError> = None;

    let mut consider = |r: Result<crate::foxh::SeriesResult, HError>,
                        best: &mut Option<KernelEval>,
                        hard: &mut Option<HError>|
     -> Option<KernelEval> {
        match r {
            Ok(sr) => {
                let eval = KernelEval {
                    value: sr.value,
                    abs_error_estimate: sr.abs_error_estimate,
                    terms_used: sr.terms_used,
                };
                if sr.converged {
                    return Some(eval);
                }
                if best
                    .map(|b| sr.abs_error_estimate < b.abs_error_estimate)
                    .unwrap_or(true)
                {
                    *best = Some(eval);
                }
                None
            }
            Err(HError::Overflow { .. }) => None,
            Err(e) => {
                *hard = Some(e);
                None
            }
        }
    };

    let dual_attempt = |best: &mut Option<KernelEval>, hard: &mut Option<HError>| {
        if !(imaginary && dual_ok) {
            return None;
        }
        consider(
            eval_asymptotic(1.0 / z, &params.invert(), ctl),
            best,
            hard,
        )
    };

    if dual_first {
        if let Some(hit) = dual_attempt(&mut best, &mut hard_error) {
            return Ok(hit);
        }
    }
    if let Some(hit) = consider(eval_series(z, params, ctl), &mut best, &mut hard_error) {
        return Ok(hit);
    }
    if let Some((_, closed)) = closed_alpha2 {
        if alpha2 {
            let value = closed(z);
            return Ok(KernelEval {
                value,
                abs_error_estimate: 8.0 * f64::EPSILON * value.norm(),
                terms_used: 0,
            });
        }
    }
    if !dual_first {
        if let Some(hit) = dual_attempt(&mut best, &mut hard_error) {
            return Ok(hit);
        }
    }

    match (best, hard_error) {
        (Some(b), _) => Err(KernelError::NotConverged {
            abs_error_estimate: b.abs_error_estimate,
        }),
        (None, Some(e)) => Err(KernelError::Series(e)),
        (None, None) => Err(KernelError::NotConverged {
            abs_error_estimate: f64::INFINITY,
        }),
    }
}

fn closed_1d(z: Complex64) -> Complex64 {
    // termwise reduction of the series at α = 2
    z / PI.sqrt() * (-z * z / 4.0).exp()
}

fn closed_3d(z: Complex64) -> Complex64 {
    -z * z * z / (2.0 * PI.sqrt()) * (-z * z / 4.0).exp()
}

/// 1D free-particle kernel `K(x, t | 0, 0)`.
///
/// `K = H[A(t)|x|] / (α|x|)` with the `H^{1,1}_{2,2}` set of
/// [`h_set_free_1d`]; at `x = 0` the finite limit
/// `Γ(1 + 1/α)·A(t)/π` is used. Even in x. In imaginary time this is the
/// symmetric α-stable density with scale `σ(t)`.
pub fn free_kernel_1d(
    x: f64,
    t: f64,
    cfg: &PhysicalConfig,
    ctl: &SeriesControl,
) -> Result<KernelEval, KernelError> {
    cfg.validate()?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(KernelError::Domain("kernel time t must be positive"));
    }
    if !x.is_finite() {
        return Err(KernelError::Domain("position x must be finite"));
    }
    let a = argument_scale(cfg, t);
    let z = a * x.abs();
    if z.norm() < 1e-8 {
        let value = gamma_unchecked(Complex64::new(1.0 + 1.0 / cfg.alpha, 0.0)).re * a / PI;
        return Ok(KernelEval {
            value,
            abs_error_estimate: 8.0 * f64::EPSILON * value.norm(),
            terms_used: 0,
        });
    }
    let params = h_set_free_1d(cfg.alpha);
    let h = eval_kernel_h(
        z,
        &params,
        Some((cfg.alpha, closed_1d)),
        true,
        cfg.is_imaginary(),
        ctl,
    )?;
    let pref = 1.0 / (cfg.alpha * x.abs());
    Ok(KernelEval {
        value: h.value * pref,
        abs_error_estimate: h.abs_error_estimate * pref,
        terms_used: h.terms_used,
    })
}

/// The Gaussian closed form `(m/(2πiħt))^{1/2}·exp(imx²/(2ħt))` (principal
/// square root), and its heat-kernel Wick rotation. This is the α = 2
/// reference every general-α result must collapse to with `D₂ = 1/2m`.
pub fn feynman_kernel_1d(
    x: f64,
    t: f64,
    m_mass: f64,
    hbar: f64,
    time_mode: super::TimeMode,
) -> Result<Complex64, KernelError> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(KernelError::Domain("kernel time t must be positive"));
    }
    if !(m_mass > 0.0) || !(hbar > 0.0) {
        return Err(KernelError::Domain("mass and hbar must be positive"));
    }
    let width = m_mass / (2.0 * PI * hbar * t);
    Ok(match time_mode {
        super::TimeMode::RealTime => {
            let root = Complex64::from_polar(width.sqrt(), -PI / 4.0);
            root * Complex64::new(0.0, m_mass * x * x / (2.0 * hbar * t)).exp()
        }
        super::TimeMode::ImaginaryTime => {
            Complex64::new(width.sqrt() * (-m_mass * x * x / (2.0 * hbar * t)).exp(), 0.0)
        }
    })
}

/// 3D free-particle kernel at radial separation `r > 0`:
/// `K = −H[A(t)·r] / (2πα r³)` with the `H^{1,2}_{3,3}` set. Equals
/// `−(1/2π)·∂_x K_1d(x,t)|_{x=r}` (the 1D→3D Fourier derivative relation),
/// which the validation suite checks by central differences.
pub fn free_kernel_3d(
    r: f64,
    t: f64,
    cfg: &PhysicalConfig,
    ctl: &SeriesControl,
) -> Result<KernelEval, KernelError> {
    cfg.validate()?;
    if !(t > 0.0) || !t.is_finite() {
        return Err(KernelError::Domain("kernel time t must be positive"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(KernelError::Domain(
            "3D kernel needs radial separation r > 0 (cusp at the origin)",
        ));
    }
    let a = argument_scale(cfg, t);
    let z = a * r;
    // the reciprocal of this set has colliding pole rows, so there is no
    // dual route; large arguments must come from the α = 2 reduction or fail
    let params = h_set_free_3d(cfg.alpha);
    let h = eval_kernel_h(
        z,
        &params,
        Some((cfg.alpha, closed_3d)),
        false,
        cfg.is_imaginary(),
        ctl,
    )?;
    let pref = -1.0 / (2.0 * PI * cfg.alpha * r * r * r);
    Ok(KernelEval {
        value: h.value * pref,
        abs_error_estimate: h.abs_error_estimate * pref.abs(),
        terms_used: h.terms_used,
    })
}

/// Diagonal factor of the momentum-space kernel:
/// `exp(−(i/ħ) D_α |p|^α Δt)` in real time, `exp(−D_α |p|^α Δτ/ħ)` after
/// Wick rotation. The `(2πħ)³ δ(p_b − p_a)` prefactor of the full
/// momentum-space kernel is a convention left to the caller; for a 3-vector
/// argument pass its norm.
pub fn momentum_kernel(
    p_abs: f64,
    dt: f64,
    cfg: &PhysicalConfig,
) -> Result<Complex64, KernelError> {
    cfg.validate()?;
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(KernelError::Domain("time increment dt must be positive"));
    }
    let rate = cfg.d_alpha * p_abs.abs().powf(cfg.alpha) * dt / cfg.hbar;
    Ok(if cfg.is_imaginary() {
        Complex64::new((-rate).exp(), 0.0)
    } else {
        Complex64::new(0.0, -rate).exp()
    })
}

/// Local oscillation wavelength of the real-time kernel at displacement
/// `dx`, from the stationary-phase momentum `p* = (dx/(α D_α t))^{1/(α−1)}`;
/// infinite in imaginary time. Grids coarser than a quarter wavelength
/// cannot resolve the kernel's phase.
pub fn phase_wavelength(cfg: &PhysicalConfig, t: f64, dx: f64) -> f64 {
    if cfg.is_imaginary() || dx == 0.0 {
        return f64::INFINITY;
    }
    let p_star = (dx.abs() / (cfg.alpha * cfg.d_alpha * t)).powf(1.0 / (cfg.alpha - 1.0));
    2.0 * PI * cfg.hbar / p_star
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::TimeMode;

    fn ctl() -> SeriesControl {
        SeriesControl::default()
    }

    fn real_cfg(alpha: f64, d_alpha: f64) -> PhysicalConfig {
        PhysicalConfig::new(alpha, 1.0, d_alpha, TimeMode::RealTime).unwrap()
    }

    fn imag_cfg(alpha: f64) -> PhysicalConfig {
        PhysicalConfig::natural(alpha).unwrap()
    }

    #[test]
    fn alpha_two_real_time_matches_feynman_closed_form() {
        // m = 1 corresponds to D₂ = 1/2
        let cfg = real_cfg(2.0, 0.5);
        for (x, t) in [(1.0, 1.0), (0.0, 1.0), (3.0, 0.7), (5.0, 0.1), (-2.0, 2.0)] {
            let got = free_kernel_1d(x, t, &cfg, &ctl()).unwrap().value;
            let want = feynman_kernel_1d(x, t, 1.0, 1.0, TimeMode::RealTime).unwrap();
            let rel = (got - want).norm() / want.norm();
            assert!(rel <= 1e-10, "x={x} t={t}: rel err {rel:.3e}");
        }
        // spot value: K(1,1) = (2πi)^{−1/2} e^{i/2}
        let got = free_kernel_1d(1.0, 1.0, &cfg, &ctl()).unwrap().value;
        let want = Complex64::from_polar((2.0 * PI).sqrt().recip(), -PI / 4.0)
            * Complex64::new(0.0, 0.5).exp();
        assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn feynman_kernel_shape() {
        let k0 = feynman_kernel_1d(0.0, 1.0, 1.0, 1.0, TimeMode::RealTime).unwrap();
        let want = Complex64::from_polar((2.0 * PI).sqrt().recip(), -PI / 4.0);
        assert!((k0 - want).norm() < 1e-15);
        // modulus independent of x
        for x in [0.0, 1.0, 7.5] {
            let k = feynman_kernel_1d(x, 2.0, 1.3, 1.0, TimeMode::RealTime).unwrap();
            assert!((k.norm() - (1.3 / (4.0 * PI)).sqrt()).abs() < 1e-15);
        }
        // imaginary time: normalized Gaussian (midpoint rule on a wide grid)
        let mut mass = 0.0;
        let h = 0.01;
        let mut x = -12.0;
        while x < 12.0 {
            mass += feynman_kernel_1d(x + h / 2.0, 0.5, 1.0, 1.0, TimeMode::ImaginaryTime)
                .unwrap()
                .re
                * h;
            x += h;
        }
        assert!((mass - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_separation_closed_form() {
        // K(0, τ=1) = Γ(1 + 1/α)/π in natural units
        let got = free_kernel_1d(0.0, 1.0, &imag_cfg(1.5), &ctl()).unwrap().value;
        assert!((got.re - 0.28735275145216445).abs() < 1e-14);
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn kernel_is_even_in_x() {
        let cfg = imag_cfg(1.7);
        for x in [0.3, 1.1, 4.0] {
            let a = free_kernel_1d(x, 1.0, &cfg, &ctl()).unwrap().value;
            let b = free_kernel_1d(-x, 1.0, &cfg, &ctl()).unwrap().value;
            assert_eq!(a, b);
        }
    }

    // standard symmetric α-stable densities (scale 1), computed offline by
    // high-precision quadrature; the τ=1 natural-units kernel equals them
    const STABLE_REFS: [(f64, f64, f64); 9] = [
        (1.2, 0.5, 0.25999563346108337),
        (1.2, 2.0, 0.071920113170471865),
        (1.2, 5.0, 0.010498945454991378),
        (1.5, 0.5, 0.26229684035409004),
        (1.5, 2.0, 0.084539623126137520),
        (1.5, 5.0, 0.0071117360476548068),
        (1.8, 0.5, 0.26385189589824977),
        (1.8, 2.0, 0.096700976593629995),
        (1.8, 5.0, 0.0032653013158332458),
    ];

    #[test]
    fn imaginary_time_kernel_matches_stable_density_oracle() {
        // deep-tail points are reachable only at the dual expansion's
        // optimal-truncation accuracy, so ask for what is achievable
        let tail_ctl = SeriesControl {
            tol: 1e-6,
            ..SeriesControl::default()
        };
        for (alpha, x, want) in STABLE_REFS {
            let got = free_kernel_1d(x, 1.0, &imag_cfg(alpha), &tail_ctl).unwrap();
            let rel = (got.value.re - want).abs() / want;
            assert!(
                rel <= 1e-6,
                "alpha={alpha} x={x}: rel err {rel:.3e} (estimate {:.1e})",
                got.abs_error_estimate
            );
            assert_eq!(got.value.im, 0.0);
        }
    }

    #[test]
    fn real_time_large_argument_without_closed_form_is_refused() {
        // α < 2, real time, far tail: neither series route is trustworthy
        let cfg = real_cfg(1.5, 1.0);
        match free_kernel_1d(40.0, 0.01, &cfg, &ctl()) {
            Err(KernelError::NotConverged { .. }) | Err(KernelError::Series(_)) => {}
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn alpha_two_3d_matches_feynman_form() {
        let cfg = real_cfg(2.0, 0.5);
        for (r, t) in [(0.5, 1.0), (2.0, 0.8), (4.0, 2.0)] {
            let got = free_kernel_3d(r, t, &cfg, &ctl()).unwrap().value;
            let amp = (1.0 / (2.0 * PI * t)).powf(1.5);
            let want = Complex64::from_polar(amp, -3.0 * PI / 4.0)
                * Complex64::new(0.0, r * r / (2.0 * t)).exp();
            let rel = (got - want).norm() / want.norm();
            assert!(rel <= 1e-10, "r={r} t={t}: rel err {rel:.3e}");
        }
    }

    #[test]
    fn momentum_kernel_values() {
        let cfg = real_cfg(2.0, 0.5);
        assert_eq!(
            momentum_kernel(0.0, 1.0, &cfg).unwrap(),
            Complex64::new(1.0, 0.0)
        );
        for p in [0.3, 1.0, 2.5] {
            assert!((momentum_kernel(p, 1.0, &cfg).unwrap().norm() - 1.0).abs() < 1e-15);
        }
        let got = momentum_kernel(1.0, 1.0, &cfg).unwrap();
        let want = Complex64::new(0.0, -0.5).exp();
        assert!((got - want).norm() < 1e-15);
    }

    #[test]
    fn domain_errors() {
        let cfg = imag_cfg(1.5);
        assert!(matches!(
            free_kernel_1d(1.0, 0.0, &cfg, &ctl()),
            Err(KernelError::Domain(_))
        ));
        assert!(matches!(
            free_kernel_3d(0.0, 1.0, &cfg, &ctl()),
            Err(KernelError::Domain(_))
        ));
        assert!(PhysicalConfig::new(2.5, 1.0, 1.0, TimeMode::RealTime).is_err());
        assert!(PhysicalConfig::new(1.5, 1.0, -1.0, TimeMode::RealTime).is_err());
    }
}
