//! Physical and box configuration types.

use serde::{Deserialize, Serialize};

use super::KernelError;

/// Real time evolves the oscillatory quantum kernel; imaginary time is its
/// Wick rotation `it → τ`, under which the free kernel becomes the real,
/// nonnegative, unit-mass density of a symmetric α-stable law. The rotation
/// is the single switch between the two: every `(1/i)^{1/α}` phase factor
/// becomes 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TimeMode {
    RealTime,
    ImaginaryTime,
}

/// Free-particle configuration: Lévy index α with `1 < α ≤ 2`, ħ, and the
/// fractional diffusion coefficient `D_α` (dimension erg^{1−α}·cm^α·s^{−α};
/// `D_2 = 1/2m` recovers a particle of mass m). No unit arithmetic is
/// performed — the dimension is documentation.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysicalConfig {
    pub alpha: f64,
    pub hbar: f64,
    pub d_alpha: f64,
    pub time_mode: TimeMode,
}

impl PhysicalConfig {
    pub fn new(
        alpha: f64,
        hbar: f64,
        d_alpha: f64,
        time_mode: TimeMode,
    ) -> Result<Self, KernelError> {
        let cfg = PhysicalConfig {
            alpha,
            hbar,
            d_alpha,
            time_mode,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Natural-units config: ħ = 1, D_α = 1, imaginary time.
    pub fn natural(alpha: f64) -> Result<Self, KernelError> {
        PhysicalConfig::new(alpha, 1.0, 1.0, TimeMode::ImaginaryTime)
    }

    pub fn validate(&self) -> Result<(), KernelError> {
        if !(self.alpha > 1.0 && self.alpha <= 2.0) {
            return Err(KernelError::Config {
                key: "alpha",
                message: format!("alpha = {} outside (1, 2]", self.alpha),
            });
        }
        if !(self.hbar > 0.0) || !self.hbar.is_finite() {
            return Err(KernelError::Config {
                key: "hbar",
                message: format!("hbar = {} must be finite and positive", self.hbar),
            });
        }
        if !(self.d_alpha > 0.0) || !self.d_alpha.is_finite() {
            return Err(KernelError::Config {
                key: "d_alpha",
                message: format!("d_alpha = {} must be finite and positive", self.d_alpha),
            });
        }
        Ok(())
    }

    pub fn is_imaginary(&self) -> bool {
        self.time_mode == TimeMode::ImaginaryTime
    }

    /// Kernel length scale `σ(t) = (ħ^{α−1} D_α t)^{1/α}`: displacements
    /// scale as `Δx ∝ σ(Δt)`, the Lévy-flight law.
    pub fn length_scale(&self, t: f64) -> f64 {
        (self.hbar.powf(self.alpha - 1.0) * self.d_alpha * t).powf(1.0 / self.alpha)
    }
}

/// Infinite square well spanning `[−a, a]` plus the truncation orders of its
/// two kernel representations.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct BoxConfig {
    /// Half-width of the box.
    pub a: f64,
    /// Number of eigenmodes kept in the spectral sum.
    pub n_modes: usize,
    /// Image shells kept in the method-of-images sum (`l = −L..L`).
    pub n_images: usize,
}

impl BoxConfig {
    pub fn new(a: f64, n_modes: usize, n_images: usize) -> Result<Self, KernelError> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(KernelError::Config {
                key: "box.a",
                message: format!("box half-width a = {a} must be finite and positive"),
            });
        }
        if n_modes < 1 {
            return Err(KernelError::Config {
                key: "box.n_modes",
                message: "box.n_modes must be at least 1".to_string(),
            });
        }
        Ok(BoxConfig {
            a,
            n_modes,
            n_images,
        })
    }

    /// Default image truncation `L = ⌈8σ/(2a)⌉ + 2` for kernel scale σ.
    /// Stable tails decay like `|x|^{−1−α}`, so the omitted rings are
    /// bounded and reported by the evaluator, not assumed negligible.
    pub fn default_images(&self, sigma: f64) -> usize {
        (8.0 * sigma / (2.0 * self.a)).ceil() as usize + 2
    }
}
