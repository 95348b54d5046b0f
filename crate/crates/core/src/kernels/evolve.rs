//! Wavefunction evolution by kernel quadrature:
//! `ψ_b(x) = ∫ dx_a K(x, t | x_a, 0) ψ_a(x_a)` on a uniform grid.

use num_complex::Complex64;

use super::KernelError;

/// A complex function sampled on a uniform grid.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    xs: Vec<f64>,
    values: Vec<Complex64>,
}

impl SampledFunction {
    pub fn from_fn<F: FnMut(f64) -> Complex64>(
        min: f64,
        max: f64,
        steps: usize,
        mut f: F,
    ) -> Result<Self, KernelError> {
        if steps < 2 || !(max > min) {
            return Err(KernelError::Domain("grid needs max > min and >= 2 steps"));
        }
        let h = (max - min) / (steps - 1) as f64;
        let xs: Vec<f64> = (0..steps).map(|i| min + i as f64 * h).collect();
        let values = xs.iter().map(|&x| f(x)).collect();
        Ok(SampledFunction { xs, values })
    }

    pub fn xs(&self) -> &[f64] {
        &self.xs
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn step(&self) -> f64 {
        self.xs[1] - self.xs[0]
    }

    /// Composite-Simpson quadrature weight of grid node `i` (trapezoid
    /// correction on the last interval when the point count is even).
    fn weight(&self, i: usize) -> f64 {
        let n = self.xs.len();
        let h = self.step();
        let odd_count = if n % 2 == 1 { n } else { n - 1 };
        let mut w = 0.0;
        if i < odd_count {
            w += h / 3.0
                * if i == 0 || i == odd_count - 1 {
                    1.0
                } else if i % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
        }
        if n % 2 == 0 && i >= n - 2 {
            w += h / 2.0;
        }
        w
    }

    /// `∫ |f|² dx` by the grid rule.
    pub fn norm_sq(&self) -> f64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| self.weight(i) * v.norm_sqr())
            .sum()
    }

    /// `‖f − g‖₂` over the shared grid.
    pub fn l2_distance(&self, other: &SampledFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .enumerate()
            .map(|(i, (a, b))| self.weight(i) * (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

#[derive(Debug, Clone)]
pub struct EvolveOutcome {
    pub psi: SampledFunction,
    /// Set when the kernel's local oscillation wavelength over the grid
    /// span drops below four grid steps: the quadrature cannot resolve the
    /// phase and the result is untrustworthy.
    pub resolution_warning: bool,
}

/// Propagates `ψ_a` with the kernel closure `kernel(x_b, x_a)` (time is
/// bound inside the closure) by composite quadrature over the input grid.
/// `min_phase_wavelength` is the caller's estimate of the fastest kernel
/// oscillation across the grid (`f64::INFINITY` when none, e.g. imaginary
/// time); see [`super::phase_wavelength`].
pub fn evolve_wavefunction<F>(
    psi_a: &SampledFunction,
    kernel: F,
    min_phase_wavelength: f64,
) -> Result<EvolveOutcome, KernelError>
where
    F: Fn(f64, f64) -> Result<Complex64, KernelError>,
{
    let resolution_warning = min_phase_wavelength < 4.0 * psi_a.step();
    let mut out = Vec::with_capacity(psi_a.xs.len());
    for &xb in &psi_a.xs {
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, (&xa, va)) in psi_a.xs.iter().zip(&psi_a.values).enumerate() {
            if va.norm_sqr() == 0.0 {
                continue;
            }
            acc += psi_a.weight(i) * kernel(xb, xa)? * va;
        }
        out.push(acc);
    }
    Ok(EvolveOutcome {
        psi: SampledFunction {
            xs: psi_a.xs.clone(),
            values: out,
        },
        resolution_warning,
    })
}
