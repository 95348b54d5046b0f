//! The computable series expansion of the H-function and the gamma-ratio
//! integrand χ(s).
//!
//! Collapsing the Mellin–Barnes contour onto the poles of the first m
//! lower-row gammas gives, when those poles are simple,
//!
//! ```text
//! H[z] = Σ_{h≤m} Σ_{k≥0}  Π_{j≤n} Γ(1 − a_j + A_j s_hk) Π'_{j≤m} Γ(b_j − B_j s_hk)
//!                         ───────────────────────────────────────────────────────────
//!                         Π_{j>m} Γ(1 − b_j + B_j s_hk) Π_{j>n} Γ(a_j − A_j s_hk)
//!                         · (−1)^k z^{s_hk} / (k! B_h),      s_hk = (b_h + k)/B_h,
//! ```
//!
//! the primed product omitting `j = h`. Branch of `z^s`: principal,
//! `arg z ∈ (−π, π]`.
//!
//! Term assembly notes:
//!
//! - The power/factorial factor `(−1)^k z^{s_hk}/k!` is carried as a running
//!   product in a scale-split representation, which keeps it exact to a few
//!   ulp and immune to intermediate overflow.
//! - Gamma factors with identical numerator and denominator arguments cancel
//!   before evaluation. This is what makes the α = 2 Laplace and
//!   fixed-energy sets (which carry a signed slope) evaluate cleanly: their
//!   `Γ(1 − s/2)` factors collide pairwise and drop out.
//! - A surviving denominator pole annihilates the term; a surviving
//!   numerator pole is a hard error (the series does not exist there).

use num_complex::Complex64;

use crate::gamma::{gamma_unchecked, log_gamma_unchecked, pole_distance, POLE_TOL};

use super::params::{HParams, HParamsError};

/// Truncation and overflow policy for series evaluation.
#[derive(Debug, Clone, Copy)]
pub struct SeriesControl {
    /// Target absolute-or-relative tolerance of the result.
    pub tol: f64,
    /// Hard cap on the number of terms per pole row.
    pub max_terms: usize,
    /// Magnitude below which terms are treated as numerically extinct.
    pub underflow_floor: f64,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            tol: 1e-10,
            max_terms: 2000,
            underflow_floor: 1e-290,
        }
    }
}

/// Outcome of a series evaluation.
///
/// `converged` implies `abs_error_estimate ≤ tol · max(1, |value|)`: the
/// estimate covers both the truncated tail and the floating-point
/// cancellation floor of the partial sums.
#[derive(Debug, Clone, Copy)]
pub struct SeriesResult {
    pub value: Complex64,
    pub abs_error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum HError {
    /// Argument outside an operation's domain (z = 0, missing pole rows, …).
    Domain(&'static str),
    /// The series does not represent the function here (μ < 0, or μ = 0
    /// with |z| ≥ 1/β).
    OutsideSeriesDomain { mu: f64, abs_z: f64 },
    /// The pole rows are not simple (m > 1 with colliding pole families).
    PolesNotSimple,
    /// A numerator gamma factor sits on a pole: the term is infinite.
    NumeratorPole { s: Complex64 },
    /// Numerator and denominator poles collide at distinct arguments; the
    /// term has no parameter-free limit.
    IndeterminateTerm { s: Complex64 },
    /// A term overflowed the f64 range before the series could turn over.
    Overflow { term: usize },
    /// A parameter identity's applicability condition failed.
    NotApplicable(&'static str),
    /// Invalid parameter set produced or supplied.
    Params(HParamsError),
}

impl std::fmt::Display for HError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HError::Domain(what) => write!(f, "domain error: {what}"),
            HError::OutsideSeriesDomain { mu, abs_z } => write!(
                f,
                "series not valid for this set (mu = {mu}, |z| = {abs_z}); \
                 needs mu > 0, or mu = 0 with |z| < 1/beta"
            ),
            HError::PolesNotSimple => {
                write!(f, "series pole families collide; expansion needs simple poles")
            }
            HError::NumeratorPole { s } => {
                write!(f, "numerator gamma pole at s = {s}; term is infinite")
            }
            HError::IndeterminateTerm { s } => {
                write!(f, "indeterminate gamma pole ratio at s = {s}")
            }
            HError::Overflow { term } => {
                write!(f, "series term {term} overflowed before convergence")
            }
            HError::NotApplicable(what) => write!(f, "identity not applicable: {what}"),
            HError::Params(e) => write!(f, "invalid parameters: {e}"),
        }
    }
}

impl std::error::Error for HError {}

impl From<HParamsError> for HError {
    fn from(e: HParamsError) -> Self {
        HError::Params(e)
    }
}

const EPS: f64 = f64::EPSILON;
/// Consecutive sub-threshold terms required before truncation; single small
/// terms are not trusted because the kernel sets produce exact zeros at
/// every other k.
const QUIET_RUN: usize = 20;

/// Value split as `val · e^ln` to dodge intermediate overflow.
#[derive(Clone, Copy)]
struct Scaled {
    val: Complex64,
    ln: f64,
}

impl Scaled {
    fn one() -> Self {
        Scaled {
            val: Complex64::new(1.0, 0.0),
            ln: 0.0,
        }
    }

    fn renorm(&mut self) {
        let m = self.val.norm();
        if m == 0.0 {
            self.ln = 0.0;
            return;
        }
        // keep values in the plain channel as long as they are comfortably
        // representable; funnelling magnitudes through exp(ln) costs ~|ln|·ε
        // of relative error, which matters in cancellation-heavy sums
        if !(1e-80..=1e80).contains(&m) {
            self.ln += m.ln();
            self.val /= m;
        }
    }

    fn mul(&mut self, w: Complex64) {
        let n = w.norm();
        if !(1e-100..=1e100).contains(&n) && n > 0.0 && n.is_finite() {
            self.val *= w / n;
            self.ln += n.ln();
        } else {
            self.val *= w;
        }
        self.renorm();
    }

    fn div(&mut self, w: Complex64) {
        let n = w.norm();
        if !(1e-100..=1e100).contains(&n) && n > 0.0 && n.is_finite() {
            // 1/w = conj(w/n)/n
            self.val *= (w / n).conj();
            self.ln -= n.ln();
        } else {
            self.val /= w;
        }
        self.renorm();
    }

    /// Multiplies by e^w, keeping the factor in the plain channel when it
    /// is representable.
    fn mul_exp(&mut self, w: Complex64) {
        if w.re.abs() <= 170.0 {
            self.val *= w.exp();
            self.renorm();
        } else {
            self.ln += w.re;
            self.val *= Complex64::new(w.im.cos(), w.im.sin());
        }
    }

    fn log_norm(&self) -> f64 {
        self.ln + self.val.norm().ln()
    }

    /// Collapses to a plain complex; `None` on overflow, zero on underflow.
    fn collapse(&self) -> Option<Complex64> {
        if self.val == Complex64::new(0.0, 0.0) {
            return Some(self.val);
        }
        if self.ln == 0.0 {
            return Some(self.val);
        }
        let ln = self.log_norm();
        if ln > 709.0 {
            return None;
        }
        if ln < -745.0 {
            return Some(Complex64::new(0.0, 0.0));
        }
        Some(self.val * self.ln.exp())
    }
}

/// `e^w` as a [`Scaled`] factor: plain when representable, split otherwise.
fn exp_scaled(w: Complex64) -> Scaled {
    if w.re.abs() <= 170.0 {
        Scaled {
            val: w.exp(),
            ln: 0.0,
        }
    } else {
        Scaled {
            val: Complex64::new(w.im.cos(), w.im.sin()),
            ln: w.re,
        }
    }
}

enum Ratio {
    Zero,
    Finite(Scaled),
}

/// Gamma arguments of one series term, numerator and denominator.
fn term_args(
    params: &HParams,
    skip_lower: Option<usize>,
    s: Complex64,
) -> (Vec<Complex64>, Vec<Complex64>) {
    let one = Complex64::new(1.0, 0.0);
    let mut num = Vec::with_capacity(params.n() + params.m());
    let mut den = Vec::with_capacity(params.p() + params.q());
    for pair in params.upper().iter().take(params.n()) {
        num.push(one - pair.offset + pair.slope * s);
    }
    for (j, pair) in params.lower().iter().take(params.m()).enumerate() {
        if Some(j) == skip_lower {
            continue;
        }
        num.push(pair.offset - pair.slope * s);
    }
    for pair in params.lower().iter().skip(params.m()) {
        den.push(one - pair.offset + pair.slope * s);
    }
    for pair in params.upper().iter().skip(params.n()) {
        den.push(pair.offset - pair.slope * s);
    }
    (num, den)
}

/// Evaluates `Π Γ(num) / Π Γ(den)` with pairwise cancellation of identical
/// arguments and pole bookkeeping.
fn gamma_ratio(
    mut num: Vec<Complex64>,
    mut den: Vec<Complex64>,
    s: Complex64,
) -> Result<Ratio, HError> {
    // cancel arguments that agree to 1e-12: the factors are identical
    // functions there and their ratio is 1 even at a shared pole
    let mut i = 0;
    'outer: while i < num.len() {
        for j in 0..den.len() {
            if (num[i] - den[j]).norm() <= 1e-12 {
                num.swap_remove(i);
                den.swap_remove(j);
                continue 'outer;
            }
        }
        i += 1;
    }

    let at_pole = |w: &Complex64| matches!(pole_distance(*w), Some((d, _)) if d <= POLE_TOL);
    let num_poles = num.iter().filter(|w| at_pole(w)).count();
    let den_poles = den.iter().filter(|w| at_pole(w)).count();
    if den_poles > 0 && num_poles == 0 {
        return Ok(Ratio::Zero);
    }
    if num_poles > 0 {
        return Err(if den_poles > 0 {
            HError::IndeterminateTerm { s }
        } else {
            HError::NumeratorPole { s }
        });
    }

    let mut out = Scaled::one();
    for w in num {
        if w.re.abs() <= 160.0 && w.im.abs() <= 160.0 {
            out.mul(gamma_unchecked(w));
        } else {
            out.mul_exp(log_gamma_unchecked(w));
        }
    }
    for w in den {
        if w.re.abs() <= 160.0 && w.im.abs() <= 160.0 {
            out.div(gamma_unchecked(w));
        } else {
            out.mul_exp(-log_gamma_unchecked(w));
        }
    }
    Ok(Ratio::Finite(out))
}

/// The Mellin–Barnes integrand χ(s): the full four-product gamma ratio, with
/// denominator factors taken through the reciprocal gamma (zero at poles)
/// and empty products equal to one.
pub fn chi(s: Complex64, params: &HParams) -> Result<Complex64, HError> {
    let (num, den) = term_args(params, None, s);
    // χ keeps the raw factor structure: no pairwise cancellation here, a
    // numerator pole is an error even if a denominator pole coexists
    let at_pole = |w: &Complex64| matches!(pole_distance(*w), Some((d, _)) if d <= POLE_TOL);
    if num.iter().any(|w| at_pole(w)) {
        return Err(HError::NumeratorPole { s });
    }
    let mut out = Scaled::one();
    for w in num {
        if w.re.abs() <= 160.0 && w.im.abs() <= 160.0 {
            out.mul(gamma_unchecked(w));
        } else {
            out.mul_exp(log_gamma_unchecked(w));
        }
    }
    for w in den {
        let r = crate::gamma::reciprocal_gamma(w);
        if r == Complex64::new(0.0, 0.0) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if w.re.abs() <= 160.0 && w.im.abs() <= 160.0 {
            out.mul(r);
        } else {
            out.mul_exp(-log_gamma_unchecked(w));
        }
    }
    out.collapse().ok_or(HError::Overflow { term: 0 })
}

/// Neumaier-compensated complex accumulator.
#[derive(Clone, Copy)]
struct Kahan {
    sum: Complex64,
    comp: Complex64,
}

impl Kahan {
    fn new() -> Self {
        Kahan {
            sum: Complex64::new(0.0, 0.0),
            comp: Complex64::new(0.0, 0.0),
        }
    }

    fn add(&mut self, t: Complex64) {
        let add1 = |s: f64, c: &mut f64, t: f64| -> f64 {
            let new = s + t;
            *c += if s.abs() >= t.abs() {
                (s - new) + t
            } else {
                (t - new) + s
            };
            new
        };
        self.sum.re = add1(self.sum.re, &mut self.comp.re, t.re);
        self.sum.im = add1(self.sum.im, &mut self.comp.im, t.im);
    }

    fn value(&self) -> Complex64 {
        self.sum + self.comp
    }
}

fn series_domain_check(z: Complex64, params: &HParams) -> Result<(), HError> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(HError::Domain("series argument z must be nonzero"));
    }
    if params.m() == 0 {
        return Err(HError::Domain("series requires m >= 1 (no pole rows)"));
    }
    if params.m() > 1 && !params.series_poles_simple(200) {
        return Err(HError::PolesNotSimple);
    }
    Ok(())
}

/// Evaluates the H-function power series at `z`.
///
/// Requires `μ > 0`, or `μ = 0` with `|z| < 1/β`. Truncates a pole row once
/// [`QUIET_RUN`] consecutive terms fall below `tol/20 · clamp(|sum|, ·, 1)`;
/// the error estimate adds the final quiet window to an `ε·‖terms‖₂`
/// cancellation floor, so catastrophically cancelling sums (large |z| with
/// small μ) honestly report `converged = false` rather than digits they do
/// not have.
pub fn eval_series(
    z: Complex64,
    params: &HParams,
    ctl: &SeriesControl,
) -> Result<SeriesResult, HError> {
    series_domain_check(z, params)?;
    let mu = params.mu();
    if mu <= 1e-12 {
        let marginal = mu.abs() <= 1e-12 && z.norm() < 1.0 / params.beta();
        if !marginal {
            return Err(HError::OutsideSeriesDomain {
                mu,
                abs_z: z.norm(),
            });
        }
    }

    let zln = z.ln();
    let mut acc = Kahan::new();
    let mut terms_used = 0usize;
    let mut sumsq = 0.0f64;
    let mut window = 0.0f64;
    let mut all_rows_quiet = true;

    for h in 0..params.m() {
        let row = &params.lower()[h];
        let inv_bh = 1.0 / row.slope;

        // running (−1)^k z^{s_hk} / k!, scale-split; the per-step factor
        // stays a plain complex multiply whenever z^{1/B_h} is representable
        let mut power = exp_scaled(row.offset * inv_bh * zln);
        let step = exp_scaled(inv_bh * zln);

        let mut quiet = 0usize;
        let mut row_window = 0.0f64;
        let mut row_quieted = false;

        for k in 0..ctl.max_terms {
            if k > 0 {
                power.ln += step.ln;
                power.val *= -step.val / (k as f64);
                power.renorm();
            }
            let s = (row.offset + k as f64) * inv_bh;
            let (num, den) = term_args(params, Some(h), s);
            let term = match gamma_ratio(num, den, s)? {
                Ratio::Zero => Complex64::new(0.0, 0.0),
                Ratio::Finite(mut g) => {
                    g.mul(power.val * inv_bh);
                    g.ln += power.ln;
                    g.collapse().ok_or(HError::Overflow { term: k })?
                }
            };
            terms_used += 1;
            acc.add(term);
            let t_abs = term.norm();
            sumsq += t_abs * t_abs;

            let scale = acc
                .value()
                .norm()
                .clamp(ctl.underflow_floor, 1.0);
            if t_abs <= ctl.tol * scale / QUIET_RUN as f64 {
                quiet += 1;
                row_window += t_abs;
                if quiet >= QUIET_RUN {
                    row_quieted = true;
                    break;
                }
            } else {
                quiet = 0;
                row_window = 0.0;
            }
        }
        window += row_window;
        all_rows_quiet &= row_quieted;
    }

    let value = acc.value();
    let noise = EPS * sumsq.sqrt();
    let abs_error_estimate = window + noise;
    let converged =
        all_rows_quiet && abs_error_estimate <= ctl.tol * value.norm().max(1.0);
    Ok(SeriesResult {
        value,
        abs_error_estimate,
        terms_used,
        converged,
    })
}

/// Sums the series to its smallest term (optimal truncation of a divergent
/// expansion) instead of demanding convergence.
///
/// This is how the reciprocal-argument dual of a `μ > 0` set — whose own
/// series has `μ < 0` and diverges — is used as a large-argument expansion:
/// truncated at the smallest term it approximates the function with error
/// of the order of that term, which the result reports as
/// `abs_error_estimate`. Contributions smaller than every algebraic term
/// (exponentially small in |z|) are invisible to this expansion; callers
/// restrict it to regimes where the algebraic part dominates.
pub fn eval_asymptotic(
    z: Complex64,
    params: &HParams,
    ctl: &SeriesControl,
) -> Result<SeriesResult, HError> {
    series_domain_check(z, params)?;

    let zln = z.ln();
    let mut acc = Kahan::new();
    let mut terms_used = 0usize;
    let mut sumsq = 0.0f64;
    let mut omitted = 0.0f64;
    let mut all_rows_ok = true;

    for h in 0..params.m() {
        let row = &params.lower()[h];
        let inv_bh = 1.0 / row.slope;
        let mut power = exp_scaled(row.offset * inv_bh * zln);
        let step = exp_scaled(inv_bh * zln);

        // terms not yet committed: a candidate divergent-tail climb
        let mut pending: Vec<Complex64> = Vec::new();
        let mut prev_seen = f64::INFINITY;
        let mut min_added = f64::INFINITY;
        let mut zero_run = 0usize;
        let mut row_omitted = None;

        'row: for k in 0..ctl.max_terms {
            if k > 0 {
                power.ln += step.ln;
                power.val *= -step.val / (k as f64);
                power.renorm();
            }
            let s = (row.offset + k as f64) * inv_bh;
            let (num, den) = term_args(params, Some(h), s);
            let term = match gamma_ratio(num, den, s)? {
                Ratio::Zero => Complex64::new(0.0, 0.0),
                Ratio::Finite(mut g) => {
                    g.mul(power.val * inv_bh);
                    g.ln += power.ln;
                    g.collapse().ok_or(HError::Overflow { term: k })?
                }
            };
            let t_abs = term.norm();

            if t_abs == 0.0 {
                zero_run += 1;
                terms_used += 1;
                // a long run of identically-zero terms means the algebraic
                // expansion has terminated
                if zero_run >= 50 {
                    row_omitted = Some(0.0);
                    break;
                }
                continue;
            }
            zero_run = 0;

            // term magnitudes carry an oscillating modulation on top of the
            // smooth envelope, so a single uptick is not yet the turn of the
            // divergent tail: stash climbing terms and only truncate once
            // the climb is sustained and well clear of the running minimum
            if t_abs > prev_seen && t_abs > min_added {
                prev_seen = t_abs;
                pending.push(term);
                if pending.len() >= 3 && (t_abs > 5.0 * min_added || pending.len() >= 8) {
                    row_omitted = Some(pending[0].norm());
                    pending.clear();
                    break 'row;
                }
                continue;
            }
            for p in pending.drain(..) {
                terms_used += 1;
                acc.add(p);
                sumsq += p.norm_sqr();
                min_added = min_added.min(p.norm());
            }
            terms_used += 1;
            acc.add(term);
            sumsq += t_abs * t_abs;
            prev_seen = t_abs;
            min_added = min_added.min(t_abs);

            let scale = acc.value().norm().clamp(ctl.underflow_floor, 1.0);
            if t_abs <= EPS * scale || t_abs < ctl.underflow_floor {
                row_omitted = Some(t_abs);
                break;
            }
        }
        match row_omitted {
            Some(t) => omitted = omitted.max(t),
            None => {
                if let Some(first) = pending.first() {
                    // budget ran out mid-climb: the climb is the omitted tail
                    omitted = omitted.max(first.norm());
                } else {
                    // ran out of terms while still decreasing
                    all_rows_ok = false;
                    omitted = omitted.max(prev_seen.min(f64::MAX));
                }
            }
        }
    }

    let value = acc.value();
    let noise = EPS * sumsq.sqrt();
    let abs_error_estimate = omitted + noise;
    let converged = all_rows_ok && abs_error_estimate <= ctl.tol * value.norm().max(1.0);
    Ok(SeriesResult {
        value,
        abs_error_estimate,
        terms_used,
        converged,
    })
}
