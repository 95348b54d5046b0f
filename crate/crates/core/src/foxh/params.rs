//! H-function parameter sets and their structural predicates.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One `(offset, slope)` parameter pair: an `(a_j, A_j)` upper entry or a
/// `(b_j, B_j)` lower entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HPair {
    pub offset: Complex64,
    pub slope: f64,
}

impl HPair {
    pub fn new(offset_re: f64, offset_im: f64, slope: f64) -> Self {
        HPair {
            offset: Complex64::new(offset_re, offset_im),
            slope,
        }
    }

    /// Real-offset pair, the common case.
    pub fn real(offset: f64, slope: f64) -> Self {
        HPair::new(offset, 0.0, slope)
    }
}

/// Parameter set of `H^{m,n}_{p,q}[z | (a_p, A_p); (b_q, B_q)]`.
///
/// `p = upper.len()`, `q = lower.len()`. The slopes of the first `m` lower
/// pairs must be strictly positive (they define the series pole family
/// `s_hk = (b_h + k)/B_h`); elsewhere signed slopes are accepted — the
/// Laplace and fixed-energy kernel sets carry a `(0, −1/α)` upper pair, and
/// a negative slope only changes the argument handed to a gamma factor.
///
/// `m = 0` is representable so that [`HParams::invert`] is total; the series
/// evaluator refuses such sets (they have no pole family to sum over).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "HParamsRepr", into = "HParamsRepr")]
pub struct HParams {
    m: usize,
    n: usize,
    upper: Vec<HPair>,
    lower: Vec<HPair>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum HParamsError {
    /// `n > p` or `m > q`.
    CountsOutOfRange {
        m: usize,
        n: usize,
        p: usize,
        q: usize,
    },
    /// A lower-row slope `B_j` with `j ≤ m` is not strictly positive.
    NonPositivePoleSlope { index: usize, slope: f64 },
    /// A slope is zero or non-finite, or an offset is non-finite.
    BadEntry { row: &'static str, index: usize },
}

impl std::fmt::Display for HParamsError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HParamsError::CountsOutOfRange { m, n, p, q } => {
                write!(f, "H-function orders out of range: m={m}, n={n}, p={p}, q={q}")
            }
            HParamsError::NonPositivePoleSlope { index, slope } => write!(
                f,
                "lower slope B_{} = {slope} must be > 0 (defines the series pole family)",
                index + 1
            ),
            HParamsError::BadEntry { row, index } => {
                write!(f, "non-finite or zero-slope {row} parameter at index {index}")
            }
        }
    }
}

impl std::error::Error for HParamsError {}

impl HParams {
    pub fn new(
        m: usize,
        n: usize,
        upper: Vec<HPair>,
        lower: Vec<HPair>,
    ) -> Result<Self, HParamsError> {
        if n > upper.len() || m > lower.len() {
            return Err(HParamsError::CountsOutOfRange {
                m,
                n,
                p: upper.len(),
                q: lower.len(),
            });
        }
        for (row, list) in [("upper", &upper), ("lower", &lower)] {
            for (i, pair) in list.iter().enumerate() {
                if pair.slope == 0.0 || !pair.slope.is_finite() || !pair.offset.is_finite() {
                    return Err(HParamsError::BadEntry { row, index: i });
                }
            }
        }
        for (i, pair) in lower.iter().take(m).enumerate() {
            if pair.slope <= 0.0 {
                return Err(HParamsError::NonPositivePoleSlope {
                    index: i,
                    slope: pair.slope,
                });
            }
        }
        Ok(HParams { m, n, upper, lower })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    pub fn upper(&self) -> &[HPair] {
        &self.upper
    }

    pub fn lower(&self) -> &[HPair] {
        &self.lower
    }

    /// `μ = Σ B_j − Σ A_j`, the series convergence exponent: the power
    /// series represents the function for all `z ≠ 0` when `μ > 0`.
    pub fn mu(&self) -> f64 {
        let sb: f64 = self.lower.iter().map(|p| p.slope).sum();
        let sa: f64 = self.upper.iter().map(|p| p.slope).sum();
        sb - sa
    }

    /// `β = Π A_j^{A_j} · Π B_j^{−B_j}`; `1/β` is the convergence radius in
    /// the marginal `μ = 0` case. Meaningful for positive-slope sets.
    pub fn beta(&self) -> f64 {
        let pa: f64 = self.upper.iter().map(|p| p.slope.powf(p.slope)).product();
        let pb: f64 = self.lower.iter().map(|p| p.slope.powf(-p.slope)).product();
        pa * pb
    }

    /// Checks the contour-existence condition: no pole of the first-m lower
    /// gammas may coincide with a pole of the first-n upper gammas, i.e.
    /// `A_j (b_h + ν) ≠ B_h (a_j − λ − 1)` for all `ν, λ ≤ window`,
    /// `h ≤ m`, `j ≤ n`, tested to absolute tolerance 1e−12.
    pub fn check_poles_separated(&self, window: usize) -> bool {
        for h in 0..self.m {
            let (bh, hb) = (self.lower[h].offset, self.lower[h].slope);
            for j in 0..self.n {
                let (aj, ja) = (self.upper[j].offset, self.upper[j].slope);
                for nu in 0..=window {
                    let lhs = ja * (bh + nu as f64);
                    for lam in 0..=window {
                        let rhs = hb * (aj - (lam as f64) - 1.0);
                        if (lhs - rhs).norm() <= 1e-12 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Simple-pole condition of the series pole family: for `m > 1`,
    /// `B_h (b_j + λ) ≠ B_j (b_h + ν)` for `j ≠ h` within the window.
    pub(crate) fn series_poles_simple(&self, window: usize) -> bool {
        for h in 0..self.m {
            for j in 0..self.m {
                if j == h {
                    continue;
                }
                let (bh, hb) = (self.lower[h].offset, self.lower[h].slope);
                let (bj, jb) = (self.lower[j].offset, self.lower[j].slope);
                for nu in 0..=window {
                    let lhs = jb * (bh + nu as f64);
                    for lam in 0..=window {
                        let rhs = hb * (bj + lam as f64);
                        if (lhs - rhs).norm() <= 1e-12 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// True iff every slope equals 1, in which case the set describes a
    /// Meijer G-function.
    pub fn is_meijer_g(&self) -> bool {
        self.upper
            .iter()
            .chain(self.lower.iter())
            .all(|p| p.slope == 1.0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("HParams serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Wire form: `{"m":1,"n":1,"upper":[[re,im,slope],...],"lower":[...]}`.
#[derive(Serialize, Deserialize)]
struct HParamsRepr {
    m: usize,
    n: usize,
    upper: Vec<[f64; 3]>,
    lower: Vec<[f64; 3]>,
}

impl From<HParams> for HParamsRepr {
    fn from(p: HParams) -> Self {
        let conv = |v: &[HPair]| {
            v.iter()
                .map(|e| [e.offset.re, e.offset.im, e.slope])
                .collect()
        };
        HParamsRepr {
            m: p.m,
            n: p.n,
            upper: conv(&p.upper),
            lower: conv(&p.lower),
        }
    }
}

impl TryFrom<HParamsRepr> for HParams {
    type Error = HParamsError;

    fn try_from(r: HParamsRepr) -> Result<Self, Self::Error> {
        let conv = |v: Vec<[f64; 3]>| {
            v.into_iter()
                .map(|[re, im, sl]| HPair::new(re, im, sl))
                .collect()
        };
        HParams::new(r.m, r.n, conv(r.upper), conv(r.lower))
    }
}
