//! Quadrature primitives for the oracle layer: adaptive Gauss–Kronrod on
//! finite intervals, fixed Gauss–Legendre panels, and Wynn's epsilon
//! algorithm for accelerating alternating panel series.

use num_complex::Complex64;

use super::OracleError;

/// Tolerances and budgets for the quadrature oracles.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureControl {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: usize,
    /// Depth of the epsilon-algorithm table used on oscillatory tails.
    pub acceleration_order: usize,
}

impl Default for QuadratureControl {
    fn default() -> Self {
        QuadratureControl {
            abs_tol: 1e-11,
            rel_tol: 1e-11,
            max_subdivisions: 600,
            acceleration_order: 8,
        }
    }
}

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae).
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

/// One Gauss–Kronrod 7–15 application on `[a, b]`: returns the K15 value
/// and the |K15 − G7| error proxy.
fn gk15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> (Complex64, f64) {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut kron = Complex64::new(0.0, 0.0);
    let mut gauss = Complex64::new(0.0, 0.0);
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let (fl, fr) = (f(mid - half * x), f(mid + half * x));
        let pair = if x == 0.0 { fl } else { fl + fr };
        kron += w * pair;
        if i % 2 == 1 {
            // odd-indexed Kronrod abscissae are the embedded G7 nodes
            gauss += WG[i / 2] * pair;
        }
    }
    (kron * half, ((kron - gauss) * half).norm())
}

/// Globally adaptive Gauss–Kronrod integration of a complex integrand over
/// a finite interval.
pub fn adaptive_gk<F: Fn(f64) -> Complex64>(
    f: &F,
    a: f64,
    b: f64,
    qc: &QuadratureControl,
) -> Result<(Complex64, f64), OracleError> {
    struct Seg {
        a: f64,
        b: f64,
        val: Complex64,
        err: f64,
    }
    let (val, err) = gk15(f, a, b);
    let mut segs = vec![Seg { a, b, val, err }];
    for _ in 0..qc.max_subdivisions {
        let total: Complex64 = segs.iter().map(|s| s.val).sum();
        let total_err: f64 = segs.iter().map(|s| s.err).sum();
        if total_err <= qc.abs_tol.max(qc.rel_tol * total.norm()) {
            return Ok((total, total_err));
        }
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .expect("at least one segment");
        let Seg { a, b, .. } = segs.swap_remove(worst);
        let mid = 0.5 * (a + b);
        for (lo, hi) in [(a, mid), (mid, b)] {
            let (val, err) = gk15(f, lo, hi);
            segs.push(Seg {
                a: lo,
                b: hi,
                val,
                err,
            });
        }
    }
    let total_err: f64 = segs.iter().map(|s| s.err).sum();
    Err(OracleError::QuadratureFailure {
        reason: "subdivision budget exhausted",
        achieved: total_err,
    })
}

/// 15-point Gauss–Legendre nodes and weights on `[−1, 1]`.
pub(crate) fn gauss_legendre_15() -> (&'static [f64; 15], &'static [f64; 15]) {
    const NODES: [f64; 15] = [
        -0.987992518020485,
        -0.937273392400706,
        -0.848206583410427,
        -0.724417731360170,
        -0.570972172608539,
        -0.394151347077563,
        -0.201194093997435,
        0.0,
        0.201194093997435,
        0.394151347077563,
        0.570972172608539,
        0.724417731360170,
        0.848206583410427,
        0.937273392400706,
        0.987992518020485,
    ];
    const WEIGHTS: [f64; 15] = [
        0.030753241996117,
        0.070366047488108,
        0.107159220467172,
        0.139570677926154,
        0.166269205816994,
        0.186161000015562,
        0.198431485327112,
        0.202578241925561,
        0.198431485327112,
        0.186161000015562,
        0.166269205816994,
        0.139570677926154,
        0.107159220467172,
        0.070366047488108,
        0.030753241996117,
    ];
    (&NODES, &WEIGHTS)
}

/// Fixed 15-point Gauss–Legendre panel on `[a, b]`.
pub(crate) fn gl15<F: Fn(f64) -> Complex64>(f: &F, a: f64, b: f64) -> Complex64 {
    let (nodes, weights) = gauss_legendre_15();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut acc = Complex64::new(0.0, 0.0);
    for (&x, &w) in nodes.iter().zip(weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Wynn's epsilon algorithm on a sequence of partial sums; returns the
/// highest-order even-column estimate that stays finite.
pub(crate) fn wynn_epsilon(partials: &[Complex64]) -> Complex64 {
    let n = partials.len();
    let mut prev_col: Vec<Complex64> = vec![Complex64::new(0.0, 0.0); n + 1]; // ε_{-1} = 0
    let mut col: Vec<Complex64> = partials.to_vec(); // ε_0
    let mut best = *partials.last().expect("nonempty partial sums");
    let mut order = 0usize;
    while col.len() >= 2 {
        let mut next = Vec::with_capacity(col.len() - 1);
        for i in 0..col.len() - 1 {
            let diff = col[i + 1] - col[i];
            if diff.norm() < 1e-300 {
                next.clear();
                break;
            }
            next.push(prev_col[i + 1] + 1.0 / diff);
        }
        if next.is_empty() {
            break;
        }
        order += 1;
        if order % 2 == 0 {
            if let Some(last) = next.last() {
                if last.is_finite() {
                    best = *last;
                }
            }
        }
        prev_col = col;
        col = next;
    }
    best
}
