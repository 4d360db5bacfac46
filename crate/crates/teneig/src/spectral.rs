//! Dominant eigenvalue of an essentially nonnegative tensor by shifted,
//! perturbed power iteration.
//!
//! For an essentially nonnegative `A` the solver forms the positive tensor
//!
//! ```text
//! W = A + alpha * I + E,   alpha = max_i |A[i,...,i]| + 1,
//! ```
//!
//! where `E` holds `eps` in every entry, and runs a Collatz-style power
//! iteration on `W`: each step maps `x` to the sup-normalized `(m-1)`-th
//! root of `W x^{m-1}` and evaluates the ratio bounds
//!
//! ```text
//! F(x) = min_i (W x^{m-1})_i / x_i^{m-1},
//! G(x) = max_i (W x^{m-1})_i / x_i^{m-1},
//! ```
//!
//! which sandwich the positive eigenvalue of `W` at every iterate. The
//! iteration stops once `G - F < eps` and reports
//! `lambda = (F + G) / 2 - alpha` together with the final iterate. Because
//! `W` is entrywise positive the iteration converges for every essentially
//! nonnegative input, reducible ones included; the perturbation biases the
//! result by `O(eps)`.
//!
//! For a nonnegative tensor the dominant eigenvalue equals the spectral
//! radius, exposed as [`spectral_radius`].

use serde::Serialize;

use crate::error::{Result, TensorError};
use crate::tensor::{elementwise_power, DenseTensor, PositiveVector};

/// Default perturbation and stopping threshold.
pub const DEFAULT_EPS: f64 = 1e-9;
/// Default iteration cap.
pub const DEFAULT_MAX_ITER: usize = 1000;

/// Parameters of [`solve_dominant`].
#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    /// Perturbation added to every entry of the iteration tensor; also the
    /// stopping threshold unless `stop_eps` overrides it.
    pub eps: f64,
    /// Optional stopping threshold decoupled from the perturbation.
    pub stop_eps: Option<f64>,
    /// Maximum number of iterations before giving up.
    pub max_iter: usize,
    /// Starting iterate; all-ones when absent.
    pub x0: Option<PositiveVector>,
    /// Diagonal shift; `max_i |A[i,...,i]| + 1` when absent.
    pub shift_override: Option<f64>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            eps: DEFAULT_EPS,
            stop_eps: None,
            max_iter: DEFAULT_MAX_ITER,
            x0: None,
            shift_override: None,
        }
    }
}

impl SolverConfig {
    fn validate(&self, dim: usize) -> Result<()> {
        if self.eps <= 0.0 || !self.eps.is_finite() {
            return Err(TensorError::InvalidConfig(format!(
                "eps must be positive and finite, got {}",
                self.eps
            )));
        }
        if let Some(stop) = self.stop_eps {
            if stop <= 0.0 || !stop.is_finite() {
                return Err(TensorError::InvalidConfig(format!(
                    "stop_eps must be positive and finite, got {stop}"
                )));
            }
        }
        if self.max_iter == 0 {
            return Err(TensorError::InvalidConfig(
                "max_iter must be at least 1".into(),
            ));
        }
        if let Some(x0) = &self.x0 {
            if x0.len() != dim {
                return Err(TensorError::DimensionMismatch {
                    expected: dim,
                    found: x0.len(),
                });
            }
        }
        Ok(())
    }
}

/// One row of the iteration trace. Bounds and estimate are already shifted
/// back to the scale of the input tensor (`F - alpha`, `G - alpha`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IterationRecord {
    pub k: usize,
    /// `F(x^(k)) - alpha`, a lower bound for the dominant eigenvalue.
    pub lower: f64,
    /// `G(x^(k)) - alpha`, an upper bound.
    pub upper: f64,
    /// Midpoint estimate `(F + G) / 2 - alpha`.
    pub estimate: f64,
    /// `upper - lower`.
    pub gap: f64,
    /// `|| A x^{m-1} - estimate * x^{[m-1]} ||_inf` on the original tensor.
    pub residual: f64,
}

/// Outcome of [`solve_dominant`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenResult {
    /// Dominant eigenvalue estimate.
    pub lambda: f64,
    /// Final iterate, sup-normalized so its largest component is exactly 1.
    pub eigenvector: PositiveVector,
    /// Number of iterations performed (equals `trace.len()`).
    pub iterations: usize,
    /// Whether the gap dropped below the stopping threshold before the
    /// iteration cap.
    pub converged: bool,
    /// Per-iteration bounds and residuals.
    pub trace: Vec<IterationRecord>,
}

/// The ratio bounds `(F(x), G(x))` of `w` at a positive vector: minimum and
/// maximum over `i` of `(w x^{m-1})_i / x_i^{m-1}`. For nonnegative `w`
/// these sandwich its spectral radius.
pub fn collatz_bounds(w: &DenseTensor, x: &PositiveVector) -> Result<(f64, f64)> {
    let y = w.contract(x.as_slice())?;
    Ok(bounds_from_image(&y, x.as_slice(), w.order()))
}

fn bounds_from_image(y: &[f64], x: &[f64], order: usize) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for (yi, xi) in y.iter().zip(x) {
        let ratio = yi / xi.powi((order - 1) as i32);
        lo = lo.min(ratio);
        hi = hi.max(ratio);
    }
    (lo, hi)
}

/// One power step on an entrywise positive tensor: the sup-normalized
/// `(m-1)`-th root of `w x^{m-1}`. The returned iterate has largest
/// component exactly 1.
pub fn power_step(w: &DenseTensor, x: &PositiveVector) -> Result<PositiveVector> {
    let y = w.contract(x.as_slice())?;
    next_iterate(&y, w.order())
}

fn next_iterate(y: &[f64], order: usize) -> Result<PositiveVector> {
    if let Some(index) = y.iter().position(|v| *v <= 0.0 || v.is_nan()) {
        return Err(TensorError::NonPositiveIterate { index });
    }
    let mut root = elementwise_power(y, 1.0 / (order - 1) as f64)?;
    let max = root.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    for v in root.iter_mut() {
        *v /= max;
    }
    PositiveVector::new(root)
}

/// Runs the shifted, perturbed power iteration on an essentially
/// nonnegative tensor.
///
/// Inputs with a negative off-diagonal entry are rejected with the
/// offending (1-based) index tuple. Hitting the iteration cap is not an
/// error: the result carries `converged = false` and the full trace.
pub fn solve_dominant(a: &DenseTensor, cfg: &SolverConfig) -> Result<EigenResult> {
    if let Some((index, value)) = a.first_negative_off_diagonal() {
        return Err(TensorError::NotEssentiallyNonnegative { index, value });
    }
    cfg.validate(a.dim())?;

    let alpha = cfg.shift_override.unwrap_or_else(|| {
        a.diagonal().iter().fold(0.0f64, |m, d| m.max(d.abs())) + 1.0
    });
    let w = a.shift(alpha).perturb(cfg.eps)?;
    if let Some((index, value)) = w.first_negative_entry() {
        return Err(TensorError::ShiftTooSmall { index, value });
    }
    let stop_eps = cfg.stop_eps.unwrap_or(cfg.eps);
    let order = a.order();

    let mut x = cfg.x0.clone().unwrap_or_else(|| PositiveVector::ones(a.dim()));
    let mut y = w.contract(x.as_slice())?;
    let mut trace = Vec::new();
    let mut converged = false;

    for k in 1..=cfg.max_iter {
        x = next_iterate(&y, order)?;
        y = w.contract(x.as_slice())?;
        let (f, g) = bounds_from_image(&y, x.as_slice(), order);
        let estimate = 0.5 * (f + g) - alpha;
        trace.push(IterationRecord {
            k,
            lower: f - alpha,
            upper: g - alpha,
            estimate,
            gap: (g - alpha) - (f - alpha),
            residual: residual_norm(a, x.as_slice(), estimate)?,
        });
        if g - f < stop_eps {
            converged = true;
            break;
        }
    }

    let last = trace.last().expect("max_iter >= 1 guarantees one record");
    Ok(EigenResult {
        lambda: last.estimate,
        eigenvector: x,
        iterations: trace.len(),
        converged,
        trace,
    })
}

/// `|| A x^{m-1} - lambda * x^{[m-1]} ||_inf`.
pub fn residual_norm(a: &DenseTensor, x: &[f64], lambda: f64) -> Result<f64> {
    let image = a.contract(x)?;
    let power = elementwise_power(x, (a.order() - 1) as f64)?;
    Ok(image
        .iter()
        .zip(&power)
        .map(|(im, p)| (im - lambda * p).abs())
        .fold(0.0, f64::max))
}

/// Spectral radius of a nonnegative tensor, where it coincides with the
/// dominant eigenvalue. Rejects any negative entry.
pub fn spectral_radius(a: &DenseTensor, cfg: &SolverConfig) -> Result<f64> {
    if let Some((index, value)) = a.first_negative_entry() {
        return Err(TensorError::NegativeEntry { index, value });
    }
    Ok(solve_dominant(a, cfg)?.lambda)
}
