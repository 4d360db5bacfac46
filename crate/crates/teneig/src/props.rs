//! Numerical verification of order-theoretic and convexity properties of
//! the dominant eigenvalue.
//!
//! Each checker measures how far a family of inequalities is from holding
//! on concrete inputs and folds the worst case into a [`PropertyReport`].
//! The properties covered:
//!
//! * minimax sandwich: `F(x) <= rho(A) <= G(x)` for nonnegative `A` and
//!   any positive `x`;
//! * monotonicity: `A <= B` entrywise implies `rho(A) <= rho(B)`, strictly
//!   when both are irreducible and differ;
//! * convexity of the dominant eigenvalue in the diagonal, with equality
//!   on a segment exactly when the two diagonal endpoints differ by a
//!   multiple of the unit tensor;
//! * convexity over symmetric essentially nonnegative tensors;
//! * log convexity: `rho(G(t)) <= rho(A)^{1-t} rho(B)^t` for the entrywise
//!   geometric path `G(t)`, with equality exactly when `B` is a diagonal
//!   similarity scaling of `A`.
//!
//! Inequalities are checked with relative slack one order above the solver
//! stopping tolerance, since each side carries independent solver error.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Result, TensorError};
use crate::spectral::{collatz_bounds, solve_dominant, SolverConfig};
use crate::structure::is_irreducible;
use crate::tensor::{DenseTensor, DiagonalTensor, PositiveVector, TensorShape};

/// Relative slack for the minimax and monotonicity inequalities.
pub const ORDER_TOL_REL: f64 = 1e-8;
/// Relative slack for the convexity and log-convexity inequalities.
pub const CONVEXITY_TOL_REL: f64 = 1e-7;
/// Margin below which a strict inequality counts as violated.
pub const STRICT_MARGIN: f64 = 1e-10;
/// Threshold for detecting the diagonal equality case.
pub const EQUALITY_DETECTION_TOL: f64 = 1e-9;

const GENERATION_ATTEMPTS: usize = 1000;

// Checkers run every solve to convergence; strongly diagonal instances can
// need far more steps than the solver's own default cap.
fn checker_config() -> SolverConfig {
    SolverConfig {
        max_iter: 50_000,
        ..SolverConfig::default()
    }
}

/// The pair realizing the log-convexity equality case: `apply` builds
/// `B[i1..im] = sigma * A[i1..im] * d_{i1}^{-(m-1)} * d_{i2} ... d_{im}`,
/// which multiplies the dominant eigenvalue by `sigma`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingCertificate {
    pub sigma: f64,
    pub d: PositiveVector,
}

impl ScalingCertificate {
    pub fn new(sigma: f64, d: PositiveVector) -> Result<Self> {
        if sigma <= 0.0 || !sigma.is_finite() {
            return Err(TensorError::NonPositiveScale(sigma));
        }
        Ok(Self { sigma, d })
    }

    pub fn apply(&self, a: &DenseTensor) -> Result<DenseTensor> {
        a.apply_diagonal_scaling(self.sigma, &self.d)
    }
}

/// Aggregated outcome of a property check. `max_violation` and `tolerance`
/// always describe the sample with the worst margin, so `pass` holds
/// exactly when `max_violation <= tolerance`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub samples: usize,
    pub max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub witnesses: Vec<String>,
    pub note: Option<String>,
}

impl PropertyReport {
    /// Combines per-instance reports of one suite, keeping the worst
    /// margin and every witness.
    pub fn merge<I: IntoIterator<Item = PropertyReport>>(name: &str, reports: I) -> PropertyReport {
        let mut merged = PropertyReport::from_outcomes(name, 0, Vec::new(), None);
        let mut absorbed_any = false;
        for report in reports {
            merged.samples += report.samples;
            merged.pass &= report.pass;
            if !absorbed_any
                || report.max_violation - report.tolerance > merged.max_violation - merged.tolerance
            {
                merged.max_violation = report.max_violation;
                merged.tolerance = report.tolerance;
            }
            absorbed_any = true;
            merged.witnesses.extend(report.witnesses);
            if merged.note.is_none() {
                merged.note = report.note;
            }
        }
        merged
    }

    fn from_outcomes(
        name: &str,
        samples: usize,
        outcomes: Vec<Outcome>,
        note: Option<String>,
    ) -> PropertyReport {
        let mut max_violation = f64::NEG_INFINITY;
        let mut tolerance = 0.0;
        let mut pass = true;
        let mut witnesses = Vec::new();
        for outcome in &outcomes {
            if outcome.violation - outcome.tolerance > max_violation - tolerance {
                max_violation = outcome.violation;
                tolerance = outcome.tolerance;
            }
            if outcome.violation > outcome.tolerance {
                pass = false;
                witnesses.push(outcome.description.clone());
            }
        }
        if outcomes.is_empty() {
            max_violation = 0.0;
        }
        PropertyReport {
            name: name.to_string(),
            samples,
            max_violation,
            tolerance,
            pass,
            witnesses,
            note,
        }
    }
}

struct Outcome {
    violation: f64,
    tolerance: f64,
    description: String,
}

/// Default grid `{0, 0.1, ..., 1}` used by the convexity suites.
pub fn default_t_grid() -> Vec<f64> {
    (0..=10).map(|i| f64::from(i) / 10.0).collect()
}

fn validate_t_grid(t_grid: &[f64]) -> Result<()> {
    for &t in t_grid {
        if !(0.0..=1.0).contains(&t) {
            return Err(TensorError::InvalidConfig(format!(
                "grid point {t} lies outside [0, 1]"
            )));
        }
    }
    Ok(())
}

/// Solves for the dominant eigenvalue, recording a failed outcome when the
/// iteration cap is reached so that a report built from `outcomes` cannot
/// silently rely on an unconverged value.
fn dominant(
    a: &DenseTensor,
    cfg: &SolverConfig,
    outcomes: &mut Vec<Outcome>,
    what: &str,
) -> Result<f64> {
    let result = solve_dominant(a, cfg)?;
    if !result.converged {
        let gap = result.trace.last().map(|r| r.gap).unwrap_or(f64::MAX);
        outcomes.push(Outcome {
            violation: gap,
            tolerance: 0.0,
            description: format!("{what}: solver hit the iteration cap with gap {gap:.3e}"),
        });
    }
    Ok(result.lambda)
}

fn require_nonnegative(a: &DenseTensor) -> Result<()> {
    if let Some((index, value)) = a.first_negative_entry() {
        return Err(TensorError::NegativeEntry { index, value });
    }
    Ok(())
}

fn require_same_shape(a: TensorShape, b: TensorShape) -> Result<()> {
    if a != b {
        return Err(TensorError::ShapeMismatch {
            left_order: a.order(),
            left_dim: a.dim(),
            right_order: b.order(),
            right_dim: b.dim(),
        });
    }
    Ok(())
}

/// Checks `F(x) <= rho(A) <= G(x)` for `trials` random positive vectors.
pub fn check_minimax(a: &DenseTensor, trials: usize, rng: &mut impl Rng) -> Result<PropertyReport> {
    require_nonnegative(a)?;
    let cfg = checker_config();
    let mut outcomes = Vec::new();
    let rho = dominant(a, &cfg, &mut outcomes, "rho(A)")?;
    let tolerance = ORDER_TOL_REL * rho.abs().max(1.0);
    for trial in 0..trials {
        let x = random_positive_vector(a.dim(), rng);
        let (f, g) = collatz_bounds(a, &x)?;
        let violation = (f - rho).max(rho - g);
        outcomes.push(Outcome {
            violation,
            tolerance,
            description: format!(
                "trial {trial}: rho {rho:.6e} outside [{f:.6e}, {g:.6e}] at x = {:?}",
                x.as_slice()
            ),
        });
    }
    Ok(PropertyReport::from_outcomes("minimax", trials, outcomes, None))
}

/// Checks `rho(A) <= rho(B)` for `A <= B` entrywise, and strict inequality
/// when both are irreducible and the tensors differ.
pub fn check_monotonicity(a: &DenseTensor, b: &DenseTensor) -> Result<PropertyReport> {
    require_same_shape(a.shape(), b.shape())?;
    require_nonnegative(a)?;
    require_nonnegative(b)?;
    if let Some(pos) = a
        .values()
        .iter()
        .zip(b.values())
        .position(|(av, bv)| av > bv)
    {
        return Err(TensorError::NotEntrywiseLeq {
            index: a.shape().index_tuple(pos).iter().map(|i| i + 1).collect(),
        });
    }

    let cfg = checker_config();
    let mut outcomes = Vec::new();
    let rho_a = dominant(a, &cfg, &mut outcomes, "rho(A)")?;
    let rho_b = dominant(b, &cfg, &mut outcomes, "rho(B)")?;
    outcomes.push(Outcome {
        violation: rho_a - rho_b,
        tolerance: ORDER_TOL_REL,
        description: format!("rho(A) = {rho_a:.9e} exceeds rho(B) = {rho_b:.9e}"),
    });

    let mut note = None;
    if a == b {
        note = Some("tensors are identical; strictness not asserted".to_string());
    } else if is_irreducible(a).irreducible && is_irreducible(b).irreducible {
        outcomes.push(Outcome {
            violation: STRICT_MARGIN - (rho_b - rho_a),
            tolerance: 0.0,
            description: format!(
                "strict increase missing: rho(B) - rho(A) = {:.3e}",
                rho_b - rho_a
            ),
        });
    } else {
        note = Some("a tensor is reducible; strictness not asserted".to_string());
    }
    Ok(PropertyReport::from_outcomes("monotone", 1, outcomes, note))
}

fn mixed_diagonal(c: &DiagonalTensor, d: &DiagonalTensor, t: f64) -> DiagonalTensor {
    let diag: Vec<f64> = c
        .diag()
        .iter()
        .zip(d.diag())
        .map(|(cv, dv)| t * cv + (1.0 - t) * dv)
        .collect();
    DiagonalTensor::new(c.shape(), diag).expect("shapes already checked")
}

fn diagonal_segment_points(
    a: &DenseTensor,
    c: &DiagonalTensor,
    d: &DiagonalTensor,
    t_grid: &[f64],
    outcomes: &mut Vec<Outcome>,
) -> Result<Vec<(f64, f64, f64, f64)>> {
    require_same_shape(a.shape(), c.shape())?;
    require_same_shape(a.shape(), d.shape())?;
    validate_t_grid(t_grid)?;
    let cfg = checker_config();
    let lam_c = dominant(&a.add_diagonal(c)?, &cfg, outcomes, "lambda(A+C)")?;
    let lam_d = dominant(&a.add_diagonal(d)?, &cfg, outcomes, "lambda(A+D)")?;
    let mut points = Vec::with_capacity(t_grid.len());
    for &t in t_grid {
        let mid = a.add_diagonal(&mixed_diagonal(c, d, t))?;
        let lam_mid = dominant(&mid, &cfg, outcomes, "lambda(segment)")?;
        let bound = t * lam_c + (1.0 - t) * lam_d;
        let scale = lam_c.abs().max(lam_d.abs()).max(lam_mid.abs()).max(1.0);
        points.push((t, lam_mid, bound, scale));
    }
    Ok(points)
}

/// Checks convexity of the dominant eigenvalue along the diagonal segment
/// `A + tC + (1-t)D` against the chord `t lambda(A+C) + (1-t) lambda(A+D)`.
/// Reducible `A` is allowed; the report carries a note in that case.
pub fn check_diagonal_convexity(
    a: &DenseTensor,
    c: &DiagonalTensor,
    d: &DiagonalTensor,
    t_grid: &[f64],
) -> Result<PropertyReport> {
    let mut outcomes = Vec::new();
    let points = diagonal_segment_points(a, c, d, t_grid, &mut outcomes)?;
    for (t, lam_mid, bound, scale) in points {
        outcomes.push(Outcome {
            violation: lam_mid - bound,
            tolerance: CONVEXITY_TOL_REL * scale,
            description: format!("t = {t}: lambda {lam_mid:.9e} above chord {bound:.9e}"),
        });
    }
    let note = (!is_irreducible(a).irreducible)
        .then(|| "input tensor is reducible; the bound extends by continuity".to_string());
    Ok(PropertyReport::from_outcomes(
        "convexity",
        t_grid.len(),
        outcomes,
        note,
    ))
}

/// Smallest chord slack `t lambda(A+C) + (1-t) lambda(A+D) - lambda(mid)`
/// over interior grid points. Values below [`EQUALITY_DETECTION_TOL`] flag
/// the equality case of diagonal convexity, which occurs exactly when
/// `D - C` is a scalar multiple of the unit tensor.
pub fn diagonal_convexity_slack(
    a: &DenseTensor,
    c: &DiagonalTensor,
    d: &DiagonalTensor,
    t_grid: &[f64],
) -> Result<f64> {
    let mut outcomes = Vec::new();
    let points = diagonal_segment_points(a, c, d, t_grid, &mut outcomes)?;
    Ok(points
        .iter()
        .filter(|(t, ..)| *t > 0.0 && *t < 1.0)
        .map(|(_, lam_mid, bound, _)| bound - lam_mid)
        .fold(f64::INFINITY, f64::min))
}

/// Max-norm distance of `D - C` from the nearest scalar multiple of the
/// unit tensor, using the mean diagonal difference as the multiple.
pub fn unit_shift_distance(c: &DiagonalTensor, d: &DiagonalTensor) -> Result<f64> {
    require_same_shape(c.shape(), d.shape())?;
    let diffs: Vec<f64> = d.diag().iter().zip(c.diag()).map(|(dv, cv)| dv - cv).collect();
    let gamma = diffs.iter().sum::<f64>() / diffs.len() as f64;
    Ok(diffs
        .iter()
        .map(|v| (v - gamma).abs())
        .fold(0.0, f64::max))
}

/// Checks convexity over the cone of symmetric essentially nonnegative
/// tensors: `lambda(tA + (1-t)B) <= t lambda(A) + (1-t) lambda(B)`.
pub fn check_symmetric_convexity(
    a: &DenseTensor,
    b: &DenseTensor,
    t_grid: &[f64],
) -> Result<PropertyReport> {
    require_same_shape(a.shape(), b.shape())?;
    validate_t_grid(t_grid)?;
    for tensor in [a, b] {
        if let Some(index) = tensor.first_asymmetric_entry() {
            return Err(TensorError::NotSymmetric { index });
        }
    }
    let cfg = checker_config();
    let mut outcomes = Vec::new();
    let lam_a = dominant(a, &cfg, &mut outcomes, "lambda(A)")?;
    let lam_b = dominant(b, &cfg, &mut outcomes, "lambda(B)")?;
    for &t in t_grid {
        let mix = a.scale(t).add(&b.scale(1.0 - t))?;
        let lam_mix = dominant(&mix, &cfg, &mut outcomes, "lambda(mixture)")?;
        let bound = t * lam_a + (1.0 - t) * lam_b;
        let scale = lam_a.abs().max(lam_b.abs()).max(lam_mix.abs()).max(1.0);
        outcomes.push(Outcome {
            violation: lam_mix - bound,
            tolerance: CONVEXITY_TOL_REL * scale,
            description: format!("t = {t}: lambda {lam_mix:.9e} above chord {bound:.9e}"),
        });
    }
    Ok(PropertyReport::from_outcomes(
        "symmetric-convexity",
        t_grid.len(),
        outcomes,
        None,
    ))
}

/// Entrywise geometric path `G(t) = (A^{1-t} B^t)`. Requires identical
/// zero patterns so every entry is either identically zero or positive
/// along the path.
fn geometric_path(a: &DenseTensor, b: &DenseTensor, t: f64) -> DenseTensor {
    let values: Vec<f64> = a
        .values()
        .iter()
        .zip(b.values())
        .map(|(&av, &bv)| {
            if av == 0.0 {
                0.0
            } else {
                av.powf(1.0 - t) * bv.powf(t)
            }
        })
        .collect();
    DenseTensor::from_values(a.shape(), values).expect("same shape as input")
}

/// Checks log convexity along the entrywise geometric path:
/// `rho(G(t)) <= rho(A)^{1-t} rho(B)^t`.
pub fn check_log_convexity(
    a: &DenseTensor,
    b: &DenseTensor,
    t_grid: &[f64],
) -> Result<PropertyReport> {
    check_log_convexity_with_path(a, b, t_grid, None::<fn(f64) -> Result<DenseTensor>>)
}

/// As [`check_log_convexity`], additionally checking the chain inequality
/// `rho(F(t)) <= rho(G(t))` for a caller-supplied path of tensors whose
/// entries are log convex in `t`. Omitting the path takes `F = G`, making
/// the chain inequality an equality.
pub fn check_log_convexity_with_path<F>(
    a: &DenseTensor,
    b: &DenseTensor,
    t_grid: &[f64],
    path: Option<F>,
) -> Result<PropertyReport>
where
    F: Fn(f64) -> Result<DenseTensor>,
{
    require_same_shape(a.shape(), b.shape())?;
    validate_t_grid(t_grid)?;
    require_nonnegative(a)?;
    require_nonnegative(b)?;
    if let Some(pos) = a
        .values()
        .iter()
        .zip(b.values())
        .position(|(av, bv)| (*av == 0.0) != (*bv == 0.0))
    {
        return Err(TensorError::ZeroPatternMismatch {
            index: a.shape().index_tuple(pos).iter().map(|i| i + 1).collect(),
        });
    }

    let cfg = checker_config();
    let mut outcomes = Vec::new();
    let rho_a = dominant(a, &cfg, &mut outcomes, "rho(A)")?;
    let rho_b = dominant(b, &cfg, &mut outcomes, "rho(B)")?;
    for &t in t_grid {
        let g = geometric_path(a, b, t);
        let rho_g = dominant(&g, &cfg, &mut outcomes, "rho(G(t))")?;
        let bound = rho_a.powf(1.0 - t) * rho_b.powf(t);
        outcomes.push(Outcome {
            violation: rho_g - bound,
            tolerance: CONVEXITY_TOL_REL * bound.abs().max(1.0),
            description: format!("t = {t}: rho(G) {rho_g:.9e} above {bound:.9e}"),
        });
        if let Some(path) = &path {
            let f_t = path(t)?;
            require_same_shape(a.shape(), f_t.shape())?;
            let rho_f = dominant(&f_t, &cfg, &mut outcomes, "rho(F(t))")?;
            outcomes.push(Outcome {
                violation: rho_f - rho_g,
                tolerance: CONVEXITY_TOL_REL * rho_g.abs().max(1.0),
                description: format!("t = {t}: rho(F) {rho_f:.9e} above rho(G) {rho_g:.9e}"),
            });
        }
    }
    Ok(PropertyReport::from_outcomes(
        "logconvexity",
        t_grid.len(),
        outcomes,
        None,
    ))
}

/// Shape of random tensor to draw from [`random_tensor`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TensorProfile {
    Positive,
    NonnegativeIrreducible,
    EssentiallyNonnegative,
    SymmetricEssentiallyNonnegative,
}

impl fmt::Display for TensorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TensorProfile::Positive => "positive",
            TensorProfile::NonnegativeIrreducible => "nonnegative-irreducible",
            TensorProfile::EssentiallyNonnegative => "essentially-nonnegative",
            TensorProfile::SymmetricEssentiallyNonnegative => "symmetric-essentially-nonnegative",
        };
        f.write_str(name)
    }
}

fn positive_entry(rng: &mut impl Rng) -> f64 {
    rng.random_range(0.1..1.1)
}

/// Uniform positive vector with components in `[0.1, 1.1)`.
pub fn random_positive_vector(n: usize, rng: &mut impl Rng) -> PositiveVector {
    PositiveVector::new((0..n).map(|_| positive_entry(rng)).collect())
        .expect("entries drawn positive")
}

/// Draws a tensor satisfying `profile`, rejection-sampling where the
/// profile demands irreducibility. Reproducible for a fixed RNG state.
pub fn random_tensor(
    shape: TensorShape,
    profile: TensorProfile,
    rng: &mut impl Rng,
) -> Result<DenseTensor> {
    for _ in 0..GENERATION_ATTEMPTS {
        let candidate = match profile {
            TensorProfile::Positive => {
                let values = (0..shape.len()).map(|_| positive_entry(rng)).collect();
                DenseTensor::from_values(shape, values)?
            }
            TensorProfile::NonnegativeIrreducible => {
                let values = (0..shape.len())
                    .map(|_| {
                        if rng.random_bool(0.5) {
                            0.0
                        } else {
                            positive_entry(rng)
                        }
                    })
                    .collect();
                DenseTensor::from_values(shape, values)?
            }
            TensorProfile::EssentiallyNonnegative => essentially_nonnegative(shape, rng)?,
            TensorProfile::SymmetricEssentiallyNonnegative => {
                symmetrize(&essentially_nonnegative(shape, rng)?)
            }
        };
        let ok = match profile {
            TensorProfile::NonnegativeIrreducible => is_irreducible(&candidate).irreducible,
            _ => true,
        };
        if ok {
            return Ok(candidate);
        }
    }
    Err(TensorError::ProfileUnsatisfiable {
        profile: profile.to_string(),
        attempts: GENERATION_ATTEMPTS,
    })
}

fn essentially_nonnegative(shape: TensorShape, rng: &mut impl Rng) -> Result<DenseTensor> {
    let mut values = Vec::with_capacity(shape.len());
    for pos in 0..shape.len() {
        let tuple = shape.index_tuple(pos);
        let diagonal = tuple.iter().all(|&i| i == tuple[0]);
        let v = if diagonal {
            rng.random_range(-1.0..1.0)
        } else if rng.random_bool(0.4) {
            0.0
        } else {
            positive_entry(rng)
        };
        values.push(v);
    }
    DenseTensor::from_values(shape, values)
}

/// Orbit-averages entries over all index permutations. Off-diagonal
/// nonnegativity survives averaging and the diagonal is untouched.
fn symmetrize(a: &DenseTensor) -> DenseTensor {
    let shape = a.shape();
    let mut sums = vec![0.0; shape.len()];
    let mut counts = vec![0usize; shape.len()];
    for (pos, &v) in a.values().iter().enumerate() {
        let mut tuple = shape.index_tuple(pos);
        tuple.sort_unstable();
        let canon = shape.linear_index(&tuple).expect("tuple in range");
        sums[canon] += v;
        counts[canon] += 1;
    }
    let values = (0..shape.len())
        .map(|pos| {
            let mut tuple = shape.index_tuple(pos);
            tuple.sort_unstable();
            let canon = shape.linear_index(&tuple).expect("tuple in range");
            sums[canon] / counts[canon] as f64
        })
        .collect();
    DenseTensor::from_values(shape, values).expect("same shape")
}

/// Draws two irreducible nonnegative tensors sharing one zero pattern,
/// suitable for the log-convexity checker.
pub fn random_same_pattern_pair(
    shape: TensorShape,
    rng: &mut impl Rng,
) -> Result<(DenseTensor, DenseTensor)> {
    for _ in 0..GENERATION_ATTEMPTS {
        let pattern: Vec<bool> = (0..shape.len()).map(|_| rng.random_bool(0.6)).collect();
        let indicator = DenseTensor::from_values(
            shape,
            pattern.iter().map(|&p| if p { 1.0 } else { 0.0 }).collect(),
        )?;
        if !is_irreducible(&indicator).irreducible {
            continue;
        }
        let draw = |rng: &mut dyn FnMut() -> f64| -> Result<DenseTensor> {
            DenseTensor::from_values(
                shape,
                pattern.iter().map(|&p| if p { rng() } else { 0.0 }).collect(),
            )
        };
        let a = draw(&mut || positive_entry(rng))?;
        let b = draw(&mut || positive_entry(rng))?;
        return Ok((a, b));
    }
    Err(TensorError::ProfileUnsatisfiable {
        profile: "same-pattern-pair".to_string(),
        attempts: GENERATION_ATTEMPTS,
    })
}

/// The named verification suites exposed by the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Minimax,
    Monotone,
    Convexity,
    SymmetricConvexity,
    LogConvexity,
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::Minimax => "minimax",
            Suite::Monotone => "monotone",
            Suite::Convexity => "convexity",
            Suite::SymmetricConvexity => "symmetric-convexity",
            Suite::LogConvexity => "logconvexity",
        };
        f.write_str(name)
    }
}

/// Runs one suite on `samples` seeded random instances and merges the
/// per-instance reports. Identical arguments produce identical reports.
pub fn run_suite(
    suite: Suite,
    shape: TensorShape,
    samples: usize,
    seed: u64,
) -> Result<PropertyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t_grid = default_t_grid();
    let mut reports = Vec::with_capacity(samples);
    for sample in 0..samples {
        let mut report = match suite {
            Suite::Minimax => {
                let a = random_tensor(shape, TensorProfile::NonnegativeIrreducible, &mut rng)?;
                check_minimax(&a, 1, &mut rng)?
            }
            Suite::Monotone => {
                let a = random_tensor(shape, TensorProfile::NonnegativeIrreducible, &mut rng)?;
                let bump = rng.random_range(0.05..0.5);
                let b = a.perturb(bump)?;
                check_monotonicity(&a, &b)?
            }
            Suite::Convexity => {
                let a = random_tensor(shape, TensorProfile::EssentiallyNonnegative, &mut rng)?;
                let c = random_diagonal(shape, &mut rng);
                let d = random_diagonal(shape, &mut rng);
                check_diagonal_convexity(&a, &c, &d, &t_grid)?
            }
            Suite::SymmetricConvexity => {
                let a = random_tensor(
                    shape,
                    TensorProfile::SymmetricEssentiallyNonnegative,
                    &mut rng,
                )?;
                let b = random_tensor(
                    shape,
                    TensorProfile::SymmetricEssentiallyNonnegative,
                    &mut rng,
                )?;
                check_symmetric_convexity(&a, &b, &t_grid)?
            }
            Suite::LogConvexity => {
                let (a, b) = random_same_pattern_pair(shape, &mut rng)?;
                check_log_convexity(&a, &b, &t_grid)?
            }
        };
        for witness in report.witnesses.iter_mut() {
            *witness = format!("seed {seed} sample {sample}: {witness}");
        }
        reports.push(report);
    }
    Ok(PropertyReport::merge(&suite.to_string(), reports))
}

fn random_diagonal(shape: TensorShape, rng: &mut impl Rng) -> DiagonalTensor {
    let diag = (0..shape.dim()).map(|_| rng.random_range(0.0..1.5)).collect();
    DiagonalTensor::new(shape, diag).expect("matching length")
}
