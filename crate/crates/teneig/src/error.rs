//! Error type shared by all tensor operations.
//!
//! Index tuples carried by error variants are 1-based, matching the
//! convention used by every external format and report in this crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, TensorError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TensorError {
    #[error("tensor order must be at least 2, got {0}")]
    InvalidOrder(usize),

    #[error("tensor dimension must be at least 1, got {0}")]
    InvalidDim(usize),

    #[error("entry count overflows for order {order} dimension {dim}")]
    ShapeTooLarge { order: usize, dim: usize },

    #[error("expected {expected} values for this shape, got {found}")]
    ValueCountMismatch { expected: usize, found: usize },

    #[error("non-finite entry {value} at index {index:?}")]
    NonFiniteEntry { index: Vec<usize>, value: f64 },

    #[error("vector length {found} does not match tensor dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("tensor shapes differ: order {left_order} dim {left_dim} vs order {right_order} dim {right_dim}")]
    ShapeMismatch {
        left_order: usize,
        left_dim: usize,
        right_order: usize,
        right_dim: usize,
    },

    #[error("component {index} is not strictly positive: {value}")]
    NotPositive { index: usize, value: f64 },

    #[error("negative base {base} with fractional exponent {exponent}")]
    NegativeBase { base: f64, exponent: f64 },

    #[error("perturbation must be nonnegative, got {0}")]
    NegativePerturbation(f64),

    #[error("scaling factor must be positive, got {0}")]
    NonPositiveScale(f64),

    #[error("off-diagonal entry at {index:?} is negative: {value}")]
    NotEssentiallyNonnegative { index: Vec<usize>, value: f64 },

    #[error("entry at {index:?} is negative: {value}")]
    NegativeEntry { index: Vec<usize>, value: f64 },

    #[error("shifted tensor has a negative entry at {index:?}; the shift override is too small")]
    ShiftTooSmall { index: Vec<usize>, value: f64 },

    #[error("power iterate has a nonpositive component at position {index}")]
    NonPositiveIterate { index: usize },

    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),

    #[error("left tensor exceeds right tensor at {index:?}")]
    NotEntrywiseLeq { index: Vec<usize> },

    #[error("tensor is not symmetric: entries differ at {index:?}")]
    NotSymmetric { index: Vec<usize> },

    #[error("zero patterns differ at {index:?}")]
    ZeroPatternMismatch { index: Vec<usize> },

    #[error("could not generate a {profile} tensor after {attempts} attempts")]
    ProfileUnsatisfiable { profile: String, attempts: usize },
}
