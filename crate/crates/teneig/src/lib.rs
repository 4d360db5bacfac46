//! Dominant eigenvalues of essentially nonnegative tensors.
//!
//! An `m`-order `n`-dimensional square tensor `A` is essentially
//! nonnegative when all its off-diagonal entries are nonnegative. Such a
//! tensor has a real dominant eigenvalue `lambda(A)`, an eigenvalue with
//! nonnegative eigenvector that bounds the real part of every other
//! eigenvalue, and for nonnegative tensors `lambda(A)` coincides with the
//! spectral radius. This crate computes `lambda(A)` by a shifted,
//! perturbed power iteration with Collatz-style ratio bounds
//! ([`spectral`]), analyzes irreducibility combinatorially ([`structure`]),
//! and verifies order and convexity properties of the dominant eigenvalue
//! numerically on fixed and random instances ([`props`]).
//!
//! ```
//! use teneig::{fixtures, solve_dominant, SolverConfig};
//!
//! let result = solve_dominant(&fixtures::example1(), &SolverConfig::default()).unwrap();
//! assert!(result.converged);
//! assert!((result.lambda - 36.2757).abs() < 5e-4);
//! ```

pub mod error;
pub mod fixtures;
pub mod props;
pub mod spectral;
pub mod structure;
pub mod tensor;

pub use error::{Result, TensorError};
pub use props::{
    check_diagonal_convexity, check_log_convexity, check_log_convexity_with_path, check_minimax,
    check_monotonicity, check_symmetric_convexity, random_same_pattern_pair, random_tensor,
    run_suite, PropertyReport, ScalingCertificate, Suite, TensorProfile,
};
pub use spectral::{
    collatz_bounds, power_step, residual_norm, solve_dominant, spectral_radius, EigenResult,
    IterationRecord, SolverConfig,
};
pub use structure::{is_irreducible, reach_set, ReducibilityReport};
pub use tensor::{elementwise_power, DenseTensor, DiagonalTensor, PositiveVector, TensorShape};
