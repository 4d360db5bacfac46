//! Shared input builders for the solver benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use teneig::{random_tensor, DenseTensor, TensorProfile, TensorShape};

/// Shapes the benchmarks sweep over.
pub fn bench_shapes() -> Vec<TensorShape> {
    [(3, 3), (3, 6), (4, 4)]
        .into_iter()
        .map(|(m, n)| TensorShape::new(m, n).expect("static shape"))
        .collect()
}

/// Deterministic positive tensor for a shape.
pub fn bench_tensor(shape: TensorShape) -> DenseTensor {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBE7C);
    random_tensor(shape, TensorProfile::Positive, &mut rng).expect("positive profile")
}

/// Deterministic positive vector matched to the tensor dimension.
pub fn bench_vector(dim: usize) -> Vec<f64> {
    (0..dim).map(|i| 0.5 + 0.1 * i as f64).collect()
}
