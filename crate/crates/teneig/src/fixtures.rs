//! Bundled example tensors with known dominant eigenvalues.
//!
//! These three essentially nonnegative tensors double as regression
//! fixtures and as the payload of the CLI `examples` subcommand. The
//! reference values are, with the default solver settings:
//!
//! * [`example1`]: lambda = 36.2757, eigenvector (1.0000, 0.8351, 0.9415)
//! * [`example2`]: lambda = 1, eigenvector (0.70711, 0.70711, 1)
//! * [`example3`]: lambda = 0.8225, eigenvector (1.0000, 0.7408, 0.9714, 0.5330)

use crate::tensor::{DenseTensor, TensorShape};

/// Irreducible 3-order 3-dimensional tensor, dense apart from nothing:
/// every entry is set. Stored as three square slices with the third index
/// fixed, so the entry at row `i`, column `j` of `SLICE[k]` is `A[i, j, k]`.
/// This orientation is the one that yields the documented dominant
/// eigenvalue 36.2757; fixing the first index instead yields 35.2124.
pub fn example1() -> DenseTensor {
    const SLICES: [[[f64; 3]; 3]; 3] = [
        [[-1.51, 8.35, 1.03], [4.04, 3.72, 1.45], [6.71, 6.43, 1.35]],
        [[9.02, 0.78, 6.89], [9.71, -5.32, 1.85], [2.09, 4.17, 2.98]],
        [[9.55, 1.57, 6.91], [5.63, 5.55, 1.43], [5.76, 8.29, -0.15]],
    ];
    let shape = TensorShape::new(3, 3).expect("static shape");
    let mut values = vec![0.0; shape.len()];
    for (k, slice) in SLICES.iter().enumerate() {
        for (i, row) in slice.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                values[shape.linear_index(&[i, j, k]).expect("in range")] = v;
            }
        }
    }
    DenseTensor::from_values(shape, values).expect("static fixture")
}

/// Irreducible 3-order 3-dimensional tensor with six nonzero entries:
/// `A[1,3,3] = A[2,3,3] = A[3,1,1] = A[3,2,2] = 1` and
/// `A[1,1,1] = A[2,2,2] = -1` (1-based).
pub fn example2() -> DenseTensor {
    from_entries(
        TensorShape::new(3, 3).expect("static shape"),
        &[
            ([1, 3, 3], 1.0),
            ([2, 3, 3], 1.0),
            ([3, 1, 1], 1.0),
            ([3, 2, 2], 1.0),
            ([1, 1, 1], -1.0),
            ([2, 2, 2], -1.0),
        ],
    )
}

/// Reducible 3-order 4-dimensional tensor: `-1` on the diagonal, plus
/// `A[1,1,2] = A[1,1,4] = A[2,1,1] = A[3,1,1] = A[1,2,2] = A[3,3,2] =
/// A[4,4,3] = 1` (1-based).
pub fn example3() -> DenseTensor {
    from_entries(
        TensorShape::new(3, 4).expect("static shape"),
        &[
            ([1, 1, 1], -1.0),
            ([2, 2, 2], -1.0),
            ([3, 3, 3], -1.0),
            ([4, 4, 4], -1.0),
            ([1, 1, 2], 1.0),
            ([1, 1, 4], 1.0),
            ([2, 1, 1], 1.0),
            ([3, 1, 1], 1.0),
            ([1, 2, 2], 1.0),
            ([3, 3, 2], 1.0),
            ([4, 4, 3], 1.0),
        ],
    )
}

fn from_entries(shape: TensorShape, entries: &[([usize; 3], f64)]) -> DenseTensor {
    let mut values = vec![0.0; shape.len()];
    for (index, value) in entries {
        let zero_based: Vec<usize> = index.iter().map(|i| i - 1).collect();
        values[shape.linear_index(&zero_based).expect("in range")] = *value;
    }
    DenseTensor::from_values(shape, values).expect("static fixture")
}
