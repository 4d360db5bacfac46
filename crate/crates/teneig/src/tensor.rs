//! Dense square tensors and the multilinear operations on them.
//!
//! An `m`-order `n`-dimensional square tensor holds `n^m` real entries
//! indexed by tuples `(i1, ..., im)` with each index in `0..n`. Storage is
//! a flat array in lexicographic order with the first index varying
//! slowest. All external formats print indices 1-based; the in-memory API
//! is 0-based throughout.

use serde::Serialize;

use crate::error::{Result, TensorError};

/// Order and dimension of a square tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TensorShape {
    order: usize,
    dim: usize,
}

impl TensorShape {
    /// Creates a shape with order `m >= 2` and dimension `n >= 1` whose
    /// entry count `n^m` fits in memory arithmetic.
    pub fn new(order: usize, dim: usize) -> Result<Self> {
        if order < 2 {
            return Err(TensorError::InvalidOrder(order));
        }
        if dim < 1 {
            return Err(TensorError::InvalidDim(dim));
        }
        let mut len = 1usize;
        for _ in 0..order {
            len = len
                .checked_mul(dim)
                .ok_or(TensorError::ShapeTooLarge { order, dim })?;
        }
        Ok(Self { order, dim })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Total entry count `n^m`.
    pub fn len(&self) -> usize {
        self.dim.pow(self.order as u32)
    }

    pub fn is_empty(&self) -> bool {
        false // n >= 1 and m >= 2 imply at least one entry
    }

    /// Flat offset of a 0-based index tuple, or `None` if the tuple has the
    /// wrong length or an index is out of range.
    pub fn linear_index(&self, index: &[usize]) -> Option<usize> {
        if index.len() != self.order {
            return None;
        }
        let mut linear = 0usize;
        for &i in index {
            if i >= self.dim {
                return None;
            }
            linear = linear * self.dim + i;
        }
        Some(linear)
    }

    /// Inverse of [`linear_index`](Self::linear_index): the 0-based index
    /// tuple at a flat offset.
    pub fn index_tuple(&self, mut linear: usize) -> Vec<usize> {
        let mut index = vec![0usize; self.order];
        for slot in index.iter_mut().rev() {
            *slot = linear % self.dim;
            linear /= self.dim;
        }
        index
    }
}

impl std::fmt::Display for TensorShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "order {} dimension {}", self.order, self.dim)
    }
}

fn to_one_based(index: &[usize]) -> Vec<usize> {
    index.iter().map(|i| i + 1).collect()
}

/// Dense square real tensor.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseTensor {
    shape: TensorShape,
    values: Vec<f64>,
}

impl DenseTensor {
    /// Wraps a flat value array (first index slowest). Rejects a wrong
    /// value count and non-finite entries.
    pub fn from_values(shape: TensorShape, values: Vec<f64>) -> Result<Self> {
        if values.len() != shape.len() {
            return Err(TensorError::ValueCountMismatch {
                expected: shape.len(),
                found: values.len(),
            });
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(TensorError::NonFiniteEntry {
                index: to_one_based(&shape.index_tuple(pos)),
                value: values[pos],
            });
        }
        Ok(Self { shape, values })
    }

    pub fn zeros(shape: TensorShape) -> Self {
        Self {
            shape,
            values: vec![0.0; shape.len()],
        }
    }

    pub fn constant(shape: TensorShape, value: f64) -> Self {
        Self {
            shape,
            values: vec![value; shape.len()],
        }
    }

    /// The unit tensor: 1 on constant index tuples, 0 elsewhere.
    pub fn unit(shape: TensorShape) -> Self {
        DiagonalTensor::unit(shape).to_dense()
    }

    pub fn shape(&self) -> TensorShape {
        self.shape
    }

    pub fn order(&self) -> usize {
        self.shape.order
    }

    pub fn dim(&self) -> usize {
        self.shape.dim
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Entry at a 0-based index tuple.
    pub fn get(&self, index: &[usize]) -> Option<f64> {
        self.shape.linear_index(index).map(|l| self.values[l])
    }

    /// The diagonal entries `A[i, i, ..., i]`.
    pub fn diagonal(&self) -> Vec<f64> {
        let n = self.dim();
        // linear offset of (i, ..., i) is i * (n^{m-1} + ... + n + 1)
        let stride: usize = (0..self.order()).map(|p| n.pow(p as u32)).sum();
        (0..n).map(|i| self.values[i * stride]).collect()
    }

    /// The contraction `(A x^{m-1})_i = sum A[i, i2, ..., im] x_{i2} ... x_{im}`.
    ///
    /// Summation runs in a fixed lexicographic order per output component,
    /// so results are reproducible bit for bit.
    pub fn contract(&self, x: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        let m = self.order();
        if x.len() != n {
            return Err(TensorError::DimensionMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let block = n.pow((m - 1) as u32);
        let mut out = vec![0.0; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let slice = &self.values[i * block..(i + 1) * block];
            let mut tail = vec![0usize; m - 1];
            let mut acc = 0.0;
            for &value in slice {
                if value != 0.0 {
                    let mut term = value;
                    for &j in &tail {
                        term *= x[j];
                    }
                    acc += term;
                }
                // odometer over the trailing indices, last one fastest
                for pos in (0..m - 1).rev() {
                    tail[pos] += 1;
                    if tail[pos] < n {
                        break;
                    }
                    tail[pos] = 0;
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    /// Adds `b` to every diagonal entry, leaving off-diagonal entries
    /// untouched (the tensor `A + b I`).
    pub fn shift(&self, b: f64) -> DenseTensor {
        let n = self.dim();
        let stride: usize = (0..self.order()).map(|p| n.pow(p as u32)).sum();
        let mut values = self.values.clone();
        for i in 0..n {
            values[i * stride] += b;
        }
        DenseTensor {
            shape: self.shape,
            values,
        }
    }

    /// Adds `eps >= 0` to every entry (the tensor `A + E`).
    pub fn perturb(&self, eps: f64) -> Result<DenseTensor> {
        if eps < 0.0 || !eps.is_finite() {
            return Err(TensorError::NegativePerturbation(eps));
        }
        let values = self.values.iter().map(|v| v + eps).collect();
        Ok(DenseTensor {
            shape: self.shape,
            values,
        })
    }

    /// Entrywise scaling by `c`.
    pub fn scale(&self, c: f64) -> DenseTensor {
        DenseTensor {
            shape: self.shape,
            values: self.values.iter().map(|v| c * v).collect(),
        }
    }

    /// Entrywise sum of two tensors of identical shape.
    pub fn add(&self, other: &DenseTensor) -> Result<DenseTensor> {
        self.check_same_shape(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(DenseTensor {
            shape: self.shape,
            values,
        })
    }

    /// Adds a diagonal tensor of the same shape.
    pub fn add_diagonal(&self, diag: &DiagonalTensor) -> Result<DenseTensor> {
        if diag.shape() != self.shape {
            return Err(self.shape_mismatch(diag.shape()));
        }
        let n = self.dim();
        let stride: usize = (0..self.order()).map(|p| n.pow(p as u32)).sum();
        let mut values = self.values.clone();
        for (i, d) in diag.diag().iter().enumerate() {
            values[i * stride] += d;
        }
        Ok(DenseTensor {
            shape: self.shape,
            values,
        })
    }

    /// True iff every entry is >= 0.
    pub fn is_nonnegative(&self) -> bool {
        self.first_negative_entry().is_none()
    }

    /// First negative entry as a 1-based index tuple, if any.
    pub fn first_negative_entry(&self) -> Option<(Vec<usize>, f64)> {
        self.values
            .iter()
            .position(|v| *v < 0.0)
            .map(|pos| (to_one_based(&self.shape.index_tuple(pos)), self.values[pos]))
    }

    /// True iff every off-diagonal entry is >= 0; the diagonal may be
    /// anything.
    pub fn is_essentially_nonnegative(&self) -> bool {
        self.first_negative_off_diagonal().is_none()
    }

    /// First negative off-diagonal entry as a 1-based index tuple, if any.
    pub fn first_negative_off_diagonal(&self) -> Option<(Vec<usize>, f64)> {
        for (pos, &v) in self.values.iter().enumerate() {
            if v < 0.0 {
                let index = self.shape.index_tuple(pos);
                if !index.iter().all(|&i| i == index[0]) {
                    return Some((to_one_based(&index), v));
                }
            }
        }
        None
    }

    /// True iff entries are invariant under every permutation of the index
    /// tuple. Each tuple is compared against its sorted representative,
    /// which is equivalent to checking all permutations pairwise.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetric_entry().is_none()
    }

    /// First 1-based index tuple whose entry differs from its sorted
    /// representative, if any.
    pub fn first_asymmetric_entry(&self) -> Option<Vec<usize>> {
        for (pos, &v) in self.values.iter().enumerate() {
            let index = self.shape.index_tuple(pos);
            let mut sorted = index.clone();
            sorted.sort_unstable();
            let canon = self.shape.linear_index(&sorted).expect("tuple in range");
            if self.values[canon] != v {
                return Some(to_one_based(&index));
            }
        }
        None
    }

    /// Similarity scaling `B[i1..im] = sigma * A[i1..im] * d_{i1}^{-(m-1)} * d_{i2} ... d_{im}`
    /// with `sigma > 0` and strictly positive `d`. Preserves the zero
    /// pattern and multiplies the dominant eigenvalue by `sigma`.
    pub fn apply_diagonal_scaling(&self, sigma: f64, d: &PositiveVector) -> Result<DenseTensor> {
        if sigma <= 0.0 || !sigma.is_finite() {
            return Err(TensorError::NonPositiveScale(sigma));
        }
        let n = self.dim();
        let m = self.order();
        if d.len() != n {
            return Err(TensorError::DimensionMismatch {
                expected: n,
                found: d.len(),
            });
        }
        let dv = d.as_slice();
        let lead: Vec<f64> = dv.iter().map(|v| v.powi(-((m - 1) as i32))).collect();
        let mut values = Vec::with_capacity(self.values.len());
        for (pos, &v) in self.values.iter().enumerate() {
            let index = self.shape.index_tuple(pos);
            let mut factor = sigma * lead[index[0]];
            for &j in &index[1..] {
                factor *= dv[j];
            }
            values.push(factor * v);
        }
        DenseTensor::from_values(self.shape, values)
    }

    fn check_same_shape(&self, other: &DenseTensor) -> Result<()> {
        if self.shape != other.shape {
            return Err(self.shape_mismatch(other.shape));
        }
        Ok(())
    }

    fn shape_mismatch(&self, right: TensorShape) -> TensorError {
        TensorError::ShapeMismatch {
            left_order: self.shape.order,
            left_dim: self.shape.dim,
            right_order: right.order,
            right_dim: right.dim,
        }
    }
}

/// Tensor that is zero off the diagonal, stored as its `n` diagonal
/// entries. The unit tensor is the special case with all-ones diagonal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagonalTensor {
    shape: TensorShape,
    diag: Vec<f64>,
}

impl DiagonalTensor {
    pub fn new(shape: TensorShape, diag: Vec<f64>) -> Result<Self> {
        if diag.len() != shape.dim() {
            return Err(TensorError::DimensionMismatch {
                expected: shape.dim(),
                found: diag.len(),
            });
        }
        if let Some(pos) = diag.iter().position(|v| !v.is_finite()) {
            return Err(TensorError::NonFiniteEntry {
                index: vec![pos + 1; shape.order()],
                value: diag[pos],
            });
        }
        Ok(Self { shape, diag })
    }

    pub fn unit(shape: TensorShape) -> Self {
        Self {
            shape,
            diag: vec![1.0; shape.dim()],
        }
    }

    pub fn shape(&self) -> TensorShape {
        self.shape
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn scale(&self, c: f64) -> DiagonalTensor {
        DiagonalTensor {
            shape: self.shape,
            diag: self.diag.iter().map(|v| c * v).collect(),
        }
    }

    pub fn to_dense(&self) -> DenseTensor {
        let mut dense = DenseTensor::zeros(self.shape);
        let n = self.shape.dim();
        let stride: usize = (0..self.shape.order()).map(|p| n.pow(p as u32)).sum();
        for (i, &d) in self.diag.iter().enumerate() {
            dense.values[i * stride] = d;
        }
        dense
    }
}

/// Strictly positive vector, the home of power-iteration iterates.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct PositiveVector {
    values: Vec<f64>,
}

impl PositiveVector {
    /// Validates strict positivity (and finiteness) of every component.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        for (i, &v) in values.iter().enumerate() {
            if v <= 0.0 || !v.is_finite() {
                return Err(TensorError::NotPositive { index: i, value: v });
            }
        }
        Ok(Self { values })
    }

    pub fn ones(n: usize) -> Self {
        Self {
            values: vec![1.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.values
    }
}

/// Elementwise power `(x_i^p)_i`. A negative base with a fractional
/// exponent is a domain error.
pub fn elementwise_power(x: &[f64], p: f64) -> Result<Vec<f64>> {
    let integral = p.fract() == 0.0;
    x.iter()
        .map(|&v| {
            if v < 0.0 && !integral {
                Err(TensorError::NegativeBase {
                    base: v,
                    exponent: p,
                })
            } else {
                Ok(v.powf(p))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shape(m: usize, n: usize) -> TensorShape {
        TensorShape::new(m, n).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() <= tol, "expected {e}, got {a}");
        }
    }

    #[test]
    fn shape_rejects_degenerate_sizes() {
        assert_eq!(TensorShape::new(1, 3), Err(TensorError::InvalidOrder(1)));
        assert_eq!(TensorShape::new(3, 0), Err(TensorError::InvalidDim(0)));
        assert_eq!(
            TensorShape::new(64, 1000),
            Err(TensorError::ShapeTooLarge { order: 64, dim: 1000 })
        );
        assert_eq!(shape(3, 4).len(), 64);
    }

    #[test]
    fn linear_index_round_trips() {
        let s = shape(3, 4);
        for linear in 0..s.len() {
            let tuple = s.index_tuple(linear);
            assert_eq!(s.linear_index(&tuple), Some(linear));
        }
        assert_eq!(s.linear_index(&[0, 0]), None);
        assert_eq!(s.linear_index(&[0, 0, 4]), None);
    }

    #[test]
    fn from_values_validates() {
        let s = shape(2, 2);
        assert!(matches!(
            DenseTensor::from_values(s, vec![0.0; 3]),
            Err(TensorError::ValueCountMismatch { expected: 4, found: 3 })
        ));
        let err = DenseTensor::from_values(s, vec![0.0, f64::NAN, 0.0, 0.0]).unwrap_err();
        assert!(matches!(err, TensorError::NonFiniteEntry { index, .. } if index == vec![1, 2]));
    }

    #[test]
    fn contract_unit_tensor_is_elementwise_power() {
        let unit = DenseTensor::unit(shape(3, 3));
        let y = unit.contract(&[2.0, 3.0, 4.0]).unwrap();
        assert_eq!(y, vec![4.0, 9.0, 16.0]);
    }

    #[test]
    fn contract_example2_at_ones() {
        let a = fixtures::example2();
        let y = a.contract(&[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(y, vec![0.0, 0.0, 2.0]);
    }

    #[test]
    fn contract_rejects_wrong_vector_length() {
        let a = DenseTensor::zeros(shape(3, 3));
        assert!(matches!(
            a.contract(&[1.0, 2.0]),
            Err(TensorError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    // Independent oracle: evaluate the defining sums by recursion over the
    // trailing indices, with no shared code with `contract`.
    fn contract_oracle(a: &DenseTensor, x: &[f64]) -> Vec<f64> {
        fn walk(a: &DenseTensor, x: &[f64], prefix: &mut Vec<usize>, depth: usize) -> f64 {
            if depth == 0 {
                return a.get(prefix).unwrap();
            }
            let mut total = 0.0;
            for j in 0..a.dim() {
                prefix.push(j);
                total += x[j] * walk(a, x, prefix, depth - 1);
                prefix.pop();
            }
            total
        }
        (0..a.dim())
            .map(|i| {
                let mut prefix = vec![i];
                walk(a, x, &mut prefix, a.order() - 1)
            })
            .collect()
    }

    #[test]
    fn contract_matches_nested_loop_oracle() {
        // fixed pseudo-random 3-order 4-dim tensor
        let s = shape(3, 4);
        let values: Vec<f64> = (0..s.len())
            .map(|i| ((i * 2654435761usize) % 1000) as f64 / 100.0 - 4.0)
            .collect();
        let a = DenseTensor::from_values(s, values).unwrap();
        let x = [0.3, -1.2, 2.0, 0.7];
        let got = a.contract(&x).unwrap();
        let want = contract_oracle(&a, &x);
        for (g, w) in got.iter().zip(&want) {
            let scale = w.abs().max(1.0);
            assert!((g - w).abs() <= 1e-12 * scale);
        }
    }

    #[test]
    fn elementwise_power_cases() {
        assert_eq!(
            elementwise_power(&[4.0, 9.0, 16.0], 0.5).unwrap(),
            vec![2.0, 3.0, 4.0]
        );
        assert_eq!(
            elementwise_power(&[1.0, 1.0, 1.0], 7.3).unwrap(),
            vec![1.0, 1.0, 1.0]
        );
        assert_eq!(
            elementwise_power(&[0.5, 0.5, 1.0], 2.0).unwrap(),
            vec![0.25, 0.25, 1.0]
        );
        assert!(matches!(
            elementwise_power(&[-2.0], 0.5),
            Err(TensorError::NegativeBase { .. })
        ));
        // integral exponents keep negative bases legal
        assert_eq!(elementwise_power(&[-2.0], 2.0).unwrap(), vec![4.0]);
    }

    #[test]
    fn shift_moves_only_the_diagonal() {
        let s = shape(3, 3);
        assert_eq!(DenseTensor::zeros(s).shift(1.0), DenseTensor::unit(s));

        let shifted = fixtures::example2().shift(2.0);
        assert_eq!(shifted.diagonal(), vec![1.0, 1.0, 2.0]);

        // involution is exact whenever the diagonal additions are;
        // example2 holds small integers
        let a = fixtures::example2();
        assert_eq!(a.shift(3.25).shift(-3.25), a);
        let b = fixtures::example1();
        let round_trip = b.shift(3.25).shift(-3.25);
        for (x, y) in round_trip.values().iter().zip(b.values()) {
            assert!((x - y).abs() <= 1e-15 * y.abs().max(1.0));
        }
    }

    #[test]
    fn perturb_adds_everywhere() {
        let a = fixtures::example1();
        assert_eq!(a.perturb(0.0).unwrap(), a);

        let s = shape(3, 2);
        let ones = DenseTensor::zeros(s).perturb(1.0).unwrap();
        assert_eq!(ones, DenseTensor::constant(s, 1.0));

        let bumped = DenseTensor::zeros(s).perturb(1e-9).unwrap();
        assert!(bumped.values().iter().all(|&v| v >= 1e-9));

        assert!(matches!(
            a.perturb(-1e-3),
            Err(TensorError::NegativePerturbation(_))
        ));
    }

    #[test]
    fn nonnegativity_predicates() {
        let unit = DenseTensor::unit(shape(3, 3));
        assert!(unit.is_nonnegative());
        assert!(unit.is_symmetric());
        assert!(unit.is_essentially_nonnegative());

        let ex1 = fixtures::example1();
        assert!(ex1.is_essentially_nonnegative());
        assert!(!ex1.is_nonnegative()); // diagonal holds -1.51
        let (index, value) = ex1.first_negative_entry().unwrap();
        assert_eq!(index, vec![1, 1, 1]);
        assert_eq!(value, -1.51);

        let s = shape(3, 3);
        let mut values = vec![0.0; s.len()];
        values[s.linear_index(&[0, 1, 1]).unwrap()] = -0.1;
        let bad = DenseTensor::from_values(s, values).unwrap();
        assert!(!bad.is_essentially_nonnegative());
        assert_eq!(
            bad.first_negative_off_diagonal().unwrap().0,
            vec![1, 2, 2]
        );

        let diag = DiagonalTensor::new(s, vec![-5.0, 2.0, 0.0]).unwrap();
        assert!(diag.to_dense().is_essentially_nonnegative());
    }

    #[test]
    fn symmetry_detects_permutation_mismatch() {
        let s = shape(3, 3);
        let mut values = vec![0.0; s.len()];
        values[s.linear_index(&[0, 1, 2]).unwrap()] = 1.0;
        let a = DenseTensor::from_values(s, values).unwrap();
        assert!(!a.is_symmetric());

        // filling the whole orbit restores symmetry
        let mut values = vec![0.0; s.len()];
        for perm in [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ] {
            values[s.linear_index(&perm).unwrap()] = 1.0;
        }
        let sym = DenseTensor::from_values(s, values).unwrap();
        assert!(sym.is_symmetric());
    }

    #[test]
    fn diagonal_scaling_identity_is_bit_exact() {
        let a = fixtures::example1();
        let d = PositiveVector::ones(3);
        let b = a.apply_diagonal_scaling(1.0, &d).unwrap();
        assert_eq!(a.values(), b.values());
    }

    #[test]
    fn diagonal_scaling_on_unit_tensor() {
        let s = shape(3, 3);
        let unit = DenseTensor::unit(s);
        let d = PositiveVector::new(vec![0.3, 1.7, 4.0]).unwrap();
        let scaled = unit.apply_diagonal_scaling(2.5, &d).unwrap();
        // d-factors cancel on constant index tuples
        assert_close(scaled.values(), DenseTensor::unit(s).scale(2.5).values(), 1e-12);
        // zero pattern is preserved
        for (a, b) in unit.values().iter().zip(scaled.values()) {
            assert_eq!(*a == 0.0, *b == 0.0);
        }
    }

    #[test]
    fn diagonal_scaling_rejects_bad_arguments() {
        let a = DenseTensor::unit(shape(3, 3));
        let d = PositiveVector::ones(3);
        assert!(matches!(
            a.apply_diagonal_scaling(0.0, &d),
            Err(TensorError::NonPositiveScale(_))
        ));
        assert!(matches!(
            a.apply_diagonal_scaling(1.0, &PositiveVector::ones(2)),
            Err(TensorError::DimensionMismatch { .. })
        ));
        assert!(PositiveVector::new(vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn diagonal_tensor_expansion() {
        let s = shape(3, 2);
        let d = DiagonalTensor::new(s, vec![2.0, -3.0]).unwrap();
        let dense = d.to_dense();
        assert_eq!(dense.diagonal(), vec![2.0, -3.0]);
        let off_diagonal_sum: f64 = dense
            .values()
            .iter()
            .enumerate()
            .filter(|(pos, _)| {
                let t = s.index_tuple(*pos);
                !t.iter().all(|&i| i == t[0])
            })
            .map(|(_, v)| v.abs())
            .sum();
        assert_eq!(off_diagonal_sum, 0.0);
    }

    #[test]
    fn positive_vector_validation() {
        assert!(PositiveVector::new(vec![1.0, 2.0]).is_ok());
        let err = PositiveVector::new(vec![1.0, -2.0]).unwrap_err();
        assert_eq!(err, TensorError::NotPositive { index: 1, value: -2.0 });
        assert!(PositiveVector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn tensor_types_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<TensorShape>();
        assert_send_sync::<DenseTensor>();
        assert_send_sync::<DiagonalTensor>();
        assert_send_sync::<PositiveVector>();
    }
}
