//! Combinatorial irreducibility analysis.
//!
//! A square tensor is reducible when some nonempty proper index set `I`
//! satisfies `A[i1, i2, ..., im] = 0` for every `i1` in `I` and every
//! `i2, ..., im` outside `I`; otherwise it is irreducible. Writing
//! `J = complement(I)`, reducibility is equivalent to the existence of a
//! nonempty proper `J` that is invariant under the reach map
//! [`reach_set`], which this module exploits: it closes each singleton
//! seed under the reach map and reports the first proper closure found.
//! Any invariant proper `J` contains the closure of each of its members,
//! so scanning the `n` singletons is exhaustive.
//!
//! Zero means exactly `0.0` here. The verdict is combinatorial and a
//! tolerance would silently change it; callers wanting tolerant analysis
//! should round their input first. Diagonal entries never influence the
//! outcome.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::tensor::DenseTensor;

/// Outcome of [`is_irreducible`]. When the tensor is reducible, `witness`
/// holds a nonempty proper index set `I` (0-based) with
/// `A[i1, ..., im] = 0` for all `i1` in `I` and all trailing indices
/// outside `I`, verified by direct scan before being returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub irreducible: bool,
    pub witness: Option<BTreeSet<usize>>,
}

/// The set of first indices reachable from `seed`:
/// `{ i : A[i, i2, ..., im] != 0 for some i2, ..., im all in seed }`.
/// Monotone in `seed` under inclusion.
pub fn reach_set(tensor: &DenseTensor, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let shape = tensor.shape();
    let n = shape.dim();
    let block = n.pow((shape.order() - 1) as u32);
    let mut reached = BTreeSet::new();
    for i in 0..n {
        let slice = &tensor.values()[i * block..(i + 1) * block];
        for (offset, &value) in slice.iter().enumerate() {
            if value != 0.0 && trailing_in_set(offset, shape.order() - 1, n, seed) {
                reached.insert(i);
                break;
            }
        }
    }
    reached
}

fn trailing_in_set(mut offset: usize, arity: usize, n: usize, set: &BTreeSet<usize>) -> bool {
    for _ in 0..arity {
        if !set.contains(&(offset % n)) {
            return false;
        }
        offset /= n;
    }
    true
}

/// Decides irreducibility by closing every singleton seed under
/// [`reach_set`]. A proper closure `J` gives the witness `I = complement(J)`.
pub fn is_irreducible(tensor: &DenseTensor) -> ReducibilityReport {
    let n = tensor.dim();
    for j in 0..n {
        let mut closure = BTreeSet::from([j]);
        loop {
            let reached = reach_set(tensor, &closure);
            if reached.is_subset(&closure) {
                break;
            }
            closure.extend(reached);
        }
        if closure.len() < n {
            let witness: BTreeSet<usize> = (0..n).filter(|i| !closure.contains(i)).collect();
            assert!(
                verify_witness(tensor, &witness),
                "closure produced an invalid reducing set"
            );
            return ReducibilityReport {
                irreducible: false,
                witness: Some(witness),
            };
        }
    }
    ReducibilityReport {
        irreducible: true,
        witness: None,
    }
}

/// Direct scan confirming that `witness` is a nonempty proper index set
/// with `A[i1, ..., im] = 0` for all `i1` in the set and all trailing
/// indices outside it.
pub fn verify_witness(tensor: &DenseTensor, witness: &BTreeSet<usize>) -> bool {
    let shape = tensor.shape();
    let n = shape.dim();
    if witness.is_empty() || witness.len() >= n || witness.iter().any(|&i| i >= n) {
        return false;
    }
    let outside: BTreeSet<usize> = (0..n).filter(|i| !witness.contains(i)).collect();
    let block = n.pow((shape.order() - 1) as u32);
    for &i in witness {
        let slice = &tensor.values()[i * block..(i + 1) * block];
        for (offset, &value) in slice.iter().enumerate() {
            if value != 0.0 && trailing_in_set(offset, shape.order() - 1, n, &outside) {
                return false;
            }
        }
    }
    true
}
