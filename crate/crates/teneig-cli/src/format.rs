//! JSON tensor file format.
//!
//! A tensor document is a JSON object with `order`, `dim`, a `layout`
//! discriminator and the `entries` payload. Indices are 1-based. Two
//! layouts exist:
//!
//! ```json
//! {"order":3,"dim":3,"layout":"coo","entries":[[[1,3,3],1.0],[[1,1,1],-1.0]]}
//! {"order":2,"dim":2,"layout":"dense","entries":[1.0,0.0,0.0,1.0]}
//! ```
//!
//! Coo entries not listed default to zero; listing an index tuple twice is
//! an error. Dense entries run in lexicographic order with the first index
//! varying slowest. Serialization uses shortest round-trip decimals, so
//! `parse_tensor(serialize_tensor(a, layout))` reproduces `a` bit for bit.

use serde::{Deserialize, Serialize};
use teneig::{DenseTensor, TensorError, TensorShape};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    /// Malformed JSON; the message carries line and column.
    #[error("{0}")]
    Syntax(#[from] serde_json::Error),

    #[error("layout says {expected} but the entry list is {found}")]
    LayoutMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("entry {ordinal}: index tuple {index:?} needs {expected} components")]
    WrongTupleLength {
        ordinal: usize,
        index: Vec<usize>,
        expected: usize,
    },

    #[error("entry {ordinal}: index tuple {index:?} out of range 1..={dim}")]
    IndexOutOfRange {
        ordinal: usize,
        index: Vec<usize>,
        dim: usize,
    },

    #[error("entry {ordinal}: duplicate index tuple {index:?}")]
    DuplicateIndex { ordinal: usize, index: Vec<usize> },

    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// Serialized tensor container.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TensorDocument {
    pub order: usize,
    pub dim: usize,
    pub layout: Layout,
    pub entries: EntryList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    Coo,
    Dense,
}

/// Payload of a document: sparse `(indices, value)` pairs or a flat dense
/// list, disambiguated by the `layout` field.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryList {
    Coo(Vec<(Vec<usize>, f64)>),
    Dense(Vec<f64>),
}

/// Parses a JSON tensor document.
pub fn parse_tensor(text: &str) -> Result<DenseTensor, FormatError> {
    let document: TensorDocument = serde_json::from_str(text)?;
    let shape = TensorShape::new(document.order, document.dim)?;
    match (document.layout, document.entries) {
        (Layout::Dense, EntryList::Dense(values)) => {
            Ok(DenseTensor::from_values(shape, values)?)
        }
        // an empty list parses as the coo variant; as dense it means zero values
        (Layout::Dense, EntryList::Coo(entries)) if entries.is_empty() => {
            Ok(DenseTensor::from_values(shape, Vec::new())?)
        }
        (Layout::Coo, EntryList::Coo(entries)) => {
            let mut values = vec![0.0; shape.len()];
            let mut seen = vec![false; shape.len()];
            for (ordinal, (index, value)) in entries.into_iter().enumerate() {
                if index.len() != shape.order() {
                    return Err(FormatError::WrongTupleLength {
                        ordinal,
                        index,
                        expected: shape.order(),
                    });
                }
                if index.iter().any(|&i| i < 1 || i > shape.dim()) {
                    return Err(FormatError::IndexOutOfRange {
                        ordinal,
                        index,
                        dim: shape.dim(),
                    });
                }
                let zero_based: Vec<usize> = index.iter().map(|i| i - 1).collect();
                let linear = shape.linear_index(&zero_based).expect("range checked");
                if seen[linear] {
                    return Err(FormatError::DuplicateIndex { ordinal, index });
                }
                seen[linear] = true;
                values[linear] = value;
            }
            Ok(DenseTensor::from_values(shape, values)?)
        }
        (Layout::Coo, EntryList::Dense(_)) => Err(FormatError::LayoutMismatch {
            expected: "coo",
            found: "a dense value list",
        }),
        (Layout::Dense, EntryList::Coo(_)) => Err(FormatError::LayoutMismatch {
            expected: "dense",
            found: "a coo entry list",
        }),
    }
}

/// Serializes a tensor in the requested layout. Coo output lists the
/// nonzero entries in lexicographic index order, 1-based.
pub fn serialize_tensor(tensor: &DenseTensor, layout: Layout) -> String {
    let shape = tensor.shape();
    let entries = match layout {
        Layout::Dense => EntryList::Dense(tensor.values().to_vec()),
        Layout::Coo => EntryList::Coo(
            tensor
                .values()
                .iter()
                .enumerate()
                // keep negative zero so round-trips stay bit-exact
                .filter(|(_, v)| v.to_bits() != 0)
                .map(|(pos, &v)| {
                    let index: Vec<usize> = shape.index_tuple(pos).iter().map(|i| i + 1).collect();
                    (index, v)
                })
                .collect(),
        ),
    };
    let document = TensorDocument {
        order: shape.order(),
        dim: shape.dim(),
        layout,
        entries,
    };
    serde_json::to_string(&document).expect("document serialization cannot fail")
}
