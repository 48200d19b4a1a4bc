use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed scalar {0:?}: expected p/q or a/b+c/d*i")]
    BadScalar(String),
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("mismatched algebras: dimension {0} vs {1}")]
    AlgebraMismatch(usize, usize),
    #[error("slot {slot} out of range for arity {arity}")]
    SlotOutOfRange { slot: usize, arity: usize },
    #[error("embedding needs two distinct slots, got {0} twice")]
    SameSlot(usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid algebra: {0}")]
    Invalid(String),
    #[error("coefficient {0} is not rational but the algebra is over Q")]
    FieldMismatch(String),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("json: {0}")]
    Json(String),
}
