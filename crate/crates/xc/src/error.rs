use tangle_algebra::{AlgebraError, TensorElement};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum XcError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{what} has arity {got}, expected {expected}")]
    Shape { what: &'static str, got: usize, expected: usize },
    #[error("{0} is not the inverse of its partner")]
    NotInverse(&'static str),
    #[error("trace is not cyclic: tr(e{0}·e{1}) ≠ tr(e{1}·e{0})")]
    TraceNotCyclic(usize, usize),
    #[error("trace has {0} coordinates, expected {1}")]
    TraceShape(usize, usize),
    #[error("axiom {axiom} fails")]
    AxiomFailed { axiom: String, witness: Option<TensorElement> },
    #[error("unknown builtin {0:?}; expected trivial, matrix2, sweedler or double_sweedler")]
    UnknownBuiltin(String),
    #[error("matrix2 needs a nonzero parameter λ")]
    ZeroLambda,
    #[error("representation is not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("json: {0}")]
    Json(String),
}
