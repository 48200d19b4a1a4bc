use tangle_algebra::AlgebraError;
use tangle_xc::XcError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ElementsError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("closure step {step} meets a fixed point and no trace is available")]
    Inadmissible { step: usize },
    #[error("cannot close {closed} strands of an arity-{arity} morphism")]
    TooManyClosed { closed: usize, arity: usize },
    #[error("the algebra has no trace")]
    NoTrace,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Xc(#[from] XcError),
    #[error("json: {0}")]
    Json(String),
}
