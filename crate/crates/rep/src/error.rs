use tangle_invariant::InvariantError;
use tangle_xc::XcError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("morphism lives in dimension {found}, the representation expects {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra of dimension {dim} is not End(W) for w = {w}")]
    NotEndomorphismAlgebra { dim: usize, w: usize },
    #[error(transparent)]
    Xc(#[from] XcError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
