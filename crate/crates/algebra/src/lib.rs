//! Exact arithmetic substrate: scalars, structure-constant algebras,
//! sparse tensor powers, permutations and small dense matrices.

mod algebra;
mod error;
mod matrix;
mod perm;
mod scalar;
pub mod spec;
mod tensor;

pub use algebra::{verify_algebra, AlgebraReport, Field, SparseVec, StructureAlgebra};
pub use error::AlgebraError;
pub use matrix::Matrix;
pub use perm::Permutation;
pub use scalar::Scalar;
pub use tensor::{contract_pattern, embed, embed_pair, sigma_star, Index, TensorElement};
