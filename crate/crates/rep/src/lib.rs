//! Finite-free modules, the functors `ρ_W: E(A) → End(W^{⊗n})` and
//! `ι_W: E(End W) → End(W^{⊗n})`, and the two-path RT cross-check.

mod error;
mod rep;
mod rt;

pub use error::RepError;
pub use rep::{iota_action, permutation_matrix, rho_action, tensor_matrix, Representation};
pub use rt::{matrix_digest, rt_corpus, rt_cross_check, RtContext, RtReport};
