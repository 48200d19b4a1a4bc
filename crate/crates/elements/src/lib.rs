//! The category of elements `E(A)` of an XC-algebra: morphisms `(u, σ)`,
//! composition, monoidal product, braiding, twist and partial closures.

mod closure;
mod error;
mod morphism;

pub use closure::{open_close, traced_close, AdmissiblePair};
pub use error::ElementsError;
pub use morphism::{
    braiding, braiding_inverse, crossing, crossing_inverse, twist, twist_inverse, twist_one, ElementMorphism,
    MorphismJson,
};
