//! XC-structures `(A, R, κ, tr)`, Hopf and ribbon data, the axiom
//! checkers and the builtin example algebras.

mod builtins;
mod endo;
mod error;
mod hopf;
pub mod presented;
pub mod spec;
mod structure;

pub use builtins::{
    builtin, double_sweedler, double_sweedler_hopf, matrix2, sweedler, sweedler_hopf, trivial, BuiltinParams,
    BUILTIN_NAMES,
};
pub use endo::{check_algebra_map, endomorphism_xc, matrix_unit_algebra, push_forward, EndomorphismXc};
pub use error::XcError;
pub use hopf::{derive_ribbon, ribbon_report, HopfData, RibbonDerived};
pub use structure::{check_xc_axioms, check_xc_axioms_embedded, classical_ribbon_inverse, AxiomCheck, AxiomReport, XCStructure};
