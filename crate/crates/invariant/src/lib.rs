//! `Z_A(T) = (𝔷_A(T), σ_T)`: bead evaluation of slice words followed by the
//! partial closure.

use tangle_algebra::{Permutation, TensorElement};
use tangle_elements::{open_close, traced_close, ElementMorphism, ElementsError};
use tangle_model::{Gen, Tangle, TangleError};
use tangle_xc::{check_xc_axioms, XCStructure};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error(transparent)]
    Tangle(#[from] TangleError),
    #[error(transparent)]
    Elements(#[from] ElementsError),
    #[error("the closure has {0} components, not a single open one")]
    NotAKnot(usize),
    #[error("widths differ: {0} and {1}")]
    IncompatibleWidths(usize, usize),
}

/// Bead evaluation of the slice word alone, ignoring the closure: slot `k`
/// carries the beads met by the strand entering at bottom position `k`,
/// later beads on the left.
pub fn open_invariant(t: &Tangle, x: &XCStructure) -> ElementMorphism {
    let a = x.algebra();
    let mut at: Vec<usize> = (0..t.width()).collect(); // position -> slot
    let mut u = TensorElement::one(a, t.width());
    for s in t.slices() {
        let p = s.pos - 1;
        match s.gen {
            Gen::X => {
                u = u.mul_left_pair(a, x.r(), at[p], at[p + 1]);
                at.swap(p, p + 1);
            }
            Gen::Xneg => {
                u = u.mul_left_pair(a, x.r_inv(), at[p + 1], at[p]);
                at.swap(p, p + 1);
            }
            Gen::C => u = u.mul_left_slot(a, x.kappa_inv(), at[p]),
            Gen::Cneg => u = u.mul_left_slot(a, x.kappa(), at[p]),
        }
    }
    ElementMorphism::new(u, t.full_permutation()).expect("arity equals width")
}

/// `Z_A(T)`. Closed strands are contracted by the open closure, or by the
/// traced one when the structure has a trace.
pub fn bead_invariant(t: &Tangle, x: &XCStructure) -> Result<ElementMorphism, InvariantError> {
    if x.trace().is_none() && !t.is_admissible() {
        return Err(TangleError::Inadmissible.into());
    }
    close(&open_invariant(t, x), t.closed(), x)
}

fn close(f: &ElementMorphism, m: usize, x: &XCStructure) -> Result<ElementMorphism, InvariantError> {
    Ok(if x.trace().is_some() { traced_close(x, f, m)? } else { open_close(x, f, m)? })
}

/// An evaluation together with the first failing XC axiom, if any. The value
/// is still computed so that broken structures can be explored.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub value: ElementMorphism,
    pub warning: Option<String>,
}

pub fn evaluate(t: &Tangle, x: &XCStructure) -> Result<Evaluation, InvariantError> {
    let report = check_xc_axioms(x);
    let warning = report.first_failure().map(|c| format!("structure fails {}", c.name));
    Ok(Evaluation { value: bead_invariant(t, x)?, warning })
}

/// The braid closure `cl_{n−1}(b)` of a word on `strands` strands, where
/// `±k` stands for `σ_k^{±1}`.
pub fn knot_tangle(strands: usize, word: &[i32]) -> Result<Tangle, InvariantError> {
    let strands = strands.max(1);
    let t = Tangle::braid(strands, word, strands - 1)?;
    let n = t.component_count();
    if n != 1 || t.open() != 1 {
        return Err(InvariantError::NotAKnot(n));
    }
    Ok(t)
}

/// Knot invariant in `A`: the single slot of `Z_A` of the braid closure.
/// The strand count is one more than the largest generator index.
pub fn knot_invariant(word: &[i32], x: &XCStructure) -> Result<TensorElement, InvariantError> {
    let strands = word.iter().map(|g| g.unsigned_abs() as usize + 1).max().unwrap_or(1);
    let z = bead_invariant(&knot_tangle(strands, word)?, x)?;
    debug_assert_eq!(z.sigma(), &Permutation::identity(1));
    Ok(z.into_parts().0)
}

/// Outcome of one functoriality comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorialityReport {
    pub checks: Vec<Check>,
}

impl FunctorialityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Compares `Z` of stacked, juxtaposed and closed diagrams with the
/// corresponding operations on the values. Stacking uses the slice words of
/// both tangles with `t1` at the bottom; closures are checked for whichever
/// inputs carry one.
pub fn functoriality_check(t1: &Tangle, t2: &Tangle, x: &XCStructure) -> Result<FunctorialityReport, InvariantError> {
    if t1.width() != t2.width() {
        return Err(InvariantError::IncompatibleWidths(t1.width(), t2.width()));
    }
    let a = x.algebra();
    let (o1, o2) = (t1.with_closed(0)?, t2.with_closed(0)?);
    let (z1, z2) = (open_invariant(&o1, x), open_invariant(&o2, x));
    let mut checks = Vec::new();
    let stacked = open_invariant(&o1.then(&o2)?, x);
    checks.push(Check { name: "stacking".into(), passed: stacked == z2.compose(a, &z1)? });
    let side = open_invariant(&o1.beside(&o2)?, x);
    checks.push(Check { name: "juxtaposition".into(), passed: side == z1.monoidal(&z2) });
    for (name, t, z) in [("closure of first", t1, &z1), ("closure of second", t2, &z2)] {
        if t.closed() == 0 || (x.trace().is_none() && !t.is_admissible()) {
            continue;
        }
        let passed = bead_invariant(t, x)? == close(z, t.closed(), x)?;
        checks.push(Check { name: name.into(), passed });
    }
    Ok(FunctorialityReport { checks })
}
