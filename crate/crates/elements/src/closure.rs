//! The partial closure maps `φ_{n,m}`: open (no fixed points allowed) and
//! traced (a fixed point contributes `tr(κ x_{n+1})`).

use std::collections::BTreeMap;

use tangle_algebra::{Permutation, Scalar, StructureAlgebra, TensorElement};
use tangle_xc::XCStructure;

use crate::{ElementMorphism, ElementsError};

/// A morphism of arity `n + m` whose last `m` strands are to be closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissiblePair {
    f: ElementMorphism,
    closed: usize,
}

impl AdmissiblePair {
    /// Checks that no cycle of `σ` lies inside the last `m` points.
    pub fn new(f: ElementMorphism, closed: usize) -> Result<Self, ElementsError> {
        if closed > f.arity() {
            return Err(ElementsError::TooManyClosed { closed, arity: f.arity() });
        }
        if !f.sigma().is_admissible(closed) {
            return Err(ElementsError::Inadmissible { step: first_fixed_step(f.sigma(), closed) });
        }
        Ok(AdmissiblePair { f, closed })
    }

    pub fn morphism(&self) -> &ElementMorphism {
        &self.f
    }

    pub fn closed(&self) -> usize {
        self.closed
    }

    pub fn open(&self) -> usize {
        self.f.arity() - self.closed
    }

    pub fn close(&self, x: &XCStructure) -> ElementMorphism {
        open_close(x, &self.f, self.closed).expect("admissibility was checked")
    }
}

fn first_fixed_step(sigma: &Permutation, m: usize) -> usize {
    let mut s = sigma.clone();
    for step in 1..=m {
        match s.close_last() {
            Some(t) => s = t,
            None => return step,
        }
    }
    0
}

/// `e_a κ e_b` for all basis pairs.
pub(crate) struct KappaTable {
    dim: usize,
    entries: Vec<Vec<(usize, Scalar)>>,
}

impl KappaTable {
    pub(crate) fn new(alg: &StructureAlgebra, kappa: &TensorElement) -> Self {
        let d = alg.dim();
        let k = kappa.sparse();
        let mut entries = Vec::with_capacity(d * d);
        for a in 0..d {
            let mut ak: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (kb, kc) in &k {
                for (e, c) in alg.product(a, *kb) {
                    *ak.entry(*e).or_insert_with(Scalar::zero) += &(c * kc);
                }
            }
            for b in 0..d {
                let mut out: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (e, c) in &ak {
                    for (f, y) in alg.product(*e, b) {
                        *out.entry(*f).or_insert_with(Scalar::zero) += &(c * y);
                    }
                }
                entries.push(out.into_iter().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        KappaTable { dim: d, entries }
    }

    fn get(&self, a: usize, b: usize) -> &[(usize, Scalar)] {
        &self.entries[a * self.dim + b]
    }
}

/// Contracts the last slot once. `fixed` supplies `tr(κ e_a)` when the last
/// point is fixed, or `None` to refuse.
fn close_step(
    f: &ElementMorphism,
    table: &KappaTable,
    fixed: Option<&[Scalar]>,
    step: usize,
) -> Result<ElementMorphism, ElementsError> {
    let u = f.u();
    let sigma = f.sigma();
    let last = sigma.size() - 1;
    let dim = u.dim();
    if let Some(next) = sigma.close_last() {
        let j = sigma.inverse().apply(last);
        let mut terms: Vec<(Vec<u16>, Scalar)> = Vec::new();
        for (idx, c) in u.terms() {
            for (e, y) in table.get(idx[last] as usize, idx[j] as usize) {
                let mut k = idx[..last].to_vec();
                k[j] = *e as u16;
                terms.push((k, c * y));
            }
        }
        return ElementMorphism::new(TensorElement::from_terms(dim, last, terms), next);
    }
    let tr_kappa = fixed.ok_or(ElementsError::Inadmissible { step })?;
    let next = sigma.drop_fixed_last().expect("last point is fixed");
    let terms = u.terms().iter().map(|(idx, c)| (idx[..last].to_vec(), c * &tr_kappa[idx[last] as usize]));
    ElementMorphism::new(TensorElement::from_terms(dim, last, terms), next)
}

/// `φ_{n,m}`: closes the last `m` strands, one at a time from the right.
pub fn open_close(x: &XCStructure, f: &ElementMorphism, m: usize) -> Result<ElementMorphism, ElementsError> {
    close_with(x, f, m, None)
}

/// As `open_close`, with fixed points evaluated by the trace.
pub fn traced_close(x: &XCStructure, f: &ElementMorphism, m: usize) -> Result<ElementMorphism, ElementsError> {
    let tr = x.trace().ok_or(ElementsError::NoTrace)?;
    let a = x.algebra();
    let tr_kappa: Vec<Scalar> = (0..a.dim())
        .map(|e| {
            let ke = x.kappa().mul(a, &TensorElement::basis(a.dim(), &[e])).expect("arity 1");
            ke.sparse().iter().fold(Scalar::zero(), |acc, (k, c)| &acc + &(c * &tr[*k]))
        })
        .collect();
    close_with(x, f, m, Some(&tr_kappa))
}

fn close_with(
    x: &XCStructure,
    f: &ElementMorphism,
    m: usize,
    fixed: Option<&[Scalar]>,
) -> Result<ElementMorphism, ElementsError> {
    if m > f.arity() {
        return Err(ElementsError::TooManyClosed { closed: m, arity: f.arity() });
    }
    if m == 0 {
        return Ok(f.clone());
    }
    let table = KappaTable::new(x.algebra(), x.kappa());
    let mut g = f.clone();
    for step in 1..=m {
        g = close_step(&g, &table, fixed, step)?;
    }
    Ok(g)
}
