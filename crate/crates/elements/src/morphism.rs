//! Morphisms `(u, σ) ∈ A^{⊗n} × 𝔖_n` of the category of elements.

use std::fmt;

use serde::{Deserialize, Serialize};
use tangle_algebra::spec::{check_format, tensor_to_terms, terms_to_tensor, TermList, FORMAT_VERSION};
use tangle_algebra::{sigma_star, Permutation, Scalar, StructureAlgebra, TensorElement};
use tangle_xc::{classical_ribbon_inverse, XCStructure};

use crate::ElementsError;

/// `(u, σ)` with `u` of arity `n = |σ|`. Composition `f.compose(g)` is `f·g`:
/// `g` is applied first, as when `g` is stacked below `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementMorphism {
    u: TensorElement,
    sigma: Permutation,
}

impl ElementMorphism {
    pub fn new(u: TensorElement, sigma: Permutation) -> Result<Self, ElementsError> {
        if u.arity() != sigma.size() {
            return Err(ElementsError::ArityMismatch(u.arity(), sigma.size()));
        }
        Ok(ElementMorphism { u, sigma })
    }

    /// `(1^{⊗n}, id)`.
    pub fn identity(alg: &StructureAlgebra, n: usize) -> Self {
        ElementMorphism { u: TensorElement::one(alg, n), sigma: Permutation::identity(n) }
    }

    /// An arity-0 morphism carrying a bare scalar.
    pub fn scalar(alg: &StructureAlgebra, s: Scalar) -> Self {
        ElementMorphism { u: TensorElement::scalar(alg.dim(), s), sigma: Permutation::identity(0) }
    }

    /// `(x, id)` for an element `x` of arity `n`.
    pub fn element(x: TensorElement) -> Self {
        let n = x.arity();
        ElementMorphism { u: x, sigma: Permutation::identity(n) }
    }

    pub fn arity(&self) -> usize {
        self.sigma.size()
    }

    pub fn u(&self) -> &TensorElement {
        &self.u
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn into_parts(self) -> (TensorElement, Permutation) {
        (self.u, self.sigma)
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        self.u.as_scalar()
    }

    /// `(u, σ)·(v, τ) = (τ⁻¹_*(u)·v, στ)`.
    pub fn compose(&self, alg: &StructureAlgebra, g: &ElementMorphism) -> Result<Self, ElementsError> {
        if self.arity() != g.arity() {
            return Err(ElementsError::ArityMismatch(self.arity(), g.arity()));
        }
        let moved = sigma_star(&g.sigma.inverse(), &self.u)?;
        Ok(ElementMorphism { u: moved.mul(alg, &g.u)?, sigma: self.sigma.compose(&g.sigma)? })
    }

    /// `(u ⊗ v, σ ⊗ ξ)`.
    pub fn monoidal(&self, g: &ElementMorphism) -> Self {
        ElementMorphism { u: self.u.tensor(&g.u), sigma: self.sigma.block(&g.sigma) }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&MorphismJson::from(self)).expect("morphism serializes")
    }

    pub fn from_json(dim: usize, text: &str) -> Result<Self, ElementsError> {
        let j: MorphismJson = serde_json::from_str(text).map_err(|e| ElementsError::Json(e.to_string()))?;
        j.into_morphism(dim)
    }

    /// Renders with basis labels, e.g. `(s⊗w)·2/1 ; sigma=[2,1]`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Labeled { f: self, labels }
    }
}

struct Labeled<'a> {
    f: &'a ElementMorphism,
    labels: &'a [String],
}

impl fmt::Display for Labeled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; sigma={}", self.f.u.display_with(self.labels), self.f.sigma)
    }
}

/// Interchange form; indices and permutation images are 1-based.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismJson {
    pub format: u32,
    pub arity: usize,
    pub sigma: Vec<usize>,
    pub u: TermList,
}

impl From<&ElementMorphism> for MorphismJson {
    fn from(f: &ElementMorphism) -> Self {
        MorphismJson { format: FORMAT_VERSION, arity: f.arity(), sigma: f.sigma.one_based(), u: tensor_to_terms(&f.u) }
    }
}

impl MorphismJson {
    pub fn into_morphism(self, dim: usize) -> Result<ElementMorphism, ElementsError> {
        check_format(self.format)?;
        let sigma = Permutation::from_one_based(&self.sigma)?;
        ElementMorphism::new(terms_to_tensor(dim, self.arity, &self.u)?, sigma)
    }
}

/// `τ_{1,1} = (R, (12))`.
pub fn crossing(x: &XCStructure) -> ElementMorphism {
    ElementMorphism { u: x.r().clone(), sigma: Permutation::transposition(2, 0, 1) }
}

/// `τ_{1,1}⁻¹ = (R̄_{21}, (12))`.
pub fn crossing_inverse(x: &XCStructure) -> ElementMorphism {
    ElementMorphism { u: x.r_inv().flip(), sigma: Permutation::transposition(2, 0, 1) }
}

/// `τ_{n,m}`: the first `n` strands pass over the last `m`, by the hexagon
/// recursion from `τ_{1,1}`.
pub fn braiding(x: &XCStructure, n: usize, m: usize) -> ElementMorphism {
    let a = x.algebra();
    let id = |k| ElementMorphism::identity(a, k);
    if n == 0 || m == 0 {
        return id(n + m);
    }
    if n == 1 && m == 1 {
        return crossing(x);
    }
    let compose = |f: ElementMorphism, g: ElementMorphism| f.compose(a, &g).expect("arities agree");
    if n == 1 {
        // τ_{1,1+k} = (id_1 ⊗ τ_{1,k}) ∘ (τ_{1,1} ⊗ id_k)
        let k = m - 1;
        return compose(id(1).monoidal(&braiding(x, 1, k)), crossing(x).monoidal(&id(k)));
    }
    // τ_{1+k,m} = (τ_{1,m} ⊗ id_k) ∘ (id_1 ⊗ τ_{k,m})
    let k = n - 1;
    compose(braiding(x, 1, m).monoidal(&id(k)), id(1).monoidal(&braiding(x, k, m)))
}

/// `θ_1 = (ν, id)` with `ν` read off from the structure.
pub fn twist_one(x: &XCStructure) -> Result<ElementMorphism, ElementsError> {
    Ok(ElementMorphism::element(classical_ribbon_inverse(x)?))
}

/// `θ_0 = 1`, `θ_{n+1} = (θ_n ⊗ θ_1) ∘ τ_{1,n} ∘ τ_{n,1}`.
pub fn twist(x: &XCStructure, n: usize) -> Result<ElementMorphism, ElementsError> {
    let a = x.algebra();
    let t1 = twist_one(x)?;
    let mut t = ElementMorphism::identity(a, 0);
    for k in 0..n {
        let tt = braiding(x, 1, k).compose(a, &braiding(x, k, 1))?;
        t = t.monoidal(&t1).compose(a, &tt)?;
    }
    Ok(t)
}

/// `θ_n⁻¹`, from `ν⁻¹` and the inverse braidings.
pub fn twist_inverse(x: &XCStructure, n: usize) -> Result<ElementMorphism, ElementsError> {
    let a = x.algebra();
    let nu_inv = a.inverse(&classical_ribbon_inverse(x)?)?;
    let t1 = ElementMorphism::element(nu_inv);
    let mut t = ElementMorphism::identity(a, 0);
    for k in 0..n {
        // (τ_{1,k} τ_{k,1})⁻¹ = τ_{k,1}⁻¹ τ_{1,k}⁻¹
        let inv = braiding_inverse(x, k, 1).compose(a, &braiding_inverse(x, 1, k))?;
        t = inv.compose(a, &t.monoidal(&t1))?;
    }
    Ok(t)
}

/// `τ_{n,m}⁻¹`, by the same recursion on `τ_{1,1}⁻¹`.
pub fn braiding_inverse(x: &XCStructure, n: usize, m: usize) -> ElementMorphism {
    let a = x.algebra();
    let id = |k| ElementMorphism::identity(a, k);
    if n == 0 || m == 0 {
        return id(n + m);
    }
    if n == 1 && m == 1 {
        return crossing_inverse(x);
    }
    let compose = |f: ElementMorphism, g: ElementMorphism| f.compose(a, &g).expect("arities agree");
    if n == 1 {
        let k = m - 1;
        return compose(crossing_inverse(x).monoidal(&id(k)), id(1).monoidal(&braiding_inverse(x, 1, k)));
    }
    let k = n - 1;
    compose(id(1).monoidal(&braiding_inverse(x, k, m)), braiding_inverse(x, 1, m).monoidal(&id(k)))
}
