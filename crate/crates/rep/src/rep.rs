use std::sync::Arc;

use tangle_algebra::{Matrix, Permutation, Scalar, StructureAlgebra, TensorElement};
use tangle_elements::ElementMorphism;
use tangle_xc::check_algebra_map;

use crate::RepError;

/// A unital algebra map `ρ: A → End(k^w)`, given on the basis.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<StructureAlgebra>,
    w: usize,
    action: Vec<Matrix>,
}

impl Representation {
    /// Verifies `ρ(1) = Id` and `ρ(e_i)ρ(e_j) = ρ(e_i e_j)` on all basis pairs.
    pub fn new(algebra: Arc<StructureAlgebra>, w: usize, action: Vec<Matrix>) -> Result<Self, RepError> {
        check_algebra_map(&algebra, &action, w)?;
        Ok(Representation { algebra, w, action })
    }

    /// `A` acting on itself by left multiplication.
    pub fn regular(algebra: Arc<StructureAlgebra>) -> Self {
        let d = algebra.dim();
        let action = (0..d).map(|i| algebra.left_mul_matrix(&algebra.basis(i))).collect();
        Representation { algebra, w: d, action }
    }

    /// The defining representation of an algebra whose basis is the matrix
    /// units `E_ab ↦ a·w + b` of `End(k^w)`.
    pub fn matrix_units(algebra: Arc<StructureAlgebra>) -> Result<Self, RepError> {
        let d = algebra.dim();
        let w = (d as f64).sqrt().round() as usize;
        if w * w != d {
            return Err(RepError::NotEndomorphismAlgebra { dim: d, w });
        }
        let action = (0..d)
            .map(|k| Matrix::from_fn(w, w, |r, c| if (r, c) == (k / w, k % w) { Scalar::one() } else { Scalar::zero() }))
            .collect();
        Representation::new(algebra, w, action).map_err(|_| RepError::NotEndomorphismAlgebra { dim: d, w })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` for a single-slot element.
    pub fn act(&self, x: &TensorElement) -> Matrix {
        x.sparse()
            .iter()
            .fold(Matrix::zeros(self.w, self.w), |acc, (k, c)| acc.add(&self.action[*k].scale(c)).expect("same shape"))
    }
}

/// `ρ^{⊗n}(u)` as a `w^n × w^n` matrix, slot 1 the slowest coordinate.
pub fn tensor_matrix(u: &TensorElement, rho: &Representation) -> Result<Matrix, RepError> {
    if u.dim() != rho.algebra.dim() {
        return Err(RepError::DimensionMismatch { expected: rho.algebra.dim(), found: u.dim() });
    }
    let size = rho.w.pow(u.arity() as u32);
    let mut out = Matrix::zeros(size, size);
    for (idx, c) in u.terms() {
        let m = idx.iter().fold(Matrix::identity(1), |acc, &k| acc.kron(&rho.action[k as usize]));
        out = out.add(&m.scale(c)).expect("same shape");
    }
    Ok(out)
}

/// The matrix of `σ_*` on `W^{⊗n}`: the factor in slot `k` moves to slot `σ(k)`.
pub fn permutation_matrix(sigma: &Permutation, w: usize) -> Matrix {
    let n = sigma.size();
    let size = w.pow(n as u32);
    let mut out = Matrix::zeros(size, size);
    let mut digits = vec![0usize; n];
    for col in 0..size {
        let mut rest = col;
        for s in (0..n).rev() {
            digits[s] = rest % w;
            rest /= w;
        }
        let mut moved = vec![0usize; n];
        for (s, &v) in digits.iter().enumerate() {
            moved[sigma.apply(s)] = v;
        }
        let row = moved.iter().fold(0, |acc, &v| acc * w + v);
        out.set(row, col, Scalar::one());
    }
    out
}

/// `ρ_W(u, σ) = σ_* ∘ ρ^{⊗n}(u)`.
pub fn rho_action(f: &ElementMorphism, rho: &Representation) -> Result<Matrix, RepError> {
    let u = tensor_matrix(f.u(), rho)?;
    Ok(&permutation_matrix(f.sigma(), rho.w) * &u)
}

/// `ι_W(Σ f_1⊗…⊗f_n, σ) = σ_* ∘ (f_1⊗…⊗f_n)` for a morphism over `End(k^w)`
/// in the matrix-unit basis.
pub fn iota_action(f: &ElementMorphism, w: usize) -> Result<Matrix, RepError> {
    let d = f.u().dim();
    if d != w * w {
        return Err(RepError::NotEndomorphismAlgebra { dim: d, w });
    }
    let size = w.pow(f.arity() as u32);
    let mut u = Matrix::zeros(size, size);
    for (idx, c) in f.u().terms() {
        let (mut row, mut col) = (0, 0);
        for &k in idx {
            row = row * w + k as usize / w;
            col = col * w + k as usize % w;
        }
        u.add_at(row, col, c);
    }
    Ok(&permutation_matrix(f.sigma(), w) * &u)
}
