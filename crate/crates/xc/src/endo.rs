//! Endomorphism XC-algebras `End(W)` induced by a representation.

use std::sync::Arc;

use tangle_algebra::{Field, Matrix, Scalar, StructureAlgebra, TensorElement};

use crate::{check_xc_axioms, XCStructure, XcError};

/// An XC structure on `End(W)` in the matrix-unit basis `E_ab ↦ a·w + b`.
#[derive(Clone, Debug)]
pub struct EndomorphismXc {
    pub xc: XCStructure,
    pub w: usize,
}

/// `End(k^w)` with matrix units `E_ab`, traced by the matrix trace.
pub fn matrix_unit_algebra(w: usize, field: Field) -> StructureAlgebra {
    let sep = if w >= 10 { "," } else { "" };
    let labels = (0..w * w).map(|k| format!("E{}{sep}{}", k / w + 1, k % w + 1)).collect();
    let unit: Vec<Scalar> = (0..w * w).map(|k| if k / w == k % w { Scalar::one() } else { Scalar::zero() }).collect();
    StructureAlgebra::from_rule(format!("End({w})"), field, labels, &unit, |i, j| {
        let (a, b, c, d) = (i / w, i % w, j / w, j % w);
        if b == c {
            vec![(a * w + d, Scalar::one())]
        } else {
            vec![]
        }
    })
    .expect("matrix units form an algebra")
}

fn matrix_element(m: &Matrix, w: usize) -> Vec<(usize, Scalar)> {
    let mut out = Vec::new();
    for a in 0..w {
        for b in 0..w {
            let c = m.get(a, b);
            if !c.is_zero() {
                out.push((a * w + b, c.clone()));
            }
        }
    }
    out
}

/// Pushes a tensor through `ρ^{⊗n}` into `End(W)^{⊗n}`.
pub fn push_forward(t: &TensorElement, action: &[Matrix], w: usize) -> TensorElement {
    let images: Vec<Vec<(usize, Scalar)>> = action.iter().map(|m| matrix_element(m, w)).collect();
    let mut out = TensorElement::zero(w * w, t.arity());
    for (idx, c) in t.terms() {
        let slots: Vec<Vec<(usize, Scalar)>> = idx.iter().map(|&k| images[k as usize].clone()).collect();
        out = out.add(&TensorElement::product_of_slots(w * w, &slots).scale(c));
    }
    out
}

/// Checks that `action` defines a unital algebra map `A → End(W)`.
pub fn check_algebra_map(alg: &StructureAlgebra, action: &[Matrix], w: usize) -> Result<(), XcError> {
    let d = alg.dim();
    if action.len() != d {
        return Err(XcError::NotAlgebraMap(format!("{} matrices for dimension {d}", action.len())));
    }
    if let Some(k) = action.iter().position(|m| m.rows() != w || m.cols() != w) {
        return Err(XcError::NotAlgebraMap(format!("matrix {} is not {w}×{w}", k + 1)));
    }
    let combine = |v: &[(usize, Scalar)]| {
        v.iter().fold(Matrix::zeros(w, w), |acc, (k, c)| acc.add(&action[*k].scale(c)).expect("same shape"))
    };
    if combine(&alg.unit_terms()) != Matrix::identity(w) {
        return Err(XcError::NotAlgebraMap("ρ(1) ≠ Id".into()));
    }
    for i in 0..d {
        for j in 0..d {
            if &action[i] * &action[j] != combine(alg.product(i, j)) {
                return Err(XcError::NotAlgebraMap(format!(
                    "ρ({})ρ({}) ≠ ρ({}·{})",
                    alg.labels()[i],
                    alg.labels()[j],
                    alg.labels()[i],
                    alg.labels()[j]
                )));
            }
        }
    }
    Ok(())
}

/// `End(W)` with `R' = (ρ⊗ρ)(R)`, `κ' = ρ(κ)` and the matrix trace.
/// The XC axioms of the result are re-verified.
pub fn endomorphism_xc(x: &XCStructure, action: &[Matrix], w: usize) -> Result<EndomorphismXc, XcError> {
    check_algebra_map(x.algebra(), action, w)?;
    let alg = Arc::new(matrix_unit_algebra(w, x.algebra().field()));
    let r = push_forward(x.r(), action, w);
    let r_inv = push_forward(x.r_inv(), action, w);
    let kappa = push_forward(x.kappa(), action, w);
    let kappa_inv = push_forward(x.kappa_inv(), action, w);
    let trace = (0..w * w).map(|k| if k / w == k % w { Scalar::one() } else { Scalar::zero() }).collect();
    let xc = XCStructure::new(alg, r, r_inv, kappa, kappa_inv, Some(trace))?;
    check_xc_axioms(&xc).into_result()?;
    Ok(EndomorphismXc { xc, w })
}

