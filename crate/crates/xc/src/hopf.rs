//! Hopf algebra data and the ribbon-derived elements.

use std::sync::Arc;

use tangle_algebra::{embed_pair, Matrix, Scalar, StructureAlgebra, TensorElement};

use crate::{classical_ribbon_inverse, AxiomCheck, AxiomReport, XCStructure, XcError};

/// `(Δ, ε, S, S⁻¹)` on a structure-constant algebra, stored densely.
#[derive(Clone, Debug)]
pub struct HopfData {
    algebra: Arc<StructureAlgebra>,
    /// Column `j` holds the coordinates of `Δ(e_j)` (row `a·d + b`).
    comul: Matrix,
    counit: Vec<Scalar>,
    /// Column `j` holds `S(e_j)`.
    antipode: Matrix,
    antipode_inv: Matrix,
    comul_images: Vec<TensorElement>,
    antipode_images: Vec<TensorElement>,
    antipode_inv_images: Vec<TensorElement>,
    counit_images: Vec<TensorElement>,
}

fn columns_to_images(m: &Matrix, dim: usize, arity: usize) -> Vec<TensorElement> {
    (0..m.cols())
        .map(|j| {
            let terms = (0..m.rows()).filter(|&r| !m.get(r, j).is_zero()).map(|r| {
                let idx = if arity == 2 { vec![(r / dim) as u16, (r % dim) as u16] } else { vec![r as u16] };
                (idx, m.get(r, j).clone())
            });
            TensorElement::from_terms(dim, arity, terms)
        })
        .collect()
}

fn images_to_columns(images: &[TensorElement], rows: usize) -> Matrix {
    let d = images.len();
    let mut m = Matrix::zeros(rows, d);
    for (j, t) in images.iter().enumerate() {
        for (idx, c) in t.terms() {
            let r = idx.iter().fold(0usize, |acc, &k| acc * d + k as usize);
            m.set(r, j, c.clone());
        }
    }
    m
}

impl HopfData {
    /// Builds from per-basis images and checks the Hopf axioms.
    pub fn new(
        algebra: Arc<StructureAlgebra>,
        comul: Vec<TensorElement>,
        counit: Vec<Scalar>,
        antipode: Vec<TensorElement>,
    ) -> Result<Self, XcError> {
        let h = Self::new_unchecked(algebra, comul, counit, antipode)?;
        h.verify().into_result()?;
        Ok(h)
    }

    /// Shape checks only.
    pub fn new_unchecked(
        algebra: Arc<StructureAlgebra>,
        comul: Vec<TensorElement>,
        counit: Vec<Scalar>,
        antipode: Vec<TensorElement>,
    ) -> Result<Self, XcError> {
        let d = algebra.dim();
        for (what, v, arity) in [("comul", &comul, 2usize), ("antipode", &antipode, 1)] {
            if v.len() != d {
                return Err(XcError::Shape { what, got: v.len(), expected: d });
            }
            if let Some(t) = v.iter().find(|t| t.arity() != arity || t.dim() != d) {
                return Err(XcError::Shape { what, got: t.arity(), expected: arity });
            }
        }
        if counit.len() != d {
            return Err(XcError::Shape { what: "counit", got: counit.len(), expected: d });
        }
        let comul_m = images_to_columns(&comul, d * d);
        let antipode_m = images_to_columns(&antipode, d);
        let antipode_inv = antipode_m.inverse().ok_or(XcError::NotInverse("antipode"))?;
        let antipode_inv_images = columns_to_images(&antipode_inv, d, 1);
        let counit_images = counit.iter().map(|c| TensorElement::scalar(d, c.clone())).collect();
        Ok(HopfData {
            algebra,
            comul: comul_m,
            counit,
            antipode: antipode_m,
            antipode_inv,
            comul_images: comul,
            antipode_images: antipode,
            antipode_inv_images,
            counit_images,
        })
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn comul_matrix(&self) -> &Matrix {
        &self.comul
    }

    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn antipode_inv_matrix(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn comul_images(&self) -> &[TensorElement] {
        &self.comul_images
    }

    pub fn antipode_images(&self) -> &[TensorElement] {
        &self.antipode_images
    }

    /// `Δ` applied to slot `k` (0-based).
    pub fn delta_at(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.apply_slot(k, &self.comul_images)
    }

    /// `S` applied to slot `k`.
    pub fn s_at(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.apply_slot(k, &self.antipode_images)
    }

    pub fn s_inv_at(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.apply_slot(k, &self.antipode_inv_images)
    }

    /// `ε` applied to slot `k`, dropping it.
    pub fn eps_at(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.apply_slot(k, &self.counit_images)
    }

    pub fn delta(&self, x: &TensorElement) -> TensorElement {
        self.delta_at(x, 0)
    }

    pub fn s(&self, x: &TensorElement) -> TensorElement {
        self.s_at(x, 0)
    }

    pub fn eps(&self, x: &TensorElement) -> Scalar {
        self.eps_at(x, 0).as_scalar().expect("arity 0")
    }

    /// Coassociativity, counit, antipode, multiplicativity and `S∘S⁻¹ = Id`.
    pub fn verify(&self) -> AxiomReport {
        let a = &*self.algebra;
        let d = a.dim();
        let basis: Vec<TensorElement> = (0..d).map(|i| a.basis(i)).collect();
        let one = a.unit();
        let mut coassoc = Vec::new();
        let mut counit = Vec::new();
        let mut antipode = Vec::new();
        let mut s_inv = Vec::new();
        for e in &basis {
            let de = self.delta(e);
            coassoc.push(AxiomCheck::compare("", &self.delta_at(&de, 0), &self.delta_at(&de, 1)));
            counit.push(AxiomCheck::compare("", &self.eps_at(&de, 0), e));
            counit.push(AxiomCheck::compare("", &self.eps_at(&de, 1), e));
            let unit_eps = one.scale(&self.eps(e));
            let m = |t: TensorElement| t.multiply_groups(a, &[2]).expect("arity 2");
            antipode.push(AxiomCheck::compare("", &m(self.s_at(&de, 0)), &unit_eps));
            antipode.push(AxiomCheck::compare("", &m(self.s_at(&de, 1)), &unit_eps));
            s_inv.push(AxiomCheck::compare("", &self.s(&self.s_inv_at(e, 0)), e));
        }
        let mut delta_mult = vec![AxiomCheck::compare("", &self.delta(&one), &TensorElement::one(a, 2))];
        let mut eps_mult = vec![AxiomCheck::compare(
            "",
            &TensorElement::scalar(d, self.eps(&one)),
            &TensorElement::scalar(d, Scalar::one()),
        )];
        let deltas: Vec<TensorElement> = basis.iter().map(|e| self.delta(e)).collect();
        for i in 0..d {
            for j in 0..d {
                let ij = a.mul(&basis[i], &basis[j]);
                let prod = deltas[i].mul(a, &deltas[j]).expect("arity 2");
                delta_mult.push(AxiomCheck::compare("", &self.delta(&ij), &prod));
                let lhs = TensorElement::scalar(d, self.eps(&ij));
                let rhs = TensorElement::scalar(d, &self.counit[i] * &self.counit[j]);
                eps_mult.push(AxiomCheck::compare("", &lhs, &rhs));
            }
        }
        AxiomReport {
            checks: vec![
                AxiomCheck::all("coassociativity", coassoc),
                AxiomCheck::all("counit", counit),
                AxiomCheck::all("antipode", antipode),
                AxiomCheck::all("comul multiplicative", delta_mult),
                AxiomCheck::all("counit multiplicative", eps_mult),
                AxiomCheck::all("S∘S_inv = Id", s_inv),
            ],
        }
    }
}

/// Drinfeld element, ribbon element and their inverses, plus the induced XC structure.
#[derive(Clone, Debug)]
pub struct RibbonDerived {
    pub u: TensorElement,
    pub u_inv: TensorElement,
    pub v: TensorElement,
    pub v_inv: TensorElement,
    pub nu: TensorElement,
    pub report: AxiomReport,
    pub xc: XCStructure,
}

/// Computes `u, u⁻¹, v, ν` and checks the quasitriangular, ribbon and
/// balancing identities. Fails with the first failing identity.
pub fn derive_ribbon(h: &HopfData, r: &TensorElement, kappa: &TensorElement) -> Result<RibbonDerived, XcError> {
    let derived = ribbon_report(h, r, kappa)?;
    derived.report.clone().into_result()?;
    Ok(derived)
}

/// Like [`derive_ribbon`] but returns the full report even when identities fail.
/// Errors only when `R` or `κ` is not invertible.
pub fn ribbon_report(h: &HopfData, r: &TensorElement, kappa: &TensorElement) -> Result<RibbonDerived, XcError> {
    let alg = h.algebra.clone();
    let a = &*alg;
    let d = a.dim();
    let one = a.unit();
    let one2 = TensorElement::one(a, 2);
    let m2 = |t: &TensorElement| t.multiply_groups(a, &[2]).expect("arity 2");
    let pair = |t: &TensorElement, i, j, n| embed_pair(a, t, i, j, n).expect("slots");
    let mul = |x: &TensorElement, y: &TensorElement| x.mul(a, y).expect("same arity");

    let mut checks = Vec::new();
    // (S⊗Id)R is the candidate inverse
    let r_inv = h.s_at(r, 0);
    let inverse_ok = mul(r, &r_inv) == one2 && mul(&r_inv, r) == one2;
    checks.push(AxiomCheck::compare("(S⊗Id)R = R⁻¹", &mul(r, &r_inv), &one2));
    if !inverse_ok {
        return Err(XcError::AxiomFailed { axiom: "(S⊗Id)R = R⁻¹".into(), witness: Some(mul(r, &r_inv).sub(&one2)) });
    }
    let kappa_inv = a.inverse(kappa)?;

    let u = m2(&h.s_at(r, 1).flip());
    let u_inv = m2(&h.s_at(&h.s_at(r, 0), 0).flip());
    checks.push(AxiomCheck::all(
        "u·u⁻¹ = 1",
        [
            AxiomCheck::compare("", &a.mul(&u, &u_inv), &one),
            AxiomCheck::compare("", &a.mul(&u_inv, &u), &one),
        ],
    ));
    let v = a.mul(&kappa_inv, &u);
    let v_inv = a.inverse(&v).unwrap_or_else(|_| TensorElement::zero(d, 1));

    let r12 = pair(r, 1, 2, 3);
    let r13 = pair(r, 1, 3, 3);
    let r23 = pair(r, 2, 3, 3);
    checks.push(AxiomCheck::compare("QT1", &h.delta_at(r, 0), &mul(&r13, &r23)));
    checks.push(AxiomCheck::compare("QT2", &h.delta_at(r, 1), &mul(&r13, &r12)));
    checks.push(AxiomCheck::all(
        "QT3",
        (0..d).map(|i| {
            let de = h.delta(&a.basis(i));
            AxiomCheck::compare("", &mul(&de.flip(), r), &mul(r, &de))
        }),
    ));
    checks.push(AxiomCheck::compare("(S⊗S)R = R", &h.s_at(&h.s_at(r, 0), 1), r));
    checks.push(AxiomCheck::compare("(S⊗S)R⁻¹ = R⁻¹", &h.s_at(&h.s_at(&r_inv, 0), 1), &r_inv));

    let kappa2 = a.mul(kappa, kappa);
    checks.push(AxiomCheck::compare("R1", &kappa2, &a.mul(&u, &h.s(&u_inv))));
    checks.push(AxiomCheck::compare("R2", &h.delta(kappa), &kappa.tensor(kappa)));
    checks.push(AxiomCheck::all(
        "R3",
        (0..d).map(|i| {
            let e = a.basis(i);
            AxiomCheck::compare("", &h.s(&h.s(&e)), &a.mul_all(&[kappa, &e, &kappa_inv]))
        }),
    ));

    checks.push(AxiomCheck::all(
        "v central",
        (0..d).map(|i| {
            let e = a.basis(i);
            AxiomCheck::compare("", &a.mul(&v, &e), &a.mul(&e, &v))
        }),
    ));
    checks.push(AxiomCheck::compare("v² = uS(u)", &a.mul(&v, &v), &a.mul(&u, &h.s(&u))));
    // (R21 R)⁻¹ = R⁻¹ R21⁻¹
    let monodromy_inv = mul(&r_inv, &r_inv.flip());
    checks.push(AxiomCheck::compare("Δ(v) = (R21R)⁻¹(v⊗v)", &h.delta(&v), &mul(&monodromy_inv, &v.tensor(&v))));
    checks.push(AxiomCheck::compare(
        "ε(v) = 1",
        &TensorElement::scalar(d, h.eps(&v)),
        &TensorElement::scalar(d, Scalar::one()),
    ));
    checks.push(AxiomCheck::compare("S(v) = v", &h.s(&v), &v));

    let xc = XCStructure::new(alg.clone(), r.clone(), r_inv, kappa.clone(), kappa_inv, None)?.with_hopf(h.clone());
    let nu = match classical_ribbon_inverse(&xc) {
        Ok(nu) => nu,
        Err(_) => TensorElement::zero(d, 1),
    };
    checks.push(AxiomCheck::compare("ν·v = 1", &a.mul(&nu, &v), &one));

    Ok(RibbonDerived { u, u_inv, v, v_inv, nu, report: AxiomReport { checks }, xc })
}
