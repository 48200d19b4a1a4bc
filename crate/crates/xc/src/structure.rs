//! The `(R, κ, tr)` package and the XC axiom checker.

use std::fmt;
use std::sync::Arc;

use tangle_algebra::{contract_pattern, embed, embed_pair, Scalar, StructureAlgebra, TensorElement};

use crate::{HopfData, XcError};

/// An algebra with invertible `R ∈ A⊗A`, invertible `κ ∈ A` and an optional trace.
#[derive(Clone, Debug)]
pub struct XCStructure {
    algebra: Arc<StructureAlgebra>,
    r: TensorElement,
    r_inv: TensorElement,
    kappa: TensorElement,
    kappa_inv: TensorElement,
    trace: Option<Vec<Scalar>>,
    hopf: Option<Arc<HopfData>>,
}

/// Result of one named exact identity check.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// `lhs − rhs` when the check fails.
    pub witness: Option<TensorElement>,
}

impl AxiomCheck {
    pub fn compare(name: impl Into<String>, lhs: &TensorElement, rhs: &TensorElement) -> Self {
        let passed = lhs == rhs;
        AxiomCheck {
            name: name.into(),
            passed,
            witness: (!passed).then(|| lhs.sub(rhs)),
        }
    }

    /// Merges several comparisons under one name, keeping the first witness.
    pub fn all(name: impl Into<String>, checks: impl IntoIterator<Item = AxiomCheck>) -> Self {
        let mut out = AxiomCheck { name: name.into(), passed: true, witness: None };
        for c in checks {
            if !c.passed && out.passed {
                out.passed = false;
                out.witness = c.witness;
            }
        }
        out
    }
}

/// Per-axiom outcome table.
#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn into_result(self) -> Result<Self, XcError> {
        match self.first_failure() {
            Some(c) => Err(XcError::AxiomFailed { axiom: c.name.clone(), witness: c.witness.clone() }),
            None => Ok(self),
        }
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<28} {}", c.name, if c.passed { "PASS" } else { "FAIL" })?;
        }
        Ok(())
    }
}

fn expect_arity(what: &'static str, t: &TensorElement, arity: usize, dim: usize) -> Result<(), XcError> {
    if t.arity() != arity {
        return Err(XcError::Shape { what, got: t.arity(), expected: arity });
    }
    if t.dim() != dim {
        return Err(tangle_algebra::AlgebraError::AlgebraMismatch(t.dim(), dim).into());
    }
    Ok(())
}

fn check_field(alg: &StructureAlgebra, t: &TensorElement) -> Result<(), XcError> {
    match t.terms().values().find(|c| !alg.field().admits(c)) {
        Some(c) => Err(tangle_algebra::AlgebraError::FieldMismatch(c.to_string()).into()),
        None => Ok(()),
    }
}

impl XCStructure {
    /// Validates shapes, inverse pairs and trace cyclicity. The XC axioms
    /// themselves are checked separately by [`check_xc_axioms`].
    pub fn new(
        algebra: Arc<StructureAlgebra>,
        r: TensorElement,
        r_inv: TensorElement,
        kappa: TensorElement,
        kappa_inv: TensorElement,
        trace: Option<Vec<Scalar>>,
    ) -> Result<Self, XcError> {
        let d = algebra.dim();
        expect_arity("R", &r, 2, d)?;
        expect_arity("R_inv", &r_inv, 2, d)?;
        expect_arity("kappa", &kappa, 1, d)?;
        expect_arity("kappa_inv", &kappa_inv, 1, d)?;
        for t in [&r, &r_inv, &kappa, &kappa_inv] {
            check_field(&algebra, t)?;
        }
        let one2 = TensorElement::one(&algebra, 2);
        if r.mul(&algebra, &r_inv)? != one2 || r_inv.mul(&algebra, &r)? != one2 {
            return Err(XcError::NotInverse("R_inv"));
        }
        let one = algebra.unit();
        if algebra.mul(&kappa, &kappa_inv) != one || algebra.mul(&kappa_inv, &kappa) != one {
            return Err(XcError::NotInverse("kappa_inv"));
        }
        if let Some(tr) = &trace {
            if tr.len() != d {
                return Err(XcError::TraceShape(tr.len(), d));
            }
            if let Some(c) = tr.iter().find(|c| !algebra.field().admits(c)) {
                return Err(tangle_algebra::AlgebraError::FieldMismatch(c.to_string()).into());
            }
            check_trace(&algebra, tr)?;
        }
        Ok(XCStructure { algebra, r, r_inv, kappa, kappa_inv, trace, hopf: None })
    }

    /// The trivial structure `R = 1⊗1`, `κ = 1` on any algebra.
    pub fn trivial_on(algebra: Arc<StructureAlgebra>) -> Self {
        let one2 = TensorElement::one(&algebra, 2);
        let one = algebra.unit();
        XCStructure {
            algebra,
            r: one2.clone(),
            r_inv: one2,
            kappa: one.clone(),
            kappa_inv: one,
            trace: None,
            hopf: None,
        }
    }

    pub fn with_hopf(mut self, hopf: HopfData) -> Self {
        self.hopf = Some(Arc::new(hopf));
        self
    }

    pub fn with_trace(self, trace: Vec<Scalar>) -> Result<Self, XcError> {
        let XCStructure { algebra, r, r_inv, kappa, kappa_inv, hopf, .. } = self;
        let mut out = XCStructure::new(algebra, r, r_inv, kappa, kappa_inv, Some(trace))?;
        out.hopf = hopf;
        Ok(out)
    }

    /// Replaces κ by another invertible element, keeping everything else.
    /// Meant for negative controls; no axiom is rechecked.
    pub fn with_kappa(&self, kappa: TensorElement) -> Result<Self, XcError> {
        let kappa_inv = self.algebra.inverse(&kappa)?;
        XCStructure::new(self.algebra.clone(), self.r.clone(), self.r_inv.clone(), kappa, kappa_inv, self.trace.clone())
    }

    pub fn algebra(&self) -> &StructureAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<StructureAlgebra> {
        &self.algebra
    }

    pub fn r(&self) -> &TensorElement {
        &self.r
    }

    pub fn r_inv(&self) -> &TensorElement {
        &self.r_inv
    }

    pub fn kappa(&self) -> &TensorElement {
        &self.kappa
    }

    pub fn kappa_inv(&self) -> &TensorElement {
        &self.kappa_inv
    }

    pub fn trace(&self) -> Option<&[Scalar]> {
        self.trace.as_deref()
    }

    pub fn hopf(&self) -> Option<&HopfData> {
        self.hopf.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Applies the trace to an arity-1 element.
    pub fn apply_trace(&self, x: &TensorElement) -> Option<Scalar> {
        let tr = self.trace.as_ref()?;
        let mut acc = Scalar::zero();
        for (k, c) in x.sparse() {
            acc += &(&c * &tr[k]);
        }
        Some(acc)
    }
}

fn check_trace(alg: &StructureAlgebra, tr: &[Scalar]) -> Result<(), XcError> {
    let apply = |v: &tangle_algebra::SparseVec| {
        let mut acc = Scalar::zero();
        for (k, c) in v {
            acc += &(c * &tr[*k]);
        }
        acc
    };
    for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            if apply(alg.product(i, j)) != apply(alg.product(j, i)) {
                return Err(XcError::TraceNotCyclic(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// `x_{i_1} ⊗ …` placed by `embed_pair`, multiplied left to right.
fn product(alg: &StructureAlgebra, factors: &[TensorElement]) -> TensorElement {
    let mut it = factors.iter();
    let first = it.next().expect("at least one factor").clone();
    it.fold(first, |acc, f| acc.mul(alg, f).expect("same arity"))
}

fn pair(x: &XCStructure, r: &TensorElement, i: usize, j: usize, n: usize) -> TensorElement {
    embed_pair(&x.algebra, r, i, j, n).expect("valid slots")
}

fn single(x: &XCStructure, k: &TensorElement, i: usize, n: usize) -> TensorElement {
    embed(&x.algebra, k, i, n).expect("valid slot")
}

/// Evaluates (XC0), (XC1f), (XC2c), (XC2d) and (XC3) exactly, contracting
/// term by term instead of materializing the embedded factors.
pub fn check_xc_axioms(x: &XCStructure) -> AxiomReport {
    let a = &*x.algebra;
    let (r, ri, k, ki) = (&x.r, &x.r_inv, &x.kappa, &x.kappa_inv);
    let conj = |t: &TensorElement| {
        contract_pattern(a, &[k, k, t, ki, ki], &[vec![(0, 0), (2, 0), (3, 0)], vec![(1, 0), (2, 1), (4, 0)]])
    };
    let xc0 = AxiomCheck::all(
        "XC0",
        [AxiomCheck::compare("XC0", &conj(r), r), AxiomCheck::compare("XC0", &conj(ri), ri)],
    );
    let (nu_left, nu_right) = nu_both_sides(x);
    let xc1f = AxiomCheck::compare("XC1f", &nu_right, &nu_left);
    // (μ⊗μ^{[3]})(R_15 R⁻¹_23 κ⁻¹_4) = Σ α ᾱ ⊗ β̄ κ⁻¹ β
    let rhs_2c = contract_pattern(a, &[r, ri, ki], &[vec![(0, 0), (1, 0)], vec![(1, 1), (2, 0), (0, 1)]]);
    let xc2c = AxiomCheck::compare("XC2c", &a.unit().tensor(ki), &rhs_2c);
    // (μ^{[3]}⊗μ)(R⁻¹_15 R_34 κ_2) = Σ ᾱ κ α ⊗ β β̄
    let rhs_2d = contract_pattern(a, &[ri, k, r], &[vec![(0, 0), (1, 0), (2, 0)], vec![(2, 1), (0, 1)]]);
    let xc2d = AxiomCheck::compare("XC2d", &k.tensor(&a.unit()), &rhs_2d);
    // factors 0, 1, 2 are R_12, R_13, R_23 on the left and R_23, R_13, R_12 on the right
    let lhs_3 = contract_pattern(a, &[r, r, r], &[vec![(0, 0), (1, 0)], vec![(0, 1), (2, 0)], vec![(1, 1), (2, 1)]]);
    let rhs_3 = contract_pattern(a, &[r, r, r], &[vec![(1, 0), (2, 0)], vec![(0, 0), (2, 1)], vec![(0, 1), (1, 1)]]);
    let xc3 = AxiomCheck::compare("XC3", &lhs_3, &rhs_3);
    AxiomReport { checks: vec![xc0, xc1f, xc2c, xc2d, xc3] }
}

/// The same axioms evaluated literally with `embed_pair` in `A^{⊗5}` and
/// `μ^{[3]}`. Slow for large algebras; used to cross-check [`check_xc_axioms`].
pub fn check_xc_axioms_embedded(x: &XCStructure) -> AxiomReport {
    let a = &*x.algebra;
    let kk = x.kappa.tensor(&x.kappa);
    let kk_inv = x.kappa_inv.tensor(&x.kappa_inv);
    let conj = |r: &TensorElement| product(a, &[kk.clone(), r.clone(), kk_inv.clone()]);
    let xc0 = AxiomCheck::all(
        "XC0",
        [
            AxiomCheck::compare("XC0", &conj(&x.r), &x.r),
            AxiomCheck::compare("XC0", &conj(&x.r_inv), &x.r_inv),
        ],
    );

    let (nu_left, nu_right) = nu_both_sides_embedded(x);
    let xc1f = AxiomCheck::compare("XC1f", &nu_right, &nu_left);

    let lhs_2c = TensorElement::one(a, 1).tensor(&x.kappa_inv);
    let rhs_2c = product(
        a,
        &[pair(x, &x.r, 1, 5, 5), pair(x, &x.r_inv, 2, 3, 5), single(x, &x.kappa_inv, 4, 5)],
    )
    .multiply_groups(a, &[2, 3])
    .expect("arity 5");
    let xc2c = AxiomCheck::compare("XC2c", &lhs_2c, &rhs_2c);

    let lhs_2d = x.kappa.tensor(&TensorElement::one(a, 1));
    let rhs_2d = product(
        a,
        &[pair(x, &x.r_inv, 1, 5, 5), pair(x, &x.r, 3, 4, 5), single(x, &x.kappa, 2, 5)],
    )
    .multiply_groups(a, &[3, 2])
    .expect("arity 5");
    let xc2d = AxiomCheck::compare("XC2d", &lhs_2d, &rhs_2d);

    let r12 = pair(x, &x.r, 1, 2, 3);
    let r13 = pair(x, &x.r, 1, 3, 3);
    let r23 = pair(x, &x.r, 2, 3, 3);
    let xc3 = AxiomCheck::compare(
        "XC3",
        &product(a, &[r12.clone(), r13.clone(), r23.clone()]),
        &product(a, &[r23, r13, r12]),
    );
    AxiomReport { checks: vec![xc0, xc1f, xc2c, xc2d, xc3] }
}

/// `(μ^{[3]}(R_13 κ⁻¹_2), μ^{[3]}(R_31 κ_2))`.
fn nu_both_sides(x: &XCStructure) -> (TensorElement, TensorElement) {
    let a = &*x.algebra;
    let left = contract_pattern(a, &[&x.r, &x.kappa_inv], &[vec![(0, 0), (1, 0), (0, 1)]]);
    let right = contract_pattern(a, &[&x.r, &x.kappa], &[vec![(0, 1), (1, 0), (0, 0)]]);
    (left, right)
}

fn nu_both_sides_embedded(x: &XCStructure) -> (TensorElement, TensorElement) {
    let a = &*x.algebra;
    let left = product(a, &[pair(x, &x.r, 1, 3, 3), single(x, &x.kappa_inv, 2, 3)])
        .multiply_groups(a, &[3])
        .expect("arity 3");
    let right = product(a, &[pair(x, &x.r, 3, 1, 3), single(x, &x.kappa, 2, 3)])
        .multiply_groups(a, &[3])
        .expect("arity 3");
    (left, right)
}

/// `ν = μ^{[3]}(R_13 κ⁻¹_2)`, cross-checked against `μ^{[3]}(R_31 κ_2)`.
pub fn classical_ribbon_inverse(x: &XCStructure) -> Result<TensorElement, XcError> {
    let (left, right) = nu_both_sides(x);
    if left != right {
        return Err(XcError::AxiomFailed { axiom: "XC1f".into(), witness: Some(right.sub(&left)) });
    }
    Ok(left)
}
