//! Finite-dimensional unital algebras given by structure constants.

use std::fmt;

use crate::{AlgebraError, Matrix, Scalar, TensorElement};

/// Sparse vector in the basis: `(index, coefficient)` pairs.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Coefficient ring of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    /// Rationals.
    Q,
    /// Gaussian rationals.
    QI,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::Q => "Q",
            Field::QI => "Q(i)",
        }
    }

    pub fn parse(s: &str) -> Option<Field> {
        match s {
            "Q" => Some(Field::Q),
            "Q(i)" => Some(Field::QI),
            _ => None,
        }
    }

    pub fn admits(self, s: &Scalar) -> bool {
        self == Field::QI || s.is_rational()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureAlgebra {
    name: String,
    field: Field,
    labels: Vec<String>,
    /// `table[a * d + b]` holds `e_a · e_b`.
    table: Vec<SparseVec>,
    unit: SparseVec,
}

/// Outcome of the exhaustive associativity and unit checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    pub dim: usize,
    /// First basis triple `(i, j, k)` (0-based) where associativity fails.
    pub associativity_witness: Option<(usize, usize, usize)>,
    /// First basis index where a unit law fails.
    pub unit_witness: Option<usize>,
}

impl AlgebraReport {
    pub fn passed(&self) -> bool {
        self.associativity_witness.is_none() && self.unit_witness.is_none()
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.associativity_witness {
            None => writeln!(f, "associativity  PASS")?,
            Some((i, j, k)) => writeln!(f, "associativity  FAIL at basis triple ({}, {}, {})", i + 1, j + 1, k + 1)?,
        }
        match self.unit_witness {
            None => write!(f, "unit law       PASS"),
            Some(i) => write!(f, "unit law       FAIL at basis vector {}", i + 1),
        }
    }
}

fn sparse_from(entries: impl IntoIterator<Item = (usize, Scalar)>) -> SparseVec {
    let mut v: Vec<(usize, Scalar)> = Vec::new();
    for (k, c) in entries {
        match v.iter_mut().find(|(j, _)| *j == k) {
            Some((_, x)) => *x += &c,
            None => v.push((k, c)),
        }
    }
    v.retain(|(_, c)| !c.is_zero());
    v.sort_by_key(|(k, _)| *k);
    v
}

impl StructureAlgebra {
    /// Builds and validates an algebra. `mul` lists `(i, j, k, c)` meaning
    /// `e_i·e_j += c e_k` (0-based); `unit` holds dense coordinates of 1.
    pub fn new(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        mul: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: &[Scalar],
    ) -> Result<Self, AlgebraError> {
        let alg = Self::new_unchecked(name, field, labels, mul, unit)?;
        let report = alg.verify();
        if let Some((i, j, k)) = report.associativity_witness {
            return Err(AlgebraError::Invalid(format!(
                "not associative at basis triple ({}, {}, {})",
                i + 1,
                j + 1,
                k + 1
            )));
        }
        if let Some(i) = report.unit_witness {
            return Err(AlgebraError::Invalid(format!("unit law fails at basis vector {}", i + 1)));
        }
        Ok(alg)
    }

    /// Like [`StructureAlgebra::new`] but checks only shapes and the field,
    /// not the algebra laws. Used for negative controls.
    pub fn new_unchecked(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        mul: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
        unit: &[Scalar],
    ) -> Result<Self, AlgebraError> {
        let d = labels.len();
        if d == 0 {
            return Err(AlgebraError::Invalid("dimension must be positive".into()));
        }
        if d > u16::MAX as usize {
            return Err(AlgebraError::Invalid(format!("dimension {d} too large")));
        }
        if unit.len() != d {
            return Err(AlgebraError::Invalid(format!("unit has {} coordinates, expected {d}", unit.len())));
        }
        let mut raw: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); d * d];
        for (i, j, k, c) in mul {
            for index in [i, j, k] {
                if index >= d {
                    return Err(AlgebraError::IndexOutOfRange { index: index + 1, dim: d });
                }
            }
            if !field.admits(&c) {
                return Err(AlgebraError::FieldMismatch(c.to_string()));
            }
            raw[i * d + j].push((k, c));
        }
        if let Some(c) = unit.iter().find(|c| !field.admits(c)) {
            return Err(AlgebraError::FieldMismatch(c.to_string()));
        }
        Ok(StructureAlgebra {
            name: name.into(),
            field,
            labels,
            table: raw.into_iter().map(sparse_from).collect(),
            unit: sparse_from(unit.iter().cloned().enumerate()),
        })
    }

    /// Builds from a product rule `f(i, j) = e_i·e_j` (0-based).
    pub fn from_rule(
        name: impl Into<String>,
        field: Field,
        labels: Vec<String>,
        unit: &[Scalar],
        f: impl Fn(usize, usize) -> SparseVec,
    ) -> Result<Self, AlgebraError> {
        let d = labels.len();
        let mut mul = Vec::new();
        for i in 0..d {
            for j in 0..d {
                mul.extend(f(i, j).into_iter().map(|(k, c)| (i, j, k, c)));
            }
        }
        Self::new(name, field, labels, mul, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `e_a · e_b` as sparse coordinates.
    pub fn product(&self, a: usize, b: usize) -> &SparseVec {
        &self.table[a * self.dim() + b]
    }

    pub fn unit_terms(&self) -> SparseVec {
        self.unit.clone()
    }

    pub fn unit(&self) -> TensorElement {
        TensorElement::from_terms(self.dim(), 1, self.unit.iter().map(|(k, c)| (vec![*k as u16], c.clone())))
    }

    pub fn basis(&self, i: usize) -> TensorElement {
        TensorElement::basis(self.dim(), &[i])
    }

    /// Looks up a basis vector by label.
    pub fn basis_named(&self, label: &str) -> Option<TensorElement> {
        self.labels.iter().position(|l| l == label).map(|i| self.basis(i))
    }

    /// Product of arity-1 elements.
    pub fn mul(&self, x: &TensorElement, y: &TensorElement) -> TensorElement {
        x.mul(self, y).expect("arity-1 elements of this algebra")
    }

    /// Left-nested product of a list of arity-1 elements.
    pub fn mul_all(&self, xs: &[&TensorElement]) -> TensorElement {
        xs.iter().fold(self.unit(), |acc, x| self.mul(&acc, x))
    }

    /// Matrix of left multiplication by `x` in the basis.
    pub fn left_mul_matrix(&self, x: &TensorElement) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (a, c) in x.sparse() {
            for b in 0..d {
                for (k, y) in self.product(a, b) {
                    m.add_at(*k, b, &(&c * y));
                }
            }
        }
        m
    }

    /// Two-sided inverse of `x`, if it exists.
    pub fn inverse(&self, x: &TensorElement) -> Result<TensorElement, AlgebraError> {
        let m = self.left_mul_matrix(x).inverse().ok_or(AlgebraError::NotInvertible)?;
        let y = TensorElement::vector(self.dim(), &m.apply(&self.unit().coords()));
        let one = self.unit();
        if self.mul(x, &y) == one && self.mul(&y, x) == one {
            Ok(y)
        } else {
            Err(AlgebraError::NotInvertible)
        }
    }

    fn mul_sparse(&self, x: &SparseVec, b: usize, right: bool) -> SparseVec {
        let mut out = Vec::new();
        for (a, c) in x {
            let p = if right { self.product(*a, b) } else { self.product(b, *a) };
            out.extend(p.iter().map(|(k, y)| (*k, c * y)));
        }
        sparse_from(out)
    }

    /// Exhaustive associativity and unit-law check over basis triples.
    pub fn verify(&self) -> AlgebraReport {
        let d = self.dim();
        let mut associativity_witness = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for k in 0..d {
                    let left = self.mul_sparse(ij, k, true);
                    let jk = self.product(j, k);
                    let mut right = Vec::new();
                    for (m, c) in jk {
                        right.extend(self.product(i, *m).iter().map(|(e, y)| (*e, c * y)));
                    }
                    if left != sparse_from(right) {
                        associativity_witness = Some((i, j, k));
                        break 'outer;
                    }
                }
            }
        }
        let unit_witness = (0..d).find(|&i| {
            let e = vec![(i, Scalar::one())];
            let mut l = Vec::new();
            let mut r = Vec::new();
            for (u, c) in &self.unit {
                l.extend(self.product(*u, i).iter().map(|(k, y)| (*k, c * y)));
                r.extend(self.product(i, *u).iter().map(|(k, y)| (*k, c * y)));
            }
            sparse_from(l) != e || sparse_from(r) != e
        });
        AlgebraReport { dim: d, associativity_witness, unit_witness }
    }

    /// Replaces one structure constant; for building negative controls.
    pub fn with_corrupted_product(&self, a: usize, b: usize, value: SparseVec) -> Self {
        let mut out = self.clone();
        let d = self.dim();
        out.table[a * d + b] = sparse_from(value);
        out
    }

    /// All structure constants as `(i, j, k, c)`, sorted.
    pub fn constants(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                out.extend(self.product(i, j).iter().map(|(k, c)| (i, j, *k, c.clone())));
            }
        }
        out
    }
}

/// Verifies an algebra; convenience free function.
pub fn verify_algebra(alg: &StructureAlgebra) -> AlgebraReport {
    alg.verify()
}
