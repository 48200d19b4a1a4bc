//! JSON algebra-spec format. Basis indices are 1-based on the wire.

use serde::{Deserialize, Serialize};

use crate::{AlgebraError, Field, Scalar, StructureAlgebra, TensorElement};

pub const FORMAT_VERSION: u32 = 1;

/// Sparse tensor on the wire: `[[indices...], "scalar"]`, indices 1-based.
pub type TermList = Vec<(Vec<usize>, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub format: u32,
    pub name: String,
    pub scalars: String,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    /// `[i, j, k, c]`: `e_i·e_j` has coefficient `c` on `e_k`.
    pub mul: Vec<(usize, usize, usize, Scalar)>,
}

pub fn check_format(format: u32) -> Result<(), AlgebraError> {
    if format != FORMAT_VERSION {
        return Err(AlgebraError::Json(format!("unsupported format {format}, expected {FORMAT_VERSION}")));
    }
    Ok(())
}

impl AlgebraSpec {
    pub fn from_algebra(alg: &StructureAlgebra) -> Self {
        AlgebraSpec {
            format: FORMAT_VERSION,
            name: alg.name().to_string(),
            scalars: alg.field().name().to_string(),
            basis: alg.labels().to_vec(),
            unit: alg.unit().coords(),
            mul: alg.constants().into_iter().map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c)).collect(),
        }
    }

    pub fn to_algebra(&self) -> Result<StructureAlgebra, AlgebraError> {
        check_format(self.format)?;
        let field = Field::parse(&self.scalars)
            .ok_or_else(|| AlgebraError::Json(format!("unknown scalars {:?}, expected Q or Q(i)", self.scalars)))?;
        let d = self.basis.len();
        let mut mul = Vec::with_capacity(self.mul.len());
        for (i, j, k, c) in &self.mul {
            for &x in [i, j, k].iter() {
                if *x == 0 || *x > d {
                    return Err(AlgebraError::IndexOutOfRange { index: *x, dim: d });
                }
            }
            mul.push((i - 1, j - 1, k - 1, c.clone()));
        }
        StructureAlgebra::new(self.name.clone(), field, self.basis.clone(), mul, &self.unit)
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

pub fn tensor_to_terms(t: &TensorElement) -> TermList {
    t.terms().iter().map(|(idx, c)| (idx.iter().map(|&k| k as usize + 1).collect(), c.clone())).collect()
}

pub fn terms_to_tensor(dim: usize, arity: usize, terms: &TermList) -> Result<TensorElement, AlgebraError> {
    let mut out = Vec::with_capacity(terms.len());
    for (idx, c) in terms {
        if idx.len() != arity {
            return Err(AlgebraError::ArityMismatch(idx.len(), arity));
        }
        let mut k = Vec::with_capacity(arity);
        for &x in idx {
            if x == 0 || x > dim {
                return Err(AlgebraError::IndexOutOfRange { index: x, dim });
            }
            k.push((x - 1) as u16);
        }
        out.push((k, c.clone()));
    }
    Ok(TensorElement::from_terms(dim, arity, out))
}
