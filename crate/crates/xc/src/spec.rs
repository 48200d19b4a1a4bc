//! JSON XC-spec: the algebra spec plus `R`, `R_inv`, `kappa`, `kappa_inv`,
//! an optional trace and an optional Hopf block.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use tangle_algebra::spec::{tensor_to_terms, terms_to_tensor, AlgebraSpec, TermList};
use tangle_algebra::{Scalar, TensorElement};

use crate::{HopfData, XCStructure, XcError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XcSpec {
    #[serde(flatten)]
    pub algebra: AlgebraSpec,
    #[serde(rename = "R")]
    pub r: TermList,
    #[serde(rename = "R_inv")]
    pub r_inv: TermList,
    pub kappa: TermList,
    pub kappa_inv: TermList,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Scalar>>,
    /// `Δ(e_j)` per basis vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comul: Option<Vec<TermList>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Scalar>>,
    /// `S(e_j)` per basis vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<TermList>>,
}

impl XcSpec {
    pub fn from_xc(x: &XCStructure) -> Self {
        let hopf = x.hopf();
        XcSpec {
            algebra: AlgebraSpec::from_algebra(x.algebra()),
            r: tensor_to_terms(x.r()),
            r_inv: tensor_to_terms(x.r_inv()),
            kappa: tensor_to_terms(x.kappa()),
            kappa_inv: tensor_to_terms(x.kappa_inv()),
            trace: x.trace().map(<[Scalar]>::to_vec),
            comul: hopf.map(|h| h.comul_images().iter().map(tensor_to_terms).collect()),
            counit: hopf.map(|h| h.counit().to_vec()),
            antipode: hopf.map(|h| h.antipode_images().iter().map(tensor_to_terms).collect()),
        }
    }

    pub fn to_xc(&self) -> Result<XCStructure, XcError> {
        let alg = Arc::new(self.algebra.to_algebra()?);
        let d = alg.dim();
        let t = |terms: &TermList, arity| terms_to_tensor(d, arity, terms);
        let x = XCStructure::new(
            alg.clone(),
            t(&self.r, 2)?,
            t(&self.r_inv, 2)?,
            t(&self.kappa, 1)?,
            t(&self.kappa_inv, 1)?,
            self.trace.clone(),
        )?;
        match (&self.comul, &self.counit, &self.antipode) {
            (None, None, None) => Ok(x),
            (Some(comul), Some(counit), Some(antipode)) => {
                let comul = comul.iter().map(|c| t(c, 2)).collect::<Result<Vec<TensorElement>, _>>()?;
                let antipode = antipode.iter().map(|c| t(c, 1)).collect::<Result<Vec<TensorElement>, _>>()?;
                Ok(x.with_hopf(HopfData::new(alg, comul, counit.clone(), antipode)?))
            }
            _ => Err(XcError::Json("Hopf block needs all of comul, counit and antipode".into())),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, XcError> {
        serde_json::from_str(text).map_err(|e| XcError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}
