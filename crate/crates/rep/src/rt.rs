use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use tangle_algebra::{Matrix, Scalar};
use tangle_invariant::bead_invariant;
use tangle_model::{random_tangle, Tangle};
use tangle_xc::{endomorphism_xc, push_forward, XCStructure};

use crate::{iota_action, rho_action, RepError, Representation};

/// Outcome of comparing `ρ_W(Z_A(T))` with `ι_W(Z_{End W}(T))`.
#[derive(Clone, Debug)]
pub struct RtReport {
    pub tangle: String,
    pub path1: Matrix,
    pub path2: Matrix,
    pub digest1: String,
    pub digest2: String,
    /// `(ρ^{⊗n})(Z_A(T)) = Z_{End W}(T)` in `E(End W)`.
    pub prism: bool,
}

impl RtReport {
    pub fn passed(&self) -> bool {
        self.prism && self.path1 == self.path2
    }
}

/// SHA-256 of the matrix shape and its entries in row-major order.
pub fn matrix_digest(m: &Matrix) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}x{}", m.rows(), m.cols()));
    for e in m.entries() {
        h.update(format!(";{e}"));
    }
    hex::encode(h.finalize())
}

/// `A`, `ρ` and the induced traced structure on `End(W)`, built once and
/// reused across tangles.
#[derive(Clone, Debug)]
pub struct RtContext<'a> {
    x: &'a XCStructure,
    rho: &'a Representation,
    /// `A` traced by `tr_W ∘ ρ`, used for tangles with closed components.
    traced: XCStructure,
    end: XCStructure,
}

impl<'a> RtContext<'a> {
    pub fn new(x: &'a XCStructure, rho: &'a Representation) -> Result<Self, RepError> {
        if x.dim() != rho.algebra().dim() {
            return Err(RepError::DimensionMismatch { expected: rho.algebra().dim(), found: x.dim() });
        }
        let end = endomorphism_xc(x, rho.action(), rho.w())?.xc;
        let traced = x.clone().with_trace(rho.action().iter().map(Matrix::trace).collect::<Vec<Scalar>>())?;
        Ok(RtContext { x, rho, traced, end })
    }

    pub fn end(&self) -> &XCStructure {
        &self.end
    }

    /// Computes both RT paths for `t`. Closed components in path 1 are traced
    /// with `tr_W ∘ ρ`, the trace that `End(W)` induces on `A`.
    pub fn check(&self, t: &Tangle) -> Result<RtReport, RepError> {
        let (rho, w) = (self.rho, self.rho.w());
        let a = if t.is_admissible() { self.x } else { &self.traced };
        let z_a = bead_invariant(t, a)?;
        let z_e = bead_invariant(t, &self.end)?;
        let prism = z_a.sigma() == z_e.sigma() && push_forward(z_a.u(), rho.action(), w) == *z_e.u();
        let path1 = rho_action(&z_a, rho)?;
        let path2 = iota_action(&z_e, w)?;
        Ok(RtReport {
            tangle: t.to_string(),
            digest1: matrix_digest(&path1),
            digest2: matrix_digest(&path2),
            path1,
            path2,
            prism,
        })
    }
}

/// One-off [`RtContext::check`].
pub fn rt_cross_check(t: &Tangle, x: &XCStructure, rho: &Representation) -> Result<RtReport, RepError> {
    RtContext::new(x, rho)?.check(t)
}

/// Cross-checks `n` random tangles of width at most 3 with at most 8 slices.
/// Tangle `i` depends only on `seed` and `i`, so the result is independent of
/// the thread count.
pub fn rt_corpus(x: &XCStructure, rho: &Representation, seed: u64, n: usize) -> Result<Vec<RtReport>, RepError> {
    let ctx = RtContext::new(x, rho)?;
    (0..n)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let width = rng.gen_range(1..=3);
            let count = rng.gen_range(0..=8);
            let closure = rng.gen_range(0..width);
            ctx.check(&random_tangle(rng.gen(), width, count, closure))
        })
        .collect()
}
