//! Deterministic move-invariance campaigns.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tangle_elements::ElementMorphism;
use tangle_invariant::bead_invariant;
use tangle_model::{apply_move, enumerate_moves, random_braid, random_tangle, MoveSpec, Tangle};
use tangle_xc::{check_xc_axioms, XCStructure};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FuzzError {
    #[error("structure fails axiom ({0}); campaign not started")]
    Axiom(String),
}

/// Size limits for generated tangles. Evaluation cost grows like `dim^width`,
/// so the 32-dimensional double gets shorter words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SizeCaps {
    pub max_width: usize,
    pub max_slices: usize,
}

impl SizeCaps {
    pub fn for_dim(dim: usize) -> Self {
        match dim {
            0..=16 => SizeCaps { max_width: 3, max_slices: 6 },
            _ => SizeCaps { max_width: 3, max_slices: 5 },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub index: usize,
    pub tangle: String,
    #[serde(rename = "move")]
    pub mv: String,
    /// Shrunk by slice deletion while the same kind of move still fails.
    pub witness_tangle: String,
    pub witness_move: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzReport {
    pub format: u32,
    pub algebra: String,
    pub seed: u64,
    pub campaign_size: usize,
    pub caps: SizeCaps,
    pub comparisons: usize,
    pub per_move: BTreeMap<String, usize>,
    pub failures: Vec<FuzzFailure>,
    pub wall_ms: u128,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Everything but the wall time; identical for identical inputs.
    pub fn body(&self) -> String {
        let mut out = format!(
            "fuzz algebra={} seed={} tangles={} max_width={} max_slices={}\n",
            self.algebra, self.seed, self.campaign_size, self.caps.max_width, self.caps.max_slices
        );
        for (name, n) in &self.per_move {
            out += &format!("  {name:<4} {n}\n");
        }
        out += &format!("comparisons={} failures={}\n", self.comparisons, self.failures.len());
        for f in &self.failures {
            out += &format!(
                "FAIL #{} {} on {}\n  witness: {} on {}\n",
                f.index, f.mv, f.tangle, f.witness_move, f.witness_tangle
            );
        }
        out += if self.passed() { "PASS\n" } else { "FAIL\n" };
        out
    }

    pub fn to_text(&self) -> String {
        format!("{}wall_ms={}\n", self.body(), self.wall_ms)
    }
}

/// Tangle `index` of the campaign; a braid word for odd draws so that Markov
/// moves get exercised.
pub fn campaign_tangle(seed: u64, index: usize, caps: SizeCaps) -> Tangle {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let width = rng.gen_range(1..=caps.max_width);
    let count = rng.gen_range(0..=caps.max_slices);
    let closure = rng.gen_range(0..width);
    let s: u64 = rng.gen();
    if rng.gen_bool(0.5) {
        random_braid(s, width, count, closure)
    } else {
        random_tangle(s, width, count, closure)
    }
}

type Value = Option<ElementMorphism>;

fn value(t: &Tangle, x: &XCStructure) -> Value {
    bead_invariant(t, x).ok()
}

/// Whether `mv` applies to `t` and changes its invariant.
fn breaks(t: &Tangle, mv: &MoveSpec, x: &XCStructure) -> bool {
    match apply_move(t, mv) {
        Ok(moved) => value(&moved, x) != value(t, x),
        Err(_) => false,
    }
}

fn shrink(t: &Tangle, mv: &MoveSpec, x: &XCStructure) -> (Tangle, MoveSpec) {
    let (mut t, mut mv) = (t.clone(), mv.clone());
    'outer: loop {
        for k in 0..t.slices().len() {
            let mut slices = t.slices().to_vec();
            slices.remove(k);
            let Ok(smaller) = t.with_slices(slices) else { continue };
            if let Some(m) = enumerate_moves(&smaller).into_iter().find(|m| m.name() == mv.name() && breaks(&smaller, m, x)) {
                (t, mv) = (smaller, m);
                continue 'outer;
            }
        }
        return (t, mv);
    }
}

struct TangleOutcome {
    counts: BTreeMap<String, usize>,
    comparisons: usize,
    failures: Vec<FuzzFailure>,
}

fn run_one(x: &XCStructure, seed: u64, index: usize, caps: SizeCaps) -> TangleOutcome {
    let t = campaign_tangle(seed, index, caps);
    let z = value(&t, x);
    let mut out = TangleOutcome { counts: BTreeMap::new(), comparisons: 0, failures: Vec::new() };
    for mv in enumerate_moves(&t) {
        let Ok(moved) = apply_move(&t, &mv) else { continue };
        *out.counts.entry(mv.name().to_string()).or_default() += 1;
        out.comparisons += 1;
        if value(&moved, x) != z {
            let (wt, wm) = shrink(&t, &mv, x);
            out.failures.push(FuzzFailure {
                index,
                tangle: t.to_string(),
                mv: mv.to_string(),
                witness_tangle: wt.to_string(),
                witness_move: wm.to_string(),
            });
        }
    }
    out
}

/// Runs `count` tangles through every applicable move. Refuses to start when
/// the structure fails an XC axiom. Results are merged in index order, so the
/// report body does not depend on the thread count.
pub fn run_fuzz(x: &XCStructure, name: &str, seed: u64, count: usize) -> Result<FuzzReport, FuzzError> {
    run_fuzz_with(x, name, seed, count, SizeCaps::for_dim(x.dim()))
}

pub fn run_fuzz_with(x: &XCStructure, name: &str, seed: u64, count: usize, caps: SizeCaps) -> Result<FuzzReport, FuzzError> {
    if let Some(c) = check_xc_axioms(x).first_failure() {
        return Err(FuzzError::Axiom(c.name.clone()));
    }
    let start = Instant::now();
    let outcomes: Vec<TangleOutcome> = (0..count).into_par_iter().map(|i| run_one(x, seed, i, caps)).collect();
    let mut report = FuzzReport {
        format: 1,
        algebra: name.to_string(),
        seed,
        campaign_size: count,
        caps,
        comparisons: 0,
        per_move: BTreeMap::new(),
        failures: Vec::new(),
        wall_ms: 0,
    };
    for o in outcomes {
        for (k, n) in o.counts {
            *report.per_move.entry(k).or_default() += n;
        }
        report.comparisons += o.comparisons;
        report.failures.extend(o.failures);
    }
    report.wall_ms = start.elapsed().as_millis();
    Ok(report)
}
