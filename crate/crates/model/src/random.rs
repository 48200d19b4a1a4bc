use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Gen, Slice, Tangle};

/// Resampling budget before the closure is dropped.
pub const MAX_RETRIES: usize = 256;

fn sample(rng: &mut ChaCha8Rng, width: usize, count: usize, rotations: bool) -> Vec<Slice> {
    let mut gens = Vec::new();
    if width >= 2 {
        gens.extend([Gen::X, Gen::Xneg]);
    }
    if rotations {
        gens.extend([Gen::C, Gen::Cneg]);
    }
    if gens.is_empty() {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let gen = gens[rng.gen_range(0..gens.len())];
            let hi = if gen.is_crossing() { width - 1 } else { width };
            Slice::new(gen, rng.gen_range(1..=hi))
        })
        .collect()
}

fn generate(seed: u64, width: usize, count: usize, closure: usize, rotations: bool) -> Tangle {
    let width = width.max(1);
    let closure = closure.min(width - 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Vec::new();
    for _ in 0..MAX_RETRIES {
        last = sample(&mut rng, width, count, rotations);
        let t = Tangle::new(width, last.clone(), closure).expect("sampled positions are in range");
        if t.is_admissible() {
            return t;
        }
    }
    Tangle::new(width, last, 0).expect("sampled positions are in range")
}

/// Deterministic admissible tangle. The closure is capped at `width − 1`; if
/// no admissible word turns up within `MAX_RETRIES` draws the last draw is
/// returned unclosed.
pub fn random_tangle(seed: u64, width: usize, slice_count: usize, closure: usize) -> Tangle {
    generate(seed, width, slice_count, closure, true)
}

/// As `random_tangle`, restricted to crossings (a partial braid closure).
pub fn random_braid(seed: u64, width: usize, slice_count: usize, closure: usize) -> Tangle {
    generate(seed, width, slice_count, closure, false)
}
