//! Local rewrites of slice words: rotational Reidemeister moves and the
//! framed Markov moves on pure braid words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Gen, Slice, Tangle, TangleError};

/// A move anchored at a slice index (0-based, counted from the bottom).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move")]
pub enum MoveSpec {
    /// Ω0a: delete `C(p) C⁻(p)` or `C⁻(p) C(p)` at `at, at+1`.
    RotationCancel { at: usize },
    /// Ω0a: insert `first(pos)` then its inverse before slice `at`.
    RotationCreate { at: usize, pos: usize, first: Gen },
    /// Ω0b: swap two adjacent slices on disjoint strands.
    FarCommute { at: usize },
    /// Ω0c: move a pair of equal rotations on both feet of a crossing to its
    /// heads (`forward`) or back.
    RotationSlide { at: usize, forward: bool },
    /// Ω2: delete `X(p) X⁻(p)` or `X⁻(p) X(p)`.
    CrossingCancel { at: usize },
    /// Ω2: insert `first(pos)` then its inverse before slice `at`.
    CrossingCreate { at: usize, pos: usize, first: Gen },
    /// Ω3: `a(p) b(p+1) c(p) ↔ c(p+1) b(p) a(p+1)` for `a = b = c` or `a = c⁻¹`.
    BraidRelation { at: usize },
    /// MI: conjugate by a braid word on closed strands, its inverse at the bottom.
    Conjugate { conjugator: Vec<Slice> },
    /// MII: add two closed strands carrying `X(N+1) X⁻(N)` (positive) or
    /// `X(N) X⁻(N+1)` (negative) on top of the word, `N` the old width.
    Stabilize { positive: bool },
    /// Inverse of `Stabilize` for either sign.
    Destabilize,
}

impl MoveSpec {
    pub fn name(&self) -> &'static str {
        match self {
            MoveSpec::RotationCancel { .. } | MoveSpec::RotationCreate { .. } => "Ω0a",
            MoveSpec::FarCommute { .. } => "Ω0b",
            MoveSpec::RotationSlide { .. } => "Ω0c",
            MoveSpec::CrossingCancel { .. } | MoveSpec::CrossingCreate { .. } => "Ω2",
            MoveSpec::BraidRelation { .. } => "Ω3",
            MoveSpec::Conjugate { .. } => "MI",
            MoveSpec::Stabilize { .. } | MoveSpec::Destabilize => "MII",
        }
    }
}

impl fmt::Display for MoveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveSpec::RotationCancel { at } => write!(f, "Ω0a cancel @{at}"),
            MoveSpec::RotationCreate { at, pos, first } => {
                write!(f, "Ω0a create @{at} {}({pos})", first.token())
            }
            MoveSpec::FarCommute { at } => write!(f, "Ω0b @{at}"),
            MoveSpec::RotationSlide { at, forward } => {
                write!(f, "Ω0c @{at} {}", if *forward { "up" } else { "down" })
            }
            MoveSpec::CrossingCancel { at } => write!(f, "Ω2 cancel @{at}"),
            MoveSpec::CrossingCreate { at, pos, first } => {
                write!(f, "Ω2 create @{at} {}({pos})", first.token())
            }
            MoveSpec::BraidRelation { at } => write!(f, "Ω3 @{at}"),
            MoveSpec::Conjugate { conjugator } => {
                write!(f, "MI by")?;
                for s in conjugator {
                    write!(f, " {s}")?;
                }
                Ok(())
            }
            MoveSpec::Stabilize { positive } => write!(f, "MII {}", if *positive { "+" } else { "-" }),
            MoveSpec::Destabilize => write!(f, "MII shrink"),
        }
    }
}

fn window<'a>(t: &'a Tangle, at: usize, len: usize, name: &'static str) -> Result<&'a [Slice], TangleError> {
    t.slices().get(at..at + len).ok_or(TangleError::PatternMismatch { name, at })
}

fn splice(t: &Tangle, at: usize, remove: usize, insert: &[Slice]) -> Result<Tangle, TangleError> {
    let mut slices = t.slices().to_vec();
    slices.splice(at..at + remove, insert.iter().copied());
    t.with_slices(slices)
}

fn rotation_pair(a: Slice, b: Slice, p: usize) -> bool {
    !a.gen.is_crossing()
        && a.gen == b.gen
        && ((a.pos == p && b.pos == p + 1) || (a.pos == p + 1 && b.pos == p))
}

fn braid_triple(w: &[Slice]) -> Option<[Slice; 3]> {
    let (a, b, c) = (w[0], w[1], w[2]);
    if !(a.gen.is_crossing() && b.gen.is_crossing() && c.gen.is_crossing()) {
        return None;
    }
    let signs_ok = (a.gen == b.gen && b.gen == c.gen) || a.gen == c.gen.inverse();
    if !signs_ok || a.pos != c.pos {
        return None;
    }
    if b.pos == a.pos + 1 {
        Some([Slice::new(c.gen, a.pos + 1), Slice::new(b.gen, a.pos), Slice::new(a.gen, a.pos + 1)])
    } else if a.pos == b.pos + 1 {
        Some([Slice::new(c.gen, b.pos), Slice::new(b.gen, a.pos), Slice::new(a.gen, b.pos)])
    } else {
        None
    }
}

fn stabilization_pattern(t: &Tangle) -> bool {
    let w = t.width();
    let s = t.slices();
    if t.closed() < 2 || w < 3 || s.len() < 2 || !t.is_braid_word() {
        return false;
    }
    let (a, b) = (s[s.len() - 2], s[s.len() - 1]);
    let plus = a == Slice::x(w - 1) && b == Slice::xneg(w - 2);
    let minus = a == Slice::x(w - 2) && b == Slice::xneg(w - 1);
    (plus || minus) && s[..s.len() - 2].iter().all(|x| x.top_strand() <= w - 2)
}

pub fn apply_move(t: &Tangle, mv: &MoveSpec) -> Result<Tangle, TangleError> {
    let name = mv.name();
    match mv {
        MoveSpec::RotationCancel { at } => {
            let w = window(t, *at, 2, name)?;
            if w[0].gen.is_crossing() || w[1] != w[0].inverse() {
                return Err(TangleError::PatternMismatch { name, at: *at });
            }
            splice(t, *at, 2, &[])
        }
        MoveSpec::RotationCreate { at, pos, first } | MoveSpec::CrossingCreate { at, pos, first } => {
            let wants_crossing = matches!(mv, MoveSpec::CrossingCreate { .. });
            if *at > t.slices().len() || first.is_crossing() != wants_crossing {
                return Err(TangleError::PatternMismatch { name, at: *at });
            }
            let s = Slice::new(*first, *pos);
            splice(t, *at, 0, &[s, s.inverse()])
        }
        MoveSpec::FarCommute { at } => {
            let w = window(t, *at, 2, name)?;
            if w[0].overlaps(w[1]) {
                return Err(TangleError::PatternMismatch { name, at: *at });
            }
            splice(t, *at, 2, &[w[1], w[0]])
        }
        MoveSpec::RotationSlide { at, forward } => {
            let w = window(t, *at, 3, name)?;
            let (x, r1, r2) = if *forward { (w[2], w[0], w[1]) } else { (w[0], w[1], w[2]) };
            if !x.gen.is_crossing() || !rotation_pair(r1, r2, x.pos) {
                return Err(TangleError::PatternMismatch { name, at: *at });
            }
            let r = |p| Slice::new(r1.gen, p);
            let out = if *forward {
                [x, r(x.pos), r(x.pos + 1)]
            } else {
                [r(x.pos), r(x.pos + 1), x]
            };
            splice(t, *at, 3, &out)
        }
        MoveSpec::CrossingCancel { at } => {
            let w = window(t, *at, 2, name)?;
            if !w[0].gen.is_crossing() || w[1] != w[0].inverse() {
                return Err(TangleError::PatternMismatch { name, at: *at });
            }
            splice(t, *at, 2, &[])
        }
        MoveSpec::BraidRelation { at } => {
            let w = window(t, *at, 3, name)?;
            let out = braid_triple(w).ok_or(TangleError::PatternMismatch { name, at: *at })?;
            splice(t, *at, 3, &out)
        }
        MoveSpec::Conjugate { conjugator } => {
            if !t.is_braid_word() {
                return Err(TangleError::NotABraid(name));
            }
            let lo = t.open() + 1;
            if conjugator.iter().any(|s| !s.gen.is_crossing() || s.pos < lo || s.pos + 1 > t.width()) {
                return Err(TangleError::PatternMismatch { name, at: 0 });
            }
            let mut slices: Vec<Slice> = conjugator.iter().rev().map(|s| s.inverse()).collect();
            slices.extend_from_slice(t.slices());
            slices.extend_from_slice(conjugator);
            t.with_slices(slices)
        }
        MoveSpec::Stabilize { positive } => {
            if !t.is_braid_word() {
                return Err(TangleError::NotABraid(name));
            }
            let n = t.width();
            let mut slices = t.slices().to_vec();
            if *positive {
                slices.extend([Slice::x(n + 1), Slice::xneg(n)]);
            } else {
                slices.extend([Slice::x(n), Slice::xneg(n + 1)]);
            }
            Tangle::new(n + 2, slices, t.closed() + 2)
        }
        MoveSpec::Destabilize => {
            if !t.is_braid_word() {
                return Err(TangleError::NotABraid(name));
            }
            if !stabilization_pattern(t) {
                return Err(TangleError::NoStabilization);
            }
            let s = t.slices();
            Tangle::new(t.width() - 2, s[..s.len() - 2].to_vec(), t.closed() - 2)
        }
    }
}

/// Every anchored move applicable to `t`: all pattern matches and all
/// insertion anchors, plus Markov moves when `t` is a pure braid word.
pub fn enumerate_moves(t: &Tangle) -> Vec<MoveSpec> {
    let s = t.slices();
    let w = t.width();
    let mut out = Vec::new();
    for at in 0..s.len() {
        for mv in [
            MoveSpec::RotationCancel { at },
            MoveSpec::FarCommute { at },
            MoveSpec::RotationSlide { at, forward: true },
            MoveSpec::RotationSlide { at, forward: false },
            MoveSpec::CrossingCancel { at },
            MoveSpec::BraidRelation { at },
        ] {
            if apply_move(t, &mv).is_ok() {
                out.push(mv);
            }
        }
    }
    for at in 0..=s.len() {
        for pos in 1..=w {
            for first in [Gen::C, Gen::Cneg] {
                out.push(MoveSpec::RotationCreate { at, pos, first });
            }
            if pos < w {
                for first in [Gen::X, Gen::Xneg] {
                    out.push(MoveSpec::CrossingCreate { at, pos, first });
                }
            }
        }
    }
    if t.is_braid_word() {
        for pos in t.open() + 1..w {
            for g in [Gen::X, Gen::Xneg] {
                out.push(MoveSpec::Conjugate { conjugator: vec![Slice::new(g, pos)] });
            }
        }
        out.push(MoveSpec::Stabilize { positive: true });
        out.push(MoveSpec::Stabilize { positive: false });
        if stabilization_pattern(t) {
            out.push(MoveSpec::Destabilize);
        }
    }
    out
}
