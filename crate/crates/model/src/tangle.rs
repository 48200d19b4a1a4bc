//! Slice words over `X, X⁻, C, C⁻` with a right partial closure.

use std::fmt;

use serde::{Deserialize, Serialize};
use tangle_algebra::Permutation;

use crate::TangleError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    /// Positive crossing: the left foot passes over.
    X,
    /// Negative crossing: the right foot passes over.
    Xneg,
    /// Anticlockwise full rotation.
    C,
    /// Clockwise full rotation.
    Cneg,
}

impl Gen {
    pub fn is_crossing(self) -> bool {
        matches!(self, Gen::X | Gen::Xneg)
    }

    pub fn inverse(self) -> Gen {
        match self {
            Gen::X => Gen::Xneg,
            Gen::Xneg => Gen::X,
            Gen::C => Gen::Cneg,
            Gen::Cneg => Gen::C,
        }
    }

    /// `+1` for `X` and `C`, `−1` for their inverses.
    pub fn sign(self) -> i64 {
        match self {
            Gen::X | Gen::C => 1,
            Gen::Xneg | Gen::Cneg => -1,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Gen::X => "X",
            Gen::Xneg => "X-",
            Gen::C => "C",
            Gen::Cneg => "C-",
        }
    }
}

/// One generator at a 1-based position. Crossings occupy `pos, pos+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Slice {
    pub gen: Gen,
    pub pos: usize,
}

impl Slice {
    pub fn new(gen: Gen, pos: usize) -> Self {
        Slice { gen, pos }
    }

    pub fn x(pos: usize) -> Self {
        Slice::new(Gen::X, pos)
    }

    pub fn xneg(pos: usize) -> Self {
        Slice::new(Gen::Xneg, pos)
    }

    pub fn c(pos: usize) -> Self {
        Slice::new(Gen::C, pos)
    }

    pub fn cneg(pos: usize) -> Self {
        Slice::new(Gen::Cneg, pos)
    }

    pub fn inverse(self) -> Self {
        Slice::new(self.gen.inverse(), self.pos)
    }

    /// Highest 1-based strand touched.
    pub fn top_strand(self) -> usize {
        if self.gen.is_crossing() {
            self.pos + 1
        } else {
            self.pos
        }
    }

    /// Whether the two slices touch a common strand.
    pub fn overlaps(self, o: Slice) -> bool {
        self.pos <= o.top_strand() && o.pos <= self.top_strand()
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.gen.token(), self.pos)
    }
}

/// A rotational diagram: slices listed bottom to top on `width` strands,
/// the rightmost `closed` of which are closed by nested arcs on the right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tangle {
    width: usize,
    slices: Vec<Slice>,
    closed: usize,
}

/// What a strand pass meets at one slice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Over { slice: usize, sign: i64 },
    Under { slice: usize, sign: i64 },
    Rotation { slice: usize, sign: i64 },
}

/// A connected component, listed as the bottom positions (0-based) of its
/// passes through the slice region in traversal order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub passes: Vec<usize>,
    pub open: bool,
}

/// Strand tracing data for a tangle.
#[derive(Clone, Debug)]
pub struct Trace {
    /// `top[k]`: top position reached by the pass starting at bottom `k`.
    pub top: Vec<usize>,
    /// Events met by each pass, bottom to top.
    pub events: Vec<Vec<Event>>,
    pub components: Vec<Component>,
    pub component_of_pass: Vec<usize>,
}

impl Tangle {
    pub fn new(width: usize, slices: Vec<Slice>, closed: usize) -> Result<Self, TangleError> {
        if closed > width {
            return Err(TangleError::TooManyClosed { closed, width });
        }
        for (index, s) in slices.iter().enumerate() {
            if s.pos == 0 || s.top_strand() > width {
                return Err(TangleError::PositionOutOfRange { index, pos: s.pos, width });
            }
        }
        Ok(Tangle { width, slices, closed })
    }

    /// The identity on `width` strands.
    pub fn identity(width: usize) -> Self {
        Tangle { width, slices: Vec::new(), closed: 0 }
    }

    /// A braid word `σ_{|g|}^{sign g}` on `strands` strands, closing the last `close`.
    pub fn braid(strands: usize, word: &[i32], close: usize) -> Result<Self, TangleError> {
        let slices = word
            .iter()
            .map(|&g| Slice::new(if g > 0 { Gen::X } else { Gen::Xneg }, g.unsigned_abs() as usize))
            .collect();
        Tangle::new(strands, slices, close)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn closed(&self) -> usize {
        self.closed
    }

    pub fn open(&self) -> usize {
        self.width - self.closed
    }

    pub fn slices(&self) -> &[Slice] {
        &self.slices
    }

    pub fn with_closed(&self, closed: usize) -> Result<Self, TangleError> {
        Tangle::new(self.width, self.slices.clone(), closed)
    }

    pub fn with_slices(&self, slices: Vec<Slice>) -> Result<Self, TangleError> {
        Tangle::new(self.width, slices, self.closed)
    }

    /// No `C` or `C⁻` slices.
    pub fn is_braid_word(&self) -> bool {
        self.slices.iter().all(|s| s.gen.is_crossing())
    }

    /// `self` on the bottom, `top` stacked above; both must be unclosed.
    pub fn then(&self, top: &Tangle) -> Result<Self, TangleError> {
        if self.width != top.width || self.closed != 0 || top.closed != 0 {
            return Err(TangleError::Inconsistent("stacking needs equal widths and no closure".into()));
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&top.slices);
        Tangle::new(self.width, slices, 0)
    }

    /// Side by side, `self` on the left; both must be unclosed.
    pub fn beside(&self, right: &Tangle) -> Result<Self, TangleError> {
        if self.closed != 0 || right.closed != 0 {
            return Err(TangleError::Inconsistent("juxtaposition needs unclosed tangles".into()));
        }
        let mut slices = self.slices.clone();
        slices.extend(right.slices.iter().map(|s| Slice::new(s.gen, s.pos + self.width)));
        Tangle::new(self.width + right.width, slices, 0)
    }

    /// Bottom-position to top-position permutation of the slice word, ignoring the closure.
    pub fn full_permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.width).collect(); // position -> bottom strand
        for s in &self.slices {
            if s.gen.is_crossing() {
                at.swap(s.pos - 1, s.pos);
            }
        }
        let mut images = vec![0; self.width];
        for (top, &bottom) in at.iter().enumerate() {
            images[bottom] = top;
        }
        Permutation::from_images(images).expect("tracked positions form a bijection")
    }

    pub fn is_admissible(&self) -> bool {
        self.full_permutation().is_admissible(self.closed)
    }

    pub fn trace(&self) -> Trace {
        let w = self.width;
        let mut at: Vec<usize> = (0..w).collect();
        let mut events = vec![Vec::new(); w];
        for (k, s) in self.slices.iter().enumerate() {
            let p = s.pos - 1;
            let sign = s.gen.sign();
            match s.gen {
                Gen::X | Gen::Xneg => {
                    let (l, r) = (at[p], at[p + 1]);
                    let (over, under) = if s.gen == Gen::X { (l, r) } else { (r, l) };
                    events[over].push(Event::Over { slice: k, sign });
                    events[under].push(Event::Under { slice: k, sign });
                    at.swap(p, p + 1);
                }
                Gen::C | Gen::Cneg => events[at[p]].push(Event::Rotation { slice: k, sign }),
            }
        }
        let mut top = vec![0; w];
        for (t, &b) in at.iter().enumerate() {
            top[b] = t;
        }
        let n = self.open();
        let mut component_of_pass = vec![usize::MAX; w];
        let mut components = Vec::new();
        for tail in 0..n {
            let mut passes = vec![tail];
            let mut k = tail;
            while top[k] >= n {
                k = top[k];
                passes.push(k);
            }
            for &p in &passes {
                component_of_pass[p] = components.len();
            }
            components.push(Component { passes, open: true });
        }
        for start in n..w {
            if component_of_pass[start] != usize::MAX {
                continue;
            }
            let mut passes = vec![start];
            let mut k = top[start];
            while k != start {
                passes.push(k);
                k = top[k];
            }
            for &p in &passes {
                component_of_pass[p] = components.len();
            }
            components.push(Component { passes, open: false });
        }
        Trace { top, events, components, component_of_pass }
    }

    pub fn component_count(&self) -> usize {
        self.trace().components.len()
    }

    fn component(&self, trace: &Trace, c: usize) -> Result<Component, TangleError> {
        trace.components.get(c).cloned().ok_or(TangleError::NoSuchComponent(c))
    }

    /// Sum of signs over self-crossings of component `c` (0-based).
    pub fn writhe(&self, c: usize) -> Result<i64, TangleError> {
        let trace = self.trace();
        self.component(&trace, c)?;
        let mut owners: Vec<Vec<usize>> = vec![Vec::new(); self.slices.len()];
        for (pass, evs) in trace.events.iter().enumerate() {
            for e in evs {
                if let Event::Over { slice, .. } | Event::Under { slice, .. } = e {
                    owners[*slice].push(trace.component_of_pass[pass]);
                }
            }
        }
        Ok(self
            .slices
            .iter()
            .zip(&owners)
            .filter(|(s, o)| s.gen.is_crossing() && o.iter().all(|&x| x == c))
            .map(|(s, _)| s.gen.sign())
            .sum())
    }

    /// Signed count of full rotations on component `c`. Every return arc of
    /// the closure turns clockwise once, contributing `−1` per closed pass end.
    pub fn rotation_number(&self, c: usize) -> Result<i64, TangleError> {
        let trace = self.trace();
        let comp = self.component(&trace, c)?;
        let n = self.open();
        let mut rot = 0;
        for &p in &comp.passes {
            for e in &trace.events[p] {
                if let Event::Rotation { sign, .. } = e {
                    rot += sign;
                }
            }
            if trace.top[p] >= n {
                rot -= 1;
            }
        }
        Ok(rot)
    }

    /// Events along component `c` in traversal order.
    pub fn component_events(&self, c: usize) -> Result<Vec<Event>, TangleError> {
        let trace = self.trace();
        let comp = self.component(&trace, c)?;
        Ok(comp.passes.iter().flat_map(|&p| trace.events[p].iter().copied()).collect())
    }
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "width={} closed={} :", self.width, self.closed)?;
        for s in &self.slices {
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

/// Permutation on the open strands after contracting the closure.
pub fn permutation_of(t: &Tangle) -> Result<Permutation, TangleError> {
    let mut sigma = t.full_permutation();
    for _ in 0..t.closed {
        sigma = sigma.close_last().ok_or(TangleError::Inadmissible)?;
    }
    Ok(sigma)
}

pub fn writhe(t: &Tangle, component: usize) -> Result<i64, TangleError> {
    t.writhe(component)
}

pub fn rotation_number(t: &Tangle, component: usize) -> Result<i64, TangleError> {
    t.rotation_number(component)
}

/// Both sides of the rotation-number identity for a long knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationLemmaReport {
    pub rotation: i64,
    /// `Σ_{under first} sign − Σ_{over first} sign`.
    pub crossing_sum: i64,
    pub writhe: i64,
}

impl RotationLemmaReport {
    pub fn passed(&self) -> bool {
        self.rotation == self.crossing_sum
    }

    pub fn parity_even(&self) -> bool {
        (self.rotation + self.writhe) % 2 == 0
    }
}

/// Checks `rot(D) = Σ_{under first} sign(c) − Σ_{over first} sign(c)` on a
/// one-component diagram traversed from its tail.
pub fn check_rotation_lemma(t: &Tangle) -> Result<RotationLemmaReport, TangleError> {
    let trace = t.trace();
    if trace.components.len() != 1 || !trace.components[0].open {
        return Err(TangleError::NotAKnot(trace.components.len()));
    }
    let mut seen = vec![false; t.slices.len()];
    let mut crossing_sum = 0;
    for e in t.component_events(0)? {
        match e {
            Event::Under { slice, sign } if !seen[slice] => {
                seen[slice] = true;
                crossing_sum += sign;
            }
            Event::Over { slice, sign } if !seen[slice] => {
                seen[slice] = true;
                crossing_sum -= sign;
            }
            _ => {}
        }
    }
    Ok(RotationLemmaReport { rotation: t.rotation_number(0)?, crossing_sum, writhe: t.writhe(0)? })
}
