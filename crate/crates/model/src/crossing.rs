//! Crossing-list diagrams and their conversion to rotational slice words.
//!
//! Edges are labelled `(i, j)`: component `i` (numbered at the tails, left to
//! right), `j`-th edge along it, both 1-based. A crossing records the edge
//! entering it from below on the overstrand and on the understrand.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::{Event, Gen, Slice, Tangle, TangleError};

pub type Edge = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingRecord {
    /// `+1` or `−1`.
    pub sign: i8,
    pub over: Edge,
    pub under: Edge,
}

impl CrossingRecord {
    /// `(left foot, right foot)`: the overstrand enters from the left at a
    /// positive crossing and from the right at a negative one.
    pub fn feet(&self) -> (Edge, Edge) {
        if self.sign > 0 {
            (self.over, self.under)
        } else {
            (self.under, self.over)
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingListDiagram {
    /// Number of edges on each component.
    pub edges: Vec<usize>,
    pub crossings: Vec<CrossingRecord>,
}

impl CrossingListDiagram {
    /// Every edge but the last of each component is the foot of exactly one
    /// crossing; the last edge ends at the top.
    pub fn validate(&self) -> Result<(), TangleError> {
        let bad = |m: String| Err(TangleError::Inconsistent(m));
        let mut used: HashMap<Edge, usize> = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                return bad(format!("crossing {}: sign must be ±1", k + 1));
            }
            for e in [c.over, c.under] {
                let (i, j) = e;
                if i == 0 || i > self.edges.len() || j == 0 || j >= self.edges[i - 1] {
                    return bad(format!("crossing {}: edge ({i},{j}) is not a foot edge", k + 1));
                }
                if let Some(prev) = used.insert(e, k) {
                    return bad(format!("edge ({i},{j}) is a foot of crossings {} and {}", prev + 1, k + 1));
                }
            }
        }
        for (i, &e) in self.edges.iter().enumerate() {
            if e == 0 {
                return bad(format!("component {} has no edges", i + 1));
            }
            for j in 1..e {
                if !used.contains_key(&(i + 1, j)) {
                    return bad(format!("edge ({},{j}) ends at no crossing", i + 1));
                }
            }
        }
        Ok(())
    }

    /// JSON with a `"format": 1` version tag.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&Versioned { format: 1, diagram: self.clone() }).expect("diagram serializes")
    }

    /// Parses and validates; a `format` tag, when present, must be 1.
    pub fn from_json(text: &str) -> Result<Self, TangleError> {
        let v: Versioned = serde_json::from_str(text).map_err(|e| TangleError::Inconsistent(e.to_string()))?;
        if v.format != 1 {
            return Err(TangleError::Inconsistent(format!("unsupported format {}", v.format)));
        }
        v.diagram.validate()?;
        Ok(v.diagram)
    }
}

#[derive(Serialize, Deserialize)]
struct Versioned {
    #[serde(default = "format_one")]
    format: u32,
    #[serde(flatten)]
    diagram: CrossingListDiagram,
}

fn format_one() -> u32 {
    1
}

/// Reads off the crossing list of a diagram with only open components.
/// Rotation slices carry no crossing data and are dropped.
pub fn to_crossing_list(t: &Tangle) -> Result<CrossingListDiagram, TangleError> {
    let trace = t.trace();
    if trace.components.iter().any(|c| !c.open) {
        return Err(TangleError::Inadmissible);
    }
    let mut feet: Vec<(Option<Edge>, Option<Edge>)> = vec![(None, None); t.slices().len()];
    let mut edges = Vec::new();
    for (i, comp) in trace.components.iter().enumerate() {
        let mut j = 1;
        for &p in &comp.passes {
            for e in &trace.events[p] {
                match *e {
                    Event::Over { slice, .. } => feet[slice].0 = Some((i + 1, j)),
                    Event::Under { slice, .. } => feet[slice].1 = Some((i + 1, j)),
                    Event::Rotation { .. } => continue,
                }
                j += 1;
            }
        }
        edges.push(j);
    }
    let crossings = t
        .slices()
        .iter()
        .zip(feet)
        .filter(|(s, _)| s.gen.is_crossing())
        .map(|(s, (o, u))| CrossingRecord {
            sign: s.gen.sign() as i8,
            over: o.expect("crossing has an overstrand"),
            under: u.expect("crossing has an understrand"),
        })
        .collect();
    Ok(CrossingListDiagram { edges, crossings })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Item {
    Up(Edge),
    Dn(Edge),
}

/// A step of the Morse layout, with positions counted among upward items only.
/// `legs` lists the downward legs to the left of a cup or cap.
#[derive(Clone, Debug)]
enum Step {
    Cup { up: usize, legs: Vec<Edge> },
    Cross { left: usize, gen: Gen },
    Cap { up: usize, edge: Edge, legs: Vec<Edge> },
}

fn ups_before(frontier: &[Item], idx: usize) -> usize {
    frontier[..idx].iter().filter(|x| matches!(x, Item::Up(_))).count()
}

fn legs_before(frontier: &[Item], idx: usize) -> Vec<Edge> {
    frontier[..idx]
        .iter()
        .filter_map(|x| match x {
            Item::Dn(e) => Some(*e),
            Item::Up(_) => None,
        })
        .collect()
}

fn cup(frontier: &[Item], idx: usize) -> Step {
    Step::Cup { up: ups_before(frontier, idx), legs: legs_before(frontier, idx) }
}

fn find(frontier: &[Item], item: Item) -> Option<usize> {
    frontier.iter().position(|&x| x == item)
}

/// Search budget for `morse_layout`, in visited states.
pub const LAYOUT_BUDGET: usize = 200_000;

struct Layout<'a> {
    crossings: &'a [CrossingRecord],
    steps: Vec<Step>,
    cups: Vec<Edge>,
    dead: HashSet<(Vec<bool>, Vec<Item>)>,
    visited: usize,
}

fn merge_caps(frontier: &mut Vec<Item>, steps: &mut Vec<Step>) {
    'merge: loop {
        for k in 0..frontier.len().saturating_sub(1) {
            let (e, up_idx) = match (frontier[k], frontier[k + 1]) {
                (Item::Up(a), Item::Dn(b)) if a == b => (a, k),
                (Item::Dn(a), Item::Up(b)) if a == b => (a, k + 1),
                _ => continue,
            };
            steps.push(Step::Cap { up: ups_before(frontier, up_idx), edge: e, legs: legs_before(frontier, k) });
            frontier.drain(k..k + 2);
            continue 'merge;
        }
        break;
    }
}

impl Layout<'_> {
    /// Crossings in label order of their smaller foot, the order tried first.
    fn order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.crossings.len()).collect();
        order.sort_by_key(|&k| self.crossings[k].over.min(self.crossings[k].under));
        order
    }

    /// Places one crossing. `cup_left`/`cup_right` say whether that foot is
    /// supplied by a new cup; `gap` is the insertion point when both are.
    fn place(
        &mut self,
        frontier: &[Item],
        c: &CrossingRecord,
        cup_left: bool,
        cup_right: bool,
        gap: usize,
    ) -> Option<Vec<Item>> {
        let (left, right) = c.feet();
        let mut f = frontier.to_vec();
        let li = match (cup_left, cup_right) {
            (false, false) => {
                let li = find(&f, Item::Up(left))?;
                (f.get(li + 1) == Some(&Item::Up(right))).then_some(li)?
            }
            (false, true) => {
                let li = find(&f, Item::Up(left))?;
                self.steps.push(cup(&f, li + 1));
                f.splice(li + 1..li + 1, [Item::Up(right), Item::Dn(right)]);
                li
            }
            (true, false) => {
                let ri = find(&f, Item::Up(right))?;
                self.steps.push(cup(&f, ri));
                f.splice(ri..ri, [Item::Dn(left), Item::Up(left)]);
                ri + 1
            }
            (true, true) => {
                self.steps.push(cup(&f, gap));
                f.splice(gap..gap, [Item::Dn(left), Item::Up(left)]);
                self.steps.push(cup(&f, gap + 2));
                f.splice(gap + 2..gap + 2, [Item::Up(right), Item::Dn(right)]);
                gap + 1
            }
        };
        if cup_left {
            self.cups.push(left);
        }
        if cup_right {
            self.cups.push(right);
        }
        self.steps.push(Step::Cross { left: ups_before(&f, li), gen: if c.sign > 0 { Gen::X } else { Gen::Xneg } });
        f[li] = Item::Up((right.0, right.1 + 1));
        f[li + 1] = Item::Up((left.0, left.1 + 1));
        merge_caps(&mut f, &mut self.steps);
        Some(f)
    }

    fn search(&mut self, frontier: Vec<Item>, done: &mut Vec<bool>, order: &[usize]) -> Result<bool, TangleError> {
        if done.iter().all(|&d| d) {
            return Ok(frontier.iter().all(|x| matches!(x, Item::Up(_))));
        }
        let key = (done.clone(), frontier.clone());
        if self.dead.contains(&key) {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > LAYOUT_BUDGET {
            return Err(TangleError::Layout("no planar layout found within the search budget".into()));
        }
        for &k in order {
            if done[k] {
                continue;
            }
            let c = self.crossings[k];
            let (left, right) = c.feet();
            let has = |e| find(&frontier, Item::Up(e)).is_some();
            let mut options = Vec::new();
            for (cl, cr) in [(false, false), (false, true), (true, false), (true, true)] {
                if (!cl && !has(left)) || (!cr && !has(right)) {
                    continue;
                }
                if cl && cr {
                    options.extend((0..=frontier.len()).map(|g| (cl, cr, g)));
                } else {
                    options.push((cl, cr, 0));
                }
            }
            for (cl, cr, gap) in options {
                let (steps_len, cups_len) = (self.steps.len(), self.cups.len());
                if let Some(next) = self.place(&frontier, &c, cl, cr, gap) {
                    done[k] = true;
                    if self.search(next, done, order)? {
                        return Ok(true);
                    }
                    done[k] = false;
                }
                self.steps.truncate(steps_len);
                self.cups.truncate(cups_len);
            }
        }
        self.dead.insert(key);
        Ok(false)
    }
}

/// Morse layout of the diagram: crossings placed upward one per band, each
/// foot either continuing an edge already on the frontier or rising from a
/// cup beside its partner, whose downward leg is capped off once the edge
/// appears. Crossings are tried in label order of their smaller foot, using
/// feet already present, before any other arrangement.
fn morse_layout(d: &CrossingListDiagram) -> Result<(Vec<Step>, Vec<Edge>), TangleError> {
    let mut layout = Layout {
        crossings: &d.crossings,
        steps: Vec::new(),
        cups: Vec::new(),
        dead: HashSet::new(),
        visited: 0,
    };
    let frontier: Vec<Item> = (1..=d.edges.len()).map(|i| Item::Up((i, 1))).collect();
    let order = layout.order();
    let mut done = vec![false; d.crossings.len()];
    if layout.search(frontier, &mut done, &order)? {
        Ok((layout.steps, layout.cups))
    } else {
        Err(TangleError::Layout("the crossing list has no planar layout".into()))
    }
}

/// Sum of signs of crossings whose two feet lie on component `i` (1-based).
fn self_writhe(d: &CrossingListDiagram, i: usize) -> i64 {
    d.crossings.iter().filter(|c| c.over.0 == i && c.under.0 == i).map(|c| c.sign as i64).sum()
}

/// Converts a crossing-list diagram into a rotational diagram. Each downward
/// arc of the Morse layout is thrown over everything to the right and becomes
/// a closed strand, stacked so that sliding each arc into place never drags it
/// through another's endpoints. Re-routing an arc can turn its ends through a
/// full rotation, which shifts that component's framing by one; the shift is
/// undone with curls added at the tail.
pub fn to_rotational(d: &CrossingListDiagram) -> Result<Tangle, TangleError> {
    let mut t = throw_arcs(d)?;
    for i in 0..d.edges.len() {
        let excess = t.writhe(i)? - self_writhe(d, i + 1);
        for _ in 0..excess.abs() {
            t = with_tail_curl(&t, i, if excess > 0 { Gen::Xneg } else { Gen::X });
        }
    }
    Ok(t)
}

/// Adds a curl of sign `gen` at the bottom of the strand starting at position
/// `p`: the strand runs right over everything, kinks around a new innermost
/// closed strand, and runs back over everything.
fn with_tail_curl(t: &Tangle, p: usize, gen: Gen) -> Tangle {
    let w = t.width();
    let mut slices: Vec<Slice> = (p + 1..w).map(Slice::x).collect();
    slices.push(Slice::new(gen, w));
    slices.extend((p + 1..w).rev().map(Slice::xneg));
    slices.extend_from_slice(t.slices());
    Tangle::new(w + 1, slices, t.closed() + 1).expect("curl stays in range")
}

/// Stacking order of the thrown arms. Sliding arm `k` from its leg to the
/// closure sweeps the region right of the leg within its height band, so any
/// arm with a cup or cap in that region must lie below `k`.
fn arm_layers(steps: &[Step], cup_edges: &[Edge], arm_of: &HashMap<Edge, usize>) -> Result<Vec<usize>, TangleError> {
    let m = cup_edges.len();
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut next_cup = 0;
    for step in steps {
        let (j, legs) = match step {
            Step::Cup { legs, .. } => {
                next_cup += 1;
                (next_cup - 1, legs)
            }
            Step::Cap { edge, legs, .. } => (arm_of[edge], legs),
            Step::Cross { .. } => continue,
        };
        for e in legs {
            below[arm_of[e]].push(j);
        }
    }
    let mut indegree = vec![0usize; m];
    for &j in below.iter().flatten() {
        indegree[j] += 1;
    }
    // Kahn's algorithm from the top layer down.
    let mut ready: Vec<usize> = (0..m).filter(|&k| indegree[k] == 0).collect();
    let mut layer = vec![0usize; m];
    let mut placed = 0;
    while let Some(k) = ready.pop() {
        layer[k] = m - 1 - placed;
        placed += 1;
        for &j in &below[k] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.push(j);
            }
        }
    }
    if placed < m {
        return Err(TangleError::Layout("thrown arcs admit no consistent stacking".into()));
    }
    Ok(layer)
}

fn throw_arcs(d: &CrossingListDiagram) -> Result<Tangle, TangleError> {
    d.validate()?;
    let (steps, cup_edges) = morse_layout(d)?;
    let arm_of: HashMap<Edge, usize> = cup_edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let layer = arm_layers(&steps, &cup_edges, &arm_of)?;
    let m = cup_edges.len();
    let mut active = d.edges.len();
    let mut waiting: Vec<usize> = (0..m).collect();
    let mut next_cup = 0;
    let mut slices = Vec::new();
    // Whether arm `k` passes over the strand at 0-based position `q`.
    let over = |k: usize, q: usize, active: usize, waiting: &[usize]| q < active || layer[k] > layer[waiting[q - active]];
    for step in &steps {
        match *step {
            Step::Cup { up, .. } => {
                let k = next_cup;
                next_cup += 1;
                let rank = waiting.iter().position(|&x| x == k).expect("arm waits below its cup");
                for p in (up + 1..=active + rank).rev() {
                    let gen = if over(k, p - 1, active, &waiting) { Gen::Xneg } else { Gen::X };
                    slices.push(Slice::new(gen, p));
                }
                waiting.remove(rank);
                active += 1;
            }
            Step::Cross { left, gen } => slices.push(Slice::new(gen, left + 1)),
            Step::Cap { up, edge, .. } => {
                let k = arm_of[&edge];
                let rank = waiting.iter().filter(|&&x| x < k).count();
                active -= 1;
                for p in up + 1..=active + rank {
                    let gen = if over(k, p, active + 1, &waiting) { Gen::X } else { Gen::Xneg };
                    slices.push(Slice::new(gen, p));
                }
                waiting.insert(rank, k);
            }
        }
    }
    Tangle::new(d.edges.len() + m, slices, m)
}
