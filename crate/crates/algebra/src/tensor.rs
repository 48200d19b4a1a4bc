//! Sparse elements of tensor powers `A^{⊗n}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::{AlgebraError, Permutation, Scalar, StructureAlgebra};

/// Basis multi-index, 0-based internally.
pub type Index = Vec<u16>;

/// A sparse element of `A^{⊗arity}`. Zero coefficients are never stored,
/// so derived equality is mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorElement {
    dim: usize,
    arity: usize,
    terms: BTreeMap<Index, Scalar>,
}

fn push(terms: &mut BTreeMap<Index, Scalar>, idx: Index, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(idx) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TensorElement {
    pub fn zero(dim: usize, arity: usize) -> Self {
        TensorElement { dim, arity, terms: BTreeMap::new() }
    }

    /// Arity-0 element: a bare scalar.
    pub fn scalar(dim: usize, s: Scalar) -> Self {
        let mut t = Self::zero(dim, 0);
        push(&mut t.terms, Vec::new(), s);
        t
    }

    /// `1^{⊗n}`.
    pub fn one(alg: &StructureAlgebra, n: usize) -> Self {
        let slots = vec![alg.unit_terms(); n];
        Self::product_of_slots(alg.dim(), &slots)
    }

    /// A basis pure tensor from 0-based indices.
    pub fn basis(dim: usize, idx: &[usize]) -> Self {
        let mut t = Self::zero(dim, idx.len());
        t.terms.insert(idx.iter().map(|&k| k as u16).collect(), Scalar::one());
        t
    }

    /// Arity-1 element from dense coordinates.
    pub fn vector(dim: usize, coords: &[Scalar]) -> Self {
        Self::from_terms(dim, 1, coords.iter().enumerate().map(|(k, c)| (vec![k as u16], c.clone())))
    }

    pub fn from_terms(dim: usize, arity: usize, terms: impl IntoIterator<Item = (Index, Scalar)>) -> Self {
        let mut t = Self::zero(dim, arity);
        for (idx, c) in terms {
            debug_assert_eq!(idx.len(), arity);
            push(&mut t.terms, idx, c);
        }
        t
    }

    /// Expands `x_1 ⊗ … ⊗ x_n` from sparse slot vectors.
    pub fn product_of_slots(dim: usize, slots: &[Vec<(usize, Scalar)>]) -> Self {
        let mut acc: Vec<(Index, Scalar)> = vec![(Vec::with_capacity(slots.len()), Scalar::one())];
        for slot in slots {
            let mut next = Vec::with_capacity(acc.len() * slot.len());
            for (idx, c) in &acc {
                for (k, x) in slot {
                    let mut i = idx.clone();
                    i.push(*k as u16);
                    next.push((i, c * x));
                }
            }
            acc = next;
        }
        Self::from_terms(dim, slots.len(), acc)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Index, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        let key: Index = idx.iter().map(|&k| k as u16).collect();
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// The scalar value of an arity-0 element.
    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.arity == 0).then(|| self.terms.get(&Vec::new()).cloned().unwrap_or_default())
    }

    /// Dense coordinates of an arity-1 element.
    pub fn coords(&self) -> Vec<Scalar> {
        assert_eq!(self.arity, 1, "coords needs an arity-1 element");
        let mut v = vec![Scalar::zero(); self.dim];
        for (idx, c) in &self.terms {
            v[idx[0] as usize] = c.clone();
        }
        v
    }

    /// Sparse `(basis, coefficient)` pairs of an arity-1 element.
    pub fn sparse(&self) -> Vec<(usize, Scalar)> {
        assert_eq!(self.arity, 1, "sparse needs an arity-1 element");
        self.terms.iter().map(|(i, c)| (i[0] as usize, c.clone())).collect()
    }

    fn check_same(&self, o: &TensorElement) -> Result<(), AlgebraError> {
        if self.dim != o.dim {
            return Err(AlgebraError::AlgebraMismatch(self.dim, o.dim));
        }
        if self.arity != o.arity {
            return Err(AlgebraError::ArityMismatch(self.arity, o.arity));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (idx, c) in &o.terms {
            push(&mut out.terms, idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        self.try_add(o).expect("compatible tensor elements")
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> TensorElement {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        Self::from_terms(self.dim, self.arity, self.terms.iter().map(|(i, c)| (i.clone(), c * s)))
    }

    /// Outer product `self ⊗ other`.
    pub fn tensor(&self, o: &TensorElement) -> TensorElement {
        let mut out = Self::zero(self.dim, self.arity + o.arity);
        for (i, a) in &self.terms {
            for (j, b) in &o.terms {
                let mut k = i.clone();
                k.extend_from_slice(j);
                push(&mut out.terms, k, a * b);
            }
        }
        out
    }

    /// Componentwise product in `A^{⊗n}`.
    pub fn mul(&self, alg: &StructureAlgebra, o: &TensorElement) -> Result<TensorElement, AlgebraError> {
        self.check_same(o)?;
        if self.dim != alg.dim() {
            return Err(AlgebraError::AlgebraMismatch(self.dim, alg.dim()));
        }
        let mut out = Self::zero(self.dim, self.arity);
        let mut partial: Vec<(Index, Scalar)> = Vec::new();
        let mut next: Vec<(Index, Scalar)> = Vec::new();
        for (ia, ca) in &self.terms {
            for (ib, cb) in &o.terms {
                partial.clear();
                partial.push((Vec::with_capacity(self.arity), ca * cb));
                for k in 0..self.arity {
                    let prod = alg.product(ia[k] as usize, ib[k] as usize);
                    next.clear();
                    for (idx, c) in &partial {
                        for (e, x) in prod {
                            let mut i = idx.clone();
                            i.push(*e as u16);
                            next.push((i, c * x));
                        }
                    }
                    std::mem::swap(&mut partial, &mut next);
                }
                for (idx, c) in partial.drain(..) {
                    push(&mut out.terms, idx, c);
                }
            }
        }
        Ok(out)
    }

    /// Swaps the two legs of an arity-2 element.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.arity, 2, "flip needs an arity-2 element");
        Self::from_terms(self.dim, 2, self.terms.iter().map(|(i, c)| (vec![i[1], i[0]], c.clone())))
    }

    /// `embed_pair(r, i, j, n) · self` without materializing the embedding.
    /// Slots are 0-based and distinct.
    pub fn mul_left_pair(&self, alg: &StructureAlgebra, r: &TensorElement, i: usize, j: usize) -> TensorElement {
        debug_assert!(r.arity == 2 && i != j && i < self.arity && j < self.arity);
        let mut out = Self::zero(self.dim, self.arity);
        for (idx, c) in &self.terms {
            for (ri, rc) in &r.terms {
                let c0 = c * rc;
                for (a, x) in alg.product(ri[0] as usize, idx[i] as usize) {
                    let c1 = &c0 * x;
                    for (b, y) in alg.product(ri[1] as usize, idx[j] as usize) {
                        let mut k = idx.clone();
                        k[i] = *a as u16;
                        k[j] = *b as u16;
                        push(&mut out.terms, k, &c1 * y);
                    }
                }
            }
        }
        out
    }

    /// Left-multiplies slot `i` (0-based) by the arity-1 element `x`.
    pub fn mul_left_slot(&self, alg: &StructureAlgebra, x: &TensorElement, i: usize) -> TensorElement {
        debug_assert!(x.arity == 1 && i < self.arity);
        let mut out = Self::zero(self.dim, self.arity);
        for (idx, c) in &self.terms {
            for (xi, xc) in &x.terms {
                let c0 = c * xc;
                for (a, y) in alg.product(xi[0] as usize, idx[i] as usize) {
                    let mut k = idx.clone();
                    k[i] = *a as u16;
                    push(&mut out.terms, k, &c0 * y);
                }
            }
        }
        out
    }

    /// Replaces slot `slot` by the image of a linear map `A → A^{⊗k}`,
    /// given as one arity-`k` element per basis vector.
    pub fn apply_slot(&self, slot: usize, images: &[TensorElement]) -> TensorElement {
        let k = images.first().map_or(0, |t| t.arity);
        let mut out = Self::zero(self.dim, self.arity + k - 1);
        for (idx, c) in &self.terms {
            for (img, x) in &images[idx[slot] as usize].terms {
                let mut n = Vec::with_capacity(out.arity);
                n.extend_from_slice(&idx[..slot]);
                n.extend_from_slice(img);
                n.extend_from_slice(&idx[slot + 1..]);
                push(&mut out.terms, n, c * x);
            }
        }
        out
    }

    /// Multiplies consecutive slot groups; `groups[g]` slots collapse into one
    /// output slot, left-nested. A group of size 0 inserts a unit.
    pub fn multiply_groups(&self, alg: &StructureAlgebra, groups: &[usize]) -> Result<TensorElement, AlgebraError> {
        let total: usize = groups.iter().sum();
        if total != self.arity {
            return Err(AlgebraError::ArityMismatch(total, self.arity));
        }
        let unit = alg.unit_terms();
        let mut out = Self::zero(self.dim, groups.len());
        for (idx, c) in &self.terms {
            let mut partial: Vec<(Index, Scalar)> = vec![(Vec::with_capacity(groups.len()), c.clone())];
            let mut pos = 0;
            for &g in groups {
                let mut next = Vec::new();
                for (pre, pc) in &partial {
                    let mut vals: Vec<(usize, Scalar)> = if g == 0 {
                        unit.clone()
                    } else {
                        vec![(idx[pos] as usize, Scalar::one())]
                    };
                    for s in 1..g {
                        let b = idx[pos + s] as usize;
                        let mut nv = Vec::new();
                        for (a, x) in &vals {
                            for (e, y) in alg.product(*a, b) {
                                nv.push((*e, x * y));
                            }
                        }
                        vals = nv;
                    }
                    for (e, x) in vals {
                        let mut p = pre.clone();
                        p.push(e as u16);
                        next.push((p, pc * &x));
                    }
                }
                partial = next;
                pos += g;
            }
            for (i, x) in partial {
                push(&mut out.terms, i, x);
            }
        }
        Ok(out)
    }

    /// Renders with basis labels, e.g. `(s⊗w)·2/1 + (1⊗sw)·-1/2`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Labeled { t: self, labels }
    }
}

struct Labeled<'a> {
    t: &'a TensorElement,
    labels: &'a [String],
}

impl fmt::Display for Labeled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.t.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, c)) in self.t.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let names: Vec<&str> = idx.iter().map(|&k| self.labels[k as usize].as_str()).collect();
            if names.is_empty() {
                write!(f, "{c}")?;
            } else {
                write!(f, "({})·{c}", names.join("⊗"))?;
            }
        }
        Ok(())
    }
}

/// `σ_*`: the entry in slot `k` moves to slot `σ(k)`.
pub fn sigma_star(sigma: &Permutation, u: &TensorElement) -> Result<TensorElement, AlgebraError> {
    if sigma.size() != u.arity {
        return Err(AlgebraError::SizeMismatch(sigma.size(), u.arity));
    }
    if sigma.is_identity() {
        return Ok(u.clone());
    }
    let terms = u.terms.iter().map(|(idx, c)| {
        let mut k = idx.clone();
        for (s, &v) in idx.iter().enumerate() {
            k[sigma.apply(s)] = v;
        }
        (k, c.clone())
    });
    Ok(TensorElement::from_terms(u.dim, u.arity, terms))
}

fn check_slot(slot: usize, arity: usize) -> Result<(), AlgebraError> {
    if slot == 0 || slot > arity {
        return Err(AlgebraError::SlotOutOfRange { slot, arity });
    }
    Ok(())
}

/// Places the legs of `r` in the 1-based slots `i` and `j` of `A^{⊗n}`, units elsewhere.
pub fn embed_pair(
    alg: &StructureAlgebra,
    r: &TensorElement,
    i: usize,
    j: usize,
    n: usize,
) -> Result<TensorElement, AlgebraError> {
    if r.arity != 2 {
        return Err(AlgebraError::ArityMismatch(r.arity, 2));
    }
    if r.dim != alg.dim() {
        return Err(AlgebraError::AlgebraMismatch(r.dim, alg.dim()));
    }
    check_slot(i, n)?;
    check_slot(j, n)?;
    if i == j {
        return Err(AlgebraError::SameSlot(i));
    }
    Ok(TensorElement::one(alg, n).mul_left_pair(alg, r, i - 1, j - 1))
}

/// Places the arity-1 element `x` in the 1-based slot `i`, units elsewhere.
pub fn embed(alg: &StructureAlgebra, x: &TensorElement, i: usize, n: usize) -> Result<TensorElement, AlgebraError> {
    if x.arity != 1 {
        return Err(AlgebraError::ArityMismatch(x.arity, 1));
    }
    check_slot(i, n)?;
    Ok(TensorElement::one(alg, n).mul_left_slot(alg, x, i - 1))
}

/// Evaluates `Σ Π_factors coeff · ⊗_slots (word of legs)` over all term
/// choices of the factors. `slots[s]` lists `(factor, leg)` pairs whose basis
/// elements are multiplied left to right into output slot `s`; an empty word
/// is the unit. Every leg of every factor must appear exactly once.
pub fn contract_pattern(
    alg: &StructureAlgebra,
    factors: &[&TensorElement],
    slots: &[Vec<(usize, usize)>],
) -> TensorElement {
    let dim = alg.dim();
    let lists: Vec<Vec<(&Index, &Scalar)>> = factors.iter().map(|f| f.terms.iter().collect()).collect();
    let mut out = TensorElement::zero(dim, slots.len());
    let mut choice = vec![0usize; factors.len()];
    if lists.iter().any(|l| l.is_empty()) {
        return out;
    }
    let unit = alg.unit_terms();
    loop {
        let mut coeff = Scalar::one();
        for (f, &c) in choice.iter().enumerate() {
            coeff = &coeff * lists[f][c].1;
        }
        let per_slot: Vec<Vec<(usize, Scalar)>> = slots
            .iter()
            .map(|word| {
                let mut vals: Vec<(usize, Scalar)> = match word.first() {
                    None => unit.clone(),
                    Some(&(f, leg)) => vec![(lists[f][choice[f]].0[leg] as usize, Scalar::one())],
                };
                for &(f, leg) in word.iter().skip(1) {
                    let b = lists[f][choice[f]].0[leg] as usize;
                    let mut next = Vec::new();
                    for (a, x) in &vals {
                        next.extend(alg.product(*a, b).iter().map(|(e, y)| (*e, x * y)));
                    }
                    vals = next;
                }
                vals
            })
            .collect();
        if per_slot.iter().all(|v| !v.is_empty()) {
            let t = TensorElement::product_of_slots(dim, &per_slot);
            for (idx, c) in t.terms {
                push(&mut out.terms, idx, &c * &coeff);
            }
        }
        // advance the mixed-radix counter
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < lists[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
