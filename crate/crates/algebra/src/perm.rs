//! Permutations of `{1, …, n}`, stored 0-based.

use std::fmt;

use crate::AlgebraError;

/// A bijection of `{1..n}`. `images[k]` is the 0-based image of the 0-based point `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, AlgebraError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(AlgebraError::NotAPermutation(images.iter().map(|x| x + 1).collect()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from the 1-based image array used in JSON and on the command line.
    pub fn from_one_based(images: &[usize]) -> Result<Self, AlgebraError> {
        if images.contains(&0) {
            return Err(AlgebraError::NotAPermutation(images.to_vec()));
        }
        Self::from_images(images.iter().map(|x| x - 1).collect())
    }

    /// Transposition of 0-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    /// 0-based image of a 0-based point.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| k == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self, AlgebraError> {
        if self.size() != other.size() {
            return Err(AlgebraError::SizeMismatch(self.size(), other.size()));
        }
        Ok(Permutation { images: other.images.iter().map(|&k| self.images[k]).collect() })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.size()];
        for (k, &x) in self.images.iter().enumerate() {
            inv[x] = k;
        }
        Permutation { images: inv }
    }

    /// Block product `self ⊗ other` acting on `{1..n+m}`.
    pub fn block(&self, other: &Permutation) -> Self {
        let n = self.size();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|x| x + n));
        Permutation { images }
    }

    /// Cycles in the order of their smallest element, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cyc.push(k);
                k = self.images[k];
            }
            out.push(cyc);
        }
        out
    }

    /// True when no cycle lies entirely inside the last `m` points.
    pub fn is_admissible(&self, m: usize) -> bool {
        let n = self.size().saturating_sub(m);
        self.cycles().iter().all(|c| c.iter().any(|&k| k < n))
    }

    /// One step of the closure contraction: removes the last point by
    /// routing `σ⁻¹(last) ↦ σ(last)`. Returns `None` on a fixed point.
    pub fn close_last(&self) -> Option<Self> {
        let last = self.size().checked_sub(1)?;
        let top = self.images[last];
        if top == last {
            return None;
        }
        let j = self.inverse().images[last];
        let mut images = self.images[..last].to_vec();
        images[j] = top;
        Some(Permutation { images })
    }

    /// Drops a fixed last point.
    pub fn drop_fixed_last(&self) -> Option<Self> {
        let last = self.size().checked_sub(1)?;
        (self.images[last] == last).then(|| Permutation { images: self.images[..last].to_vec() })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_one_based(&[2, 3, 1]).unwrap();
        let b = Permutation::transposition(3, 0, 1);
        assert_eq!(a.compose(&a.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(a.compose(&b).unwrap().one_based(), vec![3, 2, 1]);
        assert!(Permutation::from_one_based(&[1, 1]).is_err());
        assert_eq!(a.to_string(), "[2,3,1]");
    }

    #[test]
    fn admissibility() {
        let swap = Permutation::transposition(2, 0, 1);
        assert!(swap.is_admissible(1));
        assert!(!Permutation::identity(2).is_admissible(1));
        assert!(!swap.is_admissible(2));
        assert_eq!(swap.close_last().unwrap(), Permutation::identity(1));
        assert!(Permutation::identity(2).close_last().is_none());
    }
}
