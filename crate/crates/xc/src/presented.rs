//! Algebras from generators and a confluent pairwise rewriting system.

use std::collections::{BTreeMap, HashMap};

use tangle_algebra::{AlgebraError, Field, Scalar, StructureAlgebra};

pub type Word = Vec<u8>;
pub type Combination = Vec<(Word, Scalar)>;

/// A rewriting system on words: `rule(x, y)` returns the replacement of the
/// adjacent pair `xy`, or `None` when `xy` is already normal.
pub struct Presentation<'a> {
    pub names: &'a [&'a str],
    pub rule: &'a dyn Fn(u8, u8) -> Option<Combination>,
}

impl Presentation<'_> {
    /// Rewrites a word to a combination of normal words.
    pub fn normalize(&self, word: &[u8]) -> BTreeMap<Word, Scalar> {
        let mut done: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut work: Vec<(Word, Scalar)> = vec![(word.to_vec(), Scalar::one())];
        while let Some((w, c)) = work.pop() {
            let hit = (0..w.len().saturating_sub(1)).find_map(|k| (self.rule)(w[k], w[k + 1]).map(|rep| (k, rep)));
            match hit {
                None => {
                    let e = done.entry(w).or_default();
                    *e += &c;
                }
                Some((k, rep)) => {
                    for (mid, x) in rep {
                        let mut nw = w[..k].to_vec();
                        nw.extend_from_slice(&mid);
                        nw.extend_from_slice(&w[k + 2..]);
                        work.push((nw, &c * &x));
                    }
                }
            }
        }
        done.retain(|_, c| !c.is_zero());
        done
    }

    pub fn label(&self, word: &[u8]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter().map(|&g| self.names[g as usize]).collect()
    }

    /// Structure constants on the given normal-word basis.
    pub fn algebra(&self, name: &str, field: Field, basis: &[Word]) -> Result<StructureAlgebra, AlgebraError> {
        let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let unit_pos = index
            .get(&Vec::new())
            .copied()
            .ok_or_else(|| AlgebraError::Invalid("basis lacks the empty word".into()))?;
        let mut unit = vec![Scalar::zero(); basis.len()];
        unit[unit_pos] = Scalar::one();
        let labels = basis.iter().map(|w| self.label(w)).collect();
        let mut mul = Vec::new();
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                let mut w = u.clone();
                w.extend_from_slice(v);
                for (nw, c) in self.normalize(&w) {
                    let k = *index.get(&nw).ok_or_else(|| {
                        AlgebraError::Invalid(format!("normal word {} is not in the basis", self.label(&nw)))
                    })?;
                    mul.push((i, j, k, c));
                }
            }
        }
        StructureAlgebra::new(name, field, labels, mul, &unit)
    }
}
