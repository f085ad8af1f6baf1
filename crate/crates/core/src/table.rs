//! Finitely supported tables indexed by (cohomological position, squarefree degree).

use std::collections::BTreeMap;
use std::fmt;

use crate::degree::SqDegree;

/// Dimensions `(i, R) ↦ d` with only nonzero entries stored.
///
/// Used for Betti spaces `B^i_R`, homology `H^i_R` and cohomology `C^i_R`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BettiTable {
    entries: BTreeMap<(i64, SqDegree), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, position: i64, degree: SqDegree) -> usize {
        self.entries.get(&(position, degree)).copied().unwrap_or(0)
    }

    /// Adds `count` to the entry; zero counts are ignored.
    pub fn add(&mut self, position: i64, degree: SqDegree, count: usize) {
        if count > 0 {
            *self.entries.entry((position, degree)).or_insert(0) += count;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, SqDegree, usize)> + '_ {
        self.entries.iter().map(|(&(p, d), &c)| (p, d, c))
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    /// Applies `(i, R) ↦ f(i, R)` to every index, summing collisions.
    pub fn reindex(&self, f: impl Fn(i64, SqDegree) -> (i64, SqDegree)) -> BettiTable {
        let mut out = BettiTable::new();
        for (p, d, c) in self.iter() {
            let (q, e) = f(p, d);
            out.add(q, e, c);
        }
        out
    }

    /// Table of the translate `X[k]`, whose position `q` holds `X^{q+k}`.
    pub fn translate(&self, k: i64) -> BettiTable {
        self.reindex(|p, d| (p - k, d))
    }

    pub fn filter(&self, keep: impl Fn(i64, SqDegree) -> bool) -> BettiTable {
        let mut out = BettiTable::new();
        for (p, d, c) in self.iter() {
            if keep(p, d) {
                out.add(p, d, c);
            }
        }
        out
    }

    /// Singly graded view: `(position, |R|) ↦ Σ dims`.
    pub fn singly_graded(&self) -> BTreeMap<(i64, usize), usize> {
        let mut out = BTreeMap::new();
        for (p, d, c) in self.iter() {
            *out.entry((p, d.len())).or_insert(0) += c;
        }
        out
    }

    /// Positions with a nonzero entry.
    pub fn positions(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.entries.keys().map(|&(p, _)| p).collect();
        v.dedup();
        v
    }
}

impl FromIterator<(i64, SqDegree, usize)> for BettiTable {
    fn from_iter<T: IntoIterator<Item = (i64, SqDegree, usize)>>(iter: T) -> Self {
        let mut t = BettiTable::new();
        for (p, d, c) in iter {
            t.add(p, d, c);
        }
        t
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(p, d, c)| (format!("({p},{d})"), c)))
            .finish()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "(empty)");
        }
        for (p, d, c) in self.iter() {
            writeln!(f, "{p:>4}  {d:<16} {c}")?;
        }
        Ok(())
    }
}
