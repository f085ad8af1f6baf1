//! Bounded complexes of free squarefree modules.
//!
//! Positions are cohomological: the differential at `p` maps the term at `p`
//! to the term at `p + 1`. A minimal resolution of a module sits in
//! positions `≤ 0`, so `Tor_i` appears at position `-i`.
//!
//! A nonzero entry from a generator of degree `B` to one of degree `B'`
//! requires `B' ⊆ B`; it stands for the scalar times the monomial `x^{B∖B'}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::degree::SqDegree;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::RatMatrix;
use crate::module::{free_coords, subquotient, SqModule};
use crate::table::BettiTable;

/// A generator of a free term: a free summand `S(-degree)` at `position`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub degree: SqDegree,
    pub position: i64,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FreeSqComplex {
    n: usize,
    terms: BTreeMap<i64, Vec<SqDegree>>,
    diffs: BTreeMap<i64, RatMatrix>,
}

/// A problem found by [`FreeSqComplex::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Nonzero entry whose target degree is not contained in its source degree.
    Homogeneity {
        position: i64,
        row: usize,
        col: usize,
        source: SqDegree,
        target: SqDegree,
    },
    /// `d^{p+1} ∘ d^p` is nonzero in the given multidegree.
    NonzeroSquare { position: i64, degree: SqDegree },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Homogeneity {
                position,
                row,
                col,
                source,
                target,
            } => write!(
                f,
                "d^{position}[{row},{col}]: degree {source} does not map to {target}"
            ),
            Violation::NonzeroSquare { position, degree } => {
                write!(f, "d^{} d^{position} != 0 in degree {degree}", position + 1)
            }
        }
    }
}

/// A finite complex of vector spaces, e.g. a complex evaluated at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorComplex {
    pub dims: BTreeMap<i64, usize>,
    pub diffs: BTreeMap<i64, RatMatrix>,
}

impl VectorComplex {
    pub fn homology_dims(&self) -> BTreeMap<i64, usize> {
        let rank = |p: i64| self.diffs.get(&p).map_or(0, RatMatrix::rank);
        self.dims
            .iter()
            .map(|(&p, &d)| (p, d - rank(p) - rank(p - 1)))
            .filter(|&(_, h)| h > 0)
            .collect()
    }
}

/// The three invariant tables of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub betti: BettiTable,
    pub homology: BettiTable,
    pub cohomology: BettiTable,
}

/// Total degrees of generators per position, and purity data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinglyGradedProfile {
    pub degrees: BTreeMap<i64, BTreeSet<usize>>,
    /// `d_0 < d_1 < ...`, read from the highest position downwards; empty
    /// unless the complex is pure.
    pub degree_sequence: Vec<usize>,
    pub is_pure: bool,
    pub is_linear: bool,
}

impl FreeSqComplex {
    /// Builds a complex. Empty terms are dropped and missing differentials
    /// are zero. Shapes are checked here; homogeneity and `d² = 0` are left
    /// to [`FreeSqComplex::validate`].
    pub fn new(
        n: usize,
        terms: BTreeMap<i64, Vec<SqDegree>>,
        diffs: BTreeMap<i64, RatMatrix>,
    ) -> Result<Self> {
        let terms: BTreeMap<i64, Vec<SqDegree>> =
            terms.into_iter().filter(|(_, g)| !g.is_empty()).collect();
        for (p, gens) in &terms {
            if let Some(g) = gens.iter().find(|g| g.n() != n) {
                return Err(Error::Shape(format!(
                    "generator {g} at position {p} has {} variables, expected {n}",
                    g.n()
                )));
            }
        }
        let size = |p: i64| terms.get(&p).map_or(0, Vec::len);
        let mut kept = BTreeMap::new();
        for (p, d) in diffs {
            if d.shape() != (size(p + 1), size(p)) {
                return Err(Error::Shape(format!(
                    "differential at {p} has shape {:?}, expected {:?}",
                    d.shape(),
                    (size(p + 1), size(p))
                )));
            }
            if d.rows() > 0 && d.cols() > 0 {
                kept.insert(p, d);
            }
        }
        Ok(FreeSqComplex {
            n,
            terms,
            diffs: kept,
        })
    }

    pub fn empty(n: usize) -> Self {
        FreeSqComplex {
            n,
            terms: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    /// A single free module `⊕ S(-g)` placed at position 0.
    pub fn free_module(n: usize, gens: &[SqDegree]) -> Self {
        let terms = BTreeMap::from([(0, gens.to_vec())]);
        FreeSqComplex::new(n, terms, BTreeMap::new()).expect("single term")
    }

    /// The Koszul resolution of `k = S/(x_1, ..., x_n)` in positions `-n..=0`.
    pub fn koszul(n: usize) -> Self {
        let level = |k: usize| -> Vec<SqDegree> {
            let mut v: Vec<SqDegree> = SqDegree::all(n).into_iter().filter(|s| s.len() == k).collect();
            v.sort_by_key(SqDegree::bits);
            v
        };
        let mut terms = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for k in 0..=n {
            terms.insert(-(k as i64), level(k));
        }
        for k in 1..=n {
            let src = level(k);
            let dst = level(k - 1);
            let mut d = RatMatrix::zeros(dst.len(), src.len());
            for (c, s) in src.iter().enumerate() {
                for (j, v) in s.vars().into_iter().enumerate() {
                    let r = dst.iter().position(|t| *t == s.without(v)).unwrap();
                    d[(r, c)] = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                }
            }
            diffs.insert(-(k as i64), d);
        }
        FreeSqComplex::new(n, terms, diffs).expect("koszul complex")
    }

    /// `S ← S(-{1,2}) ⊕ S(-{1,3}) ⊕ S(-{2,3})` with row `[x1x2, x1x3, x2x3]`,
    /// over three variables.
    pub fn example23() -> Self {
        let n = 3;
        let pair = |a, b| SqDegree::from_vars(n, &[a, b]).unwrap();
        let terms = BTreeMap::from([
            (-1, vec![pair(1, 2), pair(1, 3), pair(2, 3)]),
            (0, vec![SqDegree::empty(n)]),
        ]);
        let diffs = BTreeMap::from([(-1, RatMatrix::from_i64_rows(&[&[1, 1, 1]]))]);
        FreeSqComplex::new(n, terms, diffs).expect("example complex")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Positions with a nonzero term, ascending.
    pub fn positions(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    pub fn terms(&self) -> &BTreeMap<i64, Vec<SqDegree>> {
        &self.terms
    }

    pub fn generators(&self, p: i64) -> &[SqDegree] {
        self.terms.get(&p).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, p: i64) -> usize {
        self.generators(p).len()
    }

    pub fn total_rank(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    /// All generators in position order.
    pub fn all_generators(&self) -> Vec<Generator> {
        self.terms
            .iter()
            .flat_map(|(&position, gens)| {
                gens.iter().map(move |&degree| Generator { degree, position })
            })
            .collect()
    }

    /// The differential out of position `p` (zero if not stored).
    pub fn diff(&self, p: i64) -> RatMatrix {
        self.diffs
            .get(&p)
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.rank(p + 1), self.rank(p)))
    }

    /// Stored (nonempty) differentials.
    pub fn diffs(&self) -> &BTreeMap<i64, RatMatrix> {
        &self.diffs
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (&p, d) in &self.diffs {
            let src = self.generators(p);
            let dst = self.generators(p + 1);
            for (row, target) in dst.iter().enumerate() {
                for (col, source) in src.iter().enumerate() {
                    if !d[(row, col)].is_zero() && !target.is_subset(source) {
                        out.push(Violation::Homogeneity {
                            position: p,
                            row,
                            col,
                            source: *source,
                            target: *target,
                        });
                    }
                }
            }
        }
        for (&p, d) in &self.diffs {
            let Some(next) = self.diffs.get(&(p + 1)) else {
                continue;
            };
            let sq = next * d;
            let mut seen = BTreeSet::new();
            for col in 0..sq.cols() {
                if (0..sq.rows()).any(|r| !sq[(r, col)].is_zero()) {
                    let degree = self.generators(p)[col];
                    if seen.insert(degree) {
                        out.push(Violation::NonzeroSquare { position: p, degree });
                    }
                }
            }
        }
        out
    }

    /// True when no nonzero entry joins two generators of equal degree.
    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(|(&p, d)| {
            let src = self.generators(p);
            let dst = self.generators(p + 1);
            (0..d.rows()).all(|r| {
                (0..d.cols()).all(|c| d[(r, c)].is_zero() || src[c] != dst[r])
            })
        })
    }

    fn coords(&self, p: i64, r: SqDegree) -> Vec<usize> {
        free_coords(self.generators(p), r)
    }

    /// The differential at `p` restricted to multidegree `R`.
    pub fn diff_at(&self, p: i64, r: SqDegree) -> RatMatrix {
        let rows = self.coords(p + 1, r);
        let cols = self.coords(p, r);
        match self.diffs.get(&p) {
            Some(d) => d.select(&rows, &cols),
            None => RatMatrix::zeros(rows.len(), cols.len()),
        }
    }

    /// The vector-space complex `F_R`: at each position, the generators of
    /// degree contained in `R`, with the scalar entries between them.
    pub fn evaluate_at(&self, r: SqDegree) -> VectorComplex {
        let mut dims = BTreeMap::new();
        let mut diffs = BTreeMap::new();
        for &p in self.terms.keys() {
            let d = self.coords(p, r).len();
            if d > 0 {
                dims.insert(p, d);
            }
        }
        for &p in self.diffs.keys() {
            let m = self.diff_at(p, r);
            if m.rows() > 0 && m.cols() > 0 {
                diffs.insert(p, m);
            }
        }
        VectorComplex { dims, diffs }
    }

    /// Dimensions `H^i_R` for all positions and degrees.
    pub fn homology_table(&self) -> BettiTable {
        let degrees = SqDegree::all(self.n);
        let parts: Vec<Vec<(i64, SqDegree, usize)>> = degrees
            .par_iter()
            .map(|&r| {
                self.evaluate_at(r)
                    .homology_dims()
                    .into_iter()
                    .map(|(p, h)| (p, r, h))
                    .collect()
            })
            .collect();
        parts.into_iter().flatten().collect()
    }

    /// Homology modules `H^i(F)`, nonzero ones only.
    ///
    /// In each degree a basis of `H^i_R` is represented by kernel vectors
    /// of `d^i_R` that extend an echelon basis of the image of `d^{i-1}_R`.
    pub fn homology(&self) -> BTreeMap<i64, SqModule> {
        let mut out = BTreeMap::new();
        for (&p, gens) in &self.terms {
            let free = SqModule::free(self.n, gens);
            let pieces: Vec<(RatMatrix, RatMatrix)> = (0..(1u32 << self.n))
                .into_par_iter()
                .map(|bits| {
                    let r = SqDegree::from_bits(self.n, bits);
                    let z = self.diff_at(p, r).kernel_matrix();
                    let b = self.diff_at(p - 1, r);
                    (z, b)
                })
                .collect();
            let (z, b): (Vec<RatMatrix>, Vec<RatMatrix>) = pieces.into_iter().unzip();
            let (h, _) = subquotient(&free, &z, &b).expect("cycles form a submodule");
            if !h.is_zero() {
                out.insert(p, h);
            }
        }
        out
    }

    /// `D(F) = Hom(F, S(-1))`: generator `(B, p)` becomes `(B^c, -p)` and the
    /// differential at `q` is `(-1)^q` times the transpose of `d^{-q-1}`.
    pub fn dualize(&self) -> FreeSqComplex {
        let terms = self
            .terms
            .iter()
            .map(|(&p, gens)| (-p, gens.iter().map(SqDegree::complement).collect()))
            .collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&p, d)| {
                let q = -p - 1;
                let t = d.transpose();
                (q, if q % 2 == 0 { t } else { t.neg() })
            })
            .collect();
        FreeSqComplex::new(self.n, terms, diffs).expect("dual shapes")
    }

    /// `C^i_R = dim H^{-i}(D(F))_{R^c}`.
    pub fn cohomology(&self) -> BettiTable {
        self.dualize()
            .homology_table()
            .reindex(|p, r| (-p, r.complement()))
    }

    /// Counts of generators by position and degree.
    pub fn generator_table(&self) -> BettiTable {
        self.all_generators()
            .into_iter()
            .map(|g| (g.position, g.degree, 1))
            .collect()
    }

    /// Betti spaces `B^i_R`: the generator table of the minimal model.
    pub fn betti_table(&self) -> BettiTable {
        if self.is_minimal() {
            self.generator_table()
        } else {
            self.minimalize().generator_table()
        }
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            betti: self.betti_table(),
            homology: self.homology_table(),
            cohomology: self.cohomology(),
        }
    }

    /// Cancels every unit entry between generators of equal degree.
    ///
    /// Positions are scanned in increasing order. A cancellation at `p` only
    /// alters `d^p` among the entries that can still be pivots, so each
    /// position is exhausted before moving on. Within `d^p` the first pivot
    /// in row-major order is taken.
    pub fn minimalize(&self) -> FreeSqComplex {
        let mut terms = self.terms.clone();
        let mut diffs: BTreeMap<i64, RatMatrix> = self
            .terms
            .keys()
            .map(|&p| (p, self.diff(p)))
            .collect();
        let positions: Vec<i64> = terms.keys().copied().collect();
        for p in positions {
            loop {
                let src = terms.get(&p).cloned().unwrap_or_default();
                let dst = terms.get(&(p + 1)).cloned().unwrap_or_default();
                let Some(d) = diffs.get(&p) else { break };
                let pivot = (0..d.rows()).find_map(|h| {
                    (0..d.cols())
                        .find(|&g| src[g] == dst[h] && !d[(h, g)].is_zero())
                        .map(|g| (h, g))
                });
                let Some((h, g)) = pivot else { break };
                let c = d[(h, g)].clone();
                let mut next = d.clone();
                for i in 0..d.rows() {
                    if d[(i, g)].is_zero() {
                        continue;
                    }
                    let f = &d[(i, g)] / &c;
                    for j in 0..d.cols() {
                        if !d[(h, j)].is_zero() {
                            next[(i, j)] -= &f * &d[(h, j)];
                        }
                    }
                }
                diffs.insert(p, next.remove_row(h).remove_col(g));
                if let Some(prev) = diffs.get_mut(&(p - 1)) {
                    *prev = prev.remove_row(g);
                }
                if let Some(after) = diffs.get_mut(&(p + 1)) {
                    *after = after.remove_col(h);
                }
                terms.get_mut(&p).unwrap().remove(g);
                terms.get_mut(&(p + 1)).unwrap().remove(h);
            }
        }
        let terms: BTreeMap<i64, Vec<SqDegree>> =
            terms.into_iter().filter(|(_, g)| !g.is_empty()).collect();
        let diffs = diffs
            .into_iter()
            .filter(|(p, _)| terms.contains_key(p) && terms.contains_key(&(p + 1)))
            .collect();
        FreeSqComplex::new(self.n, terms, diffs).expect("minimalization keeps shapes")
    }

    /// Generator tables of the linear strands: a generator of degree `R` at
    /// position `j` lies on strand `j + |R|`.
    pub fn strands(&self) -> Result<BTreeMap<i64, BettiTable>> {
        self.require_minimal()?;
        let mut out: BTreeMap<i64, BettiTable> = BTreeMap::new();
        for g in self.all_generators() {
            out.entry(g.position + g.degree.len() as i64)
                .or_default()
                .add(g.position, g.degree, 1);
        }
        Ok(out)
    }

    pub fn singly_graded_profile(&self) -> Result<SinglyGradedProfile> {
        self.require_minimal()?;
        let degrees: BTreeMap<i64, BTreeSet<usize>> = self
            .terms
            .iter()
            .map(|(&p, gens)| (p, gens.iter().map(SqDegree::len).collect()))
            .collect();
        let positions: Vec<i64> = degrees.keys().rev().copied().collect();
        let contiguous = positions.windows(2).all(|w| w[0] == w[1] + 1);
        let single = degrees.values().all(|s| s.len() == 1);
        let seq: Vec<usize> = if single {
            positions
                .iter()
                .map(|p| *degrees[p].iter().next().unwrap())
                .collect()
        } else {
            Vec::new()
        };
        let increasing = seq.windows(2).all(|w| w[0] < w[1]);
        let is_pure = !positions.is_empty() && contiguous && single && increasing;
        let is_linear = is_pure && seq.windows(2).all(|w| w[1] == w[0] + 1);
        Ok(SinglyGradedProfile {
            degrees,
            degree_sequence: if is_pure { seq } else { Vec::new() },
            is_pure,
            is_linear,
        })
    }

    fn require_minimal(&self) -> Result<()> {
        if self.is_minimal() {
            Ok(())
        } else {
            Err(Error::NotMinimal(
                "a differential has a unit entry between equal degrees".to_string(),
            ))
        }
    }

    /// The translate `F[k]`, with `(F[k])^q = F^{q+k}` and differential
    /// `(-1)^k d`.
    pub fn translate(&self, k: i64) -> FreeSqComplex {
        let terms = self.terms.iter().map(|(&p, g)| (p - k, g.clone())).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&p, d)| (p - k, if k % 2 == 0 { d.clone() } else { d.neg() }))
            .collect();
        FreeSqComplex::new(self.n, terms, diffs).expect("translate")
    }
}

impl fmt::Debug for FreeSqComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FreeSqComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return writeln!(f, "0");
        }
        for (p, gens) in self.terms.iter().rev() {
            let degs: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
            writeln!(f, "[{p:>3}] {}", degs.join(" "))?;
            if let Some(d) = self.diffs.get(&(p - 1)) {
                for row in 0..d.rows() {
                    let cells: Vec<String> = d.row(row).iter().map(|x| x.to_string()).collect();
                    writeln!(f, "        | {}", cells.join(" "))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(n: usize, vars: &[usize]) -> SqDegree {
        SqDegree::from_vars(n, vars).unwrap()
    }

    #[test]
    fn koszul_is_valid() {
        for n in 0..=4 {
            let k = FreeSqComplex::koszul(n);
            assert!(k.validate().is_empty(), "n = {n}");
            assert!(k.is_minimal());
            assert_eq!(k.total_rank(), 1 << n);
        }
    }

    #[test]
    fn homogeneity_violation_is_reported() {
        let n = 2;
        let terms = BTreeMap::from([(0, vec![deg(n, &[1])]), (1, vec![deg(n, &[2])])]);
        let diffs = BTreeMap::from([(0, RatMatrix::from_i64_rows(&[&[1]]))]);
        let f = FreeSqComplex::new(n, terms, diffs).unwrap();
        let v = f.validate();
        assert_eq!(v.len(), 1);
        assert!(matches!(v[0], Violation::Homogeneity { position: 0, .. }));
    }

    #[test]
    fn nonzero_square_is_reported() {
        let n = 1;
        let e = SqDegree::empty(n);
        let terms = BTreeMap::from([(0, vec![e]), (1, vec![e]), (2, vec![e])]);
        let one = RatMatrix::from_i64_rows(&[&[1]]);
        let diffs = BTreeMap::from([(0, one.clone()), (1, one)]);
        let f = FreeSqComplex::new(n, terms, diffs).unwrap();
        assert_eq!(
            f.validate(),
            vec![Violation::NonzeroSquare { position: 0, degree: e }]
        );
    }

    #[test]
    fn example23_is_valid() {
        assert!(FreeSqComplex::example23().validate().is_empty());
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let n = 1;
        let terms = BTreeMap::from([(0, vec![SqDegree::empty(n)])]);
        let diffs = BTreeMap::from([(0, RatMatrix::from_i64_rows(&[&[1]]))]);
        assert!(FreeSqComplex::new(n, terms, diffs).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let k = FreeSqComplex::koszul(2);
        let e = k.evaluate_at(SqDegree::full(2));
        assert_eq!(e.dims.values().copied().collect::<Vec<_>>(), vec![1, 2, 1]);
        assert!(e.homology_dims().is_empty());

        let f = FreeSqComplex::example23();
        let e = f.evaluate_at(deg(3, &[1, 2]));
        assert_eq!(e.dims, BTreeMap::from([(-1, 1), (0, 1)]));
        assert_eq!(e.diffs[&-1], RatMatrix::from_i64_rows(&[&[1]]));

        let e = f.evaluate_at(SqDegree::empty(3));
        assert_eq!(e.dims, BTreeMap::from([(0, 1)]));
        assert!(e.diffs.is_empty());
    }

    #[test]
    fn homology_of_koszul() {
        let h = FreeSqComplex::koszul(2).homology();
        assert_eq!(h.len(), 1);
        let k = &h[&0];
        assert_eq!(k.dim(SqDegree::empty(2)), 1);
        assert_eq!(k.total_dim(), 1);
    }

    #[test]
    fn homology_of_example23() {
        let f = FreeSqComplex::example23();
        let h = f.homology();
        let h0 = &h[&0];
        for r in SqDegree::all(3) {
            assert_eq!(h0.dim(r), usize::from(r.len() <= 1), "{r}");
        }
        assert!(h.contains_key(&-1));
        assert!(h0.is_valid());
        assert!(h[&-1].is_valid());
    }

    #[test]
    fn homology_of_single_free_term() {
        let b = deg(3, &[2]);
        let h = FreeSqComplex::free_module(3, &[b]).homology();
        assert_eq!(h[&0], SqModule::free(3, &[b]));
    }

    #[test]
    fn dualize_small() {
        let n = 3;
        let terms = BTreeMap::from([
            (-1, vec![deg(n, &[1, 2])]),
            (0, vec![SqDegree::empty(n)]),
        ]);
        let diffs = BTreeMap::from([(-1, RatMatrix::from_i64_rows(&[&[1]]))]);
        let f = FreeSqComplex::new(n, terms, diffs).unwrap();
        let d = f.dualize();
        assert_eq!(d.generators(0), &[SqDegree::full(n)]);
        assert_eq!(d.generators(1), &[deg(n, &[3])]);
        assert!(d.validate().is_empty());
    }

    #[test]
    fn double_dual_generators() {
        let f = FreeSqComplex::example23();
        let dd = f.dualize().dualize();
        assert_eq!(dd.terms(), f.terms());
        assert_eq!(dd.homology_table(), f.homology_table());
    }

    #[test]
    fn cohomology_examples() {
        let k1 = FreeSqComplex::koszul(1);
        let c = k1.cohomology();
        assert_eq!(c, [(-1, SqDegree::full(1), 1)].into_iter().collect());

        let s = FreeSqComplex::free_module(1, &[SqDegree::empty(1)]);
        assert_eq!(s.cohomology(), [(0, SqDegree::empty(1), 1)].into_iter().collect());

        let e = SqDegree::empty(1);
        let terms = BTreeMap::from([(0, vec![e]), (1, vec![e])]);
        let diffs = BTreeMap::from([(0, RatMatrix::from_i64_rows(&[&[1]]))]);
        let exact = FreeSqComplex::new(1, terms, diffs).unwrap();
        assert!(exact.cohomology().is_empty());
    }

    #[test]
    fn invariants_small() {
        let inv = FreeSqComplex::koszul(1).invariants();
        let one = SqDegree::full(1);
        let zero = SqDegree::empty(1);
        assert_eq!(inv.betti, [(0, zero, 1), (-1, one, 1)].into_iter().collect());
        assert_eq!(inv.homology, [(0, zero, 1)].into_iter().collect());
        assert_eq!(inv.cohomology, [(-1, one, 1)].into_iter().collect());

        let inv = FreeSqComplex::free_module(1, &[zero]).invariants();
        assert_eq!(inv.betti, [(0, zero, 1)].into_iter().collect());
        assert_eq!(inv.homology, [(0, zero, 1), (0, one, 1)].into_iter().collect());
    }

    #[test]
    fn minimalize_cancels_unit_map() {
        let e = SqDegree::empty(1);
        let terms = BTreeMap::from([(0, vec![e]), (1, vec![e])]);
        let diffs = BTreeMap::from([(0, RatMatrix::from_i64_rows(&[&[1]]))]);
        let f = FreeSqComplex::new(1, terms, diffs).unwrap();
        assert!(f.minimalize().is_empty());
        let k = FreeSqComplex::koszul(3);
        assert_eq!(k.minimalize(), k);
    }

    #[test]
    fn minimalize_keeps_homology() {
        // Koszul complex of k plus a contractible summand S(-{1}) -> S(-{1}).
        let n = 2;
        let k = FreeSqComplex::koszul(n);
        let mut terms = k.terms().clone();
        terms.get_mut(&-1).unwrap().push(deg(n, &[1]));
        terms.get_mut(&0).unwrap().push(deg(n, &[1]));
        let mut d = RatMatrix::zeros(2, 3);
        d[(0, 0)] = Rat::one();
        d[(0, 1)] = Rat::one();
        d[(1, 2)] = Rat::one();
        d[(1, 0)] = Rat::one();
        let mut d2 = RatMatrix::zeros(3, 1);
        d2[(0, 0)] = Rat::one();
        d2[(1, 0)] = -Rat::one();
        d2[(2, 0)] = -Rat::one();
        let f = FreeSqComplex::new(
            n,
            terms,
            BTreeMap::from([(-1, d), (-2, d2)]),
        )
        .unwrap();
        assert!(f.validate().is_empty());
        let m = f.minimalize();
        assert!(m.is_minimal());
        assert!(m.validate().is_empty());
        assert_eq!(m.generator_table(), k.generator_table());
        assert_eq!(m.homology_table(), f.homology_table());
    }

    #[test]
    fn strands_examples() {
        let s = FreeSqComplex::koszul(3).strands().unwrap();
        assert_eq!(s.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert!(FreeSqComplex::empty(2).strands().unwrap().is_empty());

        let e = SqDegree::empty(1);
        let terms = BTreeMap::from([(0, vec![e]), (1, vec![e])]);
        let diffs = BTreeMap::from([(0, RatMatrix::from_i64_rows(&[&[1]]))]);
        let f = FreeSqComplex::new(1, terms, diffs).unwrap();
        assert!(matches!(f.strands(), Err(Error::NotMinimal(_))));
        assert!(f.singly_graded_profile().is_err());
    }

    #[test]
    fn profile_examples() {
        let p = FreeSqComplex::example23().singly_graded_profile().unwrap();
        assert!(p.is_pure);
        assert!(!p.is_linear);
        assert_eq!(p.degree_sequence, vec![0, 2]);

        let p = FreeSqComplex::koszul(3).singly_graded_profile().unwrap();
        assert!(p.is_linear);
        assert_eq!(p.degree_sequence, vec![0, 1, 2, 3]);

        let mixed = FreeSqComplex::free_module(2, &[deg(2, &[]), deg(2, &[1])]);
        let p = mixed.singly_graded_profile().unwrap();
        assert!(!p.is_pure);
        assert!(p.degree_sequence.is_empty());
    }

    #[test]
    fn translate_moves_positions() {
        let k = FreeSqComplex::koszul(2);
        let t = k.translate(2);
        assert_eq!(t.positions(), vec![-4, -3, -2]);
        assert_eq!(t.generator_table(), k.generator_table().translate(2));
        assert!(t.validate().is_empty());
    }
}
