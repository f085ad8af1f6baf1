//! Squarefree modules as finite data: one vector space per subset `R ⊆ [n]`
//! together with the multiplication maps `x_v : M_R → M_{R∪{v}}`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::complex::FreeSqComplex;
use crate::degree::SqDegree;
use crate::error::{Error, Result};
use crate::exact::{binom, Rat};
use crate::matrix::RatMatrix;
use crate::table::BettiTable;

/// A squarefree module, stored by its graded pieces `M_R` (as dimensions,
/// with an implicit ordered basis) and the variable multiplications.
///
/// `mult(v, R)` is a `dim M_{R∪{v}} × dim M_R` matrix, defined for `v ∉ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqModule {
    n: usize,
    dims: Vec<usize>,
    mult: Vec<Option<RatMatrix>>,
}

impl SqModule {
    /// Builds a module from its dimension table and a callback producing
    /// `mult(v, R)`. Shapes are checked; commutativity is not (see
    /// [`SqModule::commutativity_violations`]).
    pub fn from_parts(
        n: usize,
        dims: Vec<usize>,
        mut mult: impl FnMut(usize, SqDegree) -> RatMatrix,
    ) -> Result<Self> {
        if dims.len() != 1 << n {
            return Err(Error::Shape(format!(
                "expected {} graded pieces, got {}",
                1 << n,
                dims.len()
            )));
        }
        let mut maps = vec![None; (1 << n) * n];
        for r in 0..(1u32 << n) {
            let deg = SqDegree::from_bits(n, r);
            for v in 1..=n {
                if deg.contains(v) {
                    continue;
                }
                let m = mult(v, deg);
                let expect = (dims[deg.with(v).bits() as usize], dims[r as usize]);
                if m.shape() != expect {
                    return Err(Error::Shape(format!(
                        "mult({v}, {deg}) has shape {:?}, expected {:?}",
                        m.shape(),
                        expect
                    )));
                }
                maps[r as usize * n + v - 1] = Some(m);
            }
        }
        Ok(SqModule { n, dims, mult: maps })
    }

    pub fn zero(n: usize) -> Self {
        SqModule::from_parts(n, vec![0; 1 << n], |_, _| RatMatrix::zeros(0, 0))
            .expect("zero module")
    }

    /// The free module `⊕ S(-g)` over the given generator degrees. The basis
    /// of the piece at `R` is the list of generators contained in `R`, in order.
    pub fn free(n: usize, gens: &[SqDegree]) -> Self {
        let dims = (0..(1u32 << n))
            .map(|r| free_coords(gens, SqDegree::from_bits(n, r)).len())
            .collect();
        SqModule::from_parts(n, dims, |v, r| {
            inclusion_matrix(gens, r, r.with(v))
        })
        .expect("free module shapes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self, r: SqDegree) -> usize {
        self.dims[r.bits() as usize]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Multiplication by `x_v` out of degree `R`; requires `v ∉ R`.
    pub fn mult(&self, v: usize, r: SqDegree) -> &RatMatrix {
        self.mult[r.bits() as usize * self.n + v - 1]
            .as_ref()
            .expect("mult(v, R) requires v not in R")
    }

    /// Composite multiplication `M_R → M_T` for `R ⊆ T`, by the monomial
    /// `x^{T∖R}`, taking the variables in increasing order.
    pub fn mult_path(&self, from: SqDegree, to: SqDegree) -> RatMatrix {
        debug_assert!(from.is_subset(&to));
        let mut acc = RatMatrix::identity(self.dim(from));
        let mut cur = from;
        for v in to.difference(&from).vars() {
            acc = self.mult(v, cur) * &acc;
            cur = cur.with(v);
        }
        acc
    }

    /// Squares `x_u x_v = x_v x_u` that fail to commute, as `(u, v, R)`.
    pub fn commutativity_violations(&self) -> Vec<(usize, usize, SqDegree)> {
        let mut bad = Vec::new();
        for r in SqDegree::all(self.n) {
            for u in 1..=self.n {
                for v in (u + 1)..=self.n {
                    if r.contains(u) || r.contains(v) {
                        continue;
                    }
                    let uv = self.mult(u, r.with(v)) * self.mult(v, r);
                    let vu = self.mult(v, r.with(u)) * self.mult(u, r);
                    if uv != vu {
                        bad.push((u, v, r));
                    }
                }
            }
        }
        bad
    }

    pub fn is_valid(&self) -> bool {
        self.commutativity_violations().is_empty()
    }

    pub fn direct_sum(&self, other: &SqModule) -> SqModule {
        assert_eq!(self.n, other.n);
        let dims = self
            .dims
            .iter()
            .zip(&other.dims)
            .map(|(a, b)| a + b)
            .collect();
        SqModule::from_parts(self.n, dims, |v, r| {
            block_diag(self.mult(v, r), other.mult(v, r))
        })
        .expect("direct sum shapes")
    }

    /// Dimension table as a [`BettiTable`] placed at `position`.
    pub fn dim_table(&self, position: i64) -> BettiTable {
        SqDegree::all(self.n)
            .into_iter()
            .map(|r| (position, r, self.dim(r)))
            .collect()
    }

    /// Rank of `x_v` for every `(v, R)`; a basis-independent fingerprint.
    pub fn mult_ranks(&self) -> BTreeMap<(usize, SqDegree), usize> {
        let mut out = BTreeMap::new();
        for r in SqDegree::all(self.n) {
            for v in 1..=self.n {
                if !r.contains(v) {
                    out.insert((v, r), self.mult(v, r).rank());
                }
            }
        }
        out
    }
}

/// Indices of the generators contained in `r`: the basis of a free module at `r`.
pub fn free_coords(gens: &[SqDegree], r: SqDegree) -> Vec<usize> {
    gens.iter()
        .enumerate()
        .filter(|(_, g)| g.is_subset(&r))
        .map(|(i, _)| i)
        .collect()
}

/// Inclusion `F_R → F_T` of a free module in generator coordinates.
pub fn inclusion_matrix(gens: &[SqDegree], from: SqDegree, to: SqDegree) -> RatMatrix {
    let src = free_coords(gens, from);
    let dst = free_coords(gens, to);
    let mut m = RatMatrix::zeros(dst.len(), src.len());
    for (j, g) in src.iter().enumerate() {
        let i = dst.iter().position(|x| x == g).expect("inclusion of generators");
        m[(i, j)] = Rat::one();
    }
    m
}

pub(crate) fn block_diag(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    RatMatrix::block(
        a,
        &RatMatrix::zeros(a.rows(), b.cols()),
        &RatMatrix::zeros(b.rows(), a.cols()),
        b,
    )
}

/// A degreewise linear map between squarefree modules: one matrix per `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqMap {
    n: usize,
    blocks: Vec<RatMatrix>,
}

impl SqMap {
    pub fn from_fn(n: usize, mut f: impl FnMut(SqDegree) -> RatMatrix) -> Self {
        let blocks = (0..(1u32 << n))
            .map(|r| f(SqDegree::from_bits(n, r)))
            .collect();
        SqMap { n, blocks }
    }

    pub fn zero(source: &SqModule, target: &SqModule) -> Self {
        SqMap::from_fn(source.n, |r| RatMatrix::zeros(target.dim(r), source.dim(r)))
    }

    /// The map out of the free module on `gens` sending generator `i` to
    /// `images[i] ∈ target_{gens[i]}`.
    pub fn from_free(gens: &[SqDegree], target: &SqModule, images: &[Vec<Rat>]) -> Self {
        assert_eq!(gens.len(), images.len());
        let n = target.n();
        SqMap::from_fn(n, |r| {
            let coords = free_coords(gens, r);
            let cols: Vec<Vec<Rat>> = coords
                .iter()
                .map(|&g| target.mult_path(gens[g], r).mul_vec(&images[g]))
                .collect();
            RatMatrix::from_columns(target.dim(r), &cols)
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, r: SqDegree) -> &RatMatrix {
        &self.blocks[r.bits() as usize]
    }

    pub fn compose(&self, first: &SqMap) -> SqMap {
        SqMap::from_fn(self.n, |r| self.at(r) * first.at(r))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_zero)
    }

    /// Checks shapes against `source → target` and that the map commutes
    /// with every variable multiplication.
    pub fn is_homomorphism(&self, source: &SqModule, target: &SqModule) -> bool {
        SqDegree::all(self.n).into_iter().all(|r| {
            if self.at(r).shape() != (target.dim(r), source.dim(r)) {
                return false;
            }
            (1..=self.n).filter(|&v| !r.contains(v)).all(|v| {
                self.at(r.with(v)) * source.mult(v, r) == target.mult(v, r) * self.at(r)
            })
        })
    }
}

/// Subquotient `Z / B` of a squarefree module `V`, where `Z ⊇ B` are
/// submodules given degreewise by spanning columns.
///
/// Returns the quotient module and, for every `R`, the chosen representatives
/// of its basis in `V_R` (a subset of the supplied `Z_R` columns).
pub fn subquotient(
    v: &SqModule,
    z: &[RatMatrix],
    b: &[RatMatrix],
) -> Result<(SqModule, Vec<RatMatrix>)> {
    let n = v.n();
    let mut reps = Vec::with_capacity(1 << n);
    let mut frames = Vec::with_capacity(1 << n);
    for r in 0..(1usize << n) {
        let bind = b[r].select(
            &(0..b[r].rows()).collect::<Vec<_>>(),
            &b[r].independent_columns(),
        );
        let both = bind.hcat(&z[r]);
        let chosen: Vec<usize> = both
            .independent_columns()
            .into_iter()
            .filter(|&c| c >= bind.cols())
            .map(|c| c - bind.cols())
            .collect();
        let h = z[r].select(&(0..z[r].rows()).collect::<Vec<_>>(), &chosen);
        frames.push((bind.cols(), bind.hcat(&h)));
        reps.push(h);
    }
    let dims: Vec<usize> = reps.iter().map(RatMatrix::cols).collect();
    let mut failure = None;
    let module = SqModule::from_parts(n, dims.clone(), |var, r| {
        let target = r.with(var).bits() as usize;
        let images = v.mult(var, r) * &reps[r.bits() as usize];
        let (skip, frame) = &frames[target];
        match frame.solve(&images) {
            Some(x) => {
                let rows: Vec<usize> = (*skip..x.rows()).collect();
                let cols: Vec<usize> = (0..x.cols()).collect();
                x.select(&rows, &cols)
            }
            None => {
                failure = Some(format!("x_{var} does not preserve the submodule at {r}"));
                RatMatrix::zeros(dims[target], dims[r.bits() as usize])
            }
        }
    })?;
    match failure {
        Some(msg) => Err(Error::Invalid(msg)),
        None => Ok((module, reps)),
    }
}

/// Minimal generators of a submodule `Z ⊆ V` modulo a submodule `B ⊆ Z`.
///
/// Degrees are scanned by increasing cardinality; at each `R` the columns of
/// `Z_R` not already spanned by `B_R` and by `x_v · Z_{R∖v}` are kept.
pub fn minimal_generators(
    v: &SqModule,
    z: &[RatMatrix],
    b: &[RatMatrix],
) -> Vec<(SqDegree, Vec<Rat>)> {
    let n = v.n();
    let mut gens = Vec::new();
    for r in SqDegree::all(n) {
        let zr = &z[r.bits() as usize];
        if zr.cols() == 0 {
            continue;
        }
        let mut span = b[r.bits() as usize].clone();
        for var in r.vars() {
            let below = r.without(var);
            let img = v.mult(var, below) * &z[below.bits() as usize];
            span = span.hcat(&img);
        }
        let both = span.hcat(zr);
        for c in both.independent_columns() {
            if c >= span.cols() {
                gens.push((r, zr.column(c - span.cols())));
            }
        }
    }
    gens
}

/// The module `(S/A)(-B)` for a partition `A ∪ B ∪ C = [n]`, written `S/A(-B;C)`.
pub fn standard_module(n: usize, a: SqDegree, b: SqDegree, c: SqDegree) -> Result<SqModule> {
    let ok = [a, b, c].iter().all(|d| d.n() == n)
        && a.intersection(&b).is_empty()
        && a.intersection(&c).is_empty()
        && b.intersection(&c).is_empty()
        && a.union(&b).union(&c) == SqDegree::full(n);
    if !ok {
        return Err(Error::NotAPartition { n });
    }
    let present = |r: SqDegree| b.is_subset(&r) && r.intersection(&a).is_empty();
    let dims = (0..(1u32 << n))
        .map(|r| usize::from(present(SqDegree::from_bits(n, r))))
        .collect();
    SqModule::from_parts(n, dims, |v, r| {
        let s = r.with(v);
        match (present(s), present(r)) {
            (true, true) => RatMatrix::identity(1),
            (ts, rs) => RatMatrix::zeros(usize::from(ts), usize::from(rs)),
        }
    })
}

/// The Alexander dual module: `A(M)_R = (M_{R^c})^*`, with `x_v` on `A(M)`
/// the transpose of `x_v : M_{(R∪v)^c} → M_{R^c}`.
pub fn alexander_dual_module(m: &SqModule) -> SqModule {
    let n = m.n();
    let dims = (0..(1u32 << n))
        .map(|r| m.dim(SqDegree::from_bits(n, r).complement()))
        .collect();
    SqModule::from_parts(n, dims, |v, r| {
        m.mult(v, r.with(v).complement()).transpose()
    })
    .expect("alexander dual shapes")
}

/// Dimension of the degree-`d` squarefree part of `S(-b)`: `C(n-|b|, d-|b|)`.
pub fn squarefree_part_dim(b: SqDegree, d: usize, n: usize) -> usize {
    let k = b.len() as i64;
    let v = binom(n as i64 - k, d as i64 - k);
    usize::try_from(v).expect("binomial fits in usize")
}

/// Multigraded Betti numbers `dim Tor_i(M, k)_R`, placed at position `-i`.
///
/// In degree `R` the Koszul complex `K(x_1..x_n) ⊗ M` is the finite complex
/// with terms `⊕_{S⊆R, |S|=i} M_{R∖S}`; basis element `e_S` maps to
/// `Σ_j (-1)^{j-1} x_{s_j} ⊗ e_{S∖s_j}` with `s_1 < s_2 < ...`.
pub fn tor_betti(m: &SqModule) -> BettiTable {
    let n = m.n();
    let mut table = BettiTable::new();
    for r in SqDegree::all(n) {
        let subsets: Vec<Vec<SqDegree>> = (0..=r.len())
            .map(|k| subsets_of_size(r, k))
            .collect();
        let offsets = |k: usize| -> Vec<usize> {
            let mut acc = 0;
            subsets[k]
                .iter()
                .map(|s| {
                    let o = acc;
                    acc += m.dim(r.difference(s));
                    o
                })
                .collect()
        };
        let size = |k: usize| -> usize {
            subsets[k].iter().map(|s| m.dim(r.difference(s))).sum()
        };
        // d_k : K_k → K_{k-1}
        let diff = |k: usize| -> RatMatrix {
            let mut d = RatMatrix::zeros(size(k - 1), size(k));
            let src_off = offsets(k);
            let dst_off = offsets(k - 1);
            for (si, s) in subsets[k].iter().enumerate() {
                let base = r.difference(s);
                for (j, var) in s.vars().into_iter().enumerate() {
                    let face = s.without(var);
                    let ti = subsets[k - 1].iter().position(|t| *t == face).unwrap();
                    let block = m.mult(var, base);
                    let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
                    for a in 0..block.rows() {
                        for c in 0..block.cols() {
                            let x = &block[(a, c)];
                            if !x.is_zero() {
                                d[(dst_off[ti] + a, src_off[si] + c)] += x * &sign;
                            }
                        }
                    }
                }
            }
            d
        };
        let top = r.len();
        let ranks: Vec<usize> = (0..=top + 1)
            .map(|k| if k == 0 || k > top { 0 } else { diff(k).rank() })
            .collect();
        for k in 0..=top {
            let betti = size(k) - ranks[k] - ranks[k + 1];
            table.add(-(k as i64), r, betti);
        }
    }
    table
}

pub(crate) fn subsets_of_size(r: SqDegree, k: usize) -> Vec<SqDegree> {
    let n = r.n();
    let mut out: Vec<SqDegree> = SqDegree::all(n)
        .into_iter()
        .filter(|s| s.len() == k && s.is_subset(&r))
        .collect();
    out.sort_by_key(SqDegree::bits);
    out
}

/// The complex `L(M)`: position `i` is `⊕_{|R|=i} M_R ⊗ S` with `M_R` placed
/// in multidegree `R^c`, and differential
/// `m ↦ Σ_{j∉R} (-1)^{α(j,R)} x_j m`, where `α(j,R) = |{i ∈ R : i < j}|`.
pub fn ell_complex(m: &SqModule) -> FreeSqComplex {
    let n = m.n();
    let mut terms: BTreeMap<i64, Vec<SqDegree>> = BTreeMap::new();
    // (position, R) -> offset of the block of M_R within that position
    let mut offsets: BTreeMap<SqDegree, usize> = BTreeMap::new();
    let mut by_bits = SqDegree::all(n);
    by_bits.sort_by_key(SqDegree::bits);
    for r in by_bits {
        let d = m.dim(r);
        if d == 0 {
            continue;
        }
        let gens = terms.entry(r.len() as i64).or_default();
        offsets.insert(r, gens.len());
        gens.extend(std::iter::repeat_n(r.complement(), d));
    }
    let mut diffs = BTreeMap::new();
    for (&p, src) in &terms {
        let Some(dst) = terms.get(&(p + 1)) else {
            continue;
        };
        let mut d = RatMatrix::zeros(dst.len(), src.len());
        for (&r, &off) in offsets.iter().filter(|(r, _)| r.len() as i64 == p) {
            for j in (1..=n).filter(|&j| !r.contains(j)) {
                let s = r.with(j);
                let Some(&toff) = offsets.get(&s) else {
                    continue;
                };
                let sign = if r.count_below(j) % 2 == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                let block = m.mult(j, r);
                for a in 0..block.rows() {
                    for c in 0..block.cols() {
                        d[(toff + a, off + c)] = &block[(a, c)] * &sign;
                    }
                }
            }
        }
        diffs.insert(p, d);
    }
    FreeSqComplex::new(n, terms, diffs).expect("L(M) is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(n: usize, vars: &[usize]) -> SqDegree {
        SqDegree::from_vars(n, vars).unwrap()
    }

    fn residue_field(n: usize) -> SqModule {
        standard_module(n, SqDegree::full(n), SqDegree::empty(n), SqDegree::empty(n)).unwrap()
    }

    #[test]
    fn standard_module_dims() {
        let m = standard_module(4, deg(4, &[1, 3, 4]), deg(4, &[]), deg(4, &[2])).unwrap();
        for r in SqDegree::all(4) {
            assert_eq!(m.dim(r), usize::from(r.is_subset(&deg(4, &[2]))));
        }
        assert!(m.is_valid());

        let f = standard_module(3, deg(3, &[]), deg(3, &[1, 2, 3]), deg(3, &[])).unwrap();
        for r in SqDegree::all(3) {
            assert_eq!(f.dim(r), usize::from(r == SqDegree::full(3)));
        }

        let m = standard_module(2, deg(2, &[1]), deg(2, &[2]), deg(2, &[])).unwrap();
        assert_eq!(m.dim(deg(2, &[2])), 1);
        assert_eq!(m.dim(deg(2, &[1, 2])), 0);
        assert_eq!(m.dim(deg(2, &[])), 0);
        assert_eq!(m.dim(deg(2, &[1])), 0);
    }

    #[test]
    fn standard_module_rejects_non_partition() {
        let err = standard_module(3, deg(3, &[1]), deg(3, &[1, 2]), deg(3, &[3]));
        assert!(matches!(err, Err(Error::NotAPartition { n: 3 })));
        let err = standard_module(3, deg(3, &[1]), deg(3, &[2]), deg(3, &[]));
        assert!(err.is_err());
    }

    #[test]
    fn alexander_dual_examples() {
        let n = 4;
        let free = SqModule::free(n, &[deg(n, &[1, 3, 4])]);
        let dual = alexander_dual_module(&free);
        let quotient = standard_module(n, deg(n, &[1, 3, 4]), deg(n, &[]), deg(n, &[2])).unwrap();
        assert_eq!(dual, quotient);

        let top = SqModule::free(3, &[SqDegree::full(3)]);
        assert_eq!(alexander_dual_module(&top), residue_field(3));
    }

    #[test]
    fn alexander_dual_of_standard_class() {
        let n = 4;
        let (a, b, c) = (deg(n, &[1]), deg(n, &[2, 3]), deg(n, &[4]));
        let m = standard_module(n, a, b, c).unwrap();
        let expect = standard_module(n, b, a, c).unwrap();
        assert_eq!(alexander_dual_module(&m), expect);
        assert_eq!(alexander_dual_module(&alexander_dual_module(&m)), m);
    }

    #[test]
    fn squarefree_part_dims() {
        assert_eq!(squarefree_part_dim(deg(3, &[]), 2, 3), 3);
        assert_eq!(squarefree_part_dim(deg(4, &[1, 2]), 3, 4), 2);
        assert_eq!(squarefree_part_dim(deg(4, &[1, 2]), 1, 4), 0);
    }

    #[test]
    fn squarefree_part_dim_matches_enumeration() {
        let n = 4;
        for b in SqDegree::all(n) {
            for d in 0..=n {
                let count = SqDegree::all(n)
                    .into_iter()
                    .filter(|r| r.len() == d && b.is_subset(r))
                    .count();
                assert_eq!(squarefree_part_dim(b, d, n), count);
            }
        }
    }

    #[test]
    fn tor_of_residue_field() {
        let t = tor_betti(&residue_field(2));
        let expect: BettiTable = [
            (0, deg(2, &[]), 1),
            (-1, deg(2, &[1]), 1),
            (-1, deg(2, &[2]), 1),
            (-2, deg(2, &[1, 2]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn tor_of_free_module() {
        let b = deg(3, &[1, 3]);
        let t = tor_betti(&SqModule::free(3, &[b]));
        assert_eq!(t, [(0, b, 1)].into_iter().collect());
    }

    #[test]
    fn tor_of_quotient_by_three_variables() {
        let n = 4;
        let m = standard_module(n, deg(n, &[1, 2, 4]), deg(n, &[]), deg(n, &[3])).unwrap();
        let sg = tor_betti(&m).singly_graded();
        let counts: Vec<((i64, usize), usize)> = sg.into_iter().collect();
        assert_eq!(
            counts,
            vec![((-3, 3), 1), ((-2, 2), 3), ((-1, 1), 3), ((0, 0), 1)]
        );
    }

    #[test]
    fn tor_zero_matches_generator_count() {
        let n = 3;
        let m = standard_module(n, deg(n, &[1]), deg(n, &[2]), deg(n, &[3])).unwrap();
        let t = tor_betti(&m);
        for r in SqDegree::all(n) {
            let mut span = RatMatrix::zeros(m.dim(r), 0);
            for v in r.vars() {
                span = span.hcat(m.mult(v, r.without(v)));
            }
            assert_eq!(t.get(0, r), m.dim(r) - span.rank());
        }
    }

    #[test]
    fn ell_complex_of_residue_field() {
        let l = ell_complex(&residue_field(3));
        assert_eq!(l.generators(0), &[SqDegree::full(3)]);
        assert_eq!(l.positions(), vec![0]);
    }

    #[test]
    fn ell_complex_of_polynomial_ring() {
        let s = SqModule::free(1, &[SqDegree::empty(1)]);
        let l = ell_complex(&s);
        assert_eq!(l.generators(0), &[SqDegree::full(1)]);
        assert_eq!(l.generators(1), &[SqDegree::empty(1)]);
        assert_eq!(l.diff(0), RatMatrix::from_i64_rows(&[&[1]]));
        assert!(l.validate().is_empty());
    }

    #[test]
    fn ell_complex_of_zero_module() {
        assert!(ell_complex(&SqModule::zero(3)).is_empty());
    }

    #[test]
    fn ell_complex_is_valid_and_minimal() {
        let n = 3;
        let m = standard_module(n, deg(n, &[1]), deg(n, &[]), deg(n, &[2, 3])).unwrap();
        let l = ell_complex(&m);
        assert!(l.validate().is_empty());
        assert!(l.is_minimal());
        let s = SqModule::free(n, &[SqDegree::empty(n)]);
        let l = ell_complex(&s);
        assert!(l.validate().is_empty());
        assert!(l.is_minimal());
    }
}
