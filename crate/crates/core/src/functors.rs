//! Complexes of squarefree modules, their minimal free models, and the
//! Alexander-duality endofunctor `AD = res ∘ A ∘ D` on free complexes.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::complex::FreeSqComplex;
use crate::degree::SqDegree;
use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::matrix::RatMatrix;
use crate::module::{alexander_dual_module, free_coords, minimal_generators, SqMap, SqModule};
use crate::table::BettiTable;
use crate::triplet::DegreeTriplet;

/// A bounded complex of squarefree modules; `maps[p]` goes from position `p`
/// to `p + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqModuleComplex {
    n: usize,
    terms: BTreeMap<i64, SqModule>,
    maps: BTreeMap<i64, SqMap>,
}

impl SqModuleComplex {
    /// Zero terms are dropped; a missing map is zero. Shapes are checked.
    pub fn new(
        n: usize,
        terms: BTreeMap<i64, SqModule>,
        maps: BTreeMap<i64, SqMap>,
    ) -> Result<Self> {
        let terms: BTreeMap<i64, SqModule> =
            terms.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        if terms.values().any(|m| m.n() != n) {
            return Err(Error::Shape("module with the wrong number of variables".into()));
        }
        let dim = |p: i64, r: SqDegree| terms.get(&p).map_or(0, |m| m.dim(r));
        let mut kept = BTreeMap::new();
        for (p, f) in maps {
            for r in SqDegree::all(n) {
                if f.at(r).shape() != (dim(p + 1, r), dim(p, r)) {
                    return Err(Error::Shape(format!("map at {p} has the wrong shape in degree {r}")));
                }
            }
            if terms.contains_key(&p) && terms.contains_key(&(p + 1)) {
                kept.insert(p, f);
            }
        }
        Ok(SqModuleComplex { n, terms, maps: kept })
    }

    /// The module `M` alone, at position 0.
    pub fn single(m: SqModule) -> Self {
        let n = m.n();
        SqModuleComplex::new(n, BTreeMap::from([(0, m)]), BTreeMap::new()).expect("single module")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<i64, SqModule> {
        &self.terms
    }

    pub fn term(&self, p: i64) -> SqModule {
        self.terms.get(&p).cloned().unwrap_or_else(|| SqModule::zero(self.n))
    }

    /// The map at `p` in degree `R` (zero when absent).
    pub fn map_at(&self, p: i64, r: SqDegree) -> RatMatrix {
        match self.maps.get(&p) {
            Some(f) => f.at(r).clone(),
            None => {
                let dim = |q: i64| self.terms.get(&q).map_or(0, |m| m.dim(r));
                RatMatrix::zeros(dim(p + 1), dim(p))
            }
        }
    }

    /// Human-readable problems: invalid modules, non-homomorphisms and
    /// nonzero composites.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (p, m) in &self.terms {
            for (u, v, r) in m.commutativity_violations() {
                out.push(format!("term {p}: x_{u} and x_{v} do not commute on degree {r}"));
            }
        }
        for (&p, f) in &self.maps {
            if !f.is_homomorphism(&self.terms[&p], &self.terms[&(p + 1)]) {
                out.push(format!("map at {p} does not commute with multiplication"));
            }
            if let Some(g) = self.maps.get(&(p + 1)) {
                if !g.compose(f).is_zero() {
                    out.push(format!("maps at {} and {p} compose to a nonzero map", p + 1));
                }
            }
        }
        out
    }

    /// `dim H^i(X)_R` computed degree by degree.
    pub fn homology_table(&self) -> BettiTable {
        let mut table = BettiTable::new();
        for r in SqDegree::all(self.n) {
            for (&p, m) in &self.terms {
                let dim = m.dim(r);
                let out = self.map_at(p, r).rank();
                let inc = self.map_at(p - 1, r).rank();
                table.add(p, r, dim - out - inc);
            }
        }
        table
    }
}

/// Minimal free resolution of a squarefree module, ending at position 0.
pub fn resolve_module(m: &SqModule) -> FreeSqComplex {
    resolve_complex(&SqModuleComplex::single(m.clone())).expect("a module is a valid complex")
}

/// Replaces each free term `S(-B)` by `A(S(-B)) = S/(x_i : i ∈ B)`.
///
/// `A` is contravariant and dualizes degreewise, so the term at position `p`
/// lands at `-p` and the map between them is the transpose of the
/// differential evaluated at complementary degrees.
pub fn alexander_termwise(f: &FreeSqComplex) -> SqModuleComplex {
    let n = f.n();
    let terms: BTreeMap<i64, SqModule> = f
        .terms()
        .iter()
        .map(|(&p, gens)| (-p, alexander_dual_module(&SqModule::free(n, gens))))
        .collect();
    let maps = f
        .diffs()
        .keys()
        .map(|&p| {
            let map = SqMap::from_fn(n, |r| f.diff_at(p, r.complement()).transpose());
            (-p - 1, map)
        })
        .collect();
    SqModuleComplex::new(n, terms, maps).expect("termwise dual shapes")
}

/// A minimal free complex quasi-isomorphic to `X`.
///
/// The model `P → X` is grown from the top position down. At position `p`
/// the mapping cone has term `P^{p+1} ⊕ X^p`; its cycles there, taken modulo
/// boundaries coming from `X^{p-1}`, get one new generator of `P^p` per
/// minimal generator. A new generator with cycle `(y, x)` gets `d = -y` and
/// maps to `x ∈ X^p`, which makes the cone exact at `p`. The loop stops once
/// `X` is exhausted and no further syzygies appear; the result is then
/// minimalized.
pub fn resolve_complex(x: &SqModuleComplex) -> Result<FreeSqComplex> {
    let problems = x.validate();
    if !problems.is_empty() {
        return Err(Error::Invalid(problems.join("; ")));
    }
    let n = x.n();
    let (Some(&lo), Some(&hi)) = (x.terms.keys().next(), x.terms.keys().next_back()) else {
        return Ok(FreeSqComplex::empty(n));
    };
    let mut terms: BTreeMap<i64, Vec<SqDegree>> = BTreeMap::new();
    let mut diffs: BTreeMap<i64, RatMatrix> = BTreeMap::new();
    // images in X^p of the generators of P^p, in X^p_{deg g}
    let mut phi: BTreeMap<i64, Vec<Vec<Rat>>> = BTreeMap::new();
    let floor = lo - n as i64 - 2;

    let mut p = hi;
    loop {
        if p < floor {
            return Err(Error::Lifting("resolution did not terminate".into()));
        }
        let upper = terms.get(&(p + 1)).cloned().unwrap_or_default();
        let upper2 = terms.get(&(p + 2)).cloned().unwrap_or_default();
        let xp = x.term(p);
        let xp1 = x.term(p + 1);
        let cone = SqModule::free(n, &upper).direct_sum(&xp);
        let phi_up = SqMap::from_free(&upper, &xp1, phi.get(&(p + 1)).map_or(&[], |v| v.as_slice()));
        let d_up = diffs.get(&(p + 1)).cloned();

        let mut z = Vec::with_capacity(1 << n);
        let mut b = Vec::with_capacity(1 << n);
        for bits in 0..(1u32 << n) {
            let r = SqDegree::from_bits(n, bits);
            let rows = free_coords(&upper2, r);
            let cols = free_coords(&upper, r);
            let dp = match &d_up {
                Some(d) => d.select(&rows, &cols).neg(),
                None => RatMatrix::zeros(rows.len(), cols.len()),
            };
            let f = x.map_at(p, r);
            let top = RatMatrix::zeros(rows.len(), xp.dim(r));
            let cone_d = RatMatrix::block(&dp, &top, phi_up.at(r), &f);
            z.push(cone_d.kernel_matrix());
            let fin = x.map_at(p - 1, r);
            b.push(RatMatrix::zeros(cols.len(), fin.cols()).vcat(&fin));
        }

        let gens = minimal_generators(&cone, &z, &b);
        if gens.is_empty() && p < lo {
            break;
        }
        let mut degrees = Vec::with_capacity(gens.len());
        let mut dcols = Vec::with_capacity(gens.len());
        let mut images = Vec::with_capacity(gens.len());
        for (r, v) in gens {
            let coords = free_coords(&upper, r);
            let mut col = vec![Rat::zero(); upper.len()];
            for (k, &g) in coords.iter().enumerate() {
                col[g] = -v[k].clone();
            }
            degrees.push(r);
            dcols.push(col);
            images.push(v[coords.len()..].to_vec());
        }
        if !degrees.is_empty() {
            diffs.insert(p, RatMatrix::from_columns(upper.len(), &dcols));
            terms.insert(p, degrees);
            phi.insert(p, images);
        }
        p -= 1;
    }

    let model = FreeSqComplex::new(n, terms, diffs)?.minimalize();
    if model.homology_table() != x.homology_table() {
        return Err(Error::Lifting("model homology differs from the input".into()));
    }
    Ok(model)
}

/// `AD(F) = res(A(D(F)))`.
pub fn ad(f: &FreeSqComplex) -> FreeSqComplex {
    resolve_complex(&alexander_termwise(&f.dualize())).expect("AD of a valid complex")
}

/// `AD` applied `k` times.
pub fn ad_power(f: &FreeSqComplex, k: usize) -> FreeSqComplex {
    (0..k).fold(f.clone(), |g, _| ad(&g))
}

/// Betti table of `AD(F)` read off from homology: `B^i_R = H^{i+|R|}_{R^c}(F)`.
pub fn ad_betti_shortcut(f: &FreeSqComplex) -> BettiTable {
    f.homology_table().reindex(|p, s| {
        let r = s.complement();
        (p - r.len() as i64, r)
    })
}

/// The degree triplet of `(F, AD F, AD² F)` when all three are pure.
pub fn realized_triplet(f: &FreeSqComplex) -> Result<Option<DegreeTriplet>> {
    let g = ad(f);
    let h = ad(&g);
    let mut seqs = Vec::with_capacity(3);
    for c in [f, &g, &h] {
        let c = c.minimalize();
        let profile = c.singly_graded_profile()?;
        if !profile.is_pure {
            return Ok(None);
        }
        seqs.push(profile.degree_sequence);
    }
    let to_i64 = |v: &Vec<usize>| v.iter().map(|&d| d as i64).collect::<Vec<_>>();
    Ok(Some(DegreeTriplet::new(
        f.n(),
        &to_i64(&seqs[0]),
        &to_i64(&seqs[1]),
        &to_i64(&seqs[2]),
    )?))
}
