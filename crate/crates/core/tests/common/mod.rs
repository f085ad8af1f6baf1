#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sqtriplet::{
    BettiTable, FreeSqComplex, Rat, RatMatrix, SqDegree, SqModule, SqModuleComplex,
};

/// Rank by fraction-free (Bareiss) elimination after clearing denominators.
pub fn bareiss_rank(m: &RatMatrix) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| {
            let lcm = (0..cols).fold(BigInt::one(), |l, j| l.lcm(m[(i, j)].denom()));
            (0..cols)
                .map(|j| (&m[(i, j)] * Rat::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in col + 1..cols {
                let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                a[i][j] = v / &prev;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn homology_dim(dim: usize, incoming: &RatMatrix, outgoing: &RatMatrix) -> usize {
    let out_rank = if outgoing.rows() == 0 { 0 } else { bareiss_rank(outgoing) };
    let in_rank = if incoming.cols() == 0 { 0 } else { bareiss_rank(incoming) };
    dim - out_rank - in_rank
}

/// `dim H^p_R` of a complex of modules, by ranks of the maps in each degree.
pub fn oracle_module_homology(x: &SqModuleComplex) -> BettiTable {
    let n = x.n();
    let positions: Vec<i64> = x.terms().keys().copied().collect();
    let mut t = BettiTable::new();
    for &p in &positions {
        for r in SqDegree::all(n) {
            let dim = x.term(p).dim(r);
            let h = homology_dim(dim, &x.map_at(p - 1, r), &x.map_at(p, r));
            if h > 0 {
                t.add(p, r, h);
            }
        }
    }
    t
}

/// The same for a free complex, evaluated at each `R`.
pub fn oracle_free_homology(f: &FreeSqComplex) -> BettiTable {
    let n = f.n();
    let mut t = BettiTable::new();
    for p in f.positions() {
        for r in SqDegree::all(n) {
            let dim = f.generators(p).iter().filter(|g| g.is_subset(&r)).count();
            let h = homology_dim(dim, &f.diff_at(p - 1, r), &f.diff_at(p, r));
            if h > 0 {
                t.add(p, r, h);
            }
        }
    }
    t
}

pub fn random_degree(rng: &mut ChaCha8Rng, n: usize) -> SqDegree {
    SqDegree::from_bits(n, rng.gen_range(0..1u32 << n))
}

/// `F^{p+1} ← F^p` with random homogeneous integer entries. Scalar entries
/// between equal degrees are allowed, so the result need not be minimal.
pub fn random_two_term(rng: &mut ChaCha8Rng, n: usize, p: i64, top: usize, bottom: usize) -> FreeSqComplex {
    let g1: Vec<SqDegree> = (0..top).map(|_| random_degree(rng, n)).collect();
    let g0: Vec<SqDegree> = (0..bottom).map(|_| random_degree(rng, n)).collect();
    let mut d = RatMatrix::zeros(top, bottom);
    for i in 0..top {
        for j in 0..bottom {
            if g1[i].is_subset(&g0[j]) && rng.gen_bool(0.7) {
                d[(i, j)] = Rat::from_integer(rng.gen_range(-2..=2).into());
            }
        }
    }
    let terms = BTreeMap::from([(p + 1, g1), (p, g0)]);
    FreeSqComplex::new(n, terms, BTreeMap::from([(p, d)])).expect("shapes match")
}

/// A random cokernel of a map of free modules with at most two generators,
/// so every component has dimension at most two.
pub fn random_module(rng: &mut ChaCha8Rng, n: usize) -> SqModule {
    let gens = rng.gen_range(1..=2);
    let rels = rng.gen_range(0..=3);
    let f = random_two_term(rng, n, -1, gens, rels);
    f.homology().remove(&0).unwrap_or_else(|| SqModule::zero(n))
}
