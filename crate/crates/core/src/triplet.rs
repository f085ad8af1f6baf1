//! Degree triplets and the linear systems for the Betti numbers of a
//! triplet of pure complexes `F, AD(F), AD²(F)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{binom, primitive_vector, transition_matrix, IntVector, Rat};
use crate::matrix::RatMatrix;

/// Three degree sets `(A, B, C)`, subsets of `[0, n]`: the degrees of
/// `F`, `AD(F)` and `AD²(F)` respectively.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DegreeTriplet {
    n: usize,
    sets: [Vec<i64>; 3],
}

/// Corner parameters and internal nondegree counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripletParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e_a: i64,
    pub e_b: i64,
    pub e_c: i64,
    pub e: i64,
}

/// The first failure of the balancing condition: at `corner`, the interval
/// `[corner, v]` holds `degrees` elements of the side but `gaps` elements
/// outside the reflected neighbouring side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BalanceViolation {
    pub side: char,
    pub corner: i64,
    pub v: i64,
    pub degrees: usize,
    pub gaps: usize,
}

impl fmt::Display for BalanceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "side {} at corner {}: [{}, {}] has {} degrees but {} gaps",
            self.side, self.corner, self.corner, self.v, self.degrees, self.gaps
        )
    }
}

impl DegreeTriplet {
    /// Sets are sorted and deduplicated; they must be nonempty and lie in `[0, n]`.
    pub fn new(n: usize, a: &[i64], b: &[i64], c: &[i64]) -> Result<Self> {
        let norm = |name: char, s: &[i64]| -> Result<Vec<i64>> {
            if s.is_empty() {
                return Err(Error::Triplet(format!("{name} is empty")));
            }
            if let Some(x) = s.iter().find(|&&x| x < 0 || x > n as i64) {
                return Err(Error::Triplet(format!("{name} contains {x}, outside [0, {n}]")));
            }
            let set: BTreeSet<i64> = s.iter().copied().collect();
            Ok(set.into_iter().collect())
        };
        Ok(DegreeTriplet {
            n,
            sets: [norm('A', a)?, norm('B', b)?, norm('C', c)?],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn set_a(&self) -> &[i64] {
        &self.sets[0]
    }

    pub fn set_b(&self) -> &[i64] {
        &self.sets[1]
    }

    pub fn set_c(&self) -> &[i64] {
        &self.sets[2]
    }

    /// `(A, B, C) ↦ (B, C, A)`: the same triangle viewed from the next corner.
    pub fn rotate(&self) -> DegreeTriplet {
        let [a, b, c] = self.sets.clone();
        DegreeTriplet {
            n: self.n,
            sets: [b, c, a],
        }
    }

    pub fn params(&self) -> Result<TripletParams> {
        derive_params(self)
    }

    fn bar(&self, s: &[i64]) -> BTreeSet<i64> {
        s.iter().map(|x| self.n as i64 - x).collect()
    }
}

impl fmt::Display for DegreeTriplet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[i64]| s.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "n={}; A={}; B={}; C={}",
            self.n,
            join(self.set_a()),
            join(self.set_b()),
            join(self.set_c())
        )
    }
}

impl FromStr for DegreeTriplet {
    type Err = Error;

    /// Parses `n=3; A=0,2; B=0,2,3; C=1,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut n = None;
        let mut sets: [Option<Vec<i64>>; 3] = [None, None, None];
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{part}`")))?;
            let value = value.trim();
            match key.trim() {
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|_| {
                        Error::Parse(format!("bad variable count `{value}`"))
                    })?)
                }
                k @ ("A" | "B" | "C") => {
                    let idx = (k.as_bytes()[0] - b'A') as usize;
                    sets[idx] = Some(parse_int_list(value)?);
                }
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n".into()))?;
        let get = |i: usize| {
            sets[i]
                .clone()
                .ok_or_else(|| Error::Parse(format!("missing {}", (b'A' + i as u8) as char)))
        };
        DegreeTriplet::new(n, &get(0)?, &get(1)?, &get(2)?)
    }
}

/// Parses a comma-separated list of integers; the empty string is the empty list.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| {
            x.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{x}`")))
        })
        .collect()
}

fn count_in(set: &[i64], lo: i64, hi: i64) -> i64 {
    set.iter().filter(|&&x| lo <= x && x <= hi).count() as i64
}

/// Corner parameters: `c = min A`, `a = min B`, `b = min C`, after checking
/// `max A = n-b`, `max B = n-c`, `max C = n-a` and `n = a+b+c+e`.
pub fn derive_params(t: &DegreeTriplet) -> Result<TripletParams> {
    let n = t.n as i64;
    let (sa, sb, sc) = (t.set_a(), t.set_b(), t.set_c());
    let (c, a, b) = (sa[0], sb[0], sc[0]);
    let checks = [
        ('A', *sa.last().unwrap(), n - b, "n-b"),
        ('B', *sb.last().unwrap(), n - c, "n-c"),
        ('C', *sc.last().unwrap(), n - a, "n-a"),
    ];
    for (name, max, want, expr) in checks {
        if max != want {
            return Err(Error::Triplet(format!(
                "max {name} = {max}, but {expr} = {want}"
            )));
        }
    }
    let e_a = (n - b - c + 1) - sa.len() as i64;
    let e_b = (n - c - a + 1) - sb.len() as i64;
    let e_c = (n - a - b + 1) - sc.len() as i64;
    let e = e_a + e_b + e_c;
    if a + b + c + e != n {
        return Err(Error::Triplet(format!(
            "a+b+c+e = {a}+{b}+{c}+{e} != {n}"
        )));
    }
    Ok(TripletParams {
        a,
        b,
        c,
        e_a,
        e_b,
        e_c,
        e,
    })
}

/// Checks the corner balancing condition. `Ok(None)` means balanced.
///
/// At corner `c`: for each `c ≤ v ≤ n`, `|A ∩ [c,v]| > |[c,v] ∖ B̄|`, where
/// `B̄ = {n - x : x ∈ B}`. Likewise `(B, C̄)` at `a` and `(C, Ā)` at `b`.
pub fn balance_violation(t: &DegreeTriplet) -> Result<Option<BalanceViolation>> {
    let p = derive_params(t)?;
    let n = t.n as i64;
    let corners = [
        ('A', t.set_a(), t.bar(t.set_b()), p.c),
        ('B', t.set_b(), t.bar(t.set_c()), p.a),
        ('C', t.set_c(), t.bar(t.set_a()), p.b),
    ];
    for (side, set, reflected, corner) in corners {
        for v in corner..=n {
            let degrees = count_in(set, corner, v) as usize;
            let gaps = (corner..=v).filter(|x| !reflected.contains(x)).count();
            if degrees <= gaps {
                return Ok(Some(BalanceViolation {
                    side,
                    corner,
                    v,
                    degrees,
                    gaps,
                }));
            }
        }
    }
    Ok(None)
}

/// True when the triplet satisfies all three defining conditions.
pub fn is_balanced(t: &DegreeTriplet) -> bool {
    matches!(balance_violation(t), Ok(None))
}

/// Subsets of `[lo, hi]` containing both endpoints, grouped by how many
/// interior points are missing.
fn sides_with_endpoints(lo: i64, hi: i64, max_gaps: i64) -> Vec<(i64, Vec<i64>)> {
    if lo == hi {
        return vec![(0, vec![lo])];
    }
    let interior = (hi - lo - 1) as u32;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << interior) {
        let gaps = interior as i64 - mask.count_ones() as i64;
        if gaps > max_gaps {
            continue;
        }
        let mut set = vec![lo];
        set.extend((0..interior).filter(|k| mask >> k & 1 == 1).map(|k| lo + 1 + k as i64));
        set.push(hi);
        out.push((gaps, set));
    }
    out
}

/// All balanced degree triplets of type `n`, sorted.
pub fn enumerate_balanced(n: usize) -> Vec<DegreeTriplet> {
    let ni = n as i64;
    let corners: Vec<(i64, i64, i64)> = (0..=ni)
        .flat_map(|a| (0..=ni - a).flat_map(move |b| (0..=ni - a - b).map(move |c| (a, b, c))))
        .collect();
    let mut all: Vec<DegreeTriplet> = corners
        .par_iter()
        .flat_map_iter(|&(a, b, c)| {
            let e = ni - a - b - c;
            let sides_a = sides_with_endpoints(c, ni - b, e);
            let sides_b = sides_with_endpoints(a, ni - c, e);
            let sides_c = sides_with_endpoints(b, ni - a, e);
            let mut found = Vec::new();
            for (ea, sa) in &sides_a {
                for (eb, sb) in sides_b.iter().filter(|(eb, _)| ea + eb <= e) {
                    for (_, sc) in sides_c.iter().filter(|(ec, _)| ea + eb + ec == e) {
                        let t = DegreeTriplet {
                            n,
                            sets: [sa.clone(), sb.clone(), sc.clone()],
                        };
                        if is_balanced(&t) {
                            found.push(t);
                        }
                    }
                }
            }
            found
        })
        .collect();
    all.sort();
    all.dedup();
    all
}

/// One reduction step removing the first internal nondegree of side `A`.
///
/// With `A ⊇ [c, c+t-1]`, `c+t ∉ A`, and `s ≥ 1` maximal such that `B̄`
/// misses `[c+1, c+s-1]`: `A' = A ∪ {c+t} ∖ [c, c+s-1]`, `B̄' = B̄ ∖ {c}`.
pub fn reduce(t: &DegreeTriplet) -> Result<DegreeTriplet> {
    let p = derive_params(t)?;
    let n = t.n as i64;
    let sa = t.set_a();
    let top = n - p.b;
    let gap = (p.c..=top).find(|x| !sa.contains(x)).ok_or_else(|| {
        Error::NoInternalNondegree(
            "side A has no internal nondegree; rotate the triplet and reduce another side".into(),
        )
    })?;
    let tt = gap - p.c;
    let bbar = t.bar(t.set_b());
    let mut s = 1;
    while !bbar.contains(&(p.c + s)) && p.c + s <= n {
        s += 1;
    }
    if s > tt {
        return Err(Error::Triplet(format!(
            "s = {s} exceeds t = {tt}; the triplet is not balanced"
        )));
    }
    let mut a2: Vec<i64> = sa
        .iter()
        .copied()
        .filter(|&x| x >= p.c + s)
        .chain(std::iter::once(gap))
        .collect();
    a2.sort_unstable();
    let b2: Vec<i64> = t.set_b().iter().copied().filter(|&x| x != n - p.c).collect();
    DegreeTriplet::new(t.n, &a2, &b2, t.set_c())
}

/// Reduces until no internal nondegrees are left, rotating to a side that
/// has one when `A` is full. Returns every intermediate triplet.
pub fn reduce_fully(t: &DegreeTriplet) -> Result<Vec<DegreeTriplet>> {
    let mut chain = vec![t.clone()];
    let mut cur = t.clone();
    while derive_params(&cur)?.e > 0 {
        let mut turns = 0;
        while derive_params(&cur)?.e_a == 0 {
            cur = cur.rotate();
            turns += 1;
        }
        cur = reduce(&cur)?;
        for _ in 0..(3 - turns) % 3 {
            cur = cur.rotate();
        }
        chain.push(cur.clone());
    }
    Ok(chain)
}

/// Coefficient matrix of the equations for `α_0, ..., α_r` (one column per
/// degree `a_k ∈ A`, sign `(-1)^k` folded in):
///
/// * `Σ (-1)^k α_k C(a_k, v)` for `v ∈ [a, n-b] ∖ C̄`,
/// * `Σ (-1)^k α_k C(n-a_k, u)` for `u ∈ [a, n-c] ∖ B`,
/// * `Σ (-1)^k α_k C(a_k, j)` for `0 ≤ j < a`.
pub fn reduced_system(t: &DegreeTriplet) -> Result<RatMatrix> {
    let p = derive_params(t)?;
    let n = t.n as i64;
    let degs = t.set_a();
    let cbar = t.bar(t.set_c());
    let vs: Vec<i64> = (p.a..=n - p.b).filter(|x| !cbar.contains(x)).collect();
    let us: Vec<i64> = (p.a..=n - p.c).filter(|x| !t.set_b().contains(x)).collect();
    let row = |f: &dyn Fn(i64) -> BigInt| -> Vec<Rat> {
        degs.iter()
            .enumerate()
            .map(|(k, &d)| {
                let x = Rat::from_integer(f(d));
                if k % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .collect()
    };
    let mut rows = Vec::new();
    for &v in &vs {
        rows.push(row(&|d| binom(d, v)));
    }
    for &u in &us {
        rows.push(row(&|d| binom(n - d, u)));
    }
    for j in 0..p.a {
        rows.push(row(&|d| binom(d, j)));
    }
    Ok(RatMatrix::from_rows(degs.len(), rows))
}

/// The system in all `3n+3` sign-adjusted Betti numbers
/// `(α̂_0..α̂_n, β̂_0..β̂_n, γ̂_0..γ̂_n)`: `β̂ = Aα̂`, `γ̂ = Aβ̂`, and vanishing at
/// every nondegree of each complex.
pub fn full_system(t: &DegreeTriplet) -> RatMatrix {
    let n = t.n;
    let m = n + 1;
    let a = transition_matrix(n);
    let neg_id = RatMatrix::identity(m).neg();
    let zero = RatMatrix::zeros(m, m);
    let first = a.hcat(&neg_id).hcat(&zero);
    let second = zero.hcat(&a).hcat(&neg_id);
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for (block, set) in t.sets.iter().enumerate() {
        for d in 0..=n as i64 {
            if !set.contains(&d) {
                let mut r = vec![Rat::zero(); 3 * m];
                r[block * m + d as usize] = Rat::one();
                rows.push(r);
            }
        }
    }
    first.vcat(&second).vcat(&RatMatrix::from_rows(3 * m, rows))
}

/// Exact solution data for a triplet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiSolution {
    pub triplet: DegreeTriplet,
    pub balanced: bool,
    /// Dimension of the solution space of the reduced system.
    pub nullity: usize,
    /// `α̂, β̂, γ̂` indexed by degree `0..=n`; empty unless `nullity == 1`.
    pub alpha_hat: Vec<Rat>,
    pub beta_hat: Vec<Rat>,
    pub gamma_hat: Vec<Rat>,
    /// Betti numbers on the degree sets, with one common scale: `α` is
    /// primitive and `β`, `γ` follow from the transition identities.
    pub alpha: IntVector,
    pub beta: IntVector,
    pub gamma: IntVector,
    /// Hats vanish exactly off the degree sets, are nonzero on them, and
    /// all three Betti vectors are strictly positive.
    pub positive: bool,
}

impl BettiSolution {
    pub fn verdict(&self) -> &'static str {
        match self.nullity {
            0 => "overdetermined",
            1 if self.positive => "unique",
            1 => "unique, not positive",
            _ => "underdetermined",
        }
    }
}

/// Solves the reduced system and propagates through the transition matrix.
///
/// `α̂_{a_i} = (-1)^{i+a_i} α_i`; then `β̂ = Aα̂`, `γ̂ = Aβ̂`, and the Betti
/// numbers of the other two complexes are read off as
/// `β_i = (-1)^{i+b_i} β̂_{b_i}`, `γ_i = (-1)^{i+c_i} γ̂_{c_i}`, up to one
/// overall sign.
pub fn solve_betti(t: &DegreeTriplet) -> Result<BettiSolution> {
    let balanced = balance_violation(t)?.is_none();
    let system = reduced_system(t)?;
    let kernel = system.nullspace();
    let mut sol = BettiSolution {
        triplet: t.clone(),
        balanced,
        nullity: kernel.len(),
        alpha_hat: Vec::new(),
        beta_hat: Vec::new(),
        gamma_hat: Vec::new(),
        alpha: Vec::new(),
        beta: Vec::new(),
        gamma: Vec::new(),
        positive: false,
    };
    if kernel.len() != 1 {
        return Ok(sol);
    }
    let alpha = primitive_vector(&kernel[0])?;
    let n = t.n;
    let mut alpha_hat = vec![Rat::zero(); n + 1];
    for (i, (&d, x)) in t.set_a().iter().zip(&alpha).enumerate() {
        let v = Rat::from_integer(x.clone());
        alpha_hat[d as usize] = if (i as i64 + d) % 2 == 0 { v } else { -v };
    }
    let a = transition_matrix(n);
    let beta_hat = a.mul_vec(&alpha_hat);
    let gamma_hat = a.mul_vec(&beta_hat);
    debug_assert_eq!(a.mul_vec(&gamma_hat), {
        let s = if n.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        alpha_hat.iter().map(|x| x * &s).collect::<Vec<_>>()
    });

    let unsign = |hat: &[Rat], set: &[i64]| -> (IntVector, bool) {
        let off_support = (0..=n as i64)
            .filter(|d| !set.contains(d))
            .all(|d| hat[d as usize].is_zero());
        let vals: IntVector = set
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let x = hat[d as usize].to_integer();
                if (i as i64 + d) % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .collect();
        let all_pos = vals.iter().all(Signed::is_positive);
        let all_neg = vals.iter().all(Signed::is_negative);
        let vals = if all_neg {
            vals.into_iter().map(|x| -x).collect()
        } else {
            vals
        };
        (vals, off_support && (all_pos || all_neg))
    };
    let (beta, ok_b) = unsign(&beta_hat, t.set_b());
    let (gamma, ok_c) = unsign(&gamma_hat, t.set_c());
    sol.positive = alpha.iter().all(Signed::is_positive) && ok_b && ok_c;
    sol.alpha = alpha;
    sol.beta = beta;
    sol.gamma = gamma;
    sol.alpha_hat = alpha_hat;
    sol.beta_hat = beta_hat;
    sol.gamma_hat = gamma_hat;
    Ok(sol)
}

/// Pure Betti numbers from the degrees alone: `β_i ∝ ∏_{j≠i} 1/|d_j - d_i|`,
/// returned primitive.
pub fn herzog_kuhl(degrees: &[i64]) -> Result<IntVector> {
    if degrees.is_empty() || degrees.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Invalid("degrees must be strictly increasing".into()));
    }
    let v: Vec<Rat> = degrees
        .iter()
        .enumerate()
        .map(|(i, &di)| {
            let prod: BigInt = degrees
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &dj)| BigInt::from((dj - di).abs()))
                .product();
            Rat::new(BigInt::one(), prod)
        })
        .collect();
    primitive_vector(&v)
}

/// ASCII degree triangle: side `A` along the bottom from corner `c` to `b`,
/// side `B` down the left from `a` to `c`, side `C` up the right from `b` to
/// `a`. `●` marks a degree, `○` a nondegree.
pub fn render_triangle(t: &DegreeTriplet) -> Result<String> {
    let p = derive_params(t)?;
    let n = t.n as i64;
    let marks = |set: &[i64], lo: i64, hi: i64| -> Vec<char> {
        (lo..=hi)
            .map(|d| if set.contains(&d) { '●' } else { '○' })
            .collect()
    };
    let side_a = marks(t.set_a(), p.c, n - p.b);
    let side_b = marks(t.set_b(), p.a, n - p.c);
    let side_c = marks(t.set_c(), p.b, n - p.a);
    let m = side_a.len().max(side_b.len()).max(side_c.len()) + 1;
    let width = 2 * m + 1;
    let mut grid = vec![vec![' '; width]; m + 1];
    for (j, &ch) in side_b.iter().enumerate() {
        grid[1 + j][m - 1 - j] = ch;
    }
    for (j, &ch) in side_c.iter().enumerate() {
        grid[m - 1 - j][m + 1 + j] = ch;
    }
    for (j, &ch) in side_a.iter().enumerate() {
        grid[m][2 + 2 * j] = ch;
    }
    let left = format!("c={} ", p.c);
    let pad = " ".repeat(left.chars().count());
    let mut out = String::new();
    out.push_str(&format!("{pad}{}a={}\n", " ".repeat(m.saturating_sub(1)), p.a));
    for (k, row) in grid.iter().enumerate().skip(1) {
        let line: String = row.iter().collect();
        if k == m {
            out.push_str(&format!("{left}{} b={}\n", line.trim_end(), p.b));
        } else {
            out.push_str(&format!("{pad}{}\n", line.trim_end()));
        }
    }
    let show = |name: &str, s: &[char], lo: i64| {
        let cells: Vec<String> = s.iter().map(|c| c.to_string()).collect();
        format!("{name} [{lo}..{}]: {}\n", lo + s.len() as i64 - 1, cells.join(" "))
    };
    out.push_str(&show("A", &side_a, p.c));
    out.push_str(&show("B", &side_b, p.a));
    out.push_str(&show("C", &side_c, p.b));
    Ok(out)
}
