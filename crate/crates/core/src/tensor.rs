//! Term ranks of the pure resolutions built from pinching weights, used as
//! an independent check on the Betti-number solver.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{binom, proportional, to_rats, IntVector};
use crate::triplet::{herzog_kuhl, solve_betti, DegreeTriplet};

/// Interval data for the complement of a degree set `A ⊆ [0, n]`.
///
/// Interval `i` is `[u_i + 1, u_i + w_i - 1]`. The first is `u_0 = -1`,
/// `w_0 = c + 1` (below `min A`), the last `u = n - b`, `w = b + 1` (above
/// `max A`); the ones between are the maximal runs of internal nondegrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PinchingWeights {
    pub u: Vec<i64>,
    pub w: Vec<i64>,
}

impl PinchingWeights {
    /// The nondegrees covered by interval `i`.
    pub fn interval(&self, i: usize) -> std::ops::RangeInclusive<i64> {
        (self.u[i] + 1)..=(self.u[i] + self.w[i] - 1)
    }
}

pub fn pinching_weights(degrees: &[i64], n: usize) -> Result<PinchingWeights> {
    let n = n as i64;
    let (Some(&c), Some(&top)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(Error::Invalid("empty degree set".into()));
    };
    if c < 0 || top > n {
        return Err(Error::Invalid(format!("degrees must lie in [0, {n}]")));
    }
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut u = vec![-1];
    let mut w = vec![c + 1];
    for pair in sorted.windows(2) {
        if pair[1] > pair[0] + 1 {
            u.push(pair[0]);
            w.push(pair[1] - pair[0]);
        }
    }
    u.push(top);
    w.push(n - top + 1);
    Ok(PinchingWeights { u, w })
}

/// `C(n,d) · ∏_{d ≤ u_i} C(w_i-1+u_i-d, u_i-d) · ∏_{d ≥ u_i+w_i} C(w_i-1+d-u_i-w_i, d-u_i-w_i)`.
pub fn term_rank(p: &PinchingWeights, d: i64, n: usize) -> Result<BigInt> {
    let mut rank = binom(n as i64, d);
    for (&u, &w) in p.u.iter().zip(&p.w) {
        if d <= u {
            rank *= binom(w - 1 + u - d, u - d);
        } else if d >= u + w {
            rank *= binom(w - 1 + d - u - w, d - u - w);
        } else {
            return Err(Error::Nondegree { degree: d });
        }
    }
    Ok(rank)
}

/// Term ranks over the degrees of `A`, and whether they are proportional to
/// both the Herzog–Kühl numbers of `A` and the solver's `α` for the
/// one-sided triplet `(A, [a, n-c], [b, n-a])`.
pub fn construction_betti(degrees: &[i64], n: usize) -> Result<(IntVector, bool)> {
    let p = pinching_weights(degrees, n)?;
    let mut sorted = degrees.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let ranks: IntVector = sorted
        .iter()
        .map(|&d| term_rank(&p, d, n))
        .collect::<Result<_>>()?;
    let t = one_sided_triplet(&sorted, n)?;
    let hk = herzog_kuhl(&sorted)?;
    let sol = solve_betti(&t)?;
    let r = to_rats(&ranks);
    let ok = proportional(&r, &to_rats(&hk)) && sol.nullity == 1 && proportional(&r, &to_rats(&sol.alpha));
    Ok((ranks, ok))
}

/// The triplet `(A, [a, n-c], [b, n-a])` whose only nondegrees are on side `A`.
pub fn one_sided_triplet(degrees: &[i64], n: usize) -> Result<DegreeTriplet> {
    let ni = n as i64;
    let (Some(&c), Some(&top)) = (degrees.iter().min(), degrees.iter().max()) else {
        return Err(Error::Invalid("empty degree set".into()));
    };
    let b = ni - top;
    let e_a = (top - c + 1) - degrees.len() as i64;
    let a = ni - b - c - e_a;
    if a < 0 {
        return Err(Error::Triplet(format!(
            "no one-sided triplet: b + c + e_A = {} exceeds n = {n}",
            b + c + e_a
        )));
    }
    let side_b: Vec<i64> = (a..=ni - c).collect();
    let side_c: Vec<i64> = (b..=ni - a).collect();
    DegreeTriplet::new(n, degrees, &side_b, &side_c)
}
