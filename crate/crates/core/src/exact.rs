//! Exact scalars, binomial coefficients and the binomial transition matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;

/// Exact rational scalar. Always kept in lowest terms with positive denominator.
pub type Rat = BigRational;

/// A vector of arbitrary-precision integers (Betti vectors and the like).
pub type IntVector = Vec<BigInt>;

pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(p.into())
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        None => Ok(Rat::from_integer(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// Binomial coefficient `C(x, p)` for any integer `x`, via the falling
/// factorial `x(x-1)...(x-p+1)/p!`. Zero whenever `p < 0`.
pub fn binom(x: i64, p: i64) -> BigInt {
    if p < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 0..p {
        num *= BigInt::from(x - k);
        den *= BigInt::from(k + 1);
    }
    num / den
}

/// The `(n+1) × (n+1)` matrix with entries `(-1)^j C(n-j, i)`.
///
/// It links the sign-adjusted Betti vectors of the three complexes in a
/// triplet, and its cube is `(-1)^n` times the identity.
pub fn transition_matrix(n: usize) -> RatMatrix {
    let size = n + 1;
    let mut m = RatMatrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            let b = binom((n - j) as i64, i as i64);
            m[(i, j)] = Rat::from_integer(if j % 2 == 0 { b } else { -b });
        }
    }
    m
}

/// Clears denominators, divides by the gcd and makes the first nonzero
/// entry positive.
pub fn primitive_vector(v: &[Rat]) -> Result<IntVector> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::DegenerateSolution);
    }
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let first_negative = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(Signed::is_negative);
    Ok(ints
        .into_iter()
        .map(|x| {
            let y = x / &gcd;
            if first_negative {
                -y
            } else {
                y
            }
        })
        .collect())
}

/// True when `u = λ·v` for some nonzero rational `λ`.
pub fn proportional(u: &[Rat], v: &[Rat]) -> bool {
    if u.len() != v.len() {
        return false;
    }
    let Some(k) = v.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    if u[k].is_zero() {
        return false;
    }
    let lambda = &u[k] / &v[k];
    u.iter().zip(v).all(|(a, b)| *a == &lambda * b)
}

pub fn to_rats(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn ints(v: &[i64]) -> IntVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
