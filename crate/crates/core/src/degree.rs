//! Squarefree multidegrees, i.e. subsets of `[n] = {1, ..., n}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of variables.
pub const MAX_VARS: usize = 31;

/// A subset `R ⊆ [n]`, equivalently the 0/1 multidegree with support `R`.
///
/// Variable `i` (1-based) is bit `i - 1` of the mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SqDegree {
    n: u8,
    bits: u32,
}

impl SqDegree {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VARS, "too many variables");
        SqDegree { n: n as u8, bits: 0 }
    }

    /// The degree `1 = (1, ..., 1)`, i.e. `[n]` itself.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "too many variables");
        SqDegree {
            n: n as u8,
            bits: full_mask(n),
        }
    }

    pub fn from_bits(n: usize, bits: u32) -> Self {
        assert!(n <= MAX_VARS, "too many variables");
        assert_eq!(bits & !full_mask(n), 0, "bits outside [n]");
        SqDegree { n: n as u8, bits }
    }

    /// Builds a degree from 1-based variable indices.
    pub fn from_vars(n: usize, vars: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &v in vars {
            if v == 0 || v > n {
                return Err(Error::VariableOutOfRange { index: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(SqDegree { n: n as u8, bits })
    }

    /// Builds a degree from a 0/1 exponent vector.
    pub fn from_exponents(exps: &[u8]) -> Result<Self> {
        let n = exps.len();
        if n > MAX_VARS {
            return Err(Error::Invalid(format!("{n} variables exceed the limit")));
        }
        let mut bits = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            match e {
                0 => {}
                1 => bits |= 1 << i,
                _ => {
                    return Err(Error::Parse(format!(
                        "multidegree entry {e} is not squarefree"
                    )))
                }
            }
        }
        Ok(SqDegree { n: n as u8, bits })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// `|R|`.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v >= 1 && v <= self.n() && self.bits & (1 << (v - 1)) != 0
    }

    pub fn is_subset(&self, other: &SqDegree) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(&self) -> Self {
        SqDegree {
            n: self.n,
            bits: !self.bits & full_mask(self.n()),
        }
    }

    pub fn union(&self, other: &SqDegree) -> Self {
        SqDegree {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &SqDegree) -> Self {
        SqDegree {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &SqDegree) -> Self {
        SqDegree {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    pub fn with(&self, v: usize) -> Self {
        SqDegree {
            n: self.n,
            bits: self.bits | (1 << (v - 1)),
        }
    }

    pub fn without(&self, v: usize) -> Self {
        SqDegree {
            n: self.n,
            bits: self.bits & !(1 << (v - 1)),
        }
    }

    /// Members in increasing order, 1-based.
    pub fn vars(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&v| self.contains(v)).collect()
    }

    pub fn exponents(&self) -> Vec<u8> {
        (1..=self.n()).map(|v| u8::from(self.contains(v))).collect()
    }

    /// `|{i ∈ R : i < j}|`.
    pub fn count_below(&self, j: usize) -> usize {
        (self.bits & ((1u32 << (j - 1)) - 1)).count_ones() as usize
    }

    /// All subsets of `[n]`, ordered by cardinality and then by mask.
    pub fn all(n: usize) -> Vec<SqDegree> {
        let mut v: Vec<SqDegree> = (0..(1u32 << n)).map(|b| SqDegree::from_bits(n, b)).collect();
        v.sort_by_key(|d| (d.len(), d.bits));
        v
    }

    /// Comma-free variable string, e.g. `"13"`; only for `n ≤ 9`.
    pub fn to_key(&self) -> String {
        self.vars().iter().map(|v| v.to_string()).collect()
    }

    pub fn from_key(n: usize, key: &str) -> Result<Self> {
        if n > 9 {
            return Err(Error::Invalid(
                "comma-free subset keys need n <= 9".to_string(),
            ));
        }
        let vars = key
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad subset key `{key}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        SqDegree::from_vars(n, &vars)
    }
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl fmt::Debug for SqDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for SqDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vars: Vec<String> = self.vars().iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vars.join(","))
    }
}
