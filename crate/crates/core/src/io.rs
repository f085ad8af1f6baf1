//! JSON documents for complexes, modules and solver reports.
//!
//! Rationals are written as strings, `"p"` or `"p/q"`, so that values of any
//! size survive a round trip unchanged.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::complex::FreeSqComplex;
use crate::degree::SqDegree;
use crate::error::{Error, Result};
use crate::exact::{parse_rat, Rat};
use crate::matrix::RatMatrix;
use crate::module::SqModule;
use crate::table::BettiTable;
use crate::triplet::BettiSolution;

#[derive(Serialize, Deserialize)]
struct ComplexDoc {
    n: usize,
    terms: Vec<TermDoc>,
    diffs: Vec<DiffDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    position: i64,
    generators: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct DiffDoc {
    from: i64,
    entries: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct ModuleDoc {
    n: usize,
    components: BTreeMap<String, usize>,
    mult: BTreeMap<String, Vec<Vec<String>>>,
}

fn matrix_to_doc(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(Rat::to_string).collect())
        .collect()
}

fn matrix_from_doc(rows: usize, cols: usize, doc: &[Vec<String>]) -> Result<RatMatrix> {
    if doc.len() != rows {
        return Err(Error::Shape(format!("expected {rows} rows, found {}", doc.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in doc {
        if row.len() != cols {
            return Err(Error::Shape(format!("expected {cols} columns, found {}", row.len())));
        }
        for cell in row {
            data.push(parse_rat(cell)?);
        }
    }
    Ok(RatMatrix::from_vec(rows, cols, data))
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn complex_to_json(f: &FreeSqComplex) -> String {
    let doc = ComplexDoc {
        n: f.n(),
        terms: f
            .terms()
            .iter()
            .map(|(&position, gens)| TermDoc {
                position,
                generators: gens.iter().map(SqDegree::exponents).collect(),
            })
            .collect(),
        diffs: f
            .diffs()
            .iter()
            .map(|(&from, d)| DiffDoc {
                from,
                entries: matrix_to_doc(d),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
}

pub fn complex_from_json(text: &str) -> Result<FreeSqComplex> {
    let doc: ComplexDoc = serde_json::from_str(text).map_err(json_err)?;
    let mut terms: BTreeMap<i64, Vec<SqDegree>> = BTreeMap::new();
    for t in &doc.terms {
        let gens = t
            .generators
            .iter()
            .map(|g| {
                if g.len() != doc.n {
                    return Err(Error::Parse(format!(
                        "generator of length {} at position {}, expected {}",
                        g.len(),
                        t.position,
                        doc.n
                    )));
                }
                SqDegree::from_exponents(g)
            })
            .collect::<Result<Vec<_>>>()?;
        if terms.insert(t.position, gens).is_some() {
            return Err(Error::Parse(format!("position {} listed twice", t.position)));
        }
    }
    let size = |p: i64| terms.get(&p).map_or(0, Vec::len);
    let mut diffs = BTreeMap::new();
    for d in &doc.diffs {
        let m = matrix_from_doc(size(d.from + 1), size(d.from), &d.entries)?;
        diffs.insert(d.from, m);
    }
    FreeSqComplex::new(doc.n, terms, diffs)
}

pub fn module_to_json(m: &SqModule) -> Result<String> {
    let n = m.n();
    if n > 9 {
        return Err(Error::Invalid("module documents support at most 9 variables".into()));
    }
    let mut components = BTreeMap::new();
    let mut mult = BTreeMap::new();
    for r in SqDegree::all(n) {
        if m.dim(r) > 0 {
            components.insert(r.to_key(), m.dim(r));
        }
        for v in (1..=n).filter(|&v| !r.contains(v)) {
            let x = m.mult(v, r);
            if x.rows() > 0 && x.cols() > 0 {
                mult.insert(format!("{v}@{}", r.to_key()), matrix_to_doc(x));
            }
        }
    }
    let doc = ModuleDoc { n, components, mult };
    Ok(serde_json::to_string_pretty(&doc).expect("serializable") + "\n")
}

pub fn module_from_json(text: &str) -> Result<SqModule> {
    let doc: ModuleDoc = serde_json::from_str(text).map_err(json_err)?;
    let n = doc.n;
    let mut dims = vec![0; 1 << n];
    for (key, &d) in &doc.components {
        dims[SqDegree::from_key(n, key)?.bits() as usize] = d;
    }
    let mut maps: BTreeMap<(usize, SqDegree), RatMatrix> = BTreeMap::new();
    for (key, entries) in &doc.mult {
        let (v, r) = key
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("bad mult key `{key}`")))?;
        let v: usize = v
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable in `{key}`")))?;
        let r = SqDegree::from_key(n, r)?;
        if v == 0 || v > n || r.contains(v) {
            return Err(Error::Parse(format!("mult key `{key}` needs v in [n] outside R")));
        }
        let m = matrix_from_doc(dims[r.with(v).bits() as usize], dims[r.bits() as usize], entries)?;
        maps.insert((v, r), m);
    }
    SqModule::from_parts(n, dims.clone(), |v, r| {
        maps.remove(&(v, r)).unwrap_or_else(|| {
            RatMatrix::zeros(dims[r.with(v).bits() as usize], dims[r.bits() as usize])
        })
    })
}

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn ints_value(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_value).collect())
}

fn rats_value(v: &[Rat]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

/// Machine-readable solver report.
pub fn solution_to_value(s: &BettiSolution) -> Value {
    json!({
        "triplet": s.triplet.to_string(),
        "balanced": s.balanced,
        "nullity": s.nullity,
        "alpha": ints_value(&s.alpha),
        "beta": ints_value(&s.beta),
        "gamma": ints_value(&s.gamma),
        "alpha_hat": rats_value(&s.alpha_hat),
        "beta_hat": rats_value(&s.beta_hat),
        "gamma_hat": rats_value(&s.gamma_hat),
        "positive": s.positive,
        "verdict": s.verdict(),
    })
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")
}

/// Aligned human-readable solver report.
pub fn solution_table(s: &BettiSolution) -> String {
    let rows = [
        ("triplet", s.triplet.to_string()),
        ("balanced", s.balanced.to_string()),
        ("nullity", s.nullity.to_string()),
        ("alpha", join_ints(&s.alpha)),
        ("beta", join_ints(&s.beta)),
        ("gamma", join_ints(&s.gamma)),
        ("positive", s.positive.to_string()),
        ("verdict", s.verdict().to_string()),
    ];
    rows.iter()
        .map(|(k, v)| format!("{k:<9} {v}\n"))
        .collect()
}

pub fn table_to_value(t: &BettiTable) -> Value {
    Value::Array(
        t.iter()
            .map(|(p, d, c)| json!({"position": p, "degree": d.exponents(), "dim": c}))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::module::standard_module;

    #[test]
    fn complex_round_trip() {
        let f = FreeSqComplex::example23().dualize();
        let text = complex_to_json(&f);
        let g = complex_from_json(&text).unwrap();
        assert_eq!(g, f);
        assert_eq!(complex_to_json(&g), text);
    }

    #[test]
    fn complex_with_fractions() {
        let n = 1;
        let e = SqDegree::empty(n);
        let mut d = RatMatrix::zeros(1, 1);
        d[(0, 0)] = rat(-7, 3);
        let f = FreeSqComplex::new(
            n,
            BTreeMap::from([(2, vec![SqDegree::full(n)]), (3, vec![e])]),
            BTreeMap::from([(2, d)]),
        )
        .unwrap();
        let text = complex_to_json(&f);
        assert!(text.contains("\"-7/3\""));
        assert_eq!(complex_from_json(&text).unwrap(), f);
    }

    #[test]
    fn malformed_complex() {
        assert!(complex_from_json("{").is_err());
        let bad = r#"{"n":2,"terms":[{"position":0,"generators":[[1]]}],"diffs":[]}"#;
        assert!(complex_from_json(bad).is_err());
        let bad = r#"{"n":1,"terms":[{"position":0,"generators":[[1]]},{"position":1,"generators":[[0]]}],"diffs":[{"from":0,"entries":[["1","2"]]}]}"#;
        assert!(complex_from_json(bad).is_err());
    }

    #[test]
    fn module_round_trip() {
        let m = standard_module(3, SqDegree::from_vars(3, &[1]).unwrap(), SqDegree::empty(3), SqDegree::from_vars(3, &[2, 3]).unwrap()).unwrap();
        let m = m.direct_sum(&SqModule::free(3, &[SqDegree::from_vars(3, &[2]).unwrap()]));
        let text = module_to_json(&m).unwrap();
        let back = module_from_json(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(module_to_json(&back).unwrap(), text);
    }
}
