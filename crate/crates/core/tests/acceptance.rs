//! The ten acceptance criteria. Each prints one PASS/FAIL line with its
//! runtime; the test fails if any criterion fails.
//!
//! Tolerances: every comparison is exact (rational or integer equality).
//! Runtime limits are checked against wall-clock time in the test profile.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sqtriplet::exact::{ints, proportional, to_rats};
use sqtriplet::functors::realized_triplet;
use sqtriplet::tensor::one_sided_triplet;
use sqtriplet::verify::{standard_suite, sweep, sweep_table, SuiteEntry};
use sqtriplet::{
    ad, alexander_termwise, construction_betti, derive_params, ell_complex, enumerate_balanced,
    full_system, herzog_kuhl, is_balanced, reduce, reduced_system, resolve_complex,
    resolve_module, solve_betti, transition_matrix, BettiTable, DegreeTriplet, FreeSqComplex,
    Rat, SqModuleComplex,
};

use common::{oracle_free_homology, oracle_module_homology, random_module, random_two_term};

const CUBE_LIMIT: Duration = Duration::from_secs(1);
const EXAMPLE_LIMIT: Duration = Duration::from_secs(1);
const YANAGAWA_LIMIT: Duration = Duration::from_secs(30);
const SWEEP_LIMIT: Duration = Duration::from_secs(300);
const SUITE_MAX_N: usize = 4;
const SWEEP_MAX_N: usize = 6;
const CONCORDANCE_MAX_N: usize = 12;
const CONCORDANCE_SAMPLES: usize = 150;
const RANDOM_CASES: usize = 200;

type Outcome = Result<(), String>;

/// Writes past the test harness's output capture, so the report shows up
/// in a plain `cargo test` run.
fn report(line: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}
type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Outcome {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn suite() -> Vec<SuiteEntry> {
    standard_suite(SUITE_MAX_N)
}

// Oracle: Pascal-triangle binomials and schoolbook integer products.
fn cube_oracle(n: usize) -> Vec<Vec<i128>> {
    let mut pascal = vec![vec![0i128; n + 1]; n + 1];
    for m in 0..=n {
        pascal[m][0] = 1;
        for k in 1..=m {
            pascal[m][k] = pascal[m - 1][k - 1] + if k < m { pascal[m - 1][k] } else { 0 };
        }
    }
    let a: Vec<Vec<i128>> = (0..=n)
        .map(|i| {
            (0..=n)
                .map(|j| {
                    let b = if i <= n - j { pascal[n - j][i] } else { 0 };
                    if j % 2 == 0 { b } else { -b }
                })
                .collect()
        })
        .collect();
    let mul = |x: &[Vec<i128>], y: &[Vec<i128>]| -> Vec<Vec<i128>> {
        (0..=n)
            .map(|i| (0..=n).map(|j| (0..=n).map(|k| x[i][k] * y[k][j]).sum()).collect())
            .collect()
    };
    mul(&mul(&a, &a), &a)
}

fn criterion_cube() -> Outcome {
    let start = Instant::now();
    for n in 0..=12usize {
        let a = transition_matrix(n);
        let cube = a.pow(3);
        let oracle = cube_oracle(n);
        let sign = if n % 2 == 0 { 1 } else { -1 };
        for i in 0..=n {
            for j in 0..=n {
                let want = if i == j { sign } else { 0 };
                ensure(oracle[i][j] == want, || format!("oracle n={n} ({i},{j})"))?;
                ensure(cube[(i, j)] == Rat::from_integer(want.into()), || {
                    format!("n={n}: entry ({i},{j}) is {}", cube[(i, j)])
                })?;
            }
        }
    }
    within(start.elapsed(), CUBE_LIMIT)
}

fn singly(f: &FreeSqComplex) -> BTreeMap<i64, BTreeMap<usize, usize>> {
    let mut out: BTreeMap<i64, BTreeMap<usize, usize>> = BTreeMap::new();
    for (p, gens) in f.terms() {
        for g in gens {
            *out.entry(*p).or_default().entry(g.len()).or_insert(0) += 1;
        }
    }
    out
}

/// Twists and multiplicities read from the highest position down.
fn shape(f: &FreeSqComplex) -> Vec<(usize, usize)> {
    singly(f)
        .into_iter()
        .rev()
        .flat_map(|(_, m)| m.into_iter())
        .collect()
}

fn criterion_example() -> Outcome {
    let start = Instant::now();
    let f = FreeSqComplex::example23();
    ensure(shape(&f) == vec![(0, 1), (2, 3)], || format!("F is {:?}", shape(&f)))?;
    let g = ad(&f);
    let h = ad(&g);
    ensure(shape(&g) == vec![(0, 2), (2, 3), (3, 1)], || format!("AD F is {:?}", shape(&g)))?;
    ensure(shape(&h) == vec![(1, 3), (2, 6), (3, 2)], || format!("AD^2 F is {:?}", shape(&h)))?;
    let profiles = [&f, &g, &h]
        .iter()
        .map(|c| c.singly_graded_profile())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    ensure(profiles.iter().all(|p| p.is_pure), || "not all pure".into())?;
    let nonlinear = profiles.iter().filter(|p| !p.is_linear).count();
    ensure(nonlinear == 2, || format!("{nonlinear} non-linear complexes"))?;
    within(start.elapsed(), EXAMPLE_LIMIT)
}

fn big(v: &[i64]) -> Vec<BigInt> {
    ints(v)
}

fn criterion_golden() -> Outcome {
    let t: DegreeTriplet = "n=3; A=0,2; B=0,2,3; C=1,2,3".parse().map_err(|e| format!("{e}"))?;
    let s = solve_betti(&t).map_err(|e| e.to_string())?;
    ensure(s.nullity == 1 && s.positive, || format!("verdict {}", s.verdict()))?;
    ensure(s.alpha == big(&[1, 3]), || format!("alpha {:?}", s.alpha))?;
    ensure(s.beta == big(&[2, 3, 1]), || format!("beta {:?}", s.beta))?;
    ensure(s.gamma == big(&[3, 6, 2]), || format!("gamma {:?}", s.gamma))?;

    // Interval B and C around A = {1,3,4,7}: B = [3,8], C = [2,6].
    let t = one_sided_triplet(&[1, 3, 4, 7], 9).map_err(|e| e.to_string())?;
    ensure(t.set_b() == [3, 4, 5, 6, 7, 8] && t.set_c() == [2, 3, 4, 5, 6], || t.to_string())?;
    let s = solve_betti(&t).map_err(|e| e.to_string())?;
    ensure(s.nullity == 1 && s.positive, || format!("verdict {}", s.verdict()))?;
    // The solver reports the primitive vector; the quoted complex is 3 times it.
    ensure(s.alpha == big(&[2, 9, 8, 1]), || format!("alpha {:?}", s.alpha))?;
    let tripled: Vec<BigInt> = s.alpha.iter().map(|x| x * 3).collect();
    ensure(tripled == big(&[6, 27, 24, 3]), || format!("3 alpha {tripled:?}"))
}

fn tables_equal(name: &str, subject: &str, got: &BettiTable, want: &BettiTable) -> Outcome {
    ensure(got == want, || format!("{subject}: {name}: got {got:?}, expected {want:?}"))
}

fn criterion_yanagawa(entries: &[SuiteEntry]) -> Outcome {
    let start = Instant::now();
    for e in entries {
        let f = &e.complex;
        let k = ad(&ad(&ad(f)));
        let got = k.invariants();
        let want = f.translate(f.n() as i64).invariants();
        tables_equal("B", &e.name, &got.betti, &want.betti)?;
        tables_equal("H", &e.name, &got.homology, &want.homology)?;
        tables_equal("C", &e.name, &got.cohomology, &want.cohomology)?;
    }
    within(start.elapsed(), YANAGAWA_LIMIT)
}

/// `(i, S) ↦ (i - |S^c|, S^c)`, written out entrywise.
fn rotated(t: &BettiTable) -> BettiTable {
    let mut out = BettiTable::new();
    for (p, s, d) in t.iter() {
        let r = s.complement();
        out.add(p - r.len() as i64, r, d);
    }
    out
}

fn criterion_rotation(entries: &[SuiteEntry]) -> Outcome {
    for e in entries {
        let f = &e.complex;
        let g = ad(f);
        let fi = f.invariants();
        let gi = g.invariants();
        tables_equal("B(AD F)", &e.name, &gi.betti, &rotated(&fi.homology))?;
        tables_equal("H(AD F)", &e.name, &gi.homology, &fi.cohomology)?;
        tables_equal("C(AD F)", &e.name, &gi.cohomology, &rotated(&fi.betti))?;
        // Homology of F against the direct rank computation.
        tables_equal("H(F) oracle", &e.name, &fi.homology, &oracle_free_homology(f))?;
    }
    Ok(())
}

fn criterion_strands(entries: &[SuiteEntry]) -> Outcome {
    for e in entries {
        let f = &e.complex;
        let n = f.n() as i64;
        let g = ad(f);
        // Group generators of AD F by position + total degree.
        let mut got: BTreeMap<i64, BettiTable> = BTreeMap::new();
        for (p, gens) in g.terms() {
            for d in gens {
                got.entry(p + d.len() as i64).or_default().add(*p, *d, 1);
            }
        }
        let want: BTreeMap<i64, BettiTable> = f
            .homology()
            .iter()
            .map(|(&i, m)| (i, ell_complex(m).translate(n - i).generator_table()))
            .filter(|(_, t)| !t.is_empty())
            .collect();
        ensure(got == want, || format!("{}: strands {got:?} vs {want:?}", e.name))?;
        let lib = g.strands().map_err(|e| e.to_string())?;
        ensure(lib == want, || format!("{}: strands() disagrees", e.name))?;
    }
    Ok(())
}

fn criterion_sweep() -> Outcome {
    let start = Instant::now();
    let rows: Vec<_> = (1..=SWEEP_MAX_N).map(sweep).collect();
    report(&sweep_table(&rows));
    for n in 1..=SWEEP_MAX_N {
        let ts = enumerate_balanced(n);
        ensure(ts.len() == rows[n - 1].count, || format!("n={n}: count mismatch"))?;
        for t in &ts {
            let r = t.set_a().len() - 1;
            let m = reduced_system(t).map_err(|e| e.to_string())?;
            ensure(m.rows() == r, || format!("{t}: {} rows, expected {r}", m.rows()))?;
            let nullity = solve_betti(t).map_err(|e| e.to_string())?.nullity;
            let full = full_system(t).nullspace().len();
            ensure(full == nullity, || format!("{t}: full nullity {full}, reduced {nullity}"))?;
        }
    }
    // Exceptions are reported in the table above; the conditional
    // expectation is nullity one with a positive solution everywhere.
    for row in &rows {
        ensure(row.nullity.keys().all(|&k| k == 1), || format!("n={}: nullity {:?}", row.n, row.nullity))?;
        ensure(row.positivity_failures.is_empty(), || {
            format!("n={}: {} positivity failures", row.n, row.positivity_failures.len())
        })?;
    }
    within(start.elapsed(), SWEEP_LIMIT)
}

/// Herzog–Kühl numbers by clearing the product denominators directly.
fn hk_oracle(degrees: &[i64]) -> Vec<Rat> {
    degrees
        .iter()
        .map(|&di| {
            let prod: i64 = degrees.iter().filter(|&&dj| dj != di).map(|&dj| (dj - di).abs()).product();
            Rat::new(BigInt::from(1), BigInt::from(prod))
        })
        .collect()
}

fn criterion_concordance() -> Outcome {
    let (ranks, _) = construction_betti(&[1, 3, 4, 7], 9).map_err(|e| e.to_string())?;
    ensure(ranks == big(&[2520, 11340, 10080, 1260]), || format!("ranks {ranks:?}"))?;
    let scaled: Vec<BigInt> = big(&[6, 27, 24, 3]).iter().map(|x| x * 420).collect();
    ensure(ranks == scaled, || "factor 420 fails".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pool = Vec::new();
    for n in 1..=CONCORDANCE_MAX_N {
        for mask in 1u32..(1 << (n + 1)) {
            let a: Vec<i64> = (0..=n as i64).filter(|&d| mask >> d & 1 == 1).collect();
            if one_sided_triplet(&a, n).is_ok() {
                pool.push((n, a));
            }
        }
    }
    let sample: Vec<_> = pool.choose_multiple(&mut rng, CONCORDANCE_SAMPLES).cloned().collect();
    for (n, a) in sample {
        let (ranks, _) = construction_betti(&a, n).map_err(|e| e.to_string())?;
        let hk = herzog_kuhl(&a).map_err(|e| e.to_string())?;
        let t = one_sided_triplet(&a, n).map_err(|e| e.to_string())?;
        let s = solve_betti(&t).map_err(|e| e.to_string())?;
        let r = to_rats(&ranks);
        ensure(s.nullity == 1, || format!("{t}: nullity {}", s.nullity))?;
        ensure(proportional(&r, &hk_oracle(&a)), || format!("n={n} A={a:?}: ranks vs HK oracle"))?;
        ensure(proportional(&r, &to_rats(&hk)), || format!("n={n} A={a:?}: ranks vs herzog_kuhl"))?;
        ensure(proportional(&r, &to_rats(&s.alpha)), || format!("n={n} A={a:?}: ranks vs alpha"))?;
    }
    Ok(())
}

fn check_resolution(label: &str, x: &SqModuleComplex) -> Outcome {
    let f = resolve_complex(x).map_err(|e| format!("{label}: {e}"))?;
    ensure(f.validate().is_empty(), || format!("{label}: violations {:?}", f.validate()))?;
    ensure(f.is_minimal(), || format!("{label}: not minimal"))?;
    let want = oracle_module_homology(x);
    let got = oracle_free_homology(&f);
    ensure(got == want, || format!("{label}: homology {got:?}, input {want:?}"))
}

fn criterion_resolution() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut nontrivial = 0;
    for case in 0..RANDOM_CASES {
        let n = rng.gen_range(1..=4);
        let m = random_module(&mut rng, n);
        ensure(m.is_valid(), || format!("module {case} invalid"))?;
        ensure(m.dims().iter().all(|&d| d <= 2), || format!("module {case} too large"))?;
        check_resolution(&format!("module {case}"), &SqModuleComplex::single(m.clone()))?;
        // Minimal resolution of the module itself.
        let r = resolve_module(&m);
        let mut want = BettiTable::new();
        for s in sqtriplet::SqDegree::all(n) {
            if m.dim(s) > 0 {
                want.add(0, s, m.dim(s));
            }
        }
        ensure(oracle_free_homology(&r) == want, || format!("module {case}: resolve_module"))?;

        let top = rng.gen_range(0..=2);
        let bottom = rng.gen_range(0..=2);
        let p = rng.gen_range(-1..=1);
        let f = random_two_term(&mut rng, n, p, top, bottom);
        let x = alexander_termwise(&f);
        if !oracle_module_homology(&x).is_empty() && !m.is_zero() {
            nontrivial += 1;
        }
        ensure(x.validate().is_empty(), || format!("complex {case}: {:?}", x.validate()))?;
        check_resolution(&format!("complex {case}"), &x)?;
        check_resolution(&format!("dual resolution {case}"), &alexander_termwise(&r.dualize()))?;
    }
    ensure(2 * nontrivial >= RANDOM_CASES, || format!("only {nontrivial} nontrivial cases"))
}

fn criterion_balancing(entries: &[SuiteEntry]) -> Outcome {
    let mut realized = BTreeSet::new();
    for e in entries {
        if let Some(t) = realized_triplet(&e.complex).map_err(|err| format!("{}: {err}", e.name))? {
            realized.insert(t.to_string());
            ensure(is_balanced(&t), || format!("{}: {t} not balanced", e.name))?;
            let p = derive_params(&t).map_err(|err| format!("{t}: {err}"))?;
            let n = t.n() as i64;
            let top = *t.set_a().last().unwrap();
            ensure(top == n - p.b, || format!("{t}: a_r = {top}, n - b = {}", n - p.b))?;
        }
    }
    ensure(realized.contains("n=3; A=0,2; B=0,2,3; C=1,2,3"), || format!("realized {realized:?}"))?;

    let t: DegreeTriplet = "n=3; A=0,2; B=0,2,3; C=1,2,3".parse().map_err(|e| format!("{e}"))?;
    let r = reduce(&t).map_err(|e| e.to_string())?;
    ensure(r.set_a() == [1, 2] && r.set_b() == [0, 2] && r.set_c() == [1, 2, 3], || r.to_string())?;
    ensure(is_balanced(&r), || format!("{r} not balanced"))
}

#[test]
fn acceptance() {
    let entries = suite();
    let criteria: Vec<Criterion> = vec![
        (1, "cube identity A^3 = (-1)^n I, n <= 12", Box::new(criterion_cube)),
        (2, "three-variable example end to end", Box::new(criterion_example)),
        (3, "solver golden values", Box::new(criterion_golden)),
        (4, "AD^3 F has the invariants of F[n]", Box::new(|| criterion_yanagawa(&entries))),
        (5, "rotation of B, H, C", Box::new(|| criterion_rotation(&entries))),
        (6, "linear strands of AD F", Box::new(|| criterion_strands(&entries))),
        (7, "balanced triplet sweep, n <= 6", Box::new(criterion_sweep)),
        (8, "Herzog-Kuhl and tensor-rank concordance", Box::new(criterion_concordance)),
        (9, "resolution of random modules and complexes", Box::new(criterion_resolution)),
        (10, "realized triplets are balanced; reduce", Box::new(|| criterion_balancing(&entries))),
    ];
    report("");
    let mut failures = Vec::new();
    for (id, name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match &outcome {
            Ok(()) => report(&format!("PASS {id:>2} {name} ({elapsed:.2?})")),
            Err(msg) => {
                report(&format!("FAIL {id:>2} {name} ({elapsed:.2?}): {msg}"));
                failures.push(*id);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
