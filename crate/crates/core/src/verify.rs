//! Self-checks over a suite of complexes and over all balanced triplets up
//! to a size bound. Used by the command-line `verify` subcommand.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::complex::FreeSqComplex;
use crate::degree::SqDegree;
use crate::exact::{proportional, rat_int, to_rats, transition_matrix};
use crate::functors::{ad, ad_betti_shortcut, realized_triplet, resolve_module};
use crate::matrix::RatMatrix;
use crate::module::{ell_complex, standard_module, tor_betti};
use crate::table::BettiTable;
use crate::tensor::construction_betti;
use crate::triplet::{
    derive_params, enumerate_balanced, full_system, herzog_kuhl, is_balanced, reduce,
    reduced_system, render_triangle, solve_betti, DegreeTriplet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Rotation,
    Yanagawa,
    Solver,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Suite::All),
            "rotation" => Ok(Suite::Rotation),
            "yanagawa" => Ok(Suite::Yanagawa),
            "solver" => Ok(Suite::Solver),
            other => Err(format!("unknown suite `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, subject: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            subject: subject.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

/// A complex in the suite, with the partition it came from when it is the
/// resolution of a standard module `S/A(-B;C)`.
#[derive(Clone, Debug)]
pub struct SuiteEntry {
    pub name: String,
    pub complex: FreeSqComplex,
    pub partition: Option<[SqDegree; 3]>,
}

/// The partition `[n] = A ∪ B ∪ C` encoded by the base-3 digits of `code`.
pub fn partition_from_code(n: usize, mut code: usize) -> [SqDegree; 3] {
    let mut parts = [SqDegree::empty(n); 3];
    for v in 1..=n {
        parts[code % 3] = parts[code % 3].with(v);
        code /= 3;
    }
    parts
}

/// Resolutions of every `S/A(-B;C)` with `1 ≤ n ≤ max_n`, plus the
/// three-variable complex `S ← S(-2)^3`.
pub fn standard_suite(max_n: usize) -> Vec<SuiteEntry> {
    let mut specs = Vec::new();
    for n in 1..=max_n {
        for code in 0..3usize.pow(n as u32) {
            specs.push((n, partition_from_code(n, code)));
        }
    }
    let mut out: Vec<SuiteEntry> = specs
        .par_iter()
        .map(|&(n, [a, b, c])| {
            let m = standard_module(n, a, b, c).expect("partition");
            SuiteEntry {
                name: format!("S/{a}(-{b};{c}) n={n}"),
                complex: resolve_module(&m),
                partition: Some([a, b, c]),
            }
        })
        .collect();
    out.push(SuiteEntry {
        name: "example S <- S(-2)^3".into(),
        complex: FreeSqComplex::example23(),
        partition: None,
    });
    out
}

/// `(i, S) ↦ (i - |S^c|, S^c)`: the reindexing in the rotation identities.
pub fn rotate_table(t: &BettiTable) -> BettiTable {
    t.reindex(|p, s| {
        let r = s.complement();
        (p - r.len() as i64, r)
    })
}

fn table_diff(a: &BettiTable, b: &BettiTable) -> String {
    format!("got {a:?}, expected {b:?}")
}

fn compare(name: &str, subject: &str, got: &BettiTable, want: &BettiTable) -> Check {
    let ok = got == want;
    Check::new(name, subject, ok, if ok { String::new() } else { table_diff(got, want) })
}

/// The three rotation identities and the Betti-table shortcut.
pub fn rotation_checks(subject: &str, f: &FreeSqComplex, g: &FreeSqComplex) -> Vec<Check> {
    let fi = f.invariants();
    let gi = g.invariants();
    vec![
        compare("B(AD F) = H rotated", subject, &gi.betti, &rotate_table(&fi.homology)),
        compare("H(AD F) = C(F)", subject, &gi.homology, &fi.cohomology),
        compare("C(AD F) = B rotated", subject, &gi.cohomology, &rotate_table(&fi.betti)),
        compare("shortcut", subject, &ad_betti_shortcut(f), &g.generator_table()),
    ]
}

/// `AD³(F)` and `F[n]` have the same three invariant tables.
pub fn yanagawa_check(subject: &str, f: &FreeSqComplex, ad3: &FreeSqComplex) -> Check {
    let got = ad3.invariants();
    let want = f.translate(f.n() as i64).invariants();
    let ok = got == want;
    Check::new(
        "AD^3 F = F[n]",
        subject,
        ok,
        if ok { String::new() } else { format!("got {got:?}, expected {want:?}") },
    )
}

/// Strand `i` of `AD(F)` has the generators of `L(H^i(F))[n-i]`.
pub fn strand_check(subject: &str, f: &FreeSqComplex, g: &FreeSqComplex) -> Check {
    let n = f.n() as i64;
    let got = match g.strands() {
        Ok(s) => s,
        Err(e) => return Check::new("strands", subject, false, e.to_string()),
    };
    let want: BTreeMap<i64, BettiTable> = f
        .homology()
        .iter()
        .map(|(&i, h)| (i, ell_complex(h).translate(n - i).generator_table()))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let ok = got == want;
    Check::new(
        "strand i of AD F = L(H^i F)[n-i]",
        subject,
        ok,
        if ok { String::new() } else { format!("got {got:?}, expected {want:?}") },
    )
}

/// For pure `F` with initial term `S(-a_0)^α` at position `t`, the last
/// term of `AD(F)` is `S(-(n-a_0))^α` at position `-n+a_0+t`.
pub fn endpoint_check(subject: &str, f: &FreeSqComplex, g: &FreeSqComplex) -> Option<Check> {
    let profile = f.minimalize().singly_graded_profile().ok()?;
    if !profile.is_pure {
        return None;
    }
    let n = f.n() as i64;
    let t = *f.terms().keys().next_back()?;
    let a0 = profile.degree_sequence[0] as i64;
    let alpha = f.rank(t);
    let pos = -n + a0 + t;
    let lowest = g.terms().keys().next().copied();
    let gens = g.generators(pos);
    let ok = lowest == Some(pos)
        && gens.len() == alpha
        && gens.iter().all(|d| d.len() as i64 == n - a0);
    Some(Check::new(
        "endpoint of AD F",
        subject,
        ok,
        if ok {
            String::new()
        } else {
            format!("expected S(-{})^{alpha} at {pos}, lowest position {lowest:?}", n - a0)
        },
    ))
}

/// `AD F` and `AD² F` are linear exactly when `F` has one homology and one
/// cohomology index.
pub fn cm_check(subject: &str, f: &FreeSqComplex, g: &FreeSqComplex, h: &FreeSqComplex) -> Check {
    let linear = |c: &FreeSqComplex| c.singly_graded_profile().is_ok_and(|p| p.is_linear);
    let lhs = linear(g) && linear(h);
    let inv = f.invariants();
    let rhs = inv.homology.positions().len() == 1 && inv.cohomology.positions().len() == 1;
    Check::new(
        "CM criterion",
        subject,
        lhs == rhs,
        format!("linear: {lhs}, single H and C: {rhs}"),
    )
}

/// `AD(res S/A(-B;C))` has homology `S/C(-A;B)` at position `-|A|`.
pub fn hexagon_check(subject: &str, parts: [SqDegree; 3], g: &FreeSqComplex) -> Check {
    let [a, b, c] = parts;
    let n = a.n();
    let want = standard_module(n, c, a, b).expect("partition");
    let h = g.homology();
    let pos = -(a.len() as i64);
    let ok = h.len() == 1
        && h.get(&pos).is_some_and(|m| m.dims() == want.dims() && m.mult_ranks() == want.mult_ranks());
    Check::new(
        "AD S/A(-B;C) = S/C(-A;B)",
        subject,
        ok,
        if ok { String::new() } else { format!("homology at {:?}", h.keys().collect::<Vec<_>>()) },
    )
}

/// Structural checks: validity, minimality, `DD`, minimalization and Tor.
pub fn structure_checks(entry: &SuiteEntry, g: &FreeSqComplex) -> Vec<Check> {
    let f = &entry.complex;
    let s = entry.name.as_str();
    let dual = f.dualize();
    let mut out = vec![
        Check::new("AD F valid and minimal", s, g.validate().is_empty() && g.is_minimal(), ""),
        Check::new("D F valid", s, dual.validate().is_empty(), ""),
        Check::new("DD F = F on generators", s, dual.dualize().terms() == f.terms(), ""),
        compare("minimalize keeps H", s, &f.minimalize().homology_table(), &f.homology_table()),
    ];
    if let Some([a, b, c]) = entry.partition {
        let m = standard_module(f.n(), a, b, c).expect("partition");
        out.push(compare("B(res M) = Tor(M)", s, &f.generator_table(), &tor_betti(&m)));
    }
    out
}

/// Realized triplets are balanced.
pub fn balance_check(subject: &str, f: &FreeSqComplex) -> Option<Check> {
    match realized_triplet(f) {
        Ok(Some(t)) => {
            let ok = derive_params(&t).is_ok() && is_balanced(&t);
            Some(Check::new("realized triplet balanced", subject, ok, t.to_string()))
        }
        Ok(None) => None,
        Err(e) => Some(Check::new("realized triplet balanced", subject, false, e.to_string())),
    }
}

/// `A^3 = (-1)^n I` for `n ≤ max_n`.
pub fn cube_checks(max_n: usize) -> Vec<Check> {
    (0..=max_n)
        .map(|n| {
            let sign = if n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let ok = transition_matrix(n).pow(3) == RatMatrix::identity(n + 1).scale(&sign);
            Check::new("A^3 = (-1)^n I", &format!("n={n}"), ok, "")
        })
        .collect()
}

/// Per-`n` statistics of the solver over all balanced triplets.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepRow {
    pub n: usize,
    pub count: usize,
    pub nullity: BTreeMap<usize, usize>,
    pub row_count_failures: Vec<DegreeTriplet>,
    pub full_nullity_mismatches: Vec<DegreeTriplet>,
    pub positivity_failures: Vec<DegreeTriplet>,
    pub transition_failures: Vec<DegreeTriplet>,
    pub reduce_failures: Vec<DegreeTriplet>,
    pub one_sided_failures: Vec<DegreeTriplet>,
    pub triangle_failures: Vec<DegreeTriplet>,
}

impl SweepRow {
    pub fn clean(&self) -> bool {
        self.nullity.keys().all(|&k| k == 1)
            && self.row_count_failures.is_empty()
            && self.full_nullity_mismatches.is_empty()
            && self.positivity_failures.is_empty()
            && self.transition_failures.is_empty()
            && self.reduce_failures.is_empty()
            && self.one_sided_failures.is_empty()
            && self.triangle_failures.is_empty()
    }
}

#[derive(Default)]
struct TripletOutcome {
    nullity: usize,
    rows_ok: bool,
    full_ok: bool,
    positive: bool,
    transition_ok: bool,
    reduce_ok: bool,
    one_sided_ok: bool,
    triangle_ok: bool,
}

fn examine(t: &DegreeTriplet) -> TripletOutcome {
    let p = derive_params(t).expect("balanced triplets have parameters");
    let n = t.n();
    let r = t.set_a().len() - 1;
    let system = reduced_system(t).expect("parameters exist");
    let sol = solve_betti(t).expect("parameters exist");
    let full_nullity = full_system(t).nullspace().len();

    let transition_ok = sol.nullity != 1 || {
        let a = transition_matrix(n);
        let sign = if n.is_multiple_of(2) { rat_int(1) } else { rat_int(-1) };
        sol.beta_hat == a.mul_vec(&sol.alpha_hat)
            && sol.gamma_hat == a.mul_vec(&sol.beta_hat)
            && a.mul_vec(&sol.gamma_hat) == sol.alpha_hat.iter().map(|x| x * &sign).collect::<Vec<_>>()
    };
    let reduce_ok = p.e_a == 0
        || reduce(t).is_ok_and(|t2| {
            is_balanced(&t2) && derive_params(&t2).is_ok_and(|q| q.e < p.e)
        });
    let one_sided_ok = p.e_b != 0 || p.e_c != 0 || {
        let hk = herzog_kuhl(t.set_a()).expect("increasing");
        let (_, concordant) = construction_betti(t.set_a(), n).expect("one-sided");
        sol.nullity == 1 && proportional(&to_rats(&sol.alpha), &to_rats(&hk)) && concordant
    };
    let triangle_ok = render_triangle(t).is_ok_and(|pic| {
        let body: String = pic.lines().take_while(|l| !l.starts_with("A [")).collect();
        let blank = body.chars().filter(|&c| c == '○').count();
        let filled = body.chars().filter(|&c| c == '●').count();
        3 * blank <= blank + filled && blank as i64 == p.e
    });
    TripletOutcome {
        nullity: sol.nullity,
        rows_ok: system.rows() == r && system.cols() == r + 1,
        full_ok: full_nullity == sol.nullity,
        positive: sol.nullity == 1 && sol.positive,
        transition_ok,
        reduce_ok,
        one_sided_ok,
        triangle_ok,
    }
}

/// Solves every balanced triplet of type `n`.
pub fn sweep(n: usize) -> SweepRow {
    let triplets = enumerate_balanced(n);
    let outcomes: Vec<TripletOutcome> = triplets.par_iter().map(examine).collect();
    let mut row = SweepRow {
        n,
        count: triplets.len(),
        ..SweepRow::default()
    };
    for (t, o) in triplets.iter().zip(outcomes) {
        *row.nullity.entry(o.nullity).or_insert(0) += 1;
        let flags = [
            (o.rows_ok, &mut row.row_count_failures),
            (o.full_ok, &mut row.full_nullity_mismatches),
            (o.positive, &mut row.positivity_failures),
            (o.transition_ok, &mut row.transition_failures),
            (o.reduce_ok, &mut row.reduce_failures),
            (o.one_sided_ok, &mut row.one_sided_failures),
            (o.triangle_ok, &mut row.triangle_failures),
        ];
        for (ok, list) in flags {
            if !ok {
                list.push(t.clone());
            }
        }
    }
    row
}

/// Summary table: count per `n`, nullity histogram and failure counts.
pub fn sweep_table(rows: &[SweepRow]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3} {:>8}  {:<16} {:>9} {:>8} {:>9}",
        "n", "triplets", "nullity", "positive", "rows", "full-sys"
    );
    for r in rows {
        let hist: Vec<String> = r.nullity.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        let _ = writeln!(
            out,
            "{:>3} {:>8}  {:<16} {:>9} {:>8} {:>9}",
            r.n,
            r.count,
            hist.join(" "),
            format!("{}/{}", r.count - r.positivity_failures.len(), r.count),
            if r.row_count_failures.is_empty() { "ok" } else { "FAIL" },
            if r.full_nullity_mismatches.is_empty() { "ok" } else { "FAIL" },
        );
    }
    for r in rows {
        for t in &r.positivity_failures {
            let _ = writeln!(out, "not positive or not unique: {t}");
        }
    }
    out
}

fn sweep_checks(max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let row = sweep(n);
        let subject = format!("n={n}");
        let list = |v: &[DegreeTriplet]| v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" | ");
        out.push(Check::new(
            "nullity 1 with positive solution",
            &subject,
            row.positivity_failures.is_empty(),
            list(&row.positivity_failures),
        ));
        out.push(Check::new("reduced system is r x (r+1)", &subject, row.row_count_failures.is_empty(), list(&row.row_count_failures)));
        out.push(Check::new("full and reduced nullity agree", &subject, row.full_nullity_mismatches.is_empty(), list(&row.full_nullity_mismatches)));
        out.push(Check::new("transition identities", &subject, row.transition_failures.is_empty(), list(&row.transition_failures)));
        out.push(Check::new("reduce keeps balance", &subject, row.reduce_failures.is_empty(), list(&row.reduce_failures)));
        out.push(Check::new("one-sided concordance", &subject, row.one_sided_failures.is_empty(), list(&row.one_sided_failures)));
        out.push(Check::new("triangle circles", &subject, row.triangle_failures.is_empty(), list(&row.triangle_failures)));
    }
    out
}

/// Runs a suite and returns every check in a deterministic order.
pub fn run(suite: Suite, max_n: usize) -> Vec<Check> {
    let mut out = Vec::new();
    if suite == Suite::All {
        out.extend(cube_checks(12));
    }
    if matches!(suite, Suite::All | Suite::Solver) {
        out.extend(sweep_checks(max_n));
    }
    if suite == Suite::Solver {
        return out;
    }
    let entries = standard_suite(max_n);
    let per: Vec<Vec<Check>> = entries
        .par_iter()
        .map(|e| {
            let f = &e.complex;
            let s = e.name.as_str();
            let g = ad(f);
            let mut checks = Vec::new();
            if matches!(suite, Suite::All | Suite::Rotation) {
                checks.extend(rotation_checks(s, f, &g));
            }
            if matches!(suite, Suite::All | Suite::Yanagawa) {
                let h = ad(&g);
                let k = ad(&h);
                checks.push(yanagawa_check(s, f, &k));
                if suite == Suite::All {
                    checks.push(cm_check(s, f, &g, &h));
                }
            }
            if suite == Suite::All {
                checks.push(strand_check(s, f, &g));
                checks.extend(endpoint_check(s, f, &g));
                checks.extend(structure_checks(e, &g));
                if let Some(parts) = e.partition {
                    checks.push(hexagon_check(s, parts, &g));
                }
                checks.extend(balance_check(s, f));
            }
            checks
        })
        .collect();
    out.extend(per.into_iter().flatten());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_codes_cover_all() {
        let n = 2;
        let mut seen = std::collections::BTreeSet::new();
        for code in 0..9 {
            let [a, b, c] = partition_from_code(n, code);
            assert_eq!(a.union(&b).union(&c), SqDegree::full(n));
            assert_eq!(a.len() + b.len() + c.len(), n);
            seen.insert((a, b, c));
        }
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn small_suites_pass() {
        for suite in [Suite::Rotation, Suite::Yanagawa, Suite::Solver] {
            let failed: Vec<Check> = run(suite, 2).into_iter().filter(|c| !c.passed).collect();
            assert!(failed.is_empty(), "{failed:?}");
        }
    }
}
