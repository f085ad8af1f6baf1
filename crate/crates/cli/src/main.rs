use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sqtriplet::functors::{ad_power, realized_triplet};
use sqtriplet::io::{complex_from_json, complex_to_json, solution_table, solution_to_value, table_to_value};
use sqtriplet::tensor::one_sided_triplet;
use sqtriplet::triplet::{balance_violation, parse_int_list, reduce_fully};
use sqtriplet::verify::{self, Suite};
use sqtriplet::{
    ad, construction_betti, derive_params, enumerate_balanced, herzog_kuhl, pinching_weights,
    render_triangle, solve_betti, transition_matrix, DegreeTriplet, FreeSqComplex, RatMatrix,
};

#[derive(Parser)]
#[command(name = "sqtriplet", version, about = "Exact squarefree modules, Alexander duality and degree triplets")]
struct Cli {
    /// Worker threads for enumeration and verification.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Print the transition matrix, or check its cube for every size up to N.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        check_cube: bool,
    },
    #[command(subcommand)]
    Triplet(TripletCmd),
    #[command(subcommand)]
    Complex(ComplexCmd),
    #[command(subcommand)]
    Tensor(TensorCmd),
    #[command(subcommand)]
    Demo(DemoCmd),
    /// Run self-checks and fail on the first violation.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
}

#[derive(Subcommand)]
enum TripletCmd {
    /// Solve for the Betti numbers of a triplet.
    Solve(TripletArgs),
    /// Check the endpoint, counting and balancing conditions.
    Check(TripletArgs),
    /// List every balanced triplet of type n.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        stats: bool,
    },
    /// Remove internal nondegrees one at a time.
    Reduce(TripletArgs),
}

#[derive(Args)]
struct TripletArgs {
    #[arg(long)]
    n: usize,
    #[arg(long = "A", value_parser = parse_list)]
    a: IntList,
    #[arg(long = "B", value_parser = parse_list)]
    b: IntList,
    #[arg(long = "C", value_parser = parse_list)]
    c: IntList,
}

#[derive(Subcommand)]
enum ComplexCmd {
    Validate(IoArgs),
    Minimalize(IoArgs),
    Dualize(IoArgs),
    Ad(IoArgs),
    Ad3(IoArgs),
    Invariants(IoArgs),
}

#[derive(Args)]
struct IoArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long = "out")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TensorCmd {
    /// Term ranks of the pinching construction for a degree set A.
    Ranks {
        #[arg(long)]
        n: usize,
        #[arg(long = "A", value_parser = parse_list)]
        a: IntList,
    },
}

#[derive(Subcommand)]
enum DemoCmd {
    /// The complex S <- S(-2)^3 in three variables, its two images under AD, and their triangle.
    Example23,
}

#[derive(Clone)]
struct IntList(Vec<i64>);

fn parse_list(s: &str) -> Result<IntList, String> {
    parse_int_list(s).map(IntList).map_err(|e| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// A failure after argument parsing. Exit status 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let machine = cli.format == Format::Machine;
    match &cli.command {
        Command::Matrix { n, check_cube } => matrix(*n, *check_cube, machine),
        Command::Triplet(cmd) => triplet(cmd, machine),
        Command::Complex(cmd) => complex(cmd, machine),
        Command::Tensor(TensorCmd::Ranks { n, a }) => tensor_ranks(*n, &a.0, machine),
        Command::Demo(DemoCmd::Example23) => demo(machine),
        Command::Verify { suite, max_n } => run_verify(*suite, *max_n, machine),
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn matrix_value(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|x| json!(x.to_string())).collect()))
            .collect(),
    )
}

fn matrix(n: usize, check_cube: bool, machine: bool) -> Outcome {
    if !check_cube {
        let a = transition_matrix(n);
        if machine {
            print_json(&json!({"n": n, "matrix": matrix_value(&a)}));
        } else {
            print!("{a}");
        }
        return Ok(());
    }
    let results: Vec<(usize, bool)> = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let want = RatMatrix::identity(k + 1).scale(&sqtriplet::exact::rat_int(sign));
            (k, transition_matrix(k).pow(3) == want)
        })
        .collect();
    if machine {
        let rows: Vec<Value> = results.iter().map(|&(k, ok)| json!({"n": k, "ok": ok})).collect();
        print_json(&json!({"cube": rows}));
    } else {
        for &(k, ok) in &results {
            println!("n={k:<3} A^3 = (-1)^n I: {}", if ok { "OK" } else { "FAIL" });
        }
    }
    match results.iter().find(|(_, ok)| !ok) {
        Some((k, _)) => Err(Failure(format!("cube identity fails for n = {k}"))),
        None => Ok(()),
    }
}

fn make_triplet(t: &TripletArgs) -> Result<DegreeTriplet, Failure> {
    Ok(DegreeTriplet::new(t.n, &t.a.0, &t.b.0, &t.c.0)?)
}

fn triplet(cmd: &TripletCmd, machine: bool) -> Outcome {
    match cmd {
        TripletCmd::Solve(args) => {
            let t = make_triplet(args)?;
            let s = solve_betti(&t)?;
            if machine {
                print_json(&solution_to_value(&s));
            } else {
                print!("{}", solution_table(&s));
                println!();
                print!("{}", render_triangle(&t)?);
            }
            Ok(())
        }
        TripletCmd::Check(args) => {
            let t = make_triplet(args)?;
            let p = derive_params(&t)?;
            let violation = balance_violation(&t)?;
            if machine {
                print_json(&json!({
                    "triplet": t.to_string(),
                    "a": p.a, "b": p.b, "c": p.c,
                    "e_A": p.e_a, "e_B": p.e_b, "e_C": p.e_c, "e": p.e,
                    "balanced": violation.is_none(),
                    "violation": violation.map(|v| v.to_string()),
                }));
            } else {
                println!("{t}");
                println!("a={} b={} c={} e={} (A {}, B {}, C {})", p.a, p.b, p.c, p.e, p.e_a, p.e_b, p.e_c);
                println!("{}", if violation.is_none() { "balanced" } else { "not balanced" });
            }
            match violation {
                Some(v) => Err(Failure(format!("not balanced: {v}"))),
                None => Ok(()),
            }
        }
        TripletCmd::Enumerate { n, stats } => {
            let all = enumerate_balanced(*n);
            let row = stats.then(|| verify::sweep(*n));
            if machine {
                let mut doc = json!({
                    "n": n,
                    "count": all.len(),
                    "triplets": all.iter().map(ToString::to_string).collect::<Vec<_>>(),
                });
                if let Some(r) = &row {
                    let hist: BTreeMap<String, usize> =
                        r.nullity.iter().map(|(k, v)| (k.to_string(), *v)).collect();
                    doc["stats"] = json!({
                        "nullity": hist,
                        "positivity_failures": r.positivity_failures.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "clean": r.clean(),
                    });
                }
                print_json(&doc);
            } else {
                for t in &all {
                    println!("{t}");
                }
                if let Some(r) = &row {
                    println!();
                    print!("{}", verify::sweep_table(std::slice::from_ref(r)));
                }
            }
            Ok(())
        }
        TripletCmd::Reduce(args) => {
            let t = make_triplet(args)?;
            let chain = reduce_fully(&t)?;
            if machine {
                print_json(&json!(chain.iter().map(ToString::to_string).collect::<Vec<_>>()));
            } else {
                for (i, t) in chain.iter().enumerate() {
                    println!("{i:>3}  {t}");
                }
            }
            Ok(())
        }
    }
}

fn read_complex(path: &Path) -> Result<FreeSqComplex, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    let f = complex_from_json(&text)?;
    let violations = f.validate();
    if !violations.is_empty() {
        let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(Failure(format!("invalid complex: {}", list.join("; "))));
    }
    Ok(f)
}

fn emit_complex(f: &FreeSqComplex, out: Option<&Path>, machine: bool) -> Outcome {
    let text = complex_to_json(f);
    match out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        }
        None if machine => print!("{text}"),
        None => print!("{f}"),
    }
    Ok(())
}

fn complex(cmd: &ComplexCmd, machine: bool) -> Outcome {
    match cmd {
        ComplexCmd::Validate(io) => {
            let text = fs::read_to_string(&io.input).map_err(|e| Failure(format!("{}: {e}", io.input.display())))?;
            let f = complex_from_json(&text)?;
            let violations: Vec<String> = f.validate().iter().map(ToString::to_string).collect();
            if machine {
                print_json(&json!({
                    "valid": violations.is_empty(),
                    "minimal": f.is_minimal(),
                    "violations": violations,
                }));
            } else if violations.is_empty() {
                println!("valid, {}", if f.is_minimal() { "minimal" } else { "not minimal" });
            } else {
                for v in &violations {
                    println!("{v}");
                }
            }
            if violations.is_empty() {
                Ok(())
            } else {
                Err(Failure(format!("{} violation(s)", violations.len())))
            }
        }
        ComplexCmd::Minimalize(io) => emit_complex(&read_complex(&io.input)?.minimalize(), io.output.as_deref(), machine),
        ComplexCmd::Dualize(io) => emit_complex(&read_complex(&io.input)?.dualize(), io.output.as_deref(), machine),
        ComplexCmd::Ad(io) => emit_complex(&ad(&read_complex(&io.input)?), io.output.as_deref(), machine),
        ComplexCmd::Ad3(io) => emit_complex(&ad_power(&read_complex(&io.input)?, 3), io.output.as_deref(), machine),
        ComplexCmd::Invariants(io) => {
            let f = read_complex(&io.input)?;
            let inv = f.invariants();
            let text = if machine || io.output.is_some() {
                serde_json::to_string_pretty(&json!({
                    "betti": table_to_value(&inv.betti),
                    "homology": table_to_value(&inv.homology),
                    "cohomology": table_to_value(&inv.cohomology),
                }))
                .expect("serializable")
                    + "\n"
            } else {
                format!("B\n{}H\n{}C\n{}", inv.betti, inv.homology, inv.cohomology)
            };
            match &io.output {
                Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
    }
}

fn ints_json<T: ToString>(v: &[T]) -> Value {
    Value::Array(v.iter().map(|x| json!(x.to_string())).collect())
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn tensor_ranks(n: usize, a: &[i64], machine: bool) -> Outcome {
    let p = pinching_weights(a, n)?;
    let (ranks, concordant) = construction_betti(a, n)?;
    let hk = herzog_kuhl(a)?;
    let t = one_sided_triplet(a, n)?;
    if machine {
        print_json(&json!({
            "triplet": t.to_string(),
            "u": p.u,
            "w": p.w,
            "ranks": ints_json(&ranks),
            "herzog_kuhl": ints_json(&hk),
            "concordant": concordant,
        }));
    } else {
        println!("triplet      {t}");
        println!("u            {}", join(&p.u));
        println!("w            {}", join(&p.w));
        println!("ranks        {}", join(&ranks));
        println!("herzog-kuhl  {}", join(&hk));
        println!("concordant   {concordant}");
    }
    Ok(())
}

fn profile_line(f: &FreeSqComplex) -> String {
    let mut parts = Vec::new();
    for (p, gens) in f.terms().iter().rev() {
        let mut count: BTreeMap<usize, usize> = BTreeMap::new();
        for g in gens {
            *count.entry(g.len()).or_insert(0) += 1;
        }
        let term: Vec<String> = count
            .iter()
            .map(|(d, k)| {
                let s = if *d == 0 { "S".to_string() } else { format!("S(-{d})") };
                if *k == 1 { s } else { format!("{s}^{k}") }
            })
            .collect();
        parts.push(format!("{} [{p}]", term.join(" + ")));
    }
    parts.join(" <- ")
}

fn demo(machine: bool) -> Outcome {
    let f = FreeSqComplex::example23();
    let chain = [f.clone(), ad(&f), ad_power(&f, 2)];
    let t = realized_triplet(&f)?.ok_or_else(|| Failure("complexes are not pure".into()))?;
    let s = solve_betti(&t)?;
    let p = derive_params(&t)?;
    if machine {
        let profiles: Vec<Value> = chain
            .iter()
            .map(|c| {
                let prof = c.singly_graded_profile().ok();
                json!({
                    "complex": serde_json::from_str::<Value>(&complex_to_json(c)).expect("valid json"),
                    "pure": prof.as_ref().is_some_and(|p| p.is_pure),
                    "linear": prof.as_ref().is_some_and(|p| p.is_linear),
                })
            })
            .collect();
        print_json(&json!({
            "complexes": profiles,
            "corners": {"a": p.a, "b": p.b, "c": p.c},
            "solution": solution_to_value(&s),
        }));
        return Ok(());
    }
    for (name, c) in ["F", "AD F", "AD^2 F"].iter().zip(&chain) {
        let prof = c.singly_graded_profile()?;
        println!(
            "{name:<7} {}   pure: {}, linear: {}",
            profile_line(c),
            prof.is_pure,
            prof.is_linear
        );
    }
    println!();
    println!("corners a={} b={} c={}", p.a, p.b, p.c);
    print!("{}", render_triangle(&t)?);
    println!();
    print!("{}", solution_table(&s));
    Ok(())
}

fn run_verify(suite: Suite, max_n: usize, machine: bool) -> Outcome {
    let checks = verify::run(suite, max_n);
    let mut by_name: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = by_name.entry(c.name.as_str()).or_insert((0, 0));
        e.1 += 1;
        if c.passed {
            e.0 += 1;
        }
    }
    let first = checks.iter().find(|c| !c.passed);
    if machine {
        let rows: Vec<Value> = by_name
            .iter()
            .map(|(k, (p, t))| json!({"check": k, "passed": p, "total": t}))
            .collect();
        print_json(&json!({
            "total": checks.len(),
            "passed": checks.iter().filter(|c| c.passed).count(),
            "checks": rows,
            "first_failure": first.map(|c| json!({"check": c.name, "subject": c.subject, "detail": c.detail})),
        }));
    } else {
        for (k, (p, t)) in &by_name {
            println!("{:<36} {p:>5}/{t:<5} {}", k, if p == t { "ok" } else { "FAIL" });
        }
    }
    match first {
        Some(c) => Err(Failure(format!("{} failed for {}: {}", c.name, c.subject, c.detail))),
        None => Ok(()),
    }
}
