use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use rwlab::format::parse_instances;
use rwlab::gen::{gen_random_walk_instance, random_instance};
use rwlab::harness::registry::{lookup, Caps, ReduceOptions, REGISTRY};
use rwlab::harness::{audit, crosscheck, run_bench, slopes, BenchGrid, BenchSolver, CrosscheckConfig, AUDIT_HEADER, BENCH_HEADER};
use rwlab::solvers::{
    anywalk_enum_oracle, nfa_enum_oracle, solve, solve_uniform_color_power, solve_walk_matrix_chain,
    walk_enum_oracle, Answer,
};
use rwlab::verifier::{build_certificate, verify_certificate, Certificate};
use rwlab::{serialize_instance, Color, Instance, InstanceKind, Variant, WalkInstance};

#[derive(Parser)]
#[command(name = "rw-lab", version, about = "Colored Walk / NFA Acceptance reduction laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance.
    Gen(GenArgs),
    /// Decide an instance and print YES or NO.
    Solve(SolveArgs),
    /// Apply a registered reduction to an instance.
    Reduce(ReduceArgs),
    /// Check answer preservation of a reduction on seeded random inputs.
    Crosscheck(CrosscheckArgs),
    /// Emit measured against promised parameters as CSV.
    Audit(AuditArgs),
    /// Time solvers over a grid of generated instances, as CSV.
    Bench(BenchArgs),
    /// Write the frontier certificate of a dir-edge instance with C <= 2.
    Certify(CertifyArgs),
    /// Check a certificate against an instance and print VALID or INVALID.
    Verify(VerifyArgs),
    /// List registered reductions.
    List,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    /// Edge count m = ceil(n^alpha), capped at the simple-graph maximum.
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Sequence length l = ceil(n^beta).
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    #[arg(long, default_value = "dir-edge")]
    variant: Variant,
    #[arg(long = "C", default_value_t = 2)]
    colors: Color,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Small seeded instance of another kind (anywalk, nfa, cfl, wordbreak,
    /// omv, ov, clique); the size flags apply to walks only.
    #[arg(long)]
    kind: Option<InstanceKind>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// dp (the reference solver of each kind), matrix-chain, uniform-power or oracle.
    #[arg(long, default_value = "dp")]
    solver: String,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long)]
    name: String,
    input: Option<PathBuf>,
    /// Clique gadget size k (k' = q - 2k).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    target_n: Option<usize>,
    #[arg(long)]
    target_l: Option<usize>,
    #[arg(long)]
    target_m: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CrosscheckArgs {
    /// Reduction name, or `all`.
    name: String,
    #[arg(long, default_value_t = 200)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 6)]
    max_l: usize,
    /// Print only failing seeds and the summary.
    #[arg(long)]
    quiet: bool,
    /// Negate every output answer (harness self-test).
    #[arg(long, hide = true)]
    corrupt: bool,
}

#[derive(Args)]
struct AuditArgs {
    /// Reduction name, or `all`.
    name: String,
    #[arg(long, default_value_t = 100)]
    seeds: u64,
    #[arg(long, default_value_t = 0)]
    first_seed: u64,
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 6)]
    max_l: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "128,256,512")]
    ns: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    betas: Vec<f64>,
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    #[arg(long, value_delimiter = ',', default_value = "dir-edge")]
    variants: Vec<Variant>,
    #[arg(long = "C", default_value_t = 2)]
    colors: Color,
    #[arg(long, value_delimiter = ',', default_value = "dp,matrix-chain")]
    solvers: Vec<BenchSolver>,
    #[arg(long, default_value_t = 5)]
    repetitions: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 4096)]
    max_matrix_n: usize,
    #[arg(long, default_value_t = 1 << 26)]
    max_edges: usize,
    /// Fit the log-log slope of time against m*l per solver and variant.
    #[arg(long)]
    slope: bool,
    /// Accepted distance of the fitted slope from 1.
    #[arg(long, default_value_t = 0.2)]
    tolerance: f64,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CertifyArgs {
    input: Option<PathBuf>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct VerifyArgs {
    instance: PathBuf,
    certificate: PathBuf,
}

fn read_input(path: Option<&PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn sink(output: &Output) -> Result<Box<dyn Write>> {
    Ok(match &output.out {
        Some(p) => Box::new(io::BufWriter::new(
            fs::File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn read_one(path: Option<&PathBuf>) -> Result<Instance> {
    let mut all = parse_instances(&read_input(path)?)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        k => bail!("expected one instance, found {k}"),
    }
}

fn as_walk(inst: &Instance) -> Result<&WalkInstance> {
    match inst {
        Instance::Walk(w) => Ok(w),
        other => bail!("expected a walk instance, got {}", other.kind().name()),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

fn caps_for(name: &str, max_n: usize, max_l: usize) -> Caps {
    // clique samples are sized by n alone
    if name == "red_clique_to_nfa" {
        Caps { max_n: max_n.max(9), max_l: 0 }
    } else {
        Caps { max_n, max_l }
    }
}

fn selected(name: &str) -> Result<Vec<&'static rwlab::harness::Entry>> {
    if name == "all" {
        Ok(REGISTRY.iter().collect())
    } else {
        Ok(vec![lookup(name)?])
    }
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode> {
    let inst = match a.kind {
        None | Some(InstanceKind::Walk) => {
            Instance::Walk(gen_random_walk_instance(a.n, a.alpha, a.beta, a.colors, a.variant, a.seed)?)
        }
        Some(kind) => random_instance(kind, a.seed),
    };
    sink(&a.output)?.write_all(serialize_instance(&inst).as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn solve_with(inst: &Instance, solver: &str) -> Result<String> {
    let decision = match (solver, inst) {
        ("dp", _) => match solve(inst)? {
            Answer::Decision(b) => b,
            Answer::Vectors(vs) => {
                return Ok(vs.iter().map(|v| v.to_bitstring()).collect::<Vec<_>>().join("\n"));
            }
        },
        ("matrix-chain", _) => solve_walk_matrix_chain(as_walk(inst)?),
        ("uniform-power", _) => solve_uniform_color_power(as_walk(inst)?)?,
        ("oracle", Instance::Walk(w)) => walk_enum_oracle(w)?,
        ("oracle", Instance::AnyWalk(a)) => anywalk_enum_oracle(a)?,
        ("oracle", Instance::Nfa(x)) => nfa_enum_oracle(&x.nfa, &x.input)?,
        ("oracle", other) => bail!("no enumeration oracle for {}", other.kind().name()),
        (s, _) => bail!("unknown solver {s:?} (dp, matrix-chain, uniform-power, oracle)"),
    };
    Ok(yes_no(decision).to_string())
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode> {
    let all = parse_instances(&read_input(a.input.as_ref())?)?;
    if all.is_empty() {
        bail!("no instance in input");
    }
    for inst in &all {
        println!("{}", solve_with(inst, &a.solver)?);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduce(a: ReduceArgs) -> Result<ExitCode> {
    let entry = lookup(&a.name)?;
    let inst = read_one(a.input.as_ref())?;
    if inst.kind() != entry.input {
        bail!("{} expects a {} instance, got {}", entry.name, entry.input.name(), inst.kind().name());
    }
    let opts = ReduceOptions { k: a.k, target_n: a.target_n, target_l: a.target_l, target_m: a.target_m };
    let reduced = (entry.reduce)(&inst, &opts)?;
    sink(&a.output)?.write_all(reduced.report.serialize().as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_crosscheck(a: CrosscheckArgs) -> Result<ExitCode> {
    let mut ok = true;
    for entry in selected(&a.name)? {
        let cfg = CrosscheckConfig {
            seeds: a.seeds,
            first_seed: a.first_seed,
            caps: caps_for(entry.name, a.max_n, a.max_l),
            corrupt: a.corrupt,
        };
        let report = crosscheck(entry, &cfg);
        for case in &report.cases {
            if !a.quiet || !case.passed() {
                println!("{} {case}", entry.name);
            }
        }
        println!("{}", report.summary());
        ok &= report.all_passed();
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_audit(a: AuditArgs) -> Result<ExitCode> {
    let mut out = sink(&a.output)?;
    writeln!(out, "{AUDIT_HEADER}")?;
    let mut ok = true;
    for entry in selected(&a.name)? {
        let report = audit(entry, a.seeds, a.first_seed, caps_for(entry.name, a.max_n, a.max_l));
        for row in &report.rows {
            writeln!(out, "{row}")?;
        }
        ok &= report.all_ok();
    }
    out.flush()?;
    if !ok {
        eprintln!("audit: some outputs violate their promised parameters");
    }
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_bench(a: BenchArgs) -> Result<ExitCode> {
    let grid = BenchGrid {
        ns: a.ns,
        betas: a.betas,
        alpha: a.alpha,
        variants: a.variants,
        colors: a.colors,
        solvers: a.solvers,
        repetitions: a.repetitions,
        seed: a.seed,
        max_matrix_n: a.max_matrix_n,
        max_edges: a.max_edges,
    };
    let mut out = sink(&a.output)?;
    writeln!(out, "{BENCH_HEADER}")?;
    let mut write_err = None;
    let lines = run_bench(&grid, |line| {
        if let Err(e) = writeln!(out, "{line}").and_then(|_| out.flush()) {
            write_err.get_or_insert(e);
        }
    })?;
    if let Some(e) = write_err {
        return Err(e.into());
    }
    if a.slope {
        for (solver, variant, slope) in slopes(&lines) {
            match slope {
                Some(s) => {
                    let verdict = if (s - 1.0).abs() <= a.tolerance { "within" } else { "outside" };
                    writeln!(out, "# slope {solver} {variant} {s:.3} {verdict} 1±{}", a.tolerance)?;
                }
                None => writeln!(out, "# slope {solver} {variant} n/a (fewer than two sizes)")?,
            }
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_certify(a: CertifyArgs) -> Result<ExitCode> {
    let inst = read_one(a.input.as_ref())?;
    let cert = build_certificate(as_walk(&inst)?)?;
    sink(&a.output)?.write_all(cert.to_text().as_bytes())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode> {
    let inst = read_one(Some(&a.instance))?;
    let cert = Certificate::parse(&read_input(Some(&a.certificate))?)?;
    let valid = verify_certificate(as_walk(&inst)?, &cert)?;
    println!("{}", if valid { "VALID" } else { "INVALID" });
    Ok(ExitCode::SUCCESS)
}

fn cmd_list() -> Result<ExitCode> {
    for e in REGISTRY {
        println!("{} {}", e.name, e.input.name());
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Reduce(a) => cmd_reduce(a),
        Command::Crosscheck(a) => cmd_crosscheck(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Certify(a) => cmd_certify(a),
        Command::Verify(a) => cmd_verify(a),
        Command::List => cmd_list(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
