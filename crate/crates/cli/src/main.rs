//! `schurkit` command-line tool.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use schurkit::combinatorics::{enumerate_gt, enumerate_partitions, enumerate_ssyt, enumerate_ssyt_bounded, enumerate_syt};
use schurkit::fourier::{qft_permmod, qft_sn, BlockStructure, LabeledUnitary};
use schurkit::schur::{dual_schur, schur_basis, DualSchur, SchurLayout, StateVector, DEFAULT_BUDGET};
use schurkit::suite::{self, RunConfig, Suite};
use schurkit::{Composition, Partition};

#[derive(Parser)]
#[command(name = "schurkit", version, about = "Schur transforms over the symmetric group")]
struct Cli {
    /// Largest dⁿ for which a dense transform may be built.
    #[arg(long, global = true, env = "SCHURKIT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List partitions, tableaux or Gelfand-Tsetlin patterns.
    Enumerate(EnumerateArgs),
    /// Build a transform and write it as JSON.
    Transform(TransformArgs),
    /// Apply the dual Schur transform to a state vector.
    Apply(ApplyArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Partitions,
    Syt,
    Ssyt,
    Gt,
}

#[derive(Args)]
struct EnumerateArgs {
    kind: EnumerateKind,
    #[arg(long)]
    n: Option<usize>,
    /// Partition such as `2,1`.
    #[arg(long)]
    shape: Option<String>,
    /// Content such as `2,2`.
    #[arg(long)]
    content: Option<String>,
    #[arg(long)]
    d: Option<usize>,
    /// Maximum number of parts for `partitions`.
    #[arg(long)]
    max_parts: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformKind {
    QftSn,
    QftPermmod,
    DualSchur,
}

#[derive(Args)]
struct TransformArgs {
    kind: TransformKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    /// Module type for `qft-permmod`, e.g. `2,2`.
    #[arg(long = "type")]
    ty: Option<String>,
    /// Output file; the block structure goes next to it as `<out>.blocks.json`.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ApplyArgs {
    #[arg(long)]
    state: PathBuf,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    tolerance: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Anything the user can fix by changing the input.
#[derive(Debug)]
struct InputError(String);

impl From<schurkit::Error> for InputError {
    fn from(e: schurkit::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult<T> = Result<T, InputError>;

fn parse_list(s: &str) -> CliResult<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| InputError(format!("not a list of integers: {s}"))))
        .collect()
}

fn required<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| InputError(format!("missing --{flag}")))
}

fn shape(args: &EnumerateArgs) -> CliResult<Partition> {
    Ok(Partition::new(parse_list(&required(args.shape.clone(), "shape")?)?)?)
}

fn emit<T: Serialize>(value: &T, out: Option<&Path>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => fs::write(path, text + "\n")?,
        None => {
            // A closed pipe downstream is not our failure.
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{text}") {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => return Err(e.into()),
                _ => {}
            }
        }
    }
    Ok(())
}

fn enumerate(args: &EnumerateArgs) -> CliResult<()> {
    match args.kind {
        EnumerateKind::Partitions => {
            let n = required(args.n, "n")?;
            emit(&enumerate_partitions(n, args.max_parts.unwrap_or(n.max(1))), None)
        }
        EnumerateKind::Syt => emit(&enumerate_syt(&shape(args)?), None),
        EnumerateKind::Ssyt => {
            let lambda = shape(args)?;
            match (&args.content, args.d) {
                (Some(c), _) => emit(&enumerate_ssyt(&lambda, &Composition::new(parse_list(c)?)), None),
                (None, Some(d)) => emit(&enumerate_ssyt_bounded(&lambda, d), None),
                (None, None) => Err(InputError("ssyt needs --content or --d".into())),
            }
        }
        EnumerateKind::Gt => emit(&enumerate_gt(&shape(args)?, required(args.d, "d")?), None),
    }
}

fn write_transform(u: &LabeledUnitary, blocks: &BlockStructure, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(path) => {
            emit(u, Some(path))?;
            let mut sidecar = path.as_os_str().to_owned();
            sidecar.push(".blocks.json");
            emit(blocks, Some(Path::new(&sidecar)))
        }
        None => emit(&json!({ "unitary": u, "blocks": blocks }), None),
    }
}

fn transform(args: &TransformArgs, budget: u128) -> CliResult<()> {
    match args.kind {
        TransformKind::QftSn => {
            let n = required(args.n, "n")?;
            let size = schurkit::combinatorics::factorial(n);
            if size > budget {
                return Err(schurkit::Error::BudgetExceeded { required: size, budget }.into());
            }
            let u = qft_sn(n);
            let blocks = schurkit::fourier::FourierLayout::new(n).block_structure();
            write_transform(&u, &blocks, args.out.as_deref())
        }
        TransformKind::QftPermmod => {
            let ty = Composition::new(parse_list(&required(args.ty.clone(), "type")?)?);
            let n = args.n.unwrap_or(ty.size());
            let (u, blocks) = qft_permmod(&ty, n)?;
            if u.rows.len() as u128 > budget {
                return Err(schurkit::Error::BudgetExceeded { required: u.rows.len() as u128, budget }.into());
            }
            write_transform(&u, &blocks, args.out.as_deref())
        }
        TransformKind::DualSchur => {
            let (n, d) = (required(args.n, "n")?, required(args.d, "d")?);
            let u = dual_schur(n, d, budget)?;
            write_transform(&u, &SchurLayout::new(n, d).block_structure(), args.out.as_deref())
        }
    }
}

fn apply(args: &ApplyArgs, budget: u128) -> CliResult<()> {
    let state: StateVector = serde_json::from_str(&fs::read_to_string(&args.state)?)?;
    for (flag, given, found) in [("n", args.n, state.n), ("d", args.d, state.d)] {
        if given.is_some_and(|g| g != found) {
            return Err(InputError(format!("--{flag} does not match the state file ({found})")));
        }
    }
    let psi = state.to_vector()?;
    let norm = psi.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(schurkit::Error::NotNormalized(norm).into());
    }
    let t = DualSchur::new(state.n, state.d, budget)?;
    let image = t.apply(&psi)?;
    let amplitudes: Vec<_> = schur_basis(state.n, state.d)
        .into_iter()
        .zip(image.iter())
        .filter(|(_, z)| z.norm() > 1e-12)
        .map(|(label, z)| json!({ "label": label, "amp": [z.re, z.im] }))
        .collect();
    let distribution: Vec<_> =
        t.weak_distribution(&psi)?.into_iter().map(|(lambda, p)| json!({ "lambda": lambda, "p": p })).collect();
    emit(&json!({ "n": state.n, "d": state.d, "amplitudes": amplitudes, "distribution": distribution }), args.out.as_deref())
}

fn verify(args: &VerifyArgs, budget: u128) -> CliResult<bool> {
    let which: Suite = args.suite.parse()?;
    let cfg = RunConfig {
        n: args.n,
        d: args.d,
        tolerance: args.tolerance,
        seed: args.seed,
        memory_budget: budget,
        output_path: args.out.clone(),
    };
    let records = suite::run(which, &cfg)?;
    let pass = records.iter().all(|r| r.pass);
    emit(&json!({ "suite": args.suite, "config": cfg, "pass": pass, "records": records }), cfg.output_path.as_deref())?;
    Ok(pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enumerate(a) => enumerate(a).map(|_| true),
        Command::Transform(a) => transform(a, cli.budget).map(|_| true),
        Command::Apply(a) => apply(a, cli.budget).map(|_| true),
        Command::Verify(a) => verify(a, cli.budget),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
