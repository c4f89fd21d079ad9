//! `bandinv`: invertibility sequences of banded Toeplitz matrices.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid stencil or field,
//! 3 verification mismatch.

mod bench;
mod report;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use bandinv::verify::{check_stencil, verify_random, Fault};
use bandinv::{with_field, Algorithm, Field, FieldSpec, OpCounter, Stencil};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{format_runs, RunReport};

#[derive(Debug, Parser)]
#[command(
    name = "bandinv",
    version,
    about = "Invertibility sequences of banded Toeplitz matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the invertibility sequence of M_1..M_n.
    Seq(SeqArgs),
    /// Cross-check sliding, naive and dense algorithms.
    Verify(VerifyArgs),
    /// Operation counts and wall time over a grid of (k, n, algorithm).
    Bench(bench::BenchArgs),
}

#[derive(Debug, Args)]
struct SeqArgs {
    /// Coefficients x_{-k},...,x_k, or @path to a stencil file.
    #[arg(long)]
    stencil: String,
    /// Largest matrix order.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// gf:<p>, rational or approx:<tol>.
    #[arg(long)]
    field: String,
    #[arg(long, default_value = "sliding")]
    algo: Algorithm,
    #[arg(long, value_enum, default_value_t = Format::Bits)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Bits,
    Runs,
    Json,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Single stencil to check (csv or @path).
    #[arg(long, conflicts_with = "random", required_unless_present = "random")]
    stencil: Option<String>,
    /// Number of random stencils to check.
    #[arg(long, requires = "k")]
    random: Option<usize>,
    /// Largest half-bandwidth for random stencils.
    #[arg(long)]
    k: Option<usize>,
    /// Sequence length (at most 64).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    n: u64,
    #[arg(long)]
    field: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corrupt the sliding result to exercise the mismatch path.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Failure with its exit code.
pub(crate) struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub(crate) fn invalid(e: impl std::fmt::Display) -> Self {
        Self {
            code: 2,
            message: format!("error: {e}"),
        }
    }

    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: format!("error: {}", msg.into()),
        }
    }
}

pub(crate) fn parse_field(spec: &str) -> Result<FieldSpec, Failure> {
    spec.parse().map_err(Failure::invalid)
}

fn load_stencil<F: Field>(arg: &str, field: F) -> Result<Stencil<F>, Failure> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::invalid(format!("cannot read {}: {e}", path.display())))?;
            Stencil::parse_file(&text, field).map_err(Failure::invalid)
        }
        None => Stencil::parse(arg, field).map_err(Failure::invalid),
    }
}

fn run_seq(args: &SeqArgs) -> Result<String, Failure> {
    let spec = parse_field(&args.field)?;
    let n = args.n as usize;
    with_field!(spec, |f| {
        let s = load_stencil(&args.stencil, f)?;
        if !s.field().is_exact() {
            eprintln!("note: approx field; singular orders are best-effort");
        }
        let mut counter = OpCounter::new();
        let start = Instant::now();
        let seq = args
            .algo
            .run(&s, n, &mut counter)
            .map_err(Failure::invalid)?;
        let wall = start.elapsed();
        Ok(match args.format {
            Format::Bits => seq.to_string(),
            Format::Runs => format_runs(&seq),
            Format::Json => {
                let report = RunReport {
                    n,
                    k: s.k(),
                    field: spec.to_string(),
                    algo: args.algo.to_string(),
                    bits: seq.to_string(),
                    singular_orders: seq.singular_orders(),
                    ops: (&counter).into(),
                    wall_ms: wall.as_secs_f64() * 1e3,
                    best_effort: !s.field().is_exact(),
                };
                serde_json::to_string(&report).expect("report serializes")
            }
        })
    })
}

fn run_verify(args: &VerifyArgs) -> Result<String, Failure> {
    let spec = parse_field(&args.field)?;
    let n = args.n as usize;
    let fault = if args.inject_fault {
        Fault::FlipLastBit
    } else {
        Fault::None
    };
    with_field!(spec, |f| {
        let exact = f.is_exact();
        if let Some(stencil) = &args.stencil {
            let s = load_stencil(stencil, f)?;
            let check = check_stencil(&s, n, fault).map_err(Failure::invalid)?;
            if check.agree() {
                let blocks = if !exact {
                    "blocks skipped for approx field"
                } else {
                    "blocks match"
                };
                Ok(format!("OK (3 algorithms agree, {blocks})"))
            } else {
                Err(Failure {
                    code: 3,
                    message: format!("MISMATCH\n{check}"),
                })
            }
        } else {
            let count = args.random.expect("clap enforces --stencil or --random");
            let max_k = args.k.expect("clap enforces --k with --random");
            if max_k == 0 {
                return Err(Failure::usage("--k must be at least 1"));
            }
            let report =
                verify_random(&f, count, max_k, n, args.seed, fault).map_err(Failure::invalid)?;
            match &report.worst {
                None => Ok(format!("OK {}/{}", report.passed, report.total)),
                Some(worst) => {
                    let mut msg = format!(
                        "FAIL {}/{} agree\ncounterexample:\n",
                        report.passed, report.total
                    );
                    let _ = write!(msg, "{worst}");
                    Err(Failure {
                        code: 3,
                        message: msg,
                    })
                }
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Seq(args) => run_seq(args),
        Command::Verify(args) => run_verify(args),
        Command::Bench(args) => bench::run(args),
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
