//! Command-line front end: single-point evaluation plus the three
//! verification suites, with text/CSV/JSON report output.
//!
//! Exit codes follow the verification contract: 0 when everything selected
//! passes, 1 when any suite row fails (the report is still written), 2 on
//! argument errors — including evaluation requests whose parameters fall
//! outside a representation's domain.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::laplace::{self, PairParams};
use crate::limits::{self, LimitCase, LimitId};
use crate::report::{self, VerificationReport};
use crate::reps::{self, RepId};

/// Products of parabolic cylinder functions: evaluate integral
/// representations and replay the verification grids.
#[derive(Debug, Parser)]
#[command(name = "parcyl", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one representation, transform pair, or limit case.
    Eval(EvalArgs),
    /// Verify every integral representation against its oracle product.
    VerifyReps(VerifyRepsArgs),
    /// Verify the transform pairs and process transforms by forward
    /// transform of their time sides.
    VerifyLaplace(VerifyLaplaceArgs),
    /// Verify the small-rate limits by extrapolation and branch checks.
    VerifyLimits(VerifyLimitsArgs),
    /// Run all three suites and emit one combined report.
    ReportAll(ReportAllArgs),
}

#[derive(Debug, Args)]
struct EvalArgs {
    /// Representation to evaluate (e.g. T2_1, TIME_FORM, MALYSHEV, K14).
    #[arg(long, value_parser = parse_rep, conflicts_with_all = ["entry", "pair"])]
    rep: Option<RepId>,

    /// Limit case to evaluate at the given --beta (1-8, ratio-general,
    /// ratio-golden, ratio-s4; the last two carry fixed parameters).
    #[arg(long, value_parser = parse_limit, conflicts_with = "pair")]
    entry: Option<LimitId>,

    /// Transform pair whose closed form is evaluated at --s.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    pair: Option<u8>,

    /// Order parameter (the positive order for GLASSER).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    v: f64,

    /// First argument.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x: f64,

    /// Second argument.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    y: f64,

    /// Transform variable / limit parameter s.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    s: f64,

    /// Drift parameter of the limit cases.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,

    /// Rate parameter (time form, transform pairs, limit cases).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    beta: f64,

    /// Shift parameter of the transform pairs.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    c: f64,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Replace every residual tolerance in the suite.
    #[arg(long, value_parser = parse_tolerance)]
    tol: Option<f64>,

    /// Report format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Write the report to this path instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Deterministic grid-jitter seed; 0 keeps the canonical grids.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct VerifyRepsArgs {
    #[command(flatten)]
    output: OutputArgs,

    /// Restrict to a single representation.
    #[arg(long, value_parser = parse_rep)]
    rep: Option<RepId>,
}

#[derive(Debug, Args)]
struct VerifyLaplaceArgs {
    #[command(flatten)]
    output: OutputArgs,

    /// Restrict to a single transform pair (1-6); process rows drop out.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=6))]
    entry: Option<u8>,
}

#[derive(Debug, Args)]
struct VerifyLimitsArgs {
    #[command(flatten)]
    output: OutputArgs,

    /// Restrict to a single limit case (1-8, ratio-general, ratio-golden,
    /// ratio-s4).
    #[arg(long, value_parser = parse_limit)]
    entry: Option<LimitId>,
}

#[derive(Debug, Args)]
struct ReportAllArgs {
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let value: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err("tolerance must be a positive real".to_string())
    }
}

fn parse_rep(s: &str) -> Result<RepId, String> {
    s.parse().map_err(|e: crate::error::Error| e.to_string())
}

fn parse_limit(s: &str) -> Result<LimitId, String> {
    s.parse().map_err(|e: crate::error::Error| e.to_string())
}

struct Failure {
    exit_code: u8,
    message: String,
}

fn argument_error(message: impl Into<String>) -> Failure {
    Failure {
        exit_code: 2,
        message: message.into(),
    }
}

/// Parse the process arguments and run. Clap itself exits 2 on unknown or
/// malformed flags, matching the argument-error code used here.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit_code)
        }
    }
}

fn execute(command: Command) -> Result<bool, Failure> {
    match command {
        Command::Eval(args) => eval(args),
        Command::VerifyReps(args) => emit_one(
            report::run_reps_suite(args.output.tol, args.output.seed, args.rep),
            &args.output,
        ),
        Command::VerifyLaplace(args) => emit_one(
            report::run_laplace_suite(args.output.tol, args.output.seed, args.entry),
            &args.output,
        ),
        Command::VerifyLimits(args) => emit_one(
            report::run_limits_suite(args.output.tol, args.output.seed, args.entry),
            &args.output,
        ),
        Command::ReportAll(args) => {
            let reports = vec![
                report::run_reps_suite(args.output.tol, args.output.seed, None),
                report::run_laplace_suite(args.output.tol, args.output.seed, None),
                report::run_limits_suite(args.output.tol, args.output.seed, None),
            ];
            let rendered = match args.output.format {
                OutputFormat::Text => report::combined_text(&reports),
                OutputFormat::Csv => report::combined_csv(&reports),
                OutputFormat::Json => report::combined_json(&reports),
            };
            write_output(&rendered, args.output.out.as_deref())?;
            Ok(reports.iter().all(VerificationReport::all_pass))
        }
    }
}

fn eval(args: EvalArgs) -> Result<bool, Failure> {
    let value = if let Some(rep) = args.rep {
        reps::evaluate(rep, args.v, args.x, args.y, args.beta)
    } else if let Some(pair) = args.pair {
        PairParams::new(args.beta, args.c, args.x, args.y)
            .and_then(|p| laplace::pair_transform(pair, args.s, &p))
    } else if let Some(id) = args.entry {
        limit_case_from(id, &args).and_then(|case| limits::limit_lhs(&case, args.beta))
    } else {
        return Err(argument_error("eval needs --rep, --pair, or --entry"));
    }
    .map_err(|e| argument_error(e.to_string()))?;
    println!("{value:.10}");
    Ok(true)
}

fn limit_case_from(id: LimitId, args: &EvalArgs) -> crate::error::Result<LimitCase> {
    match id {
        LimitId::Entry(entry) => LimitCase::entry(entry, args.s, args.alpha, args.x, args.y),
        LimitId::RatioGeneral => LimitCase::ratio_general(args.s, args.alpha, args.x),
        LimitId::RatioGolden => Ok(LimitCase::ratio_golden()),
        LimitId::RatioS4 => Ok(LimitCase::ratio_s4()),
    }
}

fn emit_one(report: VerificationReport, output: &OutputArgs) -> Result<bool, Failure> {
    let rendered = match output.format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Json => report.to_json(),
    };
    write_output(&rendered, output.out.as_deref())?;
    Ok(report.all_pass())
}

fn write_output(rendered: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        None => {
            print!("{rendered}");
            Ok(())
        }
        Some(path) => std::fs::write(path, rendered).map_err(|e| Failure {
            exit_code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }),
    }
}
