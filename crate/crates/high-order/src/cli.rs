//! Argument parsing and the subcommands. [`run`] returns the process exit
//! code: 0 success, 2 invalid input, 3 no construction exists, 4 a check failed.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use high_order_core::combinatorics::{
    compare_bounds, count_t, d1_bound, five_pow_sqrt_half_ceil, partition_count, partition_count_bounded,
    partition_count_nondiv, popovych_lower, tau_best, BoundComparison, LogBound,
};
use high_order_core::highorder::{theorem2_closed_forms, DEFAULT_VECTOR_CAP};
use high_order_core::kummer::binomial_exists;
use high_order_core::{FieldParams, Nat};
use serde_json::{json, Value};

use crate::budget::time_budget_from_env;
use crate::report::{RunReport, Strategy};
use crate::sweep::{run_sweep, write_csv};
use crate::verify::{verify, Instance, InstanceSpec, SetupError, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NO_CONSTRUCTION: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "high-order", version, about = "Elements of provably high order in Kummer extensions F_q[x]/<x^m - a>")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Whether an irreducible binomial x^m - a exists over F_q.
    Exists(FieldArgs),
    /// Build the high-order element and print a JSON report.
    Construct(ConstructArgs),
    /// Exact partition counts.
    Partitions(PartitionArgs),
    /// The exact lower bounds d1(k) or |T| with their closed-form estimates.
    Bounds(BoundsArgs),
    /// Construct and verify every instance of a grid, writing CSV.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    /// Monic modulus of F_q over F_p, constant term first (n + 1 coefficients).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    T1,
    T2,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::T1 => Strategy::T1,
            StrategyArg::T2 => Strategy::T2,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// The m-related element, base-p coefficients; searched when omitted.
    #[arg(long, value_delimiter = ',')]
    pub a: Option<Vec<u64>>,
    /// The constant b, base-p coefficients; defaults to 1.
    #[arg(long, value_delimiter = ',')]
    pub b: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    pub strategy: StrategyArg,
    /// Compute exact orders and run the injectivity and conjugate checks.
    #[arg(long)]
    pub verify: bool,
    /// Largest witness set the injectivity checks will enumerate.
    #[arg(long, default_value_t = DEFAULT_VECTOR_CAP)]
    pub cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    /// All partitions of c.
    U,
    /// Partitions of c in which each part occurs at most d times.
    Ubound,
    /// Partitions of c with no part divisible by d.
    Qnondiv,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    pub c: usize,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long, value_enum)]
    pub kind: PartitionKind,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub k: usize,
    /// With --l: report |T| for (p, k, l) instead of d1(k).
    #[arg(long, requires = "l")]
    pub p: Option<u64>,
    #[arg(long, requires = "p")]
    pub l: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub p_list: Vec<u64>,
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub n_list: Vec<usize>,
    #[arg(long)]
    pub m_max: usize,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_VECTOR_CAP)]
    pub cap: usize,
}

/// A failed command: exit code plus message for standard error.
#[derive(Debug)]
struct Failure(i32, String);

impl From<SetupError> for Failure {
    fn from(e: SetupError) -> Self {
        match e {
            SetupError::Invalid(_) => Failure(EXIT_INVALID, e.to_string()),
            SetupError::NoConstruction(_) => Failure(EXIT_NO_CONSTRUCTION, e.to_string()),
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_INVALID, format!("invalid input: {e}"))
}

fn io_failure(e: io::Error) -> Failure {
    Failure(1, format!("i/o error: {e}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Exists(a) => cmd_exists(&a, out),
        Command::Construct(a) => cmd_construct(&a, out),
        Command::Partitions(a) => cmd_partitions(&a, out),
        Command::Bounds(a) => cmd_bounds(&a, out),
        Command::Sweep(a) => cmd_sweep(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "{msg}");
            code
        }
    }
}

fn cmd_exists(args: &FieldArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if args.m < 2 {
        return Err(invalid("m must be at least 2"));
    }
    let base = FieldParams::new(args.p, args.n, args.modulus.as_deref()).map_err(invalid)?;
    let exists = binomial_exists(&base, args.m);
    writeln!(out, "{}", if exists { "exists" } else { "not-exists" }).map_err(io_failure)?;
    Ok(if exists { EXIT_OK } else { EXIT_NO_CONSTRUCTION })
}

fn verify_options(cap: usize) -> Result<VerifyOptions, Failure> {
    Ok(VerifyOptions { time_budget: time_budget_from_env().map_err(invalid)?, vector_cap: cap })
}

fn cmd_construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let spec = InstanceSpec {
        p: args.field.p,
        n: args.field.n,
        m: args.field.m,
        modulus: args.field.modulus.clone(),
        a: args.a.clone(),
        b: args.b.clone(),
    };
    let inst = Instance::new(&spec)?;
    let best = inst.constructions().map_err(invalid)?;
    let verification = if args.verify { Some(verify(&inst, &best, &verify_options(args.cap)?)) } else { None };
    let report = RunReport::new(&inst, &best, args.strategy.into(), verification.as_ref());
    writeln!(out, "{}", report.to_json()).map_err(io_failure)?;
    Ok(if report.has_failure() { EXIT_CHECK_FAILED } else { EXIT_OK })
}

fn cmd_partitions(args: &PartitionArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let need_d = || args.d.ok_or_else(|| invalid("--d is required for this kind"));
    let count: Nat = match args.kind {
        PartitionKind::U => partition_count(args.c),
        PartitionKind::Ubound => partition_count_bounded(args.c, need_d()?),
        PartitionKind::Qnondiv => partition_count_nondiv(args.c, need_d()?).map_err(invalid)?,
    };
    writeln!(out, "{count}").map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn finite(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn log_bound(b: &LogBound) -> Value {
    json!({ "formula": b.formula.as_str(), "ln_value": finite(b.ln_value) })
}

fn comparison_json(c: &BoundComparison) -> Value {
    json!({
        "m": c.m,
        "k": c.k,
        "l": c.l,
        "bounds": c.all().map(|b| log_bound(&b)).collect::<Vec<_>>(),
        "dominant": c.dominant.as_str(),
        "five_pow_cbrt_half_exceeds_two_pow_cbrt_double": c.new_exceeds_old,
    })
}

fn cmd_bounds(args: &BoundsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let k = args.k;
    let value = match (args.p, args.l) {
        (Some(p), Some(l)) => {
            let d2 = count_t(p, k, l).map_err(invalid)?;
            let m = k.checked_mul(l).ok_or_else(|| invalid("k * l overflows"))?;
            let headline = five_pow_sqrt_half_ceil(l as u64);
            let tau = if l >= 2 { tau_best(p, l as u64).ok() } else { None };
            let closed: Vec<Value> = theorem2_closed_forms(p, l)
                .iter()
                .map(|f| json!({ "formula": f.formula.as_str(), "value": finite(f.value) }))
                .collect();
            json!({
                "p": p,
                "k": k,
                "l": l,
                "m": m,
                "d2": d2.to_string(),
                "five_pow_sqrt_half_ceil": headline.to_string(),
                "d2_ge_five_pow_sqrt_half": d2 >= headline,
                "tau_best": tau.map(|(t, f)| json!({ "tau": t, "value": finite(f) })),
                "closed_forms": closed,
                "comparison": comparison_json(&compare_bounds(m as u64, k as u64, l as u64).map_err(invalid)?),
            })
        }
        _ => {
            let (d1, arg) = d1_bound(k).map_err(invalid)?;
            let five_pow_k = num_traits::pow(Nat::from(5u32), k);
            json!({
                "k": k,
                "d1": d1.to_string(),
                "d1_argmax": { "d_minus": arg.d_minus, "d": arg.d },
                "d1_ge_five_pow_k": d1 >= five_pow_k,
                "popovych2015": popovych_lower(k as u64).ok().map(|b| finite(b.value)),
            })
        }
    };
    let text = serde_json::to_string_pretty(&value).expect("json values serialise");
    writeln!(out, "{text}").map_err(io_failure)?;
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let opts = verify_options(args.cap)?;
    let rows = run_sweep(&args.p_list, &args.n_list, args.m_max, &opts)?;
    let to_csv = |e: csv::Error| Failure(1, format!("cannot write CSV: {e}"));
    match &args.out {
        Some(path) => write_csv(&rows, File::create(path).map_err(io_failure)?).map_err(to_csv)?,
        None => write_csv(&rows, &mut *out).map_err(to_csv)?,
    }
    Ok(if rows.iter().any(|r| r.verified == "fail") { EXIT_CHECK_FAILED } else { EXIT_OK })
}
