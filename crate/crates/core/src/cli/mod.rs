//! Command-line front end: `count`, `verify`, `bench` and `selftest`.
//!
//! Exit codes are 0 on success, 1 on a mismatch or failed self-test, 2 on a
//! usage error and 3 on an internal-consistency error.

mod bench;
mod query;
mod report;
mod selftest;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

pub use bench::{time_query, BenchRow};
pub use query::{Evaluated, Query};
pub use report::{Emitter, Format, RunReport, Summary};
pub use verify::{nondecreasing, run_sweep, sweep_queries, VerifyMode};

use crate::counting::{BlockSpec, CongruenceSpec};
use crate::oracle::{OracleBudget, DEFAULT_MAX_STATES};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lincong", version, about = "Count restricted solutions of a1*x1 + ... + ak*xk = b (mod n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one counter, checking it against the oracle when affordable.
    Count(CountArgs),
    /// Compare formulas with oracles over a sweep.
    Verify(VerifyArgs),
    /// Time formula and oracle paths.
    Bench(BenchArgs),
    /// Run the pinned golden values and identity checks.
    Selftest,
}

#[derive(Debug, Clone, Args)]
struct Common {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Oracle state limit; 0 disables the oracle.
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    budget: u64,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long, value_enum)]
    mode: VerifyMode,
    #[arg(short = 'n')]
    n: u64,
    /// Number of variables; repeats a single -a value k times.
    #[arg(short = 'k')]
    k: Option<u64>,
    /// Comma-separated coefficients.
    #[arg(short = 'a', value_delimiter = ',', allow_hyphen_values = true)]
    a: Vec<i64>,
    #[arg(short = 'b', default_value_t = 0, allow_hyphen_values = true)]
    b: i64,
    /// Blocks as size:coeff pairs, for example 2:2,2:3.
    #[arg(long, value_delimiter = ',', value_parser = parse_block)]
    blocks: Vec<(u64, i64)>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    mode: VerifyMode,
    #[arg(long, default_value_t = 12)]
    n_max: u64,
    /// Explicit moduli; overrides --n-max.
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<u64>,
    /// Largest k; for blocks, the largest total block size.
    #[arg(long, default_value_t = 3)]
    k_max: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Defaults to strict, square and blocks.
    #[arg(long, value_enum)]
    mode: Option<VerifyMode>,
    #[arg(short = 'n')]
    n: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    n_list: Vec<u64>,
    /// For blocks, the number of size-2 blocks.
    #[arg(short = 'k')]
    k: Option<u64>,
    #[arg(long)]
    k_max: Option<u64>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    budget: u64,
}

fn parse_block(s: &str) -> Result<(u64, i64), String> {
    let (size, coeff) = s
        .split_once(':')
        .ok_or_else(|| format!("block `{s}` is not size:coeff"))?;
    let size = size.trim().parse().map_err(|e| format!("block size `{size}`: {e}"))?;
    let coeff = coeff.trim().parse().map_err(|e| format!("block coefficient `{coeff}`: {e}"))?;
    Ok((size, coeff))
}

enum Failure {
    Usage(String),
    Internal(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalConsistency { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn coefficient_list(args: &CountArgs) -> Result<Vec<i64>, Failure> {
    match (args.a.len(), args.k) {
        (0, _) => usage("-a is required"),
        (1, Some(k)) => Ok(vec![args.a[0]; k as usize]),
        (len, Some(k)) if len as u64 != k => usage(format!("-k {k} disagrees with {len} coefficients")),
        _ => Ok(args.a.clone()),
    }
}

fn single(args: &CountArgs) -> Result<(u64, u64), Failure> {
    let Some(k) = args.k else {
        return usage("-k is required");
    };
    match args.a.as_slice() {
        [] => Ok((k, 1 % args.n)),
        [a] => Ok((k, a.rem_euclid(args.n as i64) as u64)),
        _ => usage("this mode takes a single coefficient"),
    }
}

fn build_query(args: &CountArgs) -> Result<Query, Failure> {
    let n = args.n;
    if n == 0 {
        return usage("-n must be positive");
    }
    let b = args.b.rem_euclid(n as i64) as u64;
    Ok(match args.mode {
        VerifyMode::All => Query::All(CongruenceSpec::new(n, &coefficient_list(args)?, args.b)?),
        VerifyMode::Square => Query::Square(CongruenceSpec::new(n, &coefficient_list(args)?, args.b)?),
        VerifyMode::Strict => {
            let (k, a) = single(args)?;
            Query::Strict { n, k, a, b }
        }
        VerifyMode::Distinct => {
            if args.a.len() <= 1 {
                let (k, a) = single(args)?;
                Query::DistinctEqual { n, k, a, b }
            } else {
                Query::DistinctGcd(CongruenceSpec::new(n, &coefficient_list(args)?, args.b)?)
            }
        }
        VerifyMode::Blocks => {
            if args.blocks.is_empty() {
                return usage("--blocks is required");
            }
            Query::Blocks(BlockSpec::new(n, &args.blocks, args.b)?)
        }
        VerifyMode::Ramanujan => Query::Ramanujan { n, b },
    })
}

fn cmd_count(args: CountArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let query = build_query(&args)?;
    let start = Instant::now();
    let value = query.formula()?;
    let wall_time = start.elapsed().as_secs_f64();
    let oracle = query.oracle(&mut OracleBudget::new(args.common.budget))?;
    let mut report = RunReport::new(&query, Some(&value), oracle.as_ref().map(|(v, _)| v));
    report.wall_time = Some(wall_time);
    Emitter::new(args.common.format, out).report(&report)?;
    Ok(if report.matches == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
}

fn cmd_verify(args: VerifyArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let ns: Vec<u64> = if args.n_list.is_empty() {
        (1..=args.n_max).collect()
    } else {
        args.n_list.clone()
    };
    if ns.contains(&0) {
        return usage("moduli must be positive");
    }
    let queries = sweep_queries(args.mode, &ns, args.k_max);
    let (rows, summary) = run_sweep(&queries, args.common.budget, args.jobs)?;
    let mut emitter = Emitter::new(args.common.format, out);
    for row in &rows {
        emitter.report(row)?;
    }
    emitter.summary(&summary)?;
    Ok(if summary.mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_bench(args: BenchArgs, out: &mut impl Write) -> Result<i32, Failure> {
    let modes = match args.mode {
        Some(m) => vec![m],
        None => vec![VerifyMode::Strict, VerifyMode::Square, VerifyMode::Blocks],
    };
    let mut rows = Vec::new();
    for mode in modes {
        let (default_ns, default_ks) = bench::default_grid(mode);
        let ns = match (args.n, args.n_list.is_empty()) {
            (Some(n), _) => vec![n],
            (None, false) => args.n_list.clone(),
            (None, true) => default_ns,
        };
        let ks = match (args.k, args.k_max) {
            (Some(k), _) => vec![k],
            (None, Some(k_max)) => (1..=k_max).collect(),
            (None, None) => default_ks,
        };
        for &n in &ns {
            if n == 0 {
                return usage("moduli must be positive");
            }
            for &k in &ks {
                rows.push(time_query(mode, n, k, args.budget)?);
            }
        }
    }
    bench::emit(&rows, args.format, out)?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs the subcommand,
/// writing to standard output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    run_with(args, &mut stdout.lock())
}

/// [`run`] with output sent to `out`; errors still go to standard error.
pub fn run_with<I, T>(args: I, out: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Count(a) => cmd_count(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
        Command::Selftest => selftest::run(out)
            .map(|ok| if ok { EXIT_OK } else { EXIT_MISMATCH })
            .map_err(Failure::Io),
    };
    let _ = out.flush();
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INTERNAL
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_INTERNAL
        }
    }
}
