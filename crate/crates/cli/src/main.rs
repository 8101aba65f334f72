//! `bocheck` — exact log-concavity and Bessenrodt–Ono inequality checks
//! for partition-type sequences.
//!
//! Subcommands: `gen`, `frontier`, `criterion`, `residual`, `report`.
//! Exit codes: 0 success/match, 2 verification mismatch, 64 usage,
//! 74 I/O. Report bodies are deterministic; timing goes to stderr.

mod expect;
mod render;
mod selector;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use bocheck::criterion::{evaluate_criterion, scan_log_concavity, br_condition};
use bocheck::seqgen::render_terms;
use bocheck::verify::{bo_rectangle, full_report};
use bocheck::with_parallelism;

use expect::{compare, load_expected, sweep_exceptions};
use render::{config_section, criterion_section, expect_section, frontier_section, residual_section, Body};
use selector::{build_table, Selector};

const EXIT_VERIFY: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_IO: u8 = 74;

/// Errors carrying their exit-code class.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Internal(String),
}

impl CliError {
    fn from_core(e: bocheck::Error) -> Self {
        use bocheck::Error as E;
        match e {
            E::Io(err) => CliError::Io(err.to_string()),
            E::InexactRecurrence { .. } => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }

    /// Core errors raised while reading data files: I/O class, not usage.
    fn from_data(e: bocheck::Error) -> Self {
        CliError::Io(e.to_string())
    }

    fn from_io(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Internal(_) => EXIT_IO,
        }
    }
}

impl From<bocheck::Error> for CliError {
    fn from(e: bocheck::Error) -> Self {
        CliError::from_core(e)
    }
}

#[derive(Parser)]
#[command(
    name = "bocheck",
    version,
    about = "Exact log-concavity and Bessenrodt-Ono inequality checks for partition-type sequences"
)]
struct Cli {
    /// Worker threads for pair sweeps (defaults to all cores)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// Cache directory for generated term tables
    #[arg(long, global = true, value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeqArgs {
    /// Sequence: partition|plane|overpartition|regular:k|file:PATH
    #[arg(long, value_name = "SEQ")]
    seq: String,
    /// Weak mode: treat equality as passing
    #[arg(long)]
    weak: bool,
    /// Strict mode (the default; equality counts against)
    #[arg(long, conflicts_with = "weak")]
    strict: bool,
    /// Write the output here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a term table and emit it in the terms-file format
    Gen {
        #[command(flatten)]
        common: SeqArgs,
        /// Top index to generate (table holds 0..=N)
        #[arg(long, value_name = "N")]
        n: Option<usize>,
    },
    /// Scan log-concavity on [1, N-1] and locate the in-range frontier
    Frontier {
        #[command(flatten)]
        common: SeqArgs,
        /// Top index of the table
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Exit 2 unless the frontier is at most this
        #[arg(long, value_name = "N0")]
        n0: Option<usize>,
    },
    /// Evaluate the sufficiency criterion at n0
    Criterion {
        #[command(flatten)]
        common: SeqArgs,
        #[arg(long, value_name = "N0")]
        n0: usize,
        /// Top index of the table
        #[arg(long, value_name = "N")]
        n: Option<usize>,
    },
    /// Sweep the residual rectangle; exit 0 iff the exceptions match
    Residual {
        #[command(flatten)]
        common: SeqArgs,
        #[arg(long, value_name = "N0")]
        n0: usize,
        /// Rectangle lower bound (default 1)
        #[arg(long, value_name = "LO")]
        lo: Option<usize>,
        /// Rectangle upper bound (default n0-2)
        #[arg(long, value_name = "HI")]
        hi: Option<usize>,
        /// Top index of the table (default 2*hi)
        #[arg(long, value_name = "N")]
        n: Option<usize>,
        /// Golden list of expected non-GT pairs
        #[arg(long, value_name = "FILE")]
        expect: Option<PathBuf>,
    },
    /// Produce the full verification report
    Report {
        #[command(flatten)]
        common: SeqArgs,
        #[arg(long, value_name = "N0")]
        n0: usize,
        /// Top index of the table
        #[arg(long, value_name = "H")]
        horizon: Option<usize>,
    },
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, body).map_err(CliError::from_io),
        None => std::io::stdout()
            .write_all(body.as_bytes())
            .map_err(CliError::from_io),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let cache_dir = cli.cache_dir.as_deref();
    match cli.command {
        Command::Gen { common, n } => {
            let sel = Selector::parse(&common.seq)?;
            let table = build_table(&sel, n, cache_dir)?;
            emit(&common.out, &render_terms(&table))?;
            Ok(0)
        }
        Command::Frontier { common, n, n0 } => {
            let sel = Selector::parse(&common.seq)?;
            let strict = !common.weak;
            let table = build_table(&sel, n, cache_dir)?;
            let top = table.max_index();
            if top < 2 {
                return Err(CliError::Usage(format!(
                    "table too short to scan (max index {top})"
                )));
            }
            let scan = scan_log_concavity(&table, 1, top - 1, strict)?;

            let mut body = Body::new("frontier");
            let mut cfg = vec![("n", top.to_string())];
            if let Some(n0) = n0 {
                cfg.push(("n0", n0.to_string()));
            }
            config_section(&mut body, &sel.label(), strict, &cfg);
            frontier_section(&mut body, &scan);
            let ok = n0.is_none_or(|n0| scan.frontier <= n0);
            if let Some(n0) = n0 {
                body.section("verdict");
                body.line(format!(
                    "frontier <= requested n0 ({n0}): {}",
                    render::yes_no(ok)
                ));
                body.kv("verdict.ok", ok);
            }
            emit(&common.out, &body.finish())?;
            Ok(if ok { 0 } else { EXIT_VERIFY })
        }
        Command::Criterion { common, n0, n } => {
            let sel = Selector::parse(&common.seq)?;
            let strict = !common.weak;
            let n = n
                .or_else(|| sel.default_horizon().map(|h| h.max(n0 + 1)))
                .unwrap_or(n0 + 1);
            let table = build_table(&sel, Some(n), cache_dir)?;
            let crit = evaluate_criterion(&table, n0, strict)?;
            let br = br_condition(&table, n0, 0)?;

            let mut body = Body::new("criterion");
            config_section(
                &mut body,
                &sel.label(),
                strict,
                &[("n", table.max_index().to_string()), ("n0", n0.to_string())],
            );
            criterion_section(&mut body, &crit, Some(br));
            emit(&common.out, &body.finish())?;
            Ok(0)
        }
        Command::Residual {
            common,
            n0,
            lo,
            hi,
            n,
            expect,
        } => {
            let sel = Selector::parse(&common.seq)?;
            let strict = !common.weak;
            if n0 < 3 {
                return Err(CliError::Usage(format!(
                    "n0 = {n0} has an empty residual rectangle"
                )));
            }
            let lo = lo.unwrap_or(1);
            let hi = hi.unwrap_or(n0 - 2);
            if lo < 1 || lo > hi {
                return Err(CliError::Usage(format!("invalid rectangle [{lo},{hi}]")));
            }
            let n = n.or_else(|| sel.default_horizon().filter(|h| *h >= 2 * hi)).unwrap_or(2 * hi);
            let table = build_table(&sel, Some(n), cache_dir)?;
            let sweep = bo_rectangle(&table, lo, hi, lo, hi, strict)?;

            let mut body = Body::new("residual");
            config_section(
                &mut body,
                &sel.label(),
                strict,
                &[
                    ("n", table.max_index().to_string()),
                    ("n0", n0.to_string()),
                    ("rect", format!("[{lo},{hi}]^2")),
                ],
            );
            residual_section(&mut body, &sweep);

            let ok = match &expect {
                Some(path) => {
                    let expected = load_expected(path)?;
                    let found = sweep_exceptions(&sweep);
                    let diff = compare(&found, &expected);
                    expect_section(&mut body, &diff, &path.display().to_string());
                    diff.matches()
                }
                None => sweep.clean(),
            };
            emit(&common.out, &body.finish())?;
            Ok(if ok { 0 } else { EXIT_VERIFY })
        }
        Command::Report {
            common,
            n0,
            horizon,
        } => {
            let sel = Selector::parse(&common.seq)?;
            let strict = !common.weak;
            let table = build_table(&sel, horizon, cache_dir)?;
            let report = full_report(&table, n0, strict)?;
            emit(&common.out, &render::full_report_body(&report, &sel.label()))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let jobs = cli.jobs;
    let started = Instant::now();
    let outcome = with_parallelism(jobs, || run(cli));
    match outcome {
        Ok(code) => {
            eprintln!("timing: {:?}", started.elapsed());
            ExitCode::from(code)
        }
        Err(e) => {
            let (label, msg) = match &e {
                CliError::Usage(m) => ("usage", m),
                CliError::Io(m) => ("io", m),
                CliError::Internal(m) => ("internal", m),
            };
            eprintln!("bocheck: {label} error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
