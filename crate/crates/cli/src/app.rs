//! Subcommands of the `trimulti` binary.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 domain rejection (not
//! realizable, failed check, no realization exists), 3 resource limit. In
//! batch mode the largest code over all lines is returned.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use trimulti_core::{
    canonicalize, check_erdos_gallai, check_triangular_conditions, exists_simple_realization_with,
    exists_triangular_realization_with, proposition_census_with, realize, strip_zeros,
    ConstructError, OracleError, OracleLimits, ValidationReport,
};

use crate::bench::bench_realize;
use crate::document::{NotRealizableDocument, RealizationDocument};
use crate::generate::generate_valid_sequence;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REJECTED: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

/// Environment variables overriding the oracle's default limits.
pub const ENV_ORACLE_MAX_N: &str = "TRIMULTI_ORACLE_MAX_N";
pub const ENV_ORACLE_MAX_SUM: &str = "TRIMULTI_ORACLE_MAX_SUM";

#[derive(Debug, Parser)]
#[command(
    name = "trimulti",
    version,
    about = "Realize degree sequences as triangular multigraphs"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a triangular multigraph with the given degrees.
    Realize {
        /// Comma-separated degrees, or a file with one sequence per line.
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Label vertices by descending degree instead of input order.
        #[arg(long)]
        sorted: bool,
    },
    /// Check the realization conditions (or Erdős–Gallai).
    Check {
        input: String,
        /// Test whether the sequence is graphical instead.
        #[arg(long)]
        erdos_gallai: bool,
    },
    /// Exhaustive search on small sequences.
    Oracle {
        #[arg(required_unless_present = "census")]
        input: Option<String>,
        /// Tabulate the all-3 sequences for 3 <= n <= N as CSV.
        #[arg(long, value_name = "N")]
        census: Option<usize>,
        /// Search simple graphs instead of triangular multigraphs.
        #[arg(long)]
        simple: bool,
        /// Abort the search after this many milliseconds.
        #[arg(long)]
        timeout_ms: Option<u64>,
    },
    /// Print random sequences meeting the realization conditions.
    Generate {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        d_min: i64,
        #[arg(long, default_value_t = 50)]
        d_max: i64,
    },
    /// Re-run the verifiers over a JSON realization document.
    Verify { path: PathBuf },
    /// Time `realize` on generated sequences of length N.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

/// Outcome of one unit of work: exit code plus text for each stream.
#[derive(Debug, Default)]
struct Outcome {
    code: i32,
    out: String,
    err: String,
}

impl Outcome {
    fn ok(out: String) -> Self {
        Outcome {
            code: EXIT_OK,
            out,
            err: String::new(),
        }
    }

    fn fail(code: i32, err: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            out: String::new(),
            err: format!("error: {err}\n"),
        }
    }
}

/// Parses `4,4,4` (commas and/or whitespace).
pub fn parse_sequence(s: &str) -> Result<Vec<i64>, String> {
    let parts: Vec<&str> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|p| !p.is_empty())
        .collect();
    if parts.is_empty() {
        return Err("empty degree sequence".into());
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<i64>()
                .map_err(|_| format!("not an integer: {p:?}"))
        })
        .collect()
}

enum Input {
    Single(Vec<i64>),
    Batch(Vec<Result<Vec<i64>, String>>),
}

fn read_input(arg: &str) -> Result<Input, String> {
    if let Ok(seq) = parse_sequence(arg) {
        return Ok(Input::Single(seq));
    }
    let path = Path::new(arg);
    if !path.is_file() {
        return Err(format!(
            "{arg:?} is neither a degree sequence nor a readable file"
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
    Ok(Input::Batch(
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_sequence)
            .collect(),
    ))
}

fn json<T: Serialize>(value: &T, compact: bool) -> String {
    let mut s = if compact {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    }
    .expect("serializable");
    s.push('\n');
    s
}

/// Applies `f` to the input (or every batch line, in parallel) and writes
/// results in input order.
fn for_each_input(
    arg: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
    f: impl Fn(&[i64], bool) -> Outcome + Sync,
) -> i32 {
    let outcomes = match read_input(arg) {
        Ok(Input::Single(seq)) => vec![f(&seq, false)],
        Ok(Input::Batch(lines)) => lines
            .par_iter()
            .enumerate()
            .map(|(i, line)| match line {
                Ok(seq) => f(seq, true),
                Err(e) => Outcome::fail(EXIT_USAGE, format!("line {}: {e}", i + 1)),
            })
            .collect(),
        Err(e) => vec![Outcome::fail(EXIT_USAGE, e)],
    };
    let mut code = EXIT_OK;
    for o in outcomes {
        // a closed pipe is not worth a panic
        let _ = out.write_all(o.out.as_bytes());
        let _ = err.write_all(o.err.as_bytes());
        code = code.max(o.code);
    }
    code
}

fn realize_one(raw: &[i64], format: Format, sorted: bool, compact: bool) -> Outcome {
    let seq = match canonicalize(raw) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    match realize(&seq) {
        Ok(r) => {
            let doc = RealizationDocument::from_realization(&r, sorted);
            Outcome::ok(match format {
                Format::Json if compact => doc.to_json_line() + "\n",
                Format::Json => doc.to_json() + "\n",
                Format::Dot => doc.to_dot(),
                Format::Tsv => doc.to_tsv(),
            })
        }
        Err(ConstructError::NotRealizable(report)) => {
            let doc = NotRealizableDocument::new(raw.to_vec(), report);
            Outcome {
                code: EXIT_REJECTED,
                err: format!("not realizable: {}\n", doc.violations.join(", ")),
                out: json(&doc, compact),
            }
        }
        Err(e) => Outcome::fail(EXIT_USAGE, e),
    }
}

#[derive(Debug, Serialize)]
struct CheckDocument {
    degrees: Vec<i64>,
    requested: Vec<&'static str>,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    report: ValidationReport,
}

fn check_one(raw: &[i64], erdos_gallai: bool, compact: bool) -> Outcome {
    let seq = match canonicalize(raw) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let mut report = check_triangular_conditions(&seq);
    let (requested, reason) = if erdos_gallai {
        let positive = strip_zeros(raw);
        if positive.is_empty() {
            report.erdos_gallai_ok = Some(true);
        } else {
            let stripped = canonicalize(&positive).expect("subset of a valid input");
            let eg = check_erdos_gallai(&stripped).expect("zeros were stripped");
            report.erdos_gallai_ok = eg.erdos_gallai_ok;
            report.failing_k = eg.failing_k;
        }
        let reason = (report.erdos_gallai_ok == Some(false)).then_some("erdos_gallai");
        (vec!["erdos_gallai"], reason)
    } else {
        let reason = report.violations().first().copied();
        (vec!["min_degree", "parity", "d1_bound"], reason)
    };
    let doc = CheckDocument {
        degrees: raw.to_vec(),
        requested,
        ok: reason.is_none(),
        reason,
        report,
    };
    Outcome {
        code: if doc.ok { EXIT_OK } else { EXIT_REJECTED },
        err: reason
            .map(|r| format!("check failed: {r}\n"))
            .unwrap_or_default(),
        out: json(&doc, compact),
    }
}

#[derive(Debug, Serialize)]
struct OracleDocument {
    degrees: Vec<i64>,
    mode: &'static str,
    exists: bool,
    nodes_explored: u64,
    bound_used: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<(usize, usize, u64)>>,
}

fn oracle_limits() -> Result<OracleLimits, String> {
    let mut limits = OracleLimits::default();
    if let Ok(v) = std::env::var(ENV_ORACLE_MAX_N) {
        limits.max_n = v
            .parse()
            .map_err(|_| format!("{ENV_ORACLE_MAX_N}={v:?} is not a count"))?;
    }
    if let Ok(v) = std::env::var(ENV_ORACLE_MAX_SUM) {
        limits.max_degree_sum = v
            .parse()
            .map_err(|_| format!("{ENV_ORACLE_MAX_SUM}={v:?} is not an integer"))?;
    }
    Ok(limits)
}

fn deadline(timeout: Option<Duration>) -> impl FnMut() -> bool {
    let start = Instant::now();
    let mut polls = 0u64;
    move || {
        polls += 1;
        match timeout {
            Some(t) if polls.is_multiple_of(1024) => start.elapsed() > t,
            _ => false,
        }
    }
}

fn oracle_error(e: OracleError) -> Outcome {
    let code = match e {
        OracleError::LimitExceeded { .. } | OracleError::Cancelled => EXIT_LIMIT,
        _ => EXIT_USAGE,
    };
    Outcome::fail(code, e)
}

fn oracle_one(
    raw: &[i64],
    simple: bool,
    limits: &OracleLimits,
    timeout: Option<Duration>,
    compact: bool,
) -> Outcome {
    let mut cancel = deadline(timeout);
    let res = if simple {
        exists_simple_realization_with(raw, &mut cancel)
    } else {
        exists_triangular_realization_with(raw, limits, &mut cancel)
    };
    match res {
        Ok(r) => {
            let doc = OracleDocument {
                degrees: raw.to_vec(),
                mode: if simple { "simple" } else { "triangular" },
                exists: r.exists,
                nodes_explored: r.nodes_explored,
                bound_used: r.bound_used,
                witness: r.witness.map(|g| g.edges().to_vec()),
            };
            Outcome {
                code: if doc.exists { EXIT_OK } else { EXIT_REJECTED },
                err: String::new(),
                out: json(&doc, compact),
            }
        }
        Err(e) => oracle_error(e),
    }
}

fn census(n_max: usize, timeout: Option<Duration>) -> Outcome {
    match proposition_census_with(n_max, &mut deadline(timeout)) {
        Ok(rows) => {
            let mut csv = String::from("n,exists,nodes_explored\n");
            for r in rows {
                csv.push_str(&format!("{},{},{}\n", r.n, r.exists, r.nodes_explored));
            }
            Outcome::ok(csv)
        }
        Err(e) => oracle_error(e),
    }
}

fn verify_file(path: &Path) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())),
    };
    let docs: Vec<RealizationDocument> = match RealizationDocument::from_json(&text) {
        Ok(d) => vec![d],
        Err(_) => match text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(RealizationDocument::from_json)
            .collect::<Result<Vec<_>, _>>()
        {
            Ok(d) => d,
            Err(e) => return Outcome::fail(EXIT_USAGE, e),
        },
    };
    let mut o = Outcome::default();
    for (i, d) in docs.iter().enumerate() {
        match d.reverify() {
            Ok(()) => o.out.push_str(&format!("document {}: ok\n", i + 1)),
            Err(e) => {
                o.code = EXIT_REJECTED;
                o.out.push_str(&format!("document {}: {e}\n", i + 1));
            }
        }
    }
    o
}

fn bench(n: usize, trials: usize, seed: u64) -> Outcome {
    match bench_realize(n, trials, seed) {
        Ok(r) => Outcome::ok(json(&r, false)),
        Err(e) => Outcome::fail(EXIT_USAGE, e),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let single = |o: Outcome, out: &mut dyn Write, err: &mut dyn Write| {
        let _ = out.write_all(o.out.as_bytes());
        let _ = err.write_all(o.err.as_bytes());
        o.code
    };
    match cli.command {
        Command::Realize {
            input,
            format,
            sorted,
        } => for_each_input(&input, out, err, |seq, batch| {
            realize_one(seq, format, sorted, batch)
        }),
        Command::Check {
            input,
            erdos_gallai,
        } => for_each_input(&input, out, err, |seq, batch| {
            check_one(seq, erdos_gallai, batch)
        }),
        Command::Oracle {
            input,
            census: census_n,
            simple,
            timeout_ms,
        } => {
            let timeout = timeout_ms.map(Duration::from_millis);
            if let Some(n_max) = census_n {
                return single(census(n_max, timeout), out, err);
            }
            let limits = match oracle_limits() {
                Ok(l) => l,
                Err(e) => return single(Outcome::fail(EXIT_USAGE, e), out, err),
            };
            let input = input.expect("clap enforces input without --census");
            for_each_input(&input, out, err, |seq, batch| {
                oracle_one(seq, simple, &limits, timeout, batch)
            })
        }
        Command::Generate {
            seed,
            count,
            n_min,
            n_max,
            d_min,
            d_max,
        } => {
            let mut o = Outcome::default();
            for s in seed..seed.saturating_add(count) {
                match generate_valid_sequence(s, n_min..=n_max, d_min..=d_max) {
                    Ok(seq) => {
                        let line: Vec<String> =
                            seq.degrees().iter().map(|d| d.to_string()).collect();
                        o.out.push_str(&line.join(","));
                        o.out.push('\n');
                    }
                    Err(e) => return single(Outcome::fail(EXIT_USAGE, e), out, err),
                }
            }
            single(o, out, err)
        }
        Command::Verify { path } => single(verify_file(&path), out, err),
        Command::Bench { n, trials, seed } => single(bench(n, trials, seed), out, err),
    }
}
