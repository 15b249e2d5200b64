//! Command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 invariant violation or
//! failed self-test.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use stci::enumerate::{enumerate_candidates, EnumerationOptions, DEFAULT_B_MAX};
use stci::oracle::brute_force_profiles;
use stci::report::{self, Format};
use stci::screen::{check_report_invariants, profile_search, screen_candidate, ScreenMode};
use stci::types::{validate_candidate, CandidateTuple, CurveClass};
use stci::{selftest, witness_tuple, Error};

#[derive(Parser)]
#[command(
    name = "stci",
    version,
    about = "Screen (a, b, m, l) candidates for primitive set-theoretic complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CurveArgs {
    /// Curve degree.
    #[arg(long)]
    d: i64,
    /// Curve genus.
    #[arg(long)]
    g: i64,
}

#[derive(Args)]
struct EnumArgs {
    #[command(flatten)]
    curve: CurveArgs,
    #[arg(long, default_value = "md")]
    format: Format,
    /// Upper bound on l (default 3d + 2g - 4).
    #[arg(long)]
    lmax: Option<i64>,
    /// Truncation for degenerate families.
    #[arg(long, default_value_t = DEFAULT_B_MAX)]
    bmax: i64,
    #[arg(long, default_value_t = 2)]
    amin: i64,
    /// Allow multiplicity 1.
    #[arg(long)]
    include_m1: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List every candidate tuple for a curve class.
    Enumerate(EnumArgs),
    /// Enumerate, then screen every candidate.
    Screen {
        #[command(flatten)]
        args: EnumArgs,
        /// Require an A_n^k profile with integral n instead of the
        /// five-condition form.
        #[arg(long)]
        strong: bool,
    },
    /// Print the explicit witness tuple and its condition report.
    Witness(CurveArgs),
    /// Search singularity profiles for one tuple and compare with brute force.
    Profile {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        l: i64,
    },
    /// Run the full regression suite.
    Selftest,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(msg) => Failure::Invariant(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn options(args: &EnumArgs) -> EnumerationOptions {
    EnumerationOptions {
        l_max: args.lmax,
        b_max: args.bmax,
        include_m1: args.include_m1,
        a_min: args.amin,
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    match cli.command {
        Command::Enumerate(args) => {
            let curve = CurveClass::new(args.curve.d, args.curve.g)?;
            let e = enumerate_candidates(curve, &options(&args));
            let _ = out
                .write_all(report::format_candidates(curve, &e.candidates, args.format).as_bytes());
            let _ = err.write_all(report::format_diagnostics(&e.diagnostics).as_bytes());
        }
        Command::Screen { args, strong } => {
            let curve = CurveClass::new(args.curve.d, args.curve.g)?;
            let mode = if strong {
                ScreenMode::Strong
            } else {
                ScreenMode::Weak
            };
            let e = enumerate_candidates(curve, &options(&args));
            let reports = e
                .candidates
                .par_iter()
                .map(|t| {
                    let r = screen_candidate(curve, t, mode).map_err(|e| {
                        Error::Invariant(format!("enumerated tuple failed validation: {e}"))
                    })?;
                    check_report_invariants(&r)?;
                    Ok(r)
                })
                .collect::<Result<Vec<_>, Error>>();
            let reports = reports?;
            let _ = out.write_all(report::format_screen(&reports, args.format, strong).as_bytes());
            let _ = err.write_all(report::format_diagnostics(&e.diagnostics).as_bytes());
            for r in &reports {
                for note in &r.notes {
                    let _ = writeln!(err, "{}: {note}", r.candidate);
                }
            }
        }
        Command::Witness(c) => {
            let curve = CurveClass::new(c.d, c.g)?;
            let w = witness_tuple(curve)?;
            let _ = out.write_all(report::format_witness(&w).as_bytes());
        }
        Command::Profile { curve, a, b, l } => {
            let curve = CurveClass::new(curve.d, curve.g)?;
            let ab = a as i128 * b as i128;
            if ab % curve.d() as i128 != 0 {
                return Err(Failure::Usage(format!(
                    "m = ab/d = {ab}/{} is not an integer",
                    curve.d()
                )));
            }
            let t = CandidateTuple::new(a, b, (ab / curve.d() as i128) as i64, l);
            for v in validate_candidate(curve, &t).violations() {
                let _ = writeln!(err, "warning: {t}: {v}");
            }
            let search = profile_search(curve, &t)?;
            let oracle = brute_force_profiles(curve, &t, None);
            let _ = out
                .write_all(report::format_profile_search(curve, &t, &search, &oracle).as_bytes());
            if search.profiles() != oracle.as_slice() {
                return Err(Failure::Invariant(
                    "profile search disagrees with brute force".into(),
                ));
            }
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            for c in &checks {
                let _ = writeln!(out, "{c}");
            }
            if checks.iter().any(|c| !c.passed) {
                return Err(Failure::Invariant("self-test failed".into()));
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var("STCI_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
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
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(2)
        }
    }
}
