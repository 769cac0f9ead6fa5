use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ccobstruct::search::CheckFamily;
use ccobstruct::OutputFormat;

mod commands;

#[derive(Parser)]
#[command(name = "ccobstruct", version, about = "Characteristic-class obstructions on Weinstein manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Md => OutputFormat::Md,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceKind {
    /// Complement of a degree-d hypersurface in P^n.
    PnComplement,
    /// Total space of k copies of TS^6 over S^6.
    Sphere6Bundle,
    /// Wedge of the sphere6 bundle with T*S^6.
    Sphere6Wedge,
}

#[derive(Subcommand)]
enum Command {
    /// Run every obstruction check on one space.
    Analyze {
        #[arg(long, value_enum)]
        space: SpaceKind,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        /// Primes for the Maslov check (repeatable or comma separated).
        #[arg(long = "p", value_delimiter = ',')]
        primes: Vec<u64>,
        /// Also emit the cohomology model.
        #[arg(long)]
        with_model: bool,
        /// Add this many trivial complex summands before checking.
        #[arg(long, default_value_t = 0)]
        stabilize: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Sweep divisor complements X_{n,d} over a grid.
    Search {
        /// Range of n, `a..b` (inclusive) or a single value.
        #[arg(long, default_value = "7..40")]
        n: String,
        /// Range of d, ignored with --anticanonical.
        #[arg(long, default_value = "3..99")]
        d: String,
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11,13")]
        primes: Vec<u64>,
        /// Check families: gradability, polarization, arboreal, maslov.
        #[arg(long, value_delimiter = ',', default_value = "gradability,polarization,arboreal,maslov")]
        checks: Vec<String>,
        /// Only d = n + 1.
        #[arg(long)]
        anticanonical: bool,
        /// Worker threads; defaults to $CCOBSTRUCT_WORKERS or the core count.
        #[arg(long)]
        workers: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Re-derive every worked example and report pass/fail per case.
    VerifyPaper {
        #[command(flatten)]
        output: Output,
    },
    /// Test c1*c{2k} - c{2k+1} against the kernel of H*(BU) -> H*(BO x BU(1)).
    KernelCheck {
        #[arg(long)]
        max_k: u32,
        #[command(flatten)]
        output: Output,
    },
    /// The S^6 bundle example for a given k, as JSON.
    Sphere6 {
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Fact tables.
    Facts {
        #[command(subcommand)]
        fact: Fact,
    },
}

#[derive(Subcommand)]
enum Fact {
    /// Stable homotopy groups of O, U or U/O.
    Pi {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "0..15")]
        k: String,
        #[command(flatten)]
        output: Output,
    },
    /// Binomial coefficients, exact and optionally mod a prime.
    Binom {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        p: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `a..b`, `a..=b` or `a` into an inclusive range.
fn parse_range(text: &str) -> anyhow::Result<(u64, u64)> {
    let parse = |s: &str| s.trim().parse::<u64>().with_context(|| format!("bad range bound {s:?}"));
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(text)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!("empty range {text:?}");
    }
    Ok((lo, hi))
}

fn parse_families(names: &[String]) -> anyhow::Result<Vec<CheckFamily>> {
    names
        .iter()
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<CheckFamily>().map_err(anyhow::Error::from))
        .collect()
}

fn emit(output: &Output, text: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Outcome of a command that ran to completion.
enum Completed {
    Ok,
    /// A self-check failed (exit 2).
    CheckFailed,
}

fn run(cli: Cli) -> anyhow::Result<Completed> {
    match cli.command {
        Command::Analyze { space, n, d, k, primes, with_model, stabilize, output } => {
            let text = commands::analyze(space, n, d, k, &primes, with_model, stabilize, output.format.map(Into::into))?;
            emit(&output, &text)?;
        }
        Command::Search { n, d, primes, checks, anticanonical, workers, output } => {
            let (n_lo, n_hi) = parse_range(&n)?;
            let (d_lo, d_hi) = parse_range(&d)?;
            let n_lo = u32::try_from(n_lo)?;
            let n_hi = u32::try_from(n_hi)?;
            let spec = ccobstruct::SearchSpec {
                n_range: n_lo..=n_hi,
                d_range: d_lo..=d_hi,
                primes,
                checks: parse_families(&checks)?,
                anticanonical_only: anticanonical,
            };
            let workers = workers.unwrap_or_else(ccobstruct::search::default_workers);
            let table = ccobstruct::search(&spec, workers)?;
            emit(&output, &table.render(output.format.map_or(OutputFormat::Csv, Into::into)))?;
        }
        Command::VerifyPaper { output } => {
            let report = ccobstruct::verify::verify_paper();
            emit(&output, &commands::render_verify(&report, output.format.map(Into::into)))?;
            if !report.all_passed() {
                return Ok(Completed::CheckFailed);
            }
        }
        Command::KernelCheck { max_k, output } => {
            let (text, all_in_kernel) = commands::kernel_check(max_k)?;
            emit(&output, &text)?;
            if !all_in_kernel {
                return Ok(Completed::CheckFailed);
            }
        }
        Command::Sphere6 { k, output } => {
            let example = ccobstruct::homotopy::sphere6_example(k)?;
            emit(&output, &(serde_json::to_string_pretty(&example)? + "\n"))?;
        }
        Command::Facts { fact: Fact::Pi { group, k, output } } => {
            let (lo, hi) = parse_range(&k)?;
            let text = commands::facts_pi(&group, lo, hi, output.format.map_or(OutputFormat::Md, Into::into))?;
            emit(&output, &text)?;
        }
        Command::Facts { fact: Fact::Binom { n, k, p, output } } => {
            let text = commands::facts_binom(n, k, p, output.format.map_or(OutputFormat::Md, Into::into))?;
            emit(&output, &text)?;
        }
    }
    Ok(Completed::Ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(Completed::Ok)) => ExitCode::SUCCESS,
        Ok(Ok(Completed::CheckFailed)) => ExitCode::from(2),
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(_) => ExitCode::from(2),
    }
}
