//! Parameter sweeps over divisor complements and the table emitters.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coeff::CoefficientRing;
use crate::error::{domain, Error, Result};
use crate::numtheory::is_prime;
use crate::obstructions::{run_check, CheckKind};
use crate::spaces::divisor_complement;
use crate::SCHEMA_VERSION;

pub const DEFAULT_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// Environment variable holding the worker count for sweeps.
pub const WORKERS_ENV: &str = "CCOBSTRUCT_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckFamily {
    Gradability,
    Polarization,
    Arboreal,
    Maslov,
}

impl CheckFamily {
    pub const ALL: [CheckFamily; 4] = [
        CheckFamily::Gradability,
        CheckFamily::Polarization,
        CheckFamily::Arboreal,
        CheckFamily::Maslov,
    ];
}

impl FromStr for CheckFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gradability" | "gradable" => Ok(CheckFamily::Gradability),
            "polarization" => Ok(CheckFamily::Polarization),
            "arboreal" => Ok(CheckFamily::Arboreal),
            "maslov" => Ok(CheckFamily::Maslov),
            other => domain(format!("unknown check family {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Md,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "md" => Ok(OutputFormat::Md),
            other => domain(format!("unknown format {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpec {
    pub n_range: RangeInclusive<u32>,
    /// Ignored when `anticanonical_only` is set; `d = n + 1` is used instead.
    pub d_range: RangeInclusive<u64>,
    pub primes: Vec<u64>,
    pub checks: Vec<CheckFamily>,
    pub anticanonical_only: bool,
}

impl Default for SearchSpec {
    fn default() -> Self {
        SearchSpec {
            n_range: 7..=40,
            d_range: 3..=99,
            primes: DEFAULT_PRIMES.to_vec(),
            checks: CheckFamily::ALL.to_vec(),
            anticanonical_only: false,
        }
    }
}

impl SearchSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n_range.is_empty() {
            return domain("empty n range");
        }
        if *self.n_range.start() < 2 {
            return domain("n must be at least 2");
        }
        if !self.anticanonical_only {
            if self.d_range.is_empty() {
                return domain("empty d range");
            }
            if *self.d_range.start() < 1 {
                return domain("d must be at least 1");
            }
        }
        if let Some(p) = self.primes.iter().find(|&&p| p == 2 || !is_prime(p)) {
            return domain(format!("{p} is not an odd prime"));
        }
        Ok(())
    }

    /// Output columns after `n, d`, in a fixed order.
    pub fn columns(&self) -> Vec<CheckKind> {
        let mut primes = self.primes.clone();
        primes.sort_unstable();
        primes.dedup();
        let mut out = Vec::new();
        for family in CheckFamily::ALL {
            if !self.checks.contains(&family) {
                continue;
            }
            match family {
                CheckFamily::Gradability => out.push(CheckKind::Gradability),
                CheckFamily::Polarization => out.push(CheckKind::Polarization),
                CheckFamily::Arboreal => out.push(CheckKind::Arboreal),
                CheckFamily::Maslov => out.extend(primes.iter().map(|&p| CheckKind::MaslovModP(p))),
            }
        }
        out
    }

    /// Grid points in lexicographic `(n, d)` order.
    pub fn points(&self) -> Vec<(u32, u64)> {
        self.n_range
            .clone()
            .flat_map(|n| {
                let ds: Vec<u64> = if self.anticanonical_only {
                    vec![u64::from(n) + 1]
                } else {
                    self.d_range.clone().collect()
                };
                ds.into_iter().map(move |d| (n, d))
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRow {
    pub n: u32,
    pub d: u64,
    pub verdicts: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchTable {
    pub schema: String,
    /// Verdict column names; `n` and `d` are implicit leading columns.
    pub columns: Vec<String>,
    pub rows: Vec<SearchRow>,
}

pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&w| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn evaluate(n: u32, d: u64, columns: &[CheckKind]) -> Result<SearchRow> {
    let model = divisor_complement(n, d, CoefficientRing::Integers)?;
    Ok(SearchRow {
        n,
        d,
        verdicts: columns.iter().map(|&k| run_check(&model, k).verdict.name().to_string()).collect(),
    })
}

/// Classifies every grid point on `workers` threads. Rows come back in grid
/// order whatever the completion order; an empty check set yields no rows.
pub fn search(spec: &SearchSpec, workers: usize) -> Result<SearchTable> {
    spec.validate()?;
    let columns = spec.columns();
    let points = if columns.is_empty() { Vec::new() } else { spec.points() };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    let rows = pool.install(|| {
        points
            .par_iter()
            .map(|&(n, d)| evaluate(n, d, &columns))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(SearchTable {
        schema: SCHEMA_VERSION.to_string(),
        columns: columns.iter().map(CheckKind::column).collect(),
        rows,
    })
}

impl SearchTable {
    pub fn header(&self) -> Vec<String> {
        ["n", "d"].iter().map(|s| s.to_string()).chain(self.columns.iter().cloned()).collect()
    }

    fn cells(row: &SearchRow) -> Vec<String> {
        [row.n.to_string(), row.d.to_string()]
            .into_iter()
            .chain(row.verdicts.iter().cloned())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(text: &str) -> Result<SearchTable> {
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("invalid search table: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header().join(",") + "\n";
        for row in &self.rows {
            out += &Self::cells(row).join(",");
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let header = self.header();
        let mut out = format!("| {} |\n", header.join(" | "));
        let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
        for row in &self.rows {
            let _ = writeln!(out, "| {} |", Self::cells(row).join(" | "));
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => self.to_json(),
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Md => self.to_markdown(),
        }
    }
}
