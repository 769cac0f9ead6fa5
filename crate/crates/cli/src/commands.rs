//! Subcommand bodies; each returns the text to emit.

use anyhow::{bail, Context};
use serde_json::json;

use ccobstruct::chern::{kernel_membership, kernel_relation};
use ccobstruct::homotopy::{bott_pi, LieGroup};
use ccobstruct::numtheory::{binom_exact, binom_mod_lucas};
use ccobstruct::search::DEFAULT_PRIMES;
use ccobstruct::spaces::{cotangent_sphere6, divisor_complement, sphere6_bundle_total_space, stabilize, wedge};
use ccobstruct::verify::VerifyReport;
use ccobstruct::{classify, CoefficientRing, ObstructionReport, OutputFormat, SCHEMA_VERSION};

use crate::SpaceKind;

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!("| {} |\n|{}\n", header.join(" | "), "---|".repeat(header.len()));
    for row in rows {
        out += &format!("| {} |\n", row.join(" | "));
    }
    out
}

fn csv_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",") + "\n";
    for row in rows {
        out += &row.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(",");
        out.push('\n');
    }
    out
}

fn report_rows(report: &ObstructionReport) -> Vec<Vec<String>> {
    report
        .checks
        .iter()
        .map(|c| {
            let mut detail: Vec<String> = c.witnesses.iter().map(|w| format!("{}: {}", w.param, w.value)).collect();
            if let Some(reason) = c.verdict.reason() {
                detail.push(reason.to_string());
            }
            vec![c.kind.name(), c.verdict.name().to_string(), detail.join("; ")]
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub fn analyze(
    space: SpaceKind,
    n: Option<u32>,
    d: Option<u64>,
    k: Option<u64>,
    primes: &[u64],
    with_model: bool,
    trivial_summands: u64,
    format: Option<OutputFormat>,
) -> anyhow::Result<String> {
    let model = match space {
        SpaceKind::PnComplement => {
            let (Some(n), Some(d)) = (n, d) else {
                bail!("pn-complement needs --n and --d");
            };
            divisor_complement(n, d, CoefficientRing::Integers)?
        }
        SpaceKind::Sphere6Bundle => {
            sphere6_bundle_total_space(k.context("sphere6-bundle needs --k")?)?
        }
        SpaceKind::Sphere6Wedge => {
            let y = sphere6_bundle_total_space(k.context("sphere6-wedge needs --k")?)?;
            wedge(&y, &cotangent_sphere6())?
        }
    };
    let model = stabilize(&model, trivial_summands);
    let primes = if primes.is_empty() { DEFAULT_PRIMES.to_vec() } else { primes.to_vec() };
    let report = classify(&model, &primes);
    Ok(match format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => {
            let mut value = report.to_json();
            if with_model {
                value["model"] = model.to_json();
            }
            serde_json::to_string_pretty(&value)? + "\n"
        }
        OutputFormat::Csv => csv_table(&["check", "verdict", "witnesses"], &report_rows(&report)),
        OutputFormat::Md => format!(
            "## {}\n\n{}",
            report.space,
            md_table(&["check", "verdict", "witnesses"], &report_rows(&report))
        ),
    })
}

pub fn render_verify(report: &VerifyReport, format: Option<OutputFormat>) -> String {
    let rows: Vec<Vec<String>> = report
        .results
        .iter()
        .map(|r| vec![r.id.to_string(), r.status.to_string(), r.detail.clone()])
        .collect();
    match format {
        None => report.render(),
        Some(OutputFormat::Csv) => csv_table(&["id", "status", "detail"], &rows),
        Some(OutputFormat::Md) => md_table(&["id", "status", "detail"], &rows),
        Some(OutputFormat::Json) => {
            use ccobstruct::verify::CaseStatus::*;
            let value = json!({
                "schema": SCHEMA_VERSION,
                "summary": {
                    "passed": report.count(Pass),
                    "expected_discrepancy": report.count(ExpectedDiscrepancy),
                    "failed": report.count(Fail),
                },
                "cases": report.results.iter().map(|r| json!({
                    "id": r.id,
                    "status": r.status.to_string(),
                    "detail": r.detail,
                })).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
    }
}

/// One line per `k`; the flag is false if any relation leaves the kernel.
pub fn kernel_check(max_k: u32) -> anyhow::Result<(String, bool)> {
    if max_k < 1 {
        bail!("--max-k must be at least 1");
    }
    let max_degree = 64.max(4 * max_k + 2);
    let mut out = String::new();
    let mut all = true;
    for k in 1..=max_k {
        let relation = kernel_relation(k, max_degree)?;
        let check = kernel_membership(&relation, max_degree)?;
        let label = format!("c1*c{} - c{}", 2 * k, 2 * k + 1);
        if check.in_kernel {
            out += &format!("{label}: IN KERNEL\n");
        } else {
            all = false;
            out += &format!("{label}: NOT IN KERNEL (image {})\n", check.image);
        }
    }
    Ok((out, all))
}

pub fn facts_pi(group: &str, lo: u64, hi: u64, format: OutputFormat) -> anyhow::Result<String> {
    let group: LieGroup = group.parse()?;
    let rows: Vec<Vec<String>> = (lo..=hi).map(|k| vec![k.to_string(), bott_pi(group, k).to_string()]).collect();
    let column = format!("pi_k({group})");
    Ok(match format {
        OutputFormat::Md => md_table(&["k", &column], &rows),
        OutputFormat::Csv => csv_table(&["k", &column], &rows),
        OutputFormat::Json => {
            let value = json!({
                "schema": SCHEMA_VERSION,
                "group": group.to_string(),
                "rows": rows.iter().map(|r| json!({"k": r[0].parse::<u64>().unwrap_or(0), "pi": r[1]})).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&value)? + "\n"
        }
    })
}

pub fn facts_binom(n: u64, k: u64, p: Option<u64>, format: OutputFormat) -> anyhow::Result<String> {
    let exact = binom_exact(n, k);
    let mut header = vec!["n", "k", "exact"];
    let mut row = vec![n.to_string(), k.to_string(), exact.to_string()];
    let lucas = match p {
        Some(p) => {
            let residue = binom_mod_lucas(n, k, p)?;
            let reduced = ((&exact % p) + p) % p;
            if reduced != residue.into() {
                panic!("Lucas residue {residue} disagrees with exact value mod {p}");
            }
            header.extend(["p", "mod_p"]);
            row.extend([p.to_string(), residue.to_string()]);
            Some((p, residue))
        }
        None => None,
    };
    Ok(match format {
        OutputFormat::Md => md_table(&header, &[row]),
        OutputFormat::Csv => csv_table(&header, &[row]),
        OutputFormat::Json => {
            let mut value = json!({"schema": SCHEMA_VERSION, "n": n, "k": k, "exact": exact.to_string()});
            if let Some((p, r)) = lucas {
                value["p"] = json!(p);
                value["mod_p"] = json!(r);
            }
            serde_json::to_string_pretty(&value)? + "\n"
        }
    })
}
