//! Cohomological obstruction checks with tri-state verdicts.
//!
//! Every check is one-directional: `Obstructed` means the structure cannot
//! exist, `NotObstructedByThisTest` means this particular test is silent.
//! Nothing here ever asserts that a polarization, arboreal skeleton or
//! Maslov datum exists.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeff::CoefficientRing;
use crate::error::{domain, Error, Result};
use crate::graded::GradedClass;
use crate::numtheory::is_prime;
use crate::spaces::SpaceModel;
use crate::SCHEMA_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Verdict {
    Obstructed,
    NotObstructedByThisTest,
    Inapplicable(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "Obstructed",
            Verdict::NotObstructedByThisTest => "NotObstructedByThisTest",
            Verdict::Inapplicable(_) => "Inapplicable",
        }
    }

    pub fn is_obstructed(&self) -> bool {
        matches!(self, Verdict::Obstructed)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Verdict::Inapplicable(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Gradability,
    Polarization,
    Arboreal,
    MaslovModP(u64),
}

impl CheckKind {
    /// Identifier used in reports and on the command line.
    pub fn name(&self) -> String {
        match self {
            CheckKind::Gradability => "gradability".into(),
            CheckKind::Polarization => "polarization".into(),
            CheckKind::Arboreal => "arboreal".into(),
            CheckKind::MaslovModP(p) => format!("maslov_p{p}"),
        }
    }

    /// Column header in tabular search output.
    pub fn column(&self) -> String {
        match self {
            CheckKind::Gradability => "gradable".into(),
            other => other.name(),
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gradability" | "gradable" => Ok(CheckKind::Gradability),
            "polarization" => Ok(CheckKind::Polarization),
            "arboreal" => Ok(CheckKind::Arboreal),
            other => match other.strip_prefix("maslov_p").and_then(|p| p.parse().ok()) {
                Some(p) => Ok(CheckKind::MaslovModP(p)),
                None => domain(format!("unknown check {other:?}")),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub param: String,
    pub value: String,
}

impl Witness {
    fn new(param: impl Into<String>, value: &GradedClass) -> Self {
        Witness { param: param.into(), value: value.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl CheckResult {
    fn inapplicable(kind: CheckKind, reason: impl Into<String>) -> Self {
        CheckResult { kind, verdict: Verdict::Inapplicable(reason.into()), witnesses: Vec::new() }
    }

    fn from_witnesses(kind: CheckKind, witnesses: Vec<Witness>) -> Self {
        let verdict = if witnesses.is_empty() {
            Verdict::NotObstructedByThisTest
        } else {
            Verdict::Obstructed
        };
        CheckResult { kind, verdict, witnesses }
    }
}

fn reread(x: &SpaceModel, ring: CoefficientRing) -> std::result::Result<SpaceModel, String> {
    x.with_coefficients(ring)
        .map_err(|e| format!("needs Chern data over {ring}: {e}"))
}

/// `2 c1 = 0` in `H^2(X; Z)`.
pub fn check_gradability(x: &SpaceModel) -> CheckResult {
    let kind = CheckKind::Gradability;
    if x.window() <= 2 {
        return CheckResult::inapplicable(kind, "degree 2 outside window");
    }
    let x = match reread(x, CoefficientRing::Integers) {
        Ok(x) => x,
        Err(reason) => return CheckResult::inapplicable(kind, reason),
    };
    let twice = x.chern_class(1).scale(&BigInt::from(2));
    let witnesses = if twice.is_zero() { Vec::new() } else { vec![Witness::new("2*c1", &twice)] };
    CheckResult::from_witnesses(kind, witnesses)
}

/// `2 c_{2k+1} = 0` for every `k >= 0` with `4k+2` below the window.
pub fn check_polarization(x: &SpaceModel) -> CheckResult {
    check_polarization_over(x, CoefficientRing::Integers)
}

/// [`check_polarization`] with the classes read in another coefficient ring.
pub fn check_polarization_over(x: &SpaceModel, ring: CoefficientRing) -> CheckResult {
    let kind = CheckKind::Polarization;
    if x.window() <= 2 {
        return CheckResult::inapplicable(kind, "no odd Chern class in window");
    }
    let x = match reread(x, ring) {
        Ok(x) => x,
        Err(reason) => return CheckResult::inapplicable(kind, reason),
    };
    let witnesses = (0..)
        .take_while(|k| 4 * k + 2 < x.window())
        .filter_map(|k| {
            let value = x.chern_class(2 * k + 1).scale(&BigInt::from(2));
            (!value.is_zero()).then(|| Witness::new(format!("k={k}"), &value))
        })
        .collect();
    CheckResult::from_witnesses(kind, witnesses)
}

/// `c_{2k+1} = c1 c_{2k}` over `Z[1/2]` for every `k >= 1` in the window.
pub fn check_arboreal(x: &SpaceModel) -> CheckResult {
    let kind = CheckKind::Arboreal;
    if x.window() <= 6 {
        return CheckResult::inapplicable(kind, "no k >= 1 in window");
    }
    let x = match reread(x, CoefficientRing::IntegersHalfInverted) {
        Ok(x) => x,
        Err(reason) => return CheckResult::inapplicable(kind, reason),
    };
    let c1 = x.chern_class(1);
    let witnesses = (1..)
        .take_while(|k| 4 * k + 2 < x.window())
        .filter_map(|k| {
            let value = c1
                .mul(&x.chern_class(2 * k))
                .and_then(|prod| prod.sub(&x.chern_class(2 * k + 1)))
                .expect("classes of one model share a presentation");
            (!value.is_zero()).then(|| Witness::new(format!("k={k}"), &value))
        })
        .collect();
    CheckResult::from_witnesses(kind, witnesses)
}

/// If `c_1, ..., c_{p-1}` vanish mod `p` then so must `c_p`.
///
/// Errors for `p` that is not an odd prime. When the hypothesis fails the
/// test says nothing and reports `NotObstructedByThisTest`.
pub fn check_maslov_mod_p(x: &SpaceModel, p: u64) -> Result<CheckResult> {
    if p == 2 || !is_prime(p) {
        return domain(format!("Maslov check needs an odd prime, got {p}"));
    }
    let kind = CheckKind::MaslovModP(p);
    if 2 * p >= u64::from(x.window()) {
        return Ok(CheckResult::inapplicable(kind, "degree 2p outside window"));
    }
    let ring = CoefficientRing::integers_mod(p)?;
    let x = match reread(x, ring) {
        Ok(x) => x,
        Err(reason) => return Ok(CheckResult::inapplicable(kind, reason)),
    };
    let classes: Vec<GradedClass> = (1..=p as u32).map(|i| x.chern_class(i)).collect();
    let witnesses = classes
        .iter()
        .enumerate()
        .map(|(i, c)| Witness::new(format!("i={}", i + 1), c))
        .collect();
    let (lower, top) = classes.split_at(classes.len() - 1);
    let verdict = if lower.iter().all(GradedClass::is_zero) && !top[0].is_zero() {
        Verdict::Obstructed
    } else {
        Verdict::NotObstructedByThisTest
    };
    Ok(CheckResult { kind, verdict, witnesses })
}

/// One report per space; check order is gradability, polarization,
/// arboreal, then Maslov over the primes in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub space: String,
    pub checks: Vec<CheckResult>,
}

impl ObstructionReport {
    pub fn get(&self, kind: CheckKind) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.kind == kind)
    }

    pub fn verdict(&self, kind: CheckKind) -> Option<&Verdict> {
        self.get(kind).map(|c| &c.verdict)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson::from(self)).expect("serializable")
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    schema: &'static str,
    space: &'a str,
    checks: Vec<CheckJson<'a>>,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    name: String,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    witnesses: &'a [Witness],
}

impl<'a> From<&'a ObstructionReport> for ReportJson<'a> {
    fn from(r: &'a ObstructionReport) -> Self {
        ReportJson {
            schema: SCHEMA_VERSION,
            space: &r.space,
            checks: r
                .checks
                .iter()
                .map(|c| CheckJson {
                    name: c.kind.name(),
                    verdict: c.verdict.name(),
                    reason: c.verdict.reason(),
                    witnesses: &c.witnesses,
                })
                .collect(),
        }
    }
}

/// Runs one check; argument errors become `Inapplicable`.
pub fn run_check(x: &SpaceModel, kind: CheckKind) -> CheckResult {
    match kind {
        CheckKind::Gradability => check_gradability(x),
        CheckKind::Polarization => check_polarization(x),
        CheckKind::Arboreal => check_arboreal(x),
        CheckKind::MaslovModP(p) => {
            check_maslov_mod_p(x, p).unwrap_or_else(|e| CheckResult::inapplicable(kind, e.to_string()))
        }
    }
}

/// All four checks, Maslov once per distinct prime.
pub fn classify(x: &SpaceModel, primes: &[u64]) -> ObstructionReport {
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    let kinds = [CheckKind::Gradability, CheckKind::Polarization, CheckKind::Arboreal]
        .into_iter()
        .chain(primes.into_iter().map(CheckKind::MaslovModP));
    ObstructionReport {
        space: x.name().to_string(),
        checks: kinds.map(|k| run_check(x, k)).collect(),
    }
}
