//! Per-class verification reports: table-level checks, the claims over
//! several parameter seeds, and text or JSON rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataio::{self, ClassRecord, Dataset, KeyDescriptor, Level, FORMAT};
use crate::hilbert::{self, parse_int_poly, section_numerator, HilbertSeries};
use crate::ideals::Budget;
use crate::singularity::{residue_check, Basket};
use crate::wps::format_weights;

use super::{ambient, build_t, build_x, claim_a, claim_b, claim_c, derive_t_profile, BuildOptions, ClaimAOutcome, ClaimBOutcome, ClaimCMode, ClaimCOutcome, PipelineError, Verdict, DEFAULT_PRIME};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Depth {
    /// Only the table-level checks; no Groebner computations.
    TablesOnly,
    /// Table checks and Claims A, B and C.
    Full,
}

impl FromStr for Depth {
    type Err = String;

    fn from_str(s: &str) -> Result<Depth, String> {
        match s {
            "tables-only" | "tables" => Ok(Depth::TablesOnly),
            "full" => Ok(Depth::Full),
            _ => Err(format!("unknown depth '{s}' (expected tables-only or full)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seeds: Vec<u64>,
    pub depth: Depth,
    pub prime: u64,
    pub budget: Budget,
    pub claim_c: ClaimCMode,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seeds: vec![1, 2, 3], depth: Depth::TablesOnly, prime: DEFAULT_PRIME, budget: Budget::default(), claim_c: ClaimCMode::Full }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), verdict: Verdict::from_bool(ok), detail: detail.into() }
}

/// Verdict of one claim across seeds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub verdict: Verdict,
    pub reason: String,
}

/// Everything computed for one parameter seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedEvidence {
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<ClaimAOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<ClaimBOutcome>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<ClaimCOutcome>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Numerical {
    pub genus: i64,
    /// `(-K)^3` as a reduced fraction.
    pub degree: String,
    /// `h^0(-nK)` for `n = 0..=6`.
    pub plurigenera: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub format: String,
    pub class: u32,
    pub key: String,
    pub depth: Depth,
    pub verdict: Verdict,
    pub ambient: String,
    pub t_ambient: String,
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub claims: BTreeMap<String, ClaimReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<SeedEvidence>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basket: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numerical: Option<Numerical>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn histogram(weights: impl IntoIterator<Item = u32>) -> Vec<(u32, u32)> {
    let mut m: BTreeMap<u32, u32> = BTreeMap::new();
    for w in weights {
        *m.entry(w).or_default() += 1;
    }
    m.into_iter().collect()
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

fn table_checks(data: &Dataset, key: &KeyDescriptor, class: &ClassRecord, notes: &mut Vec<String>) -> Result<(Vec<Check>, String, String), PipelineError> {
    let mut checks = Vec::new();
    let x = ambient(data, class, Level::X)?;
    let px = x.sorted_weights();
    checks.push(check("ambient", px == sorted(class.ambient.clone()), format!("P{} (expected P{})", format_weights(&px), format_weights(&sorted(class.ambient.clone())))));

    let emb = &class.embedding;
    let t = ambient(data, class, emb.level)?;
    let pt = t.sorted_weights();
    let mut names: Vec<&str> = t.names().iter().map(String::as_str).collect();
    let mut listed: Vec<&str> = emb.coordinates.iter().map(String::as_str).collect();
    names.sort_unstable();
    listed.sort_unstable();
    let (ok, detail) = match (&emb.printed, &emb.erratum) {
        _ if names != listed => (false, format!("coordinates {names:?} differ from the listed {listed:?}")),
        (Some(p), None) => (pt == sorted(p.clone()), format!("P{} (printed P{})", format_weights(&pt), format_weights(&sorted(p.clone())))),
        (Some(p), Some(e)) => {
            notes.push(format!("embedding: printed P{} is a misprint; {}", format_weights(&sorted(p.clone())), e.note));
            (pt == sorted(e.corrected.clone()), format!("P{} (corrected P{})", format_weights(&pt), format_weights(&sorted(e.corrected.clone()))))
        }
        (None, _) => (true, format!("P{} (derived; no printed weights)", format_weights(&pt))),
    };
    checks.push(check("embedding", ok, detail));

    let sum: u32 = class.profile.iter().map(|&(_, m)| m).sum();
    let increasing = class.profile.windows(2).all(|w| w[0].0 < w[1].0);
    let x_rows = histogram(class.rows.iter().filter(|r| r.level == Level::X).map(|r| r.weight));
    checks.push(check(
        "profile",
        sum as usize + 3 == key.dimension && increasing && x_rows == class.profile,
        format!("{:?}: sum {} for dim {}", class.profile, sum, key.dimension),
    ));
    let t_expected = derive_t_profile(&class.profile);
    let t_rows = histogram(class.rows.iter().filter(|r| r.level <= Level::T).map(|r| r.weight));
    checks.push(check("t-profile", t_rows == t_expected, format!("{t_expected:?}")));

    let errors = dataio::validate_class(data, class);
    checks.push(check("table", errors.is_empty(), if errors.is_empty() { "rows and parameters consistent".to_string() } else { errors.join("; ") }));

    match Basket::parse(&class.basket) {
        Ok(b) => {
            let bad: Vec<String> = b.iter().filter(|(q, _)| !residue_check(q, &class.ambient)).map(|(q, _)| q.to_string()).collect();
            checks.push(check("residues", bad.is_empty(), if bad.is_empty() { format!("{b}") } else { format!("no coordinate weight for {bad:?}") }));
        }
        Err(e) => checks.push(check("residues", false, e.to_string())),
    }
    Ok((checks, format!("P{}", format_weights(&px)), format!("P{}", format_weights(&pt))))
}

fn key_numerator(data: &Dataset, key: &KeyDescriptor) -> Option<String> {
    let mut k = key;
    for _ in 0..8 {
        if let Some(n) = &k.numerator {
            return Some(n.clone());
        }
        k = data.key(k.cone_of.as_deref()?)?;
    }
    None
}

/// Hilbert series of X from the key numerator, when the key has one.
pub fn class_series(data: &Dataset, class: &ClassRecord) -> Result<Option<HilbertSeries>, PipelineError> {
    let key = data.key(&class.key).ok_or_else(|| PipelineError::Data(format!("No.{}: unknown key '{}'", class.number, class.key)))?;
    let Some(text) = key_numerator(data, key) else { return Ok(None) };
    let n_key = parse_int_poly(&text).map_err(|e| PipelineError::Data(format!("key numerator: {e}")))?;
    let resolved = dataio::resolve_key(key, class)?;
    let sections: Vec<u32> = class.profile.iter().flat_map(|&(a, m)| std::iter::repeat_n(a, m as usize)).collect();
    Ok(Some(HilbertSeries::new(section_numerator(&n_key, &sections), resolved.space()?.weights())))
}

fn numerical(data: &Dataset, class: &ClassRecord) -> Result<Option<Numerical>, PipelineError> {
    let Some(series) = class_series(data, class)? else { return Ok(None) };
    let degree = hilbert::anticanonical_degree(&series).map_err(|e| PipelineError::Data(format!("key numerator: {e}")))?;
    Ok(Some(Numerical {
        genus: hilbert::genus(&series).genus,
        degree: degree.to_string(),
        plurigenera: series.expand(6).iter().map(ToString::to_string).collect(),
    }))
}

fn run_seed(data: &Dataset, class: &ClassRecord, expected: &Basket, seed: u64, opts: &VerifyOptions) -> SeedEvidence {
    let mut ev = SeedEvidence { seed, error: None, a: None, b: None, c: None };
    let build_opts = BuildOptions::new(opts.prime, seed);
    let mode = match &opts.claim_c {
        ClaimCMode::ProfileBaseLoci => ClaimCMode::BaseLocus { weights: derive_t_profile(&class.profile).iter().map(|&(b, _)| b).collect() },
        m => m.clone(),
    };
    let t = match build_t(data, class, &build_opts) {
        Ok(t) => t,
        Err(e) => {
            ev.error = Some(e.to_string());
            return ev;
        }
    };
    match claim_a(&t, &class.charts, &opts.budget) {
        Ok(a) => {
            ev.b = Some(claim_b(&a, expected, &class.ambient));
            ev.a = Some(a);
        }
        Err(e) => ev.error = Some(e.to_string()),
    }
    match build_x(data, class, &build_opts) {
        Ok(x) => ev.c = Some(claim_c(&x, &mode, &opts.budget)),
        Err(e) => ev.error = Some(e.to_string()),
    }
    ev
}

fn aggregate(seeds: &[SeedEvidence], get: impl Fn(&SeedEvidence) -> Option<(Verdict, String)>, requires: Option<Verdict>) -> ClaimReport {
    if let Some(v) = requires.filter(|v| *v != Verdict::Pass) {
        return ClaimReport { verdict: Verdict::Inconclusive, reason: format!("prerequisite claim is {v}") };
    }
    let per: Vec<(Verdict, String)> = seeds.iter().map(|s| get(s).unwrap_or((Verdict::Inconclusive, s.error.clone().unwrap_or_else(|| "not run".into())))).collect();
    let verdict = Verdict::agree(per.iter().map(|p| p.0));
    let mut reasons: Vec<String> = per.iter().map(|p| p.1.clone()).collect();
    reasons.dedup();
    let reason = if verdict == Verdict::Inconclusive && per.iter().any(|p| p.0 != Verdict::Inconclusive) {
        format!("seeds disagree: {}", per.iter().map(|p| p.0.to_string()).collect::<Vec<_>>().join(","))
    } else {
        reasons.join("; ")
    };
    ClaimReport { verdict, reason }
}

/// Checks one class. Table-level checks always run; at full depth Claims
/// A, B and C are decided over every seed.
pub fn verify_candidate(data: &Dataset, class: &ClassRecord, opts: &VerifyOptions) -> Result<VerificationReport, PipelineError> {
    if opts.seeds.is_empty() {
        return Err(PipelineError::Data("at least one seed is required".into()));
    }
    let key = data.key(&class.key).ok_or_else(|| PipelineError::Data(format!("No.{}: unknown key '{}'", class.number, class.key)))?;
    let mut notes = class.notes.clone();
    let (checks, ambient, t_ambient) = table_checks(data, key, class, &mut notes)?;
    let expected = Basket::parse(&class.basket)?;
    if !class.findings.is_empty() {
        let listed: Vec<_> = class.findings.iter().filter_map(|f| f.singularity.parse().ok().map(|q| (q, f.count))).collect();
        match crate::singularity::assemble_basket(&listed) {
            Ok(b) if b == expected => {}
            Ok(b) => {
                let (only_f, only_b) = b.difference(&expected);
                notes.push(format!("text findings {b} differ from the basket: only in findings {only_f}, only in basket {only_b}"));
            }
            Err(e) => notes.push(format!("text findings: {e}")),
        }
    }
    let numerical = numerical(data, class)?;
    let mut report = VerificationReport {
        format: FORMAT.to_string(),
        class: class.number,
        key: class.key.clone(),
        depth: opts.depth,
        verdict: Verdict::all(checks.iter().map(|c| c.verdict)),
        ambient,
        t_ambient,
        checks,
        claims: BTreeMap::new(),
        seeds: Vec::new(),
        basket: None,
        numerical,
        notes,
    };
    if opts.depth == Depth::TablesOnly {
        return Ok(report);
    }
    let seeds: Vec<SeedEvidence> = opts.seeds.iter().map(|&s| run_seed(data, class, &expected, s, opts)).collect();
    let a = aggregate(&seeds, |s| s.a.as_ref().map(|a| (a.verdict, summarize_a(a))), None);
    let b = aggregate(&seeds, |s| s.b.as_ref().map(|b| (b.verdict, format!("computed {}", b.computed))), Some(a.verdict));
    let c = aggregate(&seeds, |s| s.c.as_ref().map(|c| (c.verdict, c.status.clone())), None);
    let baskets: Vec<&String> = seeds.iter().filter_map(|s| s.b.as_ref().map(|b| &b.computed)).collect();
    if baskets.len() == seeds.len() && baskets.windows(2).all(|w| w[0] == w[1]) {
        report.basket = baskets.first().map(|b| (*b).clone());
    }
    report.verdict = Verdict::all([report.verdict, a.verdict, b.verdict, c.verdict]);
    report.claims = BTreeMap::from([("A".to_string(), a), ("B".to_string(), b), ("C".to_string(), c)]);
    report.seeds = seeds;
    Ok(report)
}

fn summarize_a(a: &ClaimAOutcome) -> String {
    let bad: Vec<String> = a.strata.iter().filter(|s| s.verdict != Verdict::Pass).map(|s| format!("{}: {}", s.stratum.chart, s.status)).collect();
    if bad.is_empty() {
        format!("{} strata smooth", a.strata.len())
    } else {
        bad.join("; ")
    }
}

/// Verifies the given classes in parallel; reports come back in class order.
pub fn verify_all(data: &Dataset, classes: &[u32], opts: &VerifyOptions) -> Result<Vec<VerificationReport>, PipelineError> {
    let records: Vec<&ClassRecord> = classes
        .iter()
        .map(|&n| data.class(n).ok_or_else(|| PipelineError::Data(format!("unknown class No.{n}"))))
        .collect::<Result<_, _>>()?;
    let mut reports: Vec<VerificationReport> = records.par_iter().map(|c| verify_candidate(data, c, opts)).collect::<Result<_, _>>()?;
    reports.sort_by_key(|r| r.class);
    Ok(reports)
}

/// Human-readable report: checks, then claim verdicts and per-stratum status.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "No.{} [{}] {}: {}", r.class, r.key, r.ambient, r.verdict);
        for c in &r.checks {
            let _ = writeln!(out, "  {:<10} {:<12} {}", c.name, c.verdict, c.detail);
        }
        if let Some(n) = &r.numerical {
            let _ = writeln!(out, "  genus {}, (-K)^3 = {}", n.genus, n.degree);
        }
        if !r.claims.is_empty() {
            let line: Vec<String> = r.claims.iter().map(|(k, v)| format!("{k}:{}", v.verdict)).collect();
            let _ = writeln!(out, "  {}", line.join(" "));
            for (k, v) in &r.claims {
                let _ = writeln!(out, "    {k}: {}", v.reason);
            }
            for s in &r.seeds {
                if let Some(e) = &s.error {
                    let _ = writeln!(out, "    seed {}: {e}", s.seed);
                }
                if let Some(a) = &s.a {
                    for st in &a.strata {
                        let zero = if st.stratum.zero.is_empty() { String::new() } else { format!(" ({}=0)", st.stratum.zero.join("=")) };
                        let _ = writeln!(out, "    seed {} chart {}{}: {} {}", s.seed, st.stratum.chart, zero, st.verdict, st.status);
                    }
                }
                if let Some(b) = &s.b {
                    if b.verdict != Verdict::Pass {
                        let _ = writeln!(out, "    seed {} basket {} vs {}: only computed {}, only expected {}", s.seed, b.computed, b.expected, b.only_computed, b.only_expected);
                    }
                }
            }
            if let Some(b) = &r.basket {
                let _ = writeln!(out, "  basket {b}");
            }
        }
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
    }
    out
}

pub fn render_json(reports: &[VerificationReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
