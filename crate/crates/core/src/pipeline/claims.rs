//! The three claims: quasi-smoothness of T, the basket of X, and the
//! prime-divisor condition for the witness `b`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ideals::{groebner, jacobian, minors, Budget};
use crate::poly::{MonomialOrder, Poly};
use crate::singularity::{self, assemble_basket, check_smooth, fixed_point_census, residue_check, Basket, Census, ChartSystem, LpcOutcome, QuotientType, Smoothness};
use crate::wps::WeightedSpace;

use super::{PipelineError, Variety, Verdict};

/// The locus `{c_1 = ... = c_{j-1} = 0, c_j != 0}`, analysed on the chart of `c_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub chart: String,
    pub zero: Vec<String>,
}

/// Strata covering the space: the planned charts first, then every
/// remaining coordinate in declared order. Each point lies in exactly one.
pub fn strata(space: &WeightedSpace, plan: &[String]) -> Result<Vec<Stratum>, PipelineError> {
    let mut order: Vec<String> = Vec::new();
    for c in plan {
        if space.index_of(c).is_none() {
            return Err(PipelineError::Data(format!("chart '{c}' is not a coordinate of {space}")));
        }
        if !order.contains(c) {
            order.push(c.clone());
        }
    }
    for n in space.names() {
        if !order.contains(n) {
            order.push(n.clone());
        }
    }
    Ok(order.iter().enumerate().map(|(j, c)| Stratum { chart: c.clone(), zero: order[..j].to_vec() }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub stratum: Stratum,
    pub verdict: Verdict,
    /// `smooth`, `singular ...` or the reason for an inconclusive answer.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub census: Option<Census>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimAOutcome {
    pub verdict: Verdict,
    pub strata: Vec<StratumReport>,
}

impl ClaimAOutcome {
    /// Classified points over all strata.
    pub fn censuses(&self) -> impl Iterator<Item = &Census> {
        self.strata.iter().filter_map(|s| s.census.as_ref())
    }
}

fn analyse_stratum(t: &Variety, s: &Stratum, budget: &Budget) -> StratumReport {
    let report = |verdict, status: String, census| StratumReport { stratum: s.clone(), verdict, status, census };
    let sys = match ChartSystem::new(&t.space, &t.equations, &s.chart, &s.zero, t.dimension) {
        Ok(sys) => sys,
        Err(e) => return report(Verdict::Inconclusive, e.to_string(), None),
    };
    match check_smooth(&sys, budget) {
        Smoothness::Smooth => {}
        Smoothness::Singular { dimension, points } => {
            let which = points.and_then(|p| p.orbits.first().map(|o| format!(" e.g. at {:?}", o.coords))).unwrap_or_default();
            return report(Verdict::Fail, format!("singular locus of dimension {dimension}{which}"), None);
        }
        Smoothness::Inconclusive(why) => return report(Verdict::Inconclusive, why, None),
    }
    match fixed_point_census(&sys, budget) {
        Ok(c) => {
            let bad = c.classes.iter().any(|k| matches!(k.outcome, LpcOutcome::NotQuasiSmooth { .. }));
            if bad {
                report(Verdict::Fail, "a fixed point is not quasi-smooth".into(), Some(c))
            } else if c.incomplete {
                report(Verdict::Inconclusive, "fixed points over fields of degree above 4".into(), Some(c))
            } else {
                report(Verdict::Pass, "smooth".into(), Some(c))
            }
        }
        Err(singularity::SingularityError::Ideal(e)) => report(Verdict::Inconclusive, e.to_string(), None),
        Err(e) => report(Verdict::Fail, e.to_string(), None),
    }
}

/// Quasi-smoothness of T on every stratum of the chart plan. Strata are
/// independent and run in parallel; the report keeps plan order.
pub fn claim_a(t: &Variety, plan: &[String], budget: &Budget) -> Result<ClaimAOutcome, PipelineError> {
    let strata = strata(&t.space, plan)?;
    let reports: Vec<StratumReport> = strata.par_iter().map(|s| analyse_stratum(t, s, budget)).collect();
    Ok(ClaimAOutcome { verdict: Verdict::all(reports.iter().map(|r| r.verdict)), strata: reports })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimBOutcome {
    pub verdict: Verdict,
    pub computed: String,
    pub expected: String,
    /// Types found but not expected, and expected but not found.
    pub only_computed: String,
    pub only_expected: String,
    /// Types whose antipodal residues are missing from the ambient weights.
    pub residue_failures: Vec<String>,
    pub problems: Vec<String>,
}

/// Assembles the basket from the classified points of T and compares it with
/// the expected one. Non-isolated fixed loci and non-terminal types fail.
pub fn claim_b(a: &ClaimAOutcome, expected: &Basket, ambient_x: &[u32]) -> ClaimBOutcome {
    let mut findings: Vec<(QuotientType, u32)> = Vec::new();
    let mut problems = Vec::new();
    for c in a.censuses() {
        findings.extend(c.findings());
        for d in &c.non_isolated {
            problems.push(format!("chart {}: fixed locus of mu_{d} is not isolated", c.chart));
        }
        for k in &c.classes {
            if let LpcOutcome::Degenerate { .. } = k.outcome {
                problems.push(format!("chart {}: {} at {}", c.chart, k.outcome, k.sample));
            }
        }
    }
    let computed = match assemble_basket(&findings) {
        Ok(b) => b,
        Err(e) => {
            problems.push(e.to_string());
            Basket::default()
        }
    };
    let residue_failures: Vec<String> = computed.iter().filter(|(q, _)| !residue_check(q, ambient_x)).map(|(q, _)| q.to_string()).collect();
    let (only_computed, only_expected) = computed.difference(expected);
    let matches = computed == *expected || computed.isomorphic(expected);
    let verdict = Verdict::from_bool(matches && problems.is_empty() && residue_failures.is_empty());
    ClaimBOutcome {
        verdict,
        computed: computed.to_string(),
        expected: expected.to_string(),
        only_computed: only_computed.to_string(),
        only_expected: only_expected.to_string(),
        residue_failures,
        problems,
    }
}

/// How much of the singular locus of `X ∩ {b = 0}` to examine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum ClaimCMode {
    /// The whole singular locus.
    Full,
    /// Only its intersection with the base loci of `O(w)` for these weights.
    BaseLocus { weights: Vec<u32> },
    /// `BaseLocus` with the weights of the class's T profile.
    ProfileBaseLoci,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimCOutcome {
    pub verdict: Verdict,
    /// Projective dimension of the examined singular locus; -1 when empty.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singular_dimension: Option<i64>,
    pub status: String,
}

/// Affine dimension of `V(gens)` after solving away linear coordinates.
fn cone_dimension(x: &Variety, b: &Poly, extra: &[Poly], budget: &Budget) -> Result<Option<usize>, String> {
    let mut eqs = x.equations.clone();
    eqs.push(b.clone());
    let (eqs, extra, gone) = singularity::eliminate_linear(&eqs, extra);
    let vars: Vec<usize> = (0..x.ring.nvars()).filter(|v| !gone.contains(v)).collect();
    let codim = vars.len().checked_sub(x.dimension).ok_or("divisor has fewer coordinates than its dimension")?;
    let mut gens = eqs.clone();
    gens.extend(minors(&jacobian(&eqs, &vars), codim, &x.ring, budget.max_minors).map_err(|e| e.to_string())?);
    gens.extend(extra);
    gens.extend(gone.iter().map(|&v| Poly::var(&x.ring, v)));
    let gb = groebner(&x.ring, &gens, MonomialOrder::DegRevLex, budget).map_err(|e| e.to_string())?;
    Ok(gb.dimension())
}

/// `X ∩ {b = 0}` has at most isolated singularities: the singular locus of
/// its affine cone has dimension at most one.
pub fn claim_c(x: &Variety, mode: &ClaimCMode, budget: &Budget) -> ClaimCOutcome {
    let Some(b) = &x.witness else {
        return ClaimCOutcome { verdict: Verdict::Inconclusive, singular_dimension: None, status: "witness does not parse".into() };
    };
    let loci: Vec<Vec<Poly>> = match mode {
        ClaimCMode::Full => vec![Vec::new()],
        ClaimCMode::BaseLocus { weights } => weights.iter().map(|&w| x.space.base_locus_ideal(w as u64, &x.ring)).collect(),
        ClaimCMode::ProfileBaseLoci => {
            return ClaimCOutcome { verdict: Verdict::Inconclusive, singular_dimension: None, status: "profile weights not resolved".into() };
        }
    };
    let mut worst: i64 = -1;
    for extra in &loci {
        match cone_dimension(x, b, extra, budget) {
            Ok(d) => worst = worst.max(d.map_or(-1, |d| d as i64 - 1)),
            Err(why) => return ClaimCOutcome { verdict: Verdict::Inconclusive, singular_dimension: None, status: why },
        }
    }
    let status = match worst {
        -1 => "singular locus is empty".to_string(),
        0 => "singular locus is finite".to_string(),
        d => format!("singular locus has dimension {d}"),
    };
    ClaimCOutcome { verdict: Verdict::from_bool(worst <= 0), singular_dimension: Some(worst), status }
}
