//! End-to-end verification of a candidate class: build X and T from a key
//! variety and a section table, test quasi-smoothness chart by chart,
//! classify the quotient points, and check the prime-divisor condition.

mod build;
mod claims;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dataio::DataError;
use crate::ideals::IdealError;
use crate::poly::PolyError;
use crate::singularity::SingularityError;

pub use build::{ambient, build, build_t, build_x, derive_t_profile, intermediate, specialize, BuildOptions, Variety, DEFAULT_PRIME};
pub use claims::{claim_a, claim_b, claim_c, strata, ClaimAOutcome, ClaimBOutcome, ClaimCMode, ClaimCOutcome, Stratum, StratumReport};
pub use verify::{class_series, render_json, render_text, verify_all, verify_candidate, Check, ClaimReport, Depth, Numerical, SeedEvidence, VerificationReport, VerifyOptions};

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{0}")]
    Data(String),
    #[error("key equations not supplied for {0}")]
    NoEquations(String),
    #[error(transparent)]
    DataIo(#[from] DataError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Singularity(#[from] SingularityError),
}

/// Outcome of a check or claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Inconclusive,
    Fail,
}

impl Verdict {
    /// Conjunction: any failure fails, otherwise any inconclusive is inconclusive.
    pub fn and(self, other: Verdict) -> Verdict {
        self.max(other)
    }

    pub fn all(it: impl IntoIterator<Item = Verdict>) -> Verdict {
        it.into_iter().fold(Verdict::Pass, Verdict::and)
    }

    /// Verdicts of independent parameter seeds: accepted only when they agree.
    pub fn agree(it: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut it = it.into_iter();
        let Some(first) = it.next() else { return Verdict::Inconclusive };
        if it.all(|v| v == first) {
            first
        } else {
            Verdict::Inconclusive
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Process exit status: 0 pass, 1 fail, 2 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}
