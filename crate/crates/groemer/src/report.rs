//! Machine-readable verdict reports.
//!
//! [`VerdictReport`] is the stable JSON shape emitted by the CLI (and the
//! browser demo): fixed key order, exact integers only, absent witnesses
//! rendered as `exceptional: false` with `null` witness fields. The
//! discriminant is defined for every `n`, so the Böröczky–Ruzsa block always
//! carries it, witness or not.

use serde::{Deserialize, Serialize};

use crate::criteria::{br_discriminant, Verdict, WegnerBranch};
use crate::search::SearchReport;
use crate::Result;

/// Wegner-conjecture block of a [`VerdictReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WegnerReport {
    /// Whether the conjecture calls `n` exceptional.
    pub exceptional: bool,
    /// Witness exponent, when positive.
    pub m: Option<u32>,
    /// Witness branch, when positive.
    pub branch: Option<WegnerBranch>,
}

/// Böröczky–Ruzsa block of a [`VerdictReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrReport {
    /// Whether the criterion calls `n` exceptional.
    pub exceptional: bool,
    /// Witness factor, when positive.
    pub k: Option<u64>,
    /// Witness exponent, when positive.
    pub l: Option<u32>,
    /// The discriminant `ceil(sqrt(12n-3))^2 + 3 - 12n`, always present.
    pub discriminant: u64,
}

/// Corrected-characterization block of a [`VerdictReport`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectedReport {
    /// Whether the corrected form calls `n` exceptional.
    pub exceptional: bool,
    /// Witness factor, when positive.
    pub k: Option<u64>,
    /// Witness exponent, when positive.
    pub l: Option<u32>,
}

/// Packing-search block of a [`VerdictReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    /// Whether the exhaustive search found no solution.
    pub exceptional: bool,
    /// Total number of extremal sequences (before truncation).
    pub solution_count: u64,
    /// Canonical six-side solutions, possibly truncated.
    pub solutions: Vec<[u64; 6]>,
}

/// Full per-`n` verdict in serialization form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    /// The disc count.
    pub n: u64,
    /// Hexagonal core side.
    pub a: u64,
    /// Extra complete sides.
    pub b: u64,
    /// Leftover discs.
    pub c: u64,
    /// Minimal boundary-disc count.
    pub p0: u64,
    /// Wegner's conjecture.
    pub wegner_conjecture: WegnerReport,
    /// Böröczky–Ruzsa criterion.
    pub boeroeczky_ruzsa: BrReport,
    /// Corrected congruence form.
    pub corrected: CorrectedReport,
    /// Exhaustive search, present only when it was requested.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleReport>,
}

impl VerdictReport {
    /// Criteria-only report.
    pub fn compute(n: u64) -> Result<Self> {
        Ok(Self::from_verdict(&Verdict::compute(n)?, None))
    }

    /// Report including the packing search, keeping at most `max_solutions`
    /// sequences when a cap is given.
    pub fn compute_with_oracle(n: u64, max_solutions: Option<usize>) -> Result<Self> {
        Ok(Self::from_verdict(
            &Verdict::compute_with_oracle(n)?,
            max_solutions,
        ))
    }

    /// Serialization form of a [`Verdict`].
    pub fn from_verdict(verdict: &Verdict, max_solutions: Option<usize>) -> Self {
        let discriminant = verdict
            .boeroeczky_ruzsa
            .map(|w| w.discriminant)
            .unwrap_or_else(|| br_discriminant(verdict.n).expect("n >= 1"));
        Self {
            n: verdict.n,
            a: verdict.params.a(),
            b: verdict.params.b(),
            c: verdict.params.c(),
            p0: verdict.min_boundary,
            wegner_conjecture: WegnerReport {
                exceptional: verdict.wegner_conjecture.is_some(),
                m: verdict.wegner_conjecture.map(|w| w.m),
                branch: verdict.wegner_conjecture.map(|w| w.branch),
            },
            boeroeczky_ruzsa: BrReport {
                exceptional: verdict.boeroeczky_ruzsa.is_some(),
                k: verdict.boeroeczky_ruzsa.map(|w| w.k),
                l: verdict.boeroeczky_ruzsa.map(|w| w.l),
                discriminant,
            },
            corrected: CorrectedReport {
                exceptional: verdict.corrected.is_some(),
                k: verdict.corrected.map(|w| w.k),
                l: verdict.corrected.map(|w| w.l),
            },
            oracle: verdict.oracle.as_ref().map(|report| oracle_block(report, max_solutions)),
        }
    }
}

fn oracle_block(report: &SearchReport, max_solutions: Option<usize>) -> OracleReport {
    let cap = max_solutions.unwrap_or(report.solutions.len());
    OracleReport {
        exceptional: report.exceptional,
        solution_count: report.solutions.len() as u64,
        solutions: report
            .solutions
            .iter()
            .take(cap)
            .map(|s| s.sides())
            .collect(),
    }
}
