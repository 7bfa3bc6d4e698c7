//! Exhaustive existence search for extremal boundary sequences.
//!
//! A Groemer packing of `n` discs has a *boundary sequence* `(p1, ..., p6)`:
//! the number of disc centers on each of the six hull sides, read cyclically,
//! with opposite side pairs balancing (`p_i + p_{i+1} == p_{i+3} + p_{i+4}`).
//! The packing is extremal exactly when
//!
//! * point count:  `n == (p1 + p2 - 1)(p3 + p4 - 1) - C(p1,2) - C(p4,2)`, and
//! * perimeter:    `p0(n) == p1 + 2*p2 + 2*p3 + p4 - 6`.
//!
//! [`find_extremal`] enumerates every solution of this system. Since all
//! sides are at least 1 and the perimeter identity caps their sum, looping
//! `p1` and `p4` over `[1, p0 + 1]` is exhaustive; `p2` then comes from a
//! quadratic with an integer discriminant, replacing the four-deep brute
//! force with an `O(p0^2)` sweep (the brute force survives in the test suite
//! as an independent check).
//!
//! `n` is declared *exceptional* when the solution set is empty. On every
//! range tested this agrees exactly with the Böröczky–Ruzsa criterion, and
//! [`cross_validate`] uses that agreement to hunt down inputs where Wegner's
//! conjectured congruence test disagrees with the truth.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::exact_sqrt;
use crate::criteria::{
    check_boeroeczky_ruzsa, check_corrected, check_wegner_conjecture, BrWitness, WegnerWitness,
};
use crate::params::{decompose, HexParams};
use crate::{Error, Result};

/// The six per-side center counts of a Groemer hexagon.
///
/// Construction validates positivity and the cyclic balance relations, plus
/// representability of the point count in a `u64`; every constructed value
/// therefore describes a realizable hexagon.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(try_from = "[u64; 6]", into = "[u64; 6]")]
pub struct BoundarySeq {
    p: [u64; 6],
}

impl BoundarySeq {
    /// Validates and wraps a full six-side sequence.
    pub fn new(p: [u64; 6]) -> Result<Self> {
        if p.iter().any(|&x| x == 0) {
            return Err(Error::InvalidSequence(p));
        }
        for i in 0..3 {
            if p[i] + p[(i + 1) % 6] != p[(i + 3) % 6] + p[(i + 4) % 6] {
                return Err(Error::InvalidSequence(p));
            }
        }
        let n = point_count_wide(p[0], p[1], p[2], p[3]);
        if n < 1 || u64::try_from(n).is_err() {
            return Err(Error::InvalidSequence(p));
        }
        Ok(Self { p })
    }

    /// The six side counts in order.
    pub fn sides(&self) -> [u64; 6] {
        self.p
    }

    /// Side count by 0-based index (`0` holds `p1`).
    pub fn side(&self, i: usize) -> u64 {
        self.p[i]
    }

    /// The sequence rotated left by `j` places; the same packing.
    pub fn rotated(&self, j: usize) -> Self {
        let mut q = [0u64; 6];
        for (i, slot) in q.iter_mut().enumerate() {
            *slot = self.p[(i + j) % 6];
        }
        Self { p: q }
    }

    /// Canonical representative: the lexicographically smallest of the six
    /// cyclic rotations. Reflections are *not* identified.
    pub fn canonical(&self) -> Self {
        Self {
            p: canonical_array(self.p),
        }
    }

    /// Number of discs in the hexagon, via the point-count identity.
    pub fn point_count(&self) -> u64 {
        // In range by the constructor invariant.
        point_count_wide(self.p[0], self.p[1], self.p[2], self.p[3]) as u64
    }

    /// Number of boundary centers, `sum of (p_i - 1)`, equal to
    /// `p1 + 2*p2 + 2*p3 + p4 - 6` through the balance relations.
    pub fn perimeter(&self) -> u64 {
        self.p.iter().sum::<u64>() - 6
    }
}

impl TryFrom<[u64; 6]> for BoundarySeq {
    type Error = Error;
    fn try_from(p: [u64; 6]) -> Result<Self> {
        Self::new(p)
    }
}

impl From<BoundarySeq> for [u64; 6] {
    fn from(seq: BoundarySeq) -> Self {
        seq.p
    }
}

impl fmt::Display for BoundarySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [p1, p2, p3, p4, p5, p6] = self.p;
        write!(f, "{p1},{p2},{p3},{p4},{p5},{p6}")
    }
}

fn canonical_array(p: [u64; 6]) -> [u64; 6] {
    let mut best = p;
    for j in 1..6 {
        let mut q = [0u64; 6];
        for (i, slot) in q.iter_mut().enumerate() {
            *slot = p[(i + j) % 6];
        }
        if q < best {
            best = q;
        }
    }
    best
}

fn point_count_wide(p1: u64, p2: u64, p3: u64, p4: u64) -> i128 {
    let (p1, p2, p3, p4) = (p1 as i128, p2 as i128, p3 as i128, p4 as i128);
    (p1 + p2 - 1) * (p3 + p4 - 1) - p1 * (p1 - 1) / 2 - p4 * (p4 - 1) / 2
}

/// Point count of the hexagon with free sides `(p1, p2, p3, p4)`:
/// `(p1 + p2 - 1)(p3 + p4 - 1) - C(p1,2) - C(p4,2)`.
pub fn n_of_seq(p1: u64, p2: u64, p3: u64, p4: u64) -> Result<u64> {
    if p1 == 0 || p2 == 0 || p3 == 0 || p4 == 0 {
        return Err(Error::InvalidQuad([p1, p2, p3, p4]));
    }
    let n = point_count_wide(p1, p2, p3, p4);
    if n < 1 {
        return Err(Error::InvalidQuad([p1, p2, p3, p4]));
    }
    u64::try_from(n).map_err(|_| Error::Overflow)
}

/// Boundary-center count of the hexagon: `p1 + 2*p2 + 2*p3 + p4 - 6`.
pub fn perimeter_of_seq(p1: u64, p2: u64, p3: u64, p4: u64) -> Result<u64> {
    if p1 == 0 || p2 == 0 || p3 == 0 || p4 == 0 {
        return Err(Error::InvalidQuad([p1, p2, p3, p4]));
    }
    Ok(p1 + 2 * p2 + 2 * p3 + p4 - 6)
}

/// Completes `(p1, p2, p3, p4)` to a full sequence using the balance
/// relations `p5 = p1 + p2 - p4` and `p6 = p3 + p4 - p1`, or `None` when the
/// derived sides would not be positive.
pub fn complete_seq(p1: u64, p2: u64, p3: u64, p4: u64) -> Option<BoundarySeq> {
    let p5 = (p1 + p2).checked_sub(p4).filter(|&x| x >= 1)?;
    let p6 = (p3 + p4).checked_sub(p1).filter(|&x| x >= 1)?;
    BoundarySeq::new([p1, p2, p3, p4, p5, p6]).ok()
}

/// The side window `[max(1, ceil((a-1)/2)), 2a - c]` attached to the
/// parameters; defined only when `b` and `c` are not both zero.
pub fn side_window(params: HexParams) -> Result<(u64, u64)> {
    if params.is_regular() {
        return Err(Error::BoundsOutOfScope);
    }
    let a = params.a();
    Ok(((a / 2).max(1), 2 * a - params.c()))
}

/// Whether every side of `seq` lies in the window of `params`. The lower
/// bound `(a-1)/2 <= p_i` is evaluated as `2*p_i >= a - 1` so no fractions
/// appear.
///
/// The window is a property of packings built around an intact hexagonal
/// core; strongly degenerate packings (small `n`, or `c` close to `a`) can
/// exceed it, which is why [`find_extremal`] does not use it as a filter.
pub fn bounds_ok(seq: &BoundarySeq, params: HexParams) -> Result<bool> {
    let (_, hi) = side_window(params)?;
    let a = params.a();
    Ok(seq
        .sides()
        .iter()
        .all(|&p| 2 * p >= a - 1 && p <= hi))
}

/// Result of the exhaustive search for one `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    /// The disc count searched.
    pub n: u64,
    /// Its hexagonal parameters.
    pub params: HexParams,
    /// Minimal boundary-disc count `p0(n)`.
    pub min_boundary: u64,
    /// Every solution, canonicalized, deduplicated, ascending.
    pub solutions: Vec<BoundarySeq>,
    /// `true` iff no extremal boundary sequence exists.
    pub exceptional: bool,
}

/// Enumerates every extremal boundary sequence for `n`.
///
/// For the centered hexagonal numbers (`b = c = 0`) the regular sequence
/// `(a, a, a, a, a, a)` is the unique solution and is returned directly.
/// Otherwise `p1` and `p4` sweep `[1, p0 + 1]` — exhaustive because every
/// side is positive and the perimeter identity fixes the side sum — and
/// `p2` is read off a quadratic whose discriminant must be a perfect square.
pub fn find_extremal(n: u64) -> Result<SearchReport> {
    let params = decompose(n)?;
    let min_boundary = params.min_boundary_count();
    if params.is_regular() {
        let a = params.a();
        let seq = BoundarySeq::new([a; 6]).expect("regular sequence is valid");
        return Ok(SearchReport {
            n,
            params,
            min_boundary,
            solutions: vec![seq],
            exceptional: false,
        });
    }

    let mut found: BTreeSet<[u64; 6]> = BTreeSet::new();
    let budget = min_boundary + 6; // sum of all six sides
    let wide_n = n as i128;
    // p2 + p3 >= 2 forces p1 + p4 <= budget - 4.
    for p1 in 1..=budget.saturating_sub(5) {
        for p4 in 1..=(budget - p1 - 4) {
            let twice_s23 = budget - p1 - p4;
            if twice_s23 % 2 != 0 {
                continue;
            }
            let s23 = twice_s23 / 2;
            // (p2 + alpha)(beta - p2) = n + C(p1,2) + C(p4,2) =: rhs
            let alpha = p1 as i128 - 1;
            let beta = (s23 + p4) as i128 - 1;
            let rhs = wide_n + binom2(p1) + binom2(p4);
            let disc = (alpha + beta) * (alpha + beta) - 4 * rhs;
            if disc < 0 {
                continue;
            }
            let Some(root) = exact_sqrt(disc as u128) else {
                continue;
            };
            for r in [root as i128, -(root as i128)] {
                let num = beta - alpha + r;
                if num < 2 || num % 2 != 0 {
                    continue;
                }
                let p2 = (num / 2) as u64;
                if p2 + 1 > s23 {
                    continue;
                }
                let p3 = s23 - p2;
                if p1 + p2 <= p4 || p3 + p4 <= p1 {
                    continue;
                }
                let p5 = p1 + p2 - p4;
                let p6 = p3 + p4 - p1;
                found.insert(canonical_array([p1, p2, p3, p4, p5, p6]));
                if r == 0 {
                    break;
                }
            }
        }
    }

    let solutions: Vec<BoundarySeq> = found
        .into_iter()
        .map(|p| BoundarySeq::new(p).expect("search emits valid sequences"))
        .collect();
    let exceptional = solutions.is_empty();
    Ok(SearchReport {
        n,
        params,
        min_boundary,
        solutions,
        exceptional,
    })
}

fn binom2(x: u64) -> i128 {
    let x = x as i128;
    x * (x - 1) / 2
}

/// Which predicate to sweep with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Exhaustive packing search ([`find_extremal`]).
    Oracle,
    /// Discriminant factorization ([`check_boeroeczky_ruzsa`]).
    BoeroeczkyRuzsa,
    /// Corrected congruence form ([`check_corrected`]).
    Corrected,
    /// Wegner's conjectured congruences ([`check_wegner_conjecture`]).
    WegnerConjecture,
}

impl FromStr for Criterion {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "oracle" => Ok(Self::Oracle),
            "br" => Ok(Self::BoeroeczkyRuzsa),
            "corrected" => Ok(Self::Corrected),
            "wegner" => Ok(Self::WegnerConjecture),
            other => Err(format!(
                "unknown criterion `{other}` (expected oracle, br, corrected or wegner)"
            )),
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Oracle => "oracle",
            Self::BoeroeczkyRuzsa => "br",
            Self::Corrected => "corrected",
            Self::WegnerConjecture => "wegner",
        })
    }
}

/// Evaluates one predicate at one point.
pub fn is_exceptional(n: u64, criterion: Criterion) -> Result<bool> {
    Ok(match criterion {
        Criterion::Oracle => find_extremal(n)?.exceptional,
        Criterion::BoeroeczkyRuzsa => check_boeroeczky_ruzsa(n)?.is_some(),
        Criterion::Corrected => check_corrected(decompose(n)?).is_some(),
        Criterion::WegnerConjecture => check_wegner_conjecture(decompose(n)?).is_some(),
    })
}

/// Applies `f` to `1..=n_max`, in parallel when the `parallel` feature is
/// enabled. The output order is the input order either way, so results do
/// not depend on the worker count.
fn map_range<T, F>(n_max: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (1..=n_max).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (1..=n_max).map(f).collect()
    }
}

/// All `n <= n_max` the chosen predicate flags as exceptional, ascending.
pub fn enumerate_exceptional(n_max: u64, criterion: Criterion) -> Result<Vec<u64>> {
    let flags = map_range(n_max, |n| {
        is_exceptional(n, criterion).expect("n >= 1 cannot fail")
    });
    Ok(flags
        .into_iter()
        .enumerate()
        .filter_map(|(i, flagged)| flagged.then_some(i as u64 + 1))
        .collect())
}

/// One point where Wegner's conjecture and the Böröczky–Ruzsa criterion
/// disagree, annotated with the packing search's ground truth.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    /// The disagreeing disc count.
    pub n: u64,
    /// Its hexagonal parameters.
    pub params: HexParams,
    /// Conjecture verdict at `n`.
    pub wegner_conjecture: Option<WegnerWitness>,
    /// Böröczky–Ruzsa verdict at `n`.
    pub boeroeczky_ruzsa: Option<BrWitness>,
    /// What the exhaustive search says.
    pub oracle_exceptional: bool,
    /// How many extremal sequences the search found.
    pub oracle_solutions: u64,
}

/// Outcome of sweeping `1..=n_max` for conjecture/criterion disagreements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    /// Upper end of the swept range.
    pub n_max: u64,
    /// Points where the conjecture is positive but Böröczky–Ruzsa is not.
    pub conjecture_only: u64,
    /// Points where Böröczky–Ruzsa is positive but the conjecture is not.
    pub conjecture_missed: u64,
    /// Points where Böröczky–Ruzsa and the corrected form disagree
    /// (always 0; they are equivalent).
    pub corrected_mismatches: u64,
    /// Every disagreement, ascending by `n`, oracle-annotated.
    pub discrepancies: Vec<Discrepancy>,
}

/// Sweeps `1..=n_max`, comparing Wegner's conjecture against the
/// Böröczky–Ruzsa criterion at every point and invoking the exhaustive
/// search at each disagreement to settle it. Also counts (expected zero)
/// disagreements between Böröczky–Ruzsa and the corrected form.
pub fn cross_validate(n_max: u64) -> Result<CrossValidation> {
    const WEGNER: u8 = 1;
    const BR: u8 = 2;
    const CORRECTED_MISMATCH: u8 = 4;

    let flags = map_range(n_max, |n| {
        let params = decompose(n).expect("n >= 1");
        let wegner = check_wegner_conjecture(params);
        let br = check_boeroeczky_ruzsa(n).expect("n >= 1");
        let corrected = check_corrected(params);
        let mut flag = 0u8;
        if wegner.is_some() {
            flag |= WEGNER;
        }
        if br.is_some() {
            flag |= BR;
        }
        let agree = match (&br, &corrected) {
            (Some(x), Some(y)) => (x.k, x.l) == (y.k, y.l),
            (None, None) => true,
            _ => false,
        };
        if !agree {
            flag |= CORRECTED_MISMATCH;
        }
        flag
    });

    let mut report = CrossValidation {
        n_max,
        conjecture_only: 0,
        conjecture_missed: 0,
        corrected_mismatches: 0,
        discrepancies: Vec::new(),
    };
    for (i, flag) in flags.into_iter().enumerate() {
        let n = i as u64 + 1;
        if flag & CORRECTED_MISMATCH != 0 {
            report.corrected_mismatches += 1;
        }
        let wegner_positive = flag & WEGNER != 0;
        let br_positive = flag & BR != 0;
        if wegner_positive == br_positive {
            continue;
        }
        if wegner_positive {
            report.conjecture_only += 1;
        } else {
            report.conjecture_missed += 1;
        }
        let params = decompose(n)?;
        let oracle = find_extremal(n)?;
        report.discrepancies.push(Discrepancy {
            n,
            params,
            wegner_conjecture: check_wegner_conjecture(params),
            boeroeczky_ruzsa: check_boeroeczky_ruzsa(n)?,
            oracle_exceptional: oracle.exceptional,
            oracle_solutions: oracle.solutions.len() as u64,
        });
    }
    Ok(report)
}
