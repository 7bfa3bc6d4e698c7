//! Number-theoretic exceptionality predicates.
//!
//! A disc count `n` is *exceptional* when no extremal Groemer packing of `n`
//! unit discs exists. Three predicates over `n` (or its hexagonal parameters)
//! claim to characterize exceptionality:
//!
//! * **Böröczky–Ruzsa** (proven): `n` is exceptional iff the discriminant
//!   `D = ceil(sqrt(12n-3))^2 + 3 - 12n` factors as `(3k - 1) * 9^l` with
//!   `k, l >= 1`. Since `3k - 1` is coprime to 3, such an `l` is pinned to
//!   half the 3-adic valuation of `D`, which makes the witness unique.
//! * **Wegner's conjecture** (false in general): a congruence condition on
//!   `a - c` modulo powers of 9, split into a `b = 2` and a `b = 5` branch.
//! * **Corrected congruence form**: the same shape as Wegner's conjecture but
//!   with the congruence taken at the modulus forced by the discriminant
//!   factorization; equivalent to Böröczky–Ruzsa.
//!
//! Positive results always come with the certifying integers so callers can
//! re-verify them independently.

use serde::{Deserialize, Serialize};

use crate::arith::ceil_sqrt;
use crate::params::{decompose, HexParams};
use crate::search::SearchReport;
use crate::{Error, Result};

/// Which congruence branch of the conjecture fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WegnerBranch {
    /// `b = 2` and `a - c == -6m (mod 9^(m+1))`.
    #[serde(rename = "b2")]
    B2,
    /// `b = 5` and `a - c == 6 * 9^m (mod 9^(m+1))`.
    #[serde(rename = "b5")]
    B5,
}

/// Certificate for a positive [`check_wegner_conjecture`] result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WegnerWitness {
    /// The branch whose congruence holds.
    pub branch: WegnerBranch,
    /// The smallest exponent satisfying the branch congruence.
    pub m: u32,
}

/// Certificate for a positive discriminant factorization `D = (3k - 1) * 9^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BrWitness {
    /// `k >= 1` with `3k - 1 = D / 9^l`.
    pub k: u64,
    /// `l >= 1`, half the 3-adic valuation of `D`.
    pub l: u32,
    /// The factored discriminant `(3k - 1) * 9^l` itself.
    pub discriminant: u64,
}

impl BrWitness {
    /// Re-checks `9^l * (3k - 1) == discriminant`.
    pub fn is_consistent(&self) -> bool {
        let recomposed = 9u128.pow(self.l) * (3 * self.k as u128 - 1);
        self.k >= 1 && self.l >= 1 && recomposed == self.discriminant as u128
    }
}

/// The discriminant `D = ceil(sqrt(12n - 3))^2 + 3 - 12n`, always `>= 0`.
pub fn br_discriminant(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let t = 12 * n as u128 - 3;
    let r = ceil_sqrt(t);
    // r*r >= 12n - 3, so the subtraction cannot underflow.
    Ok((r * r + 3 - 12 * n as u128) as u64)
}

/// Splits `d = (3k - 1) * 9^l` with `k, l >= 1` if possible.
///
/// `3k - 1` is never divisible by 3, so `l` must equal half the 3-adic
/// valuation of `d`; the valuation must be even and positive and the
/// remaining factor must be `2 (mod 3)`.
fn factor_nine_power(d: u64) -> Option<(u64, u32)> {
    if d == 0 {
        // (3k - 1) * 9^l >= 18 for k, l >= 1.
        return None;
    }
    let mut q = d;
    let mut valuation = 0u32;
    while q % 3 == 0 {
        q /= 3;
        valuation += 1;
    }
    if valuation == 0 || valuation % 2 != 0 {
        return None;
    }
    if q % 3 != 2 {
        return None;
    }
    debug_assert!(q >= 2);
    Some(((q + 1) / 3, valuation / 2))
}

/// Böröczky–Ruzsa criterion: `n` is exceptional iff this returns a witness.
pub fn check_boeroeczky_ruzsa(n: u64) -> Result<Option<BrWitness>> {
    let d = br_discriminant(n)?;
    Ok(factor_nine_power(d).map(|(k, l)| BrWitness {
        k,
        l,
        discriminant: d,
    }))
}

/// Wegner's conjectured congruence test, returning the smallest qualifying
/// exponent `m` of the branch that fires.
///
/// The search is finite: with `t = a - c` (always `>= 1` since `c < a`),
/// the `b = 2` congruence needs `9^(m+1) <= t + 6m` and the `b = 5`
/// congruence needs `9^m <= t`; beyond those bounds no `m` can qualify.
pub fn check_wegner_conjecture(params: HexParams) -> Option<WegnerWitness> {
    let t = (params.a() - params.c()) as u128;
    match params.b() {
        2 => {
            let mut m = 0u32;
            loop {
                let modulus = 9u128.pow(m + 1);
                let shifted = t + 6 * m as u128;
                if modulus > shifted {
                    return None;
                }
                if shifted % modulus == 0 {
                    return Some(WegnerWitness {
                        branch: WegnerBranch::B2,
                        m,
                    });
                }
                m += 1;
            }
        }
        5 => {
            let mut m = 0u32;
            loop {
                let step = 9u128.pow(m);
                if step > t {
                    return None;
                }
                if t % (9 * step) == 6 * step {
                    return Some(WegnerWitness {
                        branch: WegnerBranch::B5,
                        m,
                    });
                }
                m += 1;
            }
        }
        _ => None,
    }
}

/// The discriminant in parameter form, `12(a - c) + (b - 2)^2 - 9`.
///
/// Agrees with [`br_discriminant`] of the recomposed `n` whenever `b` and `c`
/// are not both zero; for `b = c = 0` the identity breaks (there `12n - 3` is
/// the perfect square `(6a - 3)^2` and the discriminant is 0), so that case
/// is rejected.
pub fn param_discriminant(params: HexParams) -> Result<u64> {
    if params.is_regular() {
        return Err(Error::BoundsOutOfScope);
    }
    let t = (params.a() - params.c()) as i128;
    let b = params.b() as i128;
    let d = 12 * t + (b - 2) * (b - 2) - 9;
    debug_assert!(d > 0);
    Ok(d as u64)
}

/// Corrected congruence characterization, equivalent to Böröczky–Ruzsa.
///
/// Reduction of the discriminant identity mod 3 forces `b = 2` or `b = 5`
/// for any exceptional number. Within a branch, the factorization
/// `D = (3k - 1) * 9^l` pins `l`, and the branch congruence is then taken
/// at modulus `9^l`:
///
/// * `b = 2`: `a - c == -6m (mod 9^l)` with `m = sum of 9^i for i < l-1`,
/// * `b = 5`: `a - c == 6 * 9^(l-1) (mod 9^l)`.
pub fn check_corrected(params: HexParams) -> Option<BrWitness> {
    let t = (params.a() - params.c()) as u128;
    let d = match params.b() {
        2 => 12 * t - 9,
        5 => 12 * t,
        _ => return None,
    };
    let d = u64::try_from(d).ok()?;
    let (k, l) = factor_nine_power(d)?;
    let modulus = 9u128.pow(l);
    let residue = match params.b() {
        2 => {
            // m = (9^(l-1) - 1) / 8, the base-9 repunit of length l-1.
            let m = (9u128.pow(l - 1) - 1) / 8;
            (modulus - (6 * m) % modulus) % modulus
        }
        _ => 6 * 9u128.pow(l - 1),
    };
    (t % modulus == residue).then_some(BrWitness {
        k,
        l,
        discriminant: d,
    })
}

/// The identity behind the `b = 2` branch of [`check_corrected`]: for all
/// `l, z >= 1` there is a `k >= 1` with
///
/// ```text
/// -8 * (9^0 + ... + 9^(l-2)) + 12 * 9^(l-1) * z - 1 = 9^(l-1) * (3k - 1).
/// ```
///
/// Returns whether such a `k` exists for the given inputs. Expected to hold
/// everywhere; exercised as a property test.
pub fn b2_congruence_identity(l: u32, z: u64) -> bool {
    assert!(l >= 1 && z >= 1, "identity is stated for l, z >= 1");
    let mut repunit: i128 = 0;
    for i in 0..l.saturating_sub(1) {
        repunit += 9i128.pow(i);
    }
    let step = 9i128.pow(l - 1);
    let lhs = step
        .checked_mul(12 * z as i128)
        .and_then(|x| x.checked_sub(8 * repunit))
        .and_then(|x| x.checked_sub(1))
        .expect("inputs too large for exact evaluation");
    if lhs <= 0 || lhs % step != 0 {
        return false;
    }
    let q = lhs / step;
    q >= 2 && q % 3 == 2
}

/// All criterion results for one `n`, bundled with their witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// The disc count under scrutiny.
    pub n: u64,
    /// Its hexagonal parameters.
    pub params: HexParams,
    /// Minimal boundary-disc count `p0(n)`.
    pub min_boundary: u64,
    /// Wegner's conjecture, with witness when positive.
    pub wegner_conjecture: Option<WegnerWitness>,
    /// Böröczky–Ruzsa criterion, with witness when positive.
    pub boeroeczky_ruzsa: Option<BrWitness>,
    /// Corrected congruence form, with witness when positive.
    pub corrected: Option<BrWitness>,
    /// Exhaustive packing search, present only when requested.
    pub oracle: Option<SearchReport>,
}

impl Verdict {
    /// Evaluates the three number-theoretic predicates (no packing search).
    pub fn compute(n: u64) -> Result<Self> {
        let params = decompose(n)?;
        Ok(Self {
            n,
            params,
            min_boundary: params.min_boundary_count(),
            wegner_conjecture: check_wegner_conjecture(params),
            boeroeczky_ruzsa: check_boeroeczky_ruzsa(n)?,
            corrected: check_corrected(params),
            oracle: None,
        })
    }

    /// Evaluates all predicates and runs the exhaustive packing search.
    pub fn compute_with_oracle(n: u64) -> Result<Self> {
        let mut verdict = Self::compute(n)?;
        verdict.oracle = Some(crate::search::find_extremal(n)?);
        Ok(verdict)
    }

    /// Whether the proven criteria and the oracle (those that are present)
    /// all agree. Böröczky–Ruzsa, the corrected form, and the search are
    /// three routes to the same truth; disagreement means a bug.
    pub fn proven_criteria_agree(&self) -> bool {
        let br = self.boeroeczky_ruzsa.is_some();
        if br != self.corrected.is_some() {
            return false;
        }
        if let (Some(x), Some(y)) = (&self.boeroeczky_ruzsa, &self.corrected) {
            if (x.k, x.l) != (y.k, y.l) {
                return false;
            }
        }
        match &self.oracle {
            Some(report) => report.exceptional == br,
            None => true,
        }
    }
}
