//! Hexagonal parametrization of disc counts.
//!
//! Every `n >= 1` has a unique writing
//!
//! ```text
//! n = 1 + 6*C(a,2) + a*b + c,      1 <= a,  0 <= b <= 5,  0 <= c < a,
//! ```
//!
//! with `a`, then `b`, then `c` chosen maximal in that order: `a` is the side
//! of the largest centered hexagonal number `1 + 3a(a-1)` not exceeding `n`,
//! `b` counts whole extra sides of length `a`, and `c` is the remainder. The
//! minimal number of boundary discs any Groemer packing of `n` discs can have,
//! written `p0(n)`, has two closed forms:
//!
//! * in the parameters: `6(a-1) + b + 1`, minus 1 when `b = c = 0`;
//! * directly in `n`: `ceil(sqrt(12n - 3)) - 3`.
//!
//! Both are implemented here; their agreement is enforced by tests rather
//! than assumed.

use serde::{Deserialize, Serialize};

use crate::arith::{ceil_sqrt, isqrt};
use crate::{Error, Result};

/// The parameter triple `(a, b, c)` of a disc count.
///
/// Invariants `1 <= a`, `0 <= b <= 5`, `0 <= c < a` are enforced at
/// construction, as is representability of the recomposed `n` in a `u64`,
/// so [`HexParams::n`] cannot overflow.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HexParams {
    a: u64,
    b: u64,
    c: u64,
}

impl HexParams {
    /// Validates the range invariants and builds the triple.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a < 1 || b > 5 || c >= a {
            return Err(Error::InvalidParams { a, b, c });
        }
        let n = recompose_wide(a, b, c);
        if u64::try_from(n).is_err() {
            return Err(Error::InvalidParams { a, b, c });
        }
        Ok(Self { a, b, c })
    }

    /// Side length of the hexagonal core.
    pub fn a(&self) -> u64 {
        self.a
    }

    /// Number of complete extra sides, `0..=5`.
    pub fn b(&self) -> u64 {
        self.b
    }

    /// Leftover discs, `0..a`.
    pub fn c(&self) -> u64 {
        self.c
    }

    /// `true` for the centered hexagonal numbers `n = 1 + 3a(a-1)`.
    pub fn is_regular(&self) -> bool {
        self.b == 0 && self.c == 0
    }

    /// The disc count `n = 1 + 6*C(a,2) + a*b + c`.
    pub fn n(&self) -> u64 {
        // Fits by the constructor invariant.
        recompose_wide(self.a, self.b, self.c) as u64
    }

    /// Minimal boundary-disc count `p0(n)` in parameter form:
    /// `6(a-1) + b + 1`, minus 1 exactly when `b = c = 0`.
    pub fn min_boundary_count(&self) -> u64 {
        let delta = u64::from(self.is_regular());
        6 * (self.a - 1) + self.b + 1 - delta
    }
}

fn recompose_wide(a: u64, b: u64, c: u64) -> u128 {
    let a = a as u128;
    1 + 3 * a * (a - 1) + a * b as u128 + c as u128
}

/// The unique maximal-in-order `(a, b, c)` with `n = 1 + 6*C(a,2) + a*b + c`.
pub fn decompose(n: u64) -> Result<HexParams> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    let n = n as u128;
    // 1 + 3a(a-1) <= n  <=>  (6a-3)^2 <= 12n-3  <=>  a <= (isqrt(12n-3) + 3) / 6,
    // so the floor of the right-hand side is exactly the maximal a.
    let a = (isqrt(12 * n - 3) + 3) / 6;
    debug_assert!(a >= 1);
    debug_assert!(1 + 3 * a * (a - 1) <= n);
    debug_assert!(1 + 3 * (a + 1) * a > n);
    let rest = n - (1 + 3 * a * (a - 1));
    let b = rest / a;
    let c = rest % a;
    debug_assert!(b <= 5);
    HexParams::new(a as u64, b as u64, c as u64)
}

/// Inverse of [`decompose`]; the same value as [`HexParams::n`].
pub fn recompose(params: HexParams) -> u64 {
    params.n()
}

/// Minimal boundary-disc count `p0(n) = ceil(sqrt(12n - 3)) - 3`, computed
/// with the exact integer ceiling square root.
pub fn min_boundary_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroN);
    }
    // 12n - 3 >= 9, so the ceiling root is at least 3.
    let r = ceil_sqrt(12 * n as u128 - 3);
    Ok((r - 3) as u64)
}
