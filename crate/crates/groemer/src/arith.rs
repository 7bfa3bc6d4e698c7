//! Exact integer square roots.
//!
//! Every predicate in this crate must be decidable without tolerance
//! arguments, so square roots are computed on integers only. `u128` is the
//! working width throughout the crate: inputs are `u64`, and the largest
//! intermediates (squared perimeters, search discriminants) stay below
//! 2^100 even for `n` near `u64::MAX`.

/// Floor square root: the unique `r` with `r*r <= x < (r+1)*(r+1)`.
#[inline]
pub fn isqrt(x: u128) -> u128 {
    x.isqrt()
}

/// Ceiling square root: the unique `r` with `x <= r*r` and `(r-1)*(r-1) < x`.
#[inline]
pub fn ceil_sqrt(x: u128) -> u128 {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

/// Returns `Some(r)` with `r*r == x` iff `x` is a perfect square.
///
/// The residue filters reject ~92% of non-squares before paying for an
/// isqrt; the packing search calls this once per candidate discriminant.
#[inline]
pub fn exact_sqrt(x: u128) -> Option<u128> {
    // Squares are 0, 1, 4 or 9 mod 16 and 0, 1, 4 or 7 mod 9.
    if !matches!(x & 15, 0 | 1 | 4 | 9) {
        return None;
    }
    if !matches!(x % 9, 0 | 1 | 4 | 7) {
        return None;
    }
    let r = x.isqrt();
    (r * r == x).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn isqrt_small_values() {
        let expected = [0, 1, 1, 1, 2, 2, 2, 2, 2, 3, 3];
        for (x, want) in expected.iter().enumerate() {
            assert_eq!(isqrt(x as u128), *want);
        }
    }

    #[test]
    fn ceil_sqrt_values() {
        assert_eq!(ceil_sqrt(0), 0);
        assert_eq!(ceil_sqrt(1), 1);
        assert_eq!(ceil_sqrt(2), 2);
        assert_eq!(ceil_sqrt(4), 2);
        assert_eq!(ceil_sqrt(5), 3);
        assert_eq!(ceil_sqrt(21), 5);
        // 12n - 3 for the b = c = 0 family is a perfect square (6a - 3)^2.
        assert_eq!(ceil_sqrt(81), 9);
        assert_eq!(ceil_sqrt(18_498_609), 4302);
    }

    #[test]
    fn exact_sqrt_dense_range() {
        for x in 0u128..100_000 {
            let r = exact_sqrt(x);
            let s = isqrt(x);
            assert_eq!(r, (s * s == x).then_some(s), "x = {x}");
        }
    }

    proptest! {
        #[test]
        fn isqrt_contract(x in any::<u64>().prop_map(u128::from)) {
            let r = isqrt(x);
            prop_assert!(r * r <= x);
            prop_assert!((r + 1) * (r + 1) > x);
        }

        #[test]
        fn ceil_sqrt_contract(x in 1u128..=u128::from(u64::MAX)) {
            let r = ceil_sqrt(x);
            prop_assert!(r * r >= x);
            prop_assert!((r - 1) * (r - 1) < x);
        }

        #[test]
        fn exact_sqrt_roundtrip(r in 0u128..=u128::from(u32::MAX)) {
            prop_assert_eq!(exact_sqrt(r * r), Some(r));
            if r > 1 {
                prop_assert_eq!(exact_sqrt(r * r - 1), None);
                prop_assert_eq!(exact_sqrt(r * r + 1), None);
            }
        }
    }
}
