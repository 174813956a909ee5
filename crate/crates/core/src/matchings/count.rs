//! Closed-form perfect-matching counts for `P(n,2)`, split by type.
//!
//! Both counts are cyclic necklace sums: place `l` width-1 (resp. width-3)
//! blocks and fill the rest with width-4 blocks; each necklace of `m` blocks
//! accounts for exactly `m` of the `n * binom(m, l)` anchored layouts, which
//! yields `n / m * binom(m, l)` matchings per admissible `l`.

use crate::error::Error;
use crate::Result;
use num_bigint::BigUint;

fn binomial(m: usize, l: usize) -> BigUint {
    if l > m {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 1..=l {
        acc = acc * BigUint::from(m - l + i) / BigUint::from(i);
    }
    acc
}

/// `n * binom(m, l) / m`, asserting exact divisibility.
fn necklace_term(n: usize, m: usize, l: usize) -> BigUint {
    let prod = BigUint::from(n) * binomial(m, l);
    let m_big = BigUint::from(m);
    debug_assert!((prod.clone() % &m_big) == BigUint::from(0u32));
    prod / m_big
}

/// Number of type-1 perfect matchings of `P(n,2)` (spoke gaps 0 mod 4).
pub fn count_type1(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "matching counts need n >= 3, got {n}"
        )));
    }
    if n == 4 {
        return Ok(BigUint::from(2u32));
    }
    let mut total = BigUint::from(0u32);
    for l in 0..=n {
        if (n - l) % 4 != 0 {
            continue;
        }
        let m = l + (n - l) / 4;
        total += necklace_term(n, m, l);
    }
    Ok(total)
}

/// Number of type-2 perfect matchings of `P(n,2)` (spoke gaps 2 mod 4).
pub fn count_type2(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "matching counts need n >= 3, got {n}"
        )));
    }
    if n == 4 {
        return Ok(BigUint::from(1u32));
    }
    let mut total = BigUint::from(0u32);
    for l in 0..=n / 3 {
        if (n - 3 * l) % 4 != 0 {
            continue;
        }
        let m = l + (n - 3 * l) / 4;
        total += necklace_term(n, m, l);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_generalized_petersen;
    use crate::matchings::census;

    fn as_u64(x: BigUint) -> u64 {
        u64::try_from(x).unwrap()
    }

    #[test]
    fn frozen_reference_values() {
        assert_eq!(as_u64(count_type1(10).unwrap()), 26);
        assert_eq!(as_u64(count_type1(4).unwrap()), 2);
        assert_eq!(as_u64(count_type1(13).unwrap()), 66);
        assert_eq!(as_u64(count_type2(10).unwrap()), 10);
        assert_eq!(as_u64(count_type2(12).unwrap()), 7);
        assert_eq!(as_u64(count_type2(4).unwrap()), 1);
        assert_eq!(as_u64(count_type2(5).unwrap()), 0);
    }

    #[test]
    fn rejects_small_n() {
        assert!(count_type1(2).is_err());
        assert!(count_type2(0).is_err());
    }

    #[test]
    fn counts_match_enumeration_small() {
        for n in 3..=14 {
            let g = build_generalized_petersen(n, 2).unwrap();
            let c = census(&g, 100_000).unwrap();
            assert_eq!(as_u64(count_type1(n).unwrap()), c.type1, "type1 n={n}");
            assert_eq!(as_u64(count_type2(n).unwrap()), c.type2, "type2 n={n}");
        }
    }
}
