//! Arbitrary-precision integer helpers shared by the table, drop and decision
//! modules.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `n choose k` computed by the multiplicative formula, exact at any size.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The central binomial coefficient `binomial(2r, r)`.
pub fn central_binomial(r: u64) -> BigUint {
    binomial(2 * r, r)
}

/// `2^e` as a big integer.
pub fn pow2(e: u64) -> BigUint {
    BigUint::one() << e
}

/// Returns `Some(e)` when `n == 2^e`.
pub fn exact_log2(n: &BigUint) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let tz = n.trailing_zeros()?;
    if n.bits() == tz + 1 {
        Some(tz)
    } else {
        None
    }
}

/// Returns the base `m` when `n == m^k` exactly.
pub fn exact_root(n: &BigUint, k: u32) -> Option<BigUint> {
    let m = n.nth_root(k);
    if num_traits::pow(m.clone(), k as usize) == *n {
        Some(m)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials_match_pascal() {
        let mut row = vec![BigUint::one()];
        for n in 1..=60u64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize], "C({n},{k})");
            }
        }
        assert_eq!(binomial(3, 5), BigUint::zero());
    }

    #[test]
    fn central_values() {
        assert_eq!(central_binomial(3), BigUint::from(20u32));
        assert_eq!(central_binomial(5), BigUint::from(252u32));
        assert_eq!(central_binomial(7), BigUint::from(3432u32));
        assert_eq!(
            central_binomial(100).to_string(),
            "90548514656103281165404177077484163874504589675413336841320"
        );
    }

    #[test]
    fn log2_and_roots() {
        assert_eq!(exact_log2(&BigUint::from(1u32)), Some(0));
        assert_eq!(exact_log2(&BigUint::from(256u32)), Some(8));
        assert_eq!(exact_log2(&BigUint::from(96u32)), None);
        assert_eq!(exact_log2(&BigUint::zero()), None);
        assert_eq!(exact_log2(&pow2(300)), Some(300));
        assert_eq!(exact_root(&BigUint::from(216u32), 3), Some(BigUint::from(6u32)));
        assert_eq!(exact_root(&BigUint::from(215u32), 3), None);
        assert_eq!(exact_root(&pow2(100), 5), Some(pow2(20)));
    }
}
