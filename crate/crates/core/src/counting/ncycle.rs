use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::{binom, c_fix, c_sep, exact_div, factorial, stirling_c};
use crate::error::{Error, Result};
use crate::rational::ExactRational;

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Domain(format!("k = {k} outside 1..={n}")));
    }
    Ok(())
}

/// `2/(n(n+1))·C(n+1, k)` scaled by `(n-1)!`: pairs `(D, s)` of long cycles
/// with `D⁻¹∘s` having `k` cycles.
pub fn zagier_stanley(n: usize, k: usize) -> Result<BigUint> {
    check_k(n, k)?;
    if (n - k) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let num = factorial(n - 1) * 2u32 * stirling_c(n + 1, k);
    exact_div(&num, &BigUint::from(n * (n + 1)), "zagier_stanley")
}

/// Plane permutations with a long-cycle diagonal whose vertical has `k`
/// cycles separating `1..=m`.
pub fn p_ncycle(n: usize, m: usize, k: usize) -> Result<BigUint> {
    check_k(n, k)?;
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    if (n - k) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let num = factorial(n - 1) * 2u32 * c_sep(n + 1, k, m)?;
    exact_div(&num, &BigUint::from((n + m) * (n + 1 - m)), "p_ncycle")
}

/// As [`p_ncycle`] with `1..=m` fixed. Requires `m < n`.
pub fn i_ncycle(n: usize, m: usize, k: usize) -> Result<BigUint> {
    check_k(n, k)?;
    if m >= n {
        return Err(Error::Domain(format!("isolation needs m < n, got m = {m}, n = {n}")));
    }
    if (n - k) % 2 == 1 {
        return Ok(BigUint::zero());
    }
    let num = factorial(n - 1) * 2u32 * c_fix(n + 1, k, m)?;
    exact_div(&num, &BigUint::from((n - m) * (n + 1 - m)), "i_ncycle")
}

fn rational(v: BigUint) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

/// Checks that the unreduced closed form for `p_ncycle` (no parity cut-off)
/// satisfies the one-step recurrence in `k` that it was derived from.
pub fn prop_recurrence_holds(n: usize, m: usize, k: usize) -> Result<bool> {
    check_k(n, k)?;
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    let scale = ExactRational::ratio(
        &(factorial(n - 1) * 2u32),
        &BigUint::from((n + m) * (n + 1 - m)),
    )?;
    let closed = |k: usize| -> Result<ExactRational> { Ok(&scale * &rational(c_sep(n + 1, k, m)?)) };
    let lhs = rational(BigUint::from(n + 1 - k)) * closed(k)?;
    let mut rhs = rational(factorial(n - 1) * c_sep(n, k, m)?);
    let mut j = 1;
    while k + 2 * j <= n + 1 {
        let top = (k + 2 * j) as i64 - m as i64;
        let coeff = binom(top, 2 * j as i64) * m + binom(top, 2 * j as i64 + 1);
        rhs = rhs + rational(coeff) * closed(k + 2 * j)?;
        j += 1;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn documented_values() {
        assert_eq!(p_ncycle(4, 2, 2).unwrap(), u(16));
        assert_eq!(p_ncycle(3, 0, 1).unwrap(), u(2));
        assert_eq!(i_ncycle(4, 1, 2).unwrap(), u(6));
        for n in 1..10 {
            for m in 0..=n {
                assert_eq!(p_ncycle(n, m, n).unwrap(), factorial(n - 1));
            }
        }
        assert!(i_ncycle(4, 4, 2).is_err());
        assert!(p_ncycle(4, 0, 0).is_err());
    }

    #[test]
    fn reduces_to_zagier_stanley() {
        for n in 1..=12 {
            for k in 1..=n {
                let zs = zagier_stanley(n, k).unwrap();
                assert_eq!(p_ncycle(n, 0, k).unwrap(), zs);
                if n > 1 {
                    assert_eq!(i_ncycle(n, 0, k).unwrap(), zs);
                }
            }
        }
    }

    #[test]
    fn parity_and_totals() {
        for n in 1..=9 {
            let total: BigUint = (1..=n).map(|k| p_ncycle(n, 0, k).unwrap()).sum();
            assert_eq!(total, factorial(n - 1) * factorial(n - 1));
            for m in 0..n {
                for k in 1..=n {
                    let p = p_ncycle(n, m, k).unwrap();
                    let i = i_ncycle(n, m, k).unwrap();
                    if (n - k) % 2 == 1 {
                        assert!(p.is_zero() && i.is_zero());
                    } else if k >= m.max(1) {
                        assert!(!p.is_zero(), "p({n},{m},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn recurrence_identity() {
        for n in 1..=8 {
            for m in 0..=n {
                for k in 1..=n {
                    assert!(prop_recurrence_holds(n, m, k).unwrap(), "({n},{m},{k})");
                }
            }
        }
    }
}
