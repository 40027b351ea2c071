use num_bigint::BigUint;
use num_traits::Zero;

use super::{binom, exact_div, factorial};
use crate::error::{Error, Result};

/// Signless Stirling number of the first kind: permutations of `[n]` with
/// `k` cycles.
pub fn stirling_c(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    // row[j] = C(i, j)
    let mut row = vec![BigUint::zero(); n + 1];
    row[0] = BigUint::from(1u32);
    for i in 1..=n {
        for j in (1..=i).rev() {
            let carried = &row[j] * (i - 1);
            row[j] = &row[j - 1] + carried;
        }
        row[0] = BigUint::zero();
    }
    row.swap_remove(k)
}

/// Permutations of `[n]` with `k` cycles and `1..=m` in distinct cycles.
///
/// Each `j ≤ m` heads its own cycle; `d` further elements are inserted
/// into those `m` cycles in `(d+m-1)!/(m-1)!` ways and the rest form the
/// remaining `k - m` cycles.
pub fn c_sep(n: usize, k: usize, m: usize) -> Result<BigUint> {
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    if m == 0 {
        return Ok(stirling_c(n, k));
    }
    if k < m {
        return Ok(BigUint::zero());
    }
    let head = factorial(m - 1);
    let mut total = BigUint::zero();
    for d in 0..=n - m {
        let insertions = exact_div(&factorial(d + m - 1), &head, "c_sep")?;
        total += binom((n - m) as i64, d as i64) * insertions * stirling_c(n - m - d, k - m);
    }
    Ok(total)
}

/// Permutations of `[n]` with `k` cycles fixing `1..=m`.
pub fn c_fix(n: usize, k: usize, m: usize) -> Result<BigUint> {
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    if k < m {
        return Ok(BigUint::zero());
    }
    Ok(stirling_c(n - m, k - m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_permutations;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling_c(0, 0), u(1));
        assert_eq!(stirling_c(4, 2), u(11));
        assert_eq!(stirling_c(5, 0), u(0));
        assert_eq!(stirling_c(3, 4), u(0));
        for n in 0..10 {
            assert_eq!(stirling_c(n, n), u(1));
            let sum: BigUint = (0..=n).map(|k| stirling_c(n, k)).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn sep_and_fix_match_brute_force() {
        for n in 1..=6 {
            let perms: Vec<_> = enumerate_permutations(n).collect();
            for m in 0..=n {
                for k in 0..=n {
                    let sep = perms
                        .iter()
                        .filter(|p| p.cycle_count() == k && p.separates(m).unwrap())
                        .count() as u64;
                    let fix = perms
                        .iter()
                        .filter(|p| p.cycle_count() == k && p.isolates(m).unwrap())
                        .count() as u64;
                    assert_eq!(c_sep(n, k, m).unwrap(), u(sep), "C_{m}({n},{k})");
                    assert_eq!(c_fix(n, k, m).unwrap(), u(fix), "Ĉ_{m}({n},{k})");
                }
            }
        }
    }

    #[test]
    fn documented_values() {
        assert_eq!(c_sep(5, 2, 2).unwrap(), u(24));
        assert_eq!(c_sep(4, 3, 2).unwrap(), u(5));
        assert_eq!(c_fix(5, 4, 1).unwrap(), u(6));
        assert_eq!(c_fix(6, 6, 6).unwrap(), u(1));
        for n in 1..12 {
            for m in 0..=n + 1 {
                let expect = (n + m) * (n + 1 - m) / 2;
                assert_eq!(c_sep(n + 1, n, m).unwrap(), u(expect as u64));
            }
        }
        assert!(c_sep(3, 1, 4).is_err());
    }
}
