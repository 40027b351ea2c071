//! Closed forms, recurrences and probabilities.
//!
//! Every division is exact or reported as [`Error::NonIntegral`].

mod alpha;
mod general;
mod ncycle;
mod prob;
mod stirling;

pub use alpha::alpha_separated_count;
pub use general::{
    i_base, i_base_with, i_lambda, i_lambda_with, i_table, p_base, p_base_with, p_lambda,
    p_lambda_with, p_table, resolve_i_reading, resolve_s_reading, BaseValueSource, IinitReading,
    ReadingReport, SinitReading,
};
pub use ncycle::{i_ncycle, p_ncycle, prop_recurrence_holds, zagier_stanley};
pub use prob::{
    fixed_point_distribution, fixed_point_moments, fpf_probability, iso_prob_ncycle,
    sep_prob_ncycle,
};
pub use stirling::{c_fix, c_sep, stirling_c};

use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `binom(a, b)`, zero outside `0 ≤ b ≤ a`. Takes signed arguments so that
/// callers can pass raw differences.
pub fn binom(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

static DIVISIONS: AtomicU64 = AtomicU64::new(0);

/// How many exact divisions have been checked in this process so far.
pub fn divisions_checked() -> u64 {
    DIVISIONS.load(Ordering::Relaxed)
}

/// `num / den`, refusing to round.
pub(crate) fn exact_div(num: &BigUint, den: &BigUint, context: &str) -> Result<BigUint> {
    DIVISIONS.fetch_add(1, Ordering::Relaxed);
    if den.is_zero() {
        return Err(Error::Domain(format!("{context}: division by zero")));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral {
            context: context.to_string(),
            numerator: num.to_string(),
            denominator: den.to_string(),
        });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigUint::from(10u32));
        assert_eq!(binom(0, 0), BigUint::one());
        assert!(binom(-1, 0).is_zero());
        assert!(binom(3, 4).is_zero());
        assert!(binom(3, -1).is_zero());
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(6), BigUint::from(720u32));
    }

    #[test]
    fn exact_division() {
        let six = BigUint::from(6u32);
        assert_eq!(exact_div(&six, &BigUint::from(3u32), "t").unwrap(), BigUint::from(2u32));
        assert!(matches!(
            exact_div(&six, &BigUint::from(4u32), "t"),
            Err(Error::NonIntegral { .. })
        ));
    }
}
