use num_bigint::BigUint;

use super::{exact_div, factorial};
use crate::error::Result;
use crate::partition::Composition;

/// Pairs of long cycles whose product keeps every cycle inside one block
/// of `alpha`: `(n-1)!·Π αᵢ! / (n+1-k)`.
pub fn alpha_separated_count(alpha: &Composition) -> Result<BigUint> {
    let n = alpha.n();
    let k = alpha.len();
    let num = alpha
        .parts()
        .iter()
        .fold(factorial(n - 1), |acc, &a| acc * factorial(a));
    exact_div(&num, &BigUint::from(n + 1 - k), "alpha_separated_count")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(s: &str) -> BigUint {
        alpha_separated_count(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn documented_values() {
        assert_eq!(count("1,3"), BigUint::from(12u32));
        assert_eq!(count("4"), BigUint::from(36u32));
        assert_eq!(count("1,1,1,1"), BigUint::from(6u32));
        assert_eq!(count("3,1"), count("1,3"));
    }
}
