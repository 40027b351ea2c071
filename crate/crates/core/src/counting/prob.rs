use num_bigint::BigInt;

use super::{binom, factorial};
use crate::error::{Error, Result};
use crate::rational::ExactRational;

fn int(v: impl Into<BigInt>) -> ExactRational {
    ExactRational::from_integer(v)
}

fn inv_factorial(n: usize) -> ExactRational {
    ExactRational::ratio(&1u32.into(), &factorial(n)).expect("factorial is nonzero")
}

/// Probability that the product of two uniform long cycles on `[n]` puts
/// `1..=m` in distinct cycles. For `m ≤ 1` the condition is vacuous.
pub fn sep_prob_ncycle(n: usize, m: usize) -> Result<ExactRational> {
    if n == 0 || m > n {
        return Err(Error::Domain(format!("need 0 ≤ m ≤ n, n ≥ 1; got n = {n}, m = {m}")));
    }
    if m <= 1 {
        return Ok(ExactRational::one());
    }
    let base = inv_factorial(m);
    if (n - m) % 2 == 1 {
        return Ok(base);
    }
    let den = factorial(m - 2) * (n + 1 - m) * (n + m);
    Ok(base + ExactRational::ratio(&2u32.into(), &den)?)
}

/// Probability that the product of two uniform long cycles fixes `1..=m`.
pub fn iso_prob_ncycle(n: usize, m: usize) -> Result<ExactRational> {
    if m >= n {
        return Err(Error::Domain(format!("isolation needs m < n, got m = {m}, n = {n}")));
    }
    let den = factorial(m) * binom(n as i64 - 1, m as i64);
    ExactRational::ratio(&1u32.into(), &den)
}

/// `P(product has no fixed points)` for two uniform long cycles.
pub fn fpf_probability(n: usize) -> Result<ExactRational> {
    Ok(fixed_point_distribution(n)?.swap_remove(0))
}

/// `P(exactly i fixed points)` for `i = 0..=n`, by inclusion–exclusion over
/// the isolation probabilities `binom(n, j)·σ̂_j = n/((n-j)·j!)` and
/// `P(identity) = 1/(n-1)!`.
pub fn fixed_point_distribution(n: usize) -> Result<Vec<ExactRational>> {
    if n < 2 {
        return Err(Error::Domain(format!("need n ≥ 2, got {n}")));
    }
    let at_least: Vec<ExactRational> = (0..=n)
        .map(|j| {
            if j == n {
                inv_factorial(n - 1)
            } else {
                int(n) * inv_factorial(j) / int(n - j)
            }
        })
        .collect();
    Ok((0..=n)
        .map(|i| {
            (i..=n)
                .map(|j| {
                    let term = int(binom(j as i64, i as i64)) * at_least[j].clone();
                    if (j - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect())
}

/// Mean and variance of the number of fixed points.
pub fn fixed_point_moments(n: usize) -> Result<(ExactRational, ExactRational)> {
    let dist = fixed_point_distribution(n)?;
    let mean: ExactRational = dist.iter().enumerate().map(|(i, p)| int(i) * p.clone()).sum();
    let second: ExactRational = dist
        .iter()
        .enumerate()
        .map(|(i, p)| int(i * i) * p.clone())
        .sum();
    let variance = second - &mean * &mean;
    Ok((mean, variance))
}
