//! Counts for an arbitrary diagonal cycle type `λ`.
//!
//! Tables are filled by increasing defect `n + 1 - ℓ(λ) - k`. Entries of
//! defect zero come from a base value summed over vertical types `μ` with
//! `ℓ(μ) = k`; every other entry is a weighted sum of entries of strictly
//! smaller defect (larger `k`, or a finer `λ`), divided by its defect.
//!
//! Two closed forms for the base values are each printed in two readings
//! that disagree. Both readings are implemented and the one that agrees
//! with exhaustive enumeration for `n ≤ 6` is selected at first use;
//! anything other than exactly one agreeing reading is an error.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::Zero;

use super::{binom, exact_div, factorial};
use crate::error::{Error, Result};
use crate::oracle::Oracle;
use crate::partition::{partitions_of, splits_of, IntegerPartition};
use crate::table::{CountTable, Source, TableKind};

/// Largest `n` at which reading selection compares against the oracle.
const SELECTION_MAX_N: usize = 6;

/// Where defect-zero entries come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseValueSource {
    /// Exhaustive enumeration (limited by the oracle cap).
    Oracle,
    /// The closed form, in the reading selected against the oracle.
    ClosedForm,
    /// Oracle up to the default cap, closed form beyond.
    Auto,
}

/// Readings of the separated base-value formula. They differ in the sign
/// of the `δ̄` correction in the length of the second tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SinitReading {
    Plus,
    Minus,
}

/// Readings of the isolated base-value formula. `Printed` uses
/// `(n+1-m)!/(d-m+1-ℓ₁)!`, `Shifted` uses `(n-m)!/(d-m-ℓ₁)!`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IinitReading {
    Printed,
    Shifted,
}

impl fmt::Display for SinitReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SinitReading::Plus => "plus",
            SinitReading::Minus => "minus",
        })
    }
}

impl fmt::Display for IinitReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IinitReading::Printed => "printed",
            IinitReading::Shifted => "shifted",
        })
    }
}

/// Outcome of comparing one reading against the oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingReport {
    pub reading: String,
    pub cases: usize,
    pub mismatches: usize,
    /// First disagreement as `(λ, μ, m, formula, oracle)`.
    pub first_mismatch: Option<(IntegerPartition, IntegerPartition, usize, String, String)>,
}

fn check_base_args(lambda: &IntegerPartition, mu: &IntegerPartition, m: usize) -> Result<()> {
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: mu.n(),
        });
    }
    if lambda.length() + mu.length() != n + 1 {
        return Err(Error::Domain(format!(
            "base values need ℓ(λ) + ℓ(μ) = n + 1; got {} + {} for n = {n}",
            lambda.length(),
            mu.length()
        )));
    }
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    Ok(())
}

fn factorial_product(counts: impl Iterator<Item = usize>) -> BigUint {
    counts.fold(BigUint::from(1u32), |acc, c| acc * factorial(c))
}

/// Multinomial `(Σc)!/Πc!`.
fn multinomial(counts: &[usize]) -> BigUint {
    let mut total = 0;
    let mut acc = BigUint::from(1u32);
    for &c in counts {
        total += c;
        acc *= binom(total as i64, c as i64);
    }
    acc
}

/// Σ over ordered pairs (first tuple of length `b`, second tuple of the
/// rest) drawn from the multiset `{value: count}`, of Π(v+1) over the
/// first tuple.
fn weighted_tuple_sum(multiset: &[(usize, usize)], b: usize) -> BigUint {
    fn go(
        multiset: &[(usize, usize)],
        left: usize,
        chosen: &mut Vec<usize>,
        out: &mut BigUint,
    ) {
        let Some(&(_, count)) = multiset.get(chosen.len()) else {
            if left == 0 {
                let rest: Vec<usize> = multiset
                    .iter()
                    .zip(chosen.iter())
                    .map(|(&(_, c), &x)| c - x)
                    .collect();
                let weight = multiset
                    .iter()
                    .zip(chosen.iter())
                    .fold(BigUint::from(1u32), |acc, (&(v, _), &x)| {
                        acc * BigUint::from(v + 1).pow(x as u32)
                    });
                *out += multinomial(chosen) * multinomial(&rest) * weight;
            }
            return;
        };
        for x in 0..=count.min(left) {
            chosen.push(x);
            go(multiset, left - x, chosen, out);
            chosen.pop();
        }
    }
    let mut out = BigUint::zero();
    go(multiset, b, &mut Vec::new(), &mut out);
    out
}

/// Separated base value `p^λ_{m,μ}` for `ℓ(λ) + ℓ(μ) = n + 1`, in a given
/// reading. `m = 0` is evaluated as `m = 1`: both impose no condition.
pub fn p_base_with(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
    m: usize,
    reading: SinitReading,
) -> Result<BigUint> {
    check_base_args(lambda, mu, m)?;
    let m = m.max(1);
    let n = lambda.n();
    let t = lambda.length();
    let d = mu.length();
    if d < m {
        return Ok(BigUint::zero());
    }
    let l1 = mu.nontrivial_length();
    let shifted: Vec<(usize, usize)> = mu
        .multiplicities()
        .into_iter()
        .filter(|&(p, _)| p > 1)
        .map(|(p, c)| (p - 1, c))
        .collect();

    let mut total = BigUint::zero();
    for (r, _) in mu.multiplicities() {
        let delta = usize::from(r != 1);
        let mut rest = shifted.clone();
        if r > 1 {
            let slot = rest.iter_mut().find(|(v, _)| *v == r - 1).unwrap();
            slot.1 -= 1;
        }
        let len = l1 - delta;
        for b in 0..=len {
            let second = match reading {
                SinitReading::Minus => l1 as i64 - b as i64 - delta as i64,
                SinitReading::Plus => l1 as i64 - b as i64 + delta as i64,
            };
            if second < 0 || b as i64 + second != len as i64 {
                continue;
            }
            let coeff = binom((d - m) as i64, second)
                * binom(m as i64 - 1, b as i64)
                * BigUint::from(r);
            if coeff.is_zero() {
                continue;
            }
            total += coeff * weighted_tuple_sum(&rest, b);
        }
    }
    let num = factorial(t - 1) * factorial(d - 1) * factorial(n - m) * total;
    let den = factorial_product(lambda.multiplicities().into_iter().map(|(_, a)| a))
        * factorial(d - m);
    exact_div(&num, &den, "p_base")
}

/// Isolated base value `I^λ_{m,μ}` for `ℓ(λ) + ℓ(μ) = n + 1`, in a given
/// reading. Zero when `μ` has fewer than `m` unit parts.
pub fn i_base_with(
    lambda: &IntegerPartition,
    mu: &IntegerPartition,
    m: usize,
    reading: IinitReading,
) -> Result<BigUint> {
    check_base_args(lambda, mu, m)?;
    if mu.multiplicity(1) < m {
        return Ok(BigUint::zero());
    }
    let n = lambda.n();
    let t = lambda.length() as i64;
    let d = mu.length() as i64;
    let l1 = mu.nontrivial_length() as i64;
    let (top, bottom) = match reading {
        IinitReading::Printed => (n as i64 + 1 - m as i64, d - m as i64 + 1 - l1),
        IinitReading::Shifted => (n as i64 - m as i64, d - m as i64 - l1),
    };
    if top < 0 || bottom < 0 {
        return Ok(BigUint::zero());
    }
    let num = factorial(t as usize - 1) * factorial(d as usize - 1) * factorial(top as usize);
    let den = factorial_product(lambda.multiplicities().into_iter().map(|(_, a)| a))
        * factorial_product(mu.multiplicities().into_iter().filter(|&(p, _)| p > 1).map(|(_, b)| b))
        * factorial(bottom as usize);
    exact_div(&num, &den, "i_base")
}

/// Every `(λ, μ, m)` with `ℓ(λ) + ℓ(μ) = n + 1`, `n ≤ max_n`.
fn base_cases(max_n: usize) -> Vec<(IntegerPartition, IntegerPartition, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let parts = partitions_of(n);
        for lambda in &parts {
            for mu in parts.iter().filter(|mu| mu.length() + lambda.length() == n + 1) {
                for m in 0..=n {
                    out.push((lambda.clone(), mu.clone(), m));
                }
            }
        }
    }
    out
}

fn report<F>(name: String, max_n: usize, formula: F, truth: impl Fn(&IntegerPartition, &IntegerPartition, usize) -> Result<BigUint>) -> Result<ReadingReport>
where
    F: Fn(&IntegerPartition, &IntegerPartition, usize) -> Result<BigUint>,
{
    let mut rep = ReadingReport {
        reading: name,
        cases: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for (lambda, mu, m) in base_cases(max_n) {
        rep.cases += 1;
        let expect = truth(&lambda, &mu, m)?;
        let got = formula(&lambda, &mu, m);
        let shown = match &got {
            Ok(v) => v.to_string(),
            Err(e) => e.to_string(),
        };
        if got.as_ref().ok() != Some(&expect) {
            rep.mismatches += 1;
            rep.first_mismatch
                .get_or_insert((lambda, mu, m, shown, expect.to_string()));
        }
    }
    Ok(rep)
}

/// Compares both separated readings with `oracle` for `n ≤ max_n`.
/// Returns the unique agreeing reading and both reports.
pub fn resolve_s_reading(oracle: &Oracle, max_n: usize) -> Result<(SinitReading, Vec<ReadingReport>)> {
    let readings = [SinitReading::Minus, SinitReading::Plus];
    let reports = readings
        .iter()
        .map(|&r| {
            report(
                r.to_string(),
                max_n,
                |l, u, m| p_base_with(l, u, m, r),
                |l, u, m| oracle.p_by_type(l, u, m),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    pick(&readings, reports, "separated base value")
}

/// As [`resolve_s_reading`] for the isolated base value.
pub fn resolve_i_reading(oracle: &Oracle, max_n: usize) -> Result<(IinitReading, Vec<ReadingReport>)> {
    let readings = [IinitReading::Shifted, IinitReading::Printed];
    let reports = readings
        .iter()
        .map(|&r| {
            report(
                r.to_string(),
                max_n,
                |l, u, m| i_base_with(l, u, m, r),
                |l, u, m| oracle.i_by_type(l, u, m),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    pick(&readings, reports, "isolated base value")
}

fn pick<R: Copy>(readings: &[R], reports: Vec<ReadingReport>, what: &str) -> Result<(R, Vec<ReadingReport>)> {
    let agreeing: Vec<usize> = (0..readings.len())
        .filter(|&i| reports[i].mismatches == 0)
        .collect();
    match agreeing.as_slice() {
        [i] => Ok((readings[*i], reports)),
        _ => Err(Error::Ambiguous(format!(
            "{what}: {} readings agree with the oracle",
            agreeing.len()
        ))),
    }
}

fn selected_s_reading() -> Result<SinitReading> {
    static CHOICE: OnceLock<Result<SinitReading>> = OnceLock::new();
    CHOICE
        .get_or_init(|| resolve_s_reading(Oracle::global(), SELECTION_MAX_N).map(|r| r.0))
        .clone()
}

fn selected_i_reading() -> Result<IinitReading> {
    static CHOICE: OnceLock<Result<IinitReading>> = OnceLock::new();
    CHOICE
        .get_or_init(|| resolve_i_reading(Oracle::global(), SELECTION_MAX_N).map(|r| r.0))
        .clone()
}

/// [`p_base_with`] in the oracle-selected reading.
pub fn p_base(lambda: &IntegerPartition, mu: &IntegerPartition, m: usize) -> Result<BigUint> {
    p_base_with(lambda, mu, m, selected_s_reading()?)
}

/// [`i_base_with`] in the oracle-selected reading.
pub fn i_base(lambda: &IntegerPartition, mu: &IntegerPartition, m: usize) -> Result<BigUint> {
    i_base_with(lambda, mu, m, selected_i_reading()?)
}

fn use_oracle(source: BaseValueSource, n: usize) -> bool {
    match source {
        BaseValueSource::Oracle => true,
        BaseValueSource::ClosedForm => false,
        BaseValueSource::Auto => n <= Oracle::global().cap(),
    }
}

/// Runs the recurrence for one `(n, m, kind)` with the given base values.
fn solve(
    n: usize,
    m: usize,
    kind: TableKind,
    base: &dyn Fn(&IntegerPartition, &IntegerPartition) -> Result<BigUint>,
) -> Result<CountTable> {
    if n == 0 || m > n {
        return Err(Error::Domain(format!("need 1 ≤ n and m ≤ n; got n = {n}, m = {m}")));
    }
    let parts = partitions_of(n);
    let index: HashMap<&IntegerPartition, usize> =
        parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // finer[λ] = (μ, κ) for μ ▷_{2j+1} λ, j ≥ 1
    let finer: Vec<Vec<(usize, BigUint)>> = parts
        .iter()
        .map(|lambda| {
            (1..)
                .map(|j| 2 * j + 1)
                .take_while(|&s| lambda.length() + s - 1 <= n)
                .flat_map(|s| splits_of(lambda, s))
                .map(|(mu, kappa)| (index[&mu], kappa))
                .collect()
        })
        .collect();

    let mut values: BTreeMap<(usize, usize), BigUint> = BTreeMap::new();
    let defect = |li: usize, k: usize| (n + 1) as i64 - parts[li].length() as i64 - k as i64;
    for d in 0..n {
        for (li, lambda) in parts.iter().enumerate() {
            let Some(k) = (n + 1).checked_sub(lambda.length() + d) else {
                continue;
            };
            if k == 0 || k < m {
                continue;
            }
            let value = if d == 0 {
                parts
                    .iter()
                    .filter(|mu| mu.length() == k)
                    .map(|mu| base(lambda, mu))
                    .sum::<Result<BigUint>>()?
            } else {
                let get = |li: usize, k: usize| -> BigUint {
                    if k > n || defect(li, k) < 0 {
                        return BigUint::zero();
                    }
                    values.get(&(li, k)).cloned().unwrap_or_default()
                };
                let mut acc = BigUint::zero();
                let mut j = 1;
                while k + 2 * j <= n {
                    let top = (k + 2 * j) as i64 - m as i64;
                    let mut coeff = binom(top, 2 * j as i64 + 1);
                    if kind == TableKind::Separated {
                        coeff += binom(top, 2 * j as i64) * m;
                    }
                    acc += coeff * get(li, k + 2 * j);
                    j += 1;
                }
                for (mi, kappa) in &finer[li] {
                    acc += kappa * get(*mi, k);
                }
                exact_div(&acc, &BigUint::from(d), "general recurrence")?
            };
            if !value.is_zero() {
                values.insert((li, k), value);
            }
        }
    }
    let mut table = CountTable::new(n, m, kind, Source::Recurrence);
    for ((li, k), v) in values {
        table.insert(parts[li].clone(), k, v);
    }
    Ok(table)
}

type TableKey = (usize, usize, TableKind, BaseValueSource);

fn cached(key: TableKey, build: impl FnOnce() -> Result<CountTable>) -> Result<CountTable> {
    static CACHE: OnceLock<Mutex<HashMap<TableKey, CountTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&key) {
        return Ok(t.clone());
    }
    let t = build()?;
    cache.lock().unwrap().insert(key, t.clone());
    Ok(t)
}

/// The full `p^λ_{m,k}` table for `n`.
pub fn p_table(n: usize, m: usize, source: BaseValueSource) -> Result<CountTable> {
    cached((n, m, TableKind::Separated, source), || {
        if use_oracle(source, n) {
            let oracle = Oracle::global();
            solve(n, m, TableKind::Separated, &|l, u| oracle.p_by_type(l, u, m))
        } else {
            let reading = selected_s_reading()?;
            solve(n, m, TableKind::Separated, &|l, u| p_base_with(l, u, m, reading))
        }
    })
}

/// The full `I^λ_{m,k}` table for `n`.
pub fn i_table(n: usize, m: usize, source: BaseValueSource) -> Result<CountTable> {
    cached((n, m, TableKind::Isolated, source), || {
        if use_oracle(source, n) {
            let oracle = Oracle::global();
            solve(n, m, TableKind::Isolated, &|l, u| oracle.i_by_type(l, u, m))
        } else {
            let reading = selected_i_reading()?;
            solve(n, m, TableKind::Isolated, &|l, u| i_base_with(l, u, m, reading))
        }
    })
}

fn check_k(lambda: &IntegerPartition, k: usize) -> Result<()> {
    if k == 0 || k > lambda.n() {
        return Err(Error::Domain(format!("k = {k} outside 1..={}", lambda.n())));
    }
    Ok(())
}

/// `p^λ_{m,k}` with an explicit base-value source.
pub fn p_lambda_with(
    lambda: &IntegerPartition,
    m: usize,
    k: usize,
    source: BaseValueSource,
) -> Result<BigUint> {
    check_k(lambda, k)?;
    Ok(p_table(lambda.n(), m, source)?.get(lambda, k))
}

/// `p^λ_{m,k}`: plane permutations with diagonal type `λ` whose vertical
/// has `k` cycles separating `1..=m`.
pub fn p_lambda(lambda: &IntegerPartition, m: usize, k: usize) -> Result<BigUint> {
    p_lambda_with(lambda, m, k, BaseValueSource::Auto)
}

/// `I^λ_{m,k}` with an explicit base-value source.
pub fn i_lambda_with(
    lambda: &IntegerPartition,
    m: usize,
    k: usize,
    source: BaseValueSource,
) -> Result<BigUint> {
    check_k(lambda, k)?;
    Ok(i_table(lambda.n(), m, source)?.get(lambda, k))
}

/// `I^λ_{m,k}`: as [`p_lambda`] with `1..=m` fixed.
pub fn i_lambda(lambda: &IntegerPartition, m: usize, k: usize) -> Result<BigUint> {
    i_lambda_with(lambda, m, k, BaseValueSource::ClosedForm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::{i_ncycle, p_ncycle};

    fn p(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn tuple_sum_small() {
        // {1, 1}: b = 1 gives (1),(1) once, weight 2
        assert_eq!(weighted_tuple_sum(&[(1, 2)], 1), BigUint::from(2u32));
        // {1, 2}: b = 1 gives (1|2) weight 2 and (2|1) weight 3
        assert_eq!(weighted_tuple_sum(&[(1, 1), (2, 1)], 1), BigUint::from(5u32));
        assert_eq!(weighted_tuple_sum(&[(1, 1), (2, 1)], 0), BigUint::from(2u32));
        assert_eq!(weighted_tuple_sum(&[], 0), BigUint::from(1u32));
    }

    #[test]
    fn forced_base_values() {
        for n in 1..=7 {
            let f = factorial(n - 1);
            let long = IntegerPartition::single(n);
            let ones = IntegerPartition::ones(n);
            for m in 0..=n {
                assert_eq!(p_base_with(&long, &ones, m, SinitReading::Minus).unwrap(), f);
                assert_eq!(i_base_with(&long, &ones, m, IinitReading::Shifted).unwrap(), f);
            }
            for m in 0..=1 {
                assert_eq!(p_base_with(&ones, &long, m, SinitReading::Minus).unwrap(), f);
            }
        }
        assert!(p_base_with(&p("3"), &p("3"), 0, SinitReading::Minus).is_err());
        assert!(i_base_with(&p("3"), &p("2+1"), 0, IinitReading::Shifted).is_err());
    }

    #[test]
    fn printed_isolated_reading_overcounts() {
        let ones = IntegerPartition::ones(6);
        let long = IntegerPartition::single(6);
        assert_eq!(i_base_with(&ones, &long, 0, IinitReading::Printed).unwrap(), BigUint::from(840u32));
        assert_eq!(i_base_with(&ones, &long, 0, IinitReading::Shifted).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn readings_are_selected() {
        let (s, reports) = resolve_s_reading(Oracle::global(), 5).unwrap();
        assert_eq!(s, SinitReading::Minus);
        assert_eq!(reports[0].mismatches, 0);
        assert!(reports[1].mismatches > 0);
        let (i, _) = resolve_i_reading(Oracle::global(), 5).unwrap();
        assert_eq!(i, IinitReading::Shifted);
    }

    #[test]
    fn long_cycle_row_matches_closed_forms() {
        for n in 1..=9 {
            let long = IntegerPartition::single(n);
            for m in 0..=n {
                let pt = p_table(n, m, BaseValueSource::ClosedForm).unwrap();
                let it = i_table(n, m, BaseValueSource::ClosedForm).unwrap();
                for k in 1..=n {
                    assert_eq!(pt.get(&long, k), p_ncycle(n, m, k).unwrap(), "p n={n} m={m} k={k}");
                    if m < n {
                        assert_eq!(it.get(&long, k), i_ncycle(n, m, k).unwrap(), "i n={n} m={m} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_diagonal() {
        for n in 1..=6 {
            let ones = IntegerPartition::ones(n);
            for m in 0..=n {
                let expect = if m <= 1 { factorial(n - 1) } else { BigUint::zero() };
                assert_eq!(p_lambda(&ones, m, 1).unwrap(), expect);
                for k in 2..=n {
                    assert!(p_lambda(&ones, m, k).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn isolated_with_no_constraint_matches_separated() {
        for n in 1..=7 {
            let pt = p_table(n, 0, BaseValueSource::ClosedForm).unwrap();
            let it = i_table(n, 0, BaseValueSource::ClosedForm).unwrap();
            assert!(pt.diff(&it).is_empty());
        }
    }
}
