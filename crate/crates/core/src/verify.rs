//! Formula-versus-oracle suites.
//!
//! Each check records the formula value, the reference value and a
//! verdict. A suite never stops at the first mismatch.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::counting::{
    alpha_separated_count, binom, c_sep, factorial, fixed_point_distribution, i_base, i_ncycle,
    i_table, iso_prob_ncycle, p_base, p_ncycle, p_table, prop_recurrence_holds, sep_prob_ncycle,
    zagier_stanley, BaseValueSource,
};
use crate::error::{Error, Result};
use crate::oracle::{CensusFilter, Oracle};
use crate::partition::{compositions_of, partitions_of, IntegerPartition};
use crate::perm::{enumerate_n_cycles, enumerate_permutations};
use crate::plane::PlanePermutation;
use crate::rational::ExactRational;
use crate::table::TableKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    ClosedForms,
    Recurrences,
    Identities,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-forms" => Ok(Suite::ClosedForms),
            "recurrences" => Ok(Suite::Recurrences),
            "identities" => Ok(Suite::Identities),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown suite {s:?}"),
            }),
        }
    }
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub label: String,
    pub formula: String,
    pub oracle: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn mismatches(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn is_clean(&self) -> bool {
        self.mismatches().next().is_none()
    }

    fn record(&mut self, suite: &'static str, label: String, formula: impl fmt::Display, oracle: impl fmt::Display) {
        let formula = formula.to_string();
        let oracle = oracle.to_string();
        let pass = formula == oracle;
        self.checks.push(Check {
            suite,
            label,
            formula,
            oracle,
            pass,
        });
    }

    /// Corrupts the formula side of the first check, as a harness self-test.
    fn inject_fault(&mut self) {
        if let Some(c) = self.checks.first_mut() {
            c.formula = match c.formula.parse::<BigInt>() {
                Ok(v) => (v + BigInt::one()).to_string(),
                Err(_) => format!("{}+fault", c.formula),
            };
            c.pass = c.formula == c.oracle;
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let verdict = if c.pass { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "{verdict} [{}] {}: formula={} oracle={}",
                c.suite, c.label, c.formula, c.oracle
            )?;
        }
        let bad = self.mismatches().count();
        write!(f, "{} checks, {} mismatches", self.checks.len(), bad)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub suite: Suite,
    pub inject_fault: bool,
}

pub fn run(oracle: &Oracle, opts: &VerifyOptions) -> Result<Report> {
    if opts.max_n > oracle.cap() {
        return Err(Error::OracleCap {
            n: opts.max_n,
            cap: oracle.cap(),
        });
    }
    let mut report = Report::default();
    if opts.suite.includes(Suite::ClosedForms) {
        closed_forms(oracle, opts.max_n, &mut report)?;
    }
    if opts.suite.includes(Suite::Recurrences) {
        recurrences(oracle, opts.max_n, &mut report)?;
    }
    if opts.suite.includes(Suite::Identities) {
        identities(oracle, opts.max_n, &mut report)?;
    }
    if opts.inject_fault {
        report.inject_fault();
    }
    Ok(report)
}

fn square_factorial(n: usize) -> BigUint {
    let f = factorial(n - 1);
    &f * &f
}

/// Closed forms for long-cycle diagonals, probabilities, α-separation and
/// fixed points.
pub fn closed_forms(oracle: &Oracle, max_n: usize, report: &mut Report) -> Result<()> {
    const S: &str = "closed-forms";
    for n in 1..=max_n {
        let long = IntegerPartition::single(n);
        let pairs = square_factorial(n);
        for m in 0..=n {
            let mut sep_total = BigUint::zero();
            for k in 1..=n {
                let o = oracle.p(&long, m, k)?;
                report.record(S, format!("p_ncycle n={n} m={m} k={k}"), p_ncycle(n, m, k)?, &o);
                sep_total += o;
                if m < n {
                    report.record(
                        S,
                        format!("i_ncycle n={n} m={m} k={k}"),
                        i_ncycle(n, m, k)?,
                        oracle.i(&long, m, k)?,
                    );
                }
            }
            report.record(
                S,
                format!("sep_prob n={n} m={m}"),
                sep_prob_ncycle(n, m)?,
                ExactRational::ratio(&sep_total, &pairs)?,
            );
            if m < n {
                let iso_total: BigUint = (1..=n).map(|k| oracle.i(&long, m, k)).sum::<Result<_>>()?;
                report.record(
                    S,
                    format!("iso_prob n={n} m={m}"),
                    iso_prob_ncycle(n, m)?,
                    ExactRational::ratio(&iso_total, &pairs)?,
                );
            }
        }
        for k in 1..=n {
            report.record(
                S,
                format!("zagier_stanley n={n} k={k}"),
                zagier_stanley(n, k)?,
                oracle.p(&long, 0, k)?,
            );
        }
        for alpha in compositions_of(n) {
            report.record(
                S,
                format!("alpha {alpha}"),
                alpha_separated_count(&alpha)?,
                oracle.alpha(&alpha)?,
            );
        }
        if n >= 2 {
            let counts = oracle.fixed_point_distribution(n)?;
            for (i, p) in fixed_point_distribution(n)?.into_iter().enumerate() {
                let c = counts.get(&i).cloned().unwrap_or_default();
                report.record(
                    S,
                    format!("fixed points n={n} i={i}"),
                    p,
                    ExactRational::ratio(&c, &pairs)?,
                );
            }
        }
    }
    Ok(())
}

/// General-λ tables from the recurrences with closed-form base values, and
/// the base values themselves.
pub fn recurrences(oracle: &Oracle, max_n: usize, report: &mut Report) -> Result<()> {
    const S: &str = "recurrences";
    for n in 1..=max_n {
        let parts = partitions_of(n);
        for m in 0..=n {
            for kind in [TableKind::Separated, TableKind::Isolated] {
                let ours = match kind {
                    TableKind::Separated => p_table(n, m, BaseValueSource::ClosedForm)?,
                    TableKind::Isolated => i_table(n, m, BaseValueSource::ClosedForm)?,
                };
                let truth = oracle.table(n, m, kind)?;
                let name = match kind {
                    TableKind::Separated => "p_lambda",
                    TableKind::Isolated => "i_lambda",
                };
                for lambda in &parts {
                    for k in 1..=n {
                        report.record(
                            S,
                            format!("{name} λ={lambda} m={m} k={k}"),
                            ours.get(lambda, k),
                            truth.get(lambda, k),
                        );
                    }
                }
            }
            for lambda in &parts {
                for mu in parts.iter().filter(|mu| mu.length() + lambda.length() == n + 1) {
                    report.record(
                        S,
                        format!("p_base λ={lambda} μ={mu} m={m}"),
                        p_base(lambda, mu, m)?,
                        oracle.p_by_type(lambda, mu, m)?,
                    );
                    report.record(
                        S,
                        format!("i_base λ={lambda} μ={mu} m={m}"),
                        i_base(lambda, mu, m)?,
                        oracle.i_by_type(lambda, mu, m)?,
                    );
                }
            }
        }
    }
    Ok(())
}

/// Largest `n` at which the reflection identity is checked exhaustively.
const EXHAUSTIVE_REFLECTION_N: usize = 6;

/// Identities that hold for every plane permutation or every stratum.
pub fn identities(oracle: &Oracle, max_n: usize, report: &mut Report) -> Result<()> {
    const S: &str = "identities";
    for n in 1..=max_n.min(EXHAUSTIVE_REFLECTION_N) {
        let (total, reflection_ok, bound_ok) = reflection_exhaustive(n)?;
        report.record(S, format!("reflection n={n}"), reflection_ok, total);
        report.record(S, format!("cycle bound n={n}"), bound_ok, total);
    }
    for n in 1..=max_n {
        eq_u(oracle, n, report)?;
        exceedance_totals(oracle, n, report)?;
        for m in 0..=n {
            for k in 1..=n {
                report.record(
                    S,
                    format!("recurrence fixed point n={n} m={m} k={k}"),
                    prop_recurrence_holds(n, m, k)?,
                    true,
                );
            }
        }
    }
    Ok(())
}

/// Returns `(plane permutations, reflection holds, C(π)+C(D) ≤ n+1 holds)`.
pub fn reflection_exhaustive(n: usize) -> Result<(u64, u64, u64)> {
    let mut total = 0;
    let mut reflection_ok = 0;
    let mut bound_ok = 0;
    for s in enumerate_n_cycles(n) {
        for pi in enumerate_permutations(n) {
            let pp = PlanePermutation::new(&s, pi)?;
            total += 1;
            if reflection_holds(&pp) {
                reflection_ok += 1;
            }
            if pp.pi().cycle_count() + pp.diagonal().cycle_count() <= n + 1 {
                bound_ok += 1;
            }
        }
    }
    Ok((total, reflection_ok, bound_ok))
}

/// `Ne(p) + Ne(p′) = n + 1 - C(π) - C(D)`.
pub fn reflection_holds(pp: &PlanePermutation) -> bool {
    let lhs = pp.ntae_count() + pp.reflect().ntae_count();
    let rhs = (pp.n() + 1) as i64
        - pp.pi().cycle_count() as i64
        - pp.diagonal().cycle_count() as i64;
    lhs as i64 == rhs
}

fn coefficient(m: usize, k: usize, j: usize) -> BigUint {
    let top = (k + 2 * j) as i64 - m as i64;
    binom(top, 2 * j as i64) * m + binom(top, 2 * j as i64 + 1)
}

/// `Σ_a (n-k-a) p^{λ,a}_{m,k} = Σ_{j≥1} coeff·p^λ_{m,k+2j}` for every `λ`.
fn eq_u(oracle: &Oracle, n: usize, report: &mut Report) -> Result<()> {
    for lambda in partitions_of(n) {
        for m in 0..=n {
            for k in 1..=n {
                let strat = oracle.p_stratified(&lambda, m, k)?;
                let lhs: BigInt = strat
                    .iter()
                    .map(|(&a, v)| BigInt::from(n as i64 - k as i64 - a as i64) * BigInt::from(v.clone()))
                    .sum();
                let mut rhs = BigUint::zero();
                let mut j = 1;
                while k + 2 * j <= n {
                    rhs += coefficient(m, k, j) * oracle.p(&lambda, m, k + 2 * j)?;
                    j += 1;
                }
                report.record("identities", format!("stratified exceedances λ={lambda} m={m} k={k}"), lhs, rhs);
            }
        }
    }
    Ok(())
}

/// Total exceedances over all diagonals, three ways: enumerated, by direct
/// count, and from the closed `C_m` sums.
fn exceedance_totals(oracle: &Oracle, n: usize, report: &mut Report) -> Result<()> {
    let census = oracle.census(n)?;
    let f = factorial(n - 1);
    for m in 0..=n {
        for k in 1..=n {
            let strat = census.count_by_exceedances(&CensusFilter::separated(m).vertical_cycles(k))?;
            let counted: BigUint = strat.iter().map(|(&a, v)| v * a).sum();
            let direct = if m < n {
                let pairs = binom((n - m) as i64, 2) + BigUint::from(m * (n - m));
                &f * pairs * c_sep(n - 1, k, m)?
            } else {
                BigUint::zero()
            };
            let mut from_sums = BigInt::from(n as i64 - k as i64) * BigInt::from(&f * c_sep(n, k, m)?);
            let mut j = 1;
            while k + 2 * j <= n {
                from_sums -= BigInt::from(coefficient(m, k, j) * &f * c_sep(n, k + 2 * j, m)?);
                j += 1;
            }
            let label = format!("exceedance total n={n} m={m} k={k}");
            report.record("identities", format!("{label} (direct)"), &direct, &counted);
            report.record("identities", format!("{label} (sums)"), from_sums, &counted);
        }
    }
    Ok(())
}

/// Ratio of two α-separated counts, for the symmetry spot check.
pub fn alpha_ratio(a: &crate::partition::Composition, b: &crate::partition::Composition) -> Result<ExactRational> {
    ExactRational::ratio(&alpha_separated_count(a)?, &alpha_separated_count(b)?)
}

/// `Π αᵢ! / Π βᵢ!`.
pub fn factorial_ratio(a: &crate::partition::Composition, b: &crate::partition::Composition) -> Result<ExactRational> {
    let prod = |c: &crate::partition::Composition| {
        c.parts().iter().fold(BigUint::one(), |acc, &x| acc * factorial(x))
    };
    ExactRational::ratio(&prod(a), &prod(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_are_clean() {
        let opts = VerifyOptions {
            max_n: 4,
            suite: Suite::All,
            inject_fault: false,
        };
        let report = run(Oracle::global(), &opts).unwrap();
        assert!(report.is_clean(), "{report}");
        assert!(report.checks.len() > 100);
    }

    #[test]
    fn injected_fault_is_named() {
        let opts = VerifyOptions {
            max_n: 3,
            suite: Suite::ClosedForms,
            inject_fault: true,
        };
        let report = run(Oracle::global(), &opts).unwrap();
        let bad: Vec<_> = report.mismatches().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(bad[0].label, "p_ncycle n=1 m=0 k=1");
    }

    #[test]
    fn cap_is_respected() {
        let oracle = Oracle::with_cap(4).unwrap();
        let opts = VerifyOptions {
            max_n: 5,
            suite: Suite::All,
            inject_fault: false,
        };
        assert!(matches!(run(&oracle, &opts), Err(Error::OracleCap { .. })));
    }
}
