//! Integer partitions (cycle types), the splitting relation `μ ▷_k λ` with
//! its merge multiplicity `κ_{μ,λ}`, and integer compositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A partition of `n` as a non-increasing sequence of positive parts.
///
/// The derived ordering is lexicographic on the parts; [`partitions_of`]
/// lists partitions in the reverse of that order (`4`, `3+1`, `2+2`, ...).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("zero part".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(IntegerPartition { parts })
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntegerPartition { parts }
    }

    /// The one-part partition `n¹`.
    pub fn single(n: usize) -> Self {
        IntegerPartition { parts: vec![n] }
    }

    /// `1ⁿ`.
    pub fn ones(n: usize) -> Self {
        IntegerPartition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `ℓ(λ)`, the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// `ℓ₁(λ)`, the number of parts greater than one.
    pub fn nontrivial_length(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 1).count()
    }

    /// `a_i`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplicity notation, e.g. `1^2 2^1 3^1`.
    pub fn to_multiplicity_string(&self) -> String {
        self.multiplicities()
            .iter()
            .map(|(p, c)| format!("{p}^{c}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Merges the parts at `indices` into one part.
    fn merge_at(&self, indices: &[usize]) -> IntegerPartition {
        let merged: usize = indices.iter().map(|&i| self.parts[i]).sum();
        let mut parts: Vec<usize> = self
            .parts
            .iter()
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, &p)| p)
            .collect();
        parts.push(merged);
        IntegerPartition::from_parts_unchecked(parts)
    }
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join("+"))
    }
}

/// Accepts `3+2+1+1` or the multiplicity form `1^2 2^1 3^1`.
impl FromStr for IntegerPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty partition".into(),
            });
        }
        let lead = s.len() - s.trim_start().len();
        let mut parts = Vec::new();
        if t.contains('^') {
            for (start, tok) in whitespace_tokens(t) {
                let (value, count) = tok.split_once('^').ok_or_else(|| Error::Parse {
                    position: lead + start,
                    message: format!("expected part^multiplicity, found {tok:?}"),
                })?;
                let value = parse_positive(value, lead + start)?;
                let count = parse_count(count, lead + start + tok.find('^').unwrap() + 1)?;
                parts.extend(std::iter::repeat(value).take(count));
            }
        } else {
            for (start, tok) in split_tokens(t, '+') {
                parts.push(parse_positive(tok, lead + start)?);
            }
        }
        IntegerPartition::new(parts)
    }
}

/// Splits on `sep`, returning each trimmed token with its byte offset.
fn split_tokens(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in s.split(sep) {
        let lead = raw.len() - raw.trim_start().len();
        out.push((offset + lead, raw.trim()));
        offset += raw.len() + sep.len_utf8();
    }
    out
}

fn whitespace_tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((st, &s[st..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

fn parse_count(tok: &str, position: usize) -> Result<usize> {
    tok.trim().parse::<usize>().map_err(|_| Error::Parse {
        position,
        message: format!("expected a non-negative integer, found {tok:?}"),
    })
}

fn parse_positive(tok: &str, position: usize) -> Result<usize> {
    match parse_count(tok, position)? {
        0 => Err(Error::Parse {
            position,
            message: "parts must be positive".into(),
        }),
        v => Ok(v),
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<IntegerPartition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<IntegerPartition>,
) {
    if remaining == 0 {
        if !current.is_empty() {
            out.push(IntegerPartition {
                parts: current.clone(),
            });
        }
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` with exactly `k` parts, reverse-lexicographic.
pub fn partitions_with_length(n: usize, k: usize) -> Vec<IntegerPartition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.length() == k)
        .collect()
}

/// `κ_{μ,λ}`: the number of ways to choose `k` parts of `μ` (equal parts
/// distinguished) whose merger yields `λ`. Zero encodes that `μ ▷_k λ`
/// does not hold.
pub fn merge_multiplicity(mu: &IntegerPartition, lambda: &IntegerPartition, k: usize) -> BigUint {
    BigUint::from(merge_count(mu, lambda, k))
}

fn merge_count(mu: &IntegerPartition, lambda: &IntegerPartition, k: usize) -> u64 {
    if k == 0 || k > mu.length() || mu.n() != lambda.n() || mu.length() + 1 != lambda.length() + k {
        return 0;
    }
    let mut count = 0;
    for_each_subset(mu.length(), k, |indices| {
        if mu.merge_at(indices) == *lambda {
            count += 1;
        }
    });
    count
}

/// Calls `f` with every `k`-subset of `0..len` in lexicographic order.
fn for_each_subset(len: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > len {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == len - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All `μ` with `μ ▷_k λ`, i.e. obtained by splitting one part of `λ` into
/// `k` parts, each paired with `κ_{μ,λ}`.
pub fn splits_of(lambda: &IntegerPartition, k: usize) -> Vec<(IntegerPartition, BigUint)> {
    if k == 0 {
        return Vec::new();
    }
    let mut candidates = BTreeSet::new();
    let distinct: BTreeSet<usize> = lambda.parts.iter().copied().collect();
    for &part in &distinct {
        if part < k {
            continue;
        }
        let mut rest = lambda.parts.clone();
        let pos = rest.iter().position(|&p| p == part).unwrap();
        rest.remove(pos);
        for piece in partitions_with_length(part, k) {
            let mut parts = rest.clone();
            parts.extend_from_slice(piece.parts());
            candidates.insert(IntegerPartition::from_parts_unchecked(parts));
        }
    }
    candidates
        .into_iter()
        .rev()
        .map(|mu| {
            let kappa = merge_multiplicity(&mu, lambda, k);
            debug_assert!(kappa > BigUint::from(0u32));
            (mu, kappa)
        })
        .collect()
}

/// An integer composition `α = (α₁, ..., α_k)` of `n`: ordered positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition("zero part".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The block index (0-based) of each element of `[n]`, 0-based.
    pub fn block_of(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(b, &len)| std::iter::repeat(b).take(len))
            .collect()
    }

    /// The blocks `B_i` as consecutive 1-based intervals.
    pub fn blocks(&self) -> Vec<std::ops::RangeInclusive<usize>> {
        let mut start = 1;
        self.parts
            .iter()
            .map(|&len| {
                let r = start..=start + len - 1;
                start += len;
                r
            })
            .collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Parses `1,3,2`.
impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for (start, tok) in split_tokens(s, ',') {
            parts.push(parse_positive(tok, start)?);
        }
        Composition::new(parts)
    }
}

/// All `2^{n-1}` compositions of `n`.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    if n == 0 {
        return Vec::new();
    }
    (0u64..1 << (n - 1))
        .map(|mask| {
            let mut parts = Vec::new();
            let mut len = 1;
            for i in 0..n - 1 {
                if mask >> i & 1 == 1 {
                    parts.push(len);
                    len = 1;
                } else {
                    len += 1;
                }
            }
            parts.push(len);
            Composition { parts }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(1), vec![p("1")]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(7).len(), 15);
        let order: Vec<String> = partitions_of(4).iter().map(|x| x.to_string()).collect();
        assert_eq!(order, ["4", "3+1", "2+2", "2+1+1", "1+1+1+1"]);
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(merge_multiplicity(&p("2+2+1+1"), &p("3+2+1"), 2), BigUint::from(4u32));
        assert_eq!(merge_multiplicity(&p("1+1+1"), &p("2+1"), 2), BigUint::from(3u32));
        let lam = p("3+2+2+1");
        assert_eq!(merge_multiplicity(&lam, &lam, 1), BigUint::from(4u32));
        assert_eq!(merge_multiplicity(&p("2+2"), &p("3+1"), 2), BigUint::from(0u32));
    }

    #[test]
    fn splits_examples() {
        assert_eq!(splits_of(&p("3"), 3), vec![(p("1+1+1"), BigUint::from(1u32))]);
        assert!(splits_of(&p("2"), 3).is_empty());
        assert_eq!(splits_of(&p("4"), 3), vec![(p("2+1+1"), BigUint::from(1u32))]);
        // 2+1+1 merges back to 3+1 by joining the 2 with either 1
        let s = splits_of(&p("3+1"), 2);
        assert_eq!(s, vec![(p("2+1+1"), BigUint::from(2u32))]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("1^2 2^1 3^1"), p("3+2+1+1"));
        assert_eq!(p("1+3+1+2").to_string(), "3+2+1+1");
        assert_eq!(p("3+2+1+1").to_multiplicity_string(), "1^2 2^1 3^1");
        match "3+x+1".parse::<IntegerPartition>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!("3++1".parse::<IntegerPartition>(), Err(Error::Parse { .. })));
        assert!(matches!("3+0".parse::<IntegerPartition>(), Err(Error::Parse { .. })));
        assert!(matches!("2^".parse::<IntegerPartition>(), Err(Error::Parse { .. })));
    }

    #[test]
    fn length_statistics() {
        let lam = p("3+2+1+1");
        assert_eq!(lam.length(), 4);
        assert_eq!(lam.nontrivial_length(), 2);
        assert_eq!(lam.multiplicity(1), 2);
        assert_eq!(lam.n(), 7);
    }

    #[test]
    fn compositions() {
        assert_eq!(compositions_of(4).len(), 8);
        let a: Composition = "1,3".parse().unwrap();
        assert_eq!(a.block_of(), vec![0, 1, 1, 1]);
        assert_eq!(a.blocks(), vec![1..=1, 2..=4]);
        assert!("1,,3".parse::<Composition>().is_err());
    }
}
