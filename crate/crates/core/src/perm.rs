//! Permutations of the ground set `[n] = {1, ..., n}`.
//!
//! All public interfaces speak 1-based elements. Composition is fixed as
//! `(p ∘ q)(x) = p(q(x))` everywhere in the crate, including diagonals of
//! plane permutations and products of long cycles in the oracle.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::IntegerPartition;

/// A bijection on `[n]`, stored 0-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-line form `π(1), ..., π(n)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty ground set".into()));
        }
        let mut seen = vec![false; n];
        let mut zero = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} outside [1, {n}]"
                )));
            }
            if seen[x - 1] {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            seen[x - 1] = true;
            zero.push(x - 1);
        }
        Ok(Permutation { images: zero })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_zero_based_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    /// Builds a permutation on `[n]` from disjoint cycles. Elements not
    /// mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("empty ground set".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n {
                    return Err(Error::InvalidPermutation(format!(
                        "element {x} outside [1, {n}]"
                    )));
                }
                if seen[x - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "element {x} appears in two cycles"
                    )));
                }
                seen[x - 1] = true;
                let next = cycle[(i + 1) % cycle.len()];
                images[x - 1] = next - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The long cycle `(seq[0] seq[1] ... seq[n-1])`.
    pub fn cycle_from_sequence(seq: &[usize]) -> Result<Self> {
        let n = seq.len();
        Self::from_cycles(n, &[seq.to_vec()]).and_then(|p| {
            if p.is_long_cycle() {
                Ok(p)
            } else {
                Err(Error::InvalidPermutation(format!(
                    "sequence {seq:?} is not a permutation of [{n}]"
                )))
            }
        })
    }

    /// Size of the ground set.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `π(x)` for `x ∈ [n]`. Panics outside the ground set.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// One-line form, 1-based.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub(crate) fn zero_based(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Canonical cycle form: every cycle starts at its minimum and cycles
    /// are sorted by minimum. Fixed points are included.
    pub fn cycles(&self) -> CycleForm {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleForm { cycles }
    }

    /// `C(π)`, the number of cycles including fixed points.
    pub fn cycle_count(&self) -> usize {
        cycle_labels(&self.images).1
    }

    pub fn cycle_type(&self) -> IntegerPartition {
        let parts = self.cycles().cycles.iter().map(Vec::len).collect();
        IntegerPartition::from_parts_unchecked(parts)
    }

    pub fn is_long_cycle(&self) -> bool {
        self.cycle_count() == 1
    }

    /// Parity of the permutation: `n - C(π)` even.
    pub fn is_even(&self) -> bool {
        (self.len() - self.cycle_count()) % 2 == 0
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .count()
    }

    /// True iff `1, ..., m` lie in pairwise distinct cycles.
    pub fn separates(&self, m: usize) -> Result<bool> {
        self.check_m(m)?;
        Ok(self.separation_level() >= m)
    }

    /// True iff `1, ..., m` are all fixed points.
    pub fn isolates(&self, m: usize) -> Result<bool> {
        self.check_m(m)?;
        Ok(self.isolation_level() >= m)
    }

    /// Largest `m` such that `1, ..., m` lie in distinct cycles.
    pub fn separation_level(&self) -> usize {
        separation_level(&self.images)
    }

    /// Largest `m` such that `1, ..., m` are fixed points.
    pub fn isolation_level(&self) -> usize {
        isolation_level(&self.images)
    }

    fn check_m(&self, m: usize) -> Result<()> {
        if m > self.len() {
            Err(Error::Domain(format!(
                "m = {m} exceeds the ground set size {}",
                self.len()
            )))
        } else {
            Ok(())
        }
    }
}

/// Labels each element with the index of its cycle; returns the labels and
/// the number of cycles.
pub(crate) fn cycle_labels(images: &[usize]) -> (Vec<usize>, usize) {
    let n = images.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut x = start;
        while label[x] == usize::MAX {
            label[x] = count;
            x = images[x];
        }
        count += 1;
    }
    (label, count)
}

pub(crate) fn separation_level(images: &[usize]) -> usize {
    let (label, _) = cycle_labels(images);
    let mut used = vec![false; images.len()];
    let mut level = 0;
    for &c in &label {
        if used[c] {
            break;
        }
        used[c] = true;
        level += 1;
    }
    level
}

pub(crate) fn isolation_level(images: &[usize]) -> usize {
    images
        .iter()
        .enumerate()
        .take_while(|&(i, &x)| i == x)
        .count()
}

fn is_bijection(images: &[usize]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&x| {
        x < seen.len() && !std::mem::replace(&mut seen[x], true)
    })
}

/// Rearranges `v` into the next lexicographic permutation. Returns false
/// (leaving `v` sorted ascending) once the last permutation is passed.
pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycles().fmt(f)
    }
}

/// Parses either cycle form `(1 3)(2 4)` or one-line form `3,4,1,2`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('(') {
            let form: CycleForm = t.parse()?;
            let n = form.max_element();
            form.to_permutation(n)
        } else {
            let mut images = Vec::new();
            let mut offset = 0;
            for tok in t.split(',') {
                let trimmed = tok.trim();
                let value = trimmed.parse::<usize>().map_err(|_| Error::Parse {
                    position: offset,
                    message: format!("expected an integer, found {trimmed:?}"),
                })?;
                images.push(value);
                offset += tok.len() + 1;
            }
            Permutation::from_images(&images)
        }
    }
}

/// Disjoint cycles, each a cyclically ordered list of 1-based elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleForm {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    /// Rotates each cycle to its minimum and sorts cycles by minimum.
    pub fn canonical(&self) -> CycleForm {
        let mut cycles: Vec<Vec<usize>> = self
            .cycles
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| {
                let pos = c
                    .iter()
                    .enumerate()
                    .min_by_key(|&(_, x)| *x)
                    .map(|(i, _)| i)
                    .unwrap_or(0);
                let mut r = c.clone();
                r.rotate_left(pos);
                r
            })
            .collect();
        cycles.sort_by_key(|c| c[0]);
        CycleForm { cycles }
    }

    pub fn max_element(&self) -> usize {
        self.cycles.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Converts to a permutation on `[n]`; unmentioned elements are fixed.
    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        Permutation::from_cycles(n, &self.cycles)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in &self.cycles {
            write!(f, "(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut number: Option<(usize, usize)> = None;
        let flush = |number: &mut Option<(usize, usize)>,
                     current: &mut Option<Vec<usize>>|
         -> Result<()> {
            if let Some((start, value)) = number.take() {
                match current {
                    Some(c) => c.push(value),
                    None => {
                        return Err(Error::Parse {
                            position: start,
                            message: "element outside parentheses".into(),
                        })
                    }
                }
            }
            Ok(())
        };
        for (pos, ch) in s.char_indices() {
            match ch {
                '0'..='9' => {
                    let d = ch as usize - '0' as usize;
                    number = Some(match number {
                        Some((start, v)) => (start, v * 10 + d),
                        None => (pos, d),
                    });
                }
                '(' => {
                    flush(&mut number, &mut current)?;
                    if current.is_some() {
                        return Err(Error::Parse {
                            position: pos,
                            message: "nested '('".into(),
                        });
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut number, &mut current)?;
                    match current.take() {
                        Some(c) if !c.is_empty() => cycles.push(c),
                        Some(_) => {
                            return Err(Error::Parse {
                                position: pos,
                                message: "empty cycle".into(),
                            })
                        }
                        None => {
                            return Err(Error::Parse {
                                position: pos,
                                message: "unmatched ')'".into(),
                            })
                        }
                    }
                }
                ' ' | ',' | '\t' => flush(&mut number, &mut current)?,
                _ => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unexpected character {ch:?}"),
                    })
                }
            }
        }
        if current.is_some() || number.is_some() {
            return Err(Error::Parse {
                position: s.len(),
                message: "unterminated cycle".into(),
            });
        }
        Ok(CycleForm { cycles })
    }
}

/// All `(n-1)!` long cycles on `[n]`, in canonical order: the cycle written
/// from 1, remaining elements in lexicographic sequence order.
pub fn enumerate_n_cycles(n: usize) -> NCycles {
    NCycles {
        rest: (2..=n).collect(),
        done: n == 0,
    }
}

/// Iterator returned by [`enumerate_n_cycles`].
pub struct NCycles {
    rest: Vec<usize>,
    done: bool,
}

impl Iterator for NCycles {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let n = self.rest.len() + 1;
        let mut images = vec![0; n];
        let mut prev = 0;
        for &x in &self.rest {
            images[prev] = x - 1;
            prev = x - 1;
        }
        images[prev] = 0;
        self.done = !next_permutation(&mut self.rest);
        Some(Permutation::from_zero_based_unchecked(images))
    }
}

/// All `n!` permutations of `[n]` in lexicographic one-line order.
pub fn enumerate_permutations(n: usize) -> Permutations {
    Permutations {
        current: (0..n).collect(),
        done: n == 0,
    }
}

/// Iterator returned by [`enumerate_permutations`].
pub struct Permutations {
    current: Vec<usize>,
    done: bool,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = Permutation::from_zero_based_unchecked(self.current.clone());
        self.done = !next_permutation(&mut self.current);
        Some(out)
    }
}

/// The free-function form of [`Permutation::compose`].
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = perm("(1 3)(2)");
        assert_eq!(Permutation::identity(3).compose(&q).unwrap(), q);
        let c = perm("(1 2 3)");
        let c2 = perm("(1 3 2)");
        assert!(c.compose(&c2).unwrap().is_identity());
        assert_eq!(c.compose(&c).unwrap(), c2);
    }

    #[test]
    fn compose_convention_applies_right_factor_first() {
        let p = perm("(1 2)(3)");
        let q = perm("(1)(2 3)");
        // (p∘q)(2) = p(q(2)) = p(3) = 3
        assert_eq!(p.compose(&q).unwrap().apply(2), 3);
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, Error::SizeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(4).cycle_type().parts(), &[1, 1, 1, 1]);
        assert_eq!(perm("(1 2 3)").cycle_type().parts(), &[3]);
        let p = Permutation::from_cycles(6, &[vec![1, 5, 6], vec![3, 4, 2]]).unwrap();
        assert_eq!(p.to_string(), "(1 5 6)(2 3 4)");
        assert_eq!(p.cycle_type().parts(), &[3, 3]);
        assert_eq!(p.cycle_count(), 2);
    }

    #[test]
    fn separation_examples() {
        let id = Permutation::identity(4);
        assert!(id.separates(4).unwrap());
        assert!(!perm("(1 2)(3)(4)").separates(2).unwrap());
        assert!(!perm("(1 3 2)(4)").separates(2).unwrap());
        assert!(perm("(1 3)(2 4)").separates(2).unwrap());
        assert!(matches!(id.separates(5), Err(Error::Domain(_))));
    }

    #[test]
    fn isolation_examples() {
        assert!(Permutation::identity(5).isolates(3).unwrap());
        assert!(!perm("(1 2)").isolates(1).unwrap());
        assert!(perm("(1)(2)(3 4)").isolates(2).unwrap());
        assert!(matches!(perm("(1 2)").isolates(3), Err(Error::Domain(_))));
    }

    #[test]
    fn n_cycle_enumeration() {
        let one: Vec<_> = enumerate_n_cycles(1).collect();
        assert_eq!(one, vec![Permutation::identity(1)]);
        let three: Vec<String> = enumerate_n_cycles(3).map(|p| p.to_string()).collect();
        assert_eq!(three, vec!["(1 2 3)", "(1 3 2)"]);
        let five: Vec<_> = enumerate_n_cycles(5).collect();
        assert_eq!(five.len(), 24);
        assert!(five.iter().all(|p| p.cycle_type().parts() == [5]));
    }

    #[test]
    fn permutation_enumeration_counts() {
        assert_eq!(enumerate_permutations(5).count(), 120);
        let mut all: Vec<_> = enumerate_permutations(4).collect();
        all.dedup();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn text_forms_parse() {
        assert_eq!(perm("2,3,1"), perm("(1 2 3)"));
        assert_eq!(perm(" (1 3)(2 4) ").one_line(), vec![3, 4, 1, 2]);
        assert!(matches!(
            "(1 2".parse::<Permutation>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "(1 2)(2 3)".parse::<Permutation>(),
            Err(Error::InvalidPermutation(_))
        ));
        match "1,x,3".parse::<Permutation>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn canonical_cycle_form() {
        let form = CycleForm {
            cycles: vec![vec![5, 4, 2], vec![6, 1, 3]],
        };
        assert_eq!(form.canonical().to_string(), "(1 3 6)(2 5 4)");
    }
}
