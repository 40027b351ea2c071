//! Plane permutations: a long cycle `s`, written as a linear sequence
//! `s_0 s_1 ... s_{n-1}`, paired with an arbitrary permutation `π`.
//!
//! The two-row array has `s_i` on top and `π(s_i)` below it. Reading the
//! array diagonally (bottom of column `i-1` to top of column `i`,
//! cyclically) gives the diagonal `D = s ∘ π⁻¹`. The sequence order of `s`
//! defines the linear order `<_s` used for exceedances.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanePermutation {
    seq: Vec<usize>,
    pi: Permutation,
}

/// Exceedances, trivial anti-exceedances and NTAEs of a plane permutation.
/// The three sets partition the ground set.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Classification {
    pub exceedances: BTreeSet<usize>,
    pub trivial: BTreeSet<usize>,
    pub ntaes: BTreeSet<usize>,
}

impl PlanePermutation {
    /// Pairs the long cycle `s` with `pi`, anchoring the sequence at 1.
    pub fn new(s: &Permutation, pi: Permutation) -> Result<Self> {
        if !s.is_long_cycle() {
            return Err(Error::Domain(format!("{s} is not a long cycle")));
        }
        let mut seq = Vec::with_capacity(s.len());
        let mut x = 1;
        for _ in 0..s.len() {
            seq.push(x);
            x = s.apply(x);
        }
        Self::from_sequence(seq, pi)
    }

    /// Uses `seq` verbatim as the top row, so `seq[0]` is the leftmost
    /// element even when it is not 1.
    pub fn from_sequence(seq: Vec<usize>, pi: Permutation) -> Result<Self> {
        if seq.len() != pi.len() {
            return Err(Error::SizeMismatch {
                left: seq.len(),
                right: pi.len(),
            });
        }
        // validates that seq is a permutation of [n]
        Permutation::from_images(&seq)?;
        Ok(PlanePermutation { seq, pi })
    }

    /// Builds from a two-row array: `bottom[i] = π(top[i])`.
    pub fn from_rows(top: &[usize], bottom: &[usize]) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::SizeMismatch {
                left: top.len(),
                right: bottom.len(),
            });
        }
        let n = top.len();
        let mut images = vec![0; n];
        for (&t, &b) in top.iter().zip(bottom) {
            if t == 0 || t > n {
                return Err(Error::InvalidPermutation(format!("{t} outside [1, {n}]")));
            }
            images[t - 1] = b;
        }
        let pi = Permutation::from_images(&images)?;
        Self::from_sequence(top.to_vec(), pi)
    }

    /// A uniformly random plane permutation anchored at 1.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut rest: Vec<usize> = (2..=n).collect();
        rest.shuffle(rng);
        let mut seq = vec![1];
        seq.extend(rest);
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        let pi = Permutation::from_images(&images).expect("shuffled identity");
        PlanePermutation { seq, pi }
    }

    pub fn n(&self) -> usize {
        self.seq.len()
    }

    /// The top row `s_0, ..., s_{n-1}`.
    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    /// The top row as a long cycle.
    pub fn s(&self) -> Permutation {
        Permutation::cycle_from_sequence(&self.seq).expect("sequence is validated")
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    /// The bottom row `π(s_0), ..., π(s_{n-1})`.
    pub fn bottom_row(&self) -> Vec<usize> {
        self.seq.iter().map(|&x| self.pi.apply(x)).collect()
    }

    /// Positions in the top row, indexed by element (index 0 unused).
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.n() + 1];
        for (i, &x) in self.seq.iter().enumerate() {
            pos[x] = i;
        }
        pos
    }

    /// `D = s ∘ π⁻¹`.
    pub fn diagonal(&self) -> Permutation {
        self.s()
            .compose(&self.pi.inverse())
            .expect("same ground set")
    }

    pub fn classify(&self) -> Classification {
        let pos = self.positions();
        let mut out = Classification::default();
        for &x in &self.seq {
            if pos[x] < pos[self.pi.apply(x)] {
                out.exceedances.insert(x);
            }
        }
        let inv = self.pi.inverse();
        for cycle in &self.pi.cycles().cycles {
            let min = *cycle.iter().min_by_key(|&&x| pos[x]).unwrap();
            out.trivial.insert(inv.apply(min));
        }
        for &x in &self.seq {
            if !out.exceedances.contains(&x) && !out.trivial.contains(&x) {
                out.ntaes.insert(x);
            }
        }
        out
    }

    pub fn exceedance_count(&self) -> usize {
        let pos = self.positions();
        self.seq
            .iter()
            .filter(|&&x| pos[x] < pos[self.pi.apply(x)])
            .count()
    }

    /// `Ne(p)`, the number of non-trivial anti-exceedances. Every π-cycle
    /// has exactly one trivial anti-exceedance, so this is `n - a - C(π)`.
    pub fn ntae_count(&self) -> usize {
        self.n() - self.exceedance_count() - self.pi.cycle_count()
    }

    /// Swaps the adjacent blocks `[s_i..s_j]` and `[s_{j+1}..s_k]` of the top
    /// row while keeping the diagonal fixed. Indices are 0-based positions
    /// with `1 <= i <= j < k <= n-1`.
    pub fn transpose_blocks(&self, i: usize, j: usize, k: usize) -> Result<Self> {
        let n = self.n();
        if !(1 <= i && i <= j && j < k && k < n) {
            return Err(Error::Domain(format!(
                "block indices ({i}, {j}, {k}) need 1 <= i <= j < k <= {}",
                n.saturating_sub(1)
            )));
        }
        let mut seq = Vec::with_capacity(n);
        seq.extend_from_slice(&self.seq[..i]);
        seq.extend_from_slice(&self.seq[j + 1..=k]);
        seq.extend_from_slice(&self.seq[i..=j]);
        seq.extend_from_slice(&self.seq[k + 1..]);
        // D = s∘π⁻¹ fixed, so the new vertical is D⁻¹ ∘ s^h.
        let d_inv = self.diagonal().inverse();
        let s_h = Permutation::cycle_from_sequence(&seq)?;
        let pi = d_inv.compose(&s_h)?;
        Ok(PlanePermutation { seq, pi })
    }

    /// `(s⁻¹, D⁻¹)`, re-anchored so its top row starts at the same element.
    pub fn reflect(&self) -> Self {
        let mut seq = Vec::with_capacity(self.n());
        seq.push(self.seq[0]);
        seq.extend(self.seq[1..].iter().rev());
        PlanePermutation {
            seq,
            pi: self.diagonal().inverse(),
        }
    }

    /// Doubles the ground set: `ī` (encoded `n + i`) is placed right after
    /// `i` in the top row, and the bottom row under each `ī` is filled so the
    /// diagonal becomes a fixed-point-free involution pairing each element
    /// of `[n]` with a barred one.
    pub fn hat(&self) -> Self {
        let n = self.n();
        let inv = self.pi.inverse();
        let mut seq = Vec::with_capacity(2 * n);
        let mut images = vec![0; 2 * n];
        for (idx, &x) in self.seq.iter().enumerate() {
            seq.push(x);
            seq.push(n + x);
            images[x - 1] = self.pi.apply(x);
            let next = self.seq[(idx + 1) % n];
            images[n + x - 1] = n + inv.apply(next);
        }
        let pi = Permutation::from_images(&images).expect("hat vertical is a bijection");
        PlanePermutation { seq, pi }
    }

    /// Two-row text rendering. Elements above `bar_from` print as `i'`
    /// where `i` is the element minus `bar_from`.
    pub fn render_with_bars(&self, bar_from: Option<usize>) -> String {
        let label = |x: usize| match bar_from {
            Some(b) if x > b => format!("{}'", x - b),
            _ => x.to_string(),
        };
        let top: Vec<String> = self.seq.iter().map(|&x| label(x)).collect();
        let bottom: Vec<String> = self.bottom_row().into_iter().map(label).collect();
        let width = top.iter().chain(&bottom).map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for row in [&top, &bottom] {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }

    pub fn render(&self) -> String {
        self.render_with_bars(None)
    }
}

impl std::fmt::Display for PlanePermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> PlanePermutation {
        PlanePermutation::from_rows(&[1, 3, 6, 2, 5, 4], &[5, 4, 1, 3, 6, 2]).unwrap()
    }

    #[test]
    fn diagonal_examples() {
        let s = Permutation::cycle_from_sequence(&[1, 2, 3, 4]).unwrap();
        let pp = PlanePermutation::new(&s, s.clone()).unwrap();
        assert!(pp.diagonal().is_identity());
        let pp = PlanePermutation::new(&s, Permutation::identity(4)).unwrap();
        assert_eq!(pp.diagonal(), s);

        let d = example().diagonal();
        assert_eq!(d.to_string(), "(1 2)(3 5)(4 6)");
        assert_eq!(d.cycle_type().parts(), &[2, 2, 2]);
    }

    #[test]
    fn diagonal_pairs_hold() {
        let pp = example();
        let d = pp.diagonal();
        let seq = pp.sequence();
        let n = pp.n();
        for i in 0..n {
            let prev = seq[(i + n - 1) % n];
            assert_eq!(d.apply(pp.pi().apply(prev)), seq[i]);
        }
    }

    #[test]
    fn classification_of_worked_example() {
        let c = example().classify();
        assert_eq!(c.exceedances, BTreeSet::from([1, 3]));
        assert_eq!(c.trivial, BTreeSet::from([6, 2]));
        assert_eq!(c.ntaes, BTreeSet::from([5, 4]));
        assert_eq!(example().ntae_count(), 2);
    }

    #[test]
    fn identity_vertical_has_only_trivial_anti_exceedances() {
        let s = Permutation::cycle_from_sequence(&[1, 4, 2, 3]).unwrap();
        let pp = PlanePermutation::new(&s, Permutation::identity(4)).unwrap();
        let c = pp.classify();
        assert!(c.exceedances.is_empty());
        assert!(c.ntaes.is_empty());
        assert_eq!(c.trivial.len(), 4);
    }

    #[test]
    fn transposition_example() {
        let s = Permutation::cycle_from_sequence(&[1, 2, 3]).unwrap();
        let pp = PlanePermutation::new(&s, Permutation::identity(3)).unwrap();
        let ph = pp.transpose_blocks(1, 1, 2).unwrap();
        assert_eq!(ph.sequence(), &[1, 3, 2]);
        assert_eq!(ph.diagonal(), pp.diagonal());
        assert_eq!(ph.pi().to_string(), "(1 2 3)");
        assert!(pp.transpose_blocks(0, 0, 1).is_err());
        assert!(pp.transpose_blocks(1, 2, 2).is_err());
        assert!(pp.transpose_blocks(1, 1, 3).is_err());
    }

    #[test]
    fn reflection_of_worked_example() {
        let pp = example();
        let r = pp.reflect();
        assert_eq!(r.sequence(), &[1, 4, 5, 2, 6, 3]);
        // 6 + 1 - C(π) - C(D) - Ne(pp) = 7 - 2 - 3 - 2
        assert_eq!(r.ntae_count(), 0);
        assert_eq!(r.reflect(), pp);
    }

    #[test]
    fn reflection_of_pi_equal_s() {
        let s = Permutation::cycle_from_sequence(&[1, 3, 2, 4]).unwrap();
        let pp = PlanePermutation::new(&s, s.clone()).unwrap();
        assert_eq!(pp.ntae_count(), 0);
        assert_eq!(pp.reflect().ntae_count(), 0);
    }

    #[test]
    fn hat_of_displayed_example() {
        let pp = PlanePermutation::from_rows(&[1, 2, 3, 4, 5, 6], &[4, 5, 6, 1, 2, 3]).unwrap();
        let h = pp.hat();
        let n = 6;
        // bottom row 4, 5', 5, 6', 6, 1', 1, 2', 2, 3', 3, 4'
        let expected = [4, n + 5, 5, n + 6, 6, n + 1, 1, n + 2, 2, n + 3, 3, n + 4];
        assert_eq!(h.bottom_row(), expected);
        let rendered = h.render_with_bars(Some(n));
        let bottom: Vec<&str> = rendered.lines().nth(1).unwrap().split_whitespace().collect();
        assert_eq!(bottom, ["4", "5'", "5", "6'", "6", "1'", "1", "2'", "2", "3'", "3", "4'"]);

        assert_eq!(pp.diagonal().to_string(), "(1 5 3)(2 6 4)");
        let barred: Vec<usize> = (1..=n).map(|i| h.pi().apply(n + i) - n).collect();
        let restricted = Permutation::from_images(&barred).unwrap();
        assert_eq!(restricted.to_string(), "(1 5 3)(2 6 4)");

        let d = h.diagonal();
        assert!(d.compose(&d).unwrap().is_identity());
        assert_eq!(d.fixed_point_count(), 0);
    }

    #[test]
    fn hat_of_small_case() {
        let s = Permutation::cycle_from_sequence(&[1, 2]).unwrap();
        let pp = PlanePermutation::new(&s, s.clone()).unwrap();
        let h = pp.hat();
        assert_eq!(h.n(), 4);
        let d = h.diagonal();
        assert!(d.compose(&d).unwrap().is_identity());
        assert_eq!(d.fixed_point_count(), 0);
        for x in 1..=2 {
            assert!(d.apply(x) > 2);
        }
    }
}
