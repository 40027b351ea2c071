//! Exhaustive ground truth.
//!
//! Two independent enumerations are kept:
//!
//! * a [`Census`] of every plane permutation `(s, π)` on `[n]` (all
//!   `(n-1)!` long cycles `s` anchored at 1 times all `n!` permutations `π`),
//!   recording the diagonal cycle type, the vertical cycle type, how far
//!   `π` separates and isolates `1, 2, ...`, and the exceedance count;
//! * a [`PairCensus`] of products `c₁ ∘ c₂` of two long cycles, recording
//!   fixed points and which block cuts the product respects.
//!
//! Both are built in parallel over disjoint chunks of the outer loop and
//! reduced by exact addition, so results do not depend on scheduling.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Composition, IntegerPartition};
use crate::perm::{enumerate_n_cycles, enumerate_permutations};
use crate::table::{CountTable, Source, TableKind};

/// Default largest `n` the oracle will enumerate.
pub const DEFAULT_CAP: usize = 7;
/// Above this the oracle always refuses (n = 9 is already ~1.5·10¹⁰ pairs).
pub const MAX_CAP: usize = 9;

const MAX_N: usize = MAX_CAP;

/// One census cell: indices into `partitions_of(n)` plus the statistics
/// that the counting formulas filter on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CensusKey {
    pub diagonal: u8,
    pub vertical: u8,
    /// Largest `m` with `1..=m` in distinct cycles of `π`.
    pub separation: u8,
    /// Largest `m` with `1..=m` fixed by `π`.
    pub isolation: u8,
    pub exceedances: u8,
}

impl CensusKey {
    fn pack(self) -> u64 {
        u64::from(self.diagonal)
            | u64::from(self.vertical) << 8
            | u64::from(self.separation) << 16
            | u64::from(self.isolation) << 24
            | u64::from(self.exceedances) << 32
    }

    fn unpack(v: u64) -> Self {
        CensusKey {
            diagonal: v as u8,
            vertical: (v >> 8) as u8,
            separation: (v >> 16) as u8,
            isolation: (v >> 24) as u8,
            exceedances: (v >> 32) as u8,
        }
    }
}

/// Counts of all plane permutations on `[n]`, bucketed by [`CensusKey`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    n: usize,
    partitions: Vec<IntegerPartition>,
    counts: BTreeMap<CensusKey, u64>,
}

struct VerticalInfo {
    images: [u8; MAX_N],
    inverse: [u8; MAX_N],
    key: u64,
}

struct Enumeration {
    n: usize,
    /// Long cycles as top-row sequences starting at 0.
    sequences: Vec<[u8; MAX_N]>,
    verticals: Vec<VerticalInfo>,
    type_index: HashMap<u64, u8>,
}

/// Multiplicity-vector code of a list of cycle lengths.
fn type_code(n: usize, lengths: impl Iterator<Item = usize>) -> u64 {
    let base = (n + 1) as u64;
    lengths.map(|len| base.pow(len as u32 - 1)).sum()
}

impl Enumeration {
    fn new(n: usize) -> Self {
        let partitions = partitions_of(n);
        let type_index: HashMap<u64, u8> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (type_code(n, p.parts().iter().copied()), i as u8))
            .collect();
        let sequences = enumerate_n_cycles(n)
            .map(|s| {
                let mut seq = [0u8; MAX_N];
                let mut x = 0;
                for slot in seq.iter_mut().take(n) {
                    *slot = x as u8;
                    x = s.zero_based()[x];
                }
                seq
            })
            .collect();
        let verticals = enumerate_permutations(n)
            .map(|pi| {
                let mut images = [0u8; MAX_N];
                let mut inverse = [0u8; MAX_N];
                for (i, &x) in pi.zero_based().iter().enumerate() {
                    images[i] = x as u8;
                    inverse[x] = i as u8;
                }
                let vertical = type_index[&type_code(
                    n,
                    pi.cycles().cycles.iter().map(Vec::len),
                )];
                let key = CensusKey {
                    diagonal: 0,
                    vertical,
                    separation: pi.separation_level() as u8,
                    isolation: pi.isolation_level() as u8,
                    exceedances: 0,
                }
                .pack();
                VerticalInfo {
                    images,
                    inverse,
                    key,
                }
            })
            .collect();
        Enumeration {
            n,
            sequences,
            verticals,
            type_index,
        }
    }

    fn diagonal_index(&self, diag: &[u8; MAX_N]) -> u8 {
        let n = self.n;
        let mut seen = 0u16;
        let base = (n + 1) as u64;
        let mut code = 0u64;
        for start in 0..n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while seen >> x & 1 == 0 {
                seen |= 1 << x;
                x = diag[x] as usize;
                len += 1;
            }
            code += base.pow(len - 1);
        }
        self.type_index[&code]
    }

    /// Counts plane permutations whose top row is one of `sequences[range]`.
    fn count_range(&self, range: std::ops::Range<usize>) -> HashMap<u64, u64> {
        let n = self.n;
        let mut out: HashMap<u64, u64> = HashMap::new();
        let mut pos = [0u8; MAX_N];
        let mut succ = [0u8; MAX_N];
        let mut diag = [0u8; MAX_N];
        for seq in &self.sequences[range] {
            for i in 0..n {
                pos[seq[i] as usize] = i as u8;
                succ[seq[i] as usize] = seq[(i + 1) % n];
            }
            for v in &self.verticals {
                // D = s ∘ π⁻¹
                for x in 0..n {
                    diag[x] = succ[v.inverse[x] as usize];
                }
                let exc = (0..n)
                    .filter(|&x| pos[x] < pos[v.images[x] as usize])
                    .count() as u64;
                let key = v.key | u64::from(self.diagonal_index(&diag)) | exc << 32;
                *out.entry(key).or_insert(0) += 1;
            }
        }
        out
    }
}

fn merge_into(acc: &mut HashMap<u64, u64>, other: HashMap<u64, u64>) {
    for (k, v) in other {
        *acc.entry(k).or_insert(0) += v;
    }
}

impl Census {
    /// Full census, parallel over top rows.
    pub fn build(n: usize) -> Result<Self> {
        check_n(n, MAX_CAP)?;
        let e = Enumeration::new(n);
        let total = e.sequences.len();
        let chunk = (total / (rayon::current_num_threads() * 4)).max(1);
        let starts: Vec<usize> = (0..total).step_by(chunk).collect();
        let counts = starts
            .into_par_iter()
            .map(|start| e.count_range(start..(start + chunk).min(total)))
            .reduce(HashMap::new, |mut a, b| {
                merge_into(&mut a, b);
                a
            });
        Ok(Self::from_counts(n, counts))
    }

    /// Sequential build over `chunks` disjoint slices of the top rows.
    pub fn build_chunked(n: usize, chunks: usize) -> Result<Self> {
        check_n(n, MAX_CAP)?;
        let e = Enumeration::new(n);
        let total = e.sequences.len();
        let chunks = chunks.clamp(1, total);
        let mut counts = HashMap::new();
        for c in 0..chunks {
            let lo = c * total / chunks;
            let hi = (c + 1) * total / chunks;
            merge_into(&mut counts, e.count_range(lo..hi));
        }
        Ok(Self::from_counts(n, counts))
    }

    fn from_counts(n: usize, counts: HashMap<u64, u64>) -> Self {
        Census {
            n,
            partitions: partitions_of(n),
            counts: counts
                .into_iter()
                .map(|(k, v)| (CensusKey::unpack(k), v))
                .collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Partitions of `n`, indexed as in [`CensusKey`].
    pub fn partitions(&self) -> &[IntegerPartition] {
        &self.partitions
    }

    pub fn cells(&self) -> impl Iterator<Item = (&CensusKey, &u64)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().map(|&v| BigUint::from(v)).sum()
    }

    fn index_of(&self, p: &IntegerPartition) -> Result<u8> {
        self.partitions
            .iter()
            .position(|q| q == p)
            .map(|i| i as u8)
            .ok_or_else(|| {
                Error::Domain(format!("{p} is not a partition of {}", self.n))
            })
    }

    /// Sums every cell accepted by `filter`.
    pub fn count(&self, filter: &CensusFilter) -> Result<BigUint> {
        let matcher = filter.compile(self)?;
        Ok(self
            .counts
            .iter()
            .filter(|(k, _)| matcher.accepts(k))
            .map(|(_, &v)| BigUint::from(v))
            .sum())
    }

    /// Counts accepted by `filter`, split by exceedance count.
    pub fn count_by_exceedances(&self, filter: &CensusFilter) -> Result<BTreeMap<usize, BigUint>> {
        let matcher = filter.compile(self)?;
        let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (k, &v) in &self.counts {
            if matcher.accepts(k) {
                *out.entry(k.exceedances as usize).or_default() += BigUint::from(v);
            }
        }
        Ok(out)
    }

    /// The full `(λ, k)` table for one `m` and constraint kind.
    pub fn table(&self, m: usize, kind: TableKind) -> CountTable {
        let mut acc: BTreeMap<(u8, usize), u64> = BTreeMap::new();
        for (key, &v) in &self.counts {
            let level = match kind {
                TableKind::Separated => key.separation,
                TableKind::Isolated => key.isolation,
            };
            if (level as usize) < m {
                continue;
            }
            let k = self.partitions[key.vertical as usize].length();
            *acc.entry((key.diagonal, k)).or_insert(0) += v;
        }
        let mut table = CountTable::new(self.n, m, kind, Source::Oracle);
        for ((d, k), v) in acc {
            table.insert(self.partitions[d as usize].clone(), k, BigUint::from(v));
        }
        table
    }
}

/// Selects plane permutations in a [`Census`]. `None` fields do not filter.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusFilter {
    pub kind: Option<TableKind>,
    pub m: usize,
    pub diagonal: Option<IntegerPartition>,
    pub vertical_cycles: Option<usize>,
    pub vertical_type: Option<IntegerPartition>,
    pub exceedances: Option<usize>,
}

struct Matcher {
    kind: Option<TableKind>,
    m: usize,
    diagonal: Option<u8>,
    vertical_ok: Vec<bool>,
    exceedances: Option<usize>,
}

impl Matcher {
    fn accepts(&self, k: &CensusKey) -> bool {
        let level_ok = match self.kind {
            None => true,
            Some(TableKind::Separated) => k.separation as usize >= self.m,
            Some(TableKind::Isolated) => k.isolation as usize >= self.m,
        };
        level_ok
            && self.diagonal.is_none_or(|d| d == k.diagonal)
            && self.vertical_ok[k.vertical as usize]
            && self.exceedances.is_none_or(|a| a == k.exceedances as usize)
    }
}

impl CensusFilter {
    pub fn separated(m: usize) -> Self {
        CensusFilter {
            kind: Some(TableKind::Separated),
            m,
            ..Default::default()
        }
    }

    pub fn isolated(m: usize) -> Self {
        CensusFilter {
            kind: Some(TableKind::Isolated),
            m,
            ..Default::default()
        }
    }

    pub fn diagonal(mut self, lambda: &IntegerPartition) -> Self {
        self.diagonal = Some(lambda.clone());
        self
    }

    pub fn vertical_cycles(mut self, k: usize) -> Self {
        self.vertical_cycles = Some(k);
        self
    }

    pub fn vertical_type(mut self, mu: &IntegerPartition) -> Self {
        self.vertical_type = Some(mu.clone());
        self
    }

    fn compile(&self, census: &Census) -> Result<Matcher> {
        if self.m > census.n {
            return Err(Error::Domain(format!("m = {} exceeds n = {}", self.m, census.n)));
        }
        let diagonal = self.diagonal.as_ref().map(|d| census.index_of(d)).transpose()?;
        let vertical = self.vertical_type.as_ref().map(|v| census.index_of(v)).transpose()?;
        let vertical_ok = census
            .partitions
            .iter()
            .enumerate()
            .map(|(i, p)| {
                vertical.is_none_or(|v| v as usize == i)
                    && self.vertical_cycles.is_none_or(|k| k == p.length())
            })
            .collect();
        Ok(Matcher {
            kind: self.kind,
            m: self.m,
            diagonal,
            vertical_ok,
            exceedances: self.exceedances,
        })
    }
}

/// Products of pairs of long cycles on `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairCensus {
    n: usize,
    /// Indexed by the bitmask of cuts respected by the product; bit `c-1` is
    /// set when the product maps `{1..c}` onto itself.
    by_cut_mask: Vec<u64>,
    /// Indexed by the number of fixed points.
    by_fixed_points: Vec<u64>,
}

impl PairCensus {
    pub fn build(n: usize) -> Result<Self> {
        check_n(n, MAX_CAP)?;
        let cycles: Vec<Vec<usize>> = enumerate_n_cycles(n)
            .map(|c| c.zero_based().to_vec())
            .collect();
        let empty = || PairCensus {
            n,
            by_cut_mask: vec![0; 1 << (n - 1)],
            by_fixed_points: vec![0; n + 1],
        };
        let out = cycles
            .par_iter()
            .map(|c1| {
                let mut acc = empty();
                let mut prod = vec![0; n];
                for c2 in &cycles {
                    for x in 0..n {
                        prod[x] = c1[c2[x]];
                    }
                    let fixed = (0..n).filter(|&x| prod[x] == x).count();
                    let mut mask = 0usize;
                    let mut max = 0;
                    for c in 1..n {
                        max = max.max(prod[c - 1]);
                        if max == c - 1 {
                            mask |= 1 << (c - 1);
                        }
                    }
                    acc.by_cut_mask[mask] += 1;
                    acc.by_fixed_points[fixed] += 1;
                }
                acc
            })
            .reduce(empty, |mut a, b| {
                for (x, y) in a.by_cut_mask.iter_mut().zip(b.by_cut_mask) {
                    *x += y;
                }
                for (x, y) in a.by_fixed_points.iter_mut().zip(b.by_fixed_points) {
                    *x += y;
                }
                a
            });
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Pairs whose product is `α`-separated: every cycle inside one block.
    pub fn alpha(&self, alpha: &Composition) -> Result<BigUint> {
        if alpha.n() != self.n {
            return Err(Error::SizeMismatch {
                left: alpha.n(),
                right: self.n,
            });
        }
        let mut required = 0usize;
        let mut c = 0;
        for &part in &alpha.parts()[..alpha.len() - 1] {
            c += part;
            required |= 1 << (c - 1);
        }
        Ok(self
            .by_cut_mask
            .iter()
            .enumerate()
            .filter(|(mask, _)| mask & required == required)
            .map(|(_, &v)| BigUint::from(v))
            .sum())
    }

    /// Number of pairs whose product has exactly `i` fixed points, for
    /// every `i` that occurs.
    pub fn fixed_point_distribution(&self) -> BTreeMap<usize, BigUint> {
        self.by_fixed_points
            .iter()
            .enumerate()
            .filter(|(_, &v)| v > 0)
            .map(|(i, &v)| (i, BigUint::from(v)))
            .collect()
    }
}

fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::OracleCap { n, cap });
    }
    Ok(())
}

/// What an [`OracleQuery`] asks for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Separated { m: usize },
    Isolated { m: usize },
    Alpha(Composition),
    FixedPointDistribution,
}

/// A single oracle request. The optional filters apply to the separated
/// and isolated modes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleQuery {
    pub n: usize,
    pub mode: OracleMode,
    pub diagonal: Option<IntegerPartition>,
    pub vertical_cycles: Option<usize>,
    pub vertical_type: Option<IntegerPartition>,
    pub exceedances: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleAnswer {
    Count(BigUint),
    Distribution(BTreeMap<usize, BigUint>),
}

/// Caching front end with a size cap.
pub struct Oracle {
    cap: usize,
    census: Mutex<HashMap<usize, Arc<Census>>>,
    pairs: Mutex<HashMap<usize, Arc<PairCensus>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::with_cap(DEFAULT_CAP).expect("default cap is valid")
    }
}

impl Oracle {
    /// Caps above [`MAX_CAP`] are refused.
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > MAX_CAP {
            return Err(Error::OracleCap { n: cap, cap: MAX_CAP });
        }
        Ok(Oracle {
            cap,
            census: Mutex::new(HashMap::new()),
            pairs: Mutex::new(HashMap::new()),
        })
    }

    /// A process-wide oracle with the default cap.
    pub fn global() -> &'static Oracle {
        static GLOBAL: OnceLock<Oracle> = OnceLock::new();
        GLOBAL.get_or_init(Oracle::default)
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn census(&self, n: usize) -> Result<Arc<Census>> {
        check_n(n, self.cap)?;
        if let Some(c) = self.census.lock().unwrap().get(&n) {
            return Ok(c.clone());
        }
        let built = Arc::new(Census::build(n)?);
        Ok(self
            .census
            .lock()
            .unwrap()
            .entry(n)
            .or_insert(built)
            .clone())
    }

    pub fn pair_census(&self, n: usize) -> Result<Arc<PairCensus>> {
        check_n(n, self.cap)?;
        if let Some(c) = self.pairs.lock().unwrap().get(&n) {
            return Ok(c.clone());
        }
        let built = Arc::new(PairCensus::build(n)?);
        Ok(self.pairs.lock().unwrap().entry(n).or_insert(built).clone())
    }

    pub fn run(&self, q: &OracleQuery) -> Result<OracleAnswer> {
        let filter = |kind, m| CensusFilter {
            kind: Some(kind),
            m,
            diagonal: q.diagonal.clone(),
            vertical_cycles: q.vertical_cycles,
            vertical_type: q.vertical_type.clone(),
            exceedances: q.exceedances,
        };
        match &q.mode {
            OracleMode::Separated { m } => Ok(OracleAnswer::Count(
                self.census(q.n)?.count(&filter(TableKind::Separated, *m))?,
            )),
            OracleMode::Isolated { m } => Ok(OracleAnswer::Count(
                self.census(q.n)?.count(&filter(TableKind::Isolated, *m))?,
            )),
            OracleMode::Alpha(alpha) => {
                Ok(OracleAnswer::Count(self.pair_census(q.n)?.alpha(alpha)?))
            }
            OracleMode::FixedPointDistribution => Ok(OracleAnswer::Distribution(
                self.pair_census(q.n)?.fixed_point_distribution(),
            )),
        }
    }

    /// `p^λ_{m,k}`: plane permutations with diagonal type `λ` and a vertical
    /// with `k` cycles separating `[m]`.
    pub fn p(&self, lambda: &IntegerPartition, m: usize, k: usize) -> Result<BigUint> {
        self.census(lambda.n())?
            .count(&CensusFilter::separated(m).diagonal(lambda).vertical_cycles(k))
    }

    /// `p^λ_{m,k}` split by the number of exceedances `a`.
    pub fn p_stratified(
        &self,
        lambda: &IntegerPartition,
        m: usize,
        k: usize,
    ) -> Result<BTreeMap<usize, BigUint>> {
        self.census(lambda.n())?
            .count_by_exceedances(&CensusFilter::separated(m).diagonal(lambda).vertical_cycles(k))
    }

    /// `I^λ_{m,k}`: as [`Oracle::p`] with `[m]` fixed instead of separated.
    pub fn i(&self, lambda: &IntegerPartition, m: usize, k: usize) -> Result<BigUint> {
        self.census(lambda.n())?
            .count(&CensusFilter::isolated(m).diagonal(lambda).vertical_cycles(k))
    }

    /// `p^λ_{m,μ}`: vertical of cycle type exactly `μ`.
    pub fn p_by_type(&self, lambda: &IntegerPartition, mu: &IntegerPartition, m: usize) -> Result<BigUint> {
        self.census(lambda.n())?
            .count(&CensusFilter::separated(m).diagonal(lambda).vertical_type(mu))
    }

    pub fn i_by_type(&self, lambda: &IntegerPartition, mu: &IntegerPartition, m: usize) -> Result<BigUint> {
        self.census(lambda.n())?
            .count(&CensusFilter::isolated(m).diagonal(lambda).vertical_type(mu))
    }

    pub fn alpha(&self, alpha: &Composition) -> Result<BigUint> {
        self.pair_census(alpha.n())?.alpha(alpha)
    }

    pub fn fixed_point_distribution(&self, n: usize) -> Result<BTreeMap<usize, BigUint>> {
        Ok(self.pair_census(n)?.fixed_point_distribution())
    }

    pub fn table(&self, n: usize, m: usize, kind: TableKind) -> Result<CountTable> {
        if m > n {
            return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
        }
        Ok(self.census(n)?.table(m, kind))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntegerPartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        let o = Oracle::default();
        assert_eq!(o.p(&p("3"), 0, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(o.p(&p("4"), 2, 2).unwrap(), BigUint::from(16u32));
        assert_eq!(o.i(&p("4"), 1, 2).unwrap(), BigUint::from(6u32));
        for n in 1..=5 {
            let f = BigUint::from((1..n as u32).product::<u32>());
            assert_eq!(o.p(&IntegerPartition::ones(n), 1, 1).unwrap(), f);
            // π = id forces D = s
            assert_eq!(o.i(&IntegerPartition::single(n), n, n).unwrap(), f);
            if n > 1 {
                assert_eq!(o.i(&IntegerPartition::ones(n), n, n).unwrap(), BigUint::from(0u32));
            }
        }
    }

    #[test]
    fn stratified_example() {
        let o = Oracle::default();
        let strat = o.p_stratified(&p("3"), 0, 3).unwrap();
        assert_eq!(strat, BTreeMap::from([(0, BigUint::from(2u32))]));
    }

    #[test]
    fn pair_examples() {
        let o = Oracle::default();
        assert_eq!(
            o.fixed_point_distribution(3).unwrap(),
            BTreeMap::from([(0, BigUint::from(2u32)), (3, BigUint::from(2u32))])
        );
        assert_eq!(
            o.fixed_point_distribution(2).unwrap(),
            BTreeMap::from([(2, BigUint::from(1u32))])
        );
        let a: Composition = "1,3".parse().unwrap();
        assert_eq!(o.alpha(&a).unwrap(), BigUint::from(12u32));
        assert_eq!(o.alpha(&"4".parse().unwrap()).unwrap(), BigUint::from(36u32));
        assert_eq!(o.alpha(&"1,1,1,1".parse().unwrap()).unwrap(), BigUint::from(6u32));
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::with_cap(4).unwrap();
        assert_eq!(
            o.census(5).unwrap_err(),
            Error::OracleCap { n: 5, cap: 4 }
        );
        assert!(Oracle::with_cap(10).is_err());
    }

    #[test]
    fn chunking_does_not_change_counts() {
        let par = Census::build(5).unwrap();
        for chunks in [1, 3, 7, 24] {
            assert_eq!(Census::build_chunked(5, chunks).unwrap(), par);
        }
    }

    #[test]
    fn query_interface() {
        let o = Oracle::default();
        let q = OracleQuery {
            n: 4,
            mode: OracleMode::Separated { m: 2 },
            diagonal: Some(p("4")),
            vertical_cycles: Some(2),
            vertical_type: None,
            exceedances: None,
        };
        assert_eq!(o.run(&q).unwrap(), OracleAnswer::Count(BigUint::from(16u32)));
        let bad = OracleQuery {
            mode: OracleMode::Separated { m: 5 },
            ..q
        };
        assert!(matches!(o.run(&bad), Err(Error::Domain(_))));
    }
}
