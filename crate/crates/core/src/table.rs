//! `CountTable`: exact counts indexed by diagonal cycle type `λ` and
//! vertical cycle count `k`, for one `(n, m)` and one constraint kind.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::IntegerPartition;

/// Whether `[m]` must be separated (distinct cycles) or isolated (fixed).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    Separated,
    Isolated,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableKind::Separated => "separated",
            TableKind::Isolated => "isolated",
        })
    }
}

impl FromStr for TableKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "separated" => Ok(TableKind::Separated),
            "isolated" => Ok(TableKind::Isolated),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown table kind {s:?}"),
            }),
        }
    }
}

/// Where a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ClosedForm,
    Recurrence,
    Oracle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::ClosedForm => "closed_form",
            Source::Recurrence => "recurrence",
            Source::Oracle => "oracle",
        })
    }
}

/// Exact counts `(λ, k) → value`. Absent entries are zero and zero values
/// are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub m: usize,
    pub kind: TableKind,
    pub source: Source,
    entries: BTreeMap<(IntegerPartition, usize), BigUint>,
}

impl CountTable {
    pub fn new(n: usize, m: usize, kind: TableKind, source: Source) -> Self {
        CountTable {
            n,
            m,
            kind,
            source,
            entries: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, lambda: IntegerPartition, k: usize, value: BigUint) {
        if value.is_zero() {
            self.entries.remove(&(lambda, k));
        } else {
            self.entries.insert((lambda, k), value);
        }
    }

    pub fn get(&self, lambda: &IntegerPartition, k: usize) -> BigUint {
        self.entries
            .get(&(lambda.clone(), k))
            .cloned()
            .unwrap_or_default()
    }

    /// `Σ_k value(λ, k)`.
    pub fn row_total(&self, lambda: &IntegerPartition) -> BigUint {
        self.entries
            .iter()
            .filter(|((l, _), _)| l == lambda)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Non-zero entries: partitions in reverse-lexicographic order, then `k`
    /// ascending.
    pub fn entries(&self) -> impl Iterator<Item = (&IntegerPartition, usize, &BigUint)> {
        let mut v: Vec<_> = self.entries.iter().map(|((l, k), v)| (l, *k, v)).collect();
        v.sort_by(|a, b| b.0.cmp(a.0).then(a.1.cmp(&b.1)));
        v.into_iter()
    }

    /// Entries that differ between two tables, as `(λ, k, self, other)`.
    pub fn diff(&self, other: &CountTable) -> Vec<(IntegerPartition, usize, BigUint, BigUint)> {
        let mut keys: Vec<_> = self.entries.keys().chain(other.entries.keys()).cloned().collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(l, k)| {
                let a = self.get(&l, k);
                let b = other.get(&l, k);
                (a != b).then_some((l, k, a, b))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("table serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: TableJson = serde_json::from_str(s).map_err(|e| Error::Parse {
            position: e.column(),
            message: e.to_string(),
        })?;
        let mut table = CountTable::new(raw.n, raw.m, raw.kind, raw.source);
        for e in raw.entries {
            let lambda: IntegerPartition = e.lambda.parse()?;
            let value: BigUint = e.value.parse().map_err(|_| Error::Parse {
                position: 0,
                message: format!("bad integer {:?}", e.value),
            })?;
            table.insert(lambda, e.k, value);
        }
        Ok(table)
    }
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: usize,
    m: usize,
    kind: TableKind,
    source: Source,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    lambda: String,
    k: usize,
    value: String,
}

impl From<&CountTable> for TableJson {
    fn from(t: &CountTable) -> Self {
        TableJson {
            n: t.n,
            m: t.m,
            kind: t.kind,
            source: t.source,
            entries: t
                .entries()
                .map(|(l, k, v)| EntryJson {
                    lambda: l.to_string(),
                    k,
                    value: v.to_string(),
                })
                .collect(),
        }
    }
}
