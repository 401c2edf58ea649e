//! Exact distribution tables over enumerated ground sets.

use num::BigUint;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Counts of ground-set elements indexed by a tuple of statistic values.
/// Counts are exact big integers; keys are statistic value tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    n: usize,
    stat_names: Vec<String>,
    cells: BTreeMap<Vec<u64>, BigUint>,
}

#[derive(Serialize)]
struct TableJson<'a> {
    n: usize,
    stats: &'a [String],
    cells: Vec<CellJson>,
}

#[derive(Serialize)]
struct CellJson {
    key: Vec<u64>,
    count: String,
}

impl DistributionTable {
    pub fn new<S: AsRef<str>>(n: usize, stat_names: &[S]) -> DistributionTable {
        DistributionTable {
            n,
            stat_names: stat_names.iter().map(|s| s.as_ref().to_string()).collect(),
            cells: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn stat_names(&self) -> &[String] {
        &self.stat_names
    }

    pub fn add(&mut self, key: Vec<u64>, count: u64) {
        assert_eq!(key.len(), self.stat_names.len(), "key arity mismatch");
        if count == 0 {
            return;
        }
        *self.cells.entry(key).or_default() += count;
    }

    pub fn get(&self, key: &[u64]) -> BigUint {
        self.cells.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[u64], &BigUint)> {
        self.cells.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn total(&self) -> BigUint {
        self.cells.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// For 1-statistic tables: counts indexed densely by statistic value
    /// 0..=max (empty cells filled with zero).
    pub fn dense_counts(&self) -> Vec<BigUint> {
        assert_eq!(self.stat_names.len(), 1, "dense_counts needs a 1-D table");
        let max = self.cells.keys().map(|k| k[0]).max().unwrap_or(0);
        let mut out = vec![BigUint::default(); max as usize + 1];
        for (k, v) in &self.cells {
            out[k[0] as usize] = v.clone();
        }
        out
    }

    /// CSV with a header row of statistic names plus a final `count` column;
    /// rows sorted by key.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.stat_names.join(","));
        out.push_str(",count\n");
        for (k, v) in &self.cells {
            for part in k {
                let _ = write!(out, "{part},");
            }
            let _ = writeln!(out, "{v}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let cells = self
            .cells
            .iter()
            .map(|(k, v)| CellJson {
                key: k.clone(),
                count: v.to_string(),
            })
            .collect();
        serde_json::to_string_pretty(&TableJson {
            n: self.n,
            stats: &self.stat_names,
            cells,
        })
        .expect("table serialization cannot fail")
    }
}

/// OEIS b-file text for a sequence: lines `n a(n)`, starting at `start_n`.
pub fn bfile_lines<T: std::fmt::Display>(start_n: usize, values: &[T]) -> String {
    let mut out = String::new();
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(out, "{} {v}", start_n + i);
    }
    out
}
