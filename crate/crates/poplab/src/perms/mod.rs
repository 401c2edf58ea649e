//! Exhaustive enumeration of permutations and words, with deterministic
//! multi-threaded sweeps and exact counting helpers.

pub mod stats;
pub mod table;

use crate::pattern::{avoids_all, PatternError, PopPattern};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use thiserror::Error;

pub use table::{bfile_lines, DistributionTable};

#[derive(Debug, Error, PartialEq)]
pub enum PermsError {
    #[error("refusing to enumerate length {n}: limit is {limit} (raise POPLAB_MAX_N to override)")]
    LimitExceeded { n: usize, limit: usize },
    #[error("not a permutation of 1..=n: {0:?}")]
    NotAPermutation(Vec<u8>),
    #[error("cannot parse permutation from {0:?}")]
    Parse(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn new(values: Vec<u8>) -> Result<Permutation, PermsError> {
        if !is_permutation(&values) {
            return Err(PermsError::NotAPermutation(values));
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n as u8).collect())
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for Permutation {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Permutation {
    /// One-line notation: compact digits when all values fit in one digit,
    /// comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&v| v <= 9) {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermsError;

    /// Accepts compact digits (`31254`) or comma-separated values (`3,1,2,5,4`).
    fn from_str(s: &str) -> Result<Permutation, PermsError> {
        let s = s.trim();
        let values: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse::<u8>())
                .collect::<Result<_, _>>()
                .map_err(|_| PermsError::Parse(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| PermsError::Parse(s.to_string()))?
        };
        Permutation::new(values)
    }
}

pub fn is_permutation(w: &[u8]) -> bool {
    let n = w.len();
    if n > u8::MAX as usize {
        return false;
    }
    let mut seen = vec![false; n];
    w.iter().all(|&v| {
        let ok = (1..=n as u8).contains(&v) && !seen[v as usize - 1];
        if ok {
            seen[v as usize - 1] = true;
        }
        ok
    })
}

/// Largest `n` for which exhaustive permutation sweeps are allowed,
/// controlled by the `POPLAB_MAX_N` environment variable (default 11).
pub fn enumeration_limit() -> usize {
    std::env::var("POPLAB_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(11)
}

pub(crate) fn guard(n: usize) -> Result<(), PermsError> {
    let limit = enumeration_limit();
    if n > limit {
        return Err(PermsError::LimitExceeded { n, limit });
    }
    Ok(())
}

/// Process-wide worker-count override for sweeps; 0 means "use all cores".
static JOBS: AtomicUsize = AtomicUsize::new(0);

pub fn set_jobs(jobs: usize) {
    JOBS.store(jobs, Ordering::Relaxed);
}

fn effective_jobs() -> usize {
    match JOBS.load(Ordering::Relaxed) {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        j => j,
    }
}

/// Advance `buf` to its lexicographic successor; false once at the last one.
fn next_permutation(buf: &mut [u8]) -> bool {
    let n = buf.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| buf[i] < buf[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| buf[j] > buf[i]).unwrap();
    buf.swap(i, j);
    buf[i + 1..].reverse();
    true
}

/// Visit every permutation of `1..=n` in lexicographic order.
/// Single-threaded and unguarded; the counting helpers below are the
/// limit-checked entry points.
pub fn for_each_perm<F: FnMut(&[u8])>(n: usize, mut f: F) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut buf: Vec<u8> = (1..=n as u8).collect();
    loop {
        f(&buf);
        if !next_permutation(&mut buf) {
            break;
        }
    }
}

/// Visit every word of length `n` over the alphabet `1..=k` in
/// lexicographic order.
pub fn for_each_word<F: FnMut(&[u8])>(n: usize, k: usize, mut f: F) {
    if k == 0 && n > 0 {
        return;
    }
    let mut buf = vec![1u8; n];
    loop {
        f(&buf);
        let mut j = n;
        loop {
            if j == 0 {
                return;
            }
            j -= 1;
            if (buf[j] as usize) < k {
                buf[j] += 1;
                for b in &mut buf[j + 1..] {
                    *b = 1;
                }
                break;
            }
        }
    }
}

/// Iterator over all permutations of `1..=n` in lexicographic order.
/// Allocates one `Permutation` per item; sweeps use [`for_each_perm`].
pub fn gen_perms(n: usize) -> impl Iterator<Item = Permutation> {
    let mut next: Option<Vec<u8>> = Some((1..=n as u8).collect());
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if next_permutation(&mut succ) {
            next = Some(succ);
        }
        Some(Permutation(cur))
    })
}

/// Iterator over all words of length `n` over `1..=k`, lexicographic.
pub fn gen_words(n: usize, k: usize) -> impl Iterator<Item = Vec<u8>> {
    let mut next: Option<Vec<u8>> = if k == 0 && n > 0 {
        None
    } else {
        Some(vec![1u8; n])
    };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        for j in (0..n).rev() {
            if (succ[j] as usize) < k {
                succ[j] += 1;
                for b in &mut succ[j + 1..] {
                    *b = 1;
                }
                next = Some(succ);
                break;
            }
        }
        Some(cur)
    })
}

/// Partition S_n by first letter and fold each shard on a worker pool.
/// Returns the per-shard accumulators in first-letter order, so any merge
/// the caller performs is deterministic no matter how many workers ran.
pub fn sharded_sweep<A, Mk, V>(n: usize, make: Mk, visit: V) -> Vec<A>
where
    A: Send,
    Mk: Fn() -> A + Sync,
    V: Fn(&mut A, &[u8]) + Sync,
{
    if n == 0 {
        let mut acc = make();
        visit(&mut acc, &[]);
        return vec![acc];
    }
    let workers = effective_jobs().clamp(1, n);
    let counter = AtomicUsize::new(0);
    let mut out: Vec<Option<A>> = (0..n).map(|_| None).collect();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut local: Vec<(usize, A)> = Vec::new();
                    loop {
                        let shard = counter.fetch_add(1, Ordering::Relaxed);
                        if shard >= n {
                            break;
                        }
                        let first = (shard + 1) as u8;
                        let mut buf = Vec::with_capacity(n);
                        buf.push(first);
                        buf.extend((1..=n as u8).filter(|&v| v != first));
                        let mut acc = make();
                        loop {
                            visit(&mut acc, &buf);
                            if !next_permutation(&mut buf[1..]) {
                                break;
                            }
                        }
                        local.push((shard, acc));
                    }
                    local
                })
            })
            .collect();
        for h in handles {
            for (shard, acc) in h.join().expect("sweep worker panicked") {
                out[shard] = Some(acc);
            }
        }
    });
    out.into_iter()
        .map(|o| o.expect("every shard visited"))
        .collect()
}

/// Number of permutations of `1..=n` avoiding every pattern in `patterns`.
pub fn count_avoiders(patterns: &[PopPattern], n: usize) -> Result<u64, PermsError> {
    guard(n)?;
    Ok(sharded_sweep(
        n,
        || 0u64,
        |acc, w| {
            if avoids_all(patterns, w) {
                *acc += 1;
            }
        },
    )
    .into_iter()
    .sum())
}

/// Avoider counts for every length `1..=n_max`.
pub fn avoider_sequence(patterns: &[PopPattern], n_max: usize) -> Result<Vec<u64>, PermsError> {
    (1..=n_max).map(|n| count_avoiders(patterns, n)).collect()
}

/// All avoiders of `patterns` in S_n, in lexicographic order.
pub fn avoider_set(patterns: &[PopPattern], n: usize) -> Result<Vec<Permutation>, PermsError> {
    guard(n)?;
    let mut out = Vec::new();
    for_each_perm(n, |w| {
        if avoids_all(patterns, w) {
            out.push(Permutation(w.to_vec()));
        }
    });
    Ok(out)
}

/// Number of words over `1..=k` of length `n` avoiding every pattern.
pub fn word_count_avoiders(
    patterns: &[PopPattern],
    n: usize,
    k: usize,
) -> Result<u64, PermsError> {
    guard(n)?;
    let mut c = 0;
    for_each_word(n, k, |w| {
        if avoids_all(patterns, w) {
            c += 1;
        }
    });
    Ok(c)
}

fn merge_shards(n: usize, name: &str, shards: Vec<BTreeMap<u64, u64>>) -> DistributionTable {
    let mut t = DistributionTable::new(n, &[name]);
    for shard in shards {
        for (k, v) in shard {
            t.add(vec![k], v);
        }
    }
    t
}

/// Distribution of the occurrence count of `p` over the permutations of
/// `1..=n` that avoid every pattern in `restriction`.
pub fn distribution(
    p: &PopPattern,
    n: usize,
    restriction: &[PopPattern],
) -> Result<DistributionTable, PermsError> {
    guard(n)?;
    let shards = sharded_sweep(n, BTreeMap::<u64, u64>::new, |acc, w| {
        if avoids_all(restriction, w) {
            *acc.entry(p.count_occurrences(w) as u64).or_default() += 1;
        }
    });
    Ok(merge_shards(n, "occurrences", shards))
}

/// Distribution of the maximum number of pairwise non-overlapping
/// occurrences of `p` (a segmented pattern) over S_n.
pub fn nonoverlap_distribution(p: &PopPattern, n: usize) -> Result<DistributionTable, PermsError> {
    guard(n)?;
    p.max_nonoverlapping(&[])?; // surface NotSegmented before sweeping
    let shards = sharded_sweep(n, BTreeMap::<u64, u64>::new, |acc, w| {
        let m = p.max_nonoverlapping(w).expect("checked segmented");
        *acc.entry(m as u64).or_default() += 1;
    });
    Ok(merge_shards(n, "nonoverlapping", shards))
}

/// Non-overlapping occurrence distribution over all words of length `n`
/// with letters in `1..=k`.
pub fn word_nonoverlap_distribution(
    p: &PopPattern,
    n: usize,
    k: usize,
) -> Result<DistributionTable, PermsError> {
    guard(n)?;
    p.max_nonoverlapping(&[])?;
    let mut t = DistributionTable::new(n, &["nonoverlapping"]);
    for_each_word(n, k, |w| {
        let m = p.max_nonoverlapping(w).expect("checked segmented");
        t.add(vec![m as u64], 1);
    });
    Ok(t)
}

/// Joint distribution of two statistics over the permutations of `1..=n`
/// avoiding every pattern in `restriction`.
pub fn joint_distribution<F, G>(
    stat_a: (&str, F),
    stat_b: (&str, G),
    n: usize,
    restriction: &[PopPattern],
) -> Result<DistributionTable, PermsError>
where
    F: Fn(&[u8]) -> u64 + Sync,
    G: Fn(&[u8]) -> u64 + Sync,
{
    guard(n)?;
    let shards = sharded_sweep(n, BTreeMap::<(u64, u64), u64>::new, |acc, w| {
        if avoids_all(restriction, w) {
            *acc.entry((stat_a.1(w), stat_b.1(w))).or_default() += 1;
        }
    });
    let mut t = DistributionTable::new(n, &[stat_a.0, stat_b.0]);
    for shard in shards {
        for ((a, b), v) in shard {
            t.add(vec![a, b], v);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::PopPattern;

    #[test]
    fn permutation_type() {
        let p: Permutation = "31254".parse().unwrap();
        assert_eq!(p.as_slice(), &[3, 1, 2, 5, 4]);
        assert_eq!(p.to_string(), "31254");
        let q: Permutation = "3,1,2,5,4".parse().unwrap();
        assert_eq!(p, q);
        assert!("31255".parse::<Permutation>().is_err());
        assert!("0".parse::<Permutation>().is_err());
        assert!("x".parse::<Permutation>().is_err());
        assert_eq!(Permutation::identity(3).to_string(), "123");
        let long = Permutation::new((1..=12).collect()).unwrap();
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10,11,12");
    }

    #[test]
    fn generation_is_lexicographic_and_complete() {
        let all: Vec<Permutation> = gen_perms(3).collect();
        let words: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        assert_eq!(words, ["123", "132", "213", "231", "312", "321"]);
        let mut count = 0usize;
        for_each_perm(6, |_| count += 1);
        assert_eq!(count, 720);
        assert_eq!(gen_perms(0).count(), 1);

        let ws: Vec<Vec<u8>> = gen_words(2, 2).collect();
        assert_eq!(ws, [[1, 1], [1, 2], [2, 1], [2, 2]]);
        let mut wc = 0usize;
        for_each_word(5, 3, |_| wc += 1);
        assert_eq!(wc, 243);
        assert_eq!(gen_words(0, 3).count(), 1);
        assert_eq!(gen_words(2, 0).count(), 0);
    }

    #[test]
    fn sweep_agrees_with_serial() {
        let pat = PopPattern::classical(&[1, 3, 2]).unwrap();
        for n in 0..=7 {
            let parallel = count_avoiders(std::slice::from_ref(&pat), n).unwrap();
            let mut serial = 0u64;
            for_each_perm(n, |w| {
                if pat.avoids(w) {
                    serial += 1;
                }
            });
            assert_eq!(parallel, serial, "n={n}");
        }
    }

    #[test]
    fn classical_avoidance_gives_catalan() {
        // 1-3-2 avoiders are counted by the Catalan numbers.
        let pat = PopPattern::classical(&[1, 3, 2]).unwrap();
        assert_eq!(
            avoider_sequence(&[pat], 7).unwrap(),
            vec![1, 2, 5, 14, 42, 132, 429]
        );
    }

    #[test]
    fn distribution_totals() {
        let pat = PopPattern::consecutive_classical(&[2, 1]).unwrap();
        let t = distribution(&pat, 4, &[]).unwrap();
        assert_eq!(t.total(), num::BigUint::from(24u32));
        // Descent distribution at n=4 is the Eulerian row 1, 11, 11, 1.
        let dense: Vec<String> = t.dense_counts().iter().map(|c| c.to_string()).collect();
        assert_eq!(dense, ["1", "11", "11", "1"]);
    }

    #[test]
    fn nonoverlap_distribution_matches_direct_count() {
        let peak = PopPattern::peak();
        let t = nonoverlap_distribution(&peak, 5).unwrap();
        let mut ones = 0u64;
        for_each_perm(5, |w| {
            if peak.max_nonoverlapping(w).unwrap() == 1 {
                ones += 1;
            }
        });
        assert_eq!(t.get(&[1]), num::BigUint::from(ones));
        let dashed = PopPattern::classical(&[1, 2]).unwrap();
        assert!(matches!(
            nonoverlap_distribution(&dashed, 3),
            Err(PermsError::Pattern(PatternError::NotSegmented { .. }))
        ));
    }

    #[test]
    fn word_sweeps() {
        let flat = crate::poset::Poset::antichain(&["1", "1'"]);
        let pat = crate::dsl::parse_pattern("11'", Some(&flat)).unwrap();
        // Words over {1} of length n always contain 11' for n >= 2.
        assert_eq!(word_count_avoiders(std::slice::from_ref(&pat), 1, 1).unwrap(), 1);
        assert_eq!(word_count_avoiders(std::slice::from_ref(&pat), 2, 1).unwrap(), 0);
        let t = word_nonoverlap_distribution(&pat, 4, 2).unwrap();
        assert_eq!(t.total(), num::BigUint::from(16u32));
    }

    #[test]
    fn enumeration_guard() {
        let pat = PopPattern::consecutive_classical(&[1, 2]).unwrap();
        let limit = enumeration_limit();
        let err = count_avoiders(&[pat], limit + 1).unwrap_err();
        assert_eq!(
            err,
            PermsError::LimitExceeded {
                n: limit + 1,
                limit
            }
        );
    }

    #[test]
    fn avoider_set_lexicographic() {
        let poset = crate::poset::Poset::build(&["1", "1'", "2"], &[("1", "2")]).unwrap();
        let p = crate::dsl::parse_pattern("11'2", Some(&poset)).unwrap();
        let got: Vec<String> = avoider_set(&[p], 3)
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(got, ["231", "312", "321"]);
    }
}
