//! Partially ordered patterns and their occurrence semantics.
//!
//! A pattern is a word of distinct poset elements with a gap constraint
//! between consecutive letters and optional end anchors. An occurrence in a
//! host sequence is a strictly increasing position tuple satisfying the
//! gaps, the anchors, and order compatibility: whenever letter `a` is below
//! letter `b` in the poset, the host value at `a`'s position must be
//! strictly below the value at `b`'s position. Incomparable letters are
//! unconstrained, which is also what lets equal word letters (words over
//! `[k]` are allowed as hosts) embed only into incomparable letters.

use crate::poset::{Poset, PosetError, PosetJson};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Hard cap on pattern length; keeps the matcher's position buffer on the
/// stack. Far above anything a brute-force sweep could use anyway.
pub const MAX_LETTERS: usize = 24;

#[derive(Debug, Error, PartialEq)]
pub enum PatternError {
    #[error("pattern must have at least one letter")]
    Empty,
    #[error("pattern has {0} letters; the supported maximum is {MAX_LETTERS}")]
    TooManyLetters(usize),
    #[error("letter `{0}` is not an element of the poset")]
    UnknownLetter(String),
    #[error("letter `{0}` repeats in the pattern word")]
    DuplicateLetter(String),
    #[error("expected {expected} gap constraints for this word, got {got}")]
    GapCount { expected: usize, got: usize },
    #[error("{op} requires a segmented (all-ADJ) pattern")]
    NotSegmented { op: &'static str },
    #[error("{op} requires an unanchored pattern")]
    AnchoredPattern { op: &'static str },
    #[error("word {0:?} is not a permutation of 1..=len")]
    NotAPermutationWord(Vec<u8>),
    #[error("multi-pattern blocks must be segmented and unanchored")]
    BadBlock,
    #[error("invalid pattern parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error("pattern JSON references poset file `{0}`; resolve it to an inline poset first")]
    UnresolvedPosetRef(String),
    #[error("invalid pattern JSON: {0}")]
    Json(String),
}

/// Constraint on the index distance between two consecutive pattern letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Gap {
    /// Exactly adjacent: `i_{j+1} = i_j + 1`.
    Adj,
    /// Anything: `i_{j+1} >= i_j + 1` (adjacency allowed).
    Free,
    /// Strictly apart: `i_{j+1} >= i_j + 2` (adjacency forbidden).
    Strict,
}

/// One occurrence: 0-based host positions, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Occurrence {
    positions: Vec<usize>,
}

impl Occurrence {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn start(&self) -> usize {
        self.positions[0]
    }

    pub fn end(&self) -> usize {
        *self.positions.last().expect("occurrences are nonempty")
    }
}

impl fmt::Display for Occurrence {
    /// 1-based positions, e.g. `(1,3,4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        write!(f, ")")
    }
}

/// A partially ordered pattern: poset + letter word + gaps + anchors.
#[derive(Clone, Debug)]
pub struct PopPattern {
    poset: Poset,
    letters: Vec<String>,
    gaps: Vec<Gap>,
    anchored_left: bool,
    anchored_right: bool,
    // Compiled matcher tables.
    lt_pred: Vec<Vec<usize>>, // j -> earlier word positions whose host value must be smaller
    gt_pred: Vec<Vec<usize>>, // j -> earlier word positions whose host value must be larger
    tail_span: Vec<usize>,    // minimum extra host indices needed after placing letter j
}

impl PartialEq for PopPattern {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset
            && self.letters == other.letters
            && self.gaps == other.gaps
            && self.anchored_left == other.anchored_left
            && self.anchored_right == other.anchored_right
    }
}
impl Eq for PopPattern {}

impl PopPattern {
    pub fn new<S: AsRef<str>>(
        poset: Poset,
        letters: &[S],
        gaps: Vec<Gap>,
        anchored_left: bool,
        anchored_right: bool,
    ) -> Result<PopPattern, PatternError> {
        let letters: Vec<String> = letters.iter().map(|s| s.as_ref().to_string()).collect();
        if letters.is_empty() {
            return Err(PatternError::Empty);
        }
        if letters.len() > MAX_LETTERS {
            return Err(PatternError::TooManyLetters(letters.len()));
        }
        if gaps.len() != letters.len() - 1 {
            return Err(PatternError::GapCount {
                expected: letters.len() - 1,
                got: gaps.len(),
            });
        }
        let mut idx = Vec::with_capacity(letters.len());
        for (i, l) in letters.iter().enumerate() {
            if letters[..i].contains(l) {
                return Err(PatternError::DuplicateLetter(l.clone()));
            }
            idx.push(
                poset
                    .index_of(l)
                    .ok_or_else(|| PatternError::UnknownLetter(l.clone()))?,
            );
        }
        let m = letters.len();
        let mut lt_pred = vec![Vec::new(); m];
        let mut gt_pred = vec![Vec::new(); m];
        for j in 0..m {
            for t in 0..j {
                if poset.lt_idx(idx[t], idx[j]) {
                    lt_pred[j].push(t);
                } else if poset.lt_idx(idx[j], idx[t]) {
                    gt_pred[j].push(t);
                }
            }
        }
        let mut tail_span = vec![0usize; m];
        for j in (0..m.saturating_sub(1)).rev() {
            tail_span[j] = tail_span[j + 1] + if gaps[j] == Gap::Strict { 2 } else { 1 };
        }
        Ok(PopPattern {
            poset,
            letters,
            gaps,
            anchored_left,
            anchored_right,
            lt_pred,
            gt_pred,
            tail_span,
        })
    }

    /// All-ADJ pattern (an SPOP): occurrences are contiguous factors.
    pub fn segmented<S: AsRef<str>>(poset: Poset, letters: &[S]) -> Result<PopPattern, PatternError> {
        let gaps = vec![Gap::Adj; letters.len().saturating_sub(1)];
        PopPattern::new(poset, letters, gaps, false, false)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn gaps(&self) -> &[Gap] {
        &self.gaps
    }

    pub fn anchored_left(&self) -> bool {
        self.anchored_left
    }

    pub fn anchored_right(&self) -> bool {
        self.anchored_right
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty words
    }

    pub fn is_segmented(&self) -> bool {
        self.gaps.iter().all(|g| *g == Gap::Adj)
    }

    /// Depth-first position assignment. `visit` returns false to stop the
    /// search; `walk` returns false iff the search was stopped.
    fn walk(&self, host: &[u8], visit: &mut impl FnMut(&[usize]) -> bool) -> bool {
        let mut buf = [0usize; MAX_LETTERS];
        self.dfs(host, 0, &mut buf, visit)
    }

    fn dfs(
        &self,
        host: &[u8],
        depth: usize,
        buf: &mut [usize; MAX_LETTERS],
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let m = self.letters.len();
        if depth == m {
            return visit(&buf[..m]);
        }
        let n = host.len();
        // Feasibility: the remaining letters need tail_span[depth] more
        // indices after this one, so pos < n - tail_span[depth].
        let cap = n.saturating_sub(self.tail_span[depth]);
        let (lo, hi) = if depth == 0 {
            (0, if self.anchored_left { cap.min(1) } else { cap })
        } else {
            let p = buf[depth - 1];
            match self.gaps[depth - 1] {
                Gap::Adj => (p + 1, cap.min(p + 2)),
                Gap::Free => (p + 1, cap),
                Gap::Strict => (p + 2, cap),
            }
        };
        let last = depth == m - 1;
        for pos in lo..hi {
            if self.anchored_right && last && pos != n - 1 {
                continue;
            }
            let v = host[pos];
            if self.lt_pred[depth].iter().any(|&t| host[buf[t]] >= v)
                || self.gt_pred[depth].iter().any(|&t| host[buf[t]] <= v)
            {
                continue;
            }
            buf[depth] = pos;
            if !self.dfs(host, depth + 1, buf, visit) {
                return false;
            }
        }
        true
    }

    /// Every occurrence, sorted lexicographically by position tuple.
    /// The host may be a permutation of 1..n or a word over an alphabet 1..k
    /// (repeated values embed only into incomparable letters).
    pub fn occurrences(&self, host: &[u8]) -> Vec<Occurrence> {
        let mut out = Vec::new();
        self.walk(host, &mut |pos| {
            out.push(Occurrence {
                positions: pos.to_vec(),
            });
            true
        });
        out
    }

    pub fn count_occurrences(&self, host: &[u8]) -> usize {
        let mut c = 0usize;
        self.walk(host, &mut |_| {
            c += 1;
            true
        });
        c
    }

    /// True iff `host` has no occurrence (short-circuits on the first one).
    pub fn avoids(&self, host: &[u8]) -> bool {
        self.walk(host, &mut |_| false)
    }

    pub fn occurs_in(&self, host: &[u8]) -> bool {
        !self.avoids(host)
    }

    /// 0-based start positions of occurrences, deduplicated, increasing.
    pub fn occurrence_starts(&self, host: &[u8]) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        self.walk(host, &mut |pos| {
            if out.last() != Some(&pos[0]) {
                out.push(pos[0]);
            }
            true
        });
        out
    }

    /// Quasi-avoidance: exactly one occurrence, occupying the final |p|
    /// positions. Defined for segmented, unanchored patterns only.
    pub fn quasi_avoids(&self, host: &[u8]) -> Result<bool, PatternError> {
        if !self.is_segmented() {
            return Err(PatternError::NotSegmented { op: "quasi_avoids" });
        }
        if self.anchored_left || self.anchored_right {
            return Err(PatternError::AnchoredPattern { op: "quasi_avoids" });
        }
        let m = self.letters.len();
        if host.len() < m {
            return Ok(false);
        }
        let mut count = 0usize;
        let mut final_window = false;
        self.walk(host, &mut |pos| {
            count += 1;
            final_window = pos[0] == host.len() - m;
            count < 2
        });
        Ok(count == 1 && final_window)
    }

    /// Maximum number of pairwise position-disjoint occurrences. Defined for
    /// segmented patterns (occurrences are equal-length windows). Greedy by
    /// earliest right endpoint; cross-checked against the interval DP in
    /// debug builds.
    pub fn max_nonoverlapping(&self, host: &[u8]) -> Result<usize, PatternError> {
        if !self.is_segmented() {
            return Err(PatternError::NotSegmented {
                op: "max_nonoverlapping",
            });
        }
        let m = self.letters.len();
        // Windows arrive in increasing start order, hence increasing end
        // order (fixed length m).
        let mut windows: Vec<usize> = Vec::new(); // starts
        self.walk(host, &mut |pos| {
            if windows.last() != Some(&pos[0]) {
                windows.push(pos[0]);
            }
            true
        });
        let mut greedy = 0usize;
        let mut next_free = 0usize; // smallest start a new window may use
        for &s in &windows {
            if s >= next_free {
                greedy += 1;
                next_free = s + m;
            }
        }
        debug_assert_eq!(greedy, dp_max_disjoint(&windows, m));
        Ok(greedy)
    }

    /// Letters and gaps reversed, anchors swapped. Occurrence counts satisfy
    /// count(p, h) = count(p.reverse(), reverse(h)).
    pub fn reverse(&self) -> PopPattern {
        let letters: Vec<String> = self.letters.iter().rev().cloned().collect();
        let gaps: Vec<Gap> = self.gaps.iter().rev().copied().collect();
        PopPattern::new(
            self.poset.clone(),
            &letters,
            gaps,
            self.anchored_right,
            self.anchored_left,
        )
        .expect("reversal preserves validity")
    }

    /// Same word over the dual poset. Occurrence counts satisfy
    /// count(p, h) = count(p.complement(), complement(h)).
    pub fn complement(&self) -> PopPattern {
        PopPattern::new(
            self.poset.dual(),
            &self.letters,
            self.gaps.clone(),
            self.anchored_left,
            self.anchored_right,
        )
        .expect("dualizing preserves validity")
    }

    // ---- constructors for the pattern families used throughout ----

    /// Classical pattern: chain poset by value, all gaps FREE.
    pub fn classical(word: &[u8]) -> Result<PopPattern, PatternError> {
        PopPattern::dashed_classical(&word.iter().map(|&v| vec![v]).collect::<Vec<_>>())
    }

    /// Consecutive classical pattern: chain poset by value, all gaps ADJ.
    pub fn consecutive_classical(word: &[u8]) -> Result<PopPattern, PatternError> {
        PopPattern::dashed_classical(&[word.to_vec()])
    }

    /// Generalized (dashed) classical pattern: ADJ inside each block, FREE
    /// between blocks; the concatenated values must form a permutation of
    /// 1..=total.
    pub fn dashed_classical(blocks: &[Vec<u8>]) -> Result<PopPattern, PatternError> {
        let word: Vec<u8> = blocks.iter().flatten().copied().collect();
        let m = word.len();
        let mut seen = vec![false; m];
        for &v in &word {
            if v == 0 || v as usize > m || seen[v as usize - 1] {
                return Err(PatternError::NotAPermutationWord(word.clone()));
            }
            seen[v as usize - 1] = true;
        }
        let elements: Vec<String> = (1..=m).map(|v| v.to_string()).collect();
        let poset = Poset::chain(&elements);
        let letters: Vec<String> = word.iter().map(|v| v.to_string()).collect();
        let mut gaps = Vec::with_capacity(m.saturating_sub(1));
        for (bi, b) in blocks.iter().enumerate() {
            if bi > 0 {
                gaps.push(Gap::Free);
            }
            for _ in 1..b.len() {
                gaps.push(Gap::Adj);
            }
        }
        PopPattern::new(poset, &letters, gaps, false, false)
    }

    /// The peak SPOP `1'21''`: middle letter above two incomparable letters,
    /// all adjacent. Counts entries greater than both neighbors.
    pub fn peak() -> PopPattern {
        let poset = Poset::build(&["1'", "1''", "2"], &[("1'", "2"), ("1''", "2")])
            .expect("acyclic by construction");
        PopPattern::segmented(poset, &["1'", "2", "1''"]).expect("valid by construction")
    }

    /// The valley SPOP `2'12''`: middle letter below two incomparable
    /// letters, all adjacent.
    pub fn valley() -> PopPattern {
        let poset = Poset::build(&["1", "2'", "2''"], &[("1", "2'"), ("1", "2''")])
            .expect("acyclic by construction");
        PopPattern::segmented(poset, &["2'", "1", "2''"]).expect("valid by construction")
    }

    /// Flat-poset SPOP `a1…ak a a(k+1)…a(k+l)`: one bottom letter `a` with
    /// `before` incomparable letters on its left and `after` on its right,
    /// all adjacent.
    pub fn flat_spop(before: usize, after: usize) -> Result<PopPattern, PatternError> {
        if before + after == 0 {
            return Err(PatternError::BadParams(
                "flat SPOP needs at least one letter besides the bottom".into(),
            ));
        }
        let poset = Poset::flat(before + after);
        let mut letters: Vec<String> = (1..=before).map(|i| format!("a{i}")).collect();
        letters.push("a".to_string());
        letters.extend((before + 1..=before + after).map(|i| format!("a{i}")));
        PopPattern::segmented(poset, &letters)
    }

    /// Flat-poset pattern `a-a1…ak`: bottom letter first, FREE gap to the
    /// adjacent block of k letters above it.
    pub fn flat_dashed(k: usize) -> Result<PopPattern, PatternError> {
        if k == 0 {
            return Err(PatternError::BadParams(
                "flat dashed pattern needs k >= 1".into(),
            ));
        }
        let poset = Poset::flat(k);
        let mut letters = vec!["a".to_string()];
        letters.extend((1..=k).map(|i| format!("a{i}")));
        let mut gaps = vec![Gap::Free];
        gaps.extend(std::iter::repeat_n(Gap::Adj, k - 1));
        PopPattern::new(poset, &letters, gaps, false, false)
    }

    /// Segmented zigzag POP of length k: consecutive letters alternately
    /// related, starting with `z1 > z2` when `down_up` (else `z1 < z2`);
    /// letters two apart stay incomparable. A permutation avoiding the
    /// down-up zigzag of length k has no k consecutive letters alternating
    /// in that shape.
    pub fn alternating(k: usize, down_up: bool) -> Result<PopPattern, PatternError> {
        if k < 2 {
            return Err(PatternError::BadParams("zigzag needs k >= 2".into()));
        }
        let elements: Vec<String> = (1..=k).map(|i| format!("z{i}")).collect();
        let mut rels = Vec::new();
        for i in 1..k {
            let down = if down_up { i % 2 == 1 } else { i % 2 == 0 };
            let (lo, hi) = if down { (i + 1, i) } else { (i, i + 1) };
            rels.push((format!("z{lo}"), format!("z{hi}")));
        }
        let poset = Poset::build(&elements, &rels)?;
        PopPattern::segmented(poset, &elements)
    }

    /// Co-unimodal segmented POP of length k: the word s1…sk with
    /// s1 > … > sj < … < sk along consecutive letters plus sk < s1 (the
    /// first letter is the largest); non-adjacent run letters incomparable.
    pub fn counimodal(k: usize, j: usize) -> Result<PopPattern, PatternError> {
        let mut rels = counimodal_runs(k, j)?;
        if k > j {
            rels.push((format!("s{k}"), "s1".to_string()));
        }
        let elements: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
        let poset = Poset::build(&elements, &rels)?;
        PopPattern::segmented(poset, &elements)
    }

    /// Co-unimodal POP without the "starts at the largest letter"
    /// requirement (the sk < s1 relation is dropped).
    pub fn free_counimodal(k: usize, j: usize) -> Result<PopPattern, PatternError> {
        let rels = counimodal_runs(k, j)?;
        let elements: Vec<String> = (1..=k).map(|i| format!("s{i}")).collect();
        let poset = Poset::build(&elements, &rels)?;
        PopPattern::segmented(poset, &elements)
    }

    /// Multi-pattern p1-p2-…-pk: segmented unanchored blocks on disjoint
    /// letter alphabets, concatenated with FREE gaps; block posets are glued
    /// by disjoint union so letters of different blocks are incomparable.
    pub fn multi_pattern(blocks: &[PopPattern]) -> Result<PopPattern, PatternError> {
        if blocks.is_empty() {
            return Err(PatternError::Empty);
        }
        if blocks
            .iter()
            .any(|b| !b.is_segmented() || b.anchored_left || b.anchored_right)
        {
            return Err(PatternError::BadBlock);
        }
        let mut poset = blocks[0].poset.clone();
        for b in &blocks[1..] {
            poset = poset.disjoint_union(&b.poset)?;
        }
        let mut letters: Vec<String> = Vec::new();
        let mut gaps: Vec<Gap> = Vec::new();
        for (bi, b) in blocks.iter().enumerate() {
            if bi > 0 {
                gaps.push(Gap::Free);
            }
            letters.extend(b.letters.iter().cloned());
            gaps.extend(std::iter::repeat_n(Gap::Adj, b.letters.len() - 1));
        }
        PopPattern::new(poset, &letters, gaps, false, false)
    }

    // ---- JSON form ----

    pub fn from_json(pj: &PatternJson) -> Result<PopPattern, PatternError> {
        let poset = match &pj.poset {
            PosetRef::Inline(p) => Poset::build(&p.elements, &p.relations)?,
            PosetRef::File(path) => return Err(PatternError::UnresolvedPosetRef(path.clone())),
        };
        PopPattern::new(
            poset,
            &pj.letters,
            pj.gaps.clone(),
            pj.anchored_left,
            pj.anchored_right,
        )
    }

    pub fn from_json_str(s: &str) -> Result<PopPattern, PatternError> {
        let pj: PatternJson =
            serde_json::from_str(s).map_err(|e| PatternError::Json(e.to_string()))?;
        PopPattern::from_json(&pj)
    }

    pub fn to_json(&self) -> PatternJson {
        PatternJson {
            poset: PosetRef::Inline(self.poset.to_json()),
            letters: self.letters.clone(),
            gaps: self.gaps.clone(),
            anchored_left: self.anchored_left,
            anchored_right: self.anchored_right,
        }
    }
}

fn counimodal_runs(k: usize, j: usize) -> Result<Vec<(String, String)>, PatternError> {
    if k < 1 || j < 1 || j > k {
        return Err(PatternError::BadParams(format!(
            "co-unimodal shape needs 1 <= j <= k, got k={k} j={j}"
        )));
    }
    let mut rels = Vec::new();
    for i in 1..j {
        rels.push((format!("s{}", i + 1), format!("s{i}"))); // s_i > s_{i+1}
    }
    for i in j..k {
        rels.push((format!("s{i}"), format!("s{}", i + 1))); // s_i < s_{i+1}
    }
    Ok(rels)
}

/// True iff `host` avoids every pattern in the list.
pub fn avoids_all(patterns: &[PopPattern], host: &[u8]) -> bool {
    patterns.iter().all(|p| p.avoids(host))
}

/// Weighted-interval-scheduling DP (unit weights) over equal-length windows
/// given by increasing starts; used to cross-check the greedy answer.
fn dp_max_disjoint(starts: &[usize], m: usize) -> usize {
    let mut best = vec![0usize; starts.len() + 1];
    for (i, &s) in starts.iter().enumerate() {
        // Windows are [start, start+m-1]; compatible predecessors end before s.
        let j = starts[..i].partition_point(|&t| t + m <= s);
        best[i + 1] = best[i].max(best[j] + 1);
    }
    *best.last().unwrap()
}

/// Serialized pattern: poset (inline or `@file` reference to a poset JSON),
/// letters, gaps, anchors.
#[derive(Serialize, Deserialize)]
pub struct PatternJson {
    pub poset: PosetRef,
    pub letters: Vec<String>,
    pub gaps: Vec<Gap>,
    #[serde(default)]
    pub anchored_left: bool,
    #[serde(default)]
    pub anchored_right: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetRef {
    Inline(PosetJson),
    File(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> Poset {
        Poset::build(&["1", "2", "1'"], &[("1", "2")]).unwrap()
    }

    fn chain3() -> Poset {
        Poset::chain(&["1", "2", "3"])
    }

    fn pos(occ: &[Occurrence]) -> Vec<Vec<usize>> {
        occ.iter().map(|o| o.positions().to_vec()).collect()
    }

    #[test]
    fn dashed_pop_on_31254() {
        // 1'-12 over the poset 1<2 with 1' incomparable.
        let p = PopPattern::new(
            fig1(),
            &["1'", "1", "2"],
            vec![Gap::Free, Gap::Adj],
            false,
            false,
        )
        .unwrap();
        let occ = p.occurrences(&[3, 1, 2, 5, 4]);
        assert_eq!(pos(&occ), vec![vec![0, 1, 2], vec![0, 2, 3], vec![1, 2, 3]]);
    }

    #[test]
    fn classical_dashed_2_31() {
        let p = PopPattern::dashed_classical(&[vec![2], vec![3, 1]]).unwrap();
        let occ = p.occurrences(&[5, 1, 6, 4, 2, 3]);
        assert_eq!(pos(&occ), vec![vec![0, 2, 3]]);
        let p = PopPattern::classical(&[2, 3, 1]).unwrap();
        assert_eq!(p.count_occurrences(&[5, 1, 6, 4, 2, 3]), 3);
    }

    #[test]
    fn anchors() {
        let host = [3, 2, 4, 1, 5];
        let p = PopPattern::new(
            chain3(),
            &["2", "1", "3"],
            vec![Gap::Free, Gap::Adj],
            true,
            false,
        )
        .unwrap();
        assert_eq!(p.count_occurrences(&host), 2);
        let p = PopPattern::new(
            chain3(),
            &["3", "2", "1"],
            vec![Gap::Free, Gap::Free],
            false,
            true,
        )
        .unwrap();
        assert_eq!(p.count_occurrences(&host), 0);
    }

    #[test]
    fn strict_gap_box() {
        // 1~23: first two letters must not be adjacent.
        let p = PopPattern::new(
            chain3(),
            &["1", "2", "3"],
            vec![Gap::Strict, Gap::Adj],
            false,
            false,
        )
        .unwrap();
        assert_eq!(pos(&p.occurrences(&[1, 3, 2, 4])), vec![vec![0, 2, 3]]);
        assert_eq!(pos(&p.occurrences(&[1, 2, 3, 4])), vec![vec![0, 2, 3]]);
        assert_eq!(p.count_occurrences(&[1, 2, 3]), 0);
    }

    #[test]
    fn peak_and_valley_counts() {
        assert_eq!(PopPattern::peak().count_occurrences(&[2, 5, 1, 4, 3]), 2);
        assert_eq!(PopPattern::valley().count_occurrences(&[2, 5, 1, 4, 3]), 1);
        // Shorter host than pattern: no occurrences.
        assert_eq!(PopPattern::peak().count_occurrences(&[1, 2]), 0);
    }

    #[test]
    fn segment_11p2_on_31254() {
        let p = PopPattern::segmented(fig1(), &["1", "1'", "2"]).unwrap();
        assert_eq!(p.count_occurrences(&[3, 1, 2, 5, 4]), 2);
    }

    #[test]
    fn s3_avoiders_of_11p2() {
        let p = PopPattern::segmented(fig1(), &["1", "1'", "2"]).unwrap();
        let mut avoiders = Vec::new();
        let perms: [[u8; 3]; 6] = [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ];
        for w in perms {
            if p.avoids(&w) {
                avoiders.push(w);
            }
        }
        assert_eq!(avoiders, vec![[2, 3, 1], [3, 1, 2], [3, 2, 1]]);
        assert!(p.avoids(&[2, 3, 1]));
        let identity = PopPattern::consecutive_classical(&[1, 2, 3]).unwrap();
        assert!(!identity.avoids(&[1, 2, 3]));
    }

    #[test]
    fn quasi_avoidance() {
        let p11 = PopPattern::segmented(
            Poset::antichain(&["1", "1'"]),
            &["1", "1'"],
        )
        .unwrap();
        assert!(p11.quasi_avoids(&[1, 2]).unwrap());
        assert!(p11.quasi_avoids(&[2, 1]).unwrap());
        assert!(!p11.quasi_avoids(&[1, 2, 3]).unwrap());
        assert!(!p11.quasi_avoids(&[1]).unwrap());

        let dashed = PopPattern::classical(&[1, 2]).unwrap();
        assert_eq!(
            dashed.quasi_avoids(&[1, 2]).unwrap_err(),
            PatternError::NotSegmented { op: "quasi_avoids" }
        );
        let anchored =
            PopPattern::new(chain3(), &["1", "2"], vec![Gap::Adj], true, false).unwrap();
        assert!(matches!(
            anchored.quasi_avoids(&[1, 2]),
            Err(PatternError::AnchoredPattern { .. })
        ));
    }

    #[test]
    fn max_nonoverlapping_examples() {
        let p = PopPattern::segmented(fig1(), &["1", "1'", "2"]).unwrap();
        assert_eq!(p.max_nonoverlapping(&[6, 2, 1, 3, 9, 4, 7, 8, 5]).unwrap(), 2);
        let p11 = PopPattern::segmented(
            Poset::antichain(&["1", "1'"]),
            &["1", "1'"],
        )
        .unwrap();
        assert_eq!(p11.max_nonoverlapping(&[1, 2, 3, 4]).unwrap(), 2);
        // A host avoiding the pattern has no windows at all.
        assert_eq!(p.max_nonoverlapping(&[1, 1, 1]).unwrap(), 0);
        assert!(PopPattern::classical(&[1, 2])
            .unwrap()
            .max_nonoverlapping(&[1, 2])
            .is_err());
    }

    #[test]
    fn word_hosts() {
        let p12 = PopPattern::consecutive_classical(&[1, 2]).unwrap();
        assert_eq!(p12.count_occurrences(&[1, 1]), 0);
        let p12f = PopPattern::classical(&[1, 2]).unwrap();
        assert_eq!(p12f.count_occurrences(&[1, 2, 1]), 1);
        let p11 = PopPattern::segmented(
            Poset::antichain(&["1", "1'"]),
            &["1", "1'"],
        )
        .unwrap();
        for w in [[1u8, 1], [1, 2], [2, 1], [2, 2]] {
            assert_eq!(p11.count_occurrences(&w), 1);
        }
    }

    #[test]
    fn reverse_complement_covariance() {
        let p = PopPattern::new(
            fig1(),
            &["1'", "1", "2"],
            vec![Gap::Free, Gap::Adj],
            true,
            false,
        )
        .unwrap();
        let host: Vec<u8> = vec![3, 1, 2, 5, 4];
        let rev_host: Vec<u8> = host.iter().rev().copied().collect();
        let comp_host: Vec<u8> = host.iter().map(|&v| 6 - v).collect();
        assert_eq!(
            p.count_occurrences(&host),
            p.reverse().count_occurrences(&rev_host)
        );
        assert_eq!(
            p.count_occurrences(&host),
            p.complement().count_occurrences(&comp_host)
        );
        assert_eq!(p.reverse().reverse(), p);
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn constructor_validation() {
        assert_eq!(
            PopPattern::segmented(chain3(), &([] as [&str; 0])).unwrap_err(),
            PatternError::Empty
        );
        assert_eq!(
            PopPattern::segmented(chain3(), &["1", "9"]).unwrap_err(),
            PatternError::UnknownLetter("9".into())
        );
        assert_eq!(
            PopPattern::segmented(chain3(), &["1", "1"]).unwrap_err(),
            PatternError::DuplicateLetter("1".into())
        );
        assert!(matches!(
            PopPattern::new(chain3(), &["1", "2"], vec![], false, false),
            Err(PatternError::GapCount { expected: 1, got: 0 })
        ));
        assert!(matches!(
            PopPattern::classical(&[1, 3]),
            Err(PatternError::NotAPermutationWord(_))
        ));
        // j=1 with k>1 forces sk<s1<...<sk, a cycle.
        assert!(matches!(
            PopPattern::counimodal(3, 1),
            Err(PatternError::Poset(PosetError::Cycle { .. }))
        ));
        assert!(PopPattern::free_counimodal(3, 1).is_ok());
    }

    #[test]
    fn counimodal_shapes() {
        // counimodal(4,2) is the POP for 4123: s1>s2<s3<s4, s4<s1.
        let p = PopPattern::counimodal(4, 2).unwrap();
        assert!(p.occurs_in(&[4, 1, 2, 3]));
        assert!(!p.occurs_in(&[3, 1, 2, 4])); // last letter above first
        let f = PopPattern::free_counimodal(4, 2).unwrap();
        assert!(f.occurs_in(&[3, 1, 2, 4])); // free variant drops s4<s1
    }

    #[test]
    fn multi_pattern_blocks() {
        let b1 = PopPattern::consecutive_classical(&[1, 2]).unwrap();
        // Second block must use disjoint labels: build 12 on primed letters.
        let poset = Poset::chain(&["1'", "2'"]);
        let b2 = PopPattern::segmented(poset, &["1'", "2'"]).unwrap();
        let mp = PopPattern::multi_pattern(&[b1.clone(), b2]).unwrap();
        assert_eq!(mp.len(), 4);
        assert_eq!(mp.gaps(), &[Gap::Adj, Gap::Free, Gap::Adj]);
        // Blocks on overlapping alphabets are rejected.
        assert!(matches!(
            PopPattern::multi_pattern(&[b1.clone(), b1.clone()]),
            Err(PatternError::Poset(PosetError::UnionCollision(_)))
        ));
        // Dashed blocks are rejected.
        let dashed = PopPattern::classical(&[1, 2]).unwrap();
        assert!(matches!(
            PopPattern::multi_pattern(&[dashed]),
            Err(PatternError::BadBlock)
        ));
    }

    #[test]
    fn flat_patterns() {
        let p = PopPattern::flat_spop(0, 2).unwrap();
        assert_eq!(p.letters(), &["a", "a1", "a2"]);
        assert!(p.occurs_in(&[1, 3, 2]));
        assert!(p.avoids(&[3, 1, 2]));
        let d = PopPattern::flat_dashed(2).unwrap();
        assert_eq!(d.gaps(), &[Gap::Free, Gap::Adj]);
        assert!(d.occurs_in(&[1, 4, 3, 2])); // a=1 ... 43 adjacent block
    }

    #[test]
    fn json_roundtrip() {
        let p = PopPattern::new(
            fig1(),
            &["1'", "1", "2"],
            vec![Gap::Free, Gap::Adj],
            false,
            true,
        )
        .unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        assert!(s.contains("\"FREE\""));
        let q = PopPattern::from_json_str(&s).unwrap();
        assert_eq!(p, q);
        let with_ref = r#"{"poset": "@fig1.json", "letters": ["1"], "gaps": []}"#;
        assert!(matches!(
            PopPattern::from_json_str(with_ref),
            Err(PatternError::UnresolvedPosetRef(_))
        ));
    }
}
