//! Classical and pattern-derived permutation statistics.
//!
//! All functions take the one-line word `w` where `w[i]` is the image of
//! `i + 1`. Functions that need a genuine permutation of `1..=n` (inverse,
//! complement, cycle decomposition) say so; the rest work on arbitrary words.

use crate::pattern::PopPattern;

/// Number of inversions: pairs `i < j` with `w[i] > w[j]`.
pub fn inv(w: &[u8]) -> u64 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

/// Number of descents: positions `i` (1-based) with `w[i] > w[i+1]`.
pub fn des(w: &[u8]) -> u64 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as u64
}

/// Major index: sum of the 1-based descent positions.
pub fn maj(w: &[u8]) -> u64 {
    w.windows(2)
        .enumerate()
        .filter(|(_, p)| p[0] > p[1])
        .map(|(i, _)| (i + 1) as u64)
        .sum()
}

/// Group inverse of a permutation of `1..=n`.
pub fn inverse(w: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; w.len()];
    for (i, &v) in w.iter().enumerate() {
        out[v as usize - 1] = (i + 1) as u8;
    }
    out
}

pub fn reverse(w: &[u8]) -> Vec<u8> {
    w.iter().rev().copied().collect()
}

/// Complement `v -> n + 1 - v` of a permutation of `1..=n`.
pub fn complement(w: &[u8]) -> Vec<u8> {
    let n = w.len() as u8;
    w.iter().map(|&v| n + 1 - v).collect()
}

/// Interior positions `j` with `w[j-1] < w[j] > w[j+1]`.
pub fn peaks(w: &[u8]) -> u64 {
    w.windows(3).filter(|t| t[0] < t[1] && t[1] > t[2]).count() as u64
}

/// Interior positions `j` with `w[j-1] > w[j] < w[j+1]`.
pub fn valleys(w: &[u8]) -> u64 {
    w.windows(3).filter(|t| t[0] > t[1] && t[1] < t[2]).count() as u64
}

pub fn left_to_right_minima(w: &[u8]) -> u64 {
    let mut best = u8::MAX;
    let mut c = 0;
    for &v in w {
        if v < best {
            best = v;
            c += 1;
        }
    }
    c
}

fn padded(w: &[u8], j: isize) -> u8 {
    if j < 0 || j as usize >= w.len() {
        0
    } else {
        w[j as usize]
    }
}

/// Maxima of `w` read with virtual zeros appended at both ends:
/// positions `j` with `w[j-1] < w[j] > w[j+1]` where out-of-range
/// neighbours count as 0. Every letter of a permutation is then exactly one
/// of maximum / minimum / double rise / double fall.
pub fn modified_maxima(w: &[u8]) -> u64 {
    (0..w.len() as isize)
        .filter(|&j| padded(w, j - 1) < w[j as usize] && w[j as usize] > padded(w, j + 1))
        .count() as u64
}

/// Minima with virtual boundary zeros; see [`modified_maxima`].
pub fn modified_minima(w: &[u8]) -> u64 {
    (0..w.len() as isize)
        .filter(|&j| padded(w, j - 1) > w[j as usize] && w[j as usize] < padded(w, j + 1))
        .count() as u64
}

/// Double rises with virtual boundary zeros: `w[j-1] < w[j] < w[j+1]`.
pub fn double_rises(w: &[u8]) -> u64 {
    (0..w.len() as isize)
        .filter(|&j| padded(w, j - 1) < w[j as usize] && w[j as usize] < padded(w, j + 1))
        .count() as u64
}

/// Double falls with virtual boundary zeros: `w[j-1] > w[j] > w[j+1]`.
pub fn double_falls(w: &[u8]) -> u64 {
    (0..w.len() as isize)
        .filter(|&j| padded(w, j - 1) > w[j as usize] && w[j as usize] > padded(w, j + 1))
        .count() as u64
}

/// Positions that beat both cyclic neighbours (the word read around a
/// circle). A single letter is not a cyclic maximum.
pub fn circular_maxima(w: &[u8]) -> u64 {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    (0..n)
        .filter(|&j| w[j] > w[(j + n - 1) % n] && w[j] > w[(j + 1) % n])
        .count() as u64
}

/// Down-up alternation: `w[0] > w[1] < w[2] > ...`. Words of length at most
/// one alternate vacuously.
pub fn is_alternating(w: &[u8]) -> bool {
    w.windows(2).enumerate().all(|(i, p)| {
        if i % 2 == 0 {
            p[0] > p[1]
        } else {
            p[0] < p[1]
        }
    })
}

/// Cycle decomposition of a permutation of `1..=n` in standard form: each
/// cycle written with its least element first, cycles ordered by decreasing
/// least element.
pub fn cycle_decomposition(w: &[u8]) -> Vec<Vec<u8>> {
    let n = w.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 1..=n as u8 {
        if seen[start as usize - 1] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = start;
        while !seen[v as usize - 1] {
            seen[v as usize - 1] = true;
            cyc.push(v);
            v = w[v as usize - 1];
        }
        cycles.push(cyc);
    }
    cycles.reverse(); // least elements now decreasing
    cycles
}

/// The statistic `place`: 1-based starting positions of the occurrences of
/// `p` in `w`, each start listed once, increasing.
pub fn place_sigma(p: &PopPattern, w: &[u8]) -> Vec<usize> {
    p.occurrence_starts(w).into_iter().map(|s| s + 1).collect()
}

/// Sum of the 1-based occurrence starting positions of `p` in `w`.
pub fn maj_sigma(p: &PopPattern, w: &[u8]) -> u64 {
    place_sigma(p, w).into_iter().map(|s| s as u64).sum()
}
