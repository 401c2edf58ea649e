//! Constructive bijections with round-trip and image verification.
//!
//! Two families:
//!
//! * **Cycle form ↔ flat-pattern avoiders.** Writing a permutation in
//!   standard cycle form (least element first in each cycle, cycles in
//!   decreasing order of least element) and erasing the parentheses maps the
//!   permutations with all cycles of length ≤ k bijectively onto the
//!   permutations avoiding the flat pattern `a-a1…ak`. The inverse cuts the
//!   one-line word at its left-to-right minima.
//!
//! * **Hypercube faces ↔ good permutations.** The 2-dimensional faces of the
//!   (n+1)-dimensional hypercube — an (n+1)-vector over {0,1} with two marked
//!   coordinates — biject onto the "good" (n+2)-permutations: those avoiding
//!   dashed 2-1-3 with exactly one occurrence of the consecutive pattern 312.
//!   Both sides have cardinality C(n+1,2)·2^(n−1).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::pattern::{PatternError, PopPattern};
use crate::perms::stats::cycle_decomposition;
use crate::perms::{self, PermsError, Permutation};

#[derive(Debug, Error, PartialEq)]
pub enum BijectionError {
    #[error("cycle of length {len} exceeds the bound k = {k}")]
    CycleTooLong { len: usize, k: usize },
    #[error("permutation contains the flat pattern a-a1…a{k}; not in the avoidance class")]
    NotAvoider { k: usize },
    #[error("malformed cycle form: {0}")]
    BadCycles(String),
    #[error("malformed face: {0}")]
    BadFace(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Perms(#[from] PermsError),
}

// ---------------------------------------------------------------------------
// Cycle forms
// ---------------------------------------------------------------------------

/// A permutation written in cycle notation, kept in standard form: each cycle
/// lists its least element first, and cycles are ordered by decreasing least
/// element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleForm {
    cycles: Vec<Vec<u8>>,
}

impl CycleForm {
    /// Standard cycle form of `p`.
    pub fn from_permutation(p: &Permutation) -> CycleForm {
        CycleForm {
            cycles: cycle_decomposition(p),
        }
    }

    /// Build from explicit cycles; validates that they partition `1..=n` and
    /// normalizes to standard form.
    pub fn new(cycles: Vec<Vec<u8>>) -> Result<CycleForm, BijectionError> {
        let n: usize = cycles.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for c in &cycles {
            if c.is_empty() {
                return Err(BijectionError::BadCycles("empty cycle".into()));
            }
            for &v in c {
                if v == 0 || v as usize > n || seen[v as usize] {
                    return Err(BijectionError::BadCycles(format!(
                        "values must partition 1..={n}; offending value {v}"
                    )));
                }
                seen[v as usize] = true;
            }
        }
        let mut cycles: Vec<Vec<u8>> = cycles
            .into_iter()
            .map(|mut c| {
                let lo = c.iter().position(|v| v == c.iter().min().unwrap()).unwrap();
                c.rotate_left(lo);
                c
            })
            .collect();
        cycles.sort_by(|a, b| b[0].cmp(&a[0]));
        Ok(CycleForm { cycles })
    }

    pub fn cycles(&self) -> &[Vec<u8>] {
        &self.cycles
    }

    pub fn max_cycle_len(&self) -> usize {
        self.cycles.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The permutation (as a function) these cycles describe.
    pub fn to_permutation(&self) -> Permutation {
        let n: usize = self.cycles.iter().map(Vec::len).sum();
        let mut one_line = vec![0u8; n];
        for c in &self.cycles {
            for (i, &v) in c.iter().enumerate() {
                one_line[v as usize - 1] = c[(i + 1) % c.len()];
            }
        }
        Permutation::new(one_line).expect("cycles partition 1..=n")
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cycles {
            let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", inner.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for CycleForm {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut cycles = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(BijectionError::BadCycles(format!(
                    "expected '(' at: {rest}"
                )));
            };
            let Some(close) = inner.find(')') else {
                return Err(BijectionError::BadCycles("unclosed '('".into()));
            };
            let body = &inner[..close];
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let v: u8 = tok
                    .parse()
                    .map_err(|_| BijectionError::BadCycles(format!("bad value: {tok}")))?;
                cycle.push(v);
            }
            if cycle.is_empty() {
                return Err(BijectionError::BadCycles("empty cycle".into()));
            }
            cycles.push(cycle);
            rest = inner[close + 1..].trim_start();
        }
        CycleForm::new(cycles)
    }
}

/// Standard cycle form with parentheses erased: maps permutations with all
/// cycles of length ≤ k onto avoiders of the flat pattern `a-a1…ak`.
pub fn cycles_to_avoider(p: &Permutation, k: usize) -> Result<Permutation, BijectionError> {
    let cycles = cycle_decomposition(p);
    if let Some(c) = cycles.iter().find(|c| c.len() > k) {
        return Err(BijectionError::CycleTooLong { len: c.len(), k });
    }
    let word: Vec<u8> = cycles.into_iter().flatten().collect();
    Ok(Permutation::new(word).expect("cycles partition 1..=n"))
}

/// Inverse of [`cycles_to_avoider`]: cut the avoider at its left-to-right
/// minima; the segments are the cycles of the preimage.
pub fn avoider_to_cycles(sigma: &Permutation, k: usize) -> Result<Permutation, BijectionError> {
    let pattern = PopPattern::flat_dashed(k)?;
    if pattern.occurs_in(sigma) {
        return Err(BijectionError::NotAvoider { k });
    }
    let mut cycles: Vec<Vec<u8>> = Vec::new();
    let mut min_so_far = u8::MAX;
    for &v in sigma.as_slice() {
        if v < min_so_far {
            min_so_far = v;
            cycles.push(vec![v]);
        } else {
            cycles.last_mut().expect("first letter starts a cycle").push(v);
        }
    }
    debug_assert!(cycles.iter().all(|c| c.len() <= k));
    Ok(CycleForm { cycles }.to_permutation())
}

// ---------------------------------------------------------------------------
// Hypercube faces
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum FaceSlot {
    Zero,
    One,
    X,
    Y,
}

/// A 2-dimensional face of the hypercube: a binary vector with two marked
/// coordinates, written as a string over `{0,1,x,y}` with `x` before `y`
/// (e.g. `"110x0y01"`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HypercubeFace {
    slots: Vec<FaceSlot>,
}

impl HypercubeFace {
    /// Build from the vector of free bits (length n+1, entries at the marked
    /// coordinates ignored) and the two marked coordinates `x_pos < y_pos`.
    pub fn new(bits: &[bool], x_pos: usize, y_pos: usize) -> Result<HypercubeFace, BijectionError> {
        let m = bits.len();
        if x_pos >= y_pos || y_pos >= m {
            return Err(BijectionError::BadFace(format!(
                "marks must satisfy x < y < length; got x = {x_pos}, y = {y_pos}, length = {m}"
            )));
        }
        let slots = (0..m)
            .map(|i| {
                if i == x_pos {
                    FaceSlot::X
                } else if i == y_pos {
                    FaceSlot::Y
                } else if bits[i] {
                    FaceSlot::One
                } else {
                    FaceSlot::Zero
                }
            })
            .collect();
        Ok(HypercubeFace { slots })
    }

    /// Length of the underlying binary vector (n+1 for the (n+1)-dimensional
    /// hypercube).
    pub fn vector_len(&self) -> usize {
        self.slots.len()
    }

    /// Length of the permutation this face maps to (n+2).
    pub fn perm_len(&self) -> usize {
        self.slots.len() + 1
    }

    pub fn x_pos(&self) -> usize {
        self.slots.iter().position(|&s| s == FaceSlot::X).unwrap()
    }

    pub fn y_pos(&self) -> usize {
        self.slots.iter().position(|&s| s == FaceSlot::Y).unwrap()
    }
}

impl fmt::Display for HypercubeFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.slots {
            let c = match s {
                FaceSlot::Zero => '0',
                FaceSlot::One => '1',
                FaceSlot::X => 'x',
                FaceSlot::Y => 'y',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for HypercubeFace {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut slots = Vec::with_capacity(s.len());
        for ch in s.chars() {
            slots.push(match ch {
                '0' => FaceSlot::Zero,
                '1' => FaceSlot::One,
                'x' => FaceSlot::X,
                'y' => FaceSlot::Y,
                other => {
                    return Err(BijectionError::BadFace(format!(
                        "invalid character: {other}"
                    )))
                }
            });
        }
        let xs = slots.iter().filter(|&&s| s == FaceSlot::X).count();
        let ys = slots.iter().filter(|&&s| s == FaceSlot::Y).count();
        if xs != 1 || ys != 1 {
            return Err(BijectionError::BadFace(
                "need exactly one x and one y".into(),
            ));
        }
        let face = HypercubeFace { slots };
        if face.x_pos() >= face.y_pos() {
            return Err(BijectionError::BadFace("x must precede y".into()));
        }
        Ok(face)
    }
}

/// All faces of the (n+1)-dimensional hypercube (vector length n+1), in
/// deterministic order: by x position, then y position, then free bits read
/// as a binary counter. Requires n ≥ 1; there are C(n+1,2)·2^(n−1) of them.
pub fn enumerate_faces(n: usize) -> Vec<HypercubeFace> {
    let m = n + 1;
    let mut out = Vec::new();
    if m < 2 {
        return out;
    }
    let free = m - 2;
    for x_pos in 0..m {
        for y_pos in x_pos + 1..m {
            for mask in 0u64..(1u64 << free) {
                let mut bits = vec![false; m];
                let mut bit = 0;
                for (i, b) in bits.iter_mut().enumerate() {
                    if i != x_pos && i != y_pos {
                        *b = mask >> (free - 1 - bit) & 1 == 1;
                        bit += 1;
                    }
                }
                out.push(HypercubeFace::new(&bits, x_pos, y_pos).expect("valid by construction"));
            }
        }
    }
    out
}

/// The slot-filling procedure: reads the face left to right and places
/// `1, 2, …, n+2` into the permutation.
///
/// A leading free bit sends the current smallest value to the far left (bit
/// 0) or far right (bit 1) and recurses on the shortened face. Once the `x`
/// mark leads, the value after the consumed prefix becomes the pivot sitting
/// at the `y` coordinate; the empty region right of the pivot (`B`) is filled
/// first, steered by the bits right of `y`, then the region left of the pivot
/// (`A`), steered by the bits between `x` and `y`; each region's last empty
/// slot takes that region's largest value. Every value placed in `A` exceeds
/// every value in `B`, which pins the unique consecutive-312 occurrence at
/// the pivot.
pub fn face_to_good_perm(face: &HypercubeFace) -> Permutation {
    let word = fill_slots(&face.slots);
    Permutation::new(word).expect("procedure fills each slot once")
}

fn fill_slots(slots: &[FaceSlot]) -> Vec<u8> {
    match slots[0] {
        FaceSlot::Zero => {
            let mut rest = fill_slots(&slots[1..]);
            for v in &mut rest {
                *v += 1;
            }
            let mut out = vec![1u8];
            out.extend(rest);
            out
        }
        FaceSlot::One => {
            let mut rest = fill_slots(&slots[1..]);
            for v in &mut rest {
                *v += 1;
            }
            rest.push(1);
            rest
        }
        FaceSlot::X => fill_base(slots),
        FaceSlot::Y => unreachable!("x precedes y in a valid face"),
    }
}

/// Base case: the face starts with the `x` mark.
fn fill_base(slots: &[FaceSlot]) -> Vec<u8> {
    let m = slots.len(); // n + 1
    let n = m - 1;
    let j = slots
        .iter()
        .position(|&s| s == FaceSlot::Y)
        .expect("face has a y mark");
    let mut out = vec![0u8; n + 2];
    out[j] = 1; // the pivot; region A = 0..j, region B = j+1..n+2

    // Region B, steered by the bits right of y; values 2..=n-j+1, then the
    // region's top value n-j+2 in the remaining slot.
    let (mut lo, mut hi) = (j + 1, n + 1);
    let mut value = 2u8;
    for &s in &slots[j + 1..] {
        if s == FaceSlot::Zero {
            out[lo] = value;
            lo += 1;
        } else {
            out[hi] = value;
            hi -= 1;
        }
        value += 1;
    }
    debug_assert_eq!(lo, hi);
    out[lo] = value;
    value += 1;

    // Region A, steered by the bits strictly between x and y; ends with n+2.
    let (mut lo, mut hi) = (0usize, j - 1);
    for &s in &slots[1..j] {
        if s == FaceSlot::Zero {
            out[lo] = value;
            lo += 1;
        } else {
            out[hi] = value;
            hi -= 1;
        }
        value += 1;
    }
    debug_assert_eq!(lo, hi);
    out[lo] = value;
    out
}

/// A "good" permutation: avoids dashed 2-1-3 and has exactly one occurrence
/// of the consecutive pattern 312.
pub fn is_good_perm(perm: &[u8]) -> bool {
    let dashed213 = PopPattern::classical(&[2, 1, 3]).expect("valid pattern");
    let consecutive312 = PopPattern::consecutive_classical(&[3, 1, 2]).expect("valid pattern");
    dashed213.avoids(perm) && consecutive312.count_occurrences(perm) == 1
}

/// Inverse of [`face_to_good_perm`], found by searching all faces of the
/// matching dimension. Returns `None` when `perm` is not in the image.
pub fn good_perm_to_face(perm: &Permutation) -> Option<HypercubeFace> {
    if perm.as_slice().len() < 3 {
        return None;
    }
    let n = perm.as_slice().len() - 2;
    enumerate_faces(n)
        .into_iter()
        .find(|f| face_to_good_perm(f).as_slice() == perm.as_slice())
}

/// Exhaustive verification of the face bijection at size n.
#[derive(Debug, Clone, Serialize)]
pub struct FacesReport {
    pub n: usize,
    /// Number of faces enumerated.
    pub faces: u64,
    /// C(n+1,2)·2^(n−1), the closed-form face count.
    pub expected_faces: u64,
    /// Whether the map hit pairwise-distinct permutations.
    pub injective: bool,
    /// Whether every image is a good permutation.
    pub images_good: bool,
    /// Number of good (n+2)-permutations, counted by brute force.
    pub good_count: u64,
    /// `"ok"` or `"failed"`.
    pub status: String,
}

impl FacesReport {
    pub fn passed(&self) -> bool {
        self.status == "ok"
    }
}

impl fmt::Display for FacesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "faces(n = {}): {} faces (expected {}), injective: {}, images good: {}, good permutations: {} -> {}",
            self.n, self.faces, self.expected_faces, self.injective, self.images_good,
            self.good_count, self.status
        )
    }
}

/// Check that the face map at size n is injective, lands in the good
/// permutations, and that both sides have size C(n+1,2)·2^(n−1).
pub fn verify_faces(n: usize) -> Result<FacesReport, BijectionError> {
    assert!(n >= 1, "faces need n >= 1");
    let faces = enumerate_faces(n);
    let expected_faces = binomial(n as u64 + 1, 2) * (1u64 << (n - 1));

    let dashed213 = PopPattern::classical(&[2, 1, 3])?;
    let consecutive312 = PopPattern::consecutive_classical(&[3, 1, 2])?;

    let mut images = BTreeSet::new();
    let mut images_good = true;
    for face in &faces {
        let p = face_to_good_perm(face);
        images_good &= dashed213.avoids(&p) && consecutive312.count_occurrences(&p) == 1;
        images.insert(p.into_vec());
    }
    let injective = images.len() == faces.len();

    let shards = perms::sharded_sweep(n + 2, || 0u64, |acc, perm| {
        if dashed213.avoids(perm) && consecutive312.count_occurrences(perm) == 1 {
            *acc += 1;
        }
    });
    let good_count: u64 = shards.into_iter().sum();

    let ok = injective
        && images_good
        && faces.len() as u64 == expected_faces
        && good_count == expected_faces;
    Ok(FacesReport {
        n,
        faces: faces.len() as u64,
        expected_faces,
        injective,
        images_good,
        good_count,
        status: if ok { "ok" } else { "failed" }.to_string(),
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{for_each_perm, gen_perms};

    fn perm(word: &[u8]) -> Permutation {
        Permutation::new(word.to_vec()).unwrap()
    }

    #[test]
    fn cycle_form_parse_display_standard_form() {
        let cf: CycleForm = "(1 2)(3 4)".parse().unwrap();
        assert_eq!(cf.to_string(), "(3 4)(1 2)");
        assert_eq!(cf.to_permutation(), perm(&[2, 1, 4, 3]));

        let cf: CycleForm = "(2 3 1)".parse().unwrap();
        assert_eq!(cf.to_string(), "(1 2 3)");

        assert!("(1 2".parse::<CycleForm>().is_err());
        assert!("(1 3)".parse::<CycleForm>().is_err()); // not a partition of 1..=2
        assert!("(1 1)".parse::<CycleForm>().is_err());
    }

    #[test]
    fn transpositions_map_to_3412() {
        let image = cycles_to_avoider(&perm(&[2, 1, 4, 3]), 2).unwrap();
        assert_eq!(image, perm(&[3, 4, 1, 2]));
        let back = avoider_to_cycles(&image, 2).unwrap();
        assert_eq!(back, perm(&[2, 1, 4, 3]));
    }

    #[test]
    fn identity_maps_to_decreasing_word() {
        for n in 1..=6 {
            let id = Permutation::identity(n);
            let image = cycles_to_avoider(&id, 1).unwrap();
            let expected: Vec<u8> = (1..=n as u8).rev().collect();
            assert_eq!(image.as_slice(), &expected[..]);
        }
    }

    #[test]
    fn cycle_bound_violations_error() {
        let three_cycle = perm(&[2, 3, 1]);
        assert_eq!(
            cycles_to_avoider(&three_cycle, 2),
            Err(BijectionError::CycleTooLong { len: 3, k: 2 })
        );
        // 1234 contains a-a1a2 (e.g. 1 then the window 34).
        assert_eq!(
            avoider_to_cycles(&perm(&[1, 2, 3, 4]), 2),
            Err(BijectionError::NotAvoider { k: 2 })
        );
    }

    #[test]
    fn cycle_maps_are_mutually_inverse_and_onto() {
        for k in [2usize, 3] {
            for n in 1..=6 {
                let pattern = PopPattern::flat_dashed(k).unwrap();
                let mut image_set = BTreeSet::new();
                let mut domain = 0u64;
                for p in gen_perms(n) {
                    match cycles_to_avoider(&p, k) {
                        Ok(sigma) => {
                            domain += 1;
                            assert!(pattern.avoids(&sigma));
                            assert_eq!(avoider_to_cycles(&sigma, k).unwrap(), p);
                            image_set.insert(sigma.into_vec());
                        }
                        Err(BijectionError::CycleTooLong { .. }) => {}
                        Err(e) => panic!("unexpected error: {e}"),
                    }
                }
                // Image is exactly the avoider set.
                let avoiders =
                    perms::avoider_set(std::slice::from_ref(&pattern), n).unwrap();
                let avoiders: BTreeSet<Vec<u8>> =
                    avoiders.into_iter().map(|p| p.into_vec()).collect();
                assert_eq!(image_set, avoiders, "k = {k}, n = {n}");
                assert_eq!(domain as usize, avoiders.len());
            }
        }
    }

    #[test]
    fn face_parse_and_display() {
        let f: HypercubeFace = "110x0y01".parse().unwrap();
        assert_eq!(f.to_string(), "110x0y01");
        assert_eq!(f.vector_len(), 8);
        assert_eq!(f.perm_len(), 9);
        assert_eq!((f.x_pos(), f.y_pos()), (3, 5));

        assert!("1100".parse::<HypercubeFace>().is_err()); // no marks
        assert!("x1x1y".parse::<HypercubeFace>().is_err()); // two x
        assert!("y10x".parse::<HypercubeFace>().is_err()); // y before x
        assert!("x2y".parse::<HypercubeFace>().is_err()); // bad char
        assert!(HypercubeFace::new(&[false, false], 1, 1).is_err());
    }

    #[test]
    fn normative_face_example() {
        let f: HypercubeFace = "110x0y01".parse().unwrap();
        assert_eq!(
            face_to_good_perm(&f),
            perm(&[3, 8, 9, 4, 5, 7, 6, 2, 1])
        );

        let f: HypercubeFace = "xy".parse().unwrap();
        assert_eq!(face_to_good_perm(&f), perm(&[3, 1, 2]));
    }

    #[test]
    fn face_counts_match_closed_form() {
        for n in 1..=5 {
            let faces = enumerate_faces(n);
            let expected = binomial(n as u64 + 1, 2) * (1u64 << (n - 1));
            assert_eq!(faces.len() as u64, expected, "n = {n}");
        }
    }

    #[test]
    fn face_verification_small_sizes() {
        for n in 1..=4 {
            let report = verify_faces(n).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn good_perms_enumerated_directly() {
        // n = 1: the unique good 3-permutation is 312.
        let mut good = Vec::new();
        for_each_perm(3, |p| {
            if is_good_perm(p) {
                good.push(p.to_vec());
            }
        });
        assert_eq!(good, vec![vec![3, 1, 2]]);
    }

    #[test]
    fn face_search_inverts_the_map() {
        for n in 1..=3 {
            for face in enumerate_faces(n) {
                let p = face_to_good_perm(&face);
                assert_eq!(good_perm_to_face(&p), Some(face));
            }
        }
        // A permutation outside the image has no preimage.
        assert_eq!(good_perm_to_face(&perm(&[1, 2, 3])), None);
    }
}
