//! Inversion-graded avoidance statistics and their algebraic identities.
//!
//! For a pattern `p`, let `A_n(q) = Σ q^{inv(π)}` over the `n`-permutations
//! avoiding `p`, and `B_n(q)` the analogous sum over the *quasi-avoiders*
//! (exactly one occurrence, occupying the final `|p|` positions). This module
//! computes those polynomial tables by brute force and verifies, in exact
//! polynomial arithmetic, the identities tying them together:
//!
//! * `B_n = [n]_q · A_{n−1} − A_n`,
//! * for a two-block pattern `p-σ` on incomparable alphabets,
//!   `A^{p-σ} = A^p + A^σ ·_q B^p` (Gaussian-convolution product),
//! * its multi-block generalization
//!   `A^{p_1-…-p_k} = Σ_i A^{p_i} ·_q Π_{j<i} B^{p_j}`,
//! * the refinement of the non-overlapping occurrence distribution:
//!   `Σ_π y^{N(π)} q^{inv(π)} x^n/[n]_q! = A / (1 − y·B)`.
//!
//! All comparisons happen at the coefficient-polynomial level; nothing is
//! ever divided by `[n]_q!`, so every check is exact.

use crate::pattern::PopPattern;
use crate::perms::stats::inv;
use crate::perms::{guard, sharded_sweep, PermsError};
use crate::series::qegf::{q_number, QEgf, QPoly, YQPoly};
use crate::series::ring::{poly2_string, poly_string, rat_int, Poly, Ring};
use num::BigInt;
use serde::Serialize;

/// Table of polynomials in `q`, indexed by permutation length `n = 0..=n_max`.
///
/// Evaluating entry `n` at `q = 1` recovers the plain count of the underlying
/// permutation set.
#[derive(Debug, Clone, PartialEq)]
pub struct QPolynomialTable {
    polys: Vec<QPoly>,
}

impl QPolynomialTable {
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    /// The polynomial for length `n`. Panics if `n` exceeds the table.
    pub fn poly(&self, n: usize) -> &QPoly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[QPoly] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<QPoly> {
        self.polys
    }

    /// Plain counts: each polynomial evaluated at `q = 1`.
    pub fn counts(&self) -> Vec<BigInt> {
        self.polys
            .iter()
            .map(|p| {
                let v = p.eval(&rat_int(1));
                debug_assert!(v.is_integer());
                v.to_integer()
            })
            .collect()
    }
}

/// Histogram of a statistic accumulated shard-by-shard into `Vec<u64>`.
fn merged_histogram(
    n: usize,
    width: usize,
    visit: impl Fn(&mut Vec<u64>, &[u8]) + Sync,
) -> Vec<u64> {
    let shards = sharded_sweep(n, || vec![0u64; width], visit);
    let mut hist = vec![0u64; width];
    for shard in shards {
        for (slot, v) in hist.iter_mut().zip(shard) {
            *slot += v;
        }
    }
    hist
}

fn histogram_to_poly(hist: &[u64]) -> QPoly {
    Poly::from_coeffs(hist.iter().map(|&c| rat_int(c as i64)).collect())
}

/// `A_n(q) = Σ q^{inv(π)}` over avoiders of `p`, for `n = 0..=n_max`.
pub fn q_avoiders(p: &PopPattern, n_max: usize) -> Result<QPolynomialTable, PermsError> {
    guard(n_max)?;
    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let width = n * n.saturating_sub(1) / 2 + 1;
        let hist = merged_histogram(n, width, |acc, perm| {
            if p.avoids(perm) {
                acc[inv(perm) as usize] += 1;
            }
        });
        polys.push(histogram_to_poly(&hist));
    }
    Ok(QPolynomialTable { polys })
}

/// `B_n(q) = Σ q^{inv(π)}` over quasi-avoiders of `p`, for `n = 0..=n_max`.
///
/// Requires `p` segmented and unanchored (quasi-avoidance is defined only
/// there); always has `B_0 = … = B_{|p|-1} = 0`.
pub fn q_quasi_avoiders(p: &PopPattern, n_max: usize) -> Result<QPolynomialTable, PermsError> {
    guard(n_max)?;
    // Surface the segmented/unanchored requirement once, host-independently.
    p.quasi_avoids(&[])?;
    let mut polys = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let width = n * n.saturating_sub(1) / 2 + 1;
        let hist = merged_histogram(n, width, |acc, perm| {
            if p.quasi_avoids(perm).expect("validated above") {
                acc[inv(perm) as usize] += 1;
            }
        });
        polys.push(histogram_to_poly(&hist));
    }
    Ok(QPolynomialTable { polys })
}

/// Outcome of checking one polynomial identity over a range of lengths.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    /// Human-readable statement of the identity that was checked.
    pub identity: String,
    /// Inclusive `[lo, hi]` range of lengths `n` covered.
    pub n_range: [usize; 2],
    /// `"ok"` or `"failed"`.
    pub status: String,
    /// Smallest failing length with both sides rendered, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<IdentityFailure>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityFailure {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

impl IdentityReport {
    fn from_outcome(
        identity: impl Into<String>,
        n_range: [usize; 2],
        first_failure: Option<IdentityFailure>,
    ) -> Self {
        IdentityReport {
            identity: identity.into(),
            n_range,
            status: if first_failure.is_none() { "ok" } else { "failed" }.to_string(),
            first_failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "ok"
    }
}

impl std::fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} for {} <= n <= {}: {}",
            self.identity, self.n_range[0], self.n_range[1], self.status
        )?;
        if let Some(fail) = &self.first_failure {
            write!(f, " (n = {}: lhs = {}, rhs = {})", fail.n, fail.lhs, fail.rhs)?;
        }
        Ok(())
    }
}

/// Compare two `q`-polynomial sequences over `lo..=hi`, rendering the first
/// mismatch.
fn compare_q_sequences(
    identity: impl Into<String>,
    lo: usize,
    hi: usize,
    lhs: impl Fn(usize) -> QPoly,
    rhs: impl Fn(usize) -> QPoly,
) -> IdentityReport {
    let mut failure = None;
    for n in lo..=hi {
        let l = lhs(n);
        let r = rhs(n);
        if l != r {
            failure = Some(IdentityFailure {
                n,
                lhs: poly_string(&l, "q"),
                rhs: poly_string(&r, "q"),
            });
            break;
        }
    }
    IdentityReport::from_outcome(identity, [lo, hi], failure)
}

/// Check `B_n = [n]_q · A_{n−1} − A_n` for `1 ≤ n ≤ n_max`.
#[allow(non_snake_case)]
pub fn verify_lemma_B(p: &PopPattern, n_max: usize) -> Result<IdentityReport, PermsError> {
    let a = q_avoiders(p, n_max)?;
    let b = q_quasi_avoiders(p, n_max)?;
    Ok(compare_q_sequences(
        "B_n = [n]_q A_{n-1} - A_n",
        1,
        n_max,
        |n| b.poly(n).clone(),
        |n| q_number(n).mul(a.poly(n - 1)).sub(a.poly(n)),
    ))
}

/// Check `A^{p-σ} = A^p + A^σ ·_q B^p` coefficientwise for `n ≤ n_max`.
///
/// `p` must be segmented and unanchored; the blocks' letter alphabets must be
/// disjoint (the combined pattern makes them incomparable).
pub fn verify_lemma_split(
    p: &PopPattern,
    sigma: &PopPattern,
    n_max: usize,
) -> Result<IdentityReport, PermsError> {
    let combined = PopPattern::multi_pattern(&[p.clone(), sigma.clone()])?;
    let a_combined = q_avoiders(&combined, n_max)?;
    let a_p = q_avoiders(p, n_max)?;
    let b_p = q_quasi_avoiders(p, n_max)?;
    let a_sigma = q_avoiders(sigma, n_max)?;

    let product = QEgf::from_coeffs(a_sigma.into_polys(), n_max)
        .q_mul(&QEgf::from_coeffs(b_p.polys().to_vec(), n_max));
    Ok(compare_q_sequences(
        "A^{p-s} = A^p + A^s *q B^p",
        0,
        n_max,
        |n| a_combined.poly(n).clone(),
        |n| a_p.poly(n).add(&product.coeff(n)),
    ))
}

/// Check `A^{p_1-…-p_k} = Σ_i A^{p_i} ·_q Π_{j<i} B^{p_j}` for `n ≤ n_max`.
pub fn verify_q_multipattern(
    blocks: &[PopPattern],
    n_max: usize,
) -> Result<IdentityReport, PermsError> {
    let combined = PopPattern::multi_pattern(blocks)?;
    let lhs = q_avoiders(&combined, n_max)?;

    let mut rhs = QEgf::<QPoly>::zero(n_max);
    let mut prefix = QEgf::<QPoly>::one(n_max); // Π_{j<i} B^{p_j}
    for block in blocks {
        let a_i = QEgf::from_coeffs(q_avoiders(block, n_max)?.into_polys(), n_max);
        rhs = rhs.add(&a_i.q_mul(&prefix));
        let b_i = QEgf::from_coeffs(q_quasi_avoiders(block, n_max)?.into_polys(), n_max);
        prefix = prefix.q_mul(&b_i);
    }
    Ok(compare_q_sequences(
        "A^{p_1-...-p_k} = sum_i A^{p_i} *q prod_{j<i} B^{p_j}",
        0,
        n_max,
        |n| lhs.poly(n).clone(),
        |n| rhs.coeff(n),
    ))
}

/// Check the joint distribution identity
/// `Σ_π y^{N(π)} q^{inv(π)} = [x^n] A / (1 − y·B)` for `n ≤ n_max`,
/// where `N(π)` is the maximum number of non-overlapping occurrences of `p`.
///
/// The right-hand side lives in the Gaussian-convolution series ring over
/// `Q[y][q]`; the left-hand side is brute-forced per length.
pub fn verify_q_nonoverlap(p: &PopPattern, n_max: usize) -> Result<IdentityReport, PermsError> {
    guard(n_max)?;
    p.quasi_avoids(&[])?; // validates segmented + unanchored
    let m = p.len();

    // Left side: per-(occurrence count, inversion count) histograms.
    let mut lhs: Vec<YQPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let inv_width = n * n.saturating_sub(1) / 2 + 1;
        let occ_width = n / m + 1;
        let shards = sharded_sweep(
            n,
            || vec![vec![0u64; inv_width]; occ_width],
            |acc, perm| {
                let occ = p.max_nonoverlapping(perm).expect("validated above");
                acc[occ][inv(perm) as usize] += 1;
            },
        );
        let mut grid = vec![vec![0u64; inv_width]; occ_width];
        for shard in shards {
            for (row, srow) in grid.iter_mut().zip(shard) {
                for (slot, v) in row.iter_mut().zip(srow) {
                    *slot += v;
                }
            }
        }
        lhs.push(Poly::from_coeffs(
            grid.iter().map(|row| histogram_to_poly(row)).collect(),
        ));
    }

    // Right side: A / (1 - y B) over Q[y][q].
    let a = q_avoiders(p, n_max)?;
    let b = q_quasi_avoiders(p, n_max)?;
    let a_lift: QEgf<YQPoly> = QEgf::from_coeffs(
        a.polys().iter().map(|c| Poly::constant(c.clone())).collect(),
        n_max,
    );
    let y_b: QEgf<YQPoly> = QEgf::from_coeffs(
        b.polys().iter().map(|c| Poly::monomial(c.clone(), 1)).collect(),
        n_max,
    );
    let denom = QEgf::<YQPoly>::one(n_max).sub(&y_b);
    // B_0 = 0, so the denominator has constant term 1 and is invertible.
    let rhs = a_lift.q_mul(&denom.q_inverse().expect("constant term is 1"));

    let mut failure = None;
    for n in 0..=n_max {
        if lhs[n] != rhs.coeff(n) {
            failure = Some(IdentityFailure {
                n,
                lhs: poly2_string(&lhs[n], "y", "q"),
                rhs: poly2_string(&rhs.coeff(n), "y", "q"),
            });
            break;
        }
    }
    Ok(IdentityReport::from_outcome(
        "sum_pi y^N q^inv = A / (1 - y B)",
        [0, n_max],
        failure,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Poset;
    use crate::series::qegf::q_factorial;

    fn flat_11p() -> PopPattern {
        PopPattern::segmented(Poset::antichain(&["1", "1'"]), &["1", "1'"]).unwrap()
    }

    fn pattern_11p2() -> PopPattern {
        let poset = Poset::build(&["1", "2", "1'"], &[("1", "2")]).unwrap();
        PopPattern::segmented(poset, &["1", "1'", "2"]).unwrap()
    }

    fn pattern_122p1p() -> PopPattern {
        let poset =
            Poset::build(&["1", "2", "1'", "2'"], &[("1", "2"), ("1'", "2'")]).unwrap();
        PopPattern::segmented(poset, &["1", "2", "2'", "1'"]).unwrap()
    }

    #[test]
    fn avoider_polys_for_incomparable_pair() {
        let t = q_avoiders(&flat_11p(), 3).unwrap();
        assert_eq!(t.poly(0), &Poly::constant(rat_int(1)));
        assert_eq!(t.poly(1), &Poly::constant(rat_int(1)));
        // No 2-permutation avoids two adjacent incomparable letters.
        assert!(t.poly(2).is_zero());
        assert!(t.poly(3).is_zero());
    }

    #[test]
    fn quasi_avoider_polys_for_incomparable_pair() {
        let t = q_quasi_avoiders(&flat_11p(), 2).unwrap();
        assert!(t.poly(0).is_zero());
        assert!(t.poly(1).is_zero());
        // Both of 12 (inv 0) and 21 (inv 1) quasi-avoid: B_2 = 1 + q.
        assert_eq!(
            t.poly(2),
            &Poly::from_coeffs(vec![rat_int(1), rat_int(1)])
        );
    }

    #[test]
    fn quasi_avoiders_require_segmented() {
        let dashed = PopPattern::classical(&[1, 2]).unwrap();
        assert!(q_quasi_avoiders(&dashed, 3).is_err());
    }

    #[test]
    fn inversion_grading_sums_to_q_factorial() {
        // A pattern longer than every host: all permutations avoid it.
        let never = PopPattern::consecutive_classical(&[1, 2, 3, 4, 5, 6, 7]).unwrap();
        let t = q_avoiders(&never, 6).unwrap();
        for n in 0..=6 {
            assert_eq!(t.poly(n), &q_factorial(n), "n = {n}");
        }
    }

    #[test]
    fn counts_at_q_one_match_plain_avoiders() {
        let p = pattern_11p2();
        let t = q_avoiders(&p, 6).unwrap();
        let counts = t.counts();
        // Counts for n = 1..=6.
        let expected = crate::perms::avoider_sequence(std::slice::from_ref(&p), 6).unwrap();
        for (i, e) in expected.iter().enumerate() {
            assert_eq!(counts[i + 1], BigInt::from(*e), "n = {}", i + 1);
        }
        // Central binomial coefficients C(n, floor(n/2)).
        assert_eq!(expected, vec![1, 2, 3, 6, 10, 20]);
    }

    #[test]
    fn lemma_b_holds_for_small_patterns() {
        for (p, n_max) in [
            (flat_11p(), 7),
            (pattern_11p2(), 6),
            (pattern_122p1p(), 6),
        ] {
            let report = verify_lemma_B(&p, n_max).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn lemma_b_report_round_trips_to_json() {
        let report = verify_lemma_B(&flat_11p(), 3).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"status\":\"ok\""));
        assert!(!json.contains("first_failure"));
    }

    #[test]
    fn lemma_split_two_block_cases() {
        // p = 11', sigma = a single incomparable letter.
        let sigma1 = PopPattern::segmented(Poset::antichain(&["s"]), &["s"]).unwrap();
        let report = verify_lemma_split(&flat_11p(), &sigma1, 6).unwrap();
        assert!(report.passed(), "{report}");

        // p = consecutive 12, sigma = an incomparable copy on fresh letters.
        let block12 = PopPattern::consecutive_classical(&[1, 2]).unwrap();
        let copy = PopPattern::segmented(Poset::chain(&["3", "4"]), &["3", "4"]).unwrap();
        let report = verify_lemma_split(&block12, &copy, 6).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn lemma_split_rejects_colliding_alphabets() {
        let p = PopPattern::consecutive_classical(&[1, 2]).unwrap();
        assert!(verify_lemma_split(&p, &p, 4).is_err());
    }

    #[test]
    fn multipattern_identity_three_blocks() {
        let b1 = flat_11p();
        let b2 = PopPattern::segmented(Poset::antichain(&["2", "2'"]), &["2", "2'"]).unwrap();
        let report = verify_q_multipattern(&[b1.clone(), b2.clone()], 6).unwrap();
        assert!(report.passed(), "{report}");

        // Single block: reduces to A = A.
        let report = verify_q_multipattern(std::slice::from_ref(&b1), 5).unwrap();
        assert!(report.passed(), "{report}");

        let b3 = PopPattern::segmented(Poset::chain(&["u", "v"]), &["u", "v"]).unwrap();
        let report = verify_q_multipattern(&[b1, b2, b3], 6).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn nonoverlap_q_distribution_matches_series() {
        for p in [
            flat_11p(),
            PopPattern::consecutive_classical(&[1, 2]).unwrap(),
            pattern_11p2(),
        ] {
            let report = verify_q_nonoverlap(&p, 6).unwrap();
            assert!(report.passed(), "{report}");
        }
    }
}
