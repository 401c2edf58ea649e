//! Catalog of named closed-form generating functions, each tied to a
//! pattern-counting statement verified elsewhere in the crate.
//!
//! Form ids are the stable strings `C1`..`C20` (`C18` is unassigned).
//! Univariate forms are series in one variable over Q; bivariate forms are
//! series in x whose coefficients are polynomials in a marker variable y.
//! Every form is built so that all arithmetic stays in polynomial rings:
//! closed forms quoted with square roots or non-unit denominators are
//! rewritten per form (see the comments on `c5`, `c6`, `c12`, `c15`, `c19`).

use super::ode::{fixpoint_solve, ode_solve};
use super::ring::{rat, rat_int, Poly, Rat, Ring};
use super::{cos_x, exp_x, geometric_poly, sec_x, sin_x, tan_x, tanh_x, Series, SeriesError};
use num::{BigInt, One};
use std::collections::BTreeMap;

/// Polynomials in the marker variable y.
pub type YPoly = Poly<Rat>;
/// Bivariate series: powers of x with y-polynomial coefficients.
pub type BivariateSeries = Series<YPoly>;

/// Result of building a catalog form.
#[derive(Clone, Debug, PartialEq)]
pub enum FormOutput {
    Univariate(Series<Rat>),
    Bivariate(BivariateSeries),
}

fn lift(s: &Series<Rat>) -> BivariateSeries {
    s.map_ring(|c| Poly::constant(c.clone()))
}

fn y_poly() -> YPoly {
    Poly::var()
}

fn one_minus_y() -> YPoly {
    YPoly::one().sub(&y_poly())
}

// ---- general builders shared by several forms ----

/// Solution of P' = y·P² + (1−y)·(1+x+…+x^{k−1})·P with P(0) = 1: the
/// exponential BGF of permutations by occurrences of the head-to-tail
/// pattern with a descending run of length k (k = 1 gives descents).
pub fn eq1_bgf(k: usize, order: usize) -> BivariateSeries {
    let c1 = lift(&geometric_poly(k, order)).scale_ring(&one_minus_y());
    let c2 = Series::constant(y_poly(), order);
    ode_solve(&Series::zero(order), &c1, &c2, YPoly::one())
}

/// Solution of P' = y·P² + (1−y)(G_k+G_ℓ)·P + (y−1)·G_k·G_ℓ with
/// P(0) = 1 and G_m = 1+x+…+x^{m−1}: the exponential BGF of permutations
/// by occurrences of the two-sided valley pattern whose descending side
/// has k letters and ascending side ℓ letters.
pub fn eq2_bgf(k: usize, l: usize, order: usize) -> BivariateSeries {
    let gk = lift(&geometric_poly(k, order));
    let gl = lift(&geometric_poly(l, order));
    let c1 = gk.add(&gl).scale_ring(&one_minus_y());
    let c0 = gk.mul(&gl).scale_ring(&y_poly().sub(&YPoly::one()));
    let c2 = Series::constant(y_poly(), order);
    ode_solve(&c0, &c1, &c2, YPoly::one())
}

/// Ordinary GF of the Catalan numbers, 1/(n+1)·C(2n,n).
pub fn catalan_gf(order: usize) -> Series<Rat> {
    let mut c = rat_int(1);
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=order {
        coeffs.push(c.clone());
        c = c * rat_int(2 * (2 * n as i64 + 1)) / rat_int(n as i64 + 2);
    }
    Series::from_coeffs(coeffs, order)
}

// ---- the named forms ----

/// C1: EGF exp(Σ_{i=1..k} x^i/i) — permutations all of whose cycles have
/// length at most k.
pub fn c1(k: usize, order: usize) -> Series<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    for (i, c) in coeffs.iter_mut().enumerate().take(k + 1).skip(1) {
        *c = rat(1, i as i64);
    }
    Series::from_coeffs(coeffs, order)
        .exp()
        .expect("zero constant term")
}

/// C2: EGF e^{e^x − 1} of the Bell numbers (set partitions).
pub fn c2(order: usize) -> Series<Rat> {
    let mut inner = exp_x(order);
    inner = inner.sub(&Series::one(order));
    inner.exp().expect("zero constant term")
}

/// C3: exponential BGF (1−y)/(e^{(y−1)x} − y) of permutations by descents
/// (the Eulerian distribution). The denominator's constant term is 1−y;
/// the stepwise exact division checks each coefficient divides out.
pub fn c3(order: usize) -> Result<BivariateSeries, SeriesError> {
    let ym1 = y_poly().sub(&YPoly::one());
    let e = Series::monomial(ym1, 1, order)
        .exp()
        .expect("zero constant term");
    let denom = e.sub(&Series::constant(y_poly(), order));
    Series::constant(one_minus_y(), order).div(&denom)
}

/// C4: EGF (e^{2x}+1)/2 — counts 1 at n = 0 and 2^{n−1} for n ≥ 1
/// (valley-free permutations).
pub fn c4(order: usize) -> Series<Rat> {
    let e2 = Series::monomial(rat_int(2), 1, order)
        .exp()
        .expect("zero constant term");
    e2.add(&Series::one(order)).scale(&rat(1, 2))
}

/// C5: exponential BGF of permutations by number of interior valleys
/// (equivalently peaks, by complementation).
///
/// The textbook closed form involves tan(x√(y−1))/√(y−1); only even
/// powers of the surd survive there, so it is expanded here as
/// T = Σ_i t_{2i+1} x^{2i+1} (y−1)^i with t_j the tangent coefficients.
/// The remaining outer division by y is exact on the numerator.
pub fn c5(order: usize) -> Result<BivariateSeries, SeriesError> {
    let tan = tan_x(order);
    let ym1 = y_poly().sub(&YPoly::one());
    let mut coeffs = vec![YPoly::zero(); order + 1];
    let mut pw = YPoly::one();
    let mut j = 1usize;
    while j <= order {
        coeffs[j] = pw.scale(&tan.coeff(j));
        pw = pw.mul(&ym1);
        j += 2;
    }
    let t = Series::from_coeffs(coeffs, order);
    let one = BivariateSeries::one(order);
    let v = t
        .scale_ring(&ym1)
        .add(&one)
        .div(&one.sub(&t))?;
    let num = v.add(&Series::constant(ym1, order));
    num.div(&Series::constant(y_poly(), order))
}

/// C6: ordinary GF (1 − x − √(1−2x−3x²−4x³)) / (2x²(1+x)) of the
/// permutations avoiding both 1-3-2 and the boxed pattern 1□23.
///
/// The numerator vanishes to second order, so the series is built two
/// orders wide, shifted down by x², and the remaining division by
/// 2(1+x) has unit-up-to-scalar constant term.
pub fn c6(order: usize) -> Result<Series<Rat>, SeriesError> {
    let wide = order + 2;
    let radicand = Series::from_coeffs(
        vec![rat_int(1), rat_int(-2), rat_int(-3), rat_int(-4)],
        wide,
    );
    let root = radicand.sqrt()?;
    let num = Series::one(wide)
        .sub(&Series::monomial(rat_int(1), 1, wide))
        .sub(&root);
    let shifted = num.div_x_pow(2)?; // exact: first two coefficients vanish
    let denom = Series::from_coeffs(vec![rat_int(2), rat_int(2)], order);
    shifted.div(&denom)
}

/// C7: partial sum Σ_{n=0}^{k−1} C_n x^n of the Catalan ordinary GF.
pub fn c7(k: usize, order: usize) -> Series<Rat> {
    let cat = catalan_gf(order);
    let mut coeffs: Vec<Rat> = (0..=order)
        .map(|n| if n < k { cat.coeff(n) } else { Rat::zero() })
        .collect();
    coeffs.truncate(order + 1);
    Series::from_coeffs(coeffs, order)
}

/// C8: ordinary BGF over 2-1-3-avoiding permutations refined by
/// occurrences of the two-sided run pattern with parameters (k, ℓ),
/// solved as the order-raising fixpoint
/// P = 1 + x·(y(P−P_k)(P−P_ℓ) + P_k·P + P·P_ℓ − P_k·P_ℓ)
/// with P_m the Catalan partial sum C7(m). This avoids the closed form's
/// division by 2xy.
pub fn c8(k: usize, l: usize, order: usize) -> Result<BivariateSeries, SeriesError> {
    let pk = lift(&c7(k, order));
    let pl = lift(&c7(l, order));
    let y = Series::constant(y_poly(), order);
    let one = BivariateSeries::one(order);
    fixpoint_solve(order, |p| {
        let quad = y.mul(&p.sub(&pk)).mul(&p.sub(&pl));
        let linear = pk.mul(p).add(&p.mul(&pl)).sub(&pk.mul(&pl));
        one.add(&quad.add(&linear).mul_x_pow(1))
    })
}

/// C9: EGF (1 − (1+(x−1)e^x)^k)/(1−x) of permutations avoiding the
/// k-fold chained pattern 12-12-…-12 (k ascent blocks with gaps).
/// k = 1 collapses to e^x, the avoiders of a plain adjacent ascent.
pub fn c9(k: usize, order: usize) -> Result<Series<Rat>, SeriesError> {
    let one = Series::one(order);
    let u = one.add(
        &Series::monomial(rat_int(1), 1, order)
            .sub(&one)
            .mul(&exp_x(order)),
    );
    let num = one.sub(&u.pow(k));
    num.div(&one.sub(&Series::monomial(rat_int(1), 1, order)))
}

/// C10: bivariate GF D = B/(1 − y(1 + (kx−1)B)) of the distribution of
/// the maximal number of non-overlapping occurrences of a pattern, given
/// the avoider GF B of that pattern. For permutations k = 1 and B is an
/// EGF; for words over a k-letter alphabet B is an ordinary GF.
pub fn c10(b: &Series<Rat>, k: i64, order: usize) -> Result<BivariateSeries, SeriesError> {
    let bb = lift(&b.truncate(order));
    let one = BivariateSeries::one(order);
    let kx_minus_1 = Series::monomial(YPoly::constant(rat_int(k)), 1, order).sub(&one);
    let inner = one.add(&kx_minus_1.mul(&bb));
    let denom = one.sub(&inner.scale_ring(&y_poly()));
    bb.div(&denom)
}

/// C11: EGF ½ + ¼·tan x·(1 + e^{2x} + 2e^x·sin x) + ½·e^x·cos x of the
/// permutations avoiding the segmented pattern 122'1' (letters ordered by
/// 1 < 2 and 1' < 2' only).
pub fn c11(order: usize) -> Series<Rat> {
    let e2 = Series::monomial(rat_int(2), 1, order)
        .exp()
        .expect("zero constant term");
    let ex = exp_x(order);
    let bracket = Series::one(order)
        .add(&e2)
        .add(&ex.mul(&sin_x(order)).scale(&rat_int(2)));
    tan_x(order)
        .mul(&bracket)
        .scale(&rat(1, 4))
        .add(&ex.mul(&cos_x(order)).scale(&rat(1, 2)))
        .add(&Series::constant(rat(1, 2), order))
}

/// C12: EGF x·e^{x/2}/(cos(√3·x/2) − (√3/3)·sin(√3·x/2)) + 1 of the
/// permutations avoiding the segmented pattern 1231'.
///
/// Surd removal: both denominator terms expand with only integer powers
/// of 3 once the √3 prefactors are folded in — cos(√3x/2) contributes
/// (−3)^m x^{2m}/(4^m (2m)!) and (√3/3)sin(√3x/2) contributes
/// (−3)^m x^{2m+1}/(2^{2m+1}(2m+1)!) — so every coefficient is rational.
pub fn c12(order: usize) -> Result<Series<Rat>, SeriesError> {
    let mut denom = vec![Rat::zero(); order + 1];
    let mut even = rat_int(1);
    let mut m = 0usize;
    while 2 * m <= order {
        denom[2 * m] = even.clone();
        even *= rat(-3, 4 * (2 * m as i64 + 1) * (2 * m as i64 + 2));
        m += 1;
    }
    let mut odd = rat(-1, 2);
    let mut m = 0usize;
    while 2 * m < order {
        denom[2 * m + 1] = odd.clone();
        odd *= rat(-3, 4 * (2 * m as i64 + 2) * (2 * m as i64 + 3));
        m += 1;
    }
    let denom = Series::from_coeffs(denom, order);
    let num = exp_x_half(order).mul_x_pow(1);
    Ok(num.div(&denom)?.add(&Series::one(order)))
}

fn exp_x_half(order: usize) -> Series<Rat> {
    Series::monomial(rat(1, 2), 1, order)
        .exp()
        .expect("zero constant term")
}

/// C13: EGF x·(1 − ∫₀ˣ e^{−t²/2} dt)^{−1} + 1 of the permutations
/// avoiding the segmented pattern 1321' (equally 2131').
pub fn c13(order: usize) -> Result<Series<Rat>, SeriesError> {
    let gauss = Series::monomial(rat(-1, 2), 2, order)
        .exp()
        .expect("zero constant term");
    let integral = gauss.integrate().truncate(order);
    let inv = Series::one(order).div(&Series::one(order).sub(&integral))?;
    Ok(inv.mul_x_pow(1).add(&Series::one(order)))
}

/// C14: solution of the shuffle equation C' = (A+B)·C − A·B with
/// C(0) = 1; C counts the permutations avoiding every shuffle of two
/// patterns whose avoider EGFs are A and B.
pub fn c14(a: &Series<Rat>, b: &Series<Rat>) -> Series<Rat> {
    let order = a.order();
    assert_eq!(order, b.order());
    ode_solve(
        &a.mul(b).neg(),
        &a.add(b),
        &Series::zero(order),
        rat_int(1),
    )
}

/// C15: exponential BGF of linear words by number of cyclic maxima.
///
/// The quoted form zx(1 − z·tanh(xz))/(z − tanh(xz)) with z² = 1−y is
/// rewritten by dividing top and bottom by z: with S = tanh(xz)/z =
/// Σ_i t_{2i+1} x^{2i+1} (1−y)^i (t the tanh coefficients), the form is
/// x·(1 − (1−y)·S)/(1 − S), entirely in Q[y].
pub fn c15(order: usize) -> Result<BivariateSeries, SeriesError> {
    let th = tanh_x(order);
    let omy = one_minus_y();
    let mut coeffs = vec![YPoly::zero(); order + 1];
    let mut pw = YPoly::one();
    let mut j = 1usize;
    while j <= order {
        coeffs[j] = pw.scale(&th.coeff(j));
        pw = pw.mul(&omy);
        j += 2;
    }
    let s = Series::from_coeffs(coeffs, order);
    let one = BivariateSeries::one(order);
    let frac = one.sub(&s.scale_ring(&omy)).div(&one.sub(&s))?;
    Ok(frac.mul_x_pow(1))
}

/// C16: EGF tan x + sec x of the down-up alternating permutations.
pub fn c16(order: usize) -> Series<Rat> {
    tan_x(order).add(&sec_x(order))
}

/// C17: the Eulerian polynomial A_n(t) = Σ_π t^{1+des(π)} (n ≥ 1),
/// extracted from the identity Σ_{j≥0} j^n t^j = A_n(t)/(1−t)^{n+1} by
/// multiplying the truncated power sum by (1−t)^{n+1}. Returned as a
/// series in t padded to the requested order.
pub fn c17(n: usize, order: usize) -> Series<Rat> {
    let coeffs: Vec<Rat> = (0..=order)
        .map(|j| Rat::from_integer(BigInt::from(j).pow(n as u32)))
        .collect();
    let powersum = Series::from_coeffs(coeffs, order);
    let base = Series::one(order).sub(&Series::monomial(rat_int(1), 1, order));
    powersum.mul(&base.pow(n + 1))
}

/// C19: ordinary BGF (1 − 2x(1−y) − √(4(1−y)x² + 1 − 4x)) / (2xy) over
/// 2-1-3-avoiding permutations by occurrences of 312.
///
/// The radicand has constant term 1 so its square root stays in Q[y];
/// the numerator then vanishes at x⁰ and is divisible by y coefficient
/// by coefficient, making both divisions exact.
pub fn c19(order: usize) -> Result<BivariateSeries, SeriesError> {
    let wide = order + 1;
    let radicand = BivariateSeries::one(wide)
        .add(&Series::monomial(YPoly::constant(rat_int(-4)), 1, wide))
        .add(&Series::monomial(one_minus_y().scale(&rat_int(4)), 2, wide));
    let root = radicand.sqrt()?;
    let num = BivariateSeries::one(wide)
        .sub(&Series::monomial(one_minus_y().scale(&rat_int(2)), 1, wide))
        .sub(&root);
    let shifted = num.div_x_pow(1)?.scale(&rat(1, 2));
    shifted.div(&Series::constant(y_poly(), order))
}

/// C20: solution of A' = (G_k + G_ℓ)·A − G_k·G_ℓ with A(0) = 1 and
/// G_m = 1+x+…+x^{m−1} — the EGF of permutations avoiding the two-sided
/// valley-run pattern with parameters (k, ℓ); equals the y = 0 limit of
/// the `eq2_bgf` family.
pub fn c20(k: usize, l: usize, order: usize) -> Series<Rat> {
    let gk = geometric_poly(k, order);
    let gl = geometric_poly(l, order);
    ode_solve(
        &gk.mul(&gl).neg(),
        &gk.add(&gl),
        &Series::zero(order),
        rat_int(1),
    )
}

// ---- integer extraction ----

/// a_n = n!·[x^n]f; errors if any scaled coefficient is not an integer
/// (which would indicate a mis-transcribed formula, by design a hard
/// failure).
pub fn egf_counts(f: &Series<Rat>) -> Result<Vec<BigInt>, SeriesError> {
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(f.order() + 1);
    for n in 0..=f.order() {
        if n > 0 {
            fact *= n as u64;
        }
        let v = f.coeff(n) * Rat::from_integer(fact.clone());
        if !v.is_integer() {
            return Err(SeriesError::NonIntegral(n));
        }
        out.push(v.to_integer());
    }
    Ok(out)
}

/// a_n = [x^n]f for ordinary GFs; errors on non-integer coefficients.
pub fn gf_counts(f: &Series<Rat>) -> Result<Vec<BigInt>, SeriesError> {
    (0..=f.order())
        .map(|n| {
            let v = f.coeff(n);
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(SeriesError::NonIntegral(n))
            }
        })
        .collect()
}

fn poly_int_row(p: &YPoly, scale: &Rat, n: usize) -> Result<Vec<BigInt>, SeriesError> {
    let scaled = p.scale(scale);
    let mut row: Vec<BigInt> = Vec::new();
    for c in scaled.coeffs() {
        if !c.is_integer() {
            return Err(SeriesError::NonIntegral(n));
        }
        row.push(c.to_integer());
    }
    if row.is_empty() {
        row.push(BigInt::from(0));
    }
    Ok(row)
}

/// Rows n = 0..order of an exponential bivariate GF: the y-polynomial
/// n!·[x^n]f as a dense integer coefficient vector.
pub fn bgf_table_egf(f: &BivariateSeries) -> Result<Vec<Vec<BigInt>>, SeriesError> {
    let mut fact = Rat::from_integer(BigInt::one());
    let mut rows = Vec::with_capacity(f.order() + 1);
    for n in 0..=f.order() {
        if n > 0 {
            fact *= rat_int(n as i64);
        }
        rows.push(poly_int_row(&f.coeff(n), &fact, n)?);
    }
    Ok(rows)
}

/// Rows n = 0..order of an ordinary bivariate GF: the y-polynomial
/// [x^n]f as a dense integer coefficient vector.
pub fn bgf_table_gf(f: &BivariateSeries) -> Result<Vec<Vec<BigInt>>, SeriesError> {
    (0..=f.order())
        .map(|n| poly_int_row(&f.coeff(n), &rat_int(1), n))
        .collect()
}

// ---- form dispatch ----

fn check_keys(
    form: &'static str,
    params: &BTreeMap<String, i64>,
    allowed: &[&str],
) -> Result<(), SeriesError> {
    for key in params.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(SeriesError::BadFormParams(
                form,
                format!("unknown parameter `{key}`; allowed: {allowed:?}"),
            ));
        }
    }
    Ok(())
}

fn require_count(
    form: &'static str,
    params: &BTreeMap<String, i64>,
    key: &str,
    min: i64,
) -> Result<usize, SeriesError> {
    let v = *params.get(key).ok_or_else(|| {
        SeriesError::BadFormParams(form, format!("missing required parameter `{key}`"))
    })?;
    if v < min {
        return Err(SeriesError::BadFormParams(
            form,
            format!("parameter `{key}` must be at least {min}, got {v}"),
        ));
    }
    Ok(v as usize)
}

fn optional_count(
    form: &'static str,
    params: &BTreeMap<String, i64>,
    key: &str,
    min: i64,
    default: i64,
) -> Result<usize, SeriesError> {
    let v = *params.get(key).unwrap_or(&default);
    if v < min {
        return Err(SeriesError::BadFormParams(
            form,
            format!("parameter `{key}` must be at least {min}, got {v}"),
        ));
    }
    Ok(v as usize)
}

/// Build a catalog form by id (case-insensitive `C1`..`C20`).
/// Parameters: C1 `k≥1`; C7 `k≥0`; C8 `k≥0`,`l≥0`; C9 `k≥1`;
/// C10 `k≥1` (alphabet size, default 1, with the base series fixed to the
/// avoiders 1+kx of the two-letter flat pattern — use [`c10`] directly for
/// other base series); C17 `n≥0`; C20 `k≥1`,`l≥1`. Other forms take none.
pub fn build_form(
    id: &str,
    params: &BTreeMap<String, i64>,
    order: usize,
) -> Result<FormOutput, SeriesError> {
    let canon = id.to_ascii_uppercase();
    use FormOutput::{Bivariate, Univariate};
    match canon.as_str() {
        "C1" => {
            check_keys("C1", params, &["k"])?;
            Ok(Univariate(c1(require_count("C1", params, "k", 1)?, order)))
        }
        "C2" => {
            check_keys("C2", params, &[])?;
            Ok(Univariate(c2(order)))
        }
        "C3" => {
            check_keys("C3", params, &[])?;
            Ok(Bivariate(c3(order)?))
        }
        "C4" => {
            check_keys("C4", params, &[])?;
            Ok(Univariate(c4(order)))
        }
        "C5" => {
            check_keys("C5", params, &[])?;
            Ok(Bivariate(c5(order)?))
        }
        "C6" => {
            check_keys("C6", params, &[])?;
            Ok(Univariate(c6(order)?))
        }
        "C7" => {
            check_keys("C7", params, &["k"])?;
            Ok(Univariate(c7(require_count("C7", params, "k", 0)?, order)))
        }
        "C8" => {
            check_keys("C8", params, &["k", "l"])?;
            let k = require_count("C8", params, "k", 0)?;
            let l = require_count("C8", params, "l", 0)?;
            Ok(Bivariate(c8(k, l, order)?))
        }
        "C9" => {
            check_keys("C9", params, &["k"])?;
            Ok(Univariate(c9(require_count("C9", params, "k", 1)?, order)?))
        }
        "C10" => {
            check_keys("C10", params, &["k"])?;
            let k = optional_count("C10", params, "k", 1, 1)? as i64;
            let b = Series::from_coeffs(vec![rat_int(1), rat_int(k)], order);
            Ok(Bivariate(c10(&b, k, order)?))
        }
        "C11" => {
            check_keys("C11", params, &[])?;
            Ok(Univariate(c11(order)))
        }
        "C12" => {
            check_keys("C12", params, &[])?;
            Ok(Univariate(c12(order)?))
        }
        "C13" => {
            check_keys("C13", params, &[])?;
            Ok(Univariate(c13(order)?))
        }
        "C14" => {
            check_keys("C14", params, &[])?;
            Ok(Univariate(c14(&exp_x(order), &exp_x(order))))
        }
        "C15" => {
            check_keys("C15", params, &[])?;
            Ok(Bivariate(c15(order)?))
        }
        "C16" => {
            check_keys("C16", params, &[])?;
            Ok(Univariate(c16(order)))
        }
        "C17" => {
            check_keys("C17", params, &["n"])?;
            Ok(Univariate(c17(require_count("C17", params, "n", 0)?, order)))
        }
        "C19" => {
            check_keys("C19", params, &[])?;
            Ok(Bivariate(c19(order)?))
        }
        "C20" => {
            check_keys("C20", params, &["k", "l"])?;
            let k = require_count("C20", params, "k", 1)?;
            let l = require_count("C20", params, "l", 1)?;
            Ok(Univariate(c20(k, l, order)))
        }
        _ => Err(SeriesError::UnknownForm(id.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_univariate_forms() {
        assert_eq!(
            egf_counts(&c2(7)).unwrap(),
            ints(&[1, 1, 2, 5, 15, 52, 203, 877])
        );
        assert_eq!(egf_counts(&c4(6)).unwrap(), ints(&[1, 1, 2, 4, 8, 16, 32]));
        assert_eq!(
            egf_counts(&c1(2, 7)).unwrap(),
            ints(&[1, 1, 2, 4, 10, 26, 76, 232])
        );
        assert_eq!(
            egf_counts(&c1(3, 7)).unwrap(),
            ints(&[1, 1, 2, 6, 18, 66, 276, 1212])
        );
        assert_eq!(
            egf_counts(&c16(8)).unwrap(),
            ints(&[1, 1, 1, 2, 5, 16, 61, 272, 1385])
        );
    }

    #[test]
    fn catalan_and_partial_sums() {
        assert_eq!(
            gf_counts(&catalan_gf(7)).unwrap(),
            ints(&[1, 1, 2, 5, 14, 42, 132, 429])
        );
        let p3 = c7(3, 4);
        assert_eq!(gf_counts(&p3).unwrap(), ints(&[1, 1, 2, 0, 0]));
        assert!(c7(0, 4).is_zero());
    }

    #[test]
    fn descent_bgf_is_eulerian() {
        let f = c3(5).unwrap();
        let rows = bgf_table_egf(&f).unwrap();
        assert_eq!(rows[0], ints(&[1]));
        assert_eq!(rows[3], ints(&[1, 4, 1]));
        assert_eq!(rows[4], ints(&[1, 11, 11, 1]));
        assert_eq!(rows[5], ints(&[1, 26, 66, 26, 1]));
        // and it solves the k = 1 ODE
        assert_eq!(c3(10).unwrap(), eq1_bgf(1, 10));
    }

    #[test]
    fn valley_bgf_closed_form_matches_ode() {
        let closed = c5(10).unwrap();
        let ode = eq2_bgf(1, 1, 10);
        let y = Series::constant(y_poly(), 10);
        assert_eq!(closed.mul(&y), ode.mul(&y));
        assert_eq!(closed, ode);
        // distribution rows: n = 3 has four valley-free and two one-valley
        assert_eq!(
            bgf_table_egf(&closed.truncate(4)).unwrap()[3],
            ints(&[4, 2])
        );
        // valley-free column is 2^{n-1}
        let rows = bgf_table_egf(&closed).unwrap();
        for (n, row) in rows.iter().enumerate().skip(1) {
            assert_eq!(row[0], BigInt::from(1) << (n - 1), "n={n}");
        }
    }

    #[test]
    fn horse_gf_satisfies_its_algebraic_equation() {
        let order = 10;
        let a = c6(order).unwrap();
        // reconstruct the square root: 1 - x - 2x^2(1+x)A
        let two_x2 = Series::from_coeffs(vec![rat_int(0), rat_int(0), rat_int(2), rat_int(2)], order);
        let root = Series::one(order)
            .sub(&Series::monomial(rat_int(1), 1, order))
            .sub(&two_x2.mul(&a));
        let radicand = Series::from_coeffs(
            vec![rat_int(1), rat_int(-2), rat_int(-3), rat_int(-4)],
            order,
        );
        assert_eq!(root.mul(&root), radicand);
        assert_eq!(a.coeff(0), rat_int(1));
        assert!(gf_counts(&a).is_ok());
    }

    #[test]
    fn fixpoint_family_specializations() {
        let p = c8(1, 0, 9).unwrap();
        // y = 1 gives the Catalan numbers
        let at1: Vec<Rat> = (0..=9).map(|n| p.coeff(n).eval(&rat_int(1))).collect();
        let cat = catalan_gf(9);
        for (n, v) in at1.iter().enumerate() {
            assert_eq!(*v, cat.coeff(n), "n={n}");
        }
        // (1,0) rows are the Narayana triangle
        let rows = bgf_table_gf(&p).unwrap();
        assert_eq!(rows[4], ints(&[1, 6, 6, 1]));
        // (1,1): y=0 column is 2^{n-1}
        let p11 = c8(1, 1, 9).unwrap();
        let rows11 = bgf_table_gf(&p11).unwrap();
        for (n, row) in rows11.iter().enumerate().skip(1) {
            assert_eq!(row[0], BigInt::from(1) << (n - 1), "n={n}");
        }
    }

    #[test]
    fn closed_312_bgf() {
        let f = c19(9).unwrap();
        // reconstruct the square root and square it back
        let y = Series::constant(y_poly(), 9);
        let two_x_omy = Series::monomial(one_minus_y().scale(&rat_int(2)), 1, 9);
        let root = BivariateSeries::one(9)
            .sub(&two_x_omy)
            .sub(&f.mul(&y).mul_x_pow(1).scale(&rat_int(2)));
        let radicand = BivariateSeries::one(9)
            .add(&Series::monomial(YPoly::constant(rat_int(-4)), 1, 9))
            .add(&Series::monomial(one_minus_y().scale(&rat_int(4)), 2, 9));
        assert_eq!(root.mul(&root), radicand);
        // y = 1 gives the Catalan numbers again
        let cat = catalan_gf(9);
        for n in 0..=9 {
            assert_eq!(f.coeff(n).eval(&rat_int(1)), cat.coeff(n), "n={n}");
        }
    }

    #[test]
    fn chained_pattern_egf() {
        assert_eq!(c9(1, 8).unwrap(), exp_x(8));
        assert!(egf_counts(&c9(2, 8).unwrap()).is_ok());
        assert!(egf_counts(&c9(3, 8).unwrap()).is_ok());
    }

    #[test]
    fn nonoverlap_bgf_toy_example() {
        // B = 1 + x gives D = (1+x)/(1-yx^2)
        let b = Series::from_coeffs(vec![rat_int(1), rat_int(1)], 6);
        let d = c10(&b, 1, 6).unwrap();
        for n in 0..=6usize {
            let expect = Poly::monomial(rat_int(1), n / 2);
            assert_eq!(d.coeff(n), expect, "n={n}");
        }
    }

    #[test]
    fn quarter_plane_forms_are_integral() {
        for (name, f) in [
            ("c11", c11(9)),
            ("c12", c12(9).unwrap()),
            ("c13", c13(9).unwrap()),
        ] {
            let counts = egf_counts(&f).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(&counts[..4], &ints(&[1, 1, 2, 6])[..], "{name} head");
        }
    }

    #[test]
    fn shuffle_ode_specializations() {
        let zero = Series::zero(8);
        assert_eq!(c14(&zero, &zero), Series::one(8));
        // A = e^x, B = 0: C' = e^x C, so C = exp(e^x - 1), the Bell EGF
        assert_eq!(c14(&exp_x(8), &zero), c2(8));
    }

    #[test]
    fn circular_maxima_bgf_rows() {
        let f = c15(6).unwrap();
        assert_eq!(f.coeff(0), YPoly::zero());
        assert_eq!(f.coeff(1), YPoly::one());
        assert_eq!(f.coeff(2), y_poly());
        assert_eq!(f.coeff(3), y_poly());
        // n = 4: 16 words with one cyclic maximum, 8 with two
        assert_eq!(
            f.coeff(4),
            Poly::from_coeffs(vec![Rat::zero(), rat(2, 3), rat(1, 3)])
        );
    }

    #[test]
    fn eulerian_polynomials() {
        assert_eq!(gf_counts(&c17(1, 4)).unwrap(), ints(&[0, 1, 0, 0, 0]));
        assert_eq!(gf_counts(&c17(2, 4)).unwrap(), ints(&[0, 1, 1, 0, 0]));
        assert_eq!(gf_counts(&c17(3, 6)).unwrap(), ints(&[0, 1, 4, 1, 0, 0, 0]));
        assert_eq!(
            gf_counts(&c17(4, 6)).unwrap(),
            ints(&[0, 1, 11, 11, 1, 0, 0])
        );
        // identity route: A_n(t)/(1-t)^{n+1} recovers the power sum
        let n = 5;
        let a = c17(n, 12);
        let base = Series::one(12).sub(&Series::monomial(rat_int(1), 1, 12));
        let lhs = a.div(&base.pow(n + 1)).unwrap();
        for j in 0..=12usize {
            assert_eq!(
                lhs.coeff(j),
                Rat::from_integer(BigInt::from(j).pow(n as u32)),
                "j={j}"
            );
        }
    }

    #[test]
    fn two_sided_ode_family() {
        // (1,1): A' = 2A - 1 solves to (e^{2x}+1)/2
        assert_eq!(c20(1, 1, 10), c4(10));
        // y = 0 limit of the bivariate family agrees
        let b = eq2_bgf(2, 3, 8);
        let at0 = b.map_ring(|p| p.coeff(0));
        assert_eq!(at0, c20(2, 3, 8));
        // eq1 at y=0 is the cycle form exp(x + x^2/2 + ... + x^k/k)
        let e = eq1_bgf(3, 8).map_ring(|p| p.coeff(0));
        assert_eq!(e, c1(3, 8));
    }

    #[test]
    fn dispatcher_contract() {
        let none = BTreeMap::new();
        let mut k3 = BTreeMap::new();
        k3.insert("k".to_string(), 3i64);
        match build_form("C7", &k3, 4).unwrap() {
            FormOutput::Univariate(s) => {
                assert_eq!(gf_counts(&s).unwrap(), ints(&[1, 1, 2, 0, 0]))
            }
            _ => panic!("C7 is univariate"),
        }
        assert!(matches!(
            build_form("C18", &none, 4),
            Err(SeriesError::UnknownForm(_))
        ));
        assert!(matches!(
            build_form("C99", &none, 4),
            Err(SeriesError::UnknownForm(_))
        ));
        assert!(matches!(
            build_form("C1", &none, 4),
            Err(SeriesError::BadFormParams("C1", _))
        ));
        let mut bad = BTreeMap::new();
        bad.insert("q".to_string(), 1i64);
        assert!(matches!(
            build_form("C2", &bad, 4),
            Err(SeriesError::BadFormParams("C2", _))
        ));
        // case-insensitive ids; C10 defaults k = 1
        assert!(matches!(
            build_form("c2", &none, 4).unwrap(),
            FormOutput::Univariate(_)
        ));
        match build_form("c10", &none, 4).unwrap() {
            FormOutput::Bivariate(d) => assert_eq!(d.coeff(2), y_poly()),
            _ => panic!("C10 is bivariate"),
        }
    }
}
