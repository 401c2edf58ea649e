//! Exact truncated formal power series over pluggable coefficient rings.
//!
//! A `Series<R>` holds coefficients of x^0..x^N for a fixed truncation
//! order N. All arithmetic is exact modulo x^{N+1}; operations never
//! silently extend the order, and divisions must be exact in the
//! coefficient ring or they fail loudly.

pub mod catalog;
pub mod ode;
pub mod qegf;
pub mod ring;

use ring::{rat, rat_int, Rat, Ring};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("non-exact division at x^{0}: coefficient not divisible in the ring")]
    NonExactDivision(usize),
    #[error("division by a series with zero constant term")]
    ZeroConstantDivisor,
    #[error("composition requires the inner series to have zero constant term")]
    ComposeNonzeroConstant,
    #[error("exp requires zero constant term")]
    ExpNonzeroConstant,
    #[error("sqrt requires constant term one")]
    SqrtConstantNotOne,
    #[error("series is not divisible by x^{0}")]
    NotDivisibleByX(usize),
    #[error("coefficient of x^{0} is not an integer after scaling")]
    NonIntegral(usize),
    #[error("fixpoint iteration did not stabilize: the map must raise x-order")]
    FixpointDiverged,
    #[error("unknown catalog form id `{0}`")]
    UnknownForm(String),
    #[error("bad parameters for form {0}: {1}")]
    BadFormParams(&'static str, String),
}

/// Truncated power series: coefficients of x^0..x^order.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Zero series at the given truncation order.
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * x^k`; coefficients beyond the order are dropped.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Build from explicit coefficients, padding with zeros to the order.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    /// Reduce (or keep) the truncation order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot extend the order");
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.order(),
            rhs.order(),
            "series orders must match; truncate explicitly"
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs);
        Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_same_order(rhs);
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        Series { coeffs }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn scale_ring(&self, s: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Exact division: every coefficient step must divide exactly by the
    /// divisor's constant term within the ring.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(rhs);
        let g0 = &rhs.coeffs[0];
        if g0.is_zero() {
            return Err(SeriesError::ZeroConstantDivisor);
        }
        let n = self.order();
        let mut h = vec![R::zero(); n + 1];
        for m in 0..=n {
            let mut acc = self.coeffs[m].clone();
            for i in 0..m {
                acc = acc.sub(&h[i].mul(&rhs.coeffs[m - i]));
            }
            h[m] = acc.try_div(g0).ok_or(SeriesError::NonExactDivision(m))?;
        }
        Ok(Series { coeffs: h })
    }

    /// Divide by `x^k`; the low-order coefficients must vanish. The result
    /// keeps the same truncation order with unknown top coefficients cut,
    /// so callers should build inputs at order+k when they need full width.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisibleByX(k));
        }
        Ok(Series {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiply by `x^k`, truncating at the top.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for i in k..=n {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Series { coeffs }
    }

    pub fn differentiate(&self) -> Self {
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n);
        for i in 1..=n {
            coeffs.push(self.coeffs[i].scale(&rat_int(i as i64)));
        }
        if coeffs.is_empty() {
            coeffs.push(R::zero());
        }
        Series { coeffs }
    }

    /// Antiderivative with constant term zero; order grows by one.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 2];
        for i in 0..=n {
            coeffs[i + 1] = self.coeffs[i].scale(&rat(1, i as i64 + 1));
        }
        Series { coeffs }
    }

    /// `exp(f)` for `f` with zero constant term, via E' = f'·E.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpNonzeroConstant);
        }
        let n = self.order();
        let mut e = vec![R::zero(); n + 1];
        e[0] = R::one();
        for m in 0..n {
            // (m+1) e_{m+1} = sum_{i=0..m} (i+1) f_{i+1} e_{m-i}
            let mut acc = R::zero();
            for i in 0..=m {
                let fi = self.coeffs[i + 1].scale(&rat_int(i as i64 + 1));
                acc = acc.add(&fi.mul(&e[m - i]));
            }
            e[m + 1] = acc.scale(&rat(1, m as i64 + 1));
        }
        Ok(Series { coeffs: e })
    }

    /// Square root with constant term one.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::SqrtConstantNotOne);
        }
        let n = self.order();
        let mut s = vec![R::zero(); n + 1];
        s[0] = R::one();
        for m in 1..=n {
            // f_m = 2 s_0 s_m + sum_{i=1..m-1} s_i s_{m-i}
            let mut acc = self.coeffs[m].clone();
            for i in 1..m {
                acc = acc.sub(&s[i].mul(&s[m - i]));
            }
            s[m] = acc.scale(&rat(1, 2));
        }
        Ok(Series { coeffs: s })
    }

    /// `f ∘ g` where `g` has zero constant term (Horner scheme).
    pub fn compose(&self, g: &Self) -> Result<Self, SeriesError> {
        self.check_same_order(g);
        if !g.coeffs[0].is_zero() {
            return Err(SeriesError::ComposeNonzeroConstant);
        }
        let n = self.order();
        let mut acc = Series::constant(self.coeffs[n].clone(), n);
        for i in (0..n).rev() {
            acc = acc.mul(g);
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[i]);
        }
        Ok(acc)
    }

    /// Substitute each coefficient into another ring.
    pub fn map_ring<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, mut k: usize) -> Self {
        let mut acc = Series::one(self.order());
        let mut base = self.clone();
        loop {
            if k % 2 == 1 {
                acc = acc.mul(&base);
            }
            k /= 2;
            if k == 0 {
                return acc;
            }
            base = base.mul(&base);
        }
    }
}

// ---- known series over Q ----

/// `1 + x + ... + x^{k-1}` as a series.
pub fn geometric_poly(k: usize, order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    for i in 0..k.min(order + 1) {
        s.coeffs[i] = rat_int(1);
    }
    s
}

pub fn exp_x(order: usize) -> Series<Rat> {
    Series::monomial(rat_int(1), 1, order).exp().expect("x has zero constant term")
}

pub fn sin_x(order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    let mut c = rat_int(1);
    let mut k = 1usize;
    while k <= order {
        s.coeffs[k] = c.clone();
        c = -c / rat_int(((k + 1) * (k + 2)) as i64);
        k += 2;
    }
    s
}

pub fn cos_x(order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    let mut c = rat_int(1);
    let mut k = 0usize;
    while k <= order {
        s.coeffs[k] = c.clone();
        c = -c / rat_int(((k + 1) * (k + 2)) as i64);
        k += 2;
    }
    s
}

pub fn tan_x(order: usize) -> Series<Rat> {
    sin_x(order).div(&cos_x(order)).expect("cos has unit constant term")
}

pub fn sec_x(order: usize) -> Series<Rat> {
    Series::one(order).div(&cos_x(order)).expect("cos has unit constant term")
}

pub fn sinh_x(order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    let mut c = rat_int(1);
    let mut k = 1usize;
    while k <= order {
        s.coeffs[k] = c.clone();
        c /= rat_int(((k + 1) * (k + 2)) as i64);
        k += 2;
    }
    s
}

pub fn cosh_x(order: usize) -> Series<Rat> {
    let mut s = Series::zero(order);
    let mut c = rat_int(1);
    let mut k = 0usize;
    while k <= order {
        s.coeffs[k] = c.clone();
        c /= rat_int(((k + 1) * (k + 2)) as i64);
        k += 2;
    }
    s
}

pub fn tanh_x(order: usize) -> Series<Rat> {
    sinh_x(order).div(&cosh_x(order)).expect("cosh has unit constant term")
}

// ---- operator sugar on references ----

macro_rules! series_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl<'a, R: Ring> std::ops::$trait<&'a Series<R>> for &'a Series<R> {
            type Output = Series<R>;
            fn $method(self, rhs: &'a Series<R>) -> Series<R> {
                Series::$imp(self, rhs)
            }
        }
    };
}
series_binop!(Add, add, add);
series_binop!(Sub, sub, sub);
series_binop!(Mul, mul, mul);

impl<R: Ring> std::ops::Neg for &Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::ring::rat;
    use super::*;

    #[test]
    fn exp_of_x_is_reciprocal_factorials() {
        let e = exp_x(6);
        for n in 0..=6 {
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(e.coeff(n), rat(1, fact.max(1)));
        }
    }

    #[test]
    fn tan_sec_known_coefficients() {
        // tan x = x + x^3/3 + 2x^5/15 + 17x^7/315
        let t = tan_x(7);
        assert_eq!(t.coeff(1), rat(1, 1));
        assert_eq!(t.coeff(3), rat(1, 3));
        assert_eq!(t.coeff(5), rat(2, 15));
        assert_eq!(t.coeff(7), rat(17, 315));
        // sec x = 1 + x^2/2 + 5x^4/24 + 61 x^6/720
        let s = sec_x(6);
        assert_eq!(s.coeff(2), rat(1, 2));
        assert_eq!(s.coeff(4), rat(5, 24));
        assert_eq!(s.coeff(6), rat(61, 720));
        // tanh x = x - x^3/3 + 2x^5/15
        let th = tanh_x(5);
        assert_eq!(th.coeff(3), rat(-1, 3));
        assert_eq!(th.coeff(5), rat(2, 15));
    }

    #[test]
    fn div_mul_roundtrip() {
        let a = geometric_poly(4, 8);
        let b = &exp_x(8) + &Series::monomial(rat(3, 7), 2, 8);
        let prod = &a * &b;
        assert_eq!(prod.div(&b).unwrap(), a);
        assert_eq!(prod.div(&a).unwrap(), b);
    }

    #[test]
    fn division_error_paths() {
        let zero = Series::<Rat>::zero(4);
        assert_eq!(
            Series::one(4).div(&zero),
            Err(SeriesError::ZeroConstantDivisor)
        );
        let x = Series::monomial(rat_int(1), 1, 4);
        assert_eq!(Series::<Rat>::one(4).div_x_pow(1), Err(SeriesError::NotDivisibleByX(1)));
        assert_eq!(x.div_x_pow(1).unwrap().coeff(0), rat_int(1));
    }

    #[test]
    fn compose_geometric_with_2x() {
        // 1/(1-x) ∘ 2x = sum 2^n x^n
        let geo = geometric_poly(10, 6);
        let g = Series::monomial(rat_int(2), 1, 6);
        let c = geo.compose(&g).unwrap();
        for n in 0..=6 {
            assert_eq!(c.coeff(n), rat_int(1 << n));
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let f = &Series::one(8) + &Series::monomial(rat_int(-4), 1, 8);
        let s = f.sqrt().unwrap();
        assert_eq!(&s * &s, f);
        // sqrt(1-4x) central binomial connection: (1-sqrt(1-4x))/(2x) = Catalan
        let num = Series::one(8).sub(&s);
        let cat = num.div_x_pow(1).unwrap().scale(&rat(1, 2));
        let expect = [1i64, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expect.iter().enumerate() {
            assert_eq!(cat.coeff(n), rat_int(c));
        }
    }

    #[test]
    fn integrate_differentiate() {
        let f = tan_x(9);
        assert_eq!(f.differentiate().integrate(), f.truncate(9));
        // d/dx tan = 1 + tan^2 (sec^2)
        let d = f.differentiate();
        let expect = (&Series::one(8) + &(&f.truncate(8) * &f.truncate(8))).truncate(8);
        assert_eq!(d, expect);
    }
}
