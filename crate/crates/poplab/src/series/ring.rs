//! Exact coefficient rings: arbitrary-precision rationals and dense
//! polynomials over them, composable to Q, Q[y], Q[q] and Q[y][q].

use num::{BigInt, BigRational, One, Signed, Zero};

/// Arbitrary-precision rational number, the base field everywhere.
pub type Rat = BigRational;

/// A commutative Q-algebra with exact arithmetic.
///
/// `try_div` is *exact* division: it returns `Some(c)` only when
/// `c * rhs == self` holds in the ring, never a rounded quotient.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn try_div(&self, rhs: &Self) -> Option<Self>;
    /// Multiply by a rational scalar.
    fn scale(&self, s: &Rat) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn from_int(v: i64) -> Self {
        Self::one().scale(&Rat::from_integer(BigInt::from(v)))
    }
}

pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `p/q` as an exact rational.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn scale(&self, s: &Rat) -> Self {
        self * s
    }
}

/// Dense univariate polynomial over `R`, highest zero coefficients trimmed.
/// The variable is anonymous; printers choose its name.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn constant(c: R) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The variable itself, `x`.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![R::zero(), R::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![R::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(R::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn eval(&self, v: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(v).add(c);
        }
        acc
    }

    /// Multiply by `x^k` (coefficient shift).
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Poly::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect();
        Poly::from_coeffs(coeffs)
    }
    fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(R::neg).collect(),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::from_coeffs(coeffs)
    }
    /// Exact polynomial division: long division where every leading-coefficient
    /// division must itself be exact, and the remainder must vanish.
    fn try_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (dn, dd) = (self.degree()?, rhs.degree()?);
        if dn < dd {
            return None;
        }
        let lead = &rhs.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![R::zero(); dn - dd + 1];
        for k in (0..=dn - dd).rev() {
            let c = rem[k + dd].try_div(lead)?;
            if !c.is_zero() {
                for (j, b) in rhs.coeffs.iter().enumerate() {
                    rem[k + j] = rem[k + j].sub(&c.mul(b));
                }
            }
            quot[k] = c;
        }
        if rem.iter().all(R::is_zero) {
            Some(Poly::from_coeffs(quot))
        } else {
            None
        }
    }
    fn scale(&self, s: &Rat) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.scale(s)).collect())
    }
}

/// Rational number rendered as `p` or `p/q`.
pub fn rat_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Render a polynomial over Q as e.g. `1 + 3*y - y^2`, `0` when zero.
pub fn poly_string(p: &Poly<Rat>, var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if Ring::is_zero(c) {
            continue;
        }
        let mag = rat_string(&c.abs());
        let sign_neg = c.is_negative();
        if out.is_empty() {
            if sign_neg {
                out.push('-');
            }
        } else {
            out.push_str(if sign_neg { " - " } else { " + " });
        }
        let body = match k {
            0 => mag,
            _ => {
                let v = if k == 1 {
                    var.to_string()
                } else {
                    format!("{var}^{k}")
                };
                if mag == "1" {
                    v
                } else {
                    format!("{mag}*{v}")
                }
            }
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Render a polynomial in an outer variable whose coefficients are
/// themselves polynomials (e.g. Q[y][q] values).
pub fn poly2_string(p: &Poly<Poly<Rat>>, outer: &str, inner: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if Ring::is_zero(c) {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        let inner_s = poly_string(c, inner);
        match k {
            0 => out.push_str(&inner_s),
            _ => {
                let v = if k == 1 {
                    outer.to_string()
                } else {
                    format!("{outer}^{k}")
                };
                if inner_s == "1" {
                    out.push_str(&v);
                } else {
                    out.push_str(&format!("({inner_s})*{v}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
