//! q-analogue series: coefficients a_n standing for a_n·x^n/[n]_q!,
//! multiplied by Gaussian-binomial convolution
//! (f·g)_n = Σ_i gauss(n,i)·f_i·g_{n-i}.
//!
//! Coefficients live in any ring that can absorb q-polynomials, so the
//! same code runs over Q[q] and over Q[y][q] for joint statistics.

use super::ring::{Poly, Rat, Ring};
use super::SeriesError;

/// q-polynomial: element of Q[q].
pub type QPoly = Poly<Rat>;

/// Ring containing an image of Q[q]; `q` is the distinguished variable
/// used by the Gaussian binomials.
pub trait QRing: Ring {
    fn from_q_poly(p: &QPoly) -> Self;
}

impl QRing for QPoly {
    fn from_q_poly(p: &QPoly) -> Self {
        p.clone()
    }
}

/// Q[y][q]: outer variable y, inner coefficients in Q[q].
pub type YQPoly = Poly<QPoly>;

impl QRing for YQPoly {
    fn from_q_poly(p: &QPoly) -> Self {
        Poly::constant(p.clone())
    }
}

/// `[n]_q = 1 + q + ... + q^{n-1}`.
pub fn q_number(n: usize) -> QPoly {
    Poly::from_coeffs(vec![<Rat as Ring>::one(); n])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> QPoly {
    let mut acc: QPoly = Poly::one();
    for i in 1..=n {
        acc = acc.mul(&q_number(i));
    }
    acc
}

/// Gaussian binomial table `gauss[n][i]` for 0 <= i <= n <= nmax, built by
/// the Pascal recurrence gauss(n,i) = gauss(n-1,i-1) + q^i·gauss(n-1,i).
pub fn gauss_table(nmax: usize) -> Vec<Vec<QPoly>> {
    let mut t: Vec<Vec<QPoly>> = Vec::with_capacity(nmax + 1);
    for n in 0..=nmax {
        let mut row = Vec::with_capacity(n + 1);
        for i in 0..=n {
            if i == 0 || i == n {
                row.push(Poly::one());
            } else {
                let a: &QPoly = &t[n - 1][i - 1];
                let b = t[n - 1][i].shift_up(i);
                row.push(a.add(&b));
            }
        }
        t.push(row);
    }
    t
}

/// Single Gaussian binomial coefficient.
pub fn gauss_binomial(n: usize, i: usize) -> QPoly {
    if i > n {
        return Poly::zero();
    }
    gauss_table(n)[n].swap_remove(i)
}

/// Truncated q-exponential series with coefficients in `R`; the n-th entry
/// is the coefficient of x^n/[n]_q!.
#[derive(Clone, PartialEq, Debug)]
pub struct QEgf<R: QRing> {
    coeffs: Vec<R>,
}

impl<R: QRing> QEgf<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        QEgf { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QEgf {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = R::one();
        s
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

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order());
        QEgf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order());
        QEgf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale_ring(&self, s: &R) -> Self {
        QEgf {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Gaussian-convolution product.
    pub fn q_mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order());
        let n = self.order();
        let gauss = gauss_table(n);
        let mut out = vec![R::zero(); n + 1];
        for (m, slot) in out.iter_mut().enumerate() {
            let mut acc = R::zero();
            for i in 0..=m {
                if self.coeffs[i].is_zero() || rhs.coeffs[m - i].is_zero() {
                    continue;
                }
                let g = R::from_q_poly(&gauss[m][i]);
                acc = acc.add(&g.mul(&self.coeffs[i]).mul(&rhs.coeffs[m - i]));
            }
            *slot = acc;
        }
        QEgf { coeffs: out }
    }

    /// Multiply by x in the q-EGF sense: (x·f)_n = [n]_q · f_{n-1}.
    pub fn q_x_times(&self) -> Self {
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for m in 1..=n {
            let qn = R::from_q_poly(&q_number(m));
            out[m] = qn.mul(&self.coeffs[m - 1]);
        }
        QEgf { coeffs: out }
    }

    /// Multiplicative inverse, requiring constant term exactly one
    /// (sufficient for every identity in this crate).
    pub fn q_inverse(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::ZeroConstantDivisor);
        }
        let n = self.order();
        let gauss = gauss_table(n);
        let mut h = vec![R::zero(); n + 1];
        h[0] = R::one();
        for m in 1..=n {
            // sum_i gauss(m,i) g_i h_{m-i} = 0 with g_0 = 1
            let mut acc = R::zero();
            for i in 1..=m {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                let g = R::from_q_poly(&gauss[m][i]);
                acc = acc.add(&g.mul(&self.coeffs[i]).mul(&h[m - i]));
            }
            h[m] = acc.neg();
        }
        Ok(QEgf { coeffs: h })
    }

    pub fn map_ring<S: QRing>(&self, f: impl Fn(&R) -> S) -> QEgf<S> {
        QEgf {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::ring::{poly_string, rat_int};
    use super::*;

    #[test]
    fn gauss_small_values() {
        assert_eq!(poly_string(&gauss_binomial(2, 1), "q"), "1 + q");
        assert_eq!(poly_string(&gauss_binomial(4, 2), "q"), "1 + q + 2*q^2 + q^3 + q^4");
        // evaluation at q=1 gives ordinary binomials
        for n in 0..=8usize {
            for i in 0..=n {
                let b = gauss_binomial(n, i).eval(&rat_int(1));
                let mut num = 1i64;
                let mut den = 1i64;
                for j in 0..i {
                    num *= (n - j) as i64;
                    den *= (j + 1) as i64;
                }
                assert_eq!(b, super::super::ring::rat(num, den));
            }
        }
    }

    #[test]
    fn q_factorial_is_product_of_q_numbers() {
        // [3]_q! = (1)(1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(poly_string(&q_factorial(3), "q"), "1 + 2*q + 2*q^2 + q^3");
    }

    #[test]
    fn q_mul_inverse_roundtrip() {
        // f = 1 + [distinct small q-polys]; f * f^{-1} = 1
        let order = 6;
        let mut coeffs = vec![QPoly::one()];
        for n in 1..=order {
            coeffs.push(q_number(n).mul(&Poly::monomial(rat_int(n as i64), 1)));
        }
        let f = QEgf::from_coeffs(coeffs, order);
        let inv = f.q_inverse().unwrap();
        assert_eq!(f.q_mul(&inv), QEgf::one(order));
    }

    #[test]
    fn x_times_matches_mul_by_x() {
        let order = 5;
        let mut x = QEgf::<QPoly>::zero(order);
        x.coeffs[1] = QPoly::one();
        let f = QEgf::from_coeffs(
            (0..=order).map(|n| q_number(n + 1)).collect(),
            order,
        );
        assert_eq!(f.q_mul(&x), f.q_x_times());
    }
}
