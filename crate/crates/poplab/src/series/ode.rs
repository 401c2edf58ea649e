//! Coefficient-recurrence solvers for the two shapes of functional
//! equation used by the catalog: first-order quadratic ODEs
//! `P' = c2·P² + c1·P + c0` and order-raising fixpoints `P = Φ(P)`.

use super::ring::{rat, Ring};
use super::{Series, SeriesError};

/// Solve `P' = c2·P² + c1·P + c0` with `P(0) = initial`, truncated at the
/// order of the coefficient series. The recurrence
/// `(m+1)·p_{m+1} = [x^m](c2 P² + c1 P + c0)` only consumes `p_0..p_m`,
/// so the solution is determined coefficient by coefficient.
pub fn ode_solve<R: Ring>(
    c0: &Series<R>,
    c1: &Series<R>,
    c2: &Series<R>,
    initial: R,
) -> Series<R> {
    let n = c0.order();
    assert_eq!(c1.order(), n);
    assert_eq!(c2.order(), n);
    let mut p = vec![R::zero(); n + 1];
    p[0] = initial;
    // running P^2 coefficients, extended as p is discovered
    let mut sq = vec![R::zero(); n + 1];
    sq[0] = p[0].mul(&p[0]);
    for m in 0..n {
        let mut rhs = c0.coeff(m);
        for i in 0..=m {
            let c1i = c1.coeff(i);
            if !c1i.is_zero() {
                rhs = rhs.add(&c1i.mul(&p[m - i]));
            }
            let c2i = c2.coeff(i);
            if !c2i.is_zero() {
                rhs = rhs.add(&c2i.mul(&sq[m - i]));
            }
        }
        let next = rhs.scale(&rat(1, m as i64 + 1));
        p[m + 1] = next;
        // extend P^2: sq[t] for t = m+1 now computable from p_0..p_{m+1}
        let t = m + 1;
        let mut acc = R::zero();
        for j in 0..=t {
            acc = acc.add(&p[j].mul(&p[t - j]));
        }
        sq[t] = acc;
    }
    Series::from_coeffs(p, n)
}

/// Residual of a candidate solution: `P' - (c2·P² + c1·P + c0)`, compared
/// at one order lower since differentiation drops the top coefficient.
pub fn ode_residual<R: Ring>(
    p: &Series<R>,
    c0: &Series<R>,
    c1: &Series<R>,
    c2: &Series<R>,
) -> Series<R> {
    let n = p.order() - 1;
    let pt = p.truncate(n);
    let rhs = &(&c2.truncate(n) * &(&pt * &pt)) + &(&(&c1.truncate(n) * &pt) + &c0.truncate(n));
    &p.differentiate() - &rhs
}

/// Solve `P = phi(P)` where `phi` determines the coefficient of x^m from
/// coefficients of x^{<m} (an order-raising contraction). Starting from
/// the zero series, after k iterations the first k coefficients are exact;
/// the result is checked to be an actual fixpoint, otherwise errors.
pub fn fixpoint_solve<R: Ring>(
    order: usize,
    phi: impl Fn(&Series<R>) -> Series<R>,
) -> Result<Series<R>, SeriesError> {
    let mut p = Series::zero(order);
    for _ in 0..=order + 1 {
        let next = phi(&p);
        assert_eq!(next.order(), order, "phi must preserve the truncation order");
        if next == p {
            return Ok(p);
        }
        p = next;
    }
    Err(SeriesError::FixpointDiverged)
}
