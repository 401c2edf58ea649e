//! The exact power-series engine: truncated series over Q, the closed-form
//! catalog C1..C20, bivariate refinements, and the ODE/fixpoint solvers.
//!
//! Run with: `cargo run --example series_catalog`

use poplab::series::catalog::{self, FormOutput};
use poplab::series::ode::ode_solve;
use poplab::series::ring::{poly_string, rat_int, rat_string};
use poplab::series::Series;
use std::collections::BTreeMap;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Univariate forms turn into integer counting sequences. C2 is the EGF
    // of set partitions (Bell numbers).
    let bell = catalog::c2(8);
    println!("Bell numbers:    {:?}", catalog::egf_counts(&bell)?);

    // C16 = tan x + sec x counts alternating (zigzag) permutations.
    println!("zigzag numbers:  {:?}", catalog::egf_counts(&catalog::c16(8))?);

    // Ordinary generating functions use gf_counts instead.
    println!("Catalan numbers: {:?}", catalog::gf_counts(&catalog::catalan_gf(8))?);

    // Raw rational coefficients of any series.
    let c11 = catalog::c11(6);
    for m in 0..=4 {
        println!("C11 coefficient of x^{m}: {}", rat_string(&c11.coeff(m)));
    }

    // Bivariate forms refine counts by a statistic marked with y. C3 tracks
    // descents: row n lists permutations of length n by descent count.
    let eulerian = catalog::c3(6)?;
    println!("\nC3 row polynomial at x^4: {}", poly_string(&eulerian.coeff(4), "y"));
    for (n, row) in catalog::bgf_table_egf(&eulerian)?.iter().enumerate().skip(1) {
        println!("length {n} by descents: {row:?}");
    }

    // The generic dispatcher used by the CLI: form id + named parameters.
    let mut params = BTreeMap::new();
    params.insert("k".to_string(), 1i64);
    params.insert("l".to_string(), 0i64);
    match catalog::build_form("C8", &params, 6)? {
        FormOutput::Bivariate(f) => {
            println!("\nC8(k=1, l=0) rows (Narayana triangle):");
            for (n, row) in catalog::bgf_table_gf(&f)?.iter().enumerate().skip(1) {
                println!("  n = {n}: {row:?}");
            }
        }
        FormOutput::Univariate(_) => unreachable!("C8 is bivariate"),
    }

    // The first-order quadratic ODE solver: P' = c2 P^2 + c1 P + c0.
    // With c0 = 1, c1 = 0, c2 = 1 and P(0) = 0 it produces tan x.
    let order = 9;
    let tangent = ode_solve(
        &Series::one(order),
        &Series::zero(order),
        &Series::one(order),
        rat_int(0),
    );
    println!("\ntan x from the ODE solver:");
    for m in [1usize, 3, 5, 7, 9] {
        println!("  x^{m}: {}", rat_string(&tangent.coeff(m)));
    }

    // Series algebra: exp, sqrt, division, composition are exact.
    let s = Series::from_coeffs(vec![rat_int(1), rat_int(-4)], 8);
    let root = s.sqrt()?;
    assert_eq!(root.mul(&root), s);
    println!("\nsqrt(1 - 4x) squared round trips: ok");
    Ok(())
}
