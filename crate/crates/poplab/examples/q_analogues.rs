//! q-analogues: grade avoiders by inversions, check the quasi-avoider and
//! splitting identities, and refine non-overlapping occurrence counts.
//!
//! Run with: `cargo run --example q_analogues`

use poplab::pattern::PopPattern;
use poplab::poset::Poset;
use poplab::qstats;
use poplab::series::ring::poly_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Grade the avoiders of 11'2 (1 < 2, 1' free) by their inversion count:
    // each length contributes a polynomial in q.
    let poset = Poset::build(&["1", "2", "1'"], &[("1", "2")])?;
    let p = PopPattern::segmented(poset, &["1", "1'", "2"])?;
    let table = qstats::q_avoiders(&p, 5)?;
    for n in 0..=table.n_max() {
        println!("A_{n}(q) = {}", poly_string(table.poly(n), "q"));
    }
    println!("counts at q = 1: {:?}", table.counts());

    // Quasi-avoiders contain exactly one occurrence, at the very end.
    let quasi = qstats::q_quasi_avoiders(&p, 5)?;
    println!("\nB_5(q) = {}", poly_string(quasi.poly(5), "q"));

    // The structural identity tying the two together:
    //   B_n(q) = [n]_q · A_{n-1}(q) - A_n(q).
    let report = qstats::verify_lemma_B(&p, 6)?;
    println!("\n{report}");

    // Splitting a pattern list: avoiding p and then sigma on disjoint
    // alphabets decomposes the q-count.
    let sigma = PopPattern::segmented(Poset::chain(&["u1", "u2"]), &["u1", "u2"])?;
    let split = qstats::verify_lemma_split(&p, &sigma, 5)?;
    println!("{split}");

    // Non-overlapping occurrences, refined by inversions: the bivariate
    // q-series identity A/(1 - yB) reproduces every histogram.
    let nonoverlap = qstats::verify_q_nonoverlap(&p, 5)?;
    println!("{nonoverlap}");

    // Reports serialize for machine consumption.
    println!("\nas JSON: {}", serde_json::to_string(&report)?);
    Ok(())
}
