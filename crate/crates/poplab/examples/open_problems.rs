//! A research workflow: compute avoidance sequences that have no known
//! closed form, straight from the pattern constructors, and compare them
//! with the crate's recorded values.
//!
//! Run with: `cargo run --example open_problems`

use poplab::pattern::PopPattern;
use poplab::perms;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n_max = 7; // raise this (and POPLAB_MAX_N) to push the frontier

    // Zigzag shapes: the length-k pattern whose letters must alternate
    // z1 > z2 < z3 > ... as a consecutive block. Avoiding the peak-first
    // shape of length 4 is open; so is avoiding both shapes at once.
    let up4 = PopPattern::alternating(4, true)?;
    let down4 = PopPattern::alternating(4, false)?;
    println!(
        "avoid one length-4 zigzag:   {:?}",
        perms::avoider_sequence(std::slice::from_ref(&up4), n_max)?
    );
    println!(
        "avoid both length-4 zigzags: {:?}",
        perms::avoider_sequence(&[up4, down4], n_max)?
    );

    // Co-unimodal shapes s1 > ... > sj < ... < sk, with or without the
    // extra relation sk < s1; pairs of these are equally untamed.
    let u2 = PopPattern::counimodal(4, 2)?;
    let u3 = PopPattern::counimodal(4, 3)?;
    let f2 = PopPattern::free_counimodal(4, 2)?;
    let f3 = PopPattern::free_counimodal(4, 3)?;
    println!(
        "avoid {{4123, 4312}} shapes:   {:?}",
        perms::avoider_sequence(&[u2, u3], n_max)?
    );
    println!(
        "avoid both free variants:    {:?}",
        perms::avoider_sequence(&[f2, f3], n_max)?
    );

    // The bundled golden table records these sequences further out; the
    // `openproblems` verification suite replays the comparison.
    println!("\nrecorded rows (name, first length, values):");
    for line in poplab::data::OPENPROBLEMS_CSV.lines().skip(1) {
        println!("  {line}");
    }
    println!("\nreplay: `poplab verify --suite openproblems` (add --slow for n = 9)");
    Ok(())
}
