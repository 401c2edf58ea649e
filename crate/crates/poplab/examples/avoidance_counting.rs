//! Exhaustive avoidance counting: classical sequences, partially ordered
//! patterns, simultaneous avoidance, and words over a fixed alphabet.
//!
//! Run with: `cargo run --example avoidance_counting`
//! (set POPLAB_MAX_N to raise the enumeration guard beyond 11)

use poplab::dsl::parse_pattern;
use poplab::pattern::PopPattern;
use poplab::perms;
use poplab::poset::Poset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Catalan numbers: permutations avoiding any one classical 3-letter
    // pattern.
    let p213 = parse_pattern("2-1-3", None)?;
    println!("avoid 2-1-3: {:?}", perms::avoider_sequence(&[p213], 8)?);

    // Bell numbers: avoiding the vincular pattern 12-3.
    let p123 = parse_pattern("12-3", None)?;
    println!("avoid 12-3:  {:?}", perms::avoider_sequence(&[p123], 8)?);

    // Central binomial coefficients C(n, floor(n/2)): avoiding the partially
    // ordered pattern 11'2 where only 1 < 2 is ordered.
    let poset = Poset::build(&["1", "2", "1'"], &[("1", "2")])?;
    let pop = parse_pattern("11'2", Some(&poset))?;
    println!("avoid 11'2:  {:?}", perms::avoider_sequence(&[pop], 8)?);

    // Simultaneous avoidance of several patterns.
    let up = PopPattern::alternating(4, true)?; // peak-first zigzag of 4 letters
    let down = PopPattern::alternating(4, false)?; // valley-first zigzag
    println!(
        "avoid both length-4 zigzag shapes: {:?}",
        perms::avoider_sequence(&[up, down], 8)?
    );

    // Words over a k-letter alphabet instead of permutations.
    let desc = PopPattern::consecutive_classical(&[2, 1])?;
    let weakly_rising: Vec<u64> = (1..=6)
        .map(|n| perms::word_count_avoiders(std::slice::from_ref(&desc), n, 3))
        .collect::<Result<_, _>>()?;
    println!("ternary words with no descent: {weakly_rising:?}");

    // The full avoider set (not just its size), in lexicographic order.
    let valley = PopPattern::valley();
    let set = perms::avoider_set(&[valley], 4)?;
    let shown: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    println!("valley-free permutations of length 4 ({}): {shown:?}", shown.len());
    Ok(())
}
