//! Exact distribution tables: occurrence counts, non-overlapping occurrence
//! counts, restricted hosts, joint statistics, and classical permutation
//! statistics.
//!
//! Run with: `cargo run --example statistics_and_distributions`

use poplab::dsl::parse_pattern;
use poplab::pattern::PopPattern;
use poplab::perms::{self, stats};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Occurrences of the consecutive pattern 21 = descents: the Eulerian
    // distribution.
    let desc = PopPattern::consecutive_classical(&[2, 1])?;
    let table = perms::distribution(&desc, 5, &[])?;
    println!("descents over all permutations of length 5 (CSV):");
    print!("{}", table.to_csv());

    // Dense one-statistic view.
    println!("\nEulerian row n = 5: {:?}", table.dense_counts());

    // Restrict the hosts: occurrences of ascents among 2-1-3-avoiders.
    let asc = PopPattern::consecutive_classical(&[1, 2])?;
    let restriction = [parse_pattern("2-1-3", None)?];
    let restricted = perms::distribution(&asc, 5, &restriction)?;
    println!(
        "ascents over 2-1-3-avoiders of length 5: {:?}",
        restricted.dense_counts()
    );

    // Maximum sets of non-overlapping occurrences (greedy = DP, checked in
    // the test suite).
    let peak = PopPattern::peak();
    let nonoverlap = perms::nonoverlap_distribution(&peak, 6)?;
    println!(
        "non-overlapping peaks, length 6: {:?}",
        nonoverlap.dense_counts()
    );

    // Joint distributions of two arbitrary statistics.
    let joint = perms::joint_distribution(("des", stats::des), ("maj", stats::maj), 4, &[])?;
    println!("\njoint (des, maj) table for n = 4:");
    print!("{}", joint.to_csv());

    // Classical statistics on a single permutation.
    let w: &[u8] = &[3, 1, 4, 6, 2, 5];
    println!("\nw = {w:?}");
    println!("inv = {}, des = {}, maj = {}", stats::inv(w), stats::des(w), stats::maj(w));
    println!(
        "peaks = {}, valleys = {}, left-to-right minima = {}",
        stats::peaks(w),
        stats::valleys(w),
        stats::left_to_right_minima(w)
    );
    println!(
        "modified maxima = {}, modified minima = {}",
        stats::modified_maxima(w),
        stats::modified_minima(w)
    );
    println!("cycle decomposition = {:?}", stats::cycle_decomposition(w));
    Ok(())
}
