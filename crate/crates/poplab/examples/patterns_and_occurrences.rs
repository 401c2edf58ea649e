//! Define partially ordered patterns — classical, vincular, boxed, and
//! genuinely partial — and find their occurrences in a host permutation.
//!
//! Run with: `cargo run --example patterns_and_occurrences`

use poplab::dsl::{parse_pattern, print_pattern};
use poplab::pattern::PopPattern;
use poplab::poset::Poset;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let host: &[u8] = &[3, 1, 4, 6, 2, 5];
    println!("host = {host:?}\n");

    // Classical pattern 1-3-2: letters may sit anywhere, values must fit
    // the chain 1 < 3' < 2' reading. Digit-only notation needs no poset.
    let classical = parse_pattern("1-3-2", None)?;
    show("1-3-2 (classical)", &classical, host);

    // Vincular (dashed) pattern 13-2: the "13" block must be consecutive.
    let vincular = parse_pattern("13-2", None)?;
    show("13-2 (vincular)", &vincular, host);

    // A genuinely partial pattern: 1 < 2 while 1' is incomparable to both,
    // all three letters consecutive. The middle letter's value is free.
    let poset = Poset::build(&["1", "2", "1'"], &[("1", "2")])?;
    let pop = parse_pattern("11'2", Some(&poset))?;
    show("11'2 (partial, consecutive)", &pop, host);

    // The same pattern through the constructor API, plus avoidance queries.
    let same = PopPattern::segmented(poset, &["1", "1'", "2"])?;
    assert_eq!(print_pattern(&same)?, print_pattern(&pop)?);
    println!("avoids 11'2?          {}", same.avoids(host));
    println!("avoids 1-3-2?         {}", classical.avoids(host));
    println!(
        "max non-overlapping 11'2 occurrences: {}\n",
        same.max_nonoverlapping(host)?
    );

    // Anchors: `[` pins the first letter to position 1, `]` the last letter
    // to the end. `[21` asks for a descent at the very start.
    let anchored = parse_pattern("[21", None)?;
    show("[21 (anchored left)", &anchored, host);

    // The strict separator `~` forbids adjacency: the two letters of an
    // occurrence must have at least one host letter between them.
    let strict = parse_pattern("1~2", None)?;
    show("1~2 (strict gap)", &strict, host);

    // Patterns serialize to JSON (poset inline) and parse back.
    let json = serde_json::to_string(&same.to_json())?;
    let back = PopPattern::from_json_str(&json)?;
    assert_eq!(back.count_occurrences(host), same.count_occurrences(host));
    println!("JSON round trip: ok");
    Ok(())
}

fn show(label: &str, p: &PopPattern, host: &[u8]) {
    let occ = p.occurrences(host);
    let positions: Vec<Vec<usize>> = occ.iter().map(|o| o.positions().to_vec()).collect();
    println!("{label}: {} occurrences at {positions:?}", occ.len());
}
