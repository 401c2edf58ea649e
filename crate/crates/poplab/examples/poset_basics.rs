//! Build finite labelled posets, query comparability, and exchange them as
//! JSON — the order structures that underpin every partially ordered pattern.
//!
//! Run with: `cargo run --example poset_basics`

use poplab::poset::{Comparability, Poset};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // A poset from covering relations; the transitive closure is taken for
    // us, and cycles are rejected.
    let poset = Poset::build(
        &["1", "2", "3", "1'", "2'"],
        &[("1", "2"), ("2", "3"), ("1'", "2'")],
    )?;
    println!("elements: {:?}", poset.elements());
    println!("closed relations: {:?}", poset.relations());

    for (a, b) in [("1", "3"), ("3", "1"), ("1", "1'")] {
        let cmp = poset.comparable(a, b)?;
        let word = match cmp {
            Comparability::Less => "<",
            Comparability::Greater => ">",
            Comparability::Incomparable => "||",
        };
        println!("{a} {word} {b}");
    }

    // Special shapes: chains (total orders), antichains (no relations), and
    // the flat poset (one bottom element below k incomparable ones).
    let chain = Poset::chain(&["a", "b", "c"]);
    let flat = Poset::flat(3);
    println!("chain relations: {:?}", chain.relations());
    println!("flat(3) relations: {:?}", flat.relations());

    // Duals flip every relation; disjoint unions keep the parts incomparable.
    let dual = chain.dual();
    println!("dual chain relations: {:?}", dual.relations());
    let both = chain.disjoint_union(&Poset::antichain(&["x", "y"]))?;
    println!("union size: {}", both.len());

    // Round trip through the JSON exchange format.
    let json = poset.to_json();
    let text = serde_json::to_string_pretty(&json)?;
    println!("--- JSON ---\n{text}");
    let back = Poset::from_json_str(&text)?;
    assert_eq!(back.relations(), poset.relations());
    println!("JSON round trip: ok");

    // The crate bundles the posets used by its golden tables.
    println!("bundled posets: {:?}", poplab::data::bundled_poset_names());
    Ok(())
}
