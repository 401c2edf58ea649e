//! Data bundled with the crate: named posets and the golden CSV tables the
//! verification suites compare against. Everything is embedded at compile
//! time so the library works without a data directory on disk; the files
//! themselves live under `data/` and are documented in `data/README.md`.

use crate::poset::{Poset, PosetError};

/// Golden avoider counts for the fourteen length-4 segmented patterns
/// (columns: name, poset stem, word letters, counts for n = 1..9).
pub const TABLE1_CSV: &str = include_str!("../data/table1.csv");

/// Golden avoider counts for the open-problem pattern families
/// (columns: name, first n, values up to n = 8, the n = 9 value).
pub const OPENPROBLEMS_CSV: &str = include_str!("../data/openproblems.csv");

const POSETS: &[(&str, &str)] = &[
    ("fig1", include_str!("../data/posets/fig1.json")),
    ("peak", include_str!("../data/posets/peak.json")),
    ("valley", include_str!("../data/posets/valley.json")),
    ("flat2", include_str!("../data/posets/flat2.json")),
    ("flat3", include_str!("../data/posets/flat3.json")),
    ("fig10", include_str!("../data/posets/fig10.json")),
    ("fig12_zigzag", include_str!("../data/posets/fig12_zigzag.json")),
    ("fig12_chain", include_str!("../data/posets/fig12_chain.json")),
    (
        "fig12_counimodal",
        include_str!("../data/posets/fig12_counimodal.json"),
    ),
    (
        "fig12_free_counimodal",
        include_str!("../data/posets/fig12_free_counimodal.json"),
    ),
    ("fig12_k22", include_str!("../data/posets/fig12_k22.json")),
    ("single", include_str!("../data/posets/single.json")),
];

/// Names of all bundled posets (file stems, without `.json`).
pub fn bundled_poset_names() -> Vec<&'static str> {
    POSETS.iter().map(|(n, _)| *n).collect()
}

/// JSON text of a bundled poset; accepts the stem with or without a
/// trailing `.json`.
pub fn bundled_poset_json(name: &str) -> Option<&'static str> {
    let stem = name.strip_suffix(".json").unwrap_or(name);
    POSETS.iter().find(|(n, _)| *n == stem).map(|(_, s)| *s)
}

/// Parse a bundled poset by name.
pub fn bundled_poset(name: &str) -> Option<Result<Poset, PosetError>> {
    bundled_poset_json(name).map(Poset::from_json_str)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::Comparability;

    #[test]
    fn all_bundled_posets_parse() {
        for name in bundled_poset_names() {
            let p = bundled_poset(name).expect("listed").expect("parses");
            assert!(!p.is_empty(), "{name} is empty");
        }
    }

    #[test]
    fn fig10_closure_and_isolation() {
        let p = bundled_poset("fig10").unwrap().unwrap();
        assert_eq!(p.comparable("1", "3").unwrap(), Comparability::Less);
        assert_eq!(
            p.comparable("1", "1'").unwrap(),
            Comparability::Incomparable
        );
        assert_eq!(p.comparable("1'", "2'").unwrap(), Comparability::Less);
    }

    #[test]
    fn lookup_accepts_json_suffix() {
        assert!(bundled_poset_json("fig1.json").is_some());
        assert!(bundled_poset_json("fig1").is_some());
        assert!(bundled_poset_json("nope").is_none());
    }

    #[test]
    fn golden_csvs_have_expected_shape() {
        assert_eq!(TABLE1_CSV.lines().count(), 15); // header + 14 rows
        assert_eq!(OPENPROBLEMS_CSV.lines().count(), 9); // header + 8 rows
    }
}
