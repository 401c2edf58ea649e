//! Textual pattern notation.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! pattern := '['? segment (sep segment)* ']'?
//! sep     := '-'            (FREE gap)
//!          | '~'            (STRICT gap; ASCII stand-in for the box)
//! segment := letter+        (consecutive letters get ADJ gaps)
//! letter  := alphanumeric char followed by zero or more apostrophes
//! ```
//!
//! `[` anchors the occurrence to the start of the host, `]` to the end.
//! When no poset is supplied and every letter is an unprimed digit, the
//! chain poset ordered by digit value is synthesized (classical patterns
//! like `2-1-3`); any other letter requires an explicit poset.

use crate::pattern::{Gap, PatternError, PopPattern};
use crate::poset::Poset;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DslError {
    #[error("empty pattern text")]
    Empty,
    #[error("unbalanced or misplaced bracket `{0}` at byte {1}")]
    Bracket(char, usize),
    #[error("empty segment at byte {0}")]
    EmptySegment(usize),
    #[error("unexpected character `{0}` at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("letter `{0}` requires an explicit poset (only unprimed digits synthesize a classical chain)")]
    PosetRequired(String),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error("letter label `{0}` is not expressible in pattern notation (single alphanumeric plus primes); use the JSON form")]
    UnprintableLabel(String),
}

/// Parse pattern notation. `poset` supplies the order on the letters; when
/// omitted, all-unprimed-digit patterns get the chain ordered by digit value.
pub fn parse_pattern(s: &str, poset: Option<&Poset>) -> Result<PopPattern, DslError> {
    let chars: Vec<(usize, char)> = s
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(DslError::Empty);
    }
    let mut lo = 0;
    let mut hi = chars.len();
    let anchored_left = chars[0].1 == '[';
    if anchored_left {
        lo += 1;
    }
    let anchored_right = hi > lo && chars[hi - 1].1 == ']';
    if anchored_right {
        hi -= 1;
    }
    let body = &chars[lo..hi];
    if body.is_empty() {
        return Err(DslError::Empty);
    }

    let mut letters: Vec<String> = Vec::new();
    let mut gaps: Vec<Gap> = Vec::new();
    let mut i = 0;
    let mut expect_letter = true; // at a segment boundary a letter must follow
    while i < body.len() {
        let (pos, c) = body[i];
        match c {
            '-' | '~' => {
                if expect_letter {
                    return Err(DslError::EmptySegment(pos));
                }
                gaps.push(if c == '-' { Gap::Free } else { Gap::Strict });
                expect_letter = true;
                i += 1;
            }
            '[' | ']' => return Err(DslError::Bracket(c, pos)),
            _ if c.is_alphanumeric() => {
                if !expect_letter {
                    gaps.push(Gap::Adj);
                }
                let mut letter = c.to_string();
                i += 1;
                while i < body.len() && body[i].1 == '\'' {
                    letter.push('\'');
                    i += 1;
                }
                letters.push(letter);
                expect_letter = false;
            }
            _ => return Err(DslError::UnexpectedChar(c, pos)),
        }
    }
    if expect_letter {
        // Trailing separator: the final segment is empty.
        return Err(DslError::EmptySegment(body.last().map(|&(p, _)| p).unwrap_or(0)));
    }

    let poset = match poset {
        Some(p) => p.clone(),
        None => {
            for l in &letters {
                if l.len() != 1 || !l.chars().next().unwrap().is_ascii_digit() {
                    return Err(DslError::PosetRequired(l.clone()));
                }
            }
            let mut elements: Vec<String> = letters.clone();
            elements.sort();
            elements.dedup();
            Poset::chain(&elements)
        }
    };
    Ok(PopPattern::new(
        poset,
        &letters,
        gaps,
        anchored_left,
        anchored_right,
    )?)
}

/// Canonical notation for a pattern; `parse_pattern(print_pattern(p))` with
/// the same poset reconstructs `p`. Errors if a letter label does not fit
/// the notation (such patterns are JSON-only).
pub fn print_pattern(p: &PopPattern) -> Result<String, DslError> {
    let mut out = String::new();
    if p.anchored_left() {
        out.push('[');
    }
    for (i, l) in p.letters().iter().enumerate() {
        if !printable_label(l) {
            return Err(DslError::UnprintableLabel(l.clone()));
        }
        if i > 0 {
            match p.gaps()[i - 1] {
                Gap::Adj => {}
                Gap::Free => out.push('-'),
                Gap::Strict => out.push('~'),
            }
        }
        out.push_str(l);
    }
    if p.anchored_right() {
        out.push(']');
    }
    Ok(out)
}

fn printable_label(l: &str) -> bool {
    let mut cs = l.chars();
    match cs.next() {
        Some(c) if c.is_alphanumeric() => cs.all(|c| c == '\''),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::Gap;

    fn fig1() -> Poset {
        Poset::build(&["1", "2", "1'"], &[("1", "2")]).unwrap()
    }

    fn fig10() -> Poset {
        Poset::build(
            &["1", "2", "3", "1'", "2'"],
            &[("1", "2"), ("2", "3"), ("1'", "2'")],
        )
        .unwrap()
    }

    fn fig10e() -> Poset {
        Poset::build(&["1", "2", "1'", "1''"], &[("1", "2")]).unwrap()
    }

    #[test]
    fn parses_fig1_example() {
        let p = parse_pattern("1'-12", Some(&fig1())).unwrap();
        assert_eq!(p.letters(), &["1'", "1", "2"]);
        assert_eq!(p.gaps(), &[Gap::Free, Gap::Adj]);
        assert!(!p.anchored_left() && !p.anchored_right());
    }

    #[test]
    fn parses_classical_without_poset() {
        let p = parse_pattern("2-1-3", None).unwrap();
        assert_eq!(p.letters(), &["2", "1", "3"]);
        assert_eq!(p.gaps(), &[Gap::Free, Gap::Free]);
        assert_eq!(p, PopPattern::classical(&[2, 1, 3]).unwrap());
    }

    #[test]
    fn parses_box_notation() {
        let p = parse_pattern("1~23", None).unwrap();
        assert_eq!(p.letters(), &["1", "2", "3"]);
        assert_eq!(p.gaps(), &[Gap::Strict, Gap::Adj]);
    }

    #[test]
    fn parses_anchors() {
        let p = parse_pattern("[2-13", None).unwrap();
        assert!(p.anchored_left() && !p.anchored_right());
        let p = parse_pattern("3-2-1]", None).unwrap();
        assert!(!p.anchored_left() && p.anchored_right());
        assert_eq!(print_pattern(&p).unwrap(), "3-2-1]");
    }

    #[test]
    fn whitespace_ignored() {
        let a = parse_pattern(" 1 1' 2 ", Some(&fig1())).unwrap();
        let b = parse_pattern("11'2", Some(&fig1())).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn notation_corpus_parses() {
        let fig1 = fig1();
        let fig10 = fig10();
        let fig10e = fig10e();
        let peak = PopPattern::peak();
        let valley = PopPattern::valley();
        let cases: Vec<(&str, Option<&Poset>)> = vec![
            ("11'2", Some(&fig1)),
            ("1'21''", Some(peak.poset())),
            ("2'12''", Some(valley.poset())),
            ("1'-12", Some(&fig1)),
            ("2-31", None),
            ("[2-13", None),
            ("3-2-1]", None),
            ("1~23", None),
            ("2-1-3", None),
            ("122'1'", Some(&fig10)),
            ("12'21'", Some(&fig10)),
            ("11'1''2", Some(&fig10e)),
            ("11'21''", Some(&fig10e)),
            ("1'1''12", Some(&fig10e)),
            ("1'121''", Some(&fig10e)),
            ("1231'", Some(&fig10)),
            ("1321'", Some(&fig10)),
            ("2131'", Some(&fig10)),
            ("11'22'", Some(&fig10)),
            ("22'11'", Some(&fig10)),
        ];
        for (s, poset) in cases {
            let p = parse_pattern(s, poset)
                .unwrap_or_else(|e| panic!("`{s}` failed to parse: {e}"));
            // Round trip through the printer.
            let printed = print_pattern(&p).unwrap();
            assert_eq!(printed, s, "canonical form of `{s}`");
            let q = parse_pattern(&printed, poset).unwrap();
            assert_eq!(p, q, "round trip of `{s}`");
        }
    }

    #[test]
    fn print_examples() {
        assert_eq!(print_pattern(&PopPattern::peak()).unwrap(), "1'21''");
        let single = parse_pattern("a", Some(&Poset::antichain(&["a"]))).unwrap();
        assert_eq!(print_pattern(&single).unwrap(), "a");
        // Multi-character labels are JSON-only.
        let flat = PopPattern::flat_spop(1, 1).unwrap();
        assert_eq!(
            print_pattern(&flat).unwrap_err(),
            DslError::UnprintableLabel("a1".into())
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_pattern("", None).unwrap_err(), DslError::Empty);
        assert_eq!(parse_pattern("  ", None).unwrap_err(), DslError::Empty);
        assert_eq!(parse_pattern("[]", None).unwrap_err(), DslError::Empty);
        assert_eq!(
            parse_pattern("1--2", None).unwrap_err(),
            DslError::EmptySegment(2)
        );
        assert_eq!(
            parse_pattern("-12", None).unwrap_err(),
            DslError::EmptySegment(0)
        );
        assert_eq!(
            parse_pattern("12-", None).unwrap_err(),
            DslError::EmptySegment(2)
        );
        assert_eq!(
            parse_pattern("1[2", None).unwrap_err(),
            DslError::Bracket('[', 1)
        );
        assert_eq!(
            parse_pattern("1'2", None).unwrap_err(),
            DslError::PosetRequired("1'".into())
        );
        assert_eq!(
            parse_pattern("ab", None).unwrap_err(),
            DslError::PosetRequired("a".into())
        );
        assert_eq!(
            parse_pattern("1.2", None).unwrap_err(),
            DslError::UnexpectedChar('.', 1)
        );
        // Duplicate letters surface from pattern construction.
        assert!(matches!(
            parse_pattern("11", None),
            Err(DslError::Pattern(PatternError::DuplicateLetter(_)))
        ));
        // Unknown letter for the given poset.
        assert!(matches!(
            parse_pattern("14", Some(&fig1())),
            Err(DslError::Pattern(PatternError::UnknownLetter(_)))
        ));
    }
}
