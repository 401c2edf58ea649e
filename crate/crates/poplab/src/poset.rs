//! Finite strict partial orders over labeled elements.
//!
//! Relations are closed transitively at construction; cycles are rejected
//! with a diagnostic naming the input pair that closed the cycle. Labels
//! are arbitrary strings; any implicit "digit order" is a notation-layer
//! convention, not a property of this type.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum PosetError {
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("relation ({a} < {b}) creates a cycle")]
    Cycle { a: String, b: String },
    #[error("label `{0}` appears in both operands of a poset union")]
    UnionCollision(String),
    #[error("invalid poset JSON: {0}")]
    Json(String),
}

/// Outcome of comparing two elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparability {
    Less,
    Greater,
    Incomparable,
}

/// A strict partial order on a finite label set.
#[derive(Clone, Debug)]
pub struct Poset {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    lt: Vec<bool>, // row-major n*n; lt[i*n+j] means labels[i] < labels[j]
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.lt == other.lt
    }
}
impl Eq for Poset {}

/// Serialized form: `{"elements": [...], "relations": [[a, b], ...]}`
/// where each pair means a < b.
#[derive(Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub relations: Vec<(String, String)>,
}

impl Poset {
    /// Build from elements and covering relations (a < b pairs). The
    /// transitive closure is taken; adding a pair that already holds in
    /// the opposite direction (or a loop a < a) is a cycle error.
    pub fn build<S: AsRef<str>, T: AsRef<str>, U: AsRef<str>>(
        elements: &[S],
        relations: &[(T, U)],
    ) -> Result<Poset, PosetError> {
        let mut labels = Vec::with_capacity(elements.len());
        let mut index = BTreeMap::new();
        for e in elements {
            let label = e.as_ref().to_string();
            if index.insert(label.clone(), labels.len()).is_some() {
                return Err(PosetError::DuplicateLabel(label));
            }
            labels.push(label);
        }
        let n = labels.len();
        let mut lt = vec![false; n * n];
        for (a, b) in relations {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
            if ia == ib || lt[ib * n + ia] {
                return Err(PosetError::Cycle {
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
            if lt[ia * n + ib] {
                continue; // already implied
            }
            // incremental closure: everything <= a gets related to everything >= b
            let ups: Vec<usize> = (0..n).filter(|&x| x == ia || lt[x * n + ia]).collect();
            let downs: Vec<usize> = (0..n).filter(|&y| y == ib || lt[ib * n + y]).collect();
            for &x in &ups {
                for &y in &downs {
                    lt[x * n + y] = true;
                }
            }
        }
        Ok(Poset { labels, index, lt })
    }

    /// Total order `labels[0] < labels[1] < ...`.
    pub fn chain<S: AsRef<str>>(labels: &[S]) -> Poset {
        let rels: Vec<(String, String)> = labels
            .windows(2)
            .map(|w| (w[0].as_ref().to_string(), w[1].as_ref().to_string()))
            .collect();
        Poset::build(labels, &rels).expect("a chain is acyclic")
    }

    /// Flat poset on `a, a1..ak` with `a < ai` and the `ai` mutually
    /// incomparable.
    pub fn flat(k: usize) -> Poset {
        let mut elements = vec!["a".to_string()];
        let mut rels = Vec::new();
        for i in 1..=k {
            let ai = format!("a{i}");
            elements.push(ai.clone());
            rels.push(("a".to_string(), ai));
        }
        Poset::build(&elements, &rels).expect("flat posets are acyclic")
    }

    /// No relations at all.
    pub fn antichain<S: AsRef<str>>(labels: &[S]) -> Poset {
        Poset::build(labels, &[] as &[(&str, &str)]).expect("antichains are acyclic")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Strict order test by element index.
    pub fn lt_idx(&self, i: usize, j: usize) -> bool {
        self.lt[i * self.labels.len() + j]
    }

    /// Compare two elements by label.
    pub fn comparable(&self, a: &str, b: &str) -> Result<Comparability, PosetError> {
        let ia = self
            .index_of(a)
            .ok_or_else(|| PosetError::UnknownLabel(a.to_string()))?;
        let ib = self
            .index_of(b)
            .ok_or_else(|| PosetError::UnknownLabel(b.to_string()))?;
        Ok(if self.lt_idx(ia, ib) {
            Comparability::Less
        } else if self.lt_idx(ib, ia) {
            Comparability::Greater
        } else {
            Comparability::Incomparable
        })
    }

    /// Order-reversed copy.
    pub fn dual(&self) -> Poset {
        let n = self.labels.len();
        let mut lt = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                lt[i * n + j] = self.lt[j * n + i];
            }
        }
        Poset {
            labels: self.labels.clone(),
            index: self.index.clone(),
            lt,
        }
    }

    /// Disjoint union; label sets must not overlap.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset, PosetError> {
        for l in &other.labels {
            if self.index.contains_key(l) {
                return Err(PosetError::UnionCollision(l.clone()));
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let n0 = self.labels.len();
        let n = labels.len();
        let mut lt = vec![false; n * n];
        for i in 0..n0 {
            for j in 0..n0 {
                lt[i * n + j] = self.lt[i * n0 + j];
            }
        }
        let n1 = other.labels.len();
        for i in 0..n1 {
            for j in 0..n1 {
                lt[(n0 + i) * n + (n0 + j)] = other.lt[i * n1 + j];
            }
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Ok(Poset { labels, index, lt })
    }

    /// All strict relations as label pairs, in element-index order.
    pub fn relations(&self) -> Vec<(String, String)> {
        let n = self.labels.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt[i * n + j] {
                    out.push((self.labels[i].clone(), self.labels[j].clone()));
                }
            }
        }
        out
    }

    pub fn from_json_str(s: &str) -> Result<Poset, PosetError> {
        let pj: PosetJson =
            serde_json::from_str(s).map_err(|e| PosetError::Json(e.to_string()))?;
        Poset::build(&pj.elements, &pj.relations)
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: self.labels.clone(),
            relations: self.relations(),
        }
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}", self.labels.join(", "))?;
        write!(f, "; ")?;
        let rels: Vec<String> = self
            .relations()
            .iter()
            .map(|(a, b)| format!("{a}<{b}"))
            .collect();
        write!(f, "{}}}", rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_transitive() {
        let p = Poset::build(&["1", "2", "3"], &[("1", "2"), ("2", "3")]).unwrap();
        assert_eq!(p.comparable("1", "3").unwrap(), Comparability::Less);
        assert_eq!(p.comparable("3", "1").unwrap(), Comparability::Greater);
        assert_eq!(p.comparable("1", "1").unwrap(), Comparability::Incomparable);
    }

    #[test]
    fn cycle_names_offending_pair() {
        let err = Poset::build(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")])
            .unwrap_err();
        assert_eq!(
            err,
            PosetError::Cycle {
                a: "c".into(),
                b: "a".into()
            }
        );
        let err = Poset::build(&["a"], &[("a", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::Cycle { .. }));
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert_eq!(
            Poset::build(&["a", "a"], &[] as &[(&str, &str)]).unwrap_err(),
            PosetError::DuplicateLabel("a".into())
        );
        assert_eq!(
            Poset::build(&["a"], &[("a", "b")]).unwrap_err(),
            PosetError::UnknownLabel("b".into())
        );
    }

    #[test]
    fn flat_poset_shape() {
        let p = Poset::flat(2);
        assert_eq!(p.elements(), &["a", "a1", "a2"]);
        assert_eq!(p.comparable("a", "a1").unwrap(), Comparability::Less);
        assert_eq!(p.comparable("a", "a2").unwrap(), Comparability::Less);
        assert_eq!(p.comparable("a1", "a2").unwrap(), Comparability::Incomparable);
    }

    #[test]
    fn dual_swaps_comparisons() {
        let p = Poset::chain(&["x", "y", "z"]);
        let d = p.dual();
        assert_eq!(d.comparable("x", "z").unwrap(), Comparability::Greater);
    }

    #[test]
    fn union_and_collision() {
        let a = Poset::chain(&["1", "2"]);
        let b = Poset::chain(&["3", "4"]);
        let u = a.disjoint_union(&b).unwrap();
        assert_eq!(u.comparable("1", "2").unwrap(), Comparability::Less);
        assert_eq!(u.comparable("3", "4").unwrap(), Comparability::Less);
        assert_eq!(u.comparable("1", "4").unwrap(), Comparability::Incomparable);
        assert!(a.disjoint_union(&a).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let p = Poset::build(
            &["1'", "1", "2"],
            &[("1", "2")],
        )
        .unwrap();
        let s = serde_json::to_string(&p.to_json()).unwrap();
        let q = Poset::from_json_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn comparable_symmetry_exhaustive() {
        let p = Poset::build(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("c", "b"), ("c", "d")],
        )
        .unwrap();
        for x in p.elements() {
            for y in p.elements() {
                let xy = p.comparable(x, y).unwrap();
                let yx = p.comparable(y, x).unwrap();
                let flipped = match xy {
                    Comparability::Less => Comparability::Greater,
                    Comparability::Greater => Comparability::Less,
                    Comparability::Incomparable => Comparability::Incomparable,
                };
                assert_eq!(yx, flipped);
            }
        }
    }
}
