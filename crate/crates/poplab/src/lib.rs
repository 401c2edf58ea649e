//! # poplab
//!
//! A laboratory for **partially ordered patterns** (POPs) in permutations
//! and words: exact pattern matching, exhaustive enumeration, exact
//! generating-function arithmetic, q-analogues, and constructive
//! bijections — everything cross-checked against brute force.
//!
//! A POP is a pattern whose letters form a partial order rather than a
//! total one: an occurrence in a host word picks positions respecting the
//! pattern's adjacency constraints, with values ordered wherever the
//! pattern letters are comparable and unconstrained otherwise. Classical,
//! vincular ("dashed"), and boxed patterns are all special cases.
//!
//! ## Modules
//! - [`poset`]: finite labelled posets with transitive closure, duals,
//!   disjoint unions, and a JSON exchange format.
//! - [`pattern`]: the [`pattern::PopPattern`] matcher — occurrences,
//!   avoidance, quasi-avoidance, and non-overlapping occurrence counts —
//!   plus constructors for the pattern families used throughout.
//! - [`dsl`]: compact text notation for patterns (`"1'2-13"`, `"[12~3]"`).
//! - [`perms`]: exhaustive, deterministic sweeps over permutations and
//!   words; exact distribution tables; classical statistics.
//! - [`series`]: exact truncated power series over Q, Q[y], and q-rings;
//!   ODE and fixpoint solvers; the catalog of closed forms `C1`..`C20`.
//! - [`qstats`]: q-counting by inversions; quasi-avoidance, splitting, and
//!   non-overlap identities checked exhaustively.
//! - [`bijections`]: the cycle-form and hypercube-face bijections with
//!   their verification reports.
//! - [`verify`]: named verification suites cross-checking every closed
//!   form, golden table, identity, and bijection in the crate.
//! - [`data`]: bundled poset files and golden CSV tables.
//!
//! ## Example
//! ```
//! use poplab::dsl::parse_pattern;
//! use poplab::perms::avoider_sequence;
//!
//! // 1-3-2 as a classical (dashed) pattern: Catalan avoidance counts.
//! let p = parse_pattern("1-3-2", None).unwrap();
//! assert_eq!(avoider_sequence(&[p], 6).unwrap(), vec![1, 2, 5, 14, 42, 132]);
//! ```

pub mod bijections;
pub mod cli;
pub mod data;
pub mod dsl;
pub mod pattern;
pub mod perms;
pub mod poset;
pub mod qstats;
pub mod series;
pub mod verify;

pub use dsl::{parse_pattern, print_pattern};
pub use pattern::{Gap, Occurrence, PopPattern};
pub use perms::{DistributionTable, Permutation};
pub use poset::Poset;
pub use series::Series;
pub use verify::{run_suite, run_suites, SuiteReport, VerifyOptions};
