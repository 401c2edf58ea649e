//! Command-line interface.
//!
//! Subcommands: `count` (avoidance sequences), `distribution` (occurrence
//! statistics), `series` (the closed-form catalog), `verify` (named check
//! suites), and `bijection` (the constructive maps). Outputs on stdout are
//! byte-deterministic; timings go to stderr. Exit codes: 0 success, 1 a
//! verification or bijection check failed, 2 usage error.

use crate::bijections::{self, CycleForm, HypercubeFace};
use crate::data;
use crate::dsl::parse_pattern;
use crate::pattern::{PatternJson, PopPattern, PosetRef};
use crate::perms::{self, table::bfile_lines, Permutation};
use crate::poset::Poset;
use crate::series::catalog::{self, FormOutput};
use crate::series::ring::{poly_string, rat_string};
use crate::series::SeriesError;
use crate::verify::{self, VerifyError, VerifyOptions};
use clap::{Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// A laboratory for partially ordered patterns in permutations and words.
#[derive(Parser)]
#[command(name = "poplab", version, about, max_term_width = 100)]
pub struct Cli {
    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count permutations of each length 1..=n avoiding the given pattern(s).
    Count {
        /// Pattern notation (e.g. "2-1-3", "11'2"), or @file with pattern JSON.
        #[arg(long)]
        pattern: String,
        /// Poset on the pattern letters: @file with poset JSON, or a bundled
        /// poset name (see `data`). Without it, only unprimed-digit patterns
        /// parse (as classical chains).
        #[arg(long)]
        poset: Option<String>,
        /// Largest length to enumerate.
        #[arg(long)]
        n: usize,
        /// Additional patterns that must also be avoided (same syntax;
        /// parsed against the same poset when --poset is given).
        #[arg(long)]
        restrict: Vec<String>,
        #[arg(long, value_enum, default_value_t = SeqFormat::Bfile)]
        format: SeqFormat,
    },
    /// Tabulate a pattern statistic over all permutations of length n.
    Distribution {
        /// Pattern notation or @file with pattern JSON.
        #[arg(long)]
        pattern: String,
        /// Poset on the pattern letters (@file or bundled name).
        #[arg(long)]
        poset: Option<String>,
        /// Length of the permutations.
        #[arg(long)]
        n: usize,
        /// Restrict the host permutations to avoiders of these patterns.
        #[arg(long)]
        restrict: Vec<String>,
        /// Statistic: total occurrences or maximum non-overlapping occurrences.
        #[arg(long, value_enum, default_value_t = StatKind::Occurrences)]
        stat: StatKind,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Print a closed form from the series catalog (C1..C20).
    Series {
        /// Form id, e.g. C1, c8.
        #[arg(long)]
        form: String,
        /// Comma-separated integer parameters, e.g. "k=1,l=2".
        #[arg(long)]
        params: Option<String>,
        /// Truncation order (series computed through x^order).
        #[arg(long)]
        order: usize,
        /// Print integer counts (n! times EGF coefficients where applicable)
        /// instead of raw coefficients.
        #[arg(long)]
        as_counts: bool,
    },
    /// Run a named verification suite (or "all").
    Verify {
        /// One of: table1, flatposet, series-closedforms, qidentities,
        /// bijections, counimodal, openproblems, all.
        #[arg(long)]
        suite: String,
        /// Cap the brute-force enumeration lengths (0 makes every
        /// enumeration check vacuous).
        #[arg(long)]
        max_n: Option<usize>,
        /// Include the slow top-of-range confirmations.
        #[arg(long)]
        slow: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Apply a constructive bijection to one input.
    Bijection {
        #[command(subcommand)]
        map: BijectionCmd,
    },
}

#[derive(Subcommand)]
enum BijectionCmd {
    /// Cycle form -> avoider of a-a1..ak (or an avoider back to cycle form).
    Cycles {
        /// Either a cycle form like "(1 2)(3 4)" or a one-line permutation.
        #[arg(long)]
        input: String,
        /// Bound on the cycle lengths / dashed pattern size.
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Hypercube face word over {0,1,x,y} -> good permutation (or back).
    Faces {
        /// Either a face word like "110x0y01" or a one-line permutation.
        #[arg(long)]
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqFormat {
    Bfile,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatKind {
    Occurrences,
    Nonoverlap,
}

/// Usage problems exit 2; failed checks and undefined map inputs exit 1.
enum CliError {
    Usage(String),
    Check(String),
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn check(e: impl std::fmt::Display) -> CliError {
    CliError::Check(e.to_string())
}

/// Parse the process arguments and run; returns the process exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        perms::set_jobs(jobs);
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Check(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Count {
            pattern,
            poset,
            n,
            restrict,
            format,
        } => cmd_count(&pattern, poset.as_deref(), n, &restrict, format),
        Command::Distribution {
            pattern,
            poset,
            n,
            restrict,
            stat,
            format,
        } => cmd_distribution(&pattern, poset.as_deref(), n, &restrict, stat, format),
        Command::Series {
            form,
            params,
            order,
            as_counts,
        } => cmd_series(&form, params.as_deref(), order, as_counts),
        Command::Verify {
            suite,
            max_n,
            slow,
            format,
        } => cmd_verify(&suite, VerifyOptions { max_n, slow }, format),
        Command::Bijection { map } => cmd_bijection(map),
    }
}

// ---------------------------------------------------------------------------
// input resolution
// ---------------------------------------------------------------------------

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))
}

/// Resolve a poset argument: `@` prefix optional; a filesystem path wins,
/// otherwise the bundled poset of that name.
fn load_poset(arg: &str) -> Result<Poset, CliError> {
    let name = arg.strip_prefix('@').unwrap_or(arg);
    if Path::new(name).is_file() {
        return Poset::from_json_str(&read_file(name)?).map_err(usage);
    }
    if let Some(bundled) = data::bundled_poset(name) {
        return bundled.map_err(usage);
    }
    Err(CliError::Usage(format!(
        "poset `{name}` is neither a readable file nor a bundled poset (bundled: {})",
        data::bundled_poset_names().join(", ")
    )))
}

/// Resolve a poset reference found inside a pattern JSON file: relative
/// paths are tried against the pattern file's directory first.
fn resolve_poset_ref(reference: &str, base: Option<&Path>) -> Result<Poset, CliError> {
    let name = reference.strip_prefix('@').unwrap_or(reference);
    if let Some(dir) = base {
        let joined = dir.join(name);
        if joined.is_file() {
            let text = std::fs::read_to_string(&joined)
                .map_err(|e| CliError::Usage(format!("cannot read `{}`: {e}", joined.display())))?;
            return Poset::from_json_str(&text).map_err(usage);
        }
    }
    load_poset(name)
}

/// Resolve a pattern argument: literal notation, or `@file` holding either
/// pattern JSON or pattern notation.
fn load_pattern(arg: &str, poset: Option<&Poset>) -> Result<PopPattern, CliError> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = read_file(path)?;
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let mut pj: PatternJson = serde_json::from_str(trimmed)
                .map_err(|e| CliError::Usage(format!("bad pattern JSON in `{path}`: {e}")))?;
            if let PosetRef::File(reference) = &pj.poset {
                let resolved = resolve_poset_ref(reference, Path::new(path).parent())?;
                pj.poset = PosetRef::Inline(resolved.to_json());
            }
            PopPattern::from_json(&pj).map_err(usage)
        } else {
            parse_pattern(trimmed, poset).map_err(usage)
        }
    } else {
        parse_pattern(arg, poset).map_err(usage)
    }
}

fn load_patterns(
    main: &str,
    restrict: &[String],
    poset: Option<&Poset>,
) -> Result<(PopPattern, Vec<PopPattern>), CliError> {
    let p = load_pattern(main, poset)?;
    let rest = restrict
        .iter()
        .map(|r| load_pattern(r, poset))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((p, rest))
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

fn cmd_count(
    pattern: &str,
    poset: Option<&str>,
    n: usize,
    restrict: &[String],
    format: SeqFormat,
) -> Result<i32, CliError> {
    let poset = poset.map(load_poset).transpose()?;
    let (main, rest) = load_patterns(pattern, restrict, poset.as_ref())?;
    let mut all = vec![main];
    all.extend(rest);
    let counts = perms::avoider_sequence(&all, n).map_err(usage)?;
    match format {
        SeqFormat::Bfile => print!("{}", bfile_lines(1, &counts)),
        SeqFormat::Csv => {
            let mut out = String::from("n,count\n");
            for (i, c) in counts.iter().enumerate() {
                let _ = writeln!(out, "{},{c}", i + 1);
            }
            print!("{out}");
        }
        SeqFormat::Json => {
            let doc = serde_json::json!({
                "pattern": pattern,
                "restrict": restrict,
                "n": n,
                "counts": counts,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
        }
    }
    Ok(0)
}

fn cmd_distribution(
    pattern: &str,
    poset: Option<&str>,
    n: usize,
    restrict: &[String],
    stat: StatKind,
    format: TableFormat,
) -> Result<i32, CliError> {
    let poset = poset.map(load_poset).transpose()?;
    let (main, rest) = load_patterns(pattern, restrict, poset.as_ref())?;
    let table = match stat {
        StatKind::Occurrences => perms::distribution(&main, n, &rest).map_err(usage)?,
        StatKind::Nonoverlap => {
            if !rest.is_empty() {
                return Err(CliError::Usage(
                    "--restrict is not supported with --stat nonoverlap".into(),
                ));
            }
            perms::nonoverlap_distribution(&main, n).map_err(usage)?
        }
    };
    match format {
        TableFormat::Csv => print!("{}", table.to_csv()),
        TableFormat::Json => println!("{}", table.to_json()),
    }
    Ok(0)
}

fn parse_params(s: Option<&str>) -> Result<BTreeMap<String, i64>, CliError> {
    let mut out = BTreeMap::new();
    let Some(s) = s else { return Ok(out) };
    for piece in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let Some((key, value)) = piece.split_once('=') else {
            return Err(CliError::Usage(format!(
                "bad parameter `{piece}` (expected key=value)"
            )));
        };
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("bad value in `{piece}`: {e}")))?;
        out.insert(key.trim().to_string(), value);
    }
    Ok(out)
}

fn series_err(e: SeriesError) -> CliError {
    match e {
        SeriesError::UnknownForm(_) | SeriesError::BadFormParams(..) => usage(e),
        other => check(other),
    }
}

/// How the coefficients of a form translate into integer counts.
enum CountsKind {
    Egf,
    Ogf,
}

fn counts_kind(form: &str) -> CountsKind {
    match form.to_ascii_uppercase().as_str() {
        "C6" | "C7" | "C8" | "C10" | "C17" | "C19" => CountsKind::Ogf,
        _ => CountsKind::Egf,
    }
}

fn cmd_series(
    form: &str,
    params: Option<&str>,
    order: usize,
    as_counts: bool,
) -> Result<i32, CliError> {
    let params = parse_params(params)?;
    let output = catalog::build_form(form, &params, order).map_err(series_err)?;
    match (output, as_counts) {
        (FormOutput::Univariate(s), false) => {
            for m in 0..=s.order() {
                println!("{m} {}", rat_string(&s.coeff(m)));
            }
        }
        (FormOutput::Bivariate(f), false) => {
            for m in 0..=f.order() {
                println!("{m} {}", poly_string(&f.coeff(m), "y"));
            }
        }
        (FormOutput::Univariate(s), true) => {
            let counts = match counts_kind(form) {
                CountsKind::Egf => catalog::egf_counts(&s),
                CountsKind::Ogf => catalog::gf_counts(&s),
            }
            .map_err(series_err)?;
            print!("{}", bfile_lines(0, &counts));
        }
        (FormOutput::Bivariate(f), true) => {
            let rows = match counts_kind(form) {
                CountsKind::Egf => catalog::bgf_table_egf(&f),
                CountsKind::Ogf => catalog::bgf_table_gf(&f),
            }
            .map_err(series_err)?;
            for (m, row) in rows.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                println!("{m} {}", cells.join(" "));
            }
        }
    }
    Ok(0)
}

fn cmd_verify(suite: &str, opts: VerifyOptions, format: ReportFormat) -> Result<i32, CliError> {
    let reports = verify::run_suites(suite, &opts).map_err(|e| match e {
        VerifyError::UnknownSuite(_) => usage(e),
        other => check(other),
    })?;
    for report in &reports {
        for c in &report.checks {
            eprintln!("{:>8} ms  {}::{}", c.wall_ms, report.suite, c.name);
        }
    }
    match format {
        ReportFormat::Text => {
            for report in &reports {
                print!("{report}");
            }
        }
        ReportFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("report serialization cannot fail")
            );
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) { 0 } else { 1 })
}

fn cmd_bijection(map: BijectionCmd) -> Result<i32, CliError> {
    match map {
        BijectionCmd::Cycles { input, k } => {
            let input = input.trim();
            if input.starts_with('(') {
                let cycles: CycleForm = input.parse().map_err(usage)?;
                let image =
                    bijections::cycles_to_avoider(&cycles.to_permutation(), k).map_err(check)?;
                println!("{image}");
            } else {
                let p: Permutation = input.parse().map_err(usage)?;
                let preimage = bijections::avoider_to_cycles(&p, k).map_err(check)?;
                println!("{}", CycleForm::from_permutation(&preimage));
            }
        }
        BijectionCmd::Faces { input } => {
            let input = input.trim();
            if input.contains('x') || input.contains('y') {
                let face: HypercubeFace = input.parse().map_err(usage)?;
                println!("{}", bijections::face_to_good_perm(&face));
            } else {
                let p: Permutation = input.parse().map_err(usage)?;
                match bijections::good_perm_to_face(&p) {
                    Some(face) => println!("{face}"),
                    None => {
                        return Err(CliError::Check(format!(
                            "{p} is not a good permutation (it must avoid 2-1-3 and contain \
                             exactly one consecutive 312)"
                        )))
                    }
                }
            }
        }
    }
    Ok(0)
}
