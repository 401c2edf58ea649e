//! Run the named verification suites from code: every closed form, golden
//! table, identity, and bijection in the crate is cross-checked against an
//! independent computation.
//!
//! Run with: `cargo run --example verification_suites`
//! (the caps here keep it quick; the CLI runs the full ranges)

use poplab::verify::{run_suite, run_suites, suite_names, VerifyOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("available suites: {:?}\n", suite_names());

    // Cap the brute-force ranges so the demo finishes in seconds.
    let opts = VerifyOptions {
        max_n: Some(5),
        slow: false,
    };

    let report = run_suite("table1", &opts)?;
    print!("{report}");
    println!("passed = {}\n", report.passed());

    // Reports carry per-check expected/computed strings and serialize to
    // JSON; timings live outside the serialized form.
    let qreport = run_suite("qidentities", &opts)?;
    for check in &qreport.checks {
        println!("{:>6} ms  {}", check.wall_ms, check.name);
    }
    println!();

    // "all" runs every suite in canonical order.
    let all = run_suites("all", &VerifyOptions { max_n: Some(3), slow: false })?;
    for r in &all {
        println!(
            "{:<22} {} ({} checks)",
            r.suite,
            if r.passed() { "PASS" } else { "FAIL" },
            r.checks.len()
        );
    }
    Ok(())
}
