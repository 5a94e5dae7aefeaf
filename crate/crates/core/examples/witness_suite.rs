//! The built-in fixture catalog, checked against its reference languages.
//!
//! ```bash
//! cargo run --release --example witness_suite -- 8
//! ```
//! An optional argument overrides every fixture's length bound.

use std::process::ExitCode;

use necklace_wk::harness::{catalog, run_fixture};

fn main() -> ExitCode {
    let max_len = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("length bound"));
    let mut ok = true;
    for f in catalog() {
        let outcome = run_fixture(&f, max_len);
        ok &= outcome.passed();
        println!("{outcome}");
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
