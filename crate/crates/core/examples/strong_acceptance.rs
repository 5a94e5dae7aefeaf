//! Strong acceptance: every cut of the necklace must be accepted.
//!
//! Shows failing cuts, the initial-pattern filter, and the largest
//! rotation-closed part of the plain language.
//!
//! ```bash
//! cargo run --example strong_acceptance
//! ```

use necklace_wk::engine::{
    initial_patterns, maximal_necklace_sublanguage, pattern_fit_check, strong_counterexample,
};
use necklace_wk::harness::{compare, enumerate, sources, Mode};
use necklace_wk::word::w;
use necklace_wk::{OracleId, WKAutomaton};

fn main() -> necklace_wk::Result<()> {
    // (a,_) and (_,b) loops on one state: T1 = {a}, T2 = {b}
    let m = WKAutomaton::parse(sources::SN1_AB)?;
    for s in ["aaa", "bb", "ab", "abab"] {
        match strong_counterexample(&m, &w(s))? {
            None => println!("{s}: all cuts accepted"),
            Some(c) => println!("{s}: cut {c} rejected"),
        }
    }

    let pats: Vec<String> = initial_patterns(&m).iter().map(|p| p.to_string()).collect();
    println!("patterns: {}", pats.join(", "));
    println!("ba fits a pattern: {}", pattern_fit_check(&m, &w("ba")));

    let strong = enumerate(&m, Mode::Strong, 6);
    println!(
        "strong slice == maximal necklace sublanguage: {}",
        strong.words == maximal_necklace_sublanguage(&m, 6)
    );
    let v = compare(&m, Mode::Strong, &OracleId::o9("a", "b")?, 10)?;
    println!("strong vs a* + b*: {}", v.equivalent);

    // A non-regular strong language from an all-final 1-limited automaton.
    let fig = WKAutomaton::parse(sources::NONLINEAR_F1)?;
    println!("\nclasses: {}", fig.classify());
    let words: Vec<String> = enumerate(&fig, Mode::Strong, 5)
        .words
        .iter()
        .filter(|x| x.len() == 5)
        .map(|x| x.to_string())
        .collect();
    println!("strong, length 5: {}", words.join(" "));
    println!(
        "matches O10 up to 12: {}",
        compare(&fig, Mode::Strong, &OracleId::O10, 12)?.equivalent
    );
    Ok(())
}
