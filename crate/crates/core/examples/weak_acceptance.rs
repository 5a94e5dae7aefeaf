//! Weak acceptance: a necklace is accepted when one of its cuts is.
//!
//! The one-state automaton below reads 0s with the left head and 1s with the
//! right head, so its linear language is `0*1*`. Under weak acceptance it
//! recognizes every word that is a rotation of some `0^n 1^m`.
//!
//! ```bash
//! cargo run --example weak_acceptance
//! ```

use necklace_wk::harness::{compare, enumerate, Mode};
use necklace_wk::necklace::cyclic_closure;
use necklace_wk::word::w;
use necklace_wk::{engine, OracleId, WKAutomaton};

const N1: &str = "\
alphabet: 0 1
states: q
initial: q
final: q
trans: q (0,_) -> q
trans: q (_,1) -> q
";

fn main() -> necklace_wk::Result<()> {
    let m = WKAutomaton::parse(N1)?;
    println!("classes: {}", m.classify());

    for s in ["0011", "0110", "1001", "0101"] {
        let x = w(s);
        match engine::weak_witness(&m, &x)? {
            Some(c) => println!("{s}: weakly accepted via cut {c}"),
            None => println!("{s}: no accepting cut"),
        }
    }

    if let Some(run) = engine::accepting_run(&m, &w("0011"))? {
        println!("\n{run}\n");
    }

    // weak slice = closure of the plain slice, length by length
    let plain = enumerate(&m, Mode::Plain, 6);
    let weak = enumerate(&m, Mode::Weak, 6);
    println!(
        "plain {} words, weak {} words, closure matches: {}",
        plain.words.len(),
        weak.words.len(),
        cyclic_closure(&plain.words) == weak.words
    );

    let v = compare(&m, Mode::Weak, &OracleId::O1, 12)?;
    println!(
        "weak vs O1 up to 12: {}",
        if v.equivalent {
            "equivalent"
        } else {
            "different"
        }
    );
    Ok(())
}
