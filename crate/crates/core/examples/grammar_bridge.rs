//! Linear grammars and automata, in both directions.
//!
//! ```bash
//! cargo run --example grammar_bridge
//! ```

use necklace_wk::bridge::{grammar_to_wk, wk_to_grammar};
use necklace_wk::harness::{enumerate, Mode};
use necklace_wk::necklace::cyclic_closure;
use necklace_wk::LinearGrammar;

const GRAMMAR: &str = "\
terminals: 0 1
nonterminals: S A
start: S
prod: S -> A 1
prod: A -> 0 A 0 | 010
";

fn main() -> necklace_wk::Result<()> {
    let g = LinearGrammar::parse(GRAMMAR)?;
    let m = grammar_to_wk(&g)?;
    println!("-- compiled automaton --\n{}", m.serialize());

    let n = 10;
    let lang = g.words_up_to(n);
    let plain = enumerate(&m, Mode::Plain, n).words;
    println!("L(g) = L(m) up to {n}: {}", lang == plain);
    println!(
        "weak slice = cycl(L(g)): {}",
        enumerate(&m, Mode::Weak, n).words == cyclic_closure(&lang)
    );

    let back = wk_to_grammar(&m)?;
    println!("\n-- and back --\n{}", back.serialize());
    println!(
        "round trip preserves the language: {}",
        back.words_up_to(n) == lang
    );
    Ok(())
}
