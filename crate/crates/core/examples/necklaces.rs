//! Conjugate classes, least rotations and cyclic closure.
//!
//! ```bash
//! cargo run --example necklaces
//! ```

use std::collections::BTreeSet;

use necklace_wk::necklace::{
    canonical, conjugates, cyclic_closure, is_cyclically_closed, maximal_closed_subset,
    primitive_period,
};
use necklace_wk::word::w;
use necklace_wk::Word;

fn show(set: &BTreeSet<Word>) -> String {
    set.iter()
        .map(Word::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn main() {
    for s in ["0011", "0101", "abcab", "aaaa"] {
        let x = w(s);
        println!(
            "{s}: period {}, least rotation {}, conjugates {{{}}}",
            primitive_period(x.symbols()),
            canonical(&x).canon(),
            show(&conjugates(&x))
        );
    }

    let slice: BTreeSet<Word> = ["01", "10", "011", "00"].into_iter().map(w).collect();
    println!("X           = {{{}}}", show(&slice));
    println!("closed?       {}", is_cyclically_closed(&slice));
    println!("closure       {{{}}}", show(&cyclic_closure(&slice)));
    println!("maximal core  {{{}}}", show(&maximal_closed_subset(&slice)));
}
