//! Seeded random automata and a quick self-consistency sweep.
//!
//! ```bash
//! cargo run --release --example random_automata -- 200
//! ```

use necklace_wk::harness::{enumerate, random_automaton, Mode, RandomBounds, ReadShape};
use necklace_wk::necklace::{cyclic_closure, maximal_closed_subset};
use necklace_wk::Alphabet;

fn main() {
    let count: u64 = std::env::args()
        .nth(1)
        .map_or(50, |s| s.parse().expect("count"));
    let bounds = RandomBounds::new(3, 2, 5, Alphabet::from_chars("01").unwrap());
    println!("seed 7:\n{}", random_automaton(7, &bounds).serialize());

    let mut bad = 0;
    for seed in 0..count {
        let shape =
            [ReadShape::General, ReadShape::Simple, ReadShape::OneLimited][seed as usize % 3];
        let m = random_automaton(seed, &bounds.clone().shape(shape));
        let plain = enumerate(&m, Mode::Plain, 7).words;
        let weak_ok = enumerate(&m, Mode::Weak, 7).words == cyclic_closure(&plain);
        let strong_ok = enumerate(&m, Mode::Strong, 7).words == maximal_closed_subset(&plain);
        if !(weak_ok && strong_ok) {
            bad += 1;
            println!("seed {seed}: weak {weak_ok}, strong {strong_ok}");
        }
    }
    println!("{count} automata, {bad} violations");
}
