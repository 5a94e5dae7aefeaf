//! Reference implementations used only by the tests. Deliberately naive and
//! independent of the library's engine and necklace code.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use necklace_wk::grammar::{NonterminalId, Production};
use necklace_wk::{Alphabet, LinearGrammar, StateId, Symbol, WKAutomaton, Word};

/// Breadth-first search over `(state, unread middle)` pairs.
pub fn brute_accepts(m: &WKAutomaton, w: &Word) -> bool {
    let start = (m.initial().clone(), w.symbols().to_vec());
    let mut seen: HashSet<(StateId, Vec<Symbol>)> = HashSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some((q, rest)) = queue.pop_front() {
        if rest.is_empty() && m.is_final(&q) {
            return true;
        }
        for t in m.transitions().iter().filter(|t| t.from == q) {
            let (u, v) = (t.left.symbols(), t.right.symbols());
            if u.len() + v.len() > rest.len() || !rest.starts_with(u) || !rest.ends_with(v) {
                continue;
            }
            let next = (t.to.clone(), rest[u.len()..rest.len() - v.len()].to_vec());
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Every rotation, duplicates included.
pub fn all_rotations(w: &Word) -> Vec<Word> {
    let s = w.symbols();
    if s.is_empty() {
        return vec![Word::empty()];
    }
    (0..s.len())
        .map(|k| Word::from([&s[k..], &s[..k]].concat()))
        .collect()
}

pub fn brute_weak(m: &WKAutomaton, w: &Word) -> bool {
    all_rotations(w).iter().any(|c| brute_accepts(m, c))
}

pub fn brute_strong(m: &WKAutomaton, w: &Word) -> bool {
    all_rotations(w).iter().all(|c| brute_accepts(m, c))
}

/// Lexicographically least rotation, by trying them all.
pub fn naive_least_rotation(w: &Word) -> Word {
    all_rotations(w)
        .into_iter()
        .min_by(|a, b| a.symbols().cmp(b.symbols()))
        .unwrap()
}

pub fn naive_closure(words: &BTreeSet<Word>) -> BTreeSet<Word> {
    words.iter().flat_map(all_rotations).collect()
}

pub fn naive_closed_core(words: &BTreeSet<Word>) -> BTreeSet<Word> {
    words
        .iter()
        .filter(|w| all_rotations(w).iter().all(|c| words.contains(c)))
        .cloned()
        .collect()
}

pub fn alphabet(s: &str) -> Alphabet {
    Alphabet::from_chars(s).unwrap()
}

fn random_word(rng: &mut ChaCha8Rng, symbols: &[Symbol], max: usize) -> Word {
    let n = rng.gen_range(0..=max);
    Word::from(
        (0..n)
            .map(|_| symbols[rng.gen_range(0..symbols.len())])
            .collect::<Vec<_>>(),
    )
}

pub fn random_word_in(seed: u64, alphabet: &Alphabet, max: usize) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word(&mut rng, &alphabet.sorted(), max)
}

/// A small random linear grammar over `{a, b}`.
pub fn random_grammar(seed: u64) -> LinearGrammar {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let t = alphabet("ab");
    let symbols = t.sorted();
    let k = rng.gen_range(1..=3);
    let nts: Vec<NonterminalId> = (0..k)
        .map(|i| NonterminalId::new(&format!("N{i}")).unwrap())
        .collect();
    let mut prods = Vec::new();
    for _ in 0..rng.gen_range(1..=5) {
        let head = nts[rng.gen_range(0..k)].clone();
        if rng.gen_bool(0.4) {
            prods.push(Production::terminal(
                head,
                random_word(&mut rng, &symbols, 2),
            ));
        } else {
            let next = nts[rng.gen_range(0..k)].clone();
            let u = random_word(&mut rng, &symbols, 2);
            let v = random_word(&mut rng, &symbols, 2);
            prods.push(Production::linear(head, u, next, v));
        }
    }
    LinearGrammar::new(t, nts.clone(), nts[0].clone(), prods).unwrap()
}
