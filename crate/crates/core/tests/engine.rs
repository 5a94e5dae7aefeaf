mod common;

use common::*;
use necklace_wk::engine::{self, accepting_run, pattern_fit_check};
use necklace_wk::harness::{random_automaton, sources, RandomBounds, ReadShape};
use necklace_wk::word::w;
use necklace_wk::{Error, WKAutomaton, Word};

fn bounds(shape: ReadShape) -> RandomBounds {
    RandomBounds::new(4, 3, 7, alphabet("01")).shape(shape)
}

#[test]
fn agrees_with_brute_force_search() {
    let words: Vec<Word> = alphabet("01").words_up_to(6).collect();
    for seed in 0..120 {
        let shape =
            [ReadShape::General, ReadShape::Simple, ReadShape::OneLimited][seed as usize % 3];
        let m = random_automaton(seed, &bounds(shape));
        for x in &words {
            assert_eq!(
                engine::accepts(&m, x).unwrap(),
                brute_accepts(&m, x),
                "seed {seed} word {x}\n{m}"
            );
        }
    }
}

#[test]
fn weak_and_strong_agree_with_all_rotations() {
    let words: Vec<Word> = alphabet("ab").words_up_to(5).collect();
    for seed in 0..40 {
        let m = random_automaton(seed, &RandomBounds::new(3, 2, 6, alphabet("ab")));
        for x in &words {
            assert_eq!(
                engine::weak_accepts(&m, x).unwrap(),
                brute_weak(&m, x),
                "seed {seed} {x}"
            );
            assert_eq!(
                engine::strong_accepts(&m, x).unwrap(),
                brute_strong(&m, x),
                "seed {seed} {x}"
            );
        }
    }
}

#[test]
fn traces_replay() {
    let mut checked = 0;
    for seed in 0..1000u64 {
        let m = random_automaton(seed, &bounds(ReadShape::General));
        let x = random_word_in(seed, m.alphabet(), 8);
        let run = accepting_run(&m, &x).unwrap();
        assert_eq!(run.is_some(), engine::accepts(&m, &x).unwrap());
        if let Some(run) = run {
            assert!(run.replays(&m), "seed {seed} {x}\n{run}");
            checked += 1;
        }
    }
    assert!(checked > 50, "too few accepting pairs: {checked}");
}

#[test]
fn witnesses_are_rotations() {
    let m = WKAutomaton::parse(sources::ZEROS_ONES).unwrap();
    assert_eq!(
        engine::weak_witness(&m, &w("0110")).unwrap(),
        Some(w("0011"))
    );
    assert_eq!(engine::weak_witness(&m, &w("0101")).unwrap(), None);
    let s = WKAutomaton::parse(sources::SN1_AB).unwrap();
    assert_eq!(
        engine::strong_counterexample(&s, &w("ab")).unwrap(),
        Some(w("ba"))
    );
    assert_eq!(engine::strong_counterexample(&s, &w("aaa")).unwrap(), None);
}

#[test]
fn foreign_symbols_are_errors() {
    let m = WKAutomaton::parse(sources::ZEROS_ONES).unwrap();
    let err = engine::accepts(&m, &w("012")).unwrap_err();
    assert_eq!(err, Error::UndeclaredSymbol('2'));
    assert!(engine::weak_accepts(&m, &w("a")).is_err());
}

#[test]
fn strongly_accepted_words_fit_a_pattern() {
    let words: Vec<Word> = alphabet("01").words_up_to(6).collect();
    for seed in 0..100 {
        let m = random_automaton(seed, &bounds(ReadShape::General));
        for x in words
            .iter()
            .filter(|x| engine::strong_accepts(&m, x).unwrap())
        {
            assert!(pattern_fit_check(&m, x), "seed {seed} {x}");
        }
    }
}

#[test]
fn lambda_steps_after_the_heads_meet() {
    let m: WKAutomaton = "alphabet: a\nstates: p q\ninitial: p\nfinal: q\n\
                          trans: p (a,_) -> p\ntrans: p (_,_) -> q\ntrans: q (_,_) -> p\n"
        .parse()
        .unwrap();
    for n in 0..5 {
        let x: Word = "a".repeat(n).parse().unwrap();
        assert!(engine::accepts(&m, &x).unwrap());
    }
}
