//! Bounded-length enumeration, oracle comparison and the witness suite.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automaton::{RestrictionFlags, StateId, Transition, WKAutomaton};
use crate::bridge::grammar_to_wk;
use crate::engine::accepts_symbols;
use crate::error::{Error, Result};
use crate::grammar::LinearGrammar;
use crate::necklace::rotations;
use crate::oracles::{oracle, OracleId};
use crate::word::{Alphabet, Symbol, Word};

/// Counterexamples reported per comparison.
pub const COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Plain,
    Weak,
    Strong,
}

impl Mode {
    /// Membership of `w` under this mode; `w` must be over `m`'s alphabet.
    pub fn member(self, m: &WKAutomaton, w: &Word) -> bool {
        match self {
            Mode::Plain => accepts_symbols(m, w.symbols()),
            Mode::Weak => rotations(w).any(|c| accepts_symbols(m, c.symbols())),
            Mode::Strong => rotations(w).all(|c| accepts_symbols(m, c.symbols())),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Plain => "plain",
            Mode::Weak => "weak",
            Mode::Strong => "strong",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Mode::Plain),
            "weak" => Ok(Mode::Weak),
            "strong" => Ok(Mode::Strong),
            _ => Err(Error::Syntax(format!(
                "unknown mode `{s}` (plain|weak|strong)"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationReport {
    pub automaton: String,
    pub mode: Mode,
    pub max_len: usize,
    /// Length-lexicographic.
    pub words: BTreeSet<Word>,
    pub elapsed: Duration,
}

impl EnumerationReport {
    pub fn named(mut self, name: &str) -> Self {
        self.automaton = name.to_string();
        self
    }

    /// Words of exactly length `n`.
    pub fn slice(&self, n: usize) -> BTreeSet<Word> {
        self.words
            .iter()
            .filter(|w| w.len() == n)
            .cloned()
            .collect()
    }
}

/// Every word of `Σ^{≤max_len}` accepted by `m` under `mode`.
pub fn enumerate(m: &WKAutomaton, mode: Mode, max_len: usize) -> EnumerationReport {
    let start = Instant::now();
    let all: Vec<Word> = m.alphabet().words_up_to(max_len).collect();
    let words: BTreeSet<Word> = all
        .into_par_iter()
        .filter(|w| mode.member(m, w))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    EnumerationReport {
        automaton: String::new(),
        mode,
        max_len,
        words,
        elapsed: start.elapsed(),
    }
}

/// Oracle members of `Σ^{≤max_len}` for the given alphabet.
pub fn oracle_slice(id: &OracleId, alphabet: &Alphabet, max_len: usize) -> Result<BTreeSet<Word>> {
    let mut out = BTreeSet::new();
    for w in alphabet.words_up_to(max_len) {
        if oracle(id, &w)? {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Outcome of an automaton-vs-oracle comparison on a bounded slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub equivalent: bool,
    /// Accepted by the automaton, rejected by the oracle (capped).
    pub extra: Vec<Word>,
    /// In the oracle, not accepted by the automaton (capped).
    pub missing: Vec<Word>,
}

impl Verdict {
    fn from_sets(got: &BTreeSet<Word>, want: &BTreeSet<Word>) -> Self {
        let mut extra = Vec::new();
        let mut missing = Vec::new();
        let mut diff = got
            .symmetric_difference(want)
            .take(COUNTEREXAMPLE_CAP)
            .peekable();
        let equivalent = diff.peek().is_none();
        for w in diff {
            if got.contains(w) {
                extra.push(w.clone());
            } else {
                missing.push(w.clone());
            }
        }
        Verdict {
            equivalent,
            extra,
            missing,
        }
    }

    /// `extra:<w>` / `missing:<w>` tokens, in length-lexicographic order.
    pub fn counterexamples(&self) -> Vec<String> {
        let mut all: Vec<(&Word, &str)> = self
            .extra
            .iter()
            .map(|w| (w, "extra"))
            .chain(self.missing.iter().map(|w| (w, "missing")))
            .collect();
        all.sort();
        all.into_iter().map(|(w, d)| format!("{d}:{w}")).collect()
    }
}

/// What a fixture's enumeration is checked against.
#[derive(Debug, Clone)]
pub enum Reference {
    Oracle(OracleId),
    /// A small explicitly described language outside the oracle catalog.
    Language {
        name: &'static str,
        alphabet: &'static str,
        member: fn(&Word) -> bool,
    },
}

impl Reference {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            Reference::Oracle(id) => id.alphabet(),
            Reference::Language { alphabet, .. } => {
                Alphabet::from_chars(alphabet).expect("static alphabet")
            }
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        match self {
            Reference::Oracle(id) => oracle(id, w),
            Reference::Language { member, .. } => Ok(member(w)),
        }
    }
}

impl fmt::Display for Reference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reference::Oracle(id) => write!(f, "{id}"),
            Reference::Language { name, .. } => f.write_str(name),
        }
    }
}

impl From<OracleId> for Reference {
    fn from(id: OracleId) -> Self {
        Reference::Oracle(id)
    }
}

/// Compares the `mode` slice of `m` with oracle `id` on `Σ^{≤max_len}`,
/// `Σ` being the automaton's alphabet.
pub fn compare(m: &WKAutomaton, mode: Mode, id: &OracleId, max_len: usize) -> Result<Verdict> {
    compare_with(m, mode, &Reference::Oracle(id.clone()), max_len)
}

pub fn compare_with(
    m: &WKAutomaton,
    mode: Mode,
    reference: &Reference,
    max_len: usize,
) -> Result<Verdict> {
    let ref_alphabet = reference.alphabet();
    if let Some(s) = m
        .alphabet()
        .declared()
        .iter()
        .find(|s| !ref_alphabet.contains(**s))
    {
        return Err(Error::OracleAlphabet {
            oracle: reference.to_string(),
            symbol: s.as_char(),
        });
    }
    let got = enumerate(m, mode, max_len).words;
    let mut want = BTreeSet::new();
    for w in m.alphabet().words_up_to(max_len) {
        if reference.contains(&w)? {
            want.insert(w);
        }
    }
    Ok(Verdict::from_sets(&got, &want))
}

/// Where a fixture's automaton comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Automaton(&'static str),
    Grammar(&'static str),
}

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub automaton: WKAutomaton,
    pub mode: Mode,
    pub reference: Reference,
    pub max_len: usize,
    pub expected_flags: RestrictionFlags,
}

impl Fixture {
    pub fn new(
        name: &str,
        source: Source,
        mode: Mode,
        reference: impl Into<Reference>,
        flags: &str,
    ) -> Result<Self> {
        let automaton = match source {
            Source::Automaton(text) => WKAutomaton::parse(text)?,
            Source::Grammar(text) => grammar_to_wk(&LinearGrammar::parse(text)?)?,
        };
        let max_len = default_max_len(automaton.alphabet());
        Ok(Fixture {
            name: name.to_string(),
            automaton,
            mode,
            reference: reference.into(),
            max_len,
            expected_flags: RestrictionFlags::parse(flags)?,
        })
    }
}

/// 12 for alphabets of at most two letters, 10 otherwise.
pub fn default_max_len(alphabet: &Alphabet) -> usize {
    if alphabet.len() <= 2 {
        12
    } else {
        10
    }
}

pub mod sources {
    //! The fixture automata and grammars, as shipped text files.
    pub const ZEROS_ONES: &str = include_str!("../fixtures/zeros_ones.wk");
    pub const BALANCED_F1: &str = include_str!("../fixtures/balanced_f1.wk");
    pub const EVEN_NS: &str = include_str!("../fixtures/even_ns.wk");
    pub const RATIO_N: &str = include_str!("../fixtures/ratio_n.wk");
    pub const PAIRS_FS: &str = include_str!("../fixtures/pairs_fs.wk");
    pub const WN_WF: &str = include_str!("../fixtures/wn_wf.wk");
    pub const MIRROR_N: &str = include_str!("../fixtures/mirror_n.wk");
    pub const TWIN: &str = include_str!("../fixtures/twin.lg");
    pub const TWIN_LITERAL: &str = include_str!("../fixtures/twin_literal.lg");
    pub const SN1_AB: &str = include_str!("../fixtures/sn1_ab.wk");
    pub const SN1_ABC: &str = include_str!("../fixtures/sn1_abc.wk");
    pub const SNS_AA: &str = include_str!("../fixtures/sns_aa.wk");
    pub const NONLINEAR_F1: &str = include_str!("../fixtures/nonlinear_f1.wk");
    pub const SF1_FINITE: &str = include_str!("../fixtures/sf1_finite.wk");
    pub const SFS_FINITE: &str = include_str!("../fixtures/sfs_finite.wk");
    pub const EMPTY: &str = include_str!("../fixtures/empty.wk");
}

fn even_a(w: &Word) -> bool {
    w.len().is_multiple_of(2)
}

fn at_most_one_letter(w: &Word) -> bool {
    w.len() <= 1
}

fn aa_ab_ba(w: &Word) -> bool {
    matches!(w.to_string().as_str(), "_" | "aa" | "ab" | "ba")
}

/// The witness catalog: one fixture per hierarchy witness.
pub fn catalog() -> Vec<Fixture> {
    use sources::*;
    use Mode::*;
    use OracleId::*;
    use Source::{Automaton as A, Grammar as G};
    let o9 = |a, b| Reference::Oracle(OracleId::o9(a, b).expect("static letter sets"));
    let lang = |name, alphabet, member| Reference::Language {
        name,
        alphabet,
        member,
    };
    [
        ("zeros-ones-n1", A(ZEROS_ONES), Weak, O1.into(), "N F S 1"),
        ("balanced-f1", A(BALANCED_F1), Weak, O2.into(), "F S 1"),
        ("even-ns", A(EVEN_NS), Weak, O3.into(), "N F S"),
        ("ratio-n", A(RATIO_N), Weak, O4.into(), "N F"),
        ("pairs-fs", A(PAIRS_FS), Weak, O5.into(), "N F S"),
        ("wn-wf-f1", A(WN_WF), Weak, O6.into(), "F S 1"),
        ("mirror-n", A(MIRROR_N), Weak, O7.into(), "N F"),
        ("twin-grammar", G(TWIN), Weak, O8.into(), "-"),
        ("sn1-ab", A(SN1_AB), Strong, o9("a", "b"), "N F S 1"),
        ("sn1-abc", A(SN1_ABC), Strong, o9("ac", "bc"), "N F S 1"),
        (
            "sns-aa",
            A(SNS_AA),
            Strong,
            lang("(aa)*", "a", even_a as fn(&Word) -> bool),
            "N F S",
        ),
        (
            "sf1-finite",
            A(SF1_FINITE),
            Strong,
            lang("{_,a,b}", "ab", at_most_one_letter),
            "F S 1",
        ),
        (
            "sfs-finite",
            A(SFS_FINITE),
            Strong,
            lang("{_,aa,ab,ba}", "ab", aa_ab_ba),
            "F S",
        ),
        ("nonlinear-f1", A(NONLINEAR_F1), Strong, O10.into(), "F S 1"),
    ]
    .into_iter()
    .map(|(name, src, mode, reference, flags)| {
        Fixture::new(name, src, mode, reference, flags).expect("shipped fixture is valid")
    })
    .collect()
}

#[derive(Debug, Clone)]
pub struct FixtureOutcome {
    pub name: String,
    pub mode: Mode,
    pub reference: String,
    pub max_len: usize,
    pub flags: RestrictionFlags,
    pub flags_ok: bool,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.flags_ok && self.verdict.equivalent
    }
}

impl fmt::Display for FixtureOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.mode,
            self.reference,
            self.max_len
        )?;
        if !self.flags_ok {
            write!(f, " flags:{}", self.flags.to_string().replace(' ', ""))?;
        }
        for c in self.verdict.counterexamples() {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

pub fn run_fixture(fixture: &Fixture, max_len: Option<usize>) -> FixtureOutcome {
    let start = Instant::now();
    let max_len = max_len.unwrap_or(fixture.max_len);
    let flags = fixture.automaton.classify();
    let verdict = compare_with(
        &fixture.automaton,
        fixture.mode,
        &fixture.reference,
        max_len,
    )
    .expect("fixture alphabets are within their reference alphabets");
    FixtureOutcome {
        name: fixture.name.clone(),
        mode: fixture.mode,
        reference: fixture.reference.to_string(),
        max_len,
        flags,
        flags_ok: flags == fixture.expected_flags,
        verdict,
        elapsed: start.elapsed(),
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub outcomes: Vec<FixtureOutcome>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(FixtureOutcome::passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            writeln!(f, "{o}")?;
        }
        Ok(())
    }
}

/// Runs fixtures in order; `max_len` overrides every fixture's bound.
pub fn run_suite(fixtures: &[Fixture], max_len: Option<usize>) -> SuiteReport {
    let start = Instant::now();
    let outcomes = fixtures.iter().map(|f| run_fixture(f, max_len)).collect();
    SuiteReport {
        outcomes,
        elapsed: start.elapsed(),
    }
}

pub fn run_witness_suite(max_len: Option<usize>) -> SuiteReport {
    run_suite(&catalog(), max_len)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadShape {
    /// Any split of the letters between the two heads.
    General,
    /// One head per step.
    Simple,
    /// Exactly one letter per step.
    OneLimited,
}

#[derive(Debug, Clone)]
pub struct RandomBounds {
    pub max_states: usize,
    /// Bound on `|left| + |right|` per transition.
    pub max_read: usize,
    pub max_transitions: usize,
    pub alphabet: Alphabet,
    pub shape: ReadShape,
    pub all_final: bool,
}

impl RandomBounds {
    pub fn new(
        max_states: usize,
        max_read: usize,
        max_transitions: usize,
        alphabet: Alphabet,
    ) -> Self {
        RandomBounds {
            max_states,
            max_read,
            max_transitions,
            alphabet,
            shape: ReadShape::General,
            all_final: false,
        }
    }

    pub fn shape(mut self, shape: ReadShape) -> Self {
        self.shape = shape;
        self
    }

    pub fn all_final(mut self, yes: bool) -> Self {
        self.all_final = yes;
        self
    }
}

fn random_word(rng: &mut ChaCha8Rng, symbols: &[Symbol], len: usize) -> Word {
    Word::from(
        (0..len)
            .map(|_| symbols[rng.gen_range(0..symbols.len())])
            .collect::<Vec<_>>(),
    )
}

/// A valid automaton within `bounds`, fully determined by `seed`. The set of
/// final states is never empty.
pub fn random_automaton(seed: u64, bounds: &RandomBounds) -> WKAutomaton {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let symbols = bounds.alphabet.sorted();
    let n = rng.gen_range(1..=bounds.max_states.max(1));
    let states: Vec<StateId> = (0..n)
        .map(|i| StateId::new(&format!("q{i}")).unwrap())
        .collect();
    let mut finals: Vec<StateId> = if bounds.all_final {
        states.clone()
    } else {
        states
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect()
    };
    if finals.is_empty() {
        finals.push(states[rng.gen_range(0..n)].clone());
    }

    let count = rng.gen_range(0..=bounds.max_transitions);
    let mut transitions = Vec::with_capacity(count);
    for _ in 0..count {
        let from = states[rng.gen_range(0..n)].clone();
        let to = states[rng.gen_range(0..n)].clone();
        let total = match bounds.shape {
            ReadShape::OneLimited => 1,
            _ => rng.gen_range(0..=bounds.max_read),
        };
        if symbols.is_empty() && total > 0 || total > bounds.max_read {
            continue;
        }
        let left_len = match bounds.shape {
            ReadShape::General => rng.gen_range(0..=total),
            _ if rng.gen_bool(0.5) => total,
            _ => 0,
        };
        let left = random_word(&mut rng, &symbols, left_len);
        let right = random_word(&mut rng, &symbols, total - left_len);
        let t = Transition::new(from, left, right, to);
        if !transitions.contains(&t) {
            transitions.push(t);
        }
    }
    WKAutomaton::new(
        bounds.alphabet.clone(),
        states,
        StateId::new("q0").unwrap(),
        finals,
        transitions,
    )
    .expect("generated automaton is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn pairs_weak_slice() {
        let m = WKAutomaton::parse(sources::PAIRS_FS).unwrap();
        let r = enumerate(&m, Mode::Weak, 5);
        let got: Vec<String> = r.words.iter().map(|x| x.to_string()).collect();
        assert_eq!(got, ["_", "11", "1111"]);
    }

    #[test]
    fn zero_length_enumeration() {
        let m = WKAutomaton::parse(sources::ZEROS_ONES).unwrap();
        for mode in [Mode::Plain, Mode::Weak, Mode::Strong] {
            assert_eq!(
                enumerate(&m, mode, 0).words,
                BTreeSet::from([Word::empty()])
            );
        }
        let none = WKAutomaton::parse("alphabet: 0\nstates: q\ninitial: q\nfinal:\n").unwrap();
        assert!(enumerate(&none, Mode::Weak, 0).words.is_empty());
    }

    #[test]
    fn zeros_ones_strong_is_not_o1() {
        let m = WKAutomaton::parse(sources::ZEROS_ONES).unwrap();
        assert!(
            compare(&m, Mode::Weak, &OracleId::O1, 12)
                .unwrap()
                .equivalent
        );
        let v = compare(&m, Mode::Strong, &OracleId::O1, 12).unwrap();
        assert!(!v.equivalent);
        assert!(v.extra.is_empty());
        assert!(v.missing.contains(&w("01")));
        assert!(v.missing.contains(&w("010")));
        assert_eq!(v.missing.len(), COUNTEREXAMPLE_CAP);
    }

    #[test]
    fn incompatible_alphabet() {
        let m = WKAutomaton::parse(sources::SN1_AB).unwrap();
        assert!(compare(&m, Mode::Weak, &OracleId::O1, 3).is_err());
    }

    #[test]
    fn catalog_flags_match() {
        for f in catalog() {
            assert_eq!(f.automaton.classify(), f.expected_flags, "{}", f.name);
        }
    }

    #[test]
    fn random_is_deterministic_and_bounded() {
        let b = RandomBounds::new(3, 2, 6, Alphabet::from_chars("01").unwrap());
        for seed in 0..1000 {
            let m = random_automaton(seed, &b);
            assert_eq!(m, random_automaton(seed, &b));
            assert!(m.states().len() <= 3 && m.transitions().len() <= 6);
            assert!(m.transitions().iter().all(|t| t.letters() <= 2));
            assert!(!m.finals().is_empty());
            assert_eq!(WKAutomaton::parse(&m.serialize()).unwrap(), m);
        }
    }

    #[test]
    fn single_state_small_reads() {
        let b = RandomBounds::new(1, 1, 5, Alphabet::from_chars("ab").unwrap());
        for seed in 0..500 {
            let f = random_automaton(seed, &b).classify();
            assert!(
                f.stateless && (f.one_limited || f.simple),
                "seed {seed}: {f}"
            );
        }
    }

    #[test]
    fn restricted_shapes() {
        let alpha = Alphabet::from_chars("ab").unwrap();
        let f1 = RandomBounds::new(3, 1, 6, alpha.clone())
            .shape(ReadShape::OneLimited)
            .all_final(true);
        let s = RandomBounds::new(3, 3, 6, alpha).shape(ReadShape::Simple);
        for seed in 0..300 {
            let fl = random_automaton(seed, &f1).classify();
            assert!(fl.all_final && fl.one_limited);
            assert!(random_automaton(seed, &s).classify().simple);
        }
    }
}
