//! Sensing 5'→3' Watson-Crick automata and their text format.
//!
//! An automaton is a 5-tuple `(T, Q, q0, F, δ)` over a single alphabet. Each
//! transition reads a (possibly empty) word with the left head, which moves
//! rightwards from the start of the input, and a (possibly empty) word with
//! the right head, which moves leftwards from the end.
//!
//! The file format is line oriented; `#` starts a comment and λ is `_`:
//!
//! ```text
//! alphabet: 0 1
//! states: q p
//! initial: q
//! final: q p
//! trans: q (0,_) -> p
//! ```

use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{check_identifier, Alphabet, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(String);

impl StateId {
    pub fn new(name: &str) -> Result<Self> {
        check_identifier(name)?;
        Ok(StateId(name.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for StateId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StateId::new(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub from: StateId,
    /// Word read by the left (upper) head.
    pub left: Word,
    /// Word read by the right (lower) head.
    pub right: Word,
    pub to: StateId,
}

impl Transition {
    pub fn new(from: StateId, left: Word, right: Word, to: StateId) -> Self {
        Transition {
            from,
            left,
            right,
            to,
        }
    }

    /// Letters consumed by one application.
    pub fn letters(&self) -> usize {
        self.left.len() + self.right.len()
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({},{}) -> {}",
            self.from, self.left, self.right, self.to
        )
    }
}

/// Which of the N/F/S/1 restrictions an automaton satisfies.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RestrictionFlags {
    /// N: a sole state, both initial and final.
    pub stateless: bool,
    /// F: every state is final.
    pub all_final: bool,
    /// S: at most one head reads in each step.
    pub simple: bool,
    /// 1: exactly one letter is read in each step.
    pub one_limited: bool,
}

impl RestrictionFlags {
    pub const NONE: RestrictionFlags = RestrictionFlags {
        stateless: false,
        all_final: false,
        simple: false,
        one_limited: false,
    };

    /// Parses a flag line such as `N F S 1`; `-` means no flags.
    pub fn parse(s: &str) -> Result<Self> {
        let mut flags = RestrictionFlags::NONE;
        for tok in s.split_whitespace() {
            match tok {
                "N" => flags.stateless = true,
                "F" => flags.all_final = true,
                "S" => flags.simple = true,
                "1" => flags.one_limited = true,
                "-" => {}
                other => return Err(Error::Syntax(format!("unknown restriction flag `{other}`"))),
            }
        }
        Ok(flags)
    }
}

impl fmt::Display for RestrictionFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = [
            (self.stateless, "N"),
            (self.all_final, "F"),
            (self.simple, "S"),
            (self.one_limited, "1"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, n)| *n)
        .collect();
        if names.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&names.join(" "))
        }
    }
}

/// A validated sensing 5'→3' WK automaton. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WKAutomaton {
    alphabet: Alphabet,
    states: Vec<StateId>,
    initial: StateId,
    finals: Vec<StateId>,
    transitions: Vec<Transition>,
    // index views derived from the fields above
    initial_idx: usize,
    is_final: Vec<bool>,
    ends: Vec<(usize, usize)>,
    outgoing: Vec<Vec<usize>>,
}

impl WKAutomaton {
    /// Validates and builds an automaton. Repeated final states are merged;
    /// repeated state declarations are rejected.
    pub fn new(
        alphabet: Alphabet,
        states: Vec<StateId>,
        initial: StateId,
        finals: Vec<StateId>,
        transitions: Vec<Transition>,
    ) -> Result<Self> {
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(Error::Duplicate(s.to_string()));
            }
        }
        let index = |s: &StateId| {
            states
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UndeclaredState(s.to_string()))
        };
        let initial_idx = index(&initial)?;
        let mut is_final = vec![false; states.len()];
        let mut dedup_finals = Vec::new();
        for f in &finals {
            let i = index(f)?;
            if !is_final[i] {
                is_final[i] = true;
                dedup_finals.push(f.clone());
            }
        }
        let mut ends = Vec::with_capacity(transitions.len());
        let mut outgoing = vec![Vec::new(); states.len()];
        for (k, t) in transitions.iter().enumerate() {
            let from = index(&t.from)?;
            let to = index(&t.to)?;
            alphabet.check(t.left.symbols())?;
            alphabet.check(t.right.symbols())?;
            ends.push((from, to));
            outgoing[from].push(k);
        }
        Ok(WKAutomaton {
            alphabet,
            states,
            initial,
            finals: dedup_finals,
            transitions,
            initial_idx,
            is_final,
            ends,
            outgoing,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[StateId] {
        &self.states
    }

    pub fn initial(&self) -> &StateId {
        &self.initial
    }

    pub fn finals(&self) -> &[StateId] {
        &self.finals
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn is_final(&self, s: &StateId) -> bool {
        self.state_index(s).is_some_and(|i| self.is_final[i])
    }

    pub fn state_index(&self, s: &StateId) -> Option<usize> {
        self.states.iter().position(|x| x == s)
    }

    /// `r`: the longest word read by a single head in one step (0 without transitions).
    pub fn max_read_length(&self) -> usize {
        self.transitions
            .iter()
            .map(|t| t.left.len().max(t.right.len()))
            .max()
            .unwrap_or(0)
    }

    /// Returns a copy with transition `k` removed.
    pub fn without_transition(&self, k: usize) -> WKAutomaton {
        let mut ts = self.transitions.clone();
        ts.remove(k);
        WKAutomaton::new(
            self.alphabet.clone(),
            self.states.clone(),
            self.initial.clone(),
            self.finals.clone(),
            ts,
        )
        .expect("sub-automaton of a valid automaton is valid")
    }

    pub(crate) fn initial_index(&self) -> usize {
        self.initial_idx
    }

    pub(crate) fn final_mask(&self) -> &[bool] {
        &self.is_final
    }

    pub(crate) fn outgoing(&self, state: usize) -> &[usize] {
        &self.outgoing[state]
    }

    pub(crate) fn target(&self, k: usize) -> usize {
        self.ends[k].1
    }

    /// Parses the automaton file format.
    pub fn parse(text: &str) -> Result<Self> {
        parse_automaton(text)
    }

    /// Canonical text form, states and transitions in declaration order.
    pub fn serialize(&self) -> String {
        serialize_automaton(self)
    }

    pub fn classify(&self) -> RestrictionFlags {
        classify(self)
    }
}

pub fn classify(m: &WKAutomaton) -> RestrictionFlags {
    let all_final = m.is_final.iter().all(|&f| f);
    RestrictionFlags {
        stateless: m.states.len() == 1 && all_final,
        all_final,
        simple: m
            .transitions
            .iter()
            .all(|t| t.left.is_empty() || t.right.is_empty()),
        one_limited: m.transitions.iter().all(|t| t.letters() == 1),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `key: rest` directives. Returns `None` for blank lines.
pub(crate) fn directive(line: &str) -> Result<Option<(&str, &str)>> {
    let line = strip_comment(line).trim();
    if line.is_empty() {
        return Ok(None);
    }
    match line.split_once(':') {
        Some((k, v)) => Ok(Some((k.trim(), v.trim()))),
        None => Err(Error::Syntax(format!(
            "expected `key: value`, found `{line}`"
        ))),
    }
}

pub(crate) fn parse_symbols(list: &str) -> Result<Vec<Symbol>> {
    list.split_whitespace()
        .map(|tok| {
            let mut cs = tok.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => Symbol::new(c),
                _ => Err(Error::Syntax(format!(
                    "alphabet entries are single characters, found `{tok}`"
                ))),
            }
        })
        .collect()
}

/// Parses a word token against an alphabet; `_` is λ.
pub(crate) fn parse_word_in(tok: &str, alphabet: &Alphabet) -> Result<Word> {
    let word: Word = tok.parse()?;
    alphabet.check(word.symbols())?;
    Ok(word)
}

fn parse_transition_line(rest: &str) -> Result<(&str, &str, &str, &str)> {
    let bad = || {
        Error::Syntax(format!(
            "malformed transition `{rest}`; expected `q (u,v) -> p`"
        ))
    };
    let (from, tail) = rest.split_once('(').ok_or_else(bad)?;
    let (reads, tail) = tail.split_once(')').ok_or_else(bad)?;
    let (left, right) = reads.split_once(',').ok_or_else(bad)?;
    let to = tail.trim().strip_prefix("->").ok_or_else(bad)?.trim();
    let from = from.trim();
    if from.is_empty() || to.is_empty() || to.contains(char::is_whitespace) {
        return Err(bad());
    }
    Ok((from, left.trim(), right.trim(), to))
}

pub fn parse_automaton(text: &str) -> Result<WKAutomaton> {
    let mut alphabet_syms = Vec::new();
    let mut states = Vec::new();
    let mut initial: Option<StateId> = None;
    let mut finals: Vec<(usize, String)> = Vec::new();
    let mut trans: Vec<(usize, &str, &str, &str, &str)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some((key, value)) = directive(raw).map_err(|e| e.at(line))? else {
            continue;
        };
        match key {
            "alphabet" => alphabet_syms.extend(parse_symbols(value).map_err(|e| e.at(line))?),
            "states" => {
                for tok in value.split_whitespace() {
                    let s = StateId::new(tok).map_err(|e| e.at(line))?;
                    if states.contains(&s) {
                        return Err(Error::Duplicate(tok.to_string()).at(line));
                    }
                    states.push(s);
                }
            }
            "initial" => {
                if initial.is_some() {
                    return Err(Error::DuplicateInitial.at(line));
                }
                let mut toks = value.split_whitespace();
                let (Some(tok), None) = (toks.next(), toks.next()) else {
                    return Err(Error::Syntax("`initial:` takes exactly one state".into()).at(line));
                };
                initial = Some(StateId::new(tok).map_err(|e| e.at(line))?);
            }
            "final" | "finals" => {
                finals.extend(value.split_whitespace().map(|t| (line, t.to_string())));
            }
            "trans" => {
                let (from, l, r, to) = parse_transition_line(value).map_err(|e| e.at(line))?;
                trans.push((line, from, l, r, to));
            }
            other => {
                return Err(Error::Syntax(format!("unknown directive `{other}`")).at(line));
            }
        }
    }

    let alphabet = Alphabet::new(alphabet_syms);
    let initial = initial.ok_or(Error::Missing("initial"))?;
    let declared = |name: &str, line: usize| -> Result<StateId> {
        let s = StateId::new(name).map_err(|e| e.at(line))?;
        if states.contains(&s) {
            Ok(s)
        } else {
            Err(Error::UndeclaredState(name.to_string()).at(line))
        }
    };
    let mut final_ids = Vec::new();
    for (line, name) in &finals {
        final_ids.push(declared(name, *line)?);
    }
    let mut transitions = Vec::new();
    for &(line, from, l, r, to) in &trans {
        let from = declared(from, line)?;
        let to = declared(to, line)?;
        let left = parse_word_in(l, &alphabet).map_err(|e| e.at(line))?;
        let right = parse_word_in(r, &alphabet).map_err(|e| e.at(line))?;
        transitions.push(Transition::new(from, left, right, to));
    }
    WKAutomaton::new(alphabet, states, initial, final_ids, transitions)
}

pub fn serialize_automaton(m: &WKAutomaton) -> String {
    let join = |items: Vec<String>| items.join(" ");
    let mut out = String::new();
    let _ = writeln!(
        out,
        "alphabet: {}",
        join(
            m.alphabet
                .declared()
                .iter()
                .map(|s| s.to_string())
                .collect()
        )
    );
    let _ = writeln!(
        out,
        "states: {}",
        join(m.states.iter().map(|s| s.to_string()).collect())
    );
    let _ = writeln!(out, "initial: {}", m.initial);
    let finals = join(m.finals.iter().map(|s| s.to_string()).collect());
    if finals.is_empty() {
        out.push_str("final:\n");
    } else {
        let _ = writeln!(out, "final: {finals}");
    }
    for t in &m.transitions {
        let _ = writeln!(out, "trans: {t}");
    }
    out
}

impl FromStr for WKAutomaton {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_automaton(s)
    }
}

impl fmt::Display for WKAutomaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_automaton(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    const ZEROS_ONES: &str = "\
alphabet: 0 1
states: q
initial: q
final: q
trans: q (0,_) -> q
trans: q (_,1) -> q
";

    #[test]
    fn parses_zeros_ones() {
        let m = parse_automaton(ZEROS_ONES).unwrap();
        assert_eq!(m.states().len(), 1);
        assert_eq!(m.transitions().len(), 2);
        assert_eq!(m.transitions()[0].left, w("0"));
        assert!(m.transitions()[0].right.is_empty());
        assert_eq!(m.transitions()[1].right, w("1"));
        assert_eq!(m.max_read_length(), 1);
    }

    #[test]
    fn canonical_text_is_stable() {
        let m = parse_automaton(ZEROS_ONES).unwrap();
        assert_eq!(m.serialize(), ZEROS_ONES);
        assert_eq!(m.serialize(), m.serialize());
        assert_eq!(parse_automaton(&m.serialize()).unwrap(), m);
    }

    #[test]
    fn lambda_lambda_token() {
        let m = parse_automaton(
            "alphabet: a\nstates: q p\ninitial: q\nfinal: p\ntrans: q (_,_) -> p\n",
        )
        .unwrap();
        assert!(m.serialize().contains("trans: q (_,_) -> p"));
        assert_eq!(m.max_read_length(), 0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\nalphabet: a b # two letters\nstates: q\ninitial: q\nfinal: q\n";
        let m = parse_automaton(text).unwrap();
        assert_eq!(m.alphabet().len(), 2);
        assert!(m.transitions().is_empty());
        assert_eq!(m.max_read_length(), 0);
    }

    #[test]
    fn undeclared_symbol_reports_line() {
        let text = "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\ntrans: q (2,_) -> q\n";
        let err = parse_automaton(text).unwrap_err();
        assert_eq!(err.line(), Some(5));
        assert_eq!(err.kind(), &Error::UndeclaredSymbol('2'));
        assert!(err.to_string().contains('2'));
    }

    #[test]
    fn undeclared_state_and_duplicate_initial() {
        let text = "alphabet: 0\nstates: q\ninitial: q\nfinal: q\ntrans: q (0,_) -> p\n";
        let err = parse_automaton(text).unwrap_err();
        assert_eq!(err.kind(), &Error::UndeclaredState("p".into()));
        assert_eq!(err.line(), Some(5));

        let text = "alphabet: 0\nstates: q\ninitial: q\ninitial: q\nfinal: q\n";
        let err = parse_automaton(text).unwrap_err();
        assert_eq!(err.kind(), &Error::DuplicateInitial);
        assert_eq!(err.line(), Some(4));

        let text = "alphabet: 0\nstates: q\ninitial: p\n";
        assert_eq!(
            parse_automaton(text).unwrap_err().kind(),
            &Error::UndeclaredState("p".into())
        );
    }

    #[test]
    fn syntax_errors() {
        for bad in [
            "alphabet 0 1\n",
            "alphabet: 01\n",
            "alphabet: 0\nstates: q\ninitial: q\ntrans: q 0,_ -> q\n",
            "alphabet: 0\nstates: q\ninitial: q\ntrans: q (0,_) q\n",
            "bogus: 1\n",
        ] {
            let err = parse_automaton(bad).unwrap_err();
            assert!(matches!(err.kind(), Error::Syntax(_)), "{bad:?} -> {err}");
        }
        assert_eq!(
            parse_automaton("alphabet: 0\nstates: q\n").unwrap_err(),
            Error::Missing("initial")
        );
    }

    #[test]
    fn classify_fixture_automata() {
        let f1 = parse_automaton(
            "alphabet: 0 1\nstates: q p\ninitial: q\nfinal: q p\ntrans: q (0,_) -> p\ntrans: p (_,1) -> q\n",
        )
        .unwrap();
        assert_eq!(f1.classify().to_string(), "F S 1");

        let ns = parse_automaton(
            "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\ntrans: q (00,_) -> q\ntrans: q (_,1) -> q\n",
        )
        .unwrap();
        assert_eq!(ns.classify().to_string(), "N F S");

        let zeros_ones = parse_automaton(ZEROS_ONES).unwrap();
        assert_eq!(zeros_ones.classify().to_string(), "N F S 1");
    }

    #[test]
    fn lambda_lambda_breaks_one_limited_only() {
        let m =
            parse_automaton("alphabet: a\nstates: q\ninitial: q\nfinal: q\ntrans: q (_,_) -> q\n")
                .unwrap();
        let f = m.classify();
        assert!(f.stateless && f.all_final && f.simple && !f.one_limited);
    }

    #[test]
    fn flags_text_round_trip() {
        for s in ["N F S 1", "F S", "-", "F"] {
            assert_eq!(RestrictionFlags::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn non_final_single_state_is_not_stateless() {
        let m = parse_automaton("alphabet: a\nstates: q\ninitial: q\nfinal:\n").unwrap();
        assert_eq!(
            m.classify(),
            RestrictionFlags {
                simple: true,
                one_limited: true,
                ..RestrictionFlags::NONE
            }
        );
        assert_eq!(parse_automaton(&m.serialize()).unwrap(), m);
    }
}
