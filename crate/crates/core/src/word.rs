//! Symbols, words and alphabets.
//!
//! A [`Word`] is a finite sequence of [`Symbol`]s. The empty word λ is written
//! `_` in every textual format. Words are ordered length-first, then
//! lexicographically by character, which is the order used for every reported
//! word set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Token used for the empty word λ.
pub const LAMBDA: &str = "_";

const RESERVED: &[char] = &['_', '#', '(', ')', ',', '|'];

/// A single alphabet letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(ch: char) -> Result<Self> {
        if ch.is_whitespace() || ch.is_control() || RESERVED.contains(&ch) {
            return Err(Error::InvalidSymbol(ch));
        }
        Ok(Symbol(ch))
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A linear word; the empty word is λ.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_symbols(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The conjugate `w[k..] · w[..k]`; `k` is taken modulo the length.
    pub fn rotate(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = k % self.0.len();
        let mut out = Vec::with_capacity(self.0.len());
        out.extend_from_slice(&self.0[k..]);
        out.extend_from_slice(&self.0[..k]);
        Word(out)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        Word(out)
    }

    pub fn count(&self, sym: Symbol) -> usize {
        self.0.iter().filter(|&&s| s == sym).count()
    }

    pub fn is_prefix_of(&self, other: &[Symbol]) -> bool {
        other.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &[Symbol]) -> bool {
        other.ends_with(&self.0)
    }

    /// Maximal runs of equal symbols, left to right.
    pub fn runs(&self) -> Vec<(Symbol, usize)> {
        let mut runs: Vec<(Symbol, usize)> = Vec::new();
        for &s in &self.0 {
            match runs.last_mut() {
                Some((last, n)) if *last == s => *n += 1,
                _ => runs.push((s, 1)),
            }
        }
        runs
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str(LAMBDA);
        }
        for s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses a raw symbol run; `_` (or the empty string) is λ.
    fn from_str(s: &str) -> Result<Self> {
        if s == LAMBDA || s.is_empty() {
            return Ok(Word::empty());
        }
        s.chars()
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

/// Shorthand for tests and examples: panics on malformed input.
pub fn w(s: &str) -> Word {
    s.parse().expect("malformed word literal")
}

/// A finite alphabet. Declaration order is kept for serialization.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Alphabet {
    declared: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet, dropping repeated symbols.
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        let mut declared = Vec::new();
        for s in symbols {
            if !declared.contains(&s) {
                declared.push(s);
            }
        }
        Alphabet { declared }
    }

    pub fn from_chars(chars: &str) -> Result<Self> {
        Ok(Alphabet::new(
            chars
                .chars()
                .filter(|c| !c.is_whitespace())
                .map(Symbol::new)
                .collect::<Result<Vec<_>>>()?,
        ))
    }

    pub fn declared(&self) -> &[Symbol] {
        &self.declared
    }

    /// Symbols in character order.
    pub fn sorted(&self) -> Vec<Symbol> {
        let mut v = self.declared.clone();
        v.sort();
        v
    }

    pub fn len(&self) -> usize {
        self.declared.len()
    }

    pub fn is_empty(&self) -> bool {
        self.declared.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.declared.contains(&s)
    }

    /// Fails with the first symbol of `word` outside the alphabet.
    pub fn check(&self, word: &[Symbol]) -> Result<()> {
        match word.iter().find(|s| !self.contains(**s)) {
            Some(s) => Err(Error::UndeclaredSymbol(s.as_char())),
            None => Ok(()),
        }
    }

    /// All words of length at most `max_len`, in length-lexicographic order.
    pub fn words_up_to(&self, max_len: usize) -> WordsUpTo {
        WordsUpTo {
            symbols: self.sorted(),
            max_len,
            digits: Vec::new(),
            done: false,
        }
    }

    /// Number of words of length at most `max_len`.
    pub fn count_up_to(&self, max_len: usize) -> usize {
        let k = self.len();
        (0..=max_len).map(|n| k.pow(n as u32)).sum()
    }
}

/// Odometer over `Σ^{≤n}` in length-lexicographic order.
#[derive(Debug, Clone)]
pub struct WordsUpTo {
    symbols: Vec<Symbol>,
    max_len: usize,
    digits: Vec<usize>,
    done: bool,
}

impl Iterator for WordsUpTo {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        let out = Word(self.digits.iter().map(|&d| self.symbols[d]).collect());
        // advance
        let k = self.symbols.len();
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                if self.digits.len() == self.max_len || k == 0 {
                    self.done = true;
                } else {
                    let n = self.digits.len() + 1;
                    self.digits.clear();
                    self.digits.resize(n, 0);
                }
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < k {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

/// Identifiers for states and nonterminals: `[A-Za-z0-9_]+`, but not `_` alone.
pub(crate) fn check_identifier(s: &str) -> Result<()> {
    let ok =
        !s.is_empty() && s != LAMBDA && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidIdentifier(s.to_string()))
    }
}
