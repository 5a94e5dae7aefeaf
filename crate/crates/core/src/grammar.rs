//! Linear context-free grammars (`A → u` and `A → uBv`) and their text format.
//!
//! ```text
//! terminals: 0 1
//! nonterminals: S A
//! start: S
//! prod: S -> A 1
//! prod: A -> 0 A 0 | 1
//! ```
//!
//! A right side is a sequence of terminal-run tokens with at most one
//! nonterminal token; `_` is λ.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::automaton::{directive, parse_symbols};
use crate::error::{Error, Result};
use crate::word::{check_identifier, Alphabet, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NonterminalId(String);

impl NonterminalId {
    pub fn new(name: &str) -> Result<Self> {
        check_identifier(name)?;
        Ok(NonterminalId(name.to_string()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NonterminalId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Rhs {
    /// `A → u`
    Terminal(Word),
    /// `A → u B v`
    Linear {
        left: Word,
        next: NonterminalId,
        right: Word,
    },
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Terminal(u) => write!(f, "{u}"),
            Rhs::Linear { left, next, right } => {
                let mut parts = Vec::new();
                if !left.is_empty() {
                    parts.push(left.to_string());
                }
                parts.push(next.to_string());
                if !right.is_empty() {
                    parts.push(right.to_string());
                }
                f.write_str(&parts.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Production {
    pub head: NonterminalId,
    pub rhs: Rhs,
}

impl Production {
    pub fn terminal(head: NonterminalId, u: Word) -> Self {
        Production {
            head,
            rhs: Rhs::Terminal(u),
        }
    }

    pub fn linear(head: NonterminalId, left: Word, next: NonterminalId, right: Word) -> Self {
        Production {
            head,
            rhs: Rhs::Linear { left, next, right },
        }
    }
}

impl fmt::Display for Production {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.head, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearGrammar {
    terminals: Alphabet,
    nonterminals: Vec<NonterminalId>,
    start: NonterminalId,
    productions: Vec<Production>,
}

/// A name made only of terminal characters would be read back as a terminal run.
fn is_terminal_run(name: &str, terminals: &Alphabet) -> bool {
    name.chars()
        .all(|c| Symbol::new(c).is_ok_and(|s| terminals.contains(s)))
}

impl LinearGrammar {
    pub fn new(
        terminals: Alphabet,
        nonterminals: Vec<NonterminalId>,
        start: NonterminalId,
        productions: Vec<Production>,
    ) -> Result<Self> {
        for (i, n) in nonterminals.iter().enumerate() {
            if nonterminals[..i].contains(n) {
                return Err(Error::Duplicate(n.to_string()));
            }
            if is_terminal_run(n.as_str(), &terminals) {
                return Err(Error::AmbiguousNonterminal(n.to_string()));
            }
        }
        let declared = |n: &NonterminalId| {
            if nonterminals.contains(n) {
                Ok(())
            } else {
                Err(Error::UndeclaredNonterminal(n.to_string()))
            }
        };
        declared(&start)?;
        for p in &productions {
            declared(&p.head)?;
            match &p.rhs {
                Rhs::Terminal(u) => terminals.check(u.symbols())?,
                Rhs::Linear { left, next, right } => {
                    declared(next)?;
                    terminals.check(left.symbols())?;
                    terminals.check(right.symbols())?;
                }
            }
        }
        Ok(LinearGrammar {
            terminals,
            nonterminals,
            start,
            productions,
        })
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &[NonterminalId] {
        &self.nonterminals
    }

    pub fn start(&self) -> &NonterminalId {
        &self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    /// Longest right side, counted in terminals plus one for a nonterminal.
    pub fn max_production_length(&self) -> usize {
        self.productions
            .iter()
            .map(|p| match &p.rhs {
                Rhs::Terminal(u) => u.len(),
                Rhs::Linear { left, right, .. } => left.len() + right.len() + 1,
            })
            .max()
            .unwrap_or(0)
    }

    /// `L(g) ∩ Σ^{≤max_len}` by breadth-first derivation over sentential forms
    /// `u B v`, pruning forms whose terminal part already exceeds `max_len`.
    pub fn words_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        let idx = |n: &NonterminalId| self.nonterminals.iter().position(|x| x == n).unwrap();
        let mut by_head: Vec<Vec<&Rhs>> = vec![Vec::new(); self.nonterminals.len()];
        for p in &self.productions {
            by_head[idx(&p.head)].push(&p.rhs);
        }

        let mut out = BTreeSet::new();
        let start = (Vec::<Symbol>::new(), idx(&self.start), Vec::<Symbol>::new());
        let mut seen = HashSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some((u, a, v)) = queue.pop_front() {
            for rhs in &by_head[a] {
                match rhs {
                    Rhs::Terminal(x) => {
                        if u.len() + x.len() + v.len() <= max_len {
                            let mut word = u.clone();
                            word.extend_from_slice(x.symbols());
                            word.extend_from_slice(&v);
                            out.insert(Word::from(word));
                        }
                    }
                    Rhs::Linear { left, next, right } => {
                        if u.len() + left.len() + right.len() + v.len() > max_len {
                            continue;
                        }
                        let mut u2 = u.clone();
                        u2.extend_from_slice(left.symbols());
                        let mut v2 = right.symbols().to_vec();
                        v2.extend_from_slice(&v);
                        let form = (u2, idx(next), v2);
                        if seen.insert(form.clone()) {
                            queue.push_back(form);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_grammar(text)
    }

    pub fn serialize(&self) -> String {
        serialize_grammar(self)
    }
}

fn parse_alternative(
    alt: &str,
    nonterminals: &[NonterminalId],
    terminals: &Alphabet,
) -> Result<Rhs> {
    let toks: Vec<&str> = alt.split_whitespace().collect();
    if toks.is_empty() {
        return Err(Error::Syntax("empty right side; write `_` for λ".into()));
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut next: Option<NonterminalId> = None;
    for tok in toks {
        if let Some(n) = nonterminals.iter().find(|n| n.as_str() == tok) {
            if next.is_some() {
                return Err(Error::NotLinear);
            }
            next = Some(n.clone());
            continue;
        }
        if tok == crate::word::LAMBDA {
            continue;
        }
        let run = if is_terminal_run(tok, terminals) {
            tok.parse::<Word>()?
        } else if check_identifier(tok).is_ok()
            && !tok
                .chars()
                .any(|c| Symbol::new(c).is_ok_and(|s| terminals.contains(s)))
        {
            return Err(Error::UndeclaredNonterminal(tok.to_string()));
        } else {
            let bad = tok
                .chars()
                .find(|&c| !Symbol::new(c).is_ok_and(|s| terminals.contains(s)))
                .unwrap();
            return Err(Error::UndeclaredSymbol(bad));
        };
        if next.is_some() {
            right.extend_from_slice(run.symbols());
        } else {
            left.extend_from_slice(run.symbols());
        }
    }
    Ok(match next {
        None => Rhs::Terminal(Word::from(left)),
        Some(next) => Rhs::Linear {
            left: Word::from(left),
            next,
            right: Word::from(right),
        },
    })
}

pub fn parse_grammar(text: &str) -> Result<LinearGrammar> {
    let mut terminals = Vec::new();
    let mut nonterminals: Vec<NonterminalId> = Vec::new();
    let mut start: Option<(usize, NonterminalId)> = None;
    let mut prods: Vec<(usize, &str)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some((key, value)) = directive(raw).map_err(|e| e.at(line))? else {
            continue;
        };
        match key {
            "terminals" => terminals.extend(parse_symbols(value).map_err(|e| e.at(line))?),
            "nonterminals" => {
                for tok in value.split_whitespace() {
                    let n = NonterminalId::new(tok).map_err(|e| e.at(line))?;
                    if nonterminals.contains(&n) {
                        return Err(Error::Duplicate(tok.to_string()).at(line));
                    }
                    nonterminals.push(n);
                }
            }
            "start" => {
                if start.is_some() {
                    return Err(Error::Duplicate("start".into()).at(line));
                }
                start = Some((line, NonterminalId::new(value).map_err(|e| e.at(line))?));
            }
            "prod" => prods.push((line, value)),
            other => return Err(Error::Syntax(format!("unknown directive `{other}`")).at(line)),
        }
    }

    let terminals = Alphabet::new(terminals);
    for n in &nonterminals {
        if is_terminal_run(n.as_str(), &terminals) {
            return Err(Error::AmbiguousNonterminal(n.to_string()));
        }
    }
    let (start_line, start) = start.ok_or(Error::Missing("start"))?;
    if !nonterminals.contains(&start) {
        return Err(Error::UndeclaredNonterminal(start.to_string()).at(start_line));
    }

    let mut productions = Vec::new();
    for (line, value) in prods {
        let (head, body) = value.split_once("->").ok_or_else(|| {
            Error::Syntax(format!("expected `A -> ...`, found `{value}`")).at(line)
        })?;
        let head = NonterminalId::new(head.trim()).map_err(|e| e.at(line))?;
        if !nonterminals.contains(&head) {
            return Err(Error::UndeclaredNonterminal(head.to_string()).at(line));
        }
        for alt in body.split('|') {
            let rhs = parse_alternative(alt, &nonterminals, &terminals).map_err(|e| e.at(line))?;
            productions.push(Production {
                head: head.clone(),
                rhs,
            });
        }
    }
    LinearGrammar::new(terminals, nonterminals, start, productions)
}

/// Consecutive productions with the same head share one `prod:` line.
pub fn serialize_grammar(g: &LinearGrammar) -> String {
    let mut out = String::new();
    let join = |v: Vec<String>| v.join(" ");
    let _ = writeln!(
        out,
        "terminals: {}",
        join(
            g.terminals
                .declared()
                .iter()
                .map(|s| s.to_string())
                .collect()
        )
    );
    let _ = writeln!(
        out,
        "nonterminals: {}",
        join(g.nonterminals.iter().map(|s| s.to_string()).collect())
    );
    let _ = writeln!(out, "start: {}", g.start);
    let mut i = 0;
    while i < g.productions.len() {
        let head = &g.productions[i].head;
        let mut alts = vec![g.productions[i].rhs.to_string()];
        let mut j = i + 1;
        while j < g.productions.len() && &g.productions[j].head == head {
            alts.push(g.productions[j].rhs.to_string());
            j += 1;
        }
        let _ = writeln!(out, "prod: {head} -> {}", alts.join(" | "));
        i = j;
    }
    out
}

impl FromStr for LinearGrammar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_grammar(s)
    }
}

impl fmt::Display for LinearGrammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_grammar(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    const TWIN: &str =
        "terminals: 0 1\nnonterminals: S A\nstart: S\nprod: S -> A 1\nprod: A -> 0 A 0 | 1\n";

    fn words(g: &LinearGrammar, n: usize) -> Vec<String> {
        g.words_up_to(n).iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn twin_grammar() {
        let g = parse_grammar(TWIN).unwrap();
        assert_eq!(g.productions().len(), 3);
        assert_eq!(words(&g, 8), ["11", "0101", "001001", "00010001"]);
        assert_eq!(g.serialize(), TWIN);
        assert_eq!(parse_grammar(&g.serialize()).unwrap(), g);
    }

    #[test]
    fn lambda_grammar() {
        let g = parse_grammar("terminals: 0\nnonterminals: S\nstart: S\nprod: S -> _\n").unwrap();
        assert_eq!(words(&g, 5), ["_"]);
    }

    #[test]
    fn matched_grammar() {
        let g = parse_grammar("terminals: 0 1\nnonterminals: S\nstart: S\nprod: S -> 0 S 1 | _\n")
            .unwrap();
        assert_eq!(words(&g, 8), ["_", "01", "0011", "000111", "00001111"]);
    }

    #[test]
    fn unit_cycles_terminate() {
        let g = parse_grammar(
            "terminals: a\nnonterminals: S T\nstart: S\nprod: S -> T | a S\nprod: T -> S | _\n",
        )
        .unwrap();
        assert_eq!(words(&g, 3), ["_", "a", "aa", "aaa"]);
    }

    #[test]
    fn rejects_nonlinear() {
        let err = parse_grammar("terminals: 0\nnonterminals: S A B\nstart: S\nprod: S -> A B\n")
            .unwrap_err();
        assert_eq!(err.kind(), &Error::NotLinear);
        assert_eq!(err.line(), Some(4));
    }

    #[test]
    fn rejects_undeclared() {
        let err =
            parse_grammar("terminals: 0\nnonterminals: S\nstart: S\nprod: S -> 0 B\n").unwrap_err();
        assert_eq!(err.kind(), &Error::UndeclaredNonterminal("B".into()));
        let err =
            parse_grammar("terminals: 0\nnonterminals: S\nstart: S\nprod: S -> 02\n").unwrap_err();
        assert_eq!(err.kind(), &Error::UndeclaredSymbol('2'));
        let err = parse_grammar("terminals: 0\nnonterminals: S\nstart: T\n").unwrap_err();
        assert_eq!(err.kind(), &Error::UndeclaredNonterminal("T".into()));
        let err =
            parse_grammar("terminals: 0\nnonterminals: S\nstart: S\nprod: A -> 0\n").unwrap_err();
        assert_eq!(err.kind(), &Error::UndeclaredNonterminal("A".into()));
        assert_eq!(
            parse_grammar("terminals: 0\nnonterminals: S\n").unwrap_err(),
            Error::Missing("start")
        );
    }

    #[test]
    fn ambiguous_nonterminal_name() {
        let err = parse_grammar("terminals: S\nnonterminals: S\nstart: S\n").unwrap_err();
        assert_eq!(err, Error::AmbiguousNonterminal("S".into()));
    }

    #[test]
    fn split_terminal_tokens_concatenate() {
        let g =
            parse_grammar("terminals: a b\nnonterminals: S\nstart: S\nprod: S -> a b S b _ a\n")
                .unwrap();
        assert_eq!(
            g.productions()[0].rhs,
            Rhs::Linear {
                left: w("ab"),
                next: NonterminalId::new("S").unwrap(),
                right: w("ba")
            }
        );
        assert_eq!(g.max_production_length(), 5);
    }
}
