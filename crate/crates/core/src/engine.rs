//! Membership, accepting runs, and weak/strong necklace acceptance.
//!
//! For an input of length `n` a configuration is `(q, lo, hi)` with the unread
//! infix `w[lo..hi)`. A step with transition `(q, u, v, q')` needs `u` to be a
//! prefix and `v` a suffix of the infix with `|u| + |v| ≤ hi - lo`, and moves
//! `lo` forward by `|u|` and `hi` back by `|v|`. The search visits each of the
//! `|Q|·(n+1)²` configurations at most once, so λλ-cycles terminate. λλ-steps
//! may still fire once the heads have met; acceptance is reaching a final
//! state at an empty span.

use std::collections::BTreeSet;
use std::fmt;

use crate::automaton::{StateId, WKAutomaton};
use crate::error::Result;
use crate::necklace::{self, rotations};
use crate::word::{Symbol, Word};

/// A point of a computation on a fixed input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: usize,
    pub lo: usize,
    pub hi: usize,
}

impl Configuration {
    pub fn span(&self) -> usize {
        self.hi - self.lo
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub before: StateId,
    pub left: Word,
    pub right: Word,
    pub after: StateId,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} --({}|{})--> {}",
            self.before, self.left, self.right, self.after
        )
    }
}

/// An accepting computation on a single linear word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputationTrace {
    pub input: Word,
    pub steps: Vec<TraceStep>,
    pub final_state: StateId,
}

impl ComputationTrace {
    /// Replays the steps against `m` from `(q0, 0, |input|)`; true iff every
    /// step matches a transition and the run ends at an empty span in a final state.
    pub fn replays(&self, m: &WKAutomaton) -> bool {
        let w = self.input.symbols();
        let (mut lo, mut hi) = (0, w.len());
        let mut state = m.initial().clone();
        for step in &self.steps {
            if step.before != state {
                return false;
            }
            let exists = m.transitions().iter().any(|t| {
                t.from == step.before
                    && t.left == step.left
                    && t.right == step.right
                    && t.to == step.after
            });
            let (l, r) = (step.left.len(), step.right.len());
            if !exists || l + r > hi - lo {
                return false;
            }
            if !step.left.is_prefix_of(&w[lo..hi]) || !step.right.is_suffix_of(&w[lo..hi]) {
                return false;
            }
            lo += l;
            hi -= r;
            state = step.after.clone();
        }
        lo == hi && state == self.final_state && m.is_final(&state)
    }
}

impl fmt::Display for ComputationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        write!(f, "accept in {}", self.final_state)
    }
}

/// Depth-first search over configurations, transitions tried in declaration
/// order. Returns the transition indices of the first accepting path found.
fn search(m: &WKAutomaton, w: &[Symbol]) -> Option<Vec<usize>> {
    let n = w.len();
    let side = n + 1;
    let id = |c: Configuration| (c.state * side + c.lo) * side + c.hi;
    let mut seen = vec![false; m.states().len() * side * side];
    let finals = m.final_mask();

    let start = Configuration {
        state: m.initial_index(),
        lo: 0,
        hi: n,
    };
    seen[id(start)] = true;
    // (configuration, transition taken to reach it, next outgoing slot to try)
    let mut stack: Vec<(Configuration, usize, usize)> = vec![(start, usize::MAX, 0)];

    while let Some(&mut (c, _, ref mut next)) = stack.last_mut() {
        if c.lo == c.hi && finals[c.state] {
            return Some(stack[1..].iter().map(|f| f.1).collect());
        }
        let out = m.outgoing(c.state);
        let mut pushed = None;
        while *next < out.len() {
            let k = out[*next];
            *next += 1;
            let t = &m.transitions()[k];
            let (l, r) = (t.left.len(), t.right.len());
            if l + r > c.span() {
                continue;
            }
            let infix = &w[c.lo..c.hi];
            if !t.left.is_prefix_of(infix) || !t.right.is_suffix_of(infix) {
                continue;
            }
            let d = Configuration {
                state: m.target(k),
                lo: c.lo + l,
                hi: c.hi - r,
            };
            if !seen[id(d)] {
                seen[id(d)] = true;
                pushed = Some((d, k));
                break;
            }
        }
        match pushed {
            Some((d, k)) => stack.push((d, k, 0)),
            None => {
                stack.pop();
            }
        }
    }
    None
}

pub(crate) fn accepts_symbols(m: &WKAutomaton, w: &[Symbol]) -> bool {
    search(m, w).is_some()
}

/// Decides `w ∈ L(m)`: some final state is reachable at an empty span.
pub fn accepts(m: &WKAutomaton, w: &Word) -> Result<bool> {
    m.alphabet().check(w.symbols())?;
    Ok(accepts_symbols(m, w.symbols()))
}

/// An accepting computation on `w`, if one exists.
pub fn accepting_run(m: &WKAutomaton, w: &Word) -> Result<Option<ComputationTrace>> {
    m.alphabet().check(w.symbols())?;
    let Some(path) = search(m, w.symbols()) else {
        return Ok(None);
    };
    let steps: Vec<TraceStep> = path
        .into_iter()
        .map(|k| {
            let t = &m.transitions()[k];
            TraceStep {
                before: t.from.clone(),
                left: t.left.clone(),
                right: t.right.clone(),
                after: t.to.clone(),
            }
        })
        .collect();
    let final_state = steps
        .last()
        .map(|s| s.after.clone())
        .unwrap_or_else(|| m.initial().clone());
    Ok(Some(ComputationTrace {
        input: w.clone(),
        steps,
        final_state,
    }))
}

/// The first conjugate of `w` (in rotation order) that `m` accepts.
pub fn weak_witness(m: &WKAutomaton, w: &Word) -> Result<Option<Word>> {
    m.alphabet().check(w.symbols())?;
    Ok(rotations(w).find(|c| accepts_symbols(m, c.symbols())))
}

/// The first conjugate of `w` (in rotation order) that `m` rejects.
pub fn strong_counterexample(m: &WKAutomaton, w: &Word) -> Result<Option<Word>> {
    m.alphabet().check(w.symbols())?;
    Ok(rotations(w).find(|c| !accepts_symbols(m, c.symbols())))
}

/// Some conjugate of `w` is accepted.
pub fn weak_accepts(m: &WKAutomaton, w: &Word) -> Result<bool> {
    Ok(weak_witness(m, w)?.is_some())
}

/// Every conjugate of `w` is accepted.
pub fn strong_accepts(m: &WKAutomaton, w: &Word) -> Result<bool> {
    Ok(strong_counterexample(m, w)?.is_none())
}

/// A pair read by some transition leaving the initial state: `suffix` by the
/// right head, `prefix` by the left head.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern {
    pub suffix: Word,
    pub prefix: Word,
}

impl Pattern {
    /// Whether the pattern fits the cut point that yields conjugate `c`.
    pub fn fits(&self, c: &[Symbol]) -> bool {
        self.suffix.len() + self.prefix.len() <= c.len()
            && self.suffix.is_suffix_of(c)
            && self.prefix.is_prefix_of(c)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}", self.suffix, self.prefix)
    }
}

pub fn initial_patterns(m: &WKAutomaton) -> BTreeSet<Pattern> {
    m.outgoing(m.initial_index())
        .iter()
        .map(|&k| {
            let t = &m.transitions()[k];
            Pattern {
                suffix: t.right.clone(),
                prefix: t.left.clone(),
            }
        })
        .collect()
}

/// Necessary condition for strong acceptance: every cut point of the necklace
/// of `w` is fitted by some initial pattern. λ passes when it is accepted.
pub fn pattern_fit_check(m: &WKAutomaton, w: &Word) -> bool {
    let patterns = initial_patterns(m);
    if w.is_empty() {
        return accepts_symbols(m, &[]) || patterns.iter().any(|p| p.fits(&[]));
    }
    rotations(w).all(|c| patterns.iter().any(|p| p.fits(c.symbols())))
}

/// Words of length ≤ `max_len` all of whose conjugates lie in `L(m)`,
/// computed by filtering the enumerated plain language.
pub fn maximal_necklace_sublanguage(m: &WKAutomaton, max_len: usize) -> BTreeSet<Word> {
    let plain: BTreeSet<Word> = m
        .alphabet()
        .words_up_to(max_len)
        .filter(|w| accepts_symbols(m, w.symbols()))
        .collect();
    necklace::maximal_closed_subset(&plain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    fn zeros_ones() -> WKAutomaton {
        WKAutomaton::parse(
            "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\ntrans: q (0,_) -> q\ntrans: q (_,1) -> q\n",
        )
        .unwrap()
    }

    fn n1_ab() -> WKAutomaton {
        WKAutomaton::parse(
            "alphabet: a b\nstates: q\ninitial: q\nfinal: q\ntrans: q (a,_) -> q\ntrans: q (_,b) -> q\n",
        )
        .unwrap()
    }

    #[test]
    fn plain_membership() {
        let m = zeros_ones();
        assert!(accepts(&m, &w("0011")).unwrap());
        assert!(!accepts(&m, &w("0110")).unwrap());
        assert!(accepts(&m, &w("_")).unwrap());
        assert!(accepts(&m, &w("111")).unwrap());
        assert!(accepts(&m, &w("2")).is_err());
    }

    #[test]
    fn zeros_ones_trace() {
        let t = accepting_run(&zeros_ones(), &w("01")).unwrap().unwrap();
        let lines: Vec<String> = t.steps.iter().map(|s| s.to_string()).collect();
        assert_eq!(lines, ["q --(0|_)--> q", "q --(_|1)--> q"]);
        assert_eq!(t.final_state.as_str(), "q");
        assert!(t.replays(&zeros_ones()));
    }

    #[test]
    fn lambda_only_automaton() {
        let m = WKAutomaton::parse("alphabet: 0\nstates: q\ninitial: q\nfinal: q\n").unwrap();
        assert!(accepts(&m, &Word::empty()).unwrap());
        assert!(accepting_run(&m, &w("0")).unwrap().is_none());
        let t = accepting_run(&m, &Word::empty()).unwrap().unwrap();
        assert!(t.steps.is_empty());
    }

    #[test]
    fn lambda_lambda_cycles_terminate() {
        let m = WKAutomaton::parse(
            "alphabet: a\nstates: q p f\ninitial: q\nfinal: f\n\
             trans: q (_,_) -> p\ntrans: p (_,_) -> q\ntrans: p (a,_) -> p\ntrans: q (_,_) -> f\n",
        )
        .unwrap();
        assert!(accepts(&m, &w("aaa")).unwrap());
        assert!(accepts(&m, &Word::empty()).unwrap());
        let t = accepting_run(&m, &w("aa")).unwrap().unwrap();
        assert!(t.replays(&m));
    }

    #[test]
    fn lambda_lambda_after_heads_meet() {
        let m = WKAutomaton::parse(
            "alphabet: a\nstates: q p f\ninitial: q\nfinal: f\ntrans: q (a,_) -> p\ntrans: p (_,_) -> f\n",
        )
        .unwrap();
        assert!(accepts(&m, &w("a")).unwrap());
    }

    #[test]
    fn weak_and_strong() {
        let m = zeros_ones();
        assert!(weak_accepts(&m, &w("0110")).unwrap());
        assert_eq!(weak_witness(&m, &w("0110")).unwrap(), Some(w("0011")));
        assert!(!strong_accepts(&m, &w("0110")).unwrap());
        assert_eq!(
            weak_accepts(&m, &Word::empty()).unwrap(),
            accepts(&m, &Word::empty()).unwrap()
        );

        let n1 = n1_ab();
        assert!(strong_accepts(&n1, &w("aa")).unwrap());
        assert!(!strong_accepts(&n1, &w("ab")).unwrap());
        assert_eq!(strong_counterexample(&n1, &w("ab")).unwrap(), Some(w("ba")));

        let aa = WKAutomaton::parse(
            "alphabet: a\nstates: q\ninitial: q\nfinal: q\ntrans: q (aa,_) -> q\n",
        )
        .unwrap();
        assert!(strong_accepts(&aa, &w("aaaa")).unwrap());
        assert!(!strong_accepts(&aa, &w("aaa")).unwrap());
    }

    #[test]
    fn ratio_automaton_weak() {
        let m = WKAutomaton::parse(
            "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\ntrans: q (0,11) -> q\ntrans: q (00,1) -> q\n",
        )
        .unwrap();
        // conjugate-class oracle: accepted linear words of length 5 don't exist (3 ∤ 5)
        assert!(!weak_accepts(&m, &w("10101")).unwrap());
        assert!(!weak_accepts(&m, &w("00111")).unwrap());
        assert!(accepts(&m, &w("000111")).unwrap());
        assert!(weak_accepts(&m, &w("011100")).unwrap());
    }

    #[test]
    fn patterns() {
        let n1 = n1_ab();
        let ps: Vec<String> = initial_patterns(&n1)
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(ps, ["_·a", "b·_"]);
        assert!(!pattern_fit_check(&n1, &w("ab")));
        assert!(pattern_fit_check(&n1, &w("aa")));

        let p4: BTreeSet<Pattern> = initial_patterns(&zeros_ones());
        assert!(p4.contains(&Pattern {
            suffix: w("_"),
            prefix: w("0")
        }));
        assert!(p4.contains(&Pattern {
            suffix: w("1"),
            prefix: w("_")
        }));

        let none = WKAutomaton::parse(
            "alphabet: a\nstates: q p\ninitial: q\nfinal: q\ntrans: p (a,_) -> q\n",
        )
        .unwrap();
        assert!(initial_patterns(&none).is_empty());

        let ll = WKAutomaton::parse(
            "alphabet: a b\nstates: q p\ninitial: q\nfinal: p\ntrans: q (_,_) -> p\n",
        )
        .unwrap();
        for s in ["_", "a", "ab", "bba"] {
            assert!(pattern_fit_check(&ll, &w(s)), "{s}");
        }
    }

    #[test]
    fn maximal_sublanguage_zeros_ones() {
        let got = maximal_necklace_sublanguage(&zeros_ones(), 3);
        let want: BTreeSet<Word> = ["_", "0", "1", "00", "11", "000", "111"]
            .iter()
            .map(|s| w(s))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn maximal_sublanguage_full() {
        let m = WKAutomaton::parse(
            "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\ntrans: q (0,_) -> q\ntrans: q (1,_) -> q\n",
        )
        .unwrap();
        assert_eq!(maximal_necklace_sublanguage(&m, 4).len(), 31);
    }
}
