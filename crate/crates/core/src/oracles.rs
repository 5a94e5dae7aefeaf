//! Membership predicates for the witness languages of the hierarchy results.
//!
//! Each predicate works on the block structure of the word and is independent
//! of the automaton engine. Oracle ids are the strings `O1` … `O10`; `O9`
//! takes its two letter sets as `O9:<T1>:<T2>` (default `O9:a:b`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::necklace::rotations;
use crate::word::{Alphabet, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OracleId {
    /// `{1ⁱ0ʲ1ᵏ} ∪ {0ⁱ1ʲ0ᵏ}`
    O1,
    /// as O1 with `j ∈ {i+k, i+k+1}` resp. `i+k ∈ {j, j+1}`
    O2,
    /// as O1 with `j` resp. `i+k` even
    O3,
    /// as O1 with `i+k = 2n+m`, `j = 2m+n` for some `n, m ≥ 0`
    O4,
    /// `(11)*`
    O5,
    /// `0* + 0*10*`
    O6,
    /// `{0ⁱ1ʲ0ᵏ : j = i+k} ∪ {1ⁱ0ʲ1ᵏ : i+k = j}`
    O7,
    /// `{0ⁱ10ⁿ10ʲ : i+j = n, n ≥ 1}`
    O8,
    /// `T₁* ∪ T₂*`
    O9 { t1: Alphabet, t2: Alphabet },
    /// necklaces of `a* ∪ b* ∪ {aⁿbⁿ} ∪ {aⁿ⁺¹bⁿ} ∪ {bᵏaⁿbᵐ : n ∈ {k+m, k+m+1}}`
    O10,
}

impl OracleId {
    pub fn o9(t1: &str, t2: &str) -> Result<Self> {
        Ok(OracleId::O9 {
            t1: Alphabet::from_chars(t1)?,
            t2: Alphabet::from_chars(t2)?,
        })
    }

    /// The alphabet the predicate is defined over.
    pub fn alphabet(&self) -> Alphabet {
        match self {
            OracleId::O9 { t1, t2 } => {
                Alphabet::new(t1.declared().iter().chain(t2.declared()).copied())
            }
            OracleId::O10 => Alphabet::from_chars("ab").unwrap(),
            _ => Alphabet::from_chars("01").unwrap(),
        }
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        oracle(self, w)
    }

    /// Catalog of all ids, with O9 at its default letter sets.
    pub fn catalog() -> Vec<OracleId> {
        use OracleId::*;
        vec![
            O1,
            O2,
            O3,
            O4,
            O5,
            O6,
            O7,
            O8,
            OracleId::o9("a", "b").unwrap(),
            O10,
        ]
    }
}

impl fmt::Display for OracleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleId::O9 { t1, t2 } => {
                let s = |a: &Alphabet| {
                    a.declared()
                        .iter()
                        .map(|c| c.to_string())
                        .collect::<String>()
                };
                write!(f, "O9:{}:{}", s(t1), s(t2))
            }
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for OracleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        use OracleId::*;
        let unknown = || Error::UnknownOracle(s.to_string());
        Ok(match s {
            "O1" => O1,
            "O2" => O2,
            "O3" => O3,
            "O4" => O4,
            "O5" => O5,
            "O6" => O6,
            "O7" => O7,
            "O8" => O8,
            "O9" => OracleId::o9("a", "b")?,
            "O10" => O10,
            _ => {
                let rest = s.strip_prefix("O9:").ok_or_else(unknown)?;
                let (t1, t2) = rest.split_once(':').ok_or_else(unknown)?;
                if t1.is_empty() && t2.is_empty() {
                    return Err(unknown());
                }
                OracleId::o9(t1, t2).map_err(|_| unknown())?
            }
        })
    }
}

/// Splits `w` as `outerⁱ innerʲ outerᵏ` and returns `(i + k, j)`.
fn three_blocks(w: &Word, outer: char, inner: char) -> Option<(usize, usize)> {
    let runs = w.runs();
    let c = |r: &(Symbol, usize)| r.0.as_char();
    let ok = match runs.as_slice() {
        [] => true,
        [a] => c(a) == outer || c(a) == inner,
        [a, b] => (c(a) == outer && c(b) == inner) || (c(a) == inner && c(b) == outer),
        [a, b, d] => c(a) == outer && c(b) == inner && c(d) == outer,
        _ => false,
    };
    if !ok {
        return None;
    }
    let outer_len = runs.iter().filter(|r| c(r) == outer).map(|r| r.1).sum();
    let inner_len = runs.iter().filter(|r| c(r) == inner).map(|r| r.1).sum();
    Some((outer_len, inner_len))
}

/// Both block shapes of O1–O4 and O7. `cond(i + k, j)` is asked of the outer
/// and inner block lengths of whichever shape matches.
fn either_shape(
    w: &Word,
    cond_1_0_1: impl Fn(usize, usize) -> bool,
    cond_0_1_0: impl Fn(usize, usize) -> bool,
) -> bool {
    three_blocks(w, '1', '0').is_some_and(|(ik, j)| cond_1_0_1(ik, j))
        || three_blocks(w, '0', '1').is_some_and(|(ik, j)| cond_0_1_0(ik, j))
}

/// `∃ n, m ≥ 0: s = 2n + m ∧ t = 2m + n`, solved directly (determinant 3).
pub fn o4_solvable(s: usize, t: usize) -> bool {
    let (s, t) = (s as i64, t as i64);
    let (n3, m3) = (2 * s - t, 2 * t - s);
    n3 >= 0 && m3 >= 0 && n3 % 3 == 0 && m3 % 3 == 0
}

/// The displayed set of O10 (not itself closed under rotation).
fn o10_displayed(w: &Word) -> bool {
    let runs: Vec<(char, usize)> = w.runs().iter().map(|r| (r.0.as_char(), r.1)).collect();
    match runs.as_slice() {
        [] | [_] => true,
        [('a', n), ('b', m)] => n == m || *n == m + 1,
        [('b', k), ('a', n)] => *n == *k || *n == k + 1,
        [('b', k), ('a', n), ('b', m)] => *n == k + m || *n == k + m + 1,
        _ => false,
    }
}

pub fn oracle(id: &OracleId, w: &Word) -> Result<bool> {
    let alphabet = id.alphabet();
    if let Some(s) = w.symbols().iter().find(|s| !alphabet.contains(**s)) {
        return Err(Error::OracleAlphabet {
            oracle: id.to_string(),
            symbol: s.as_char(),
        });
    }
    let zero = Symbol::new('0').unwrap();
    let one = Symbol::new('1').unwrap();
    Ok(match id {
        OracleId::O1 => either_shape(w, |_, _| true, |_, _| true),
        OracleId::O2 => either_shape(
            w,
            |ik, j| j == ik || j == ik + 1,
            |ik, j| ik == j || ik == j + 1,
        ),
        OracleId::O3 => either_shape(w, |_, j| j % 2 == 0, |ik, _| ik % 2 == 0),
        OracleId::O4 => either_shape(w, o4_solvable, o4_solvable),
        OracleId::O5 => w.count(zero) == 0 && w.len().is_multiple_of(2),
        OracleId::O6 => w.count(one) <= 1,
        OracleId::O7 => either_shape(w, |ik, j| ik == j, |ik, j| j == ik),
        OracleId::O8 => {
            let pos: Vec<usize> = w
                .symbols()
                .iter()
                .enumerate()
                .filter(|(_, s)| **s == one)
                .map(|(p, _)| p)
                .collect();
            match pos.as_slice() {
                [first, second] => {
                    let i = *first;
                    let n = second - first - 1;
                    let j = w.len() - second - 1;
                    n >= 1 && i + j == n
                }
                _ => false,
            }
        }
        OracleId::O9 { t1, t2 } => {
            w.symbols().iter().all(|s| t1.contains(*s))
                || w.symbols().iter().all(|s| t2.contains(*s))
        }
        OracleId::O10 => rotations(w).any(|c| o10_displayed(&c)),
    })
}
