//! Circular words: conjugate classes, least rotations and cyclic closure.

use std::collections::BTreeSet;
use std::fmt;

use crate::word::Word;

/// A conjugate class, identified by its lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Necklace {
    canon: Word,
}

impl Necklace {
    pub fn of(w: &Word) -> Self {
        canonical(w)
    }

    pub fn canon(&self) -> &Word {
        &self.canon
    }

    pub fn len(&self) -> usize {
        self.canon.len()
    }

    pub fn is_empty(&self) -> bool {
        self.canon.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        w.len() == self.canon.len() && canonical(w) == *self
    }

    pub fn members(&self) -> BTreeSet<Word> {
        conjugates(&self.canon)
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})°", self.canon)
    }
}

/// Smallest `p` such that `w` is a power of its length-`p` prefix.
/// Zero for the empty word.
pub fn primitive_period<T: PartialEq>(w: &[T]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // prefix function
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Booth's algorithm: start index of the least rotation, in O(n).
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &s[i % n];
    let mut fail: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = fail[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = fail[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    k % n
}

/// Distinct conjugates `vu` of `w = uv`. `conjugates(λ) = {λ}`.
pub fn conjugates(w: &Word) -> BTreeSet<Word> {
    if w.is_empty() {
        return BTreeSet::from([Word::empty()]);
    }
    let p = primitive_period(w.symbols());
    (0..p).map(|k| w.rotate(k)).collect()
}

/// The distinct rotations of `w` in rotation order `w, w[1..]w[..1], …`.
pub fn rotations(w: &Word) -> impl Iterator<Item = Word> + '_ {
    let p = primitive_period(w.symbols()).max(1);
    (0..p).map(move |k| w.rotate(k))
}

pub fn canonical(w: &Word) -> Necklace {
    Necklace {
        canon: w.rotate(least_rotation(w.symbols())),
    }
}

pub fn cyclic_closure<'a>(words: impl IntoIterator<Item = &'a Word>) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for w in words {
        out.extend(conjugates(w));
    }
    out
}

pub fn is_cyclically_closed(words: &BTreeSet<Word>) -> bool {
    words
        .iter()
        .all(|w| rotations(w).all(|c| words.contains(&c)))
}

/// Words of `words` all of whose conjugates are in `words`: the largest
/// cyclically closed subset.
pub fn maximal_closed_subset(words: &BTreeSet<Word>) -> BTreeSet<Word> {
    words
        .iter()
        .filter(|w| rotations(w).all(|c| words.contains(&c)))
        .cloned()
        .collect()
}

/// One canonical representative per conjugate class present in `words`.
pub fn necklaces_of<'a>(words: impl IntoIterator<Item = &'a Word>) -> BTreeSet<Necklace> {
    words.into_iter().map(canonical).collect()
}
