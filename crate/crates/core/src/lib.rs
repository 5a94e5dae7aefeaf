//! Sensing 5'→3' Watson-Crick finite automata over linear words and necklaces.
//!
//! A sensing 5'→3' WK automaton has two heads: the left one reads the input
//! from its start, the right one from its end, and the computation ends when
//! they meet. On a circular word (a necklace) the cut point is free, which
//! gives two acceptance modes:
//!
//! * **weak**: some conjugate of the input is accepted;
//! * **strong**: every conjugate of the input is accepted.
//!
//! Modules:
//!
//! * [`word`], [`automaton`], [`grammar`]: domain types and text formats;
//! * [`engine`]: membership, accepting runs, weak/strong acceptance, patterns;
//! * [`necklace`]: conjugates, least rotations, cyclic closure;
//! * [`bridge`]: linear grammar ⇄ automaton conversion;
//! * [`oracles`]: membership predicates for the witness languages `O1`–`O10`;
//! * [`harness`]: bounded enumeration, oracle comparison, the witness suite
//!   and seeded random automata.
//!
//! ```
//! use necklace_wk::{engine, word::w, WKAutomaton};
//!
//! let m: WKAutomaton = "alphabet: 0 1\nstates: q\ninitial: q\nfinal: q\n\
//!                       trans: q (0,_) -> q\ntrans: q (_,1) -> q\n"
//!     .parse()
//!     .unwrap();
//! assert!(!engine::accepts(&m, &w("0110")).unwrap());
//! assert!(engine::weak_accepts(&m, &w("0110")).unwrap());
//! assert!(!engine::strong_accepts(&m, &w("0110")).unwrap());
//! ```

pub mod automaton;
pub mod bridge;
pub mod engine;
pub mod error;
pub mod grammar;
pub mod harness;
pub mod necklace;
pub mod oracles;
pub mod word;

pub use automaton::{classify, RestrictionFlags, StateId, Transition, WKAutomaton};
pub use error::{Error, Result};
pub use grammar::LinearGrammar;
pub use harness::Mode;
pub use necklace::Necklace;
pub use oracles::OracleId;
pub use word::{Alphabet, Symbol, Word};
