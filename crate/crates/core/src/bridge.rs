//! Conversions between linear grammars and sensing 5'→3' WK automata.
//!
//! Both directions are the state-per-nonterminal simulation: `A → uBv`
//! becomes a step reading `u` on the left head and `v` on the right head, and
//! terminating productions lead into a single fresh final state.

use crate::automaton::{StateId, Transition, WKAutomaton};
use crate::error::Result;
use crate::grammar::{LinearGrammar, NonterminalId, Production, Rhs};
use crate::word::Word;

fn fresh_state(taken: &[StateId]) -> StateId {
    let mut name = String::from("fin");
    let mut k = 0;
    while taken.iter().any(|s| s.as_str() == name) {
        k += 1;
        name = format!("fin{k}");
    }
    StateId::new(&name).expect("generated identifier")
}

/// Builds an automaton with `L(m) = L(g)`.
pub fn grammar_to_wk(g: &LinearGrammar) -> Result<WKAutomaton> {
    let mut states: Vec<StateId> = g
        .nonterminals()
        .iter()
        .map(|n| StateId::new(n.as_str()))
        .collect::<Result<_>>()?;
    let fin = fresh_state(&states);
    states.push(fin.clone());
    let state = |n: &NonterminalId| StateId::new(n.as_str());

    let mut transitions = Vec::with_capacity(g.productions().len());
    for p in g.productions() {
        let from = state(&p.head)?;
        transitions.push(match &p.rhs {
            Rhs::Terminal(u) => Transition::new(from, u.clone(), Word::empty(), fin.clone()),
            Rhs::Linear { left, next, right } => {
                Transition::new(from, left.clone(), right.clone(), state(next)?)
            }
        });
    }
    WKAutomaton::new(
        g.terminals().clone(),
        states,
        state(g.start())?,
        vec![fin],
        transitions,
    )
}

/// Builds a grammar with `L(g) = L(m)`: nonterminal `X_q` per state.
pub fn wk_to_grammar(m: &WKAutomaton) -> Result<LinearGrammar> {
    let nt = |q: &StateId| NonterminalId::new(&format!("X_{q}"));
    let nonterminals: Vec<NonterminalId> = m.states().iter().map(nt).collect::<Result<_>>()?;
    let mut productions = Vec::new();
    for t in m.transitions() {
        productions.push(Production::linear(
            nt(&t.from)?,
            t.left.clone(),
            nt(&t.to)?,
            t.right.clone(),
        ));
    }
    for f in m.finals() {
        productions.push(Production::terminal(nt(f)?, Word::empty()));
    }
    LinearGrammar::new(
        m.alphabet().clone(),
        nonterminals,
        nt(m.initial())?,
        productions,
    )
}
