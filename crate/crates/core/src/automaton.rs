//! The DFA accepting the subwords of `u` of length at most `k`.
//!
//! States are pairs `(ℓ, i)`: `ℓ` moves taken so far and the current
//! position `i`. Reading `a` from `(ℓ, i)` with `ℓ < k` goes to `(ℓ + 1, j)`
//! where `j` is the next `a`-position after `i`. Everything else falls into a
//! rejecting sink. Only states reachable from `(0, 0)` are built.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{assert_same_alphabet, Alphabet, Letter, Word};

pub type StateId = u32;

/// The implicit rejecting state.
pub const SINK: StateId = StateId::MAX;

#[derive(Debug, Clone)]
pub struct SubwordDfa {
    alphabet: Arc<Alphabet>,
    k: usize,
    // (moves, position) per state; state 0 is (0, 0).
    states: Vec<(usize, usize)>,
    // Row-major, one row of `sigma` successors per state.
    delta: Vec<StateId>,
}

/// `next[i * sigma + a]` = smallest `a`-position greater than `i`, or 0.
fn next_occurrence_table(u: &Word) -> Vec<usize> {
    let sigma = u.alphabet().len();
    let n = u.len();
    let mut next = vec![0usize; (n + 1) * sigma];
    for i in (0..n).rev() {
        let (head, tail) = next.split_at_mut((i + 1) * sigma);
        head[i * sigma..].copy_from_slice(&tail[..sigma]);
        head[i * sigma + u.letters()[i].index()] = i + 1;
    }
    next
}

pub fn build_subword_dfa(u: &Word, k: usize) -> SubwordDfa {
    let sigma = u.alphabet().len();
    let next = next_occurrence_table(u);
    let mut ids: HashMap<(usize, usize), StateId> = HashMap::new();
    let mut states = vec![(0usize, 0usize)];
    ids.insert((0, 0), 0);
    let mut delta = Vec::new();
    let mut s = 0;
    while s < states.len() {
        let (level, pos) = states[s];
        for a in 0..sigma {
            let j = next[pos * sigma + a];
            let target = if level < k && j != 0 {
                *ids.entry((level + 1, j)).or_insert_with(|| {
                    states.push((level + 1, j));
                    (states.len() - 1) as StateId
                })
            } else {
                SINK
            };
            delta.push(target);
        }
        s += 1;
    }
    SubwordDfa {
        alphabet: u.alphabet().clone(),
        k,
        states,
        delta,
    }
}

impl SubwordDfa {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// Non-sink states.
    pub fn live_states(&self) -> usize {
        self.states.len()
    }

    /// Live states plus the sink.
    pub fn state_count(&self) -> usize {
        self.states.len() + 1
    }

    /// `(moves, position)` of a live state.
    pub fn label(&self, s: StateId) -> (usize, usize) {
        self.states[s as usize]
    }

    #[inline]
    pub fn step(&self, s: StateId, a: Letter) -> StateId {
        if s == SINK {
            SINK
        } else {
            self.delta[s as usize * self.alphabet.len() + a.index()]
        }
    }

    pub fn run(&self, w: &[Letter]) -> StateId {
        w.iter().fold(0, |s, &a| self.step(s, a))
    }

    /// Every live state is final.
    pub fn accepts(&self, w: &Word) -> bool {
        assert_eq!(**w.alphabet(), *self.alphabet, "word over a different alphabet");
        self.run(w.letters()) != SINK
    }

    /// Live transitions as `(from, letter, to)`.
    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        let sigma = self.alphabet.len();
        self.delta
            .iter()
            .enumerate()
            .filter(|(_, &t)| t != SINK)
            .map(move |(idx, &t)| ((idx / sigma) as StateId, Letter((idx % sigma) as u8), t))
    }

    /// Graphviz rendering; the sink is omitted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph subwords {\n  rankdir=LR;\n  node [shape=doublecircle];\n");
        for (id, (l, i)) in self.states.iter().enumerate() {
            let _ = writeln!(out, "  s{id} [label=\"({l},{i})\"];");
        }
        for (from, a, to) in self.transitions() {
            let _ = writeln!(
                out,
                "  s{from} -> s{to} [label=\"{}\"];",
                self.alphabet.symbol(a) as char
            );
        }
        out.push_str("}\n");
        out
    }
}

pub fn dfa_accepts(d: &SubwordDfa, w: &Word) -> bool {
    d.accepts(w)
}

/// Default bound on product states explored.
pub const PRODUCT_BUDGET: u128 = 50_000_000;

/// `u ~k v` by searching the product automaton for a pair of states where
/// exactly one side is the sink.
pub fn dfa_equivalent(u: &Word, v: &Word, k: usize) -> Result<bool> {
    Ok(dfa_witness(u, v, k, PRODUCT_BUDGET)?.is_none())
}

/// The shortlex-least word accepted by exactly one of the two automata.
///
/// Breadth-first search expanding letters in ascending order discovers
/// product states along shortlex-least paths, so the first disagreement
/// found is the least witness.
pub fn dfa_witness(u: &Word, v: &Word, k: usize, budget: u128) -> Result<Option<Word>> {
    assert_same_alphabet(u, v);
    let du = build_subword_dfa(u, k);
    let dv = build_subword_dfa(v, k);
    let needed = du.state_count() as u128 * dv.state_count() as u128;
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(product_search(&du, &dv).map(|letters| Word::from_trusted(u.alphabet().clone(), letters)))
}

fn product_search(du: &SubwordDfa, dv: &SubwordDfa) -> Option<Vec<Letter>> {
    let sigma = du.alphabet.len();
    // Parent pointers for path reconstruction: pair -> (parent pair, letter).
    let mut parent: HashMap<(StateId, StateId), ((StateId, StateId), Letter)> = HashMap::new();
    let start = (0, 0);
    let mut queue = VecDeque::from([start]);
    let mut seen = std::collections::HashSet::from([start]);
    while let Some(pair @ (p, q)) = queue.pop_front() {
        for a in (0..sigma).map(|a| Letter(a as u8)) {
            let succ = (du.step(p, a), dv.step(q, a));
            if !seen.insert(succ) {
                continue;
            }
            parent.insert(succ, (pair, a));
            if (succ.0 == SINK) != (succ.1 == SINK) {
                let mut path = Vec::new();
                let mut cur = succ;
                while cur != start {
                    let (prev, letter) = parent[&cur];
                    path.push(letter);
                    cur = prev;
                }
                path.reverse();
                return Some(path);
            }
            if succ != (SINK, SINK) {
                queue.push_back(succ);
            }
        }
    }
    None
}
