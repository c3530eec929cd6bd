//! Exponential reference implementations, used as ground truth in tests.
//!
//! Nothing here shares code with the linear-time pipeline. Every entry point
//! checks an explicit size guard and refuses instead of truncating.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ranker::{Direction, Ranker};
use crate::word::{assert_same_alphabet, is_subsequence, Alphabet, Letter, Position, Word};

/// Size guards for the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    /// Upper bound on the estimated number of subwords materialized.
    pub guard: u128,
    /// Longest input accepted by [`Oracle::naive_shortlex`].
    pub max_len: usize,
    /// Largest alphabet accepted by [`Oracle::naive_shortlex`].
    pub max_alphabet: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            guard: 1_000_000,
            max_len: 10,
            max_alphabet: 4,
        }
    }
}

/// The subwords of length at most `k` of some word, `ε` included, sorted shortlex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordSet {
    alphabet: Arc<Alphabet>,
    k: usize,
    words: Vec<Vec<Letter>>,
}

impl SubwordSet {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Never true: `ε` is always a member.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search_by(|x| shortlex(x, w.letters())).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Word> + '_ {
        self.words
            .iter()
            .map(|l| Word::from_trusted(self.alphabet.clone(), l.clone()))
    }

    pub fn raw(&self) -> &[Vec<Letter>] {
        &self.words
    }
}

fn shortlex(a: &[Letter], b: &[Letter]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Upper bound on the subwords of length `<= k` of a length-`n` word over `sigma` letters.
pub fn subword_estimate(n: usize, sigma: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut power: u128 = 1;
    for l in 0..=k.min(n) {
        total = total.saturating_add(power.min(binomial(n, l)));
        power = power.saturating_mul(sigma as u128);
    }
    total
}

impl Oracle {
    /// No guards at all.
    pub fn unguarded() -> Self {
        Oracle {
            guard: u128::MAX,
            max_len: usize::MAX,
            max_alphabet: usize::MAX,
        }
    }

    fn check_guard(&self, u: &Word, k: usize) -> Result<()> {
        let estimate = subword_estimate(u.len(), u.alphabet().len(), k);
        if estimate > self.guard {
            return Err(Error::GuardExceeded {
                estimate,
                guard: self.guard,
            });
        }
        Ok(())
    }

    /// `{w : w ≺ u, |w| <= k}` by extending every known subword with each letter.
    pub fn subwords_up_to(&self, u: &Word, k: usize) -> Result<SubwordSet> {
        self.check_guard(u, k)?;
        let mut seen: HashSet<Vec<Letter>> = HashSet::new();
        seen.insert(Vec::new());
        let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
        for &a in u.letters() {
            let mut fresh = Vec::new();
            for w in frontier.iter().filter(|w| w.len() < k) {
                let mut ext = w.clone();
                ext.push(a);
                if !seen.contains(&ext) {
                    seen.insert(ext.clone());
                    fresh.push(ext);
                }
            }
            frontier.extend(fresh);
        }
        let mut words: Vec<Vec<Letter>> = seen.into_iter().collect();
        words.sort_by(|a, b| shortlex(a, b));
        Ok(SubwordSet {
            alphabet: u.alphabet().clone(),
            k,
            words,
        })
    }

    pub fn naive_equivalent(&self, u: &Word, v: &Word, k: usize) -> Result<bool> {
        assert_same_alphabet(u, v);
        Ok(self.subwords_up_to(u, k)?.words == self.subwords_up_to(v, k)?.words)
    }

    /// First word in shortlex order over the whole alphabet that is `~k` to `u`.
    pub fn naive_shortlex(&self, u: &Word, k: usize) -> Result<Word> {
        if u.len() > self.max_len {
            return Err(Error::OracleBound {
                len: u.len(),
                bound: self.max_len,
            });
        }
        let sigma = u.alphabet().len();
        if sigma > self.max_alphabet {
            return Err(Error::OracleAlphabet {
                size: sigma,
                bound: self.max_alphabet,
            });
        }
        let target = self.subwords_up_to(u, k)?;
        for len in 0..=u.len() {
            let mut candidate = vec![Letter(0); len];
            loop {
                // Cheap necessary condition first: every target subword occurs.
                if target.words.iter().all(|t| is_subsequence(t, &candidate)) {
                    let w = Word::from_trusted(u.alphabet().clone(), candidate.clone());
                    if self.subwords_up_to(&w, k)?.words == target.words {
                        return Ok(w);
                    }
                }
                if !odometer(&mut candidate, sigma) {
                    break;
                }
            }
        }
        unreachable!("u itself is a candidate")
    }

    /// Shortest, then lexicographically least, word of length `<= k` that is
    /// a subword of exactly one of `u`, `v`.
    pub fn distinguishing_subword(&self, u: &Word, v: &Word, k: usize) -> Result<Option<Word>> {
        assert_same_alphabet(u, v);
        let su = self.subwords_up_to(u, k)?;
        let sv = self.subwords_up_to(v, k)?;
        let only_u = su
            .words
            .iter()
            .find(|w| sv.words.binary_search_by(|x| shortlex(x, w)).is_err());
        let only_v = sv
            .words
            .iter()
            .find(|w| su.words.binary_search_by(|x| shortlex(x, w)).is_err());
        let best = match (only_u, only_v) {
            (Some(a), Some(b)) => Some(if shortlex(a, b).is_le() { a } else { b }),
            (a, b) => a.or(b),
        };
        Ok(best.map(|l| Word::from_trusted(u.alphabet().clone(), l.clone())))
    }
}

// Next word of the same length in lexicographic order; false after the last.
fn odometer(word: &mut [Letter], sigma: usize) -> bool {
    for slot in word.iter_mut().rev() {
        if slot.index() + 1 < sigma {
            slot.0 += 1;
            return true;
        }
        slot.0 = 0;
    }
    false
}

pub fn subwords_up_to(u: &Word, k: usize) -> Result<SubwordSet> {
    Oracle::default().subwords_up_to(u, k)
}

pub fn naive_equivalent(u: &Word, v: &Word, k: usize) -> Result<bool> {
    Oracle::default().naive_equivalent(u, v, k)
}

pub fn naive_shortlex(u: &Word, k: usize) -> Result<Word> {
    Oracle::default().naive_shortlex(u, k)
}

pub fn distinguishing_subword(u: &Word, v: &Word, k: usize) -> Result<Option<Word>> {
    Oracle::default().distinguishing_subword(u, v, k)
}

/// Length of a shortest ranker of `direction` reaching `p`, by breadth-first
/// search over rankers. Rankers landing on an already reached position are
/// not extended further.
pub fn shortest_ranker_length(u: &Word, p: Position, direction: Direction) -> Result<usize> {
    Position::checked(p.get(), u.len())?;
    let mut reached = vec![false; u.len() + 1];
    let mut queue: VecDeque<Option<Ranker>> = VecDeque::from([None]);
    while let Some(r) = queue.pop_front() {
        for a in u.alphabet().letters() {
            let next = match &r {
                None => Ranker::new(direction, vec![a]).expect("nonempty"),
                Some(r) => r.then(a),
            };
            let Some(q) = next.eval(u) else { continue };
            if q == p {
                return Ok(next.len());
            }
            if !reached[q.get()] {
                reached[q.get()] = true;
                queue.push_back(Some(next));
            }
        }
    }
    unreachable!("every position is reachable")
}
