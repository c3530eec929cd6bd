//! Rankers: sequences of "next a" (`X_a`) or "previous a" (`Y_a`) moves.
//!
//! Besides plain evaluation this module computes, in one left-to-right pass,
//! the predecessor DAG describing every minimal-length X-ranker of every
//! position, and the table of canonical rankers obtained by keeping only the
//! smallest predecessor. Y-variants are computed on the reversed word.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Position, Word};

/// Which way a ranker moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    /// Next occurrence, starting before the first position.
    X,
    /// Previous occurrence, starting after the last position.
    Y,
}

impl Direction {
    pub fn tag(self) -> char {
        match self {
            Direction::X => 'X',
            Direction::Y => 'Y',
        }
    }
}

/// A nonempty ranker. Modalities are kept in application order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ranker {
    direction: Direction,
    modalities: Vec<Letter>,
}

impl Ranker {
    pub fn new(direction: Direction, modalities: Vec<Letter>) -> Result<Self> {
        if modalities.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Ranker { direction, modalities })
    }

    /// The ranker defined by a word: `b1…bl` gives `X_b1…X_bl` and `Y_bl…Y_b1`.
    pub fn defined_by(direction: Direction, word: &Word) -> Result<Self> {
        let mut modalities = word.letters().to_vec();
        if direction == Direction::Y {
            modalities.reverse();
        }
        Ranker::new(direction, modalities)
    }

    #[inline]
    pub fn direction(&self) -> Direction {
        self.direction
    }

    #[inline]
    pub fn modalities(&self) -> &[Letter] {
        &self.modalities
    }

    #[allow(clippy::len_without_is_empty)]
    #[inline]
    pub fn len(&self) -> usize {
        self.modalities.len()
    }

    /// `self` followed by one more modality.
    pub fn then(&self, letter: Letter) -> Ranker {
        let mut modalities = self.modalities.clone();
        modalities.push(letter);
        Ranker {
            direction: self.direction,
            modalities,
        }
    }

    /// The position reached on `u`, or `None` when some step has no target.
    pub fn eval(&self, u: &Word) -> Option<Position> {
        self.visits(u).and_then(|v| v.last().copied())
    }

    /// Every position visited, in application order.
    pub fn visits(&self, u: &Word) -> Option<Vec<Position>> {
        let letters = u.letters();
        let mut visited = Vec::with_capacity(self.modalities.len());
        match self.direction {
            Direction::X => {
                // `cur` is the number of letters already passed.
                let mut cur = 0;
                for &m in &self.modalities {
                    let step = letters[cur..].iter().position(|&l| l == m)?;
                    cur += step + 1;
                    visited.push(Position::new(cur)?);
                }
            }
            Direction::Y => {
                // `cur` is one past the last letter still available.
                let mut cur = letters.len();
                for &m in &self.modalities {
                    cur = letters[..cur].iter().rposition(|&l| l == m)?;
                    visited.push(Position::new(cur + 1)?);
                }
            }
        }
        Some(visited)
    }

    /// Serialized form, e.g. `X:eac`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let mut s = String::with_capacity(self.modalities.len() + 2);
        s.push(self.direction.tag());
        s.push(':');
        s.extend(self.modalities.iter().map(|&l| alphabet.symbol(l) as char));
        s
    }

    /// Inverse of [`Ranker::render`].
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Self> {
        let syntax = || Error::RankerSyntax(text.to_string());
        let (tag, body) = text.split_once(':').ok_or_else(syntax)?;
        let direction = match tag {
            "X" => Direction::X,
            "Y" => Direction::Y,
            _ => return Err(syntax()),
        };
        let modalities = body
            .bytes()
            .enumerate()
            .map(|(i, b)| {
                alphabet.letter(b).ok_or(Error::NotInAlphabet {
                    letter: b as char,
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ranker::new(direction, modalities).map_err(|_| syntax())
    }

    /// Display adapter using `alphabet` for the letter symbols.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        DisplayRanker(self, alphabet)
    }
}

struct DisplayRanker<'a>(&'a Ranker, &'a Alphabet);

impl fmt::Display for DisplayRanker<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.render(self.1))
    }
}

pub fn eval_ranker(r: &Ranker, u: &Word) -> Option<Position> {
    r.eval(u)
}

/// Minimal-length X-rankers of every position, stored as predecessor sets.
///
/// The rankers reaching `i` with minimal length are `R_j · X_c` for `j` in
/// `predecessors(i)`, or just `X_c` when the set is empty.
#[derive(Debug, Clone)]
pub struct PredecessorDag {
    word: Word,
    x: Vec<usize>,
    preds: Vec<Vec<Position>>,
}

/// One pass with counters and per-letter candidate sets.
pub fn predecessor_dag(u: &Word) -> PredecessorDag {
    let sigma = u.alphabet().len();
    let mut counters = vec![1usize; sigma];
    let mut pending: Vec<Vec<Position>> = vec![Vec::new(); sigma];
    let mut x = Vec::with_capacity(u.len());
    let mut preds = Vec::with_capacity(u.len());

    for (p, &c) in u.positions().zip(u.letters()) {
        let c = c.index();
        x.push(counters[c]);
        preds.push(std::mem::replace(&mut pending[c], vec![p]));
        counters[c] += 1;
        let nc = counters[c];
        for a in 0..sigma {
            if a == c {
                continue;
            }
            if nc < counters[a] {
                counters[a] = nc;
                pending[a].clear();
                pending[a].push(p);
            } else if nc == counters[a] {
                pending[a].push(p);
            }
        }
    }
    PredecessorDag {
        word: u.clone(),
        x,
        preds,
    }
}

impl PredecessorDag {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x_coordinates(&self) -> &[usize] {
        &self.x
    }

    pub fn x(&self, p: Position) -> usize {
        self.x[p.offset()]
    }

    /// Ascending; empty means the ranker starts at `p`.
    pub fn predecessors(&self, p: Position) -> &[Position] {
        &self.preds[p.offset()]
    }

    /// Number of minimal-length rankers reaching each position, saturating.
    pub fn ranker_counts(&self) -> Vec<u128> {
        let mut counts: Vec<u128> = Vec::with_capacity(self.len());
        for ps in &self.preds {
            let c = if ps.is_empty() {
                1
            } else {
                ps.iter().fold(0u128, |acc, j| acc.saturating_add(counts[j.offset()]))
            };
            counts.push(c);
        }
        counts
    }

    /// Lazily unfolds the DAG from `p`.
    pub fn rankers(&self, p: Position) -> Rankers<'_> {
        Rankers {
            dag: self,
            stack: vec![(p, 0)],
        }
    }
}

/// Iterator over the minimal-length X-rankers of one position.
pub struct Rankers<'a> {
    dag: &'a PredecessorDag,
    // Bottom is the target position; each frame holds the next predecessor to try.
    stack: Vec<(Position, usize)>,
}

impl Iterator for Rankers<'_> {
    type Item = Ranker;

    fn next(&mut self) -> Option<Ranker> {
        while let Some(&mut (pos, ref mut next)) = self.stack.last_mut() {
            let preds = self.dag.predecessors(pos);
            if preds.is_empty() {
                let modalities = self.stack.iter().rev().map(|&(q, _)| self.dag.word.at(q)).collect();
                self.stack.pop();
                return Some(Ranker {
                    direction: Direction::X,
                    modalities,
                });
            }
            if *next < preds.len() {
                let child = preds[*next];
                *next += 1;
                self.stack.push((child, 0));
            } else {
                self.stack.pop();
            }
        }
        None
    }
}

/// Materializes the minimal-length rankers of `p`, refusing more than `cap`.
pub fn enumerate_rankers(dag: &PredecessorDag, p: Position, cap: usize) -> Result<BTreeSet<Ranker>> {
    Position::checked(p.get(), dag.len())?;
    if dag.ranker_counts()[p.offset()] > cap as u128 {
        return Err(Error::TooManyRankers { cap });
    }
    Ok(dag.rankers(p).collect())
}

/// Coordinates plus one predecessor pointer per position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalRankerTable {
    direction: Direction,
    word: Word,
    coord: Vec<usize>,
    // 0 means the canonical ranker starts at this position.
    pointer: Vec<usize>,
}

/// Canonical rankers of every position of `u`.
pub fn canonical_rankers(u: &Word, direction: Direction) -> CanonicalRankerTable {
    match direction {
        Direction::X => {
            let (coord, pointer) = canonical_pass(u.letters(), u.alphabet().len());
            CanonicalRankerTable {
                direction,
                word: u.clone(),
                coord,
                pointer,
            }
        }
        Direction::Y => {
            let n = u.len();
            let rev = u.reversed();
            let (mut coord, mut pointer) = canonical_pass(rev.letters(), u.alphabet().len());
            coord.reverse();
            pointer.reverse();
            for p in pointer.iter_mut().filter(|p| **p != 0) {
                *p = n + 1 - *p;
            }
            CanonicalRankerTable {
                direction,
                word: u.clone(),
                coord,
                pointer,
            }
        }
    }
}

fn canonical_pass(letters: &[Letter], sigma: usize) -> (Vec<usize>, Vec<usize>) {
    let mut counters = vec![1usize; sigma];
    let mut best = vec![0usize; sigma];
    let mut coord = Vec::with_capacity(letters.len());
    let mut pointer = Vec::with_capacity(letters.len());
    for (i, &c) in letters.iter().enumerate() {
        let c = c.index();
        coord.push(counters[c]);
        pointer.push(best[c]);
        counters[c] += 1;
        best[c] = i + 1;
        let nc = counters[c];
        for a in 0..sigma {
            if nc < counters[a] {
                counters[a] = nc;
                best[a] = i + 1;
            }
        }
    }
    (coord, pointer)
}

impl CanonicalRankerTable {
    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.coord.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coord.is_empty()
    }

    /// x-coordinates for an X-table, y-coordinates for a Y-table.
    pub fn coordinates(&self) -> &[usize] {
        &self.coord
    }

    pub fn coordinate(&self, p: Position) -> usize {
        self.coord[p.offset()]
    }

    /// Raw pointer array, 0 for "no predecessor".
    pub fn pointers(&self) -> &[usize] {
        &self.pointer
    }

    pub fn pointer(&self, p: Position) -> Option<Position> {
        Position::new(self.pointer[p.offset()])
    }

    /// Positions visited by the canonical ranker of `p`, in application order.
    pub fn chain(&self, p: Position) -> Vec<Position> {
        let mut chain = vec![p];
        let mut cur = p;
        while let Some(prev) = self.pointer(cur) {
            chain.push(prev);
            cur = prev;
        }
        chain.reverse();
        chain
    }

    pub fn ranker(&self, p: Position) -> Ranker {
        let modalities = self.chain(p).into_iter().map(|q| self.word.at(q)).collect();
        Ranker {
            direction: self.direction,
            modalities,
        }
    }
}

/// Reads the canonical ranker of `p` off a table.
pub fn read_ranker(table: &CanonicalRankerTable, p: Position) -> Ranker {
    table.ranker(p)
}

/// Largest word the exhaustive canonical-ranker oracle accepts by default.
pub const CANONICAL_ORACLE_BOUND: usize = 16;

/// The canonical X-ranker of `p` computed straight from its definition.
///
/// All minimal-length rankers reaching `p` are found by exhaustive search;
/// then, from the second-to-last prefix length down to 1, only those whose
/// prefix visits the smallest position are kept.
pub fn canonical_ranker_oracle(u: &Word, p: Position) -> Result<Ranker> {
    canonical_ranker_oracle_bounded(u, p, CANONICAL_ORACLE_BOUND)
}

pub fn canonical_ranker_oracle_bounded(u: &Word, p: Position, bound: usize) -> Result<Ranker> {
    if u.len() > bound {
        return Err(Error::OracleBound { len: u.len(), bound });
    }
    Position::checked(p.get(), u.len())?;
    let alphabet = u.alphabet();
    let mut candidates = Vec::new();
    for length in 1..=u.len() {
        collect_rankers(u, alphabet, &mut Vec::new(), length, p, &mut candidates);
        if !candidates.is_empty() {
            break;
        }
    }
    let length = candidates[0].0.len();
    for j in (1..length).rev() {
        let least = candidates
            .iter()
            .map(|(_, visits)| visits[j - 1])
            .min()
            .expect("nonempty");
        candidates.retain(|(_, visits)| visits[j - 1] == least);
    }
    debug_assert_eq!(candidates.len(), 1);
    let (modalities, _) = candidates.swap_remove(0);
    Ranker::new(Direction::X, modalities)
}

// Every defined X-ranker of exactly `length` modalities that ends on `target`.
fn collect_rankers(
    u: &Word,
    alphabet: &Arc<Alphabet>,
    prefix: &mut Vec<Letter>,
    length: usize,
    target: Position,
    out: &mut Vec<(Vec<Letter>, Vec<Position>)>,
) {
    if prefix.len() == length {
        let r = Ranker {
            direction: Direction::X,
            modalities: prefix.clone(),
        };
        if let Some(visits) = r.visits(u) {
            if visits.last() == Some(&target) {
                out.push((prefix.clone(), visits));
            }
        }
        return;
    }
    for a in alphabet.letters() {
        prefix.push(a);
        let r = Ranker {
            direction: Direction::X,
            modalities: prefix.clone(),
        };
        if r.eval(u).is_some() {
            collect_rankers(u, alphabet, prefix, length, target, out);
        }
        prefix.pop();
    }
}
