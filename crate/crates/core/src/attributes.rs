//! Attribute computation: shortest X-/Y-ranker lengths per position.
//!
//! The left-to-right pass yields x-coordinates. The right-to-left pass yields
//! y-coordinates while dropping every position whose coordinates would sum to
//! more than `k + 1`. Both passes keep one counter per letter; counters
//! saturate at `k + 2` so they fit in narrow integer types.

use std::fmt;

use num_traits::{NumCast, PrimInt, Unsigned};

use crate::error::{Error, Result};
use crate::word::{Letter, Position, Word};

/// Unsigned integer type used for coordinates and counters.
pub trait Coordinate: PrimInt + Unsigned + fmt::Debug + fmt::Display + std::hash::Hash + Send + Sync + 'static {}

impl<T> Coordinate for T where
    T: PrimInt + Unsigned + fmt::Debug + fmt::Display + std::hash::Hash + Send + Sync + 'static
{
}

/// `(x, y)`: shortest X-ranker length and shortest Y-ranker length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Attribute<C = u32> {
    pub x: C,
    pub y: C,
}

impl<C: Coordinate> Attribute<C> {
    pub fn new(x: C, y: C) -> Self {
        Attribute { x, y }
    }

    /// `x + y`, saturating at the type's maximum.
    pub fn sum(&self) -> C {
        self.x.checked_add(&self.y).unwrap_or_else(C::max_value)
    }

    /// Converts into another coordinate type; `None` if a value does not fit.
    pub fn cast<D: Coordinate>(self) -> Option<Attribute<D>> {
        Some(Attribute {
            x: NumCast::from(self.x)?,
            y: NumCast::from(self.y)?,
        })
    }
}

impl<C: fmt::Display> fmt::Display for Attribute<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// One counter per letter with `n ⊕ m = min(cap, n + m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterBank<C = u32> {
    counts: Vec<C>,
    cap: C,
}

impl<C: Coordinate> CounterBank<C> {
    /// Counters for `sigma` letters saturating at `k + 2`.
    pub fn saturating_at(sigma: usize, k: usize) -> Result<Self> {
        let bound = k
            .checked_add(2)
            .ok_or(Error::CoordinateOverflow { bound: usize::MAX })?;
        let cap = <C as NumCast>::from(bound).ok_or(Error::CoordinateOverflow { bound })?;
        Ok(CounterBank {
            counts: vec![C::one(); sigma],
            cap,
        })
    }

    /// Counters saturating only at the type's maximum.
    pub fn unbounded(sigma: usize) -> Self {
        CounterBank {
            counts: vec![C::one(); sigma],
            cap: C::max_value(),
        }
    }

    #[inline]
    pub fn cap(&self) -> C {
        self.cap
    }

    #[inline]
    pub fn get(&self, letter: Letter) -> C {
        self.counts[letter.index()]
    }

    pub fn counts(&self) -> &[C] {
        &self.counts
    }

    /// Accounts for one more occurrence of `letter`: bumps its counter by
    /// one and lowers every other counter to that value.
    #[inline]
    pub fn advance(&mut self, letter: Letter) {
        let c = letter.index();
        let bumped = self.counts[c].saturating_add(C::one()).min(self.cap);
        self.counts[c] = bumped;
        for n in self.counts.iter_mut() {
            *n = (*n).min(bumped);
        }
    }

    /// Reads the counter of `letter`, then advances past it.
    #[inline]
    pub fn step(&mut self, letter: Letter) -> C {
        let value = self.get(letter);
        self.advance(letter);
        value
    }
}

/// Saturated x-coordinates of `u`; coordinates above `k + 1` read as `k + 2`.
pub fn x_coordinates<C: Coordinate>(u: &Word, k: usize) -> Result<Vec<C>> {
    // Coordinates never exceed |u|, so bounds beyond it change nothing.
    let k = k.min(u.len());
    let mut bank = CounterBank::<C>::saturating_at(u.alphabet().len(), k)?;
    Ok(u.letters().iter().map(|&c| bank.step(c)).collect())
}

/// Exact x-coordinates, no saturation.
pub fn x_coordinates_exact(u: &Word) -> Vec<usize> {
    let mut bank = CounterBank::<usize>::unbounded(u.alphabet().len());
    u.letters().iter().map(|&c| bank.step(c)).collect()
}

/// Exact y-coordinates: the x pass on the reversed word, read back to front.
pub fn y_coordinates_exact(u: &Word) -> Vec<usize> {
    let mut bank = CounterBank::<usize>::unbounded(u.alphabet().len());
    let mut y: Vec<usize> = u.letters().iter().rev().map(|&c| bank.step(c)).collect();
    y.reverse();
    y
}

/// Exact attributes of `u` itself, without any deletion.
pub fn attributes(u: &Word) -> Vec<Attribute<usize>> {
    x_coordinates_exact(u)
        .into_iter()
        .zip(y_coordinates_exact(u))
        .map(|(x, y)| Attribute { x, y })
        .collect()
}

/// A word after the right-to-left pass: x for every position, y for the
/// survivors, and a deletion mark for the rest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnotatedWord<C = u32> {
    word: Word,
    k: usize,
    x: Vec<C>,
    // Meaningless where `deleted` is set.
    y: Vec<C>,
    deleted: Vec<bool>,
}

/// Right-to-left pass assigning y-coordinates and marking deletions.
///
/// Position `i` with label `c` survives iff `x_i + n_c <= k + 1`; only a
/// survivor advances the counters, so each assigned `y` is the y-coordinate
/// in the word with all marked positions removed.
pub fn y_coordinates_with_deletion<C: Coordinate>(u: &Word, x: &[C], k: usize) -> Result<AnnotatedWord<C>> {
    assert_eq!(x.len(), u.len(), "x-coordinates must cover the word");
    let n = u.len();
    let limit_k = k.min(n);
    let mut bank = CounterBank::<C>::saturating_at(u.alphabet().len(), limit_k)?;
    // k + 1, which fits because k + 2 does.
    let limit = bank.cap() - C::one();
    let mut y = vec![C::zero(); n];
    let mut deleted = vec![false; n];
    for i in (0..n).rev() {
        let c = u.letters()[i];
        let nc = bank.get(c);
        // x_i + n_c <= k + 1 without overflowing
        if nc <= limit && x[i] <= limit - nc {
            y[i] = nc;
            bank.advance(c);
        } else {
            deleted[i] = true;
        }
    }
    Ok(AnnotatedWord {
        word: u.clone(),
        k,
        x: x.to_vec(),
        y,
        deleted,
    })
}

/// Both passes over `u` at parameter `k`.
pub fn annotate<C: Coordinate>(u: &Word, k: usize) -> Result<AnnotatedWord<C>> {
    let x = x_coordinates::<C>(u, k)?;
    y_coordinates_with_deletion(u, &x, k)
}

impl<C: Coordinate> AnnotatedWord<C> {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn x(&self, p: Position) -> C {
        self.x[p.offset()]
    }

    /// `None` for a marked position.
    pub fn y(&self, p: Position) -> Option<C> {
        (!self.deleted[p.offset()]).then(|| self.y[p.offset()])
    }

    pub fn is_deleted(&self, p: Position) -> bool {
        self.deleted[p.offset()]
    }

    pub fn deletion_marks(&self) -> &[bool] {
        &self.deleted
    }

    /// Positions (in the input word) marked for deletion.
    pub fn deleted_positions(&self) -> Vec<Position> {
        self.word.positions().filter(|&p| self.deleted[p.offset()]).collect()
    }

    /// Positions (in the input word) that survive.
    pub fn surviving_positions(&self) -> Vec<Position> {
        self.word.positions().filter(|&p| !self.deleted[p.offset()]).collect()
    }

    /// Letters and attributes of the survivors, in order.
    pub fn survivors(&self) -> impl Iterator<Item = (Letter, Attribute<C>)> + '_ {
        (0..self.len()).filter(|&i| !self.deleted[i]).map(|i| {
            (
                self.word.letters()[i],
                Attribute {
                    x: self.x[i],
                    y: self.y[i],
                },
            )
        })
    }

    /// The word with every marked position removed.
    pub fn reduced_word(&self) -> Word {
        let letters = self.survivors().map(|(l, _)| l).collect();
        Word::from_trusted(self.word.alphabet().clone(), letters)
    }

    pub fn surviving_attributes(&self) -> Vec<Attribute<C>> {
        self.survivors().map(|(_, a)| a).collect()
    }
}
