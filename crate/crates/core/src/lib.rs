//! Shortlex normal forms for Simon's congruence.
//!
//! Two words are `~k`-equivalent when they have the same scattered subwords
//! of length at most `k`. This crate computes the shortest, lexicographically
//! least representative of the `~k`-class of a word in `O(|A| n)` time, for
//! any `k`, and decides `u ~k v` by comparing representatives.
//!
//! The computation assigns each position the lengths `(x, y)` of the shortest
//! rankers reaching it from the left and from the right. Positions with
//! `x + y > k + 1` are dropped in one right-to-left pass; runs of equal
//! attributes with `x + y = k + 1` are then sorted.
//!
//! ```
//! use simonk::{normalize, Word};
//!
//! let u = Word::from_text("bacbaabada").unwrap();
//! assert_eq!(normalize(&u, 3).word().to_text(), "bacabbda");
//! ```
//!
//! Coordinates are generic over the unsigned integer type ([`Coordinate`]);
//! counters saturate at `k + 2`, so `u8` suffices whenever `k <= 253`. The
//! aliases below fix the type to `u32`.
//!
//! The [`oracle`] and [`automaton`] modules hold independent exponential and
//! automaton-based deciders used to cross-check the main pipeline.

pub mod attributes;
pub mod automaton;
pub mod error;
pub mod normalizer;
pub mod oracle;
pub mod ranker;
pub mod word;

pub use attributes::Coordinate;
pub use error::{Error, Result};
pub use normalizer::{equivalent, SortBlock};
pub use ranker::{Direction, Ranker};
pub use word::{is_subword, lex_less, Alphabet, Letter, Position, Word};

/// Coordinate type used by the aliases below.
pub type Coord = u32;

pub type Attribute = attributes::Attribute<Coord>;
pub type AnnotatedWord = attributes::AnnotatedWord<Coord>;
pub type CounterBank = attributes::CounterBank<Coord>;
pub type NormalForm = normalizer::NormalForm<Coord>;
pub type Normalization = normalizer::Normalization<Coord>;

/// Shortlex normal form of `u` under `~k`, with `u32` coordinates.
///
/// # Panics
///
/// If `min(k, |u|) + 2` exceeds `u32::MAX`.
pub fn normalize(u: &Word, k: usize) -> NormalForm {
    normalizer::shortlex_normal_form::<Coord>(u, k).expect("word too long for u32 coordinates")
}
