//! Ordered alphabets, words, positions and the scattered-subword relation.
//!
//! A [`Word`] stores letters as indices into its [`Alphabet`], so comparing two
//! [`Letter`]s compares them in alphabet order. Words are validated when they
//! are built; operations on them never re-check membership.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A letter, represented by its rank in the alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A 1-based position in a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position(usize);

impl Position {
    /// Returns `None` for `0`, which is not a position.
    pub fn new(index: usize) -> Option<Self> {
        (index > 0).then_some(Position(index))
    }

    /// Checks `1 <= index <= len`.
    pub fn checked(index: usize, len: usize) -> Result<Self> {
        if index == 0 || index > len {
            return Err(Error::InvalidPosition { position: index, len });
        }
        Ok(Position(index))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0
    }

    /// 0-based offset into slices.
    #[inline]
    pub fn offset(self) -> usize {
        self.0 - 1
    }

    /// The position `len + 1 - self` in the reversed word.
    #[inline]
    pub fn mirror(self, len: usize) -> Position {
        debug_assert!(self.0 <= len);
        Position(len + 1 - self.0)
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite, totally ordered set of single-byte symbols.
#[derive(Clone)]
pub struct Alphabet {
    symbols: Vec<u8>,
    rank: [Option<Letter>; 256],
}

impl Alphabet {
    /// Builds an alphabet whose order is the order of `symbols`.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.len() > 256 {
            return Err(Error::AlphabetTooLarge);
        }
        let mut rank = [None; 256];
        for (i, &b) in symbols.iter().enumerate() {
            if rank[b as usize].is_some() {
                return Err(Error::DuplicateLetter(b as char));
            }
            rank[b as usize] = Some(Letter(i as u8));
        }
        Ok(Alphabet {
            symbols: symbols.to_vec(),
            rank,
        })
    }

    /// Parses an explicit order such as `"cba"`.
    pub fn from_order(order: &str) -> Result<Self> {
        Alphabet::new(&single_bytes(order)?)
    }

    /// The distinct bytes occurring in `texts`, in ascending byte order.
    pub fn covering<'a, I>(texts: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut seen = [false; 256];
        for t in texts {
            for b in single_bytes(t)? {
                seen[b as usize] = true;
            }
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Alphabet::new(&symbols)
    }

    /// `{a, b, c, ...}` with `size` letters starting at `a`. Mostly for tests.
    pub fn first_letters(size: usize) -> Self {
        assert!(size <= 26, "first_letters supports at most 26 letters");
        let symbols: Vec<u8> = (b'a'..).take(size).collect();
        Alphabet::new(&symbols).expect("distinct")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn letter(&self, symbol: u8) -> Option<Letter> {
        self.rank[symbol as usize]
    }

    #[inline]
    pub fn symbol(&self, letter: Letter) -> u8 {
        self.symbols[letter.index()]
    }

    /// All letters in ascending order.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        (0..self.symbols.len()).map(|i| Letter(i as u8))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Alphabet {}

impl std::hash::Hash for Alphabet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet({:?})", String::from_utf8_lossy(&self.symbols))
    }
}

fn single_bytes(text: &str) -> Result<Vec<u8>> {
    match text.chars().find(|c| !c.is_ascii()) {
        Some(c) => Err(Error::MultiByteLetter(c)),
        None => Ok(text.as_bytes().to_vec()),
    }
}

/// A finite sequence of letters over a shared [`Alphabet`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    letters: Vec<Letter>,
}

impl Word {
    /// Parses `text` over `alphabet`; every byte must be a letter of it.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let bytes = single_bytes(text)?;
        let letters = bytes
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                alphabet.letter(b).ok_or(Error::NotInAlphabet {
                    letter: b as char,
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    /// Parses `text` over the alphabet of its own distinct bytes, ascending.
    pub fn from_text(text: &str) -> Result<Self> {
        let alphabet = Arc::new(Alphabet::covering([text])?);
        Word::parse(&alphabet, text)
    }

    /// Builds a word from letter ranks, checking each against `alphabet`.
    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: Vec<Letter>) -> Result<Self> {
        if let Some((i, l)) = letters.iter().enumerate().find(|(_, l)| l.index() >= alphabet.len()) {
            return Err(Error::NotInAlphabet {
                letter: l.0 as char,
                position: i + 1,
            });
        }
        Ok(Word {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    pub fn empty(alphabet: &Arc<Alphabet>) -> Self {
        Word {
            alphabet: Arc::clone(alphabet),
            letters: Vec::new(),
        }
    }

    /// Callers guarantee every letter is in range.
    pub(crate) fn from_trusted(alphabet: Arc<Alphabet>, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|l| l.index() < alphabet.len()));
        Word { alphabet, letters }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[inline]
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    #[inline]
    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// The label of position `p`.
    #[inline]
    pub fn at(&self, p: Position) -> Letter {
        self.letters[p.offset()]
    }

    pub fn positions(&self) -> impl DoubleEndedIterator<Item = Position> + ExactSizeIterator {
        (0..self.letters.len()).map(|i| Position(i + 1))
    }

    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        }
    }

    /// `self · other`; panics if the alphabets differ.
    pub fn concat(&self, other: &Word) -> Word {
        assert_same_alphabet(self, other);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        }
    }

    /// `self` repeated `times` times.
    pub fn repeat(&self, times: usize) -> Word {
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters: self.letters.repeat(times),
        }
    }

    /// The word with position `p` removed.
    pub fn without(&self, p: Position) -> Word {
        let mut letters = self.letters.clone();
        letters.remove(p.offset());
        Word {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        }
    }

    pub fn same_alphabet(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet
    }

    /// Shortlex order: shorter first, then lexicographic.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    pub fn to_text(&self) -> String {
        self.letters.iter().map(|&l| self.alphabet.symbol(l) as char).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_text())
    }
}

pub(crate) fn assert_same_alphabet(u: &Word, v: &Word) {
    assert!(
        u.same_alphabet(v),
        "words over different alphabets: {:?} vs {:?}",
        u.alphabet,
        v.alphabet
    );
}

/// `needle ≺ haystack`: greedy left-to-right matching.
pub fn is_subword(needle: &Word, haystack: &Word) -> bool {
    assert_same_alphabet(needle, haystack);
    is_subsequence(needle.letters(), haystack.letters())
}

pub(crate) fn is_subsequence(needle: &[Letter], haystack: &[Letter]) -> bool {
    let mut rest = haystack.iter();
    needle.iter().all(|l| rest.any(|h| h == l))
}

/// Strict lexicographic order on words of equal length.
pub fn lex_less(u: &Word, v: &Word) -> Result<bool> {
    if !u.same_alphabet(v) {
        return Err(Error::AlphabetMismatch);
    }
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(u.letters < v.letters)
}
