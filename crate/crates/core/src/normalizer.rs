//! Shortlex normal forms under `~k` and the equivalence test built on them.
//!
//! The pipeline is: x pass, y pass with deletion, then sorting every maximal
//! run of positions that share one attribute `(x, y)` with `x + y = k + 1`.
//! Such a run holds each letter at most once, so sorting is a presence scan
//! over the alphabet.

use crate::attributes::{annotate, attributes, AnnotatedWord, Attribute, Coordinate};
use crate::error::{Error, Result};
use crate::word::{assert_same_alphabet, Letter, Position, Word};

/// A maximal run `start..=end` of equal attributes summing to `k + 1`,
/// in positions of the reduced word. Runs of length one are not reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SortBlock {
    pub start: Position,
    pub end: Position,
}

impl SortBlock {
    pub fn len(&self) -> usize {
        self.end.get() - self.start.get() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// The shortlex-least word of a `~k` class together with its attributes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<C = u32> {
    word: Word,
    attributes: Vec<Attribute<C>>,
    k: usize,
}

impl<C: Coordinate> NormalForm<C> {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn into_word(self) -> Word {
        self.word
    }

    pub fn attributes(&self) -> &[Attribute<C>] {
        &self.attributes
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Every intermediate stage of one normalization.
#[derive(Debug, Clone)]
pub struct Normalization<C = u32> {
    /// `None` when `k > |u|` and the input is returned as is.
    pub annotated: Option<AnnotatedWord<C>>,
    pub blocks: Vec<SortBlock>,
    pub normal_form: NormalForm<C>,
}

pub fn shortlex_normal_form<C: Coordinate>(u: &Word, k: usize) -> Result<NormalForm<C>> {
    Ok(normalize_traced(u, k)?.normal_form)
}

/// Like [`shortlex_normal_form`] but keeps the annotated word and the blocks.
pub fn normalize_traced<C: Coordinate>(u: &Word, k: usize) -> Result<Normalization<C>> {
    if k > u.len() {
        // The class of u is {u}.
        let attributes = attributes(u)
            .into_iter()
            .map(|a| a.cast::<C>().ok_or(Error::CoordinateOverflow { bound: u.len() }))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Normalization {
            annotated: None,
            blocks: Vec::new(),
            normal_form: NormalForm {
                word: u.clone(),
                attributes,
                k,
            },
        });
    }
    let annotated = annotate::<C>(u, k)?;
    let (letters, attributes) = annotated.survivors().unzip::<_, _, Vec<_>, Vec<_>>();
    let blocks = find_sort_blocks(&attributes, k);
    let letters = sort_letters(letters, &blocks, u.alphabet().len());
    let word = Word::from_trusted(u.alphabet().clone(), letters);
    Ok(Normalization {
        annotated: Some(annotated),
        blocks,
        normal_form: NormalForm { word, attributes, k },
    })
}

/// Maximal runs (length ≥ 2) of one attribute with `x + y = k + 1`.
pub fn find_sort_blocks<C: Coordinate>(attributes: &[Attribute<C>], k: usize) -> Vec<SortBlock> {
    let on_boundary = |a: &Attribute<C>| {
        let (x, y) = (
            a.x.to_usize().unwrap_or(usize::MAX),
            a.y.to_usize().unwrap_or(usize::MAX),
        );
        x.checked_add(y) == k.checked_add(1)
    };
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < attributes.len() {
        let mut j = i + 1;
        if on_boundary(&attributes[i]) {
            while j < attributes.len() && attributes[j] == attributes[i] {
                j += 1;
            }
            if j - i >= 2 {
                blocks.push(SortBlock {
                    start: Position::new(i + 1).expect("1-based"),
                    end: Position::new(j).expect("1-based"),
                });
            }
        }
        i = j;
    }
    blocks
}

fn sort_letters(mut letters: Vec<Letter>, blocks: &[SortBlock], sigma: usize) -> Vec<Letter> {
    let mut present = vec![false; sigma];
    for b in blocks {
        let run = &mut letters[b.start.offset()..b.end.get()];
        let (mut lo, mut hi) = (usize::MAX, 0);
        for l in run.iter() {
            debug_assert!(!present[l.index()], "letter repeated inside a sort block");
            present[l.index()] = true;
            lo = lo.min(l.index());
            hi = hi.max(l.index());
        }
        let mut out = run.iter_mut();
        for (idx, slot) in present.iter_mut().enumerate().take(hi + 1).skip(lo) {
            if std::mem::take(slot) {
                *out.next().expect("block length") = Letter(idx as u8);
            }
        }
    }
    letters
}

/// Sorts the blocks of an annotated word after dropping its marked positions.
///
/// The annotated word must come from the deletion pass, so that every
/// survivor satisfies `x + y <= k + 1`.
pub fn sort_blocks<C: Coordinate>(aw: &AnnotatedWord<C>) -> Word {
    let (letters, attributes) = aw.survivors().unzip::<_, _, Vec<_>, Vec<_>>();
    let blocks = find_sort_blocks(&attributes, aw.k());
    let letters = sort_letters(letters, &blocks, aw.word().alphabet().len());
    Word::from_trusted(aw.word().alphabet().clone(), letters)
}

/// Normal form word computed with the narrowest counter type that fits.
pub fn normal_word(u: &Word, k: usize) -> Word {
    // Counters reach at most min(k, |u|) + 2, and exact attributes at most |u|.
    let bound = k.min(u.len()).saturating_add(2);
    let nf = if bound <= u8::MAX as usize {
        shortlex_normal_form::<u8>(u, k).map(NormalForm::into_word)
    } else if bound <= u16::MAX as usize {
        shortlex_normal_form::<u16>(u, k).map(NormalForm::into_word)
    } else {
        shortlex_normal_form::<u64>(u, k).map(NormalForm::into_word)
    };
    nf.expect("counter type chosen to fit")
}

/// `u ~k v`, decided by comparing normal forms.
pub fn equivalent(u: &Word, v: &Word, k: usize) -> bool {
    assert_same_alphabet(u, v);
    normal_word(u, k).letters() == normal_word(v, k).letters()
}
