#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng;
use simonk::{Alphabet, Letter, Word};

pub fn alphabet(sigma: usize) -> Arc<Alphabet> {
    Arc::new(Alphabet::first_letters(sigma))
}

/// Every word of length `0..=max_len` over `alphabet`, in shortlex order.
pub fn all_words(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<Word> {
    let sigma = alphabet.len();
    let mut out = vec![Word::empty(alphabet)];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * sigma);
        for w in &layer {
            for a in alphabet.letters() {
                let mut e = w.clone();
                e.push(a);
                next.push(e);
            }
        }
        out.extend(next.iter().map(|l| Word::from_letters(alphabet, l.clone()).unwrap()));
        layer = next;
    }
    out
}

pub fn random_word<R: Rng>(rng: &mut R, alphabet: &Arc<Alphabet>, len: usize) -> Word {
    let sigma = alphabet.len() as u8;
    let letters = (0..len).map(|_| Letter(rng.gen_range(0..sigma))).collect();
    Word::from_letters(alphabet, letters).unwrap()
}

pub fn text(s: &str) -> Word {
    Word::parse(&alphabet(6), s).unwrap()
}
