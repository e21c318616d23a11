// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

use super::MAX_LEVEL;

/// De Bruijn automaton on the binary words of length `n`: `xs·y = sy`.
///
/// State `i` is the length-`n` binary word whose bits (most significant first,
/// `a` = 0) spell `i`. Letters beyond `b` act exactly like `a`, which keeps
/// the synchronizing language equal to all words of length at least `n`.
pub fn build_de_bruijn(n: usize, alphabet: Alphabet) -> Result<Dfa> {
    if alphabet.size() < 2 {
        return Err(Error::UnsupportedAlphabet {
            construction: "De Bruijn automaton (needs at least two letters)",
            size: alphabet.size(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidInput("De Bruijn level must be at least 1".into()));
    }
    if n > MAX_LEVEL {
        return Err(Error::TooLarge(n));
    }
    let mask = (1usize << n) - 1;
    let dfa = Dfa::from_fn(alphabet, 1 << n, |q, y| {
        let bit = usize::from(y == 1);
        ((q << 1) | bit) & mask
    })?;
    dfa.with_labels(level_labels(n))
}

pub(super) fn level_word(n: usize, index: usize) -> Word {
    Word::new(
        (0..n)
            .rev()
            .map(|i| ((index >> i) & 1) as Letter)
            .collect(),
    )
}

pub(super) fn level_labels(n: usize) -> Vec<String> {
    (0..1usize << n).map(|i| level_word(n, i).to_string()).collect()
}

pub(super) fn level_index(w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, &x| (acc << 1) | x as usize)
}
