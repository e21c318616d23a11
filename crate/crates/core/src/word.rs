// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Letters, alphabets and words.
//!
//! Letters are small indices rendered as `a`, `b`, `c`, ... Words compare in
//! shortlex order (shorter first, then lexicographically), which is the order
//! used everywhere a construction has to sort states by their label words.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = u8;

pub const MAX_ALPHABET: usize = 26;

/// An alphabet `{a, b, ...}` of `size` letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet {
    size: usize,
}

impl Alphabet {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 || size > MAX_ALPHABET {
            return Err(Error::AlphabetSize(size));
        }
        Ok(Alphabet { size })
    }

    pub const fn binary() -> Self {
        Alphabet { size: 2 }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_binary(&self) -> bool {
        self.size == 2
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..self.size as Letter
    }

    pub fn render(letter: Letter) -> char {
        (b'a' + letter) as char
    }

    pub fn parse_letter(c: char) -> Result<Letter> {
        if c.is_ascii_lowercase() {
            Ok(c as u8 - b'a')
        } else {
            Err(Error::InvalidCharacter(c))
        }
    }

    /// Letters as they appear in file headers, e.g. `ab`.
    pub fn letter_string(&self) -> String {
        self.letters().map(Alphabet::render).collect()
    }

    /// Parses a header letter string. The letters must be exactly `a`, `b`, ... in order.
    pub fn from_letter_string(s: &str) -> Result<Self> {
        for (i, c) in s.chars().enumerate() {
            let letter = Alphabet::parse_letter(c)?;
            if letter as usize != i {
                return Err(Error::InvalidInput(format!(
                    "alphabet letters must be consecutive from 'a', found {c:?} at position {}",
                    i + 1
                )));
            }
        }
        Alphabet::new(s.chars().count())
    }

    /// Smallest alphabet of at least two letters containing every letter of `words`.
    pub fn infer<'a>(words: impl IntoIterator<Item = &'a Word>) -> Self {
        let max = words
            .into_iter()
            .flat_map(|w| w.letters().iter().copied())
            .max()
            .map_or(0, |m| m as usize + 1);
        Alphabet { size: max.max(2) }
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if (letter as usize) < self.size {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: letter as usize,
                size: self.size,
            })
        }
    }

    pub fn check_word(&self, word: &Word) -> Result<()> {
        word.letters().iter().try_for_each(|&x| self.check(x))
    }

    /// All words of exactly `len` letters, in lexicographic order.
    pub fn words_of_length(&self, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .iter()
                .flat_map(|w| self.letters().map(move |x| w.with(x)))
                .collect();
        }
        out
    }

    /// All words of length at most `len`, in shortlex order.
    pub fn words_up_to(&self, len: usize) -> Vec<Word> {
        (0..=len).flat_map(|l| self.words_of_length(l)).collect()
    }
}

/// A finite word over letter indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th letter, counting from 1.
    pub fn at(&self, i: usize) -> Letter {
        self.0[i - 1]
    }

    /// The factor `w[i..j]`, both ends inclusive and counting from 1.
    /// `slice(i, i - 1)` is the empty word.
    pub fn slice(&self, i: usize, j: usize) -> Word {
        Word(self.0[i - 1..j].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// `self` followed by one more letter.
    pub fn with(&self, letter: Letter) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0);
        v.push(letter);
        Word(v)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn repeat(letter: Letter, n: usize) -> Word {
        Word(vec![letter; n])
    }

    pub fn is_prefix_of(&self, w: &Word) -> bool {
        w.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, w: &Word) -> bool {
        w.0.ends_with(&self.0)
    }

    /// Start positions (0-based) of every occurrence of `self` in `w`.
    pub fn occurrences_in<'a>(&'a self, w: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = self.len();
        (0..=w.len().saturating_sub(n))
            .filter(move |&i| n <= w.len() && w.0[i..i + n] == self.0[..])
    }
}

/// `u` is a factor of `w` iff `w = xuy` for some words `x`, `y`.
pub fn is_factor(u: &Word, w: &Word) -> bool {
    if u.len() > w.len() {
        return false;
    }
    u.is_empty() || w.0.windows(u.len()).any(|win| win == &u.0[..])
}

/// The longest word that is a prefix of `x` and a suffix of `y`.
pub fn overlap(x: &Word, y: &Word) -> Word {
    let max = x.len().min(y.len());
    (0..=max)
        .rev()
        .find(|&k| x.0[..k] == y.0[y.len() - k..])
        .map(|k| x.prefix(k))
        .unwrap_or_default()
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for &x in &self.0 {
            write!(f, "{}", Alphabet::render(x))?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses `abaab`; both `""` and `"ε"` denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(Alphabet::parse_letter)
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<&[Letter]> for Word {
    fn from(letters: &[Letter]) -> Self {
        Word(letters.to_vec())
    }
}
