// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors reported by constructions, analyses and the automaton text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 1..=26")]
    AlphabetSize(usize),

    #[error("letter {letter} is outside an alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("invalid character {0:?} in word")]
    InvalidCharacter(char),

    #[error("state {state} is outside 0..{num_states}")]
    StateOutOfRange { state: usize, num_states: usize },

    #[error("an automaton needs at least one state")]
    NoStates,

    #[error("transition table has {found} entries, expected {expected}")]
    TableSize { expected: usize, found: usize },

    #[error("invalid state label {0:?}: labels must be nonempty and contain no whitespace or ':'")]
    InvalidLabel(String),

    #[error("{0} labels given for {1} states")]
    LabelCount(usize, usize),

    #[error("alphabet mismatch: {0} letters vs {1} letters")]
    AlphabetMismatch(usize, usize),

    #[error("{0}")]
    InvalidInput(String),

    #[error("{construction} supports only the binary alphabet, got {size} letters")]
    UnsupportedAlphabet {
        construction: &'static str,
        size: usize,
    },

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator set contains the empty word, which generates every word")]
    EmptyWordGenerator,

    #[error("generator {word} has length {len}, expected uniform length {expected}")]
    NonUniformLength {
        word: String,
        len: usize,
        expected: usize,
    },

    #[error("generator set contains every word of length {0}; use the De Bruijn construction instead")]
    FullLevel(usize),

    #[error("generator set is not anti-factorial: {factor} is a factor of {word}")]
    NotAntiFactorial { factor: String, word: String },

    #[error(
        "{role}={word} has the excluded shape {shape}; the two-word construction requires words \
         outside {{ab^(n-1), a^(n-1)b, ba^(n-1), b^(n-1)a}}"
    )]
    ExcludedShape {
        role: &'static str,
        word: String,
        shape: &'static str,
    },

    #[error("word {word} contains no generator as a factor")]
    NoGeneratorFactor { word: String },

    #[error("internal invariant violated: factorization classes are not a congruence ({0})")]
    CongruenceViolation(String),

    #[error("general-alphabet two-word construction failed verification: {0}")]
    GeneralizationFailed(String),

    #[error("{states} states exceed the subset exploration cap of {cap}")]
    SubsetCap { states: usize, cap: usize },

    #[error("search over {states} states needs {tables} tables, more than the limit of {limit}")]
    SearchTooLarge { states: usize, tables: String, limit: u64 },

    #[error("construction size {0} is too large")]
    TooLarge(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("incomplete delta at ({state},{letter})")]
    IncompleteDelta { state: usize, letter: char },
}

pub type Result<T> = std::result::Result<T, Error>;
