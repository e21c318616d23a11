// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Strongly connected synchronizing automata for finitely generated ideals.
//!
//! - [`build_de_bruijn`]: the De Bruijn automaton, synchronized exactly by `Σ^≥n`.
//! - [`build_b_u`]: a modified De Bruijn automaton for generators of one length.
//! - [`build_c_s`]: a quotient of [`build_b_u`] for arbitrary generator sets.
//! - [`build_d_uv`]: two pruned word automata glued together, for two generators.
//!
//! State indices follow the shortlex order of the state label words.

mod de_bruijn;
mod modified;
mod quotient;
mod two_words;

pub use de_bruijn::build_de_bruijn;
pub use modified::build_b_u;
pub use quotient::{
    build_c_s, c_s_construction, canonical_factorization, lift_generators, ClassKind,
    Factorization, FactorizationClass, QuotientConstruction,
};
pub use two_words::{build_d_uv, excluded_shape, pruned_word_automaton, DuvOptions, PrunedWordAutomaton};

pub use crate::word::overlap;

/// Largest word length accepted by the De Bruijn based constructions (2^20 states).
pub const MAX_LEVEL: usize = 20;
