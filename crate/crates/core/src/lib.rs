// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Strongly connected synchronizing automata for finitely generated ideal
//! languages `Σ*SΣ*`, with independent verification.
//!
//! The [`constructions`] build automata whose synchronizing words are exactly
//! a given ideal. The [`analysis`] module computes synchronizing languages
//! from first principles (subset exploration) and compares them with ideal
//! recognizers from [`languages`], which are built directly from the
//! generators.
//!
//! ```
//! use idealsync_core::analysis::{verify_construction, SynConfig};
//! use idealsync_core::constructions::build_c_s;
//! use idealsync_core::languages::GeneratorSet;
//!
//! let gens = GeneratorSet::parse("aa,aba", None).unwrap();
//! let dfa = build_c_s(&gens).unwrap();
//! let v = verify_construction(&dfa, &gens, &SynConfig::default()).unwrap();
//! assert_eq!(dfa.num_states(), 7);
//! assert!(v.syn_equals_ideal && v.report.strongly_connected);
//! ```

pub mod analysis;
pub mod automaton;
pub mod constructions;
pub mod error;
pub mod format;
pub mod languages;
pub mod word;

pub use automaton::{are_isomorphic, Dfa, StateSet};
pub use error::{Error, Result};
pub use languages::{GeneratorSet, Recognizer};
pub use word::{Alphabet, Word};
