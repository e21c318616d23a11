// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::languages::GeneratorSet;
use crate::word::Alphabet;

use super::de_bruijn::{level_index, level_labels};
use super::MAX_LEVEL;

/// Modified De Bruijn automaton whose synchronizing words are exactly `Σ*UΣ*`,
/// for a nonempty proper subset `U` of the binary words of length `n`.
///
/// A state is a pair `(x, u)` with `x` a letter and `|u| = n−1`, stored as the
/// word `xu`. On letter `y`, write `uy = zv` with `z` a letter:
/// - `uy ∈ U`: go to `(z, v)`, the ordinary De Bruijn move;
/// - `uy ∉ U` and `uy` is not `a^n` or `b^n`: go to `(x, v)`, keeping the head;
/// - `uy = a^n ∉ U`: only `(a, a^{n−1})` is redirected, to `(b, a^{n−1})`;
///   `(b, a^{n−1})` keeps the De Bruijn move. Symmetrically for `b^n ∉ U`.
pub fn build_b_u(u: &GeneratorSet, n: usize) -> Result<Dfa> {
    let alphabet = u.alphabet();
    if !alphabet.is_binary() {
        return Err(Error::UnsupportedAlphabet {
            construction: "modified De Bruijn automaton",
            size: alphabet.size(),
        });
    }
    if u.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if n == 0 {
        return Err(Error::InvalidInput("word length must be at least 1".into()));
    }
    if n > MAX_LEVEL {
        return Err(Error::TooLarge(n));
    }
    if let Some(w) = u.words().find(|w| w.len() != n) {
        return Err(Error::NonUniformLength {
            word: w.to_string(),
            len: w.len(),
            expected: n,
        });
    }
    if u.len() == 1 << n {
        return Err(Error::FullLevel(n));
    }
    let mut in_u = vec![false; 1 << n];
    for w in u.words() {
        in_u[level_index(w)] = true;
    }
    modified_de_bruijn(&in_u, n)
}

/// The table of `build_b_u` without the proper-subset requirement. With every
/// word of length `n` present the result is the plain De Bruijn automaton.
pub(super) fn modified_de_bruijn(in_u: &[bool], n: usize) -> Result<Dfa> {
    let size = 1usize << n;
    let full = size - 1;
    let head = 1usize << (n - 1);
    let tail_mask = head - 1;
    let dfa = Dfa::from_fn(Alphabet::binary(), size, |q, y| {
        let uy = ((q & tail_mask) << 1) | y as usize;
        if in_u[uy] {
            uy
        } else if uy != 0 && uy != full {
            (q & head) | (uy & tail_mask)
        } else if q == 0 && uy == 0 {
            head
        } else if q == full && uy == full {
            tail_mask
        } else {
            uy
        }
    })?;
    dfa.with_labels(level_labels(n))
}
