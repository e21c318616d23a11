// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use crate::analysis::{syn_language, SynConfig};
use crate::automaton::{is_strongly_connected_graph, Dfa};
use crate::error::{Error, Result};
use crate::languages::{build_ideal_recognizer, equivalent, GeneratorSet};
use crate::word::{is_factor, overlap, Alphabet, Letter, Word};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DuvOptions {
    /// Build over any alphabet without the binary shape restrictions, then
    /// verify connectivity and the synchronizing language, failing if either
    /// check does not hold.
    pub general_alphabet: bool,
}

/// The binary shape of `w` excluded from the two-word construction, if any:
/// `ab^(n-1)`, `a^(n-1)b`, `ba^(n-1)` or `b^(n-1)a`.
pub fn excluded_shape(w: &Word) -> Option<&'static str> {
    let n = w.len();
    if n == 0 {
        return None;
    }
    let shape = |first: Letter, rest: Letter| {
        w.at(1) == first && w.letters()[1..].iter().all(|&x| x == rest)
    };
    let shape_last = |body: Letter, last: Letter| {
        w.letters()[..n - 1].iter().all(|&x| x == body) && w.at(n) == last
    };
    if shape(0, 1) {
        Some("ab^(n-1)")
    } else if shape_last(0, 1) {
        Some("a^(n-1)b")
    } else if shape(1, 0) {
        Some("ba^(n-1)")
    } else if shape_last(1, 0) {
        Some("b^(n-1)a")
    } else {
        None
    }
}

/// The minimal recognizer of `Σ*wΣ*` without its sink state and without the
/// transition from `w[1..n−1]` on `w[n]`. State `i` is the prefix of length `i`.
#[derive(Debug, Clone)]
pub struct PrunedWordAutomaton {
    pub word: Word,
    pub alphabet: Alphabet,
    /// `succ[i][x]`, absent only for the removed transition.
    pub succ: Vec<Vec<Option<usize>>>,
}

impl PrunedWordAutomaton {
    pub fn num_states(&self) -> usize {
        self.succ.len()
    }

    pub fn is_strongly_connected(&self) -> bool {
        let graph: Vec<Vec<usize>> = self
            .succ
            .iter()
            .map(|row| row.iter().flatten().copied().collect())
            .collect();
        is_strongly_connected_graph(&graph)
    }
}

pub fn pruned_word_automaton(w: &Word, alphabet: Alphabet) -> Result<PrunedWordAutomaton> {
    if w.is_empty() {
        return Err(Error::InvalidInput("pruned word automaton needs a nonempty word".into()));
    }
    alphabet.check_word(w)?;
    let n = w.len();
    let succ = (0..n)
        .map(|i| {
            alphabet
                .letters()
                .map(|x| {
                    let next = overlap(w, &w.prefix(i).with(x)).len();
                    (next < n).then_some(next)
                })
                .collect()
        })
        .collect();
    Ok(PrunedWordAutomaton {
        word: w.clone(),
        alphabet,
        succ,
    })
}

/// Strongly connected synchronizing automaton with `|u|+|v|` states whose
/// synchronizing words are exactly `Σ*(u+v)Σ*`.
///
/// States `0..|u|` are the pruned automaton of `u` and `|u|..|u|+|v|` that of
/// `v`. The missing transitions are filled in crosswise: `u[1..n−1]` on `u[n]`
/// goes to the longest prefix of `v` that is a suffix of `u`, and `v[1..m−1]`
/// on `v[m]` to the longest prefix of `u` that is a suffix of `v`.
pub fn build_d_uv(u: &Word, v: &Word, alphabet: Alphabet, options: DuvOptions) -> Result<Dfa> {
    alphabet.check_word(u)?;
    alphabet.check_word(v)?;
    if !options.general_alphabet && !alphabet.is_binary() {
        return Err(Error::UnsupportedAlphabet {
            construction: "two-word construction",
            size: alphabet.size(),
        });
    }
    for (role, w) in [("u", u), ("v", v)] {
        if w.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "{role}={w} is too short: both words need length at least 2"
            )));
        }
    }
    if is_factor(u, v) {
        return Err(Error::NotAntiFactorial {
            factor: u.to_string(),
            word: v.to_string(),
        });
    }
    if is_factor(v, u) {
        return Err(Error::NotAntiFactorial {
            factor: v.to_string(),
            word: u.to_string(),
        });
    }
    if !options.general_alphabet {
        for (role, w) in [("u", u), ("v", v)] {
            if let Some(shape) = excluded_shape(w) {
                return Err(Error::ExcludedShape {
                    role,
                    word: w.to_string(),
                    shape,
                });
            }
        }
    }

    let (n, m) = (u.len(), v.len());
    let pu = pruned_word_automaton(u, alphabet)?;
    let pv = pruned_word_automaton(v, alphabet)?;
    let into_v = n + overlap(v, u).len();
    let into_u = overlap(u, v).len();
    let dfa = Dfa::from_fn(alphabet, n + m, |q, x| {
        if q < n {
            pu.succ[q][x as usize].unwrap_or(into_v)
        } else {
            pv.succ[q - n][x as usize].map_or(into_u, |t| t + n)
        }
    })?;
    let labels = (0..n)
        .map(|i| format!("{}^u", u.prefix(i)))
        .chain((0..m).map(|i| format!("{}^v", v.prefix(i))))
        .collect();
    let dfa = dfa.with_labels(labels)?;

    if options.general_alphabet {
        if !dfa.is_strongly_connected() {
            return Err(Error::GeneralizationFailed(format!(
                "automaton for u={u}, v={v} is not strongly connected"
            )));
        }
        let ideal = build_ideal_recognizer(&GeneratorSet::new(alphabet, [u.clone(), v.clone()])?);
        let syn = syn_language(&dfa, &SynConfig::default())?;
        if !equivalent(&syn, &ideal)? {
            return Err(Error::GeneralizationFailed(format!(
                "synchronizing words of the automaton for u={u}, v={v} differ from the ideal"
            )));
        }
    }
    Ok(dfa)
}
