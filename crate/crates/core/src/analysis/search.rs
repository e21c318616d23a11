// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use rayon::prelude::*;

use super::syn::{is_synchronizing, syn_language, verify_construction, SynConfig};
use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::languages::{build_ideal_recognizer, minimize, GeneratorSet, Recognizer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest number of transition tables enumerated for one state count.
    pub max_tables: u64,
}

impl Default for SearchLimits {
    /// Admits every binary automaton with at most four states (4^8 tables).
    fn default() -> Self {
        SearchLimits { max_tables: 1 << 16 }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    /// Smallest witness, the first of `witnesses`.
    pub found: Option<Dfa>,
    /// Every witness of the smallest size, one canonical form per isomorphism class.
    pub witnesses: Vec<Dfa>,
    /// Transition tables examined over all state counts tried.
    pub tables_searched: u64,
    /// Largest state count the search was allowed to try.
    pub kmax: usize,
}

impl SearchResult {
    pub fn size(&self) -> Option<usize> {
        self.found.as_ref().map(Dfa::num_states)
    }
}

/// Smallest strongly connected automata synchronized exactly by `Σ*SΣ*`,
/// by enumerating every complete automaton with `1..=kmax` states.
pub fn min_strongly_connected_search(
    set: &GeneratorSet,
    kmax: usize,
    limits: &SearchLimits,
) -> Result<SearchResult> {
    search(set, kmax, limits, true)
}

/// Smallest automata of any shape synchronized exactly by `Σ*SΣ*`; the size
/// found is the reset complexity of the ideal whenever it is at most `kmax`.
pub fn reset_complexity_search(
    set: &GeneratorSet,
    kmax: usize,
    limits: &SearchLimits,
) -> Result<SearchResult> {
    search(set, kmax, limits, false)
}

fn table_count(states: usize, letters: usize) -> Option<u64> {
    (states as u64).checked_pow((states * letters) as u32)
}

fn search(
    set: &GeneratorSet,
    kmax: usize,
    limits: &SearchLimits,
    strongly_connected: bool,
) -> Result<SearchResult> {
    let alphabet = set.alphabet();
    let letters = alphabet.size();
    for k in 1..=kmax {
        match table_count(k, letters) {
            Some(t) if t <= limits.max_tables => {}
            t => {
                return Err(Error::SearchTooLarge {
                    states: k,
                    tables: t.map_or_else(|| format!("{k}^{}", k * letters), |t| t.to_string()),
                    limit: limits.max_tables,
                })
            }
        }
    }
    let config = SynConfig {
        subset_cap: kmax.max(SynConfig::DEFAULT_SUBSET_CAP),
    };
    let target = build_ideal_recognizer(set);
    let target_nonempty = !target.accepting.is_empty();

    let mut tables_searched = 0;
    for k in 1..=kmax {
        let total = table_count(k, letters).expect("checked above");
        tables_searched += total;
        let mut witnesses: Vec<Dfa> = (0..total)
            .into_par_iter()
            .filter_map(|index| {
                let dfa = decode(index, k, alphabet);
                if strongly_connected && !dfa.is_strongly_connected() {
                    return None;
                }
                if target_nonempty && !is_synchronizing(&dfa) {
                    return None;
                }
                let syn = syn_language(&dfa, &config).expect("within cap");
                same_language(&minimize(&syn), &target).then(|| dfa.canonical_form())
            })
            .collect();
        if witnesses.is_empty() {
            continue;
        }
        witnesses.sort_by_key(Dfa::rows);
        witnesses.dedup();
        for w in &witnesses {
            let v = verify_construction(w, set, &config)?;
            assert!(
                v.syn_equals_ideal && (!strongly_connected || v.report.strongly_connected),
                "search witness failed re-verification: {w:?}"
            );
        }
        return Ok(SearchResult {
            found: witnesses.first().cloned(),
            witnesses,
            tables_searched,
            kmax,
        });
    }
    Ok(SearchResult {
        found: None,
        witnesses: Vec::new(),
        tables_searched,
        kmax,
    })
}

// Both sides are minimal and numbered breadth-first from the initial state.
fn same_language(min: &Recognizer, target: &Recognizer) -> bool {
    min.dfa == target.dfa && min.accepting == target.accepting
}

/// The `index`-th table in base `k`, letter-major.
fn decode(mut index: u64, k: usize, alphabet: crate::word::Alphabet) -> Dfa {
    let mut digits = Vec::with_capacity(k * alphabet.size());
    for _ in 0..k * alphabet.size() {
        digits.push((index % k as u64) as usize);
        index /= k as u64;
    }
    Dfa::from_fn(alphabet, k, |q, x| digits[x as usize * k + q]).expect("digits below k")
}
