// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::{HashMap, VecDeque};

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::languages::{build_ideal_recognizer, equivalent, GeneratorSet, Recognizer};
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SynConfig {
    /// Largest automaton whose subset lattice may be explored.
    pub subset_cap: usize,
}

impl SynConfig {
    pub const DEFAULT_SUBSET_CAP: usize = 20;
    pub const ENV_VAR: &'static str = "IDEALSYNC_SUBSET_CAP";

    /// Default configuration, with the cap overridden by `IDEALSYNC_SUBSET_CAP` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(Self::ENV_VAR) {
            Ok(value) => value
                .trim()
                .parse()
                .map(|subset_cap| SynConfig { subset_cap })
                .map_err(|_| {
                    Error::InvalidInput(format!("{} must be a number, got {value:?}", Self::ENV_VAR))
                }),
            Err(_) => Ok(SynConfig::default()),
        }
    }

    fn check(&self, dfa: &Dfa) -> Result<()> {
        if dfa.num_states() > self.subset_cap {
            return Err(Error::SubsetCap {
                states: dfa.num_states(),
                cap: self.subset_cap,
            });
        }
        Ok(())
    }
}

impl Default for SynConfig {
    fn default() -> Self {
        SynConfig {
            subset_cap: Self::DEFAULT_SUBSET_CAP,
        }
    }
}

/// Breadth-first exploration of the subsets `Q·w`, letters in order.
struct PowerAutomaton {
    subsets: Vec<StateSet>,
    // table[i * k + x]
    table: Vec<usize>,
    parent: Vec<Option<(usize, Letter)>>,
}

impl PowerAutomaton {
    /// Explores every reachable subset, or stops at the first singleton when `stop_at_singleton`.
    fn explore(dfa: &Dfa, stop_at_singleton: bool) -> (Self, Option<usize>) {
        let k = dfa.alphabet().size();
        let start = dfa.all_states();
        let mut index: HashMap<StateSet, usize> = HashMap::new();
        let mut pa = PowerAutomaton {
            subsets: vec![start.clone()],
            table: Vec::new(),
            parent: vec![None],
        };
        index.insert(start, 0);
        let mut first_singleton = (dfa.num_states() == 1).then_some(0);
        if stop_at_singleton && first_singleton.is_some() {
            return (pa, first_singleton);
        }
        let mut head = 0;
        while head < pa.subsets.len() {
            for x in dfa.alphabet().letters() {
                let image = dfa.image_letter(&pa.subsets[head], x);
                let next = match index.get(&image) {
                    Some(&i) => i,
                    None => {
                        let i = pa.subsets.len();
                        if first_singleton.is_none() && image.len() == 1 {
                            first_singleton = Some(i);
                        }
                        index.insert(image.clone(), i);
                        pa.subsets.push(image);
                        pa.parent.push(Some((head, x)));
                        if stop_at_singleton && first_singleton.is_some() {
                            return (pa, first_singleton);
                        }
                        i
                    }
                };
                pa.table.push(next);
            }
            head += 1;
        }
        debug_assert_eq!(pa.table.len(), pa.subsets.len() * k);
        (pa, first_singleton)
    }

    fn word_to(&self, mut i: usize) -> Word {
        let mut letters = Vec::new();
        while let Some((p, x)) = self.parent[i] {
            letters.push(x);
            i = p;
        }
        letters.reverse();
        Word::new(letters)
    }
}

/// Recognizer of `Syn(A) = {w : |Q·w| = 1}`: the subsets reachable from `Q`,
/// numbered breadth-first, accepting the singletons.
pub fn syn_language(dfa: &Dfa, config: &SynConfig) -> Result<Recognizer> {
    config.check(dfa)?;
    let (pa, _) = PowerAutomaton::explore(dfa, false);
    let k = dfa.alphabet().size();
    let count = pa.subsets.len();
    let power = Dfa::from_fn(dfa.alphabet(), count, |i, x| pa.table[i * k + x as usize])?;
    let accepting = StateSet::from_states(
        count,
        pa.subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.len() == 1)
            .map(|(i, _)| i),
    );
    Recognizer::new(power, 0, accepting)
}

/// Whether some word collapses every state, decided on pairs of states:
/// the automaton synchronizes iff every pair can be merged.
pub fn is_synchronizing(dfa: &Dfa) -> bool {
    let n = dfa.num_states();
    if n == 1 {
        return true;
    }
    let pair = |p: usize, q: usize| if p < q { p * n + q } else { q * n + p };
    let mut preimage = vec![vec![Vec::new(); n]; dfa.alphabet().size()];
    for x in dfa.alphabet().letters() {
        for q in 0..n {
            preimage[x as usize][dfa.step(q, x)].push(q);
        }
    }
    let mut mergeable = vec![false; n * n];
    let mut queue = VecDeque::new();
    // Seed: pairs merged by a single letter.
    for x in dfa.alphabet().letters() {
        for pre in &preimage[x as usize] {
            for (i, &p) in pre.iter().enumerate() {
                for &q in &pre[i + 1..] {
                    let id = pair(p, q);
                    if !mergeable[id] {
                        mergeable[id] = true;
                        queue.push_back((p, q));
                    }
                }
            }
        }
    }
    while let Some((r, s)) = queue.pop_front() {
        for x in dfa.alphabet().letters() {
            for &p in &preimage[x as usize][r] {
                for &q in &preimage[x as usize][s] {
                    if p == q {
                        continue;
                    }
                    let id = pair(p, q);
                    if !mergeable[id] {
                        mergeable[id] = true;
                        queue.push_back((p, q));
                    }
                }
            }
        }
    }
    (0..n).all(|p| (p + 1..n).all(|q| mergeable[pair(p, q)]))
}

/// A shortest reset word, lexicographically least among the shortest.
pub fn shortest_reset_word(dfa: &Dfa, config: &SynConfig) -> Result<Option<Word>> {
    config.check(dfa)?;
    let (pa, found) = PowerAutomaton::explore(dfa, true);
    Ok(found.map(|i| pa.word_to(i)))
}

/// Synchronization facts about one automaton.
#[derive(Debug, Clone)]
pub struct SynReport {
    pub is_synchronizing: bool,
    pub syn_recognizer: Recognizer,
    pub shortest_reset: Option<Word>,
    pub strongly_connected: bool,
    pub state_count: usize,
}

impl SynReport {
    pub fn compute(dfa: &Dfa, config: &SynConfig) -> Result<Self> {
        let syn_recognizer = syn_language(dfa, config)?;
        let shortest_reset = shortest_reset_word(dfa, config)?;
        Ok(SynReport {
            is_synchronizing: is_synchronizing(dfa),
            syn_recognizer,
            shortest_reset,
            strongly_connected: dfa.is_strongly_connected(),
            state_count: dfa.num_states(),
        })
    }
}

/// A [`SynReport`] plus the verdict on `Syn(A) = Σ*SΣ*`.
#[derive(Debug, Clone)]
pub struct Verification {
    pub report: SynReport,
    pub syn_equals_ideal: bool,
}

impl Verification {
    /// Strongly connected and synchronized exactly by the ideal.
    pub fn passed(&self) -> bool {
        self.syn_equals_ideal && self.report.strongly_connected
    }
}

/// Compares the synchronizing language of `dfa` with the ideal generated by `set`.
pub fn verify_construction(dfa: &Dfa, set: &GeneratorSet, config: &SynConfig) -> Result<Verification> {
    let report = SynReport::compute(dfa, config)?;
    let ideal = build_ideal_recognizer(set);
    let syn_equals_ideal = equivalent(&report.syn_recognizer, &ideal)?;
    Ok(Verification {
        report,
        syn_equals_ideal,
    })
}
