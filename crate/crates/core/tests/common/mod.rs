// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! subset exploration, minimization or trie code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::Path;

use idealsync_core::{Alphabet, Dfa, GeneratorSet, Word};

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

pub fn gens(s: &str) -> GeneratorSet {
    GeneratorSet::parse(s, Some(Alphabet::binary())).unwrap()
}

/// `|Q·w|` by applying `w` to every state separately.
pub fn image_size(dfa: &Dfa, word: &Word) -> usize {
    (0..dfa.num_states())
        .map(|q| dfa.apply(q, word).unwrap())
        .collect::<BTreeSet<_>>()
        .len()
}

pub fn synchronizes(dfa: &Dfa, word: &Word) -> bool {
    image_size(dfa, word) == 1
}

/// First word (shortlex) of length at most `max_len` on which `dfa` and the
/// ideal of `set` disagree about synchronization.
pub fn syn_disagreement(dfa: &Dfa, set: &GeneratorSet, max_len: usize) -> Option<Word> {
    dfa.alphabet()
        .words_up_to(max_len)
        .into_iter()
        .find(|x| synchronizes(dfa, x) != set.matches(x))
}

/// Bounded check that `Syn(dfa)` and the ideal of `set` agree on every word
/// of length at most `max_len`.
pub fn syn_equals_ideal_bruteforce(dfa: &Dfa, set: &GeneratorSet, max_len: usize) -> bool {
    syn_disagreement(dfa, set, max_len).is_none()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Isomorphism by trying every bijection.
pub fn isomorphic_bruteforce(a: &Dfa, b: &Dfa) -> bool {
    if a.num_states() != b.num_states() || a.alphabet() != b.alphabet() {
        return false;
    }
    permutations(a.num_states()).iter().any(|p| {
        (0..a.num_states())
            .all(|q| a.alphabet().letters().all(|x| p[a.step(q, x)] == b.step(p[q], x)))
    })
}

/// Lexicographically least state-major table over all relabelings.
pub fn canonical_bruteforce(a: &Dfa) -> Vec<usize> {
    let n = a.num_states();
    permutations(n)
        .iter()
        .map(|p| {
            let mut inv = vec![0; n];
            for (old, &new) in p.iter().enumerate() {
                inv[new] = old;
            }
            (0..n)
                .flat_map(|q| a.alphabet().letters().map(move |x| (q, x)))
                .map(|(q, x)| p[a.step(inv[q], x)])
                .collect::<Vec<_>>()
        })
        .min()
        .unwrap()
}

/// Every anti-factorial nonempty set of binary words with lengths in `1..=max_len`.
pub fn anti_factorial_sets(max_len: usize) -> Vec<GeneratorSet> {
    let sigma = Alphabet::binary();
    let words: Vec<Word> = (1..=max_len).flat_map(|l| sigma.words_of_length(l)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Word> = Vec::new();
    fn rec(i: usize, words: &[Word], chosen: &mut Vec<Word>, out: &mut Vec<GeneratorSet>) {
        if i == words.len() {
            if !chosen.is_empty() {
                out.push(GeneratorSet::new(Alphabet::binary(), chosen.iter().cloned()).unwrap());
            }
            return;
        }
        rec(i + 1, words, chosen, out);
        let w = &words[i];
        if chosen
            .iter()
            .all(|c| !idealsync_core::word::is_factor(c, w) && !idealsync_core::word::is_factor(w, c))
        {
            chosen.push(w.clone());
            rec(i + 1, words, chosen, out);
            chosen.pop();
        }
    }
    rec(0, &words, &mut chosen, &mut out);
    out
}

/// Reads a golden edge list `from letter to`, skipping comments.
pub fn golden_edges(name: &str) -> Vec<(String, char, String)> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<&str> = l.split_whitespace().collect();
            assert_eq!(parts.len(), 3, "bad golden line {l:?}");
            (parts[0].to_string(), parts[1].chars().next().unwrap(), parts[2].to_string())
        })
        .collect()
}

/// Checks that `dfa` has exactly the transitions of the golden file.
pub fn matches_golden(dfa: &Dfa, name: &str) -> Result<(), String> {
    let edges = golden_edges(name);
    let expected = dfa.num_states() * dfa.alphabet().size();
    if edges.len() != expected {
        return Err(format!("golden {name} lists {} edges, automaton has {expected}", edges.len()));
    }
    let mut seen = BTreeSet::new();
    for (from, letter, to) in &edges {
        let q = dfa.state_by_label(from).ok_or_else(|| format!("no state {from}"))?;
        let x = Alphabet::parse_letter(*letter).unwrap();
        if !seen.insert((q, x)) {
            return Err(format!("golden {name} repeats ({from},{letter})"));
        }
        let actual = dfa.label(dfa.step(q, x)).unwrap();
        if actual != to {
            return Err(format!("{from} --{letter}--> {actual}, expected {to}"));
        }
    }
    Ok(())
}
