// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Generator sets, recognizers, and the ideal languages `Σ*SΣ*` they define.
//!
//! These are the ground truth against which every construction is checked:
//! a recognizer for `Σ*SΣ*` is built from a failure-function trie, never from
//! a synchronizing automaton.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::word::{is_factor, overlap, Alphabet, Letter, Word};

/// A finite set of generator words over a fixed alphabet, in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    alphabet: Alphabet,
    words: BTreeSet<Word>,
}

impl GeneratorSet {
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> Result<Self> {
        let words: BTreeSet<Word> = words.into_iter().collect();
        for w in &words {
            alphabet.check_word(w)?;
        }
        Ok(GeneratorSet { alphabet, words })
    }

    /// Parses a comma-separated list such as `aa,aba`. Without an explicit
    /// alphabet, the smallest alphabet of at least two letters is inferred.
    pub fn parse(list: &str, alphabet: Option<Alphabet>) -> Result<Self> {
        let words = list
            .split(',')
            .map(|s| s.trim())
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Word>>>()?;
        let alphabet = alphabet.unwrap_or_else(|| Alphabet::infer(&words));
        GeneratorSet::new(alphabet, words)
    }

    /// All words of length `n` over `alphabet`.
    pub fn level(alphabet: Alphabet, n: usize) -> Self {
        GeneratorSet {
            alphabet,
            words: alphabet.words_of_length(n).into_iter().collect(),
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains_empty_word(&self) -> bool {
        self.words.contains(&Word::empty())
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.words.iter().map(Word::len).min().unwrap_or(0)
    }

    /// First pair `(factor, word)` of distinct elements with `factor` a factor of `word`.
    pub fn factor_pair(&self) -> Option<(&Word, &Word)> {
        self.words.iter().find_map(|t| {
            self.words
                .iter()
                .find(|s| *s != t && is_factor(s, t))
                .map(|s| (s, t))
        })
    }

    pub fn is_anti_factorial(&self) -> bool {
        self.factor_pair().is_none()
    }

    pub(crate) fn require_anti_factorial(&self) -> Result<()> {
        match self.factor_pair() {
            Some((s, t)) => Err(Error::NotAntiFactorial {
                factor: s.to_string(),
                word: t.to_string(),
            }),
            None => Ok(()),
        }
    }

    /// Whether some generator occurs in `w`.
    pub fn matches(&self, w: &Word) -> bool {
        self.words.iter().any(|s| is_factor(s, w))
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(Word::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Result of anti-factorial reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduced {
    /// The set contained the empty word, so the ideal is all of `Σ*`.
    WholeLanguage,
    Generators(GeneratorSet),
}

/// Keeps exactly the words that have no other generator as a factor.
pub fn anti_factorial_reduce(set: &GeneratorSet) -> Reduced {
    if set.contains_empty_word() {
        return Reduced::WholeLanguage;
    }
    let kept = set
        .words
        .iter()
        .filter(|t| !set.words.iter().any(|s| s != *t && is_factor(s, t)))
        .cloned()
        .collect();
    Reduced::Generators(GeneratorSet {
        alphabet: set.alphabet,
        words: kept,
    })
}

/// A DFA with an initial state and a set of accepting states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognizer {
    pub dfa: Dfa,
    pub initial: usize,
    pub accepting: StateSet,
}

impl Recognizer {
    pub fn new(dfa: Dfa, initial: usize, accepting: StateSet) -> Result<Self> {
        let n = dfa.num_states();
        if initial >= n {
            return Err(Error::StateOutOfRange {
                state: initial,
                num_states: n,
            });
        }
        if accepting.universe() != n {
            return Err(Error::InvalidInput(format!(
                "accepting set over {} states for a {n}-state automaton",
                accepting.universe()
            )));
        }
        Ok(Recognizer {
            dfa,
            initial,
            accepting,
        })
    }

    pub fn num_states(&self) -> usize {
        self.dfa.num_states()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.dfa.alphabet()
    }

    pub fn member(&self, w: &Word) -> Result<bool> {
        Ok(self.accepting.contains(self.dfa.apply(self.initial, w)?))
    }

    /// Whether every letter maps accepting states to accepting states.
    pub fn accepting_is_absorbing(&self) -> bool {
        self.accepting.iter().all(|q| {
            self.dfa
                .alphabet()
                .letters()
                .all(|x| self.accepting.contains(self.dfa.step(q, x)))
        })
    }

    /// Lexicographically least among the shortest accepted words.
    pub fn shortest_accepted(&self) -> Option<Word> {
        let n = self.num_states();
        let mut parent: Vec<Option<(usize, Letter)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            if self.accepting.contains(q) {
                let mut letters = Vec::new();
                let mut cur = q;
                while let Some((p, x)) = parent[cur] {
                    letters.push(x);
                    cur = p;
                }
                letters.reverse();
                return Some(Word::new(letters));
            }
            for x in self.alphabet().letters() {
                let t = self.dfa.step(q, x);
                if !seen[t] {
                    seen[t] = true;
                    parent[t] = Some((q, x));
                    queue.push_back(t);
                }
            }
        }
        None
    }
}

/// Membership test: true iff `w` is accepted.
pub fn member(r: &Recognizer, w: &Word) -> Result<bool> {
    r.member(w)
}

/// The `|w|+1`-state minimal recognizer of `Σ*wΣ*`.
///
/// State `i` is the prefix `w[1..i]`. Letter `w[i+1]` advances to prefix `i+1`;
/// any other letter `x` goes to the longest prefix of `w` that is a suffix of
/// `w[1..i]x`. State `w` is an accepting sink.
pub fn build_word_automaton(w: &Word, alphabet: Alphabet) -> Result<Recognizer> {
    if w.is_empty() {
        return Err(Error::InvalidInput("word automaton needs a nonempty word".into()));
    }
    alphabet.check_word(w)?;
    let n = w.len();
    let dfa = Dfa::from_fn(alphabet, n + 1, |i, x| {
        if i == n {
            n
        } else {
            overlap(w, &w.prefix(i).with(x)).len()
        }
    })?
    .with_labels((0..=n).map(|i| w.prefix(i).to_string()).collect())?;
    Recognizer::new(dfa, 0, StateSet::singleton(n + 1, n))
}

/// A minimal recognizer for `Σ*SΣ*`.
///
/// States of an Aho-Corasick trie over `S`; every node that completes an
/// occurrence of a generator collapses into one absorbing accepting state.
/// The empty set yields the empty language and a set containing the empty
/// word yields `Σ*`.
pub fn build_ideal_recognizer(set: &GeneratorSet) -> Recognizer {
    let alphabet = set.alphabet();
    let k = alphabet.size();
    if set.contains_empty_word() {
        let dfa = Dfa::from_fn(alphabet, 1, |_, _| 0).expect("one state");
        return Recognizer::new(dfa, 0, StateSet::full(1)).expect("valid");
    }

    // Trie with explicit child table; node 0 is the root.
    let mut children: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut terminal = vec![false];
    for w in set.words() {
        let mut node = 0;
        for &x in w.letters() {
            node = match children[node][x as usize] {
                Some(c) => c,
                None => {
                    children.push(vec![None; k]);
                    terminal.push(false);
                    let c = children.len() - 1;
                    children[node][x as usize] = Some(c);
                    c
                }
            };
        }
        terminal[node] = true;
    }

    // Failure links and the completed goto table, in breadth-first order.
    let nodes = children.len();
    let mut fail = vec![0; nodes];
    let mut go = vec![vec![0; k]; nodes];
    let mut queue = VecDeque::new();
    for x in 0..k {
        if let Some(c) = children[0][x] {
            go[0][x] = c;
            queue.push_back(c);
        }
    }
    while let Some(node) = queue.pop_front() {
        terminal[node] |= terminal[fail[node]];
        for x in 0..k {
            match children[node][x] {
                Some(c) => {
                    fail[c] = go[fail[node]][x];
                    go[node][x] = c;
                    queue.push_back(c);
                }
                None => go[node][x] = go[fail[node]][x],
            }
        }
    }

    // Collapse matches into a single accepting sink.
    let node_of: Vec<usize> = (0..nodes).filter(|&q| !terminal[q]).collect();
    let mut index = vec![usize::MAX; nodes];
    for (i, &node) in node_of.iter().enumerate() {
        index[node] = i;
    }
    let accept = node_of.len();
    let dfa = Dfa::from_fn(alphabet, accept + 1, |q, x| {
        if q == accept {
            return accept;
        }
        let next = go[node_of[q]][x as usize];
        if terminal[next] {
            accept
        } else {
            index[next]
        }
    })
    .expect("trie transitions are in range");
    let mut accepting = StateSet::empty(accept + 1);
    if !set.is_empty() {
        accepting.insert(accept);
    }
    let r = Recognizer::new(dfa, 0, accepting).expect("valid");
    minimize(&r)
}

/// Language-equivalent recognizer with the fewest states.
///
/// Unreachable states are dropped, Hopcroft partition refinement merges
/// indistinguishable ones, and the quotient is numbered breadth-first from the
/// initial state. Two equivalent recognizers therefore minimize to equal tables.
pub fn minimize(r: &Recognizer) -> Recognizer {
    let (reach, order) = r.dfa.rooted_canonical(r.initial);
    let accepting = StateSet::from_states(
        order.len(),
        order
            .iter()
            .enumerate()
            .filter(|(_, &old)| r.accepting.contains(old))
            .map(|(new, _)| new),
    );
    let block = hopcroft(&reach, &accepting);
    let num_blocks = block.iter().max().map_or(0, |&b| b + 1);

    // Quotient, then renumber breadth-first from the initial block.
    let mut rep = vec![usize::MAX; num_blocks];
    for (q, &b) in block.iter().enumerate() {
        if rep[b] == usize::MAX {
            rep[b] = q;
        }
    }
    let quotient = Dfa::from_fn(reach.alphabet(), num_blocks, |b, x| {
        block[reach.step(rep[b], x)]
    })
    .expect("blocks are in range");
    let (canonical, order) = quotient.rooted_canonical(block[0]);
    let accepting = StateSet::from_states(
        order.len(),
        order
            .iter()
            .enumerate()
            .filter(|(_, &b)| accepting.contains(rep[b]))
            .map(|(new, _)| new),
    );
    Recognizer::new(canonical, 0, accepting).expect("valid")
}

/// Hopcroft's algorithm: block index of every state in the coarsest
/// partition compatible with `accepting` and every letter action.
fn hopcroft(dfa: &Dfa, accepting: &StateSet) -> Vec<usize> {
    let n = dfa.num_states();
    let k = dfa.alphabet().size();

    // inverse[x][q] = states p with δ(p, x) = q
    let mut inverse = vec![vec![Vec::new(); n]; k];
    for x in dfa.alphabet().letters() {
        for p in 0..n {
            inverse[x as usize][dfa.step(p, x)].push(p);
        }
    }

    let (acc, rej): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| accepting.contains(q));
    let mut blocks: Vec<Vec<usize>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0; n];
    for (i, b) in blocks.iter().enumerate() {
        for &q in b {
            block_of[q] = i;
        }
    }

    let mut pending: Vec<Vec<bool>> = vec![vec![false; k]; blocks.len()];
    let mut worklist = VecDeque::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        pending[smaller].fill(true);
        worklist.extend((0..k).map(|x| (smaller, x)));
    }

    let mut marked = vec![false; n];
    while let Some((splitter, x)) = worklist.pop_front() {
        pending[splitter][x] = false;
        let mut pre = Vec::new();
        for &q in &blocks[splitter] {
            for &p in &inverse[x][q] {
                if !marked[p] {
                    marked[p] = true;
                    pre.push(p);
                }
            }
        }
        let mut touched: Vec<usize> = pre.iter().map(|&p| block_of[p]).collect();
        touched.sort_unstable();
        touched.dedup();
        for d in touched {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[d].iter().partition(|&&q| marked[q]);
            if outside.is_empty() {
                continue;
            }
            let new = blocks.len();
            for &q in &outside {
                block_of[q] = new;
            }
            let inside_len = inside.len();
            let outside_len = outside.len();
            blocks[d] = inside;
            blocks.push(outside);
            pending.push(vec![false; k]);
            #[allow(clippy::needless_range_loop)]
            for y in 0..k {
                if pending[d][y] {
                    pending[new][y] = true;
                    worklist.push_back((new, y));
                } else {
                    let smaller = if inside_len <= outside_len { d } else { new };
                    pending[smaller][y] = true;
                    worklist.push_back((smaller, y));
                }
            }
        }
        for p in pre {
            marked[p] = false;
        }
    }
    block_of
}

/// Whether two recognizers accept the same language.
///
/// Both are minimized; minimal recognizers numbered breadth-first from their
/// initial states are equal exactly when the languages are.
pub fn equivalent(r1: &Recognizer, r2: &Recognizer) -> Result<bool> {
    if r1.alphabet() != r2.alphabet() {
        return Err(Error::AlphabetMismatch(
            r1.alphabet().size(),
            r2.alphabet().size(),
        ));
    }
    let (m1, m2) = (minimize(r1), minimize(r2));
    Ok(m1.dfa == m2.dfa && m1.accepting == m2.accepting)
}
