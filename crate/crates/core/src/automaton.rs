// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Complete deterministic automata without initial or final structure.
//!
//! States are dense indices `0..num_states`. The transition table is stored
//! letter-major so that the action of one letter is a contiguous slice.
//! Labels are display metadata only: equality, isomorphism and every analysis
//! ignore them.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// A subset of the states of an automaton, as a fixed-width bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StateSet {
    blocks: SmallVec<[u64; 1]>,
    universe: usize,
}

impl StateSet {
    pub fn empty(universe: usize) -> Self {
        StateSet {
            blocks: SmallVec::from_elem(0, universe.div_ceil(64).max(1)),
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = StateSet::empty(universe);
        for q in 0..universe {
            set.insert(q);
        }
        set
    }

    pub fn singleton(universe: usize, q: usize) -> Self {
        let mut set = StateSet::empty(universe);
        set.insert(q);
        set
    }

    pub fn from_states(universe: usize, states: impl IntoIterator<Item = usize>) -> Self {
        let mut set = StateSet::empty(universe);
        for q in states {
            set.insert(q);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, q: usize) {
        assert!(q < self.universe, "state {q} outside universe {}", self.universe);
        self.blocks[q / 64] |= 1 << (q % 64);
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.universe && self.blocks[q / 64] & (1 << (q % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// The unique member, if the set is a singleton.
    pub fn single(&self) -> Option<usize> {
        if self.len() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    return None;
                }
                let bit = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(i * 64 + bit)
            })
        })
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A complete DFA `⟨Q, Σ, δ⟩`.
#[derive(Clone)]
pub struct Dfa {
    alphabet: Alphabet,
    num_states: usize,
    // delta[letter * num_states + state]
    delta: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Dfa {
    /// Builds an automaton from `transition(state, letter)`.
    pub fn from_fn(
        alphabet: Alphabet,
        num_states: usize,
        mut transition: impl FnMut(usize, Letter) -> usize,
    ) -> Result<Self> {
        if num_states == 0 {
            return Err(Error::NoStates);
        }
        let mut delta = Vec::with_capacity(num_states * alphabet.size());
        for x in alphabet.letters() {
            for q in 0..num_states {
                delta.push(transition(q, x));
            }
        }
        Dfa::from_letter_major(alphabet, num_states, delta)
    }

    /// Builds an automaton from per-state rows `rows[q][x]`.
    pub fn from_rows(alphabet: Alphabet, rows: &[Vec<usize>]) -> Result<Self> {
        for (q, row) in rows.iter().enumerate() {
            if row.len() != alphabet.size() {
                return Err(Error::IncompleteDelta {
                    state: q,
                    letter: Alphabet::render(row.len().min(alphabet.size()) as Letter),
                });
            }
        }
        Dfa::from_fn(alphabet, rows.len(), |q, x| rows[q][x as usize])
    }

    fn from_letter_major(alphabet: Alphabet, num_states: usize, delta: Vec<usize>) -> Result<Self> {
        let expected = num_states * alphabet.size();
        if delta.len() != expected {
            return Err(Error::TableSize {
                expected,
                found: delta.len(),
            });
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= num_states) {
            return Err(Error::StateOutOfRange {
                state: bad,
                num_states,
            });
        }
        Ok(Dfa {
            alphabet,
            num_states,
            delta,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.num_states {
            return Err(Error::LabelCount(labels.len(), self.num_states));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.contains(':') || l.chars().any(char::is_whitespace))
        {
            return Err(Error::InvalidLabel(bad.clone()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, q: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[q].as_str())
    }

    /// Index of the state carrying `label`.
    pub fn state_by_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// `δ(q, x)`. Panics when `q` or `x` is out of range.
    #[inline]
    pub fn step(&self, q: usize, x: Letter) -> usize {
        self.delta[x as usize * self.num_states + q]
    }

    /// The action of one letter as a map on states.
    pub fn action(&self, x: Letter) -> &[usize] {
        let n = self.num_states;
        &self.delta[x as usize * n..(x as usize + 1) * n]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.num_states)
            .map(|q| self.alphabet.letters().map(|x| self.step(q, x)).collect())
            .collect()
    }

    pub fn all_states(&self) -> StateSet {
        StateSet::full(self.num_states)
    }

    fn check_state(&self, q: usize) -> Result<()> {
        if q < self.num_states {
            Ok(())
        } else {
            Err(Error::StateOutOfRange {
                state: q,
                num_states: self.num_states,
            })
        }
    }

    /// `q·w`: δ extended to words.
    pub fn apply(&self, q: usize, w: &Word) -> Result<usize> {
        self.check_state(q)?;
        self.alphabet.check_word(w)?;
        Ok(w.letters().iter().fold(q, |p, &x| self.step(p, x)))
    }

    /// `P·x` for a single letter.
    pub fn image_letter(&self, set: &StateSet, x: Letter) -> StateSet {
        let action = self.action(x);
        let mut out = StateSet::empty(self.num_states);
        for q in set.iter() {
            out.insert(action[q]);
        }
        out
    }

    /// `P·w = {q·w : q ∈ P}`.
    pub fn image(&self, set: &StateSet, w: &Word) -> Result<StateSet> {
        self.alphabet.check_word(w)?;
        if set.universe() != self.num_states {
            return Err(Error::InvalidInput(format!(
                "state set over {} states used with a {}-state automaton",
                set.universe(),
                self.num_states
            )));
        }
        Ok(w
            .letters()
            .iter()
            .fold(set.clone(), |p, &x| self.image_letter(&p, x)))
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        (0..self.num_states)
            .map(|q| self.alphabet.letters().map(|x| self.step(q, x)).collect())
            .collect()
    }

    /// States reachable from `q`, including `q`.
    pub fn reachable_from(&self, q: usize) -> Vec<bool> {
        reachable(&self.successors(), q)
    }

    pub fn is_strongly_connected(&self) -> bool {
        is_strongly_connected_graph(&self.successors())
    }

    /// Renames states: old state `q` becomes `new_index[q]`. Labels follow their states.
    pub fn permute(&self, new_index: &[usize]) -> Result<Dfa> {
        let n = self.num_states;
        if new_index.len() != n {
            return Err(Error::InvalidInput("not a permutation of the states".into()));
        }
        let mut old_of = vec![usize::MAX; n];
        for (old, &new) in new_index.iter().enumerate() {
            if new >= n || old_of[new] != usize::MAX {
                return Err(Error::InvalidInput("not a permutation of the states".into()));
            }
            old_of[new] = old;
        }
        let permuted = Dfa::from_fn(self.alphabet, n, |q, x| {
            new_index[self.step(old_of[q], x)]
        })?;
        match &self.labels {
            Some(labels) => {
                permuted.with_labels(old_of.iter().map(|&old| labels[old].clone()).collect())
            }
            None => Ok(permuted),
        }
    }

    /// Breadth-first relabeling from `root`, exploring letters in order.
    /// Returns the sub-automaton reachable from `root` (root becomes state 0)
    /// and the original index of each new state.
    pub fn rooted_canonical(&self, root: usize) -> (Dfa, Vec<usize>) {
        let mut assigned = vec![usize::MAX; self.num_states];
        let mut order = Vec::new();
        self.bfs_extend(root, &mut assigned, &mut order);
        let dfa = Dfa::from_fn(self.alphabet, order.len(), |q, x| {
            assigned[self.step(order[q], x)]
        })
        .expect("reachable part is closed under transitions");
        (dfa, order)
    }

    fn bfs_extend(&self, root: usize, assigned: &mut [usize], order: &mut Vec<usize>) {
        let mut head = order.len();
        assigned[root] = order.len();
        order.push(root);
        while head < order.len() {
            let s = order[head];
            for x in self.alphabet.letters() {
                let t = self.step(s, x);
                if assigned[t] == usize::MAX {
                    assigned[t] = order.len();
                    order.push(t);
                }
            }
            head += 1;
        }
    }

    /// A representative of the isomorphism class of `self`, without labels.
    ///
    /// States are numbered by breadth-first exploration from a sequence of
    /// roots; each root is taken from a source component of the states not yet
    /// numbered. The result is the lexicographically least state-major
    /// transition table over all such root sequences. For a strongly connected
    /// automaton this is the minimum over the `n` single-root relabelings.
    pub fn canonical_form(&self) -> Dfa {
        let n = self.num_states;
        let succ = self.successors();
        let reach: Vec<Vec<bool>> = (0..n).map(|q| reachable(&succ, q)).collect();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        let assigned = vec![usize::MAX; n];
        let order: Vec<usize> = Vec::new();
        self.canonical_search(&reach, &assigned, &order, &mut best);
        let (_, order) = best.expect("at least one root sequence");
        let mut new_index = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        self.permute(&new_index)
            .expect("order is a permutation")
            .without_labels()
    }

    fn canonical_search(
        &self,
        reach: &[Vec<bool>],
        assigned: &[usize],
        order: &[usize],
        best: &mut Option<(Vec<usize>, Vec<usize>)>,
    ) {
        let n = self.num_states;
        if order.len() == n {
            let table: Vec<usize> = order
                .iter()
                .flat_map(|&q| self.alphabet.letters().map(move |x| (q, x)))
                .map(|(q, x)| assigned[self.step(q, x)])
                .collect();
            if best.as_ref().is_none_or(|(t, _)| table < *t) {
                *best = Some((table, order.to_vec()));
            }
            return;
        }
        let unassigned: Vec<usize> = (0..n).filter(|&q| assigned[q] == usize::MAX).collect();
        // Successor-closed assigned set: paths between unassigned states stay unassigned.
        let sources = unassigned.iter().copied().filter(|&c| {
            unassigned
                .iter()
                .all(|&u| !reach[u][c] || reach[c][u])
        });
        for root in sources.collect::<Vec<_>>() {
            let mut a = assigned.to_vec();
            let mut o = order.to_vec();
            self.bfs_extend(root, &mut a, &mut o);
            self.canonical_search(reach, &a, &o, best);
        }
    }
}

impl PartialEq for Dfa {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.num_states == other.num_states
            && self.delta == other.delta
    }
}

impl Eq for Dfa {}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("Dfa");
        d.field("alphabet", &self.alphabet.letter_string())
            .field("rows", &self.rows());
        if let Some(labels) = &self.labels {
            d.field("labels", labels);
        }
        d.finish()
    }
}

/// Nodes reachable from `start` in a graph given by successor lists.
pub fn reachable(succ: &[Vec<usize>], start: usize) -> Vec<bool> {
    let mut seen = vec![false; succ.len()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(q) = stack.pop() {
        for &t in &succ[q] {
            if !seen[t] {
                seen[t] = true;
                stack.push(t);
            }
        }
    }
    seen
}

/// True iff the graph has a single strongly connected component spanning every node.
/// The graph may be partial: nodes need not have a successor for every letter.
pub fn is_strongly_connected_graph(succ: &[Vec<usize>]) -> bool {
    let n = succ.len();
    if n == 0 {
        return false;
    }
    if !reachable(succ, 0).iter().all(|&b| b) {
        return false;
    }
    let mut pred = vec![Vec::new(); n];
    for (q, ts) in succ.iter().enumerate() {
        for &t in ts {
            pred[t].push(q);
        }
    }
    reachable(&pred, 0).iter().all(|&b| b)
}

/// True iff some bijection of states commutes with every letter action.
/// Letters are never permuted.
pub fn are_isomorphic(a: &Dfa, b: &Dfa) -> bool {
    if a.alphabet != b.alphabet || a.num_states != b.num_states {
        return false;
    }
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return false;
    }
    let mut matcher = Matcher {
        a,
        b,
        sig_a,
        sig_b,
        map: vec![usize::MAX; a.num_states],
        used: vec![false; a.num_states],
    };
    matcher.extend()
}

// Per state: self-loop flags and in-degree for each letter.
fn signatures(dfa: &Dfa) -> Vec<Vec<(bool, usize)>> {
    let n = dfa.num_states;
    let mut sig = vec![Vec::with_capacity(dfa.alphabet.size()); n];
    for x in dfa.alphabet.letters() {
        let mut indeg = vec![0; n];
        for &t in dfa.action(x) {
            indeg[t] += 1;
        }
        for q in 0..n {
            sig[q].push((dfa.step(q, x) == q, indeg[q]));
        }
    }
    sig
}

struct Matcher<'a> {
    a: &'a Dfa,
    b: &'a Dfa,
    sig_a: Vec<Vec<(bool, usize)>>,
    sig_b: Vec<Vec<(bool, usize)>>,
    map: Vec<usize>,
    used: Vec<bool>,
}

impl Matcher<'_> {
    fn extend(&mut self) -> bool {
        let Some(p) = self.map.iter().position(|&m| m == usize::MAX) else {
            return true;
        };
        for q in 0..self.b.num_states {
            if self.used[q] || self.sig_a[p] != self.sig_b[q] {
                continue;
            }
            let mut trail = Vec::new();
            if self.propagate(p, q, &mut trail) && self.extend() {
                return true;
            }
            for s in trail {
                self.used[self.map[s]] = false;
                self.map[s] = usize::MAX;
            }
        }
        false
    }

    fn propagate(&mut self, p: usize, q: usize, trail: &mut Vec<usize>) -> bool {
        self.map[p] = q;
        self.used[q] = true;
        trail.push(p);
        let mut stack = vec![(p, q)];
        while let Some((s, t)) = stack.pop() {
            for x in self.a.alphabet.letters() {
                let (s2, t2) = (self.a.step(s, x), self.b.step(t, x));
                match self.map[s2] {
                    m if m == t2 => {}
                    usize::MAX if !self.used[t2] && self.sig_a[s2] == self.sig_b[t2] => {
                        self.map[s2] = t2;
                        self.used[t2] = true;
                        trail.push(s2);
                        stack.push((s2, t2));
                    }
                    _ => return false,
                }
            }
        }
        true
    }
}
