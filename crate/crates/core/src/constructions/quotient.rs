// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use crate::automaton::Dfa;
use crate::error::{Error, Result};
use crate::languages::GeneratorSet;
use crate::word::{Alphabet, Word};

use super::de_bruijn::{level_index, level_word};
use super::modified::modified_de_bruijn;
use super::MAX_LEVEL;

/// The words of length `n` that contain some generator as a factor.
pub fn lift_generators(set: &GeneratorSet, n: usize) -> Vec<Word> {
    set.alphabet()
        .words_of_length(n)
        .into_iter()
        .filter(|w| set.matches(w))
        .collect()
}

/// A split `w = u·s·v` with `s` a generator and `sv` free of any other
/// generator occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub u: Word,
    pub s: Word,
    pub v: Word,
}

impl Factorization {
    /// The suffix `sv` shared by every word of the same class.
    pub fn key(&self) -> Word {
        self.s.concat(&self.v)
    }
}

/// Factorizes `w` at the generator occurrence ending furthest to the right.
///
/// In an anti-factorial set no two occurrences nest or share an end, so the
/// rightmost-ending occurrence also starts rightmost and `sv` holds no other.
pub fn canonical_factorization(w: &Word, set: &GeneratorSet) -> Result<Factorization> {
    let (start, s) = set
        .words()
        .flat_map(|s| s.occurrences_in(w).map(move |i| (i, s)))
        .max_by_key(|&(i, s)| (i + s.len(), i))
        .ok_or_else(|| Error::NoGeneratorFactor {
            word: w.to_string(),
        })?;
    Ok(Factorization {
        u: w.prefix(start),
        s: s.clone(),
        v: w.suffix(w.len() - start - s.len()),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    /// Words containing a generator, keyed by their suffix `sv`.
    Merged,
    /// A word free of generators, alone in its class.
    Singleton,
}

/// A state of the quotient automaton.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorizationClass {
    pub kind: ClassKind,
    pub key: Word,
}

impl fmt::Display for FactorizationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.key)
    }
}

/// Every intermediate object of the quotient construction.
#[derive(Debug, Clone)]
pub struct QuotientConstruction {
    /// Word length of the underlying automaton.
    pub n: usize,
    /// Length-`n` words containing a generator.
    pub lifted: Vec<Word>,
    /// The modified De Bruijn automaton for `lifted`.
    pub base: Dfa,
    /// Classes in shortlex order of their keys.
    pub classes: Vec<FactorizationClass>,
    /// Class index of every state of `base`.
    pub class_of: Vec<usize>,
    pub quotient: Dfa,
}

/// Synchronizing automaton with at most `2^n` states for `Σ*SΣ*`, `n` the
/// longest generator length.
pub fn build_c_s(set: &GeneratorSet) -> Result<Dfa> {
    c_s_construction(set).map(|c| c.quotient)
}

/// Builds the modified De Bruijn automaton on the lifted generators, merges
/// lifted words sharing their canonical suffix `sv`, checks that the merge is
/// a congruence and returns the quotient with everything used along the way.
pub fn c_s_construction(set: &GeneratorSet) -> Result<QuotientConstruction> {
    let alphabet = set.alphabet();
    if !alphabet.is_binary() {
        return Err(Error::UnsupportedAlphabet {
            construction: "quotient construction",
            size: alphabet.size(),
        });
    }
    if set.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if set.contains_empty_word() {
        return Err(Error::EmptyWordGenerator);
    }
    set.require_anti_factorial()?;
    let n = set.max_len();
    if n > MAX_LEVEL {
        return Err(Error::TooLarge(n));
    }

    let lifted = lift_generators(set, n);
    let mut in_t = vec![false; 1 << n];
    for w in &lifted {
        in_t[level_index(w)] = true;
    }
    let base = modified_de_bruijn(&in_t, n)?;

    let state_class: Vec<FactorizationClass> = (0..1usize << n)
        .map(|q| {
            let w = level_word(n, q);
            if in_t[q] {
                canonical_factorization(&w, set).map(|f| FactorizationClass {
                    kind: ClassKind::Merged,
                    key: f.key(),
                })
            } else {
                Ok(FactorizationClass {
                    kind: ClassKind::Singleton,
                    key: w,
                })
            }
        })
        .collect::<Result<_>>()?;

    let index: BTreeMap<Word, usize> = {
        let mut keys: Vec<Word> = state_class.iter().map(|c| c.key.clone()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
    };
    let mut classes = vec![None; index.len()];
    for c in &state_class {
        classes[index[&c.key]] = Some(c.clone());
    }
    let classes: Vec<FactorizationClass> = classes.into_iter().map(Option::unwrap).collect();
    let class_of: Vec<usize> = state_class.iter().map(|c| index[&c.key]).collect();

    let mut induced = vec![vec![usize::MAX; alphabet.size()]; classes.len()];
    for (q, &c) in class_of.iter().enumerate() {
        for x in alphabet.letters() {
            let target = class_of[base.step(q, x)];
            let slot = &mut induced[c][x as usize];
            if *slot == usize::MAX {
                *slot = target;
            } else if *slot != target {
                return Err(Error::CongruenceViolation(format!(
                    "{} on {} reaches both {} and {}",
                    classes[c],
                    Alphabet::render(x),
                    classes[*slot],
                    classes[target]
                )));
            }
        }
    }
    let quotient = Dfa::from_rows(alphabet, &induced)?
        .with_labels(classes.iter().map(|c| c.to_string()).collect())?;

    Ok(QuotientConstruction {
        n,
        lifted,
        base,
        classes,
        class_of,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn gens(s: &str) -> GeneratorSet {
        GeneratorSet::parse(s, Some(Alphabet::binary())).unwrap()
    }

    fn factor(word: &str, set: &str) -> (String, String, String) {
        let f = canonical_factorization(&w(word), &gens(set)).unwrap();
        (f.u.to_string(), f.s.to_string(), f.v.to_string())
    }

    #[test]
    fn lifting() {
        let shown = |ws: Vec<Word>| ws.iter().map(Word::to_string).collect::<Vec<_>>();
        assert_eq!(shown(lift_generators(&gens("aa,aba"), 3)), ["aaa", "aab", "aba", "baa"]);
        assert_eq!(shown(lift_generators(&gens("abb"), 3)), ["abb"]);
        assert_eq!(shown(lift_generators(&gens("ab"), 3)), ["aab", "aba", "abb", "bab"]);
    }

    #[test]
    fn factorizations() {
        assert_eq!(factor("aaa", "aa,aba"), ("a".into(), "aa".into(), "ε".into()));
        assert_eq!(factor("baa", "aa,aba"), ("b".into(), "aa".into(), "ε".into()));
        assert_eq!(factor("aba", "aa,aba"), ("ε".into(), "aba".into(), "ε".into()));
        assert_eq!(factor("aab", "aa,aba"), ("ε".into(), "aa".into(), "b".into()));
        assert!(matches!(
            canonical_factorization(&w("bbb"), &gens("aa")),
            Err(Error::NoGeneratorFactor { .. })
        ));
    }

    #[test]
    fn example_quotient() {
        let c = c_s_construction(&gens("aa,aba")).unwrap();
        let labels = c.quotient.labels().unwrap();
        assert_eq!(labels, ["[aa]", "[aab]", "[aba]", "[abb]", "[bab]", "[bba]", "[bbb]"]);
        assert_eq!(c.classes[0].kind, ClassKind::Merged);
        assert_eq!(c.classes[3].kind, ClassKind::Singleton);
        assert_eq!(c.class_of[level_index(&w("aaa"))], c.class_of[level_index(&w("baa"))]);
    }

    #[test]
    fn uniform_sets_without_merges_equal_base() {
        // Every lifted word is its own generator, so the quotient is trivial.
        let c = c_s_construction(&gens("abb,bab")).unwrap();
        assert_eq!(c.quotient.num_states(), 8);
        assert_eq!(c.quotient, c.base);
    }

    #[test]
    fn rejects_invalid_sets() {
        assert_eq!(
            build_c_s(&GeneratorSet::new(Alphabet::binary(), [Word::empty()]).unwrap()).unwrap_err(),
            Error::EmptyWordGenerator
        );
        assert!(matches!(build_c_s(&gens("a,ab")), Err(Error::NotAntiFactorial { .. })));
        assert_eq!(
            build_c_s(&GeneratorSet::new(Alphabet::binary(), []).unwrap()).unwrap_err(),
            Error::EmptyGenerators
        );
    }

    #[test]
    fn full_level_sets_are_accepted() {
        // {a, bb} lifts to every word of length 2.
        let c = c_s_construction(&gens("a,bb")).unwrap();
        assert_eq!(c.lifted.len(), 4);
        assert_eq!(c.quotient.num_states(), 3);
    }
}
