// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Constructions compared edge by edge with hand-written transition lists.

mod common;

use common::*;
use idealsync_core::constructions::{
    build_b_u, build_c_s, build_d_uv, build_de_bruijn, c_s_construction, DuvOptions,
};
use idealsync_core::format::{parse_automaton, render, Automaton};
use idealsync_core::Alphabet;

#[test]
fn de_bruijn_three() {
    let dfa = build_de_bruijn(3, Alphabet::binary()).unwrap();
    matches_golden(&dfa, "de_bruijn_3.edges").unwrap();
}

#[test]
fn modified_de_bruijn_for_three_generators() {
    let dfa = build_b_u(&gens("aaa,abb,bab"), 3).unwrap();
    matches_golden(&dfa, "b_u_aaa_abb_bab.edges").unwrap();
}

#[test]
fn quotient_base_and_result() {
    let c = c_s_construction(&gens("aa,aba")).unwrap();
    matches_golden(&c.base, "b_t_aa_aba.edges").unwrap();
    matches_golden(&c.quotient, "c_s_aa_aba.edges").unwrap();
    assert_eq!(c.quotient.num_states(), 7);
    assert_eq!(build_c_s(&gens("aa,aba")).unwrap(), c.quotient);
}

#[test]
fn two_word_automaton() {
    let dfa = build_d_uv(&w("abaab"), &w("babab"), Alphabet::binary(), DuvOptions::default())
        .unwrap();
    assert_eq!(dfa.num_states(), 10);
    matches_golden(&dfa, "d_abaab_babab.edges").unwrap();
}

#[test]
fn golden_automata_survive_the_text_format() {
    let dfas = [
        build_de_bruijn(3, Alphabet::binary()).unwrap(),
        build_b_u(&gens("aaa,abb,bab"), 3).unwrap(),
        build_c_s(&gens("aa,aba")).unwrap(),
        build_d_uv(&w("abaab"), &w("babab"), Alphabet::binary(), DuvOptions::default()).unwrap(),
    ];
    for dfa in dfas {
        let text = render(&Automaton::Dfa(dfa.clone()));
        let back = parse_automaton(&text).unwrap().into_dfa();
        assert_eq!(back, dfa);
        assert_eq!(back.labels(), dfa.labels());
        assert_eq!(render(&Automaton::Dfa(back)), text);
    }
}
