// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Plain-text automaton files and Graphviz export.
//!
//! ```text
//! dfa 4 ab
//! 0 aa : 0 1
//! 1 ab : 2 3
//! 2 ba : 0 1
//! 3 bb : 2 3
//! initial 0
//! accepting 3
//! ```
//!
//! The header gives the state count and the alphabet letters. Each state has
//! one row: index, optional label, `:`, then one target per letter. The
//! `initial` and `accepting` lines are optional; either one makes the file a
//! recognizer (initial state defaults to 0). Blank lines and lines starting
//! with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::automaton::{Dfa, StateSet};
use crate::error::{Error, Result};
use crate::languages::Recognizer;
use crate::word::{Alphabet, Letter};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Dfa(Dfa),
    Recognizer(Recognizer),
}

impl Automaton {
    pub fn dfa(&self) -> &Dfa {
        match self {
            Automaton::Dfa(d) => d,
            Automaton::Recognizer(r) => &r.dfa,
        }
    }

    pub fn into_dfa(self) -> Dfa {
        match self {
            Automaton::Dfa(d) => d,
            Automaton::Recognizer(r) => r.dfa,
        }
    }
}

impl From<Dfa> for Automaton {
    fn from(d: Dfa) -> Self {
        Automaton::Dfa(d)
    }
}

impl From<Recognizer> for Automaton {
    fn from(r: Recognizer) -> Self {
        Automaton::Recognizer(r)
    }
}

pub fn render(automaton: &Automaton) -> String {
    let dfa = automaton.dfa();
    let mut out = format!("dfa {} {}\n", dfa.num_states(), dfa.alphabet().letter_string());
    for q in 0..dfa.num_states() {
        let _ = write!(out, "{q}");
        if let Some(label) = dfa.label(q) {
            let _ = write!(out, " {label}");
        }
        out.push_str(" :");
        for x in dfa.alphabet().letters() {
            let _ = write!(out, " {}", dfa.step(q, x));
        }
        out.push('\n');
    }
    if let Automaton::Recognizer(r) = automaton {
        let _ = writeln!(out, "initial {}", r.initial);
        out.push_str("accepting");
        for q in r.accepting.iter() {
            let _ = write!(out, " {q}");
        }
        out.push('\n');
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: &str, line: usize, bound: usize, what: &str) -> Result<usize> {
    let value: usize = token
        .parse()
        .map_err(|_| parse_error(line, format!("expected {what}, found {token:?}")))?;
    if value >= bound {
        return Err(parse_error(
            line,
            format!("{what} {value} is out of range for {bound} states"),
        ));
    }
    Ok(value)
}

pub fn parse_automaton(text: &str) -> Result<Automaton> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_error(1, "empty input"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (n, alphabet) = match fields.as_slice() {
        ["dfa", n, letters] => {
            let n: usize = n
                .parse()
                .map_err(|_| parse_error(header_line, format!("bad state count {n:?}")))?;
            if n == 0 {
                return Err(parse_error(header_line, "state count must be positive"));
            }
            let alphabet = Alphabet::from_letter_string(letters)
                .map_err(|e| parse_error(header_line, e.to_string()))?;
            (n, alphabet)
        }
        _ => {
            return Err(parse_error(
                header_line,
                "expected header `dfa <num_states> <alphabet-letters>`",
            ))
        }
    };

    let mut rows: BTreeMap<usize, (Option<String>, Vec<usize>)> = BTreeMap::new();
    let mut initial = None;
    let mut accepting = None;
    for (line, text) in lines {
        let mut tokens = text.split_whitespace();
        let first = tokens.next().expect("nonempty line");
        // `initial:` and `accepting:` are accepted as spellings of the keywords.
        match first.strip_suffix(':').unwrap_or(first) {
            "initial" => {
                let token = tokens
                    .next()
                    .ok_or_else(|| parse_error(line, "missing initial state"))?;
                initial = Some(parse_index(token, line, n, "initial state")?);
                if tokens.next().is_some() {
                    return Err(parse_error(line, "only one initial state is allowed"));
                }
            }
            "accepting" => {
                let states = tokens
                    .map(|t| parse_index(t, line, n, "accepting state"))
                    .collect::<Result<Vec<_>>>()?;
                accepting = Some(StateSet::from_states(n, states));
            }
            _ => {
                let q = parse_index(first, line, n, "state index")?;
                let (head, targets) = text
                    .split_once(':')
                    .ok_or_else(|| parse_error(line, "missing ':' in transition row"))?;
                let mut head = head.split_whitespace().skip(1);
                let label = head.next().map(str::to_string);
                if head.next().is_some() {
                    return Err(parse_error(line, "labels may not contain whitespace"));
                }
                let targets = targets.split_whitespace().collect::<Vec<_>>();
                for token in &targets {
                    if token.chars().all(|c| c.is_ascii_alphabetic()) {
                        return Err(parse_error(line, format!("unknown letter or target {token:?}")));
                    }
                }
                if targets.len() > alphabet.size() {
                    return Err(parse_error(
                        line,
                        format!("{} targets for {} letters", targets.len(), alphabet.size()),
                    ));
                }
                let targets = targets
                    .iter()
                    .map(|t| parse_index(t, line, n, "target state"))
                    .collect::<Result<Vec<_>>>()?;
                if rows.insert(q, (label, targets)).is_some() {
                    return Err(parse_error(line, format!("duplicate row for state {q}")));
                }
            }
        }
    }

    let mut table = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for q in 0..n {
        let Some((label, targets)) = rows.remove(&q) else {
            return Err(Error::IncompleteDelta {
                state: q,
                letter: Alphabet::render(0),
            });
        };
        if targets.len() < alphabet.size() {
            return Err(Error::IncompleteDelta {
                state: q,
                letter: Alphabet::render(targets.len() as Letter),
            });
        }
        table.push(targets);
        labels.push(label);
    }
    let mut dfa = Dfa::from_rows(alphabet, &table)?;
    if labels.iter().any(Option::is_some) {
        let labels = labels
            .into_iter()
            .enumerate()
            .map(|(q, l)| l.unwrap_or_else(|| q.to_string()))
            .collect();
        dfa = dfa.with_labels(labels)?;
    }
    if initial.is_none() && accepting.is_none() {
        return Ok(Automaton::Dfa(dfa));
    }
    let accepting = accepting.unwrap_or_else(|| StateSet::empty(n));
    Ok(Automaton::Recognizer(Recognizer::new(
        dfa,
        initial.unwrap_or(0),
        accepting,
    )?))
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz description: one node per state, parallel edges merged into a
/// single edge with a comma-joined label, accepting states double-circled.
pub fn export_dot(automaton: &Automaton) -> String {
    let dfa = automaton.dfa();
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n");
    let accepting = match automaton {
        Automaton::Recognizer(r) => Some(r),
        Automaton::Dfa(_) => None,
    };
    if let Some(r) = accepting {
        let _ = writeln!(out, "  start [shape=point];\n  start -> q{};", r.initial);
    }
    for q in 0..dfa.num_states() {
        let label = dfa.label(q).map_or_else(|| q.to_string(), dot_escape);
        let shape = match accepting {
            Some(r) if r.accepting.contains(q) => ", shape=doublecircle",
            _ => "",
        };
        let _ = writeln!(out, "  q{q} [label=\"{label}\"{shape}];");
    }
    for q in 0..dfa.num_states() {
        let mut edges: BTreeMap<usize, Vec<char>> = BTreeMap::new();
        for x in dfa.alphabet().letters() {
            edges.entry(dfa.step(q, x)).or_default().push(Alphabet::render(x));
        }
        let mut edges: Vec<(usize, Vec<char>)> = edges.into_iter().collect();
        edges.sort_by_key(|(_, letters)| letters[0]);
        for (t, letters) in edges {
            let label: Vec<String> = letters.iter().map(char::to_string).collect();
            let _ = writeln!(out, "  q{q} -> q{t} [label=\"{}\"];", label.join(","));
        }
    }
    out.push_str("}\n");
    out
}
