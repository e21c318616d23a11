// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use idealsync_cli::run;
use idealsync_core::format::parse_automaton;

struct Outcome {
    status: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("idealsync").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    Outcome {
        status,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

/// Runs the real binary, feeding `stdin` and setting `env`.
fn binary(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Outcome {
    let mut child = Command::new(env!("CARGO_BIN_EXE_idealsync"))
        .args(args)
        .env_remove("IDEALSYNC_SUBSET_CAP")
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    Outcome {
        status: output.status.code().unwrap(),
        stdout: String::from_utf8(output.stdout).unwrap(),
        stderr: String::from_utf8(output.stderr).unwrap(),
    }
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("idealsync-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn de_bruijn_prints_an_automaton_file() {
    let o = cli(&["debruijn", "--n", "3"]);
    assert_eq!(o.status, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("dfa 8 ab\n"));
    let dfa = parse_automaton(&o.stdout).unwrap().into_dfa();
    assert_eq!(dfa.num_states(), 8);
    assert!(dfa.is_strongly_connected());
}

#[test]
fn alphabet_override_widens_de_bruijn() {
    let o = cli(&["--alphabet", "abc", "debruijn", "--n", "2"]);
    assert_eq!(o.status, 0, "{}", o.stderr);
    // Extra letters act like `a` on the binary De Bruijn automaton.
    assert!(o.stdout.starts_with("dfa 4 abc\n"), "{}", o.stdout);
    let dfa = parse_automaton(&o.stdout).unwrap().into_dfa();
    assert_eq!(dfa.action(2), dfa.action(0));
    assert_eq!(cli(&["--alphabet", "3", "debruijn", "--n", "2"]).stdout, o.stdout);
}

#[test]
fn verify_quotient_construction() {
    let o = cli(&["verify", "cs", "--gens", "aa,aba"]);
    assert_eq!(o.status, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "states=7 strongly_connected=yes syn_equals_ideal=yes shortest_reset=aa\n"
    );
}

#[test]
fn verify_every_construction() {
    for args in [
        &["verify", "debruijn", "--n", "4"][..],
        &["verify", "bu", "--gens", "aaa,abb,bab"],
        &["verify", "duv", "--u", "abaab", "--v", "babab"],
        &["verify", "duv", "--u", "aca", "--v", "bcb", "--general"],
    ] {
        let o = cli(args);
        assert_eq!(o.status, 0, "{args:?}: {}", o.stderr);
        assert!(o.stdout.contains("strongly_connected=yes syn_equals_ideal=yes"), "{args:?}");
    }
    let o = cli(&["verify", "duv", "--u", "abaab", "--v", "babab"]);
    assert!(o.stdout.starts_with("states=10 "));
    assert!(o.stdout.ends_with("shortest_reset=abaab\n"));
}

#[test]
fn json_report_has_the_same_keys() {
    let text = cli(&["verify", "cs", "--gens", "aa,aba"]).stdout;
    let o = cli(&["--json", "verify", "cs", "--gens", "aa,aba"]);
    assert_eq!(o.status, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let json_keys: BTreeSet<String> = v.as_object().unwrap().keys().cloned().collect();
    let text_keys: BTreeSet<String> = text
        .split_whitespace()
        .map(|kv| kv.split_once('=').unwrap().0.to_string())
        .collect();
    assert_eq!(json_keys, text_keys);
    assert_eq!(v["states"], 7);
    assert_eq!(v["syn_equals_ideal"], true);
}

#[test]
fn excluded_shape_is_rejected() {
    let o = cli(&["duv", "--u", "abaab", "--v", "abbbb"]);
    assert_ne!(o.status, 0);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("ab^(n-1)"), "{}", o.stderr);
}

#[test]
fn construction_errors_surface_verbatim() {
    let o = cli(&["cs", "--gens", "ab,aab"]);
    assert_eq!(o.status, 1);
    assert_eq!(
        o.stderr,
        "error: generator set is not anti-factorial: ab is a factor of aab\n"
    );
    let o = cli(&["bu", "--gens", "aa,ab,ba,bb"]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("De Bruijn construction instead"));
    let o = cli(&["bu", "--gens", "aa,aab"]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("uniform length"));
}

#[test]
fn usage_errors_are_nonzero() {
    assert_ne!(cli(&["bogus"]).status, 0);
    assert_ne!(cli(&["debruijn"]).status, 0);
    assert_ne!(cli(&["debruijn", "--n", "2", "--frobnicate"]).status, 0);
    assert_ne!(cli(&[]).status, 0);
    let help = cli(&["--help"]);
    assert_eq!(help.status, 0);
    assert!(help.stdout.contains("search-msa"));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        &["search-msa", "--gens", "aa,ab,ba,bb", "--kmax", "4", "--witnesses"][..],
        &["search-rc", "--gens", "aa,ab,ba,bb", "--kmax", "3", "--witnesses"],
        &["cs", "--gens", "aab,bab,bbb"],
    ] {
        let first = cli(args);
        assert_eq!(first.status, 0, "{}", first.stderr);
        for _ in 0..3 {
            assert_eq!(cli(args).stdout, first.stdout, "{args:?}");
        }
    }
}

#[test]
fn searches_report_minimum_sizes() {
    let o = cli(&["search-msa", "--gens", "aa,ab,ba,bb", "--kmax", "4", "--witnesses"]);
    assert!(o.stdout.starts_with("found=yes size=4 witnesses=1 "), "{}", o.stdout);
    let witness = o.stdout.split_once("\n\n").unwrap().1;
    assert_eq!(parse_automaton(witness).unwrap().dfa().num_states(), 4);
    let o = cli(&["search-rc", "--gens", "aa,ab,ba,bb", "--kmax", "3"]);
    assert!(o.stdout.starts_with("found=yes size=3 "), "{}", o.stdout);
    let o = cli(&["search-msa", "--gens", "aa,ab,ba,bb", "--kmax", "3"]);
    assert_eq!(o.status, 0);
    assert!(o.stdout.starts_with("found=no size=none witnesses=0 "), "{}", o.stdout);
    let o = cli(&["search-rc", "--gens", "ab", "--kmax", "5"]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("more than the limit"), "{}", o.stderr);
}

#[test]
fn verify_file_flags_a_non_strongly_connected_automaton() {
    // Minimal recognizer of the ideal generated by aa, read as a plain automaton.
    let path = temp_file("aa.dfa", "dfa 3 ab\n0 : 1 0\n1 : 2 0\n2 : 2 2\n");
    let o = cli(&["verify", "file", "--file", path.to_str().unwrap(), "--gens", "aa"]);
    assert_eq!(o.status, 1);
    assert_eq!(
        o.stdout,
        "states=3 strongly_connected=no syn_equals_ideal=yes shortest_reset=aa\n"
    );
}

#[test]
fn syn_reads_standard_input() {
    let dfa = cli(&["debruijn", "--n", "2"]).stdout;
    let o = binary(&["syn", "--recognizer"], &dfa, &[]);
    assert_eq!(o.status, 0, "{}", o.stderr);
    let (line, rest) = o.stdout.split_once("\n\n").unwrap();
    assert_eq!(
        line,
        "states=4 strongly_connected=yes synchronizing=yes shortest_reset=aa syn_states=3"
    );
    let r = parse_automaton(rest).unwrap();
    assert_eq!(r.dfa().num_states(), 3);
}

#[test]
fn subset_cap_comes_from_the_environment() {
    let dfa = cli(&["debruijn", "--n", "3"]).stdout;
    let capped = binary(&["syn"], &dfa, &[("IDEALSYNC_SUBSET_CAP", "4")]);
    assert_eq!(capped.status, 1);
    assert!(capped.stderr.contains("8 states exceed the subset exploration cap of 4"));
    assert_eq!(binary(&["syn"], &dfa, &[("IDEALSYNC_SUBSET_CAP", "8")]).status, 0);
    assert_eq!(binary(&["syn"], &dfa, &[("IDEALSYNC_SUBSET_CAP", "x")]).status, 1);
}

#[test]
fn malformed_files_are_reported() {
    let missing = temp_file("missing.dfa", "dfa 2 ab\n0 : 0 1\n");
    let o = cli(&["syn", "--file", missing.to_str().unwrap()]);
    assert_eq!(o.status, 1);
    assert_eq!(o.stderr, "error: incomplete delta at (1,a)\n");
    let out_of_range = temp_file("range.dfa", "dfa 1 ab\n0 : 0 0\naccepting 5\n");
    let o = cli(&["export-dot", "--file", out_of_range.to_str().unwrap()]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("line 3"), "{}", o.stderr);
    let o = cli(&["syn", "--file", "/nonexistent/automaton"]);
    assert_eq!(o.status, 1);
}

fn dot_edges(dot: &str) -> (Vec<String>, Vec<(usize, String, usize)>) {
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for line in dot.lines().map(str::trim) {
        if let Some((lhs, rest)) = line.split_once(" -> ") {
            let (rhs, label) = rest.split_once(" [label=\"").unwrap();
            let from = lhs.trim_start_matches('q').parse().unwrap();
            let to = rhs.trim_start_matches('q').parse().unwrap();
            edges.push((from, label.trim_end_matches("\"];").to_string(), to));
        } else if line.starts_with('q') && line.contains("[label=") {
            labels.push(line.split('"').nth(1).unwrap().to_string());
        }
    }
    (labels, edges)
}

#[test]
fn dot_export_merges_parallel_edges() {
    let dfa = cli(&["debruijn", "--n", "3"]).stdout;
    let path = temp_file("db3.dfa", &dfa);
    let o = cli(&["export-dot", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status, 0);
    let (labels, edges) = dot_edges(&o.stdout);
    assert_eq!(labels.len(), 8);
    assert!(edges.len() <= 16);
    let single = temp_file("one.dfa", "dfa 1 ab\n0 : 0 0\n");
    let o = cli(&["export-dot", "--file", single.to_str().unwrap()]);
    let (labels, edges) = dot_edges(&o.stdout);
    assert_eq!(labels.len(), 1);
    assert_eq!(edges, [(0, "a,b".to_string(), 0)]);
}

#[test]
fn dot_export_of_modified_de_bruijn_matches_the_figure() {
    let dfa = cli(&["bu", "--gens", "aaa,abb,bab"]).stdout;
    let path = temp_file("bu.dfa", &dfa);
    let (labels, edges) = dot_edges(&cli(&["export-dot", "--file", path.to_str().unwrap()]).stdout);
    let drawn: BTreeSet<(String, char, String)> = edges
        .iter()
        .flat_map(|(f, ls, t)| {
            ls.split(',')
                .map(|l| (labels[*f].clone(), l.chars().next().unwrap(), labels[*t].clone()))
                .collect::<Vec<_>>()
        })
        .collect();
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/b_u_aaa_abb_bab.edges");
    let expected: BTreeSet<(String, char, String)> = std::fs::read_to_string(golden)
        .unwrap()
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let p: Vec<&str> = l.split_whitespace().collect();
            (p[0].to_string(), p[1].chars().next().unwrap(), p[2].to_string())
        })
        .collect();
    assert_eq!(drawn, expected);
}

#[test]
fn json_automaton_output() {
    let o = cli(&["--json", "debruijn", "--n", "1"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    let text = v["automaton"].as_str().unwrap();
    assert_eq!(text, cli(&["debruijn", "--n", "1"]).stdout);
}
