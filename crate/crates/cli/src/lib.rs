// Copyright 2026 The idealsync Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for `idealsync`.
//!
//! [`run`] parses arguments, executes one subcommand and writes its report to
//! the given streams, returning the process exit status. Reports are
//! line-oriented `key=value` text, or a JSON object with the same keys under
//! `--json`.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use idealsync_core::analysis::{
    min_strongly_connected_search, reset_complexity_search, verify_construction, SearchLimits,
    SearchResult, SynConfig, SynReport, Verification,
};
use idealsync_core::constructions::{build_b_u, build_c_s, build_d_uv, build_de_bruijn, DuvOptions};
use idealsync_core::format::{export_dot, parse_automaton, render, Automaton};
use idealsync_core::languages::minimize;
use idealsync_core::{Alphabet, Dfa, Error, GeneratorSet, Word};
use serde_json::{json, Map, Value};

#[derive(Debug, Parser)]
#[command(
    name = "idealsync",
    version,
    about = "Build and verify strongly connected automata synchronized by ideal languages"
)]
struct Cli {
    /// Emit reports as JSON objects.
    #[arg(long, global = true)]
    json: bool,

    /// Alphabet letters (e.g. `abc`) or size; inferred from the words otherwise.
    #[arg(long, global = true, value_name = "LETTERS")]
    alphabet: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the De Bruijn automaton on words of length N.
    Debruijn(LevelArgs),
    /// Print the modified De Bruijn automaton for a set of words of one length.
    Bu(GensArgs),
    /// Print the quotient automaton for an anti-factorial set of words.
    Cs(GensArgs),
    /// Print the two-word automaton for generators U and V.
    Duv(DuvArgs),
    /// Report synchronization facts for an automaton file.
    Syn(SynArgs),
    /// Check that a construction is strongly connected and synchronized exactly by its ideal.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Smallest strongly connected automata synchronized exactly by the ideal.
    SearchMsa(SearchArgs),
    /// Smallest automata of any shape synchronized exactly by the ideal.
    SearchRc(SearchArgs),
    /// Print an automaton file in Graphviz DOT syntax.
    ExportDot(FileArgs),
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    Debruijn(LevelArgs),
    Bu(GensArgs),
    Cs(GensArgs),
    Duv(DuvArgs),
    /// Verify an automaton file against a generator set.
    File {
        #[command(flatten)]
        file: FileArgs,
        /// Comma-separated generators, e.g. `aa,aba`.
        #[arg(long)]
        gens: String,
    },
}

#[derive(Debug, Args)]
struct LevelArgs {
    /// Word length.
    #[arg(long)]
    n: usize,
}

#[derive(Debug, Args)]
struct GensArgs {
    /// Comma-separated generators, e.g. `aa,aba`.
    #[arg(long)]
    gens: String,
}

#[derive(Debug, Args)]
struct DuvArgs {
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    /// Allow alphabets beyond {a, b}; the result is verified before it is returned.
    #[arg(long)]
    general: bool,
}

#[derive(Debug, Args)]
struct FileArgs {
    /// Automaton file; standard input when omitted.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SynArgs {
    #[command(flatten)]
    file: FileArgs,
    /// Also print the minimal recognizer of the synchronizing language.
    #[arg(long)]
    recognizer: bool,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    gens: String,
    /// Largest state count to enumerate.
    #[arg(long, default_value_t = 4)]
    kmax: usize,
    /// Largest number of transition tables for one state count.
    #[arg(long, default_value_t = SearchLimits::default().max_tables)]
    max_tables: u64,
    /// Print every witness automaton.
    #[arg(long)]
    witnesses: bool,
}

/// A report: ordered `key=value` fields plus optional trailing automata.
struct Report {
    fields: Vec<(&'static str, Value)>,
    automata: Vec<(&'static str, Automaton)>,
    ok: bool,
}

impl Report {
    fn new() -> Self {
        Report {
            fields: Vec::new(),
            automata: Vec::new(),
            ok: true,
        }
    }

    fn field(mut self, key: &'static str, value: impl Into<Value>) -> Self {
        self.fields.push((key, value.into()));
        self
    }

    fn write(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            let mut map = Map::new();
            for (k, v) in &self.fields {
                map.insert((*k).to_string(), v.clone());
            }
            for (k, a) in &self.automata {
                let entry = map.entry(*k).or_insert_with(|| Value::Array(Vec::new()));
                if let Value::Array(items) = entry {
                    items.push(Value::String(render(a)));
                }
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&Value::Object(map))?)
        } else {
            let line: Vec<String> = self
                .fields
                .iter()
                .map(|(k, v)| format!("{k}={}", plain(v)))
                .collect();
            writeln!(out, "{}", line.join(" "))?;
            for (_, a) in &self.automata {
                writeln!(out)?;
                out.write_all(render(a).as_bytes())?;
            }
            Ok(())
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

enum Output {
    Text(String),
    Automaton(Automaton),
    Report(Report),
}

/// Runs the command line `args` (including the program name) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let stream: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = stream.write_all(text.as_bytes());
            return code;
        }
    };
    let json = cli.json;
    match execute(cli) {
        Ok(output) => {
            let (written, status) = match output {
                Output::Text(text) => (out.write_all(text.as_bytes()), 0),
                Output::Automaton(a) => {
                    let text = if json {
                        serde_json::to_string_pretty(&json!({ "automaton": render(&a) }))
                            .map(|s| s + "\n")
                            .expect("string values serialize")
                    } else {
                        render(&a)
                    };
                    (out.write_all(text.as_bytes()), 0)
                }
                Output::Report(r) => (r.write(json, out), if r.ok { 0 } else { 1 }),
            };
            match written {
                Ok(()) => status,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    1
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cli: Cli) -> Result<Output, Error> {
    let alphabet = cli.alphabet.as_deref().map(parse_alphabet).transpose()?;
    let config = SynConfig::from_env()?;
    match cli.command {
        Command::Debruijn(a) => Ok(Output::Automaton(de_bruijn(&a, alphabet)?.into())),
        Command::Bu(a) => Ok(Output::Automaton(b_u(&a, alphabet)?.into())),
        Command::Cs(a) => Ok(Output::Automaton(build_c_s(&generators(&a.gens, alphabet)?)?.into())),
        Command::Duv(a) => Ok(Output::Automaton(d_uv(&a, alphabet)?.0.into())),
        Command::Syn(a) => syn(&a, &config),
        Command::Verify { target } => {
            let (dfa, set) = match target {
                VerifyTarget::Debruijn(a) => {
                    let dfa = de_bruijn(&a, alphabet)?;
                    let set = GeneratorSet::level(dfa.alphabet(), a.n);
                    (dfa, set)
                }
                VerifyTarget::Bu(a) => (b_u(&a, alphabet)?, generators(&a.gens, alphabet)?),
                VerifyTarget::Cs(a) => {
                    let set = generators(&a.gens, alphabet)?;
                    (build_c_s(&set)?, set)
                }
                VerifyTarget::Duv(a) => d_uv(&a, alphabet)?,
                VerifyTarget::File { file, gens } => {
                    let dfa = read_automaton(&file)?.into_dfa();
                    let set = generators(&gens, Some(alphabet.unwrap_or(dfa.alphabet())))?;
                    (dfa, set)
                }
            };
            Ok(Output::Report(verification_report(&verify_construction(&dfa, &set, &config)?)))
        }
        Command::SearchMsa(a) => search(&a, alphabet, true),
        Command::SearchRc(a) => search(&a, alphabet, false),
        Command::ExportDot(a) => Ok(Output::Text(export_dot(&read_automaton(&a)?))),
    }
}

fn parse_alphabet(s: &str) -> Result<Alphabet, Error> {
    match s.parse::<usize>() {
        Ok(size) => Alphabet::new(size),
        Err(_) => Alphabet::from_letter_string(s),
    }
}

fn generators(list: &str, alphabet: Option<Alphabet>) -> Result<GeneratorSet, Error> {
    GeneratorSet::parse(list, alphabet)
}

fn de_bruijn(a: &LevelArgs, alphabet: Option<Alphabet>) -> Result<Dfa, Error> {
    build_de_bruijn(a.n, alphabet.unwrap_or(Alphabet::binary()))
}

fn b_u(a: &GensArgs, alphabet: Option<Alphabet>) -> Result<Dfa, Error> {
    let set = generators(&a.gens, alphabet)?;
    build_b_u(&set, set.max_len())
}

fn d_uv(a: &DuvArgs, alphabet: Option<Alphabet>) -> Result<(Dfa, GeneratorSet), Error> {
    let u: Word = a.u.parse()?;
    let v: Word = a.v.parse()?;
    let alphabet = alphabet.unwrap_or_else(|| Alphabet::infer([&u, &v]));
    let dfa = build_d_uv(&u, &v, alphabet, DuvOptions { general_alphabet: a.general })?;
    let set = GeneratorSet::new(alphabet, [u, v])?;
    Ok((dfa, set))
}

fn read_automaton(a: &FileArgs) -> Result<Automaton, Error> {
    let text = match &a.file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("standard input: {e}")))?;
            s
        }
    };
    parse_automaton(&text)
}

fn reset_value(w: &Option<Word>) -> Value {
    w.as_ref().map_or(Value::Null, |w| Value::String(w.to_string()))
}

fn syn_fields(r: Report, s: &SynReport) -> Report {
    r.field("states", s.state_count)
        .field("strongly_connected", s.strongly_connected)
        .field("synchronizing", s.is_synchronizing)
}

fn syn(a: &SynArgs, config: &SynConfig) -> Result<Output, Error> {
    let dfa = read_automaton(&a.file)?.into_dfa();
    let s = SynReport::compute(&dfa, config)?;
    let syn_min = minimize(&s.syn_recognizer);
    let mut report = syn_fields(Report::new(), &s)
        .field("shortest_reset", reset_value(&s.shortest_reset))
        .field("syn_states", syn_min.num_states());
    if a.recognizer {
        report.automata.push(("syn_recognizer", syn_min.into()));
    }
    Ok(Output::Report(report))
}

fn verification_report(v: &Verification) -> Report {
    let mut report = Report::new()
        .field("states", v.report.state_count)
        .field("strongly_connected", v.report.strongly_connected)
        .field("syn_equals_ideal", v.syn_equals_ideal)
        .field("shortest_reset", reset_value(&v.report.shortest_reset));
    report.ok = v.passed();
    report
}

fn search(a: &SearchArgs, alphabet: Option<Alphabet>, strongly_connected: bool) -> Result<Output, Error> {
    let set = generators(&a.gens, alphabet)?;
    let limits = SearchLimits { max_tables: a.max_tables };
    let result: SearchResult = if strongly_connected {
        min_strongly_connected_search(&set, a.kmax, &limits)?
    } else {
        reset_complexity_search(&set, a.kmax, &limits)?
    };
    let mut report = Report::new()
        .field("found", result.found.is_some())
        .field("size", result.size().map_or(Value::Null, Value::from))
        .field("witnesses", result.witnesses.len())
        .field("tables_searched", result.tables_searched)
        .field("kmax", result.kmax);
    if a.witnesses {
        report
            .automata
            .extend(result.witnesses.into_iter().map(|w| ("witness_automata", w.into())));
    }
    Ok(Output::Report(report))
}
