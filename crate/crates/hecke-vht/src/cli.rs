//! Subcommand surface over the whole library.
//!
//! Flags are parsed by hand: the grammar is tiny and the error split
//! matters more than flag ergonomics. Usage problems exit 2, domain and
//! I/O problems exit 1, a failed verification run exits 3.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{Read, Write};

use serde_json::json;

use crate::error::Error;
use crate::hecke::{hecke_insert, hecke_reverse_insert, insertion_tableau, longest_monotone, Word};
use crate::linked::{enumerate_linked, Arc, EndpointSets, LinkedPartition};
use crate::stats::{fmt_set, joint_distribution, verify_suite};
use crate::tableau::IncreasingTableau;
use crate::text::{parse_cell, parse_endpoint_set, Document};
use crate::vacillating::{phi_inverse, phi_with_trace, psi, word_trace, VacillatingHeckeTableau};

const USAGE: &str = "hecke-vht <subcommand> [flags]

subcommands:
  insert --tableau T --x N           insert a letter; prints tableau, corner, alpha
  rinsert --tableau T --corner r,c --alpha 0|1
                                     undo an insertion; prints tableau and letter
  word-tableau WORD                  insertion tableau of a word plus is/de statistics
  to-linked --vht V [--trace] [--words]
                                     map a vacillating sequence to its linked partition
  to-vht --linked P                  inverse map, linked partition to vacillating sequence
  conjugate --linked P               the crossing/nesting-swapping involution
  endpoints --linked P               endpoint sets and the front-representation flag
  stats --n N [--left S --right T]   joint crossing/nesting distribution and symmetry verdict
  enumerate --n N [--noncrossing] [--setpartition] [--left S --right T]
                                     stream the linked partitions of [n]
  verify --n N                       run the verification suite (exit 3 on any failure)

object flags accept literal text, @file, or @- for standard input; endpoint
sets are comma-separated vertices or \"-\" for the empty set. --json switches
any subcommand to one JSON record per object.
exit codes: 0 success, 1 domain error, 2 usage error, 3 verification failure.";

enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Io(e)
    }
}

/// Entry point shared by the binary and the tests. Returns the exit code.
pub fn run(args: &[String], stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match dispatch(args, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "usage error: {msg}");
            let _ = writeln!(stderr, "run \"hecke-vht help\" for usage");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "io error: {e}");
            1
        }
    }
}

fn dispatch(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let Some(cmd) = args.first() else {
        return Err(Failure::Usage("missing subcommand".into()));
    };
    let rest = &args[1..];
    match cmd.as_str() {
        "help" | "--help" | "-h" => {
            writeln!(out, "{USAGE}")?;
            Ok(0)
        }
        "insert" => cmd_insert(rest, out),
        "rinsert" => cmd_rinsert(rest, out),
        "word-tableau" => cmd_word_tableau(rest, out),
        "to-linked" => cmd_to_linked(rest, out),
        "to-vht" => cmd_to_vht(rest, out),
        "conjugate" => cmd_conjugate(rest, out),
        "endpoints" => cmd_endpoints(rest, out),
        "stats" => cmd_stats(rest, out),
        "enumerate" => cmd_enumerate(rest, out),
        "verify" => cmd_verify(rest, out),
        other => Err(Failure::Usage(format!("unknown subcommand {other:?}"))),
    }
}

struct Parsed {
    values: BTreeMap<String, String>,
    switches: BTreeSet<String>,
    positionals: Vec<String>,
}

impl Parsed {
    fn required(&self, name: &str) -> Result<&str, Failure> {
        self.values
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| Failure::Usage(format!("missing --{name}")))
    }

    fn value(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn switch(&self, name: &str) -> bool {
        self.switches.contains(name)
    }
}

fn parse_flags(
    args: &[String],
    value_flags: &[&str],
    switch_flags: &[&str],
    max_positionals: usize,
) -> Result<Parsed, Failure> {
    let mut parsed = Parsed {
        values: BTreeMap::new(),
        switches: BTreeSet::new(),
        positionals: Vec::new(),
    };
    let mut i = 0;
    while i < args.len() {
        let arg = &args[i];
        i += 1;
        let Some(body) = arg.strip_prefix("--") else {
            parsed.positionals.push(arg.clone());
            continue;
        };
        let (name, inline) = match body.split_once('=') {
            Some((n, v)) => (n, Some(v.to_string())),
            None => (body, None),
        };
        if switch_flags.contains(&name) {
            if inline.is_some() {
                return Err(Failure::Usage(format!("--{name} takes no value")));
            }
            if !parsed.switches.insert(name.to_string()) {
                return Err(Failure::Usage(format!("duplicate --{name}")));
            }
        } else if value_flags.contains(&name) {
            let value = match inline {
                Some(v) => v,
                None => {
                    if i == args.len() {
                        return Err(Failure::Usage(format!("--{name} needs a value")));
                    }
                    i += 1;
                    args[i - 1].clone()
                }
            };
            if parsed.values.insert(name.to_string(), value).is_some() {
                return Err(Failure::Usage(format!("duplicate --{name}")));
            }
        } else {
            return Err(Failure::Usage(format!("unknown flag --{name}")));
        }
    }
    if parsed.positionals.len() > max_positionals {
        return Err(Failure::Usage(format!(
            "unexpected argument {:?}",
            parsed.positionals[max_positionals]
        )));
    }
    Ok(parsed)
}

/// Object arguments may be given inline, as `@path`, or as `@-` for stdin.
fn resolve(raw: &str) -> Result<String, Failure> {
    let Some(path) = raw.strip_prefix('@') else {
        return Ok(raw.to_string());
    };
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        return Ok(buf);
    }
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(std::io::Error::new(e.kind(), format!("{path}: {e}"))))
}

fn parse_number(name: &str, raw: &str) -> Result<usize, Failure> {
    raw.trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("--{name} expects a number, got {raw:?}")))
}

fn restriction_from(parsed: &Parsed) -> Result<Option<EndpointSets>, Failure> {
    match (parsed.value("left"), parsed.value("right")) {
        (None, None) => Ok(None),
        (Some(left), Some(right)) => Ok(Some((
            parse_endpoint_set(left)?,
            parse_endpoint_set(right)?,
        ))),
        _ => Err(Failure::Usage("--left and --right go together".into())),
    }
}

fn doc_value(doc: &Document) -> serde_json::Value {
    serde_json::from_str(&doc.to_json()).expect("document json is well formed")
}

fn fmt_arcs(arcs: &[Arc]) -> String {
    if arcs.is_empty() {
        return "-".into();
    }
    let strs: Vec<String> = arcs.iter().map(|a| a.to_string()).collect();
    strs.join(",")
}

fn cmd_insert(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["tableau", "x"], &["json"], 0)?;
    let tableau: IncreasingTableau = resolve(parsed.required("tableau")?)?.parse()?;
    let x = parse_number("x", parsed.required("x")?)?;
    if x == 0 {
        return Err(Failure::Domain(Error::NonPositive));
    }
    let outcome = hecke_insert(&tableau, x);
    if parsed.switch("json") {
        let record = json!({
            "kind": "insertion",
            "tableau": doc_value(&Document::Tableau(outcome.tableau.clone())),
            "corner": [outcome.corner.row, outcome.corner.col],
            "alpha": outcome.alpha(),
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "tableau: {}", outcome.tableau)?;
        writeln!(out, "corner: {}", outcome.corner)?;
        writeln!(out, "alpha: {}", outcome.alpha())?;
    }
    Ok(0)
}

fn cmd_rinsert(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["tableau", "corner", "alpha"], &["json"], 0)?;
    let tableau: IncreasingTableau = resolve(parsed.required("tableau")?)?.parse()?;
    let corner = parse_cell(parsed.required("corner")?)?;
    let alpha = match parsed.required("alpha")? {
        "0" => false,
        "1" => true,
        other => {
            return Err(Failure::Usage(format!(
                "--alpha expects 0 or 1, got {other:?}"
            )))
        }
    };
    let (previous, letter) = hecke_reverse_insert(&tableau, corner, alpha)?;
    if parsed.switch("json") {
        let record = json!({
            "kind": "reverse-insertion",
            "tableau": doc_value(&Document::Tableau(previous.clone())),
            "letter": letter,
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "tableau: {previous}")?;
        writeln!(out, "letter: {letter}")?;
    }
    Ok(0)
}

fn cmd_word_tableau(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &[], &["json"], 1)?;
    let [raw] = parsed.positionals.as_slice() else {
        return Err(Failure::Usage(
            "word-tableau takes one word argument".into(),
        ));
    };
    let word: Word = resolve(raw)?.parse()?;
    let tableau = insertion_tableau(&word);
    let (is, de) = longest_monotone(&word);
    if parsed.switch("json") {
        let record = json!({
            "kind": "word-tableau",
            "tableau": doc_value(&Document::Tableau(tableau.clone())),
            "is": is,
            "de": de,
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "{tableau}")?;
        writeln!(out, "is={is} de={de}")?;
    }
    Ok(0)
}

fn cmd_to_linked(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["vht"], &["trace", "words", "json"], 0)?;
    let vht: VacillatingHeckeTableau = resolve(parsed.required("vht")?)?.parse()?;
    let (linked, trace) = phi_with_trace(&vht);
    let words = parsed.switch("words").then(|| word_trace(&vht));
    if parsed.switch("json") {
        let mut record = json!({
            "kind": "phi",
            "linked": doc_value(&Document::Linked(linked.clone())),
        });
        if parsed.switch("trace") {
            let tableaux: Vec<_> = trace
                .tableaux
                .iter()
                .map(|t| doc_value(&Document::HeckeTableau(t.clone())))
                .collect();
            let edges: Vec<Vec<[usize; 2]>> = trace
                .edge_sets
                .iter()
                .map(|es| es.iter().map(|a| [a.left(), a.right()]).collect())
                .collect();
            record["trace"] = json!({ "tableaux": tableaux, "edges": edges });
        }
        if let Some(words) = &words {
            record["words"] = json!(words
                .iter()
                .map(|w| w.letters().to_vec())
                .collect::<Vec<_>>());
        }
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "{linked}")?;
        if parsed.switch("trace") {
            for (i, (t, edges)) in trace.tableaux.iter().zip(&trace.edge_sets).enumerate() {
                writeln!(out, "T{i}={t} E{i}={}", fmt_arcs(edges))?;
            }
        }
        if let Some(words) = &words {
            for (i, w) in words.iter().enumerate() {
                writeln!(out, "w{i}={w}")?;
            }
        }
    }
    Ok(0)
}

fn cmd_to_vht(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["linked"], &["json"], 0)?;
    let linked: LinkedPartition = resolve(parsed.required("linked")?)?.parse()?;
    let vht = phi_inverse(&linked);
    let doc = Document::Vht(vht);
    if parsed.switch("json") {
        writeln!(out, "{}", doc.to_json())?;
    } else {
        writeln!(out, "{}", doc.serialize())?;
    }
    Ok(0)
}

fn cmd_conjugate(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["linked"], &["json"], 0)?;
    let linked: LinkedPartition = resolve(parsed.required("linked")?)?.parse()?;
    let doc = Document::Linked(psi(&linked));
    if parsed.switch("json") {
        writeln!(out, "{}", doc.to_json())?;
    } else {
        writeln!(out, "{}", doc.serialize())?;
    }
    Ok(0)
}

fn cmd_endpoints(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["linked"], &["json"], 0)?;
    let linked: LinkedPartition = resolve(parsed.required("linked")?)?.parse()?;
    let (s, t) = linked.endpoints();
    let front = linked.is_front_representation();
    if parsed.switch("json") {
        let record = json!({
            "kind": "endpoints",
            "n": linked.n(),
            "s": s.iter().copied().collect::<Vec<_>>(),
            "t": t.iter().copied().collect::<Vec<_>>(),
            "front": front,
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "S={}", fmt_set(&s))?;
        writeln!(out, "T={}", fmt_set(&t))?;
        writeln!(out, "front={front}")?;
    }
    Ok(0)
}

fn cmd_stats(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["n", "left", "right"], &["json"], 0)?;
    let n = parse_number("n", parsed.required("n")?)?;
    let distribution = joint_distribution(n, restriction_from(&parsed)?)?;
    if parsed.switch("json") {
        let record = json!({
            "kind": "stats",
            "distribution": doc_value(&Document::Distribution(distribution.clone())),
            "symmetric": distribution.is_symmetric(),
        });
        writeln!(out, "{record}")?;
    } else {
        writeln!(out, "{distribution}")?;
        writeln!(out, "{}", distribution.render_matrix())?;
        writeln!(out, "symmetric={}", distribution.is_symmetric())?;
    }
    Ok(0)
}

fn cmd_enumerate(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(
        args,
        &["n", "left", "right"],
        &["noncrossing", "setpartition", "json"],
        0,
    )?;
    let n = parse_number("n", parsed.required("n")?)?;
    let restriction = restriction_from(&parsed)?;
    if let Some((s, t)) = &restriction {
        for &v in s.iter().chain(t) {
            if v < 1 || v > n {
                return Err(Failure::Domain(Error::SizeCap {
                    what: "endpoint vertex",
                    max: n,
                    got: v,
                }));
            }
        }
    }
    for p in enumerate_linked(n)? {
        if parsed.switch("noncrossing") && p.crossing_nesting().0 > 1 {
            continue;
        }
        if parsed.switch("setpartition") && !p.is_front_representation() {
            continue;
        }
        if let Some((s, t)) = &restriction {
            let (ps, pt) = p.endpoints();
            if &ps != s || &pt != t {
                continue;
            }
        }
        let doc = Document::Linked(p);
        if parsed.switch("json") {
            writeln!(out, "{}", doc.to_json())?;
        } else {
            writeln!(out, "{}", doc.serialize())?;
        }
    }
    Ok(0)
}

fn cmd_verify(args: &[String], out: &mut dyn Write) -> Result<i32, Failure> {
    let parsed = parse_flags(args, &["n"], &["json"], 0)?;
    let n = parse_number("n", parsed.required("n")?)?;
    let report = verify_suite(n)?;
    let passed = report.passed();
    let doc = Document::Report(report);
    if parsed.switch("json") {
        writeln!(out, "{}", doc.to_json())?;
    } else {
        writeln!(out, "{}", doc.serialize())?;
    }
    Ok(if passed { 0 } else { 3 })
}
