//! Canonical text forms for every object, plus a JSON mirror.
//!
//! The text grammars match the `Display` impls exactly, so
//! `parse(serialize(x)) = x` byte for byte. Parsers are lenient about
//! surrounding whitespace but never produce an unvalidated object: every
//! constructor runs its own checks after the syntax is accepted.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hecke::Word;
use crate::linked::{Arc, BlockPartition, LinkedPartition};
use crate::shape::{Cell, HeckeDiagram, Partition};
use crate::stats::{Check, JointDistribution, VerificationReport};
use crate::tableau::{HeckeTableau, IncreasingTableau};
use crate::vacillating::VacillatingHeckeTableau;

/// Byte cursor with offset-carrying errors.
struct Scanner<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Scanner<'a> {
    fn new(src: &'a str) -> Scanner<'a> {
        Scanner {
            src,
            pos: 0,
            base: 0,
        }
    }

    /// A scanner whose reported offsets start at `base`, for line-oriented
    /// formats that scan one slice of a larger text at a time.
    fn at(src: &'a str, base: usize) -> Scanner<'a> {
        Scanner { src, pos: 0, base }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.base + self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected {token:?}")))
        }
    }

    fn at_digit(&self) -> bool {
        self.rest().starts_with(|c: char| c.is_ascii_digit())
    }

    fn number(&mut self) -> Result<usize> {
        let digits: String = self
            .rest()
            .chars()
            .take_while(char::is_ascii_digit)
            .collect();
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        let value = digits.parse().map_err(|_| self.err("number too large"))?;
        self.pos += digits.len();
        Ok(value)
    }

    /// Comma-separated numbers; stops cleanly before any foreign delimiter.
    fn number_list(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.number()?];
        loop {
            let mark = self.pos;
            self.skip_ws();
            if !self.eat(",") {
                self.pos = mark;
                return Ok(out);
            }
            self.skip_ws();
            if !self.at_digit() {
                // the comma belongs to an enclosing grammar
                self.pos = mark;
                return Ok(out);
            }
            out.push(self.number()?);
        }
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}

fn scan_partition(sc: &mut Scanner) -> Result<Partition> {
    sc.skip_ws();
    if sc.eat("-") {
        return Ok(Partition::empty());
    }
    if !sc.at_digit() {
        return Ok(Partition::empty());
    }
    Partition::new(sc.number_list()?)
}

fn scan_mark(sc: &mut Scanner) -> Result<Option<Cell>> {
    if !sc.eat("@") {
        return Ok(None);
    }
    sc.skip_ws();
    let row = sc.number()?;
    sc.skip_ws();
    sc.expect(",")?;
    sc.skip_ws();
    let col = sc.number()?;
    Ok(Some(Cell::new(row, col)))
}

fn scan_diagram(sc: &mut Scanner) -> Result<HeckeDiagram> {
    let shape = scan_partition(sc)?;
    let mark = scan_mark(sc)?;
    HeckeDiagram::new(shape, mark)
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Partition> {
        let mut sc = Scanner::new(s);
        let p = scan_partition(&mut sc)?;
        sc.finish()?;
        Ok(p)
    }
}

impl FromStr for HeckeDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<HeckeDiagram> {
        let mut sc = Scanner::new(s);
        let d = scan_diagram(&mut sc)?;
        sc.finish()?;
        Ok(d)
    }
}

fn scan_rows(sc: &mut Scanner) -> Result<Vec<Vec<usize>>> {
    sc.skip_ws();
    if sc.eat("-") || !sc.at_digit() {
        return Ok(Vec::new());
    }
    let mut rows = vec![sc.number_list()?];
    loop {
        let mark = sc.pos;
        sc.skip_ws();
        if !sc.eat("/") {
            sc.pos = mark;
            return Ok(rows);
        }
        sc.skip_ws();
        rows.push(sc.number_list()?);
    }
}

impl FromStr for IncreasingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<IncreasingTableau> {
        let mut sc = Scanner::new(s);
        let t = IncreasingTableau::from_rows(scan_rows(&mut sc)?)?;
        sc.finish()?;
        Ok(t)
    }
}

impl FromStr for HeckeTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<HeckeTableau> {
        let mut sc = Scanner::new(s);
        let rows = scan_rows(&mut sc)?;
        let mark = scan_mark(&mut sc)?;
        sc.finish()?;
        HeckeTableau::new(IncreasingTableau::from_rows(rows)?, mark)
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut sc = Scanner::new(s);
        sc.skip_ws();
        if sc.eat("-") {
            sc.finish()?;
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        loop {
            sc.skip_ws();
            if sc.rest().is_empty() {
                break;
            }
            letters.push(sc.number()?);
            sc.skip_ws();
            // a comma is an optional separator on top of whitespace
            if sc.eat(",") && {
                sc.skip_ws();
                sc.rest().is_empty()
            } {
                return Err(sc.err("trailing separator"));
            }
        }
        Word::new(letters)
    }
}

fn scan_header_n(sc: &mut Scanner) -> Result<usize> {
    sc.skip_ws();
    sc.expect("n")?;
    sc.skip_ws();
    sc.expect("=")?;
    sc.skip_ws();
    sc.number()
}

impl FromStr for LinkedPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<LinkedPartition> {
        let mut sc = Scanner::new(s);
        let n = scan_header_n(&mut sc)?;
        sc.skip_ws();
        sc.expect(";")?;
        sc.skip_ws();
        let mut arcs = Vec::new();
        if sc.at_digit() {
            loop {
                let left = sc.number()?;
                sc.skip_ws();
                sc.expect("-")?;
                sc.skip_ws();
                let right = sc.number()?;
                arcs.push(Arc::new(left, right)?);
                sc.skip_ws();
                if !sc.eat(",") {
                    break;
                }
                sc.skip_ws();
            }
        }
        sc.finish()?;
        LinkedPartition::new(n, arcs)
    }
}

impl FromStr for BlockPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<BlockPartition> {
        let mut sc = Scanner::new(s);
        let n = scan_header_n(&mut sc)?;
        sc.skip_ws();
        sc.expect(";")?;
        let mut blocks = Vec::new();
        loop {
            sc.skip_ws();
            if !sc.eat("{") {
                break;
            }
            sc.skip_ws();
            let members = if sc.at_digit() {
                sc.number_list()?
            } else {
                Vec::new()
            };
            sc.skip_ws();
            sc.expect("}")?;
            blocks.push(members.into_iter().collect::<BTreeSet<usize>>());
        }
        sc.finish()?;
        BlockPartition::new(n, blocks)
    }
}

impl FromStr for VacillatingHeckeTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<VacillatingHeckeTableau> {
        let mut sc = Scanner::new(s);
        let mut diagrams = vec![scan_diagram(&mut sc)?];
        loop {
            sc.skip_ws();
            if !sc.eat(";") {
                break;
            }
            diagrams.push(scan_diagram(&mut sc)?);
        }
        sc.finish()?;
        VacillatingHeckeTableau::new(diagrams)
    }
}

fn scan_endpoint_set(sc: &mut Scanner) -> Result<BTreeSet<usize>> {
    sc.skip_ws();
    if sc.eat("-") {
        return Ok(BTreeSet::new());
    }
    if !sc.at_digit() {
        return Err(sc.err("expected a vertex set or \"-\""));
    }
    Ok(sc.number_list()?.into_iter().collect())
}

/// Parses a bare endpoint set (`"1,2,5"` or `"-"`) as used by CLI flags.
pub(crate) fn parse_endpoint_set(s: &str) -> Result<BTreeSet<usize>> {
    let mut sc = Scanner::new(s);
    let set = scan_endpoint_set(&mut sc)?;
    sc.finish()?;
    Ok(set)
}

/// Parses a bare cell `"r,c"` as used by CLI flags.
pub(crate) fn parse_cell(s: &str) -> Result<Cell> {
    let mut sc = Scanner::new(s);
    sc.skip_ws();
    let row = sc.number()?;
    sc.skip_ws();
    sc.expect(",")?;
    sc.skip_ws();
    let col = sc.number()?;
    sc.finish()?;
    Ok(Cell::new(row, col))
}

/// Lines of `text` paired with the byte offset of each line start; blank
/// lines are dropped so trailing newlines are harmless.
fn offset_lines(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut base = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim_end_matches(['\n', '\r']);
        if !line.trim().is_empty() {
            out.push((base, line));
        }
        base += raw.len();
    }
    out
}

impl FromStr for JointDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<JointDistribution> {
        let lines = offset_lines(s);
        let Some(&(base, header)) = lines.first() else {
            return Err(Error::Parse {
                offset: 0,
                message: "empty distribution text".into(),
            });
        };
        let mut sc = Scanner::at(header, base);
        let n = scan_header_n(&mut sc)?;
        let restriction = {
            sc.skip_ws();
            if sc.eat(";") {
                sc.skip_ws();
                sc.expect("S")?;
                sc.skip_ws();
                sc.expect("=")?;
                let s_set = scan_endpoint_set(&mut sc)?;
                sc.skip_ws();
                sc.expect(";")?;
                sc.skip_ws();
                sc.expect("T")?;
                sc.skip_ws();
                sc.expect("=")?;
                let t_set = scan_endpoint_set(&mut sc)?;
                Some((s_set, t_set))
            } else {
                None
            }
        };
        sc.finish()?;
        let mut counts = BTreeMap::new();
        for &(base, line) in &lines[1..] {
            let mut sc = Scanner::at(line, base);
            sc.skip_ws();
            let i = sc.number()?;
            sc.skip_ws();
            sc.expect(",")?;
            sc.skip_ws();
            let j = sc.number()?;
            sc.skip_ws();
            sc.expect(",")?;
            sc.skip_ws();
            let count = sc.number()? as u64;
            sc.finish()?;
            if counts.insert((i, j), count).is_some() {
                return Err(Error::Parse {
                    offset: base,
                    message: format!("duplicate statistic pair ({i},{j})"),
                });
            }
        }
        JointDistribution::from_counts(n, restriction, counts)
    }
}

/// Escapes a counterexample so a report stays one line per check.
pub(crate) fn escape_line(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

fn unescape_line(s: &str, offset: usize) -> Result<String> {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next() {
            Some('n') => out.push('\n'),
            Some('\\') => out.push('\\'),
            _ => {
                return Err(Error::Parse {
                    offset,
                    message: "bad escape in counterexample".into(),
                })
            }
        }
    }
    Ok(out)
}

impl FromStr for VerificationReport {
    type Err = Error;

    fn from_str(s: &str) -> Result<VerificationReport> {
        let lines = offset_lines(s);
        let Some(&(base, header)) = lines.first() else {
            return Err(Error::Parse {
                offset: 0,
                message: "empty report text".into(),
            });
        };
        let mut sc = Scanner::at(header, base);
        let n = scan_header_n(&mut sc)?;
        sc.finish()?;
        let mut checks = Vec::new();
        for &(base, line) in &lines[1..] {
            let (name, verdict) = line.split_once(' ').ok_or(Error::Parse {
                offset: base,
                message: "expected \"name PASS\" or \"name FAIL counterexample\"".into(),
            })?;
            let (passed, rest) = if let Some(rest) = verdict.strip_prefix("PASS") {
                (true, rest)
            } else if let Some(rest) = verdict.strip_prefix("FAIL") {
                (false, rest)
            } else {
                return Err(Error::Parse {
                    offset: base + name.len() + 1,
                    message: "expected PASS or FAIL".into(),
                });
            };
            let counterexample = match rest.strip_prefix(' ') {
                Some(cex) => Some(unescape_line(cex, base)?),
                None if rest.is_empty() => None,
                None => {
                    return Err(Error::Parse {
                        offset: base + name.len() + 1,
                        message: "expected PASS or FAIL".into(),
                    })
                }
            };
            checks.push(Check {
                name: name.into(),
                passed,
                counterexample,
            });
        }
        Ok(VerificationReport { n, checks })
    }
}

/// A tagged wrapper around every object the tool reads or writes. The tag
/// names double as CLI kind names and as the `kind` field of the JSON form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Partition(HeckeDiagram),
    Tableau(IncreasingTableau),
    HeckeTableau(HeckeTableau),
    Word(Word),
    Linked(LinkedPartition),
    Blocks(BlockPartition),
    Vht(VacillatingHeckeTableau),
    Distribution(JointDistribution),
    Report(VerificationReport),
}

pub const DOCUMENT_KINDS: [&str; 9] = [
    "partition",
    "tableau",
    "hecke-tableau",
    "word",
    "linked",
    "blocks",
    "vht",
    "distribution",
    "report",
];

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Partition(_) => "partition",
            Document::Tableau(_) => "tableau",
            Document::HeckeTableau(_) => "hecke-tableau",
            Document::Word(_) => "word",
            Document::Linked(_) => "linked",
            Document::Blocks(_) => "blocks",
            Document::Vht(_) => "vht",
            Document::Distribution(_) => "distribution",
            Document::Report(_) => "report",
        }
    }

    pub fn parse(kind: &str, text: &str) -> Result<Document> {
        Ok(match kind {
            "partition" => Document::Partition(text.parse()?),
            "tableau" => Document::Tableau(text.parse()?),
            "hecke-tableau" => Document::HeckeTableau(text.parse()?),
            "word" => Document::Word(text.parse()?),
            "linked" => Document::Linked(text.parse()?),
            "blocks" => Document::Blocks(text.parse()?),
            "vht" => Document::Vht(text.parse()?),
            "distribution" => Document::Distribution(text.parse()?),
            "report" => Document::Report(text.parse()?),
            other => {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("unknown document kind {other:?}"),
                })
            }
        })
    }

    /// Canonical text form; always satisfies `parse(kind, serialize(x)) = x`.
    pub fn serialize(&self) -> String {
        match self {
            Document::Partition(x) => x.to_string(),
            Document::Tableau(x) => x.to_string(),
            Document::HeckeTableau(x) => x.to_string(),
            Document::Word(x) => x.to_string(),
            Document::Linked(x) => x.to_string(),
            Document::Blocks(x) => x.to_string(),
            Document::Vht(x) => x.to_string(),
            Document::Distribution(x) => x.to_string(),
            Document::Report(x) => x.to_string(),
        }
    }

    /// Single-line JSON record tagged with `"kind"`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawDoc::from(self)).expect("document serialization cannot fail")
    }

    pub fn parse_json(text: &str) -> Result<Document> {
        let raw: RawDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
            offset: 0,
            message: e.to_string(),
        })?;
        raw.build()
    }
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    parts: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mark: Option<[usize; 2]>,
}

impl RawDiagram {
    fn from(d: &HeckeDiagram) -> RawDiagram {
        RawDiagram {
            parts: d.shape().parts().to_vec(),
            mark: d.mark().map(|c| [c.row, c.col]),
        }
    }

    fn build(self) -> Result<HeckeDiagram> {
        HeckeDiagram::new(
            Partition::new(self.parts)?,
            self.mark.map(|[row, col]| Cell::new(row, col)),
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawCheck {
    name: String,
    passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
}

/// Structural mirror of [`Document`] for the JSON form; building a
/// `Document` back out of it runs the full validators.
#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum RawDoc {
    Partition {
        parts: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mark: Option<[usize; 2]>,
    },
    Tableau {
        rows: Vec<Vec<usize>>,
    },
    HeckeTableau {
        rows: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        mark: Option<[usize; 2]>,
    },
    Word {
        letters: Vec<usize>,
    },
    Linked {
        n: usize,
        arcs: Vec<[usize; 2]>,
    },
    Blocks {
        n: usize,
        blocks: Vec<Vec<usize>>,
    },
    Vht {
        diagrams: Vec<RawDiagram>,
    },
    Distribution {
        n: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        s: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t: Option<Vec<usize>>,
        counts: Vec<(usize, usize, u64)>,
    },
    Report {
        n: usize,
        checks: Vec<RawCheck>,
    },
}

impl From<&Document> for RawDoc {
    fn from(doc: &Document) -> RawDoc {
        match doc {
            Document::Partition(d) => {
                let raw = RawDiagram::from(d);
                RawDoc::Partition {
                    parts: raw.parts,
                    mark: raw.mark,
                }
            }
            Document::Tableau(t) => RawDoc::Tableau {
                rows: t.rows().to_vec(),
            },
            Document::HeckeTableau(t) => RawDoc::HeckeTableau {
                rows: t.underlying().rows().to_vec(),
                mark: t.mark().map(|c| [c.row, c.col]),
            },
            Document::Word(w) => RawDoc::Word {
                letters: w.letters().to_vec(),
            },
            Document::Linked(p) => RawDoc::Linked {
                n: p.n(),
                arcs: p.arcs().iter().map(|a| [a.left(), a.right()]).collect(),
            },
            Document::Blocks(b) => RawDoc::Blocks {
                n: b.n(),
                blocks: b
                    .blocks()
                    .iter()
                    .map(|s| s.iter().copied().collect())
                    .collect(),
            },
            Document::Vht(v) => RawDoc::Vht {
                diagrams: v.diagrams().iter().map(RawDiagram::from).collect(),
            },
            Document::Distribution(d) => RawDoc::Distribution {
                n: d.n(),
                s: d.restriction().map(|(s, _)| s.iter().copied().collect()),
                t: d.restriction().map(|(_, t)| t.iter().copied().collect()),
                counts: d.counts().iter().map(|(&(i, j), &c)| (i, j, c)).collect(),
            },
            Document::Report(r) => RawDoc::Report {
                n: r.n,
                checks: r
                    .checks
                    .iter()
                    .map(|c| RawCheck {
                        name: c.name.clone(),
                        passed: c.passed,
                        counterexample: c.counterexample.clone(),
                    })
                    .collect(),
            },
        }
    }
}

impl RawDoc {
    fn build(self) -> Result<Document> {
        Ok(match self {
            RawDoc::Partition { parts, mark } => {
                Document::Partition(RawDiagram { parts, mark }.build()?)
            }
            RawDoc::Tableau { rows } => Document::Tableau(IncreasingTableau::from_rows(rows)?),
            RawDoc::HeckeTableau { rows, mark } => Document::HeckeTableau(HeckeTableau::new(
                IncreasingTableau::from_rows(rows)?,
                mark.map(|[row, col]| Cell::new(row, col)),
            )?),
            RawDoc::Word { letters } => Document::Word(Word::new(letters)?),
            RawDoc::Linked { n, arcs } => {
                let arcs: Result<Vec<Arc>> =
                    arcs.into_iter().map(|[l, r]| Arc::new(l, r)).collect();
                Document::Linked(LinkedPartition::new(n, arcs?)?)
            }
            RawDoc::Blocks { n, blocks } => Document::Blocks(BlockPartition::new(
                n,
                blocks
                    .into_iter()
                    .map(|b| b.into_iter().collect())
                    .collect(),
            )?),
            RawDoc::Vht { diagrams } => {
                let diagrams: Result<Vec<HeckeDiagram>> =
                    diagrams.into_iter().map(RawDiagram::build).collect();
                Document::Vht(VacillatingHeckeTableau::new(diagrams?)?)
            }
            RawDoc::Distribution { n, s, t, counts } => {
                let restriction = match (s, t) {
                    (Some(s), Some(t)) => Some((s.into_iter().collect(), t.into_iter().collect())),
                    (None, None) => None,
                    _ => {
                        return Err(Error::Parse {
                            offset: 0,
                            message: "distribution restriction needs both s and t".into(),
                        })
                    }
                };
                let mut map = BTreeMap::new();
                for (i, j, c) in counts {
                    if map.insert((i, j), c).is_some() {
                        return Err(Error::Parse {
                            offset: 0,
                            message: format!("duplicate statistic pair ({i},{j})"),
                        });
                    }
                }
                Document::Distribution(JointDistribution::from_counts(n, restriction, map)?)
            }
            RawDoc::Report { n, checks } => Document::Report(VerificationReport {
                n,
                checks: checks
                    .into_iter()
                    .map(|c| Check {
                        name: c.name,
                        passed: c.passed,
                        counterexample: c.counterexample,
                    })
                    .collect(),
            }),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(kind: &str, text: &str) -> Document {
        let doc = Document::parse(kind, text).unwrap();
        assert_eq!(doc.serialize(), text, "canonical form of {kind} {text:?}");
        let again = Document::parse_json(&doc.to_json()).unwrap();
        assert_eq!(again, doc, "json round trip of {kind} {text:?}");
        doc
    }

    #[test]
    fn canonical_texts_round_trip() {
        round_trip("partition", "-");
        round_trip("partition", "4,4,2,1");
        round_trip("partition", "4,4,2,1@3,2");
        round_trip("tableau", "-");
        round_trip("tableau", "1,2,3,4/2,3,5/4,5/5,7");
        round_trip("hecke-tableau", "1,2/2,3@2,2");
        round_trip("word", "-");
        round_trip("word", "2 1 1 3 1 3 2 1");
        round_trip("linked", "n=2;");
        round_trip("linked", "n=7; 1-2,1-3,1-5,1-6,2-4,2-7");
        round_trip("blocks", "n=10; {1,3,5}{2,6,10}{4}{5,8,9}{6,7}");
        round_trip(
            "vht",
            "-;-;1@1,1;1;2,1@2,1;2,1;2,1;1,1;1,1@2,1;1,1;1,1;1;1;-;-",
        );
        round_trip("distribution", "n=3\n0,0,1\n1,1,5");
        round_trip("distribution", "n=2; S=1; T=2\n1,1,1");
        round_trip("distribution", "n=4; S=-; T=-\n0,0,1");
        round_trip("report", "n=2\nbijection PASS\nsymmetry FAIL n=2\\n0,1,1");
    }

    #[test]
    fn lenient_input_still_normalizes() {
        let doc = Document::parse("word", " 2, 1,1  3 ").unwrap();
        assert_eq!(doc.serialize(), "2 1 1 3");
        let doc = Document::parse("linked", "n=3 ; 2-3 , 1-2").unwrap();
        assert_eq!(doc.serialize(), "n=3; 1-2,2-3");
        let doc = Document::parse("partition", "").unwrap();
        assert_eq!(doc.serialize(), "-");
        let doc = Document::parse("vht", "- ; - ; 1@1,1 ; 1 ; 1 ; - ; -").unwrap();
        assert_eq!(doc.serialize(), "-;-;1@1,1;1;1;-;-");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match Document::parse("linked", "n=7: 1-2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected a parse error, got {other:?}"),
        }
        match Document::parse("distribution", "n=3\n0,0,1\n0,0,2") {
            Err(Error::Parse { offset, message }) => {
                assert_eq!(offset, 10);
                assert!(message.contains("duplicate"));
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
        match Document::parse("word", "1 2 x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn semantic_errors_come_from_the_validators() {
        assert!(matches!(
            Document::parse("tableau", "1,2/2,2"),
            Err(Error::NotIncreasing { .. })
        ));
        assert!(matches!(
            Document::parse("partition", "4,4,2,1@2,2"),
            Err(Error::MarkNotCorner(_))
        ));
        assert!(matches!(
            Document::parse("linked", "n=3; 1-2,1-2"),
            Err(Error::InDegree { .. })
        ));
        assert!(matches!(
            Document::parse("vht", "-;-"),
            Err(Error::InvalidVht { .. })
        ));
    }

    #[test]
    fn unknown_kind_is_rejected() {
        assert!(matches!(
            Document::parse("poset", "whatever"),
            Err(Error::Parse { .. })
        ));
        assert!(DOCUMENT_KINDS.contains(&"vht"));
    }

    #[test]
    fn json_shape_is_stable() {
        let doc = Document::parse("linked", "n=3; 1-2").unwrap();
        assert_eq!(doc.to_json(), r#"{"kind":"linked","n":3,"arcs":[[1,2]]}"#);
        let doc = Document::parse("partition", "2,1@2,1").unwrap();
        assert_eq!(
            doc.to_json(),
            r#"{"kind":"partition","parts":[2,1],"mark":[2,1]}"#
        );
        let doc = Document::parse("distribution", "n=2; S=1; T=2\n1,1,1").unwrap();
        assert_eq!(
            doc.to_json(),
            r#"{"kind":"distribution","n":2,"s":[1],"t":[2],"counts":[[1,1,1]]}"#
        );
    }

    #[test]
    fn json_validation_still_applies() {
        assert!(Document::parse_json(r#"{"kind":"linked","n":1,"arcs":[[1,2]]}"#).is_err());
        assert!(Document::parse_json(r#"{"kind":"tableau","rows":[[2],[1]]}"#).is_err());
        assert!(Document::parse_json(r#"{"kind":"nope"}"#).is_err());
        assert!(
            Document::parse_json(r#"{"kind":"distribution","n":2,"s":[1],"counts":[]}"#).is_err()
        );
    }

    #[test]
    fn escaping_is_invertible() {
        let nasty = "a\\b\nc\\nd";
        assert_eq!(unescape_line(&escape_line(nasty), 0).unwrap(), nasty);
        assert!(unescape_line("bad \\x escape", 0).is_err());
    }
}
