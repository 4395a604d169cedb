//! Parsing and rendering.
//!
//! Arrays are written `{b_0,...,b_{d-1};c_1,...,c_d}`. Batches come either
//! as text (one array per line, `#` comments) or as CSV rows
//! `d,b_0,...,b_{d-1},c_1,...,c_d`. Reports render as human-readable text,
//! as JSON that can be re-read, or as a CSV summary.

use crate::array::{ArrayError, IntersectionArray};
use crate::feasibility::{analyze, render_eigenvalue, ArrayReport, Outcome, Status};
use crate::poly::decimal_string;
use crate::spectral::Multiplicity;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("expected '{{' at position {pos}")]
    ExpectedOpen { pos: usize },
    #[error("expected '}}' at position {pos}")]
    ExpectedClose { pos: usize },
    #[error("expected ';' between the b- and c-sequences at position {pos}")]
    ExpectedSemicolon { pos: usize },
    #[error("expected a number at position {pos}")]
    ExpectedNumber { pos: usize },
    #[error("entry {text} at position {pos} does not fit in 32 bits")]
    EntryTooLarge { text: String, pos: usize },
    #[error("unexpected trailing input at position {pos}")]
    TrailingInput { pos: usize },
    #[error("malformed row: {message}")]
    Row { message: String },
    #[error(transparent)]
    Array(#[from] ArrayError),
}

struct Scanner {
    chars: Vec<char>,
    pos: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Scanner {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    /// 1-based position for error messages.
    fn at(&self) -> usize {
        self.pos + 1
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .map(|c| c.is_ascii_digit())
            .unwrap_or(false)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::ExpectedNumber { pos: self.at() });
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse::<u32>()
            .map_err(|_| ParseError::EntryTooLarge {
                text,
                pos: start + 1,
            })
    }

    fn number_list(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut out = vec![self.number()?];
        loop {
            self.skip_ws();
            if self.eat(',') {
                out.push(self.number()?);
            } else {
                return Ok(out);
            }
        }
    }
}

/// Parse `{b_0,...;c_1,...}` with optional whitespace anywhere between
/// tokens. Error positions are 1-based character offsets.
pub fn parse_array(text: &str) -> Result<IntersectionArray, ParseError> {
    let mut s = Scanner::new(text);
    s.skip_ws();
    if !s.eat('{') {
        return Err(ParseError::ExpectedOpen { pos: s.at() });
    }
    let b = s.number_list()?;
    s.skip_ws();
    if !s.eat(';') {
        return Err(ParseError::ExpectedSemicolon { pos: s.at() });
    }
    let c = s.number_list()?;
    s.skip_ws();
    if !s.eat('}') {
        return Err(ParseError::ExpectedClose { pos: s.at() });
    }
    s.skip_ws();
    if s.peek().is_some() {
        return Err(ParseError::TrailingInput { pos: s.at() });
    }
    Ok(IntersectionArray::new(b, c)?)
}

#[derive(Debug, Clone)]
pub struct BatchRecord {
    pub line_number: usize,
    pub raw: String,
    pub parsed: Result<IntersectionArray, ParseError>,
}

/// One array per line. `#` starts a comment, blank lines and CRLF endings
/// are tolerated.
pub fn read_batch_text(content: &str) -> Vec<BatchRecord> {
    let mut out = Vec::new();
    for (idx, raw_line) in content.lines().enumerate() {
        let line = raw_line.trim_end_matches('\r');
        let line = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(BatchRecord {
            line_number: idx + 1,
            raw: line.to_string(),
            parsed: parse_array(line),
        });
    }
    out
}

/// CSV rows `d,b_0,...,b_{d-1},c_1,...,c_d`. A non-numeric first field on
/// the first data line is treated as a header and skipped.
pub fn read_batch_csv(content: &str) -> Vec<BatchRecord> {
    let mut out = Vec::new();
    let mut first_data_line = true;
    for (idx, raw_line) in content.lines().enumerate() {
        let line = raw_line.trim_end_matches('\r').trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(|f| f.trim()).collect();
        if first_data_line {
            first_data_line = false;
            if fields[0].parse::<usize>().is_err() {
                continue;
            }
        }
        out.push(BatchRecord {
            line_number: idx + 1,
            raw: line.to_string(),
            parsed: parse_csv_row(&fields),
        });
    }
    out
}

fn parse_csv_row(fields: &[&str]) -> Result<IntersectionArray, ParseError> {
    let d: usize = fields[0].parse().map_err(|_| ParseError::Row {
        message: format!("diameter field '{}' is not a number", fields[0]),
    })?;
    if fields.len() != 1 + 2 * d {
        return Err(ParseError::Row {
            message: format!(
                "diameter {} needs {} fields, row has {}",
                d,
                1 + 2 * d,
                fields.len()
            ),
        });
    }
    let value = |s: &str| -> Result<u32, ParseError> {
        s.parse().map_err(|_| ParseError::Row {
            message: format!("entry '{}' is not a 32-bit number", s),
        })
    };
    let b = fields[1..=d].iter().map(|s| value(s)).collect::<Result<Vec<_>, _>>()?;
    let c = fields[d + 1..=2 * d]
        .iter()
        .map(|s| value(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntersectionArray::new(b, c)?)
}

#[derive(Debug)]
pub struct ScanEntry {
    pub line_number: usize,
    pub raw: String,
    pub outcome: Result<ArrayReport, ParseError>,
}

/// Analyze every parsed record, preserving input order and carrying parse
/// failures through untouched.
pub fn scan_batch(records: Vec<BatchRecord>) -> Vec<ScanEntry> {
    records
        .into_iter()
        .map(|r| ScanEntry {
            line_number: r.line_number,
            raw: r.raw,
            outcome: r.parsed.map(|arr| analyze(&arr)),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

fn multiplicity_string(m: &Multiplicity) -> String {
    match m {
        Multiplicity::Exact(v) => v.to_integer().to_string(),
        Multiplicity::NonIntegral { lo, hi } => format!(
            "non-integer in ({}, {})",
            decimal_string(lo, 6, false),
            decimal_string(hi, 6, true)
        ),
    }
}

/// Full single-array report as human-readable text.
pub fn render_array_report_text(report: &ArrayReport) -> String {
    let mut out = String::new();
    let arr = &report.array;
    let dp = &report.derived;
    writeln!(out, "array: {}", arr).unwrap();
    writeln!(out, "d: {}", arr.d()).unwrap();
    writeln!(out, "n: {}", dp.n()).unwrap();
    let ks: Vec<String> = dp.k().iter().map(|k| k.to_string()).collect();
    writeln!(out, "valencies: {}", ks.join(", ")).unwrap();
    let avals: Vec<String> = dp.a().iter().map(|a| a.to_string()).collect();
    writeln!(out, "a-sequence: {}", avals.join(", ")).unwrap();
    let sp = &report.spectrum;
    let eigs: Vec<String> = sp.eigenvalues().iter().map(render_eigenvalue).collect();
    writeln!(out, "eigenvalues: {}", eigs.join(", ")).unwrap();
    let mults: Vec<String> = sp.multiplicities().iter().map(multiplicity_string).collect();
    writeln!(out, "multiplicities: {}", mults.join(", ")).unwrap();

    let verdict = &report.verdict;
    let find = |tag: &str| verdict.trace.iter().find(|s| s.condition.tag() == tag);
    for step in &verdict.trace {
        let tag = step.condition.tag();
        match tag {
            "basic-integrality" | "basic-monotonicity" | "basic-handshake"
            | "multiplicity-integrality" => {
                let label = tag.replace('-', " ");
                match step.outcome {
                    Outcome::Pass => writeln!(out, "{}: pass", label).unwrap(),
                    Outcome::Violated => {
                        writeln!(out, "{}: VIOLATED ({})", label, step.detail).unwrap()
                    }
                    Outcome::Inapplicable => {
                        writeln!(out, "{}: inapplicable ({})", label, step.detail).unwrap()
                    }
                }
            }
            "terwilliger-bound" => {
                let conn = find("local-connectivity");
                match (step.outcome, conn) {
                    (Outcome::Inapplicable, _) => {
                        writeln!(out, "terwilliger bound: inapplicable ({})", step.detail)
                            .unwrap()
                    }
                    (_, Some(conn)) if conn.outcome == Outcome::Inapplicable => writeln!(
                        out,
                        "terwilliger bound: {} ({})",
                        step.inputs.get("B").map(String::as_str).unwrap_or("?"),
                        conn.detail
                    )
                    .unwrap(),
                    (_, Some(conn)) => {
                        writeln!(out, "terwilliger bound: {}", conn.detail).unwrap()
                    }
                    (_, None) => writeln!(out, "terwilliger bound: {}", step.detail).unwrap(),
                }
            }
            "local-connectivity" => {}
            "coclique-guarantee" => match step.inputs.get("size") {
                Some(size) => {
                    writeln!(out, "guaranteed coclique: {} ({})", size, step.detail).unwrap()
                }
                None => writeln!(out, "guaranteed coclique: {}", step.detail).unwrap(),
            },
            "koolen-park" => match step.outcome {
                Outcome::Inapplicable => {
                    writeln!(out, "koolen-park inapplicable ({})", step.detail).unwrap()
                }
                _ => writeln!(out, "koolen-park {}", step.detail).unwrap(),
            },
            _ => writeln!(out, "{}: {}", tag, step.detail).unwrap(),
        }
    }

    match verdict.status {
        Status::Infeasible => {
            let tag = verdict
                .killer_step()
                .map(|s| s.condition.tag())
                .unwrap_or("unknown");
            writeln!(out, "verdict: INFEASIBLE ({})", tag).unwrap();
        }
        Status::Inconclusive => writeln!(out, "verdict: INCONCLUSIVE").unwrap(),
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonSpectrumEntry {
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defining_poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<(String, String)>,
    pub multiplicity: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonProofStep {
    pub condition: String,
    pub inputs: BTreeMap<String, String>,
    pub outcome: String,
    pub detail: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonKiller {
    pub index: usize,
    pub condition: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonArrayReport {
    pub array: String,
    pub d: usize,
    pub n: String,
    pub valencies: Vec<String>,
    pub a_sequence: Vec<i64>,
    pub spectrum: Vec<JsonSpectrumEntry>,
    pub verdict: String,
    pub killer: Option<JsonKiller>,
    pub trace: Vec<JsonProofStep>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct JsonScanEntry {
    pub line: usize,
    pub input: String,
    pub error: Option<String>,
    pub report: Option<JsonArrayReport>,
}

pub fn json_report(report: &ArrayReport) -> JsonArrayReport {
    let arr = &report.array;
    let dp = &report.derived;
    // narrow enough that the printed endpoints stay within 1e-6
    let width = BigRational::new(BigInt::one(), BigInt::from(100_000_000u64));
    let sp = &report.spectrum;
    let spectrum = sp
        .eigenvalues()
        .iter()
        .zip(sp.multiplicities())
        .map(|(eig, m)| {
            let (defining_poly, interval) = match eig.as_algebraic() {
                Some(alg) => {
                    let (lo, hi) = eig.enclosure(&width);
                    (
                        Some(alg.defining_poly().display_string()),
                        Some((
                            decimal_string(&lo, 8, false),
                            decimal_string(&hi, 8, true),
                        )),
                    )
                }
                None => (None, None),
            };
            JsonSpectrumEntry {
                value: render_eigenvalue(eig),
                defining_poly,
                interval,
                multiplicity: multiplicity_string(m),
            }
        })
        .collect();
    let verdict = &report.verdict;
    JsonArrayReport {
        array: arr.to_string(),
        d: arr.d(),
        n: dp.n().to_string(),
        valencies: dp.k().iter().map(|k| k.to_string()).collect(),
        a_sequence: dp.a().to_vec(),
        spectrum,
        verdict: verdict.status.tag().to_string(),
        killer: verdict.killer.map(|index| JsonKiller {
            index,
            condition: verdict.trace[index].condition.tag().to_string(),
        }),
        trace: verdict
            .trace
            .iter()
            .map(|s| JsonProofStep {
                condition: s.condition.tag().to_string(),
                inputs: s.inputs.clone(),
                outcome: s.outcome.tag().to_string(),
                detail: s.detail.clone(),
            })
            .collect(),
    }
}

pub fn json_entries(entries: &[ScanEntry]) -> Vec<JsonScanEntry> {
    entries
        .iter()
        .map(|e| match &e.outcome {
            Ok(report) => JsonScanEntry {
                line: e.line_number,
                input: e.raw.clone(),
                error: None,
                report: Some(json_report(report)),
            },
            Err(err) => JsonScanEntry {
                line: e.line_number,
                input: e.raw.clone(),
                error: Some(err.to_string()),
                report: None,
            },
        })
        .collect()
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// Render a whole scan in the requested format.
pub fn render_report(entries: &[ScanEntry], format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            let mut infeasible = 0usize;
            let mut inconclusive = 0usize;
            let mut errors = 0usize;
            for e in entries {
                match &e.outcome {
                    Ok(report) => {
                        writeln!(out, "line {}: {}", e.line_number, e.raw).unwrap();
                        out.push_str(&render_array_report_text(report));
                        match report.verdict.status {
                            Status::Infeasible => infeasible += 1,
                            Status::Inconclusive => inconclusive += 1,
                        }
                    }
                    Err(err) => {
                        writeln!(out, "line {}: {}", e.line_number, e.raw).unwrap();
                        writeln!(out, "parse error: {}", err).unwrap();
                        errors += 1;
                    }
                }
                out.push('\n');
            }
            writeln!(
                out,
                "scanned {} lines: {} infeasible, {} inconclusive, {} errors",
                entries.len(),
                infeasible,
                inconclusive,
                errors
            )
            .unwrap();
            out
        }
        ReportFormat::Json => {
            serde_json::to_string_pretty(&json_entries(entries)).expect("report serializes")
        }
        ReportFormat::Csv => {
            let mut out = String::from("array,n,verdict,killer_condition\n");
            for e in entries {
                match &e.outcome {
                    Ok(report) => {
                        let verdict = &report.verdict;
                        let killer = verdict
                            .killer_step()
                            .map(|s| s.condition.tag())
                            .unwrap_or("");
                        writeln!(
                            out,
                            "{},{},{},{}",
                            csv_quote(&report.array.to_string()),
                            report.derived.n(),
                            verdict.status.tag(),
                            killer
                        )
                        .unwrap();
                    }
                    Err(_) => {
                        writeln!(out, "{},,parse-error,", csv_quote(&e.raw)).unwrap();
                    }
                }
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::feasibility::Status;

    #[test]
    fn parses_canonical_and_spaced_forms() {
        let arr = parse_array("{55,36,11;1,4,45}").unwrap();
        assert_eq!(arr.to_string(), "{55,36,11;1,4,45}");
        let arr = parse_array("  { 55 , 36 , 11 ; 1 , 4 , 45 }  ").unwrap();
        assert_eq!(arr.to_string(), "{55,36,11;1,4,45}");
        let arr = parse_array("{6;1}").unwrap();
        assert_eq!(arr.d(), 1);
    }

    #[test]
    fn reports_positions_for_malformed_input() {
        assert_eq!(
            parse_array("55,36;1,4"),
            Err(ParseError::ExpectedOpen { pos: 1 })
        );
        assert_eq!(
            parse_array("{55,36 1,4}"),
            Err(ParseError::ExpectedSemicolon { pos: 8 })
        );
        assert_eq!(
            parse_array("{55,;1}"),
            Err(ParseError::ExpectedNumber { pos: 5 })
        );
        assert_eq!(
            parse_array("{55;1} extra"),
            Err(ParseError::TrailingInput { pos: 8 })
        );
        assert_eq!(
            parse_array("{5000000000;1}"),
            Err(ParseError::EntryTooLarge {
                text: "5000000000".to_string(),
                pos: 2
            })
        );
        // structurally fine, semantically bad
        assert!(matches!(
            parse_array("{3,0;1,1}"),
            Err(ParseError::Array(ArrayError::ZeroEntry { .. }))
        ));
        assert!(matches!(
            parse_array("{3,2;2,2}"),
            Err(ParseError::Array(ArrayError::C1NotOne { got: 2 }))
        ));
    }

    #[test]
    fn reads_text_batches_in_order() {
        let content = "# comment only\n{3,2;1,1}\n\n{6;1} # complete\r\nnot an array\n";
        let records = read_batch_text(content);
        assert_eq!(records.len(), 3);
        assert_eq!(records[0].line_number, 2);
        assert!(records[0].parsed.is_ok());
        assert_eq!(records[1].line_number, 4);
        assert_eq!(records[1].raw, "{6;1}");
        assert!(records[1].parsed.is_ok());
        assert_eq!(records[2].line_number, 5);
        assert!(records[2].parsed.is_err());
    }

    #[test]
    fn reads_csv_batches() {
        let content = "d,b,c\n2,3,2,1,1\n1,6,1\n2,3,2,1\n";
        let records = read_batch_csv(content);
        assert_eq!(records.len(), 3);
        assert_eq!(
            records[0].parsed.as_ref().unwrap().to_string(),
            "{3,2;1,1}"
        );
        assert_eq!(records[1].parsed.as_ref().unwrap().to_string(), "{6;1}");
        assert!(matches!(
            records[2].parsed,
            Err(ParseError::Row { .. })
        ));
    }

    #[test]
    fn text_report_pins_the_infeasibility_trace() {
        let arr = parse_array("{55,36,11;1,4,45}").unwrap();
        let report = analyze(&arr);
        let text = render_array_report_text(&report);
        for needle in [
            "array: {55,36,11;1,4,45}",
            "n: 672",
            "valencies: 1, 55, 495, 121",
            "a-sequence: 0, 18, 40, 10",
            "eigenvalues: 55, 19, -1, -5",
            "multiplicities: 1, 77, 363, 231",
            "basic integrality: pass",
            "multiplicity integrality: pass",
            "terwilliger bound: 8 < a1 = 18 => local graph connected",
            "guaranteed coclique: 4",
            "koolen-park at c=4: 3 >= 7/2 FAILS",
            "verdict: INFEASIBLE (koolen-park)",
        ] {
            assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
        }
    }

    #[test]
    fn text_report_for_a_surviving_array() {
        let arr = parse_array("{3,2;1,1}").unwrap();
        let text = render_array_report_text(&analyze(&arr));
        assert!(text.contains("verdict: INCONCLUSIVE"), "{text}");
        assert!(text.contains("eigenvalues: 3, 1, -2"), "{text}");
    }

    #[test]
    fn csv_report_shape() {
        let records = read_batch_text("{55,36,11;1,4,45}\n{3,2;1,1}\nbogus\n");
        let entries = scan_batch(records);
        let csv = render_report(&entries, ReportFormat::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "array,n,verdict,killer_condition");
        assert_eq!(
            lines[1],
            "\"{55,36,11;1,4,45}\",672,infeasible,koolen-park"
        );
        assert_eq!(lines[2], "\"{3,2;1,1}\",10,inconclusive,");
        assert_eq!(lines[3], "\"bogus\",,parse-error,");
    }

    #[test]
    fn json_report_round_trips() {
        let records = read_batch_text("{5,2,1;1,2,5}\n{55,36,11;1,4,45}\nnope\n");
        let entries = scan_batch(records);
        let json = render_report(&entries, ReportFormat::Json);
        let parsed: Vec<JsonScanEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed.len(), 3);

        let icosa = parsed[0].report.as_ref().unwrap();
        assert_eq!(icosa.verdict, "inconclusive");
        assert_eq!(icosa.spectrum.len(), 4);
        let golden = &icosa.spectrum[1];
        assert_eq!(golden.defining_poly.as_deref(), Some("x^2-5"));
        let (lo, hi) = golden.interval.as_ref().unwrap();
        let lo: f64 = lo.parse().unwrap();
        let hi: f64 = hi.parse().unwrap();
        assert!(lo <= 2.2360679775 && 2.2360679775 <= hi);
        assert!(hi - lo <= 1e-6);

        let ruled_out = parsed[1].report.as_ref().unwrap();
        assert_eq!(ruled_out.verdict, "infeasible");
        let killer = ruled_out.killer.as_ref().unwrap();
        assert_eq!(killer.condition, "koolen-park");
        assert_eq!(ruled_out.trace.len(), 8);
        assert_eq!(ruled_out.trace[killer.index].outcome, "violated");

        assert!(parsed[2].report.is_none());
        assert!(parsed[2].error.is_some());
    }

    #[test]
    fn scan_reports_match_analysis_status() {
        let records = read_batch_text("{55,36,11;1,4,45}\n{3,2;1,2}\n{4,2;1,2}\n");
        let entries = scan_batch(records);
        let statuses: Vec<Status> = entries
            .iter()
            .map(|e| e.outcome.as_ref().unwrap().verdict.status)
            .collect();
        assert_eq!(
            statuses,
            vec![Status::Infeasible, Status::Infeasible, Status::Inconclusive]
        );
    }

    #[test]
    fn rendered_arrays_parse_back() {
        for text in ["{55,36,11;1,4,45}", "{3,2,2;1,1,3}", "{6;1}", "{2,1;1,1}"] {
            let arr = parse_array(text).unwrap();
            assert_eq!(parse_array(&arr.to_string()).unwrap(), arr);
        }
    }
}
