//! Batch record parsing, dispatch and report formatting for the CLI.
//!
//! Input CSV has the header `id,mode,s,p1,p2,...`; rows may leave trailing
//! payload cells empty. JSON-lines input has one object per line with the
//! fields `id` (optional string), `mode`, `p` (array of numbers) and `s`
//! (optional number). Unknown JSON fields are ignored.
//!
//! | mode        | payload                          |
//! |-------------|----------------------------------|
//! | `generic`   | `p1..pn`, n >= 2, optional `s`   |
//! | `neutro3`   | `T, I, F`                        |
//! | `neutro2`   | `mu, nu, omega`                  |
//! | `bifuzzy`   | `mu, nu`                         |
//! | `ifs`       | `mu, nu` with `mu + nu <= 1`     |
//! | `imprecise` | `mu, sigma` with `sigma <= 1/2`  |
//! | `partition` | `w1..wn`, n >= 2, summing to 1   |
//!
//! Output rows share one schema for both subcommands. The CSV header is
//! [`CSV_HEADER`]; normalized components are joined with `;` in a single
//! column. JSON-lines output uses the same field names in the same order.

use std::fmt;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Deserialize;
use thiserror::Error;

use crate::entropy::Measure;
use crate::normalization::{normalize, profile, ExtendedInformation, InformationVector, UnitPartition};
use crate::special::{
    bifuzzy, imprecise_fuzzy, intuitionistic, neutrosophic2, neutrosophic3, partition_shannon,
    BifuzzyPair, BivalentOutcome, FuzzyPartition, ImpreciseFuzzyPair, IntuitionisticPair,
    NeutrosophicBivalentInput, NeutrosophicTriple,
};

pub const CSV_HEADER: [&str; 11] = [
    "id",
    "mode",
    "measure",
    "alpha",
    "value",
    "delta",
    "under",
    "over",
    "h",
    "normalized",
    "error",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Jsonl,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_extension(path: &std::path::Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Self::Csv),
            "jsonl" | "ndjson" => Some(Self::Jsonl),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Generic,
    Neutro3,
    Neutro2,
    Bifuzzy,
    Ifs,
    Imprecise,
    Partition,
}

impl Mode {
    pub const ALL: [Mode; 7] = [
        Mode::Generic,
        Mode::Neutro3,
        Mode::Neutro2,
        Mode::Bifuzzy,
        Mode::Ifs,
        Mode::Imprecise,
        Mode::Partition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Generic => "generic",
            Mode::Neutro3 => "neutro3",
            Mode::Neutro2 => "neutro2",
            Mode::Bifuzzy => "bifuzzy",
            Mode::Ifs => "ifs",
            Mode::Imprecise => "imprecise",
            Mode::Partition => "partition",
        }
    }

    /// `(min, max)` payload length.
    pub fn arity(self) -> (usize, Option<usize>) {
        match self {
            Mode::Generic | Mode::Partition => (2, None),
            Mode::Neutro3 | Mode::Neutro2 => (3, Some(3)),
            Mode::Bifuzzy | Mode::Ifs | Mode::Imprecise => (2, Some(2)),
        }
    }

    fn arity_text(self) -> String {
        match self.arity() {
            (min, None) => format!("at least {min}"),
            (_, Some(exact)) => format!("exactly {exact}"),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown mode {s:?}"))
    }
}

/// One parsed input record, before domain validation.
#[derive(Debug, Clone, PartialEq)]
pub struct RecordInput {
    /// 1-based line of the record in its source.
    pub line: usize,
    pub id: Option<String>,
    pub mode: Mode,
    pub payload: Vec<f64>,
    /// Generic mode only.
    pub imprecision: Option<f64>,
}

/// A record validated into its domain type.
#[derive(Debug, Clone, PartialEq)]
pub enum Subject {
    Generic(ExtendedInformation),
    Neutro3(NeutrosophicTriple),
    Neutro2(NeutrosophicBivalentInput),
    Bifuzzy(BifuzzyPair),
    Ifs(IntuitionisticPair),
    Imprecise(ImpreciseFuzzyPair),
    Partition(FuzzyPartition),
}

impl RecordInput {
    pub fn subject(&self) -> Result<Subject, ErrorKind> {
        let (min, max) = self.mode.arity();
        let n = self.payload.len();
        if n < min || max.is_some_and(|m| n != m) {
            return Err(ErrorKind::Arity {
                mode: self.mode,
                expected: self.mode.arity_text(),
                actual: n,
            });
        }
        if self.imprecision.is_some() && self.mode != Mode::Generic {
            return Err(ErrorKind::Parse(format!(
                "column s only applies to generic mode, not {}",
                self.mode
            )));
        }
        let p = &self.payload;
        let subject = match self.mode {
            Mode::Generic => Subject::Generic(ExtendedInformation::new(
                InformationVector::new(p.clone())?,
                self.imprecision.unwrap_or(0.0),
            )?),
            Mode::Neutro3 => Subject::Neutro3(NeutrosophicTriple::new(p[0], p[1], p[2])?),
            Mode::Neutro2 => Subject::Neutro2(NeutrosophicBivalentInput::new(p[0], p[1], p[2])?),
            Mode::Bifuzzy => Subject::Bifuzzy(BifuzzyPair::new(p[0], p[1])?),
            Mode::Ifs => Subject::Ifs(IntuitionisticPair::new(p[0], p[1])?),
            Mode::Imprecise => Subject::Imprecise(ImpreciseFuzzyPair::new(p[0], p[1])?),
            Mode::Partition => Subject::Partition(FuzzyPartition::new(p.clone())?),
        };
        Ok(subject)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ErrorKind {
    #[error("{0}")]
    Parse(String),
    #[error("mode {mode} expects {expected} values, got {actual}")]
    Arity {
        mode: Mode,
        expected: String,
        actual: usize,
    },
    #[error(transparent)]
    Invalid(#[from] crate::Error),
}

/// A record that could not be turned into a valid input.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("line {line}: {kind}")]
pub struct RecordError {
    pub line: usize,
    pub id: Option<String>,
    pub mode: Option<Mode>,
    pub kind: ErrorKind,
}

pub type ParsedRecord = Result<RecordInput, RecordError>;

/// Failures that stop a batch outright.
#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("bad header: {0}")]
    Header(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

fn parse_number(text: &str, column: &str) -> Result<f64, ErrorKind> {
    text.parse::<f64>()
        .map_err(|_| ErrorKind::Parse(format!("invalid number {text:?} in column {column}")))
}

fn check_input_header(header: &csv::StringRecord) -> Result<(), InputError> {
    let cols: Vec<&str> = header.iter().collect();
    if cols.len() < 3 || cols[..3] != ["id", "mode", "s"] {
        return Err(InputError::Header(format!(
            "expected id,mode,s,p1,... but found {}",
            cols.join(",")
        )));
    }
    for (i, col) in cols[3..].iter().enumerate() {
        if *col != format!("p{}", i + 1) {
            return Err(InputError::Header(format!(
                "column {} should be p{}, found {col:?}",
                i + 4,
                i + 1
            )));
        }
    }
    Ok(())
}

fn csv_record(record: &csv::StringRecord, line: usize, width: usize) -> ParsedRecord {
    let cell = |i: usize| record.get(i).unwrap_or("");
    let id = Some(cell(0)).filter(|s| !s.is_empty()).map(str::to_owned);
    let fail = |mode, kind| RecordError {
        line,
        id: id.clone(),
        mode,
        kind,
    };

    let mode: Mode = cell(1)
        .parse()
        .map_err(|e| fail(None, ErrorKind::Parse(e)))?;
    let imprecision = match cell(2) {
        "" => None,
        s => Some(parse_number(s, "s").map_err(|k| fail(Some(mode), k))?),
    };
    if record.len() > width {
        return Err(fail(
            Some(mode),
            ErrorKind::Parse(format!(
                "{} fields but the header has {width} columns",
                record.len()
            )),
        ));
    }

    let cells: Vec<&str> = record.iter().skip(3).collect();
    let used = cells.iter().rposition(|c| !c.is_empty()).map_or(0, |i| i + 1);
    let mut payload = Vec::with_capacity(used);
    for (i, text) in cells[..used].iter().enumerate() {
        let column = format!("p{}", i + 1);
        if text.is_empty() {
            return Err(fail(
                Some(mode),
                ErrorKind::Parse(format!("empty value in column {column}")),
            ));
        }
        payload.push(parse_number(text, &column).map_err(|k| fail(Some(mode), k))?);
    }

    let input = RecordInput {
        line,
        id: id.clone(),
        mode,
        payload,
        imprecision,
    };
    input.subject().map_err(|k| fail(Some(mode), k))?;
    Ok(input)
}

fn parse_csv<R: Read>(reader: R) -> Result<Vec<ParsedRecord>, InputError> {
    let mut rdr = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers()?.clone();
    check_input_header(&header)?;
    let width = header.len();

    let mut out = Vec::new();
    let mut record = csv::StringRecord::new();
    loop {
        match rdr.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {
                let line = record.position().map_or(0, |p| p.line() as usize);
                if record.iter().all(str::is_empty) {
                    continue;
                }
                out.push(csv_record(&record, line, width));
            }
            Err(e) => match e.kind() {
                csv::ErrorKind::Io(_) => return Err(e.into()),
                _ => {
                    let line = e.position().map_or(0, |p| p.line() as usize);
                    out.push(Err(RecordError {
                        line,
                        id: None,
                        mode: None,
                        kind: ErrorKind::Parse(e.to_string()),
                    }));
                }
            },
        }
    }
    Ok(out)
}

#[derive(Deserialize)]
struct JsonRecord {
    #[serde(default)]
    id: Option<String>,
    mode: String,
    p: Vec<f64>,
    #[serde(default)]
    s: Option<f64>,
}

fn parse_jsonl<R: Read>(reader: R) -> Result<Vec<ParsedRecord>, InputError> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(reader).lines().enumerate() {
        let line = line?;
        let number = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let parsed = serde_json::from_str::<JsonRecord>(&line)
            .map_err(|e| RecordError {
                line: number,
                id: None,
                mode: None,
                kind: ErrorKind::Parse(format!("invalid JSON record: {e}")),
            })
            .and_then(|rec| {
                let fail = |mode, kind| RecordError {
                    line: number,
                    id: rec.id.clone(),
                    mode,
                    kind,
                };
                let mode: Mode = rec
                    .mode
                    .parse()
                    .map_err(|e| fail(None, ErrorKind::Parse(e)))?;
                let input = RecordInput {
                    line: number,
                    id: rec.id.clone(),
                    mode,
                    payload: rec.p.clone(),
                    imprecision: rec.s,
                };
                input.subject().map_err(|k| fail(Some(mode), k))?;
                Ok(input)
            });
        out.push(parsed);
    }
    Ok(out)
}

/// Reads every record from `reader`. Records that fail to parse or validate
/// are kept in place as errors.
pub fn parse_records<R: Read>(reader: R, format: Format) -> Result<Vec<ParsedRecord>, InputError> {
    match format {
        Format::Csv => parse_csv(reader),
        Format::Jsonl => parse_jsonl(reader),
    }
}

/// What to compute for every record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Task {
    Normalize,
    Entropy(Measure),
}

/// One output row.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReportRow {
    pub id: Option<String>,
    pub mode: Option<String>,
    pub measure: Option<String>,
    pub order_alpha: Option<f64>,
    pub value: Option<f64>,
    pub delta: Option<f64>,
    pub under: Option<f64>,
    pub over: Option<f64>,
    pub h: Option<f64>,
    pub normalized: Vec<f64>,
    pub error: Option<String>,
}

impl ReportRow {
    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }
}

/// Normalized vector, dedicated Shannon value and diagnostics of a subject.
struct Evaluated {
    normalized: UnitPartition,
    shannon: f64,
    delta: f64,
    under: f64,
    h: f64,
}

impl From<BivalentOutcome> for Evaluated {
    fn from(o: BivalentOutcome) -> Self {
        Self {
            normalized: o.pair.to_partition(),
            shannon: o.entropy,
            delta: o.definedness,
            under: o.incompleteness,
            h: o.h,
        }
    }
}

fn evaluate_subject(subject: &Subject) -> Evaluated {
    match subject {
        Subject::Generic(x) => {
            let prof = profile(x);
            let normalized = normalize(x);
            Evaluated {
                shannon: crate::entropy::shannon_unit(&normalized),
                normalized,
                delta: prof.delta,
                under: prof.under,
                h: prof.h,
            }
        }
        Subject::Neutro3(t) => {
            let o = neutrosophic3(t);
            Evaluated {
                normalized: o.normalized,
                shannon: o.entropy,
                delta: o.definedness,
                under: o.under,
                h: 0.0,
            }
        }
        Subject::Neutro2(x) => neutrosophic2(x).into(),
        Subject::Bifuzzy(x) => bifuzzy(x).into(),
        Subject::Ifs(x) => intuitionistic(x).into(),
        Subject::Imprecise(x) => imprecise_fuzzy(x).into(),
        Subject::Partition(w) => {
            let o = partition_shannon(w);
            let definedness = o.top.0 + o.top.1 - 1.0;
            Evaluated {
                normalized: o.pair.to_partition(),
                shannon: o.entropy,
                delta: definedness,
                under: o.incompleteness,
                h: 0.0,
            }
        }
    }
}

fn run_one(record: &ParsedRecord, task: Task) -> ReportRow {
    let (measure, order_alpha) = match task {
        Task::Normalize => (None, None),
        Task::Entropy(m) => (Some(m.name().to_owned()), m.order()),
    };
    let input = match record {
        Ok(input) => input,
        Err(e) => {
            return ReportRow {
                id: e.id.clone(),
                mode: e.mode.map(|m| m.name().to_owned()),
                measure,
                order_alpha,
                error: Some(e.to_string()),
                ..ReportRow::default()
            }
        }
    };
    let mut row = ReportRow {
        id: input.id.clone(),
        mode: Some(input.mode.name().to_owned()),
        measure,
        order_alpha,
        ..ReportRow::default()
    };
    let subject = match input.subject() {
        Ok(s) => s,
        Err(kind) => {
            row.error = Some(format!("line {}: {kind}", input.line));
            return row;
        }
    };
    let ev = evaluate_subject(&subject);
    let value = match task {
        Task::Normalize => Ok(None),
        Task::Entropy(Measure::Shannon) => Ok(Some(ev.shannon)),
        Task::Entropy(m) => m.evaluate(&ev.normalized).map(Some),
    };
    match value {
        Ok(value) => {
            row.value = value;
            row.delta = Some(ev.delta);
            row.under = Some(ev.under);
            row.over = Some(ev.delta.max(0.0));
            row.h = Some(ev.h);
            row.normalized = ev.normalized.into_vec();
        }
        Err(e) => row.error = Some(format!("line {}: {e}", input.line)),
    }
    row
}

/// Evaluates every record. Rows come back in input order.
pub fn run(records: &[ParsedRecord], task: Task) -> Vec<ReportRow> {
    records.par_iter().map(|r| run_one(r, task)).collect()
}

/// Significant digits for emitted numbers, between 1 and 17.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Precision(u8);

impl Precision {
    pub const DEFAULT: Precision = Precision(12);

    pub fn new(digits: u8) -> Option<Self> {
        (1..=17).contains(&digits).then_some(Self(digits))
    }

    pub fn digits(self) -> u8 {
        self.0
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Renders `x` in positional decimal notation rounded to `precision`
/// significant digits, without trailing zeros.
pub fn format_number(x: f64, precision: Precision) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", usize::from(precision.0 - 1), x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();

    let (int_part, frac_part) = if exp >= 0 {
        let split = exp as usize + 1;
        if digits.len() <= split {
            (format!("{digits:0<split$}"), String::new())
        } else {
            (digits[..split].to_owned(), digits[split..].to_owned())
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        ("0".to_owned(), format!("{zeros}{digits}"))
    };
    let frac_part = frac_part.trim_end_matches('0');

    let mut out = String::with_capacity(int_part.len() + frac_part.len() + 2);
    if negative {
        out.push('-');
    }
    out.push_str(&int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

fn opt_number(x: Option<f64>, precision: Precision) -> String {
    x.map(|v| format_number(v, precision)).unwrap_or_default()
}

fn json_number(x: Option<f64>, precision: Precision) -> String {
    match x {
        Some(v) if v.is_finite() => format_number(v, precision),
        _ => "null".to_owned(),
    }
}

fn json_string(s: Option<&str>) -> String {
    match s {
        Some(s) => serde_json::to_string(s).expect("strings always serialize"),
        None => "null".to_owned(),
    }
}

/// Writes `rows` in the requested format. An empty batch yields a header-only
/// CSV or an empty JSON-lines stream.
pub fn format_output<W: Write>(
    rows: &[ReportRow],
    writer: W,
    format: Format,
    precision: Precision,
) -> io::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(writer);
            w.write_record(CSV_HEADER)?;
            for row in rows {
                let normalized = row
                    .normalized
                    .iter()
                    .map(|&c| format_number(c, precision))
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    row.id.clone().unwrap_or_default(),
                    row.mode.clone().unwrap_or_default(),
                    row.measure.clone().unwrap_or_default(),
                    opt_number(row.order_alpha, precision),
                    opt_number(row.value, precision),
                    opt_number(row.delta, precision),
                    opt_number(row.under, precision),
                    opt_number(row.over, precision),
                    opt_number(row.h, precision),
                    normalized,
                    row.error.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()
        }
        Format::Jsonl => {
            let mut w = io::BufWriter::new(writer);
            for row in rows {
                let normalized = row
                    .normalized
                    .iter()
                    .map(|&c| json_number(Some(c), precision))
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(
                    w,
                    "{{\"id\":{},\"mode\":{},\"measure\":{},\"alpha\":{},\"value\":{},\
                     \"delta\":{},\"under\":{},\"over\":{},\"h\":{},\"normalized\":[{}],\"error\":{}}}",
                    json_string(row.id.as_deref()),
                    json_string(row.mode.as_deref()),
                    json_string(row.measure.as_deref()),
                    json_number(row.order_alpha, precision),
                    json_number(row.value, precision),
                    json_number(row.delta, precision),
                    json_number(row.under, precision),
                    json_number(row.over, precision),
                    json_number(row.h, precision),
                    normalized,
                    json_string(row.error.as_deref()),
                )?;
            }
            w.flush()
        }
    }
}

#[derive(Deserialize)]
struct JsonRow {
    id: Option<String>,
    mode: Option<String>,
    measure: Option<String>,
    alpha: Option<f64>,
    value: Option<f64>,
    delta: Option<f64>,
    under: Option<f64>,
    over: Option<f64>,
    h: Option<f64>,
    #[serde(default)]
    normalized: Vec<f64>,
    error: Option<String>,
}

fn read_cell_number(text: &str) -> Result<Option<f64>, InputError> {
    if text.is_empty() {
        return Ok(None);
    }
    text.parse()
        .map(Some)
        .map_err(|_| InputError::Header(format!("invalid number {text:?} in report")))
}

/// Reads back rows written by [`format_output`].
pub fn parse_report_rows<R: Read>(reader: R, format: Format) -> Result<Vec<ReportRow>, InputError> {
    let text_opt = |s: &str| Some(s).filter(|s| !s.is_empty()).map(str::to_owned);
    match format {
        Format::Csv => {
            let mut rdr = csv::Reader::from_reader(reader);
            if rdr.headers()?.iter().ne(CSV_HEADER) {
                return Err(InputError::Header("not a report header".to_owned()));
            }
            let mut rows = Vec::new();
            for rec in rdr.records() {
                let rec = rec?;
                let normalized = rec[9]
                    .split(';')
                    .filter(|s| !s.is_empty())
                    .map(|s| read_cell_number(s).map(Option::unwrap_or_default))
                    .collect::<Result<_, _>>()?;
                rows.push(ReportRow {
                    id: text_opt(&rec[0]),
                    mode: text_opt(&rec[1]),
                    measure: text_opt(&rec[2]),
                    order_alpha: read_cell_number(&rec[3])?,
                    value: read_cell_number(&rec[4])?,
                    delta: read_cell_number(&rec[5])?,
                    under: read_cell_number(&rec[6])?,
                    over: read_cell_number(&rec[7])?,
                    h: read_cell_number(&rec[8])?,
                    normalized,
                    error: text_opt(&rec[10]),
                });
            }
            Ok(rows)
        }
        Format::Jsonl => BufReader::new(reader)
            .lines()
            .filter(|l| l.as_ref().map_or(true, |l| !l.trim().is_empty()))
            .map(|line| {
                let r: JsonRow = serde_json::from_str(&line?)
                    .map_err(|e| InputError::Header(e.to_string()))?;
                Ok(ReportRow {
                    id: r.id,
                    mode: r.mode,
                    measure: r.measure,
                    order_alpha: r.alpha,
                    value: r.value,
                    delta: r.delta,
                    under: r.under,
                    over: r.over,
                    h: r.h,
                    normalized: r.normalized,
                    error: r.error,
                })
            })
            .collect(),
    }
}
