use std::io::Write;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Number;

use super::query::{Evaluated, Query};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Exact decimal integer in JSON output.
fn number(x: &BigInt) -> Number {
    x.to_string().parse().expect("decimal integer")
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub mode: &'static str,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub blocks: Option<String>,
    pub b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<Number>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<Number>,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    pub matches: Option<bool>,
    /// `ok`, `mismatch` or `skipped`; sweeps only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<&'static str>,
}

impl RunReport {
    pub fn new(query: &Query, value: Option<&Evaluated>, oracle: Option<&BigInt>) -> Self {
        let count = value.map(|v| &v.count);
        Self {
            mode: query.mode(),
            n: query.n(),
            k: query.k(),
            a: query.coeffs(),
            blocks: query.blocks(),
            b: query.b(),
            count: count.map(number),
            method: value.map(|v| v.method.to_string()),
            residual: value.map_or(0.0, |v| v.residual),
            wall_time: None,
            oracle_count: oracle.map(number),
            matches: match (count, oracle) {
                (Some(c), Some(o)) => Some(c == o),
                _ => None,
            },
            status: None,
        }
    }

    const CSV_HEADER: [&'static str; 13] = [
        "mode", "n", "k", "a", "blocks", "b", "count", "method", "residual", "wall_time",
        "oracle_count", "match", "status",
    ];

    fn csv_fields(&self) -> Vec<String> {
        let opt = |x: Option<String>| x.unwrap_or_default();
        vec![
            self.mode.to_string(),
            self.n.to_string(),
            opt(self.k.map(|k| k.to_string())),
            self.a.iter().map(u64::to_string).collect::<Vec<_>>().join(","),
            opt(self.blocks.clone()),
            self.b.to_string(),
            opt(self.count.as_ref().map(Number::to_string)),
            opt(self.method.clone()),
            self.residual.to_string(),
            opt(self.wall_time.map(|t| format!("{t:.9}"))),
            opt(self.oracle_count.as_ref().map(Number::to_string)),
            opt(self.matches.map(|m| m.to_string())),
            opt(self.status.map(str::to_string)),
        ]
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Summary {
    pub cases: u64,
    pub mismatches: u64,
    pub skipped: u64,
    pub max_residual: f64,
}

/// Writes records as JSON lines, or as CSV with one header per table.
pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header_done: bool,
}

fn csv_line(fields: &[impl AsRef<str>]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(fields.iter().map(|f| f.as_ref())).expect("in-memory write");
    let mut line = String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input");
    line.pop();
    line
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Self { format, out, header_done: false }
    }

    pub fn report(&mut self, r: &RunReport) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(self.out, "{}", serde_json::to_string(r)?),
            Format::Csv => {
                if !self.header_done {
                    writeln!(self.out, "{}", csv_line(&RunReport::CSV_HEADER))?;
                    self.header_done = true;
                }
                writeln!(self.out, "{}", csv_line(&r.csv_fields()))
            }
        }
    }

    pub fn summary(&mut self, s: &Summary) -> std::io::Result<()> {
        match self.format {
            Format::Json => writeln!(
                self.out,
                "{}",
                serde_json::json!({ "summary": s })
            ),
            Format::Csv => {
                if self.header_done {
                    writeln!(self.out)?;
                }
                writeln!(self.out, "cases,mismatches,skipped,max_residual")?;
                writeln!(
                    self.out,
                    "{},{},{},{}",
                    s.cases, s.mismatches, s.skipped, s.max_residual
                )
            }
        }
    }
}
