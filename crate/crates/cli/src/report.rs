//! `RunReport` and its three renderings.

use std::io::{self, Write};
use std::time::Duration;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn from_checks(all_passed: bool) -> Status {
        if all_passed {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub type Row = Map<String, Value>;

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Vec<Row>,
    pub status: Status,
    pub elapsed_s: f64,
    /// Free-text lines shown under the table only.
    #[serde(skip)]
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            parameters: Map::new(),
            results: Vec::new(),
            status: Status::Info,
            elapsed_s: 0.0,
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn timed(mut self, elapsed: Duration) -> Self {
        self.elapsed_s = round_sig(elapsed.as_secs_f64());
        self
    }

    pub fn render(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => {
                serde_json::to_writer_pretty(&mut *out, self)?;
                writeln!(out)
            }
            Format::Csv => self.render_csv(out),
            Format::Table => self.render_table(out),
        }
    }

    fn columns(&self) -> Vec<&str> {
        let mut cols: Vec<&str> = Vec::new();
        for row in &self.results {
            for key in row.keys() {
                if !cols.contains(&key.as_str()) {
                    cols.push(key);
                }
            }
        }
        cols
    }

    fn render_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let cols = self.columns();
        let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::NonNumeric).from_writer(out);
        w.write_record(&cols)?;
        for row in &self.results {
            let mut record = csv::StringRecord::new();
            for c in &cols {
                record.push_field(&row.get(*c).map(cell).unwrap_or_default());
            }
            w.write_record(&record)?;
        }
        w.flush()
    }

    fn render_table(&self, out: &mut impl Write) -> io::Result<()> {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={}", cell(v))).collect();
        if params.is_empty() {
            writeln!(out, "{}", self.command)?;
        } else {
            writeln!(out, "{} [{}]", self.command, params.join(" "))?;
        }
        let cols = self.columns();
        let cells: Vec<Vec<String>> = self
            .results
            .iter()
            .map(|row| cols.iter().map(|c| row.get(*c).map(cell).unwrap_or_default()).collect())
            .collect();
        let widths: Vec<usize> = cols
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |fields: &[String]| -> String {
            let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        if !cols.is_empty() {
            writeln!(out, "{}", line(&cols.iter().map(|c| c.to_string()).collect::<Vec<_>>()))?;
            writeln!(out, "{}", line(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>()))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
        }
        for note in &self.notes {
            writeln!(out, "{note}")?;
        }
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
        };
        writeln!(out, "status {status}, {} s", fmt_sig(self.elapsed_s))
    }
}

/// `x` rounded to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// A JSON number holding `x` to 12 significant digits; non-finite values
/// become strings, which JSON numbers cannot carry.
pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x)).map(Value::Number).unwrap_or_else(|| Value::String(x.to_string()))
}

/// `%.12g`-style text.
pub fn fmt_sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&exp) {
        let s = format!("{x:.11e}");
        let (mantissa, e) = s.split_once('e').unwrap();
        return format!("{}e{e}", trim_zeros(mantissa));
    }
    let decimals = (11 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(x) if !(n.is_i64() || n.is_u64()) => fmt_sig(x),
            _ => n.to_string(),
        },
        Value::Bool(b) => b.to_string(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

pub fn check(passed: bool) -> Value {
    Value::String(if passed { "PASS" } else { "FAIL" }.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_sig(std::f64::consts::PI), "3.14159265359");
        assert_eq!(fmt_sig(1.2020569031595942), "1.20205690316");
        assert_eq!(fmt_sig(0.5), "0.5");
        assert_eq!(fmt_sig(2.4e-15), "2.4e-15");
        assert_eq!(fmt_sig(-1234.5), "-1234.5");
        assert_eq!(round_sig(1.644_934_066_848_226_4), 1.64493406685);
    }

    #[test]
    fn csv_quotes_strings_only() {
        let mut r = RunReport::new("t");
        let mut row = Row::new();
        row.insert("n".into(), 2.into());
        row.insert("delta".into(), "1/2".into());
        row.insert("value".into(), num(0.5));
        r.results.push(row);
        let mut buf = Vec::new();
        r.render(Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "\"n\",\"delta\",\"value\"\n2,\"1/2\",0.5\n");
    }
}
