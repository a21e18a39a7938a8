use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spiral::ComplexPoint;

pub const CSV_HEADER: &str = "name,n,re,im";

/// One point of a named sequence. `n` is the sequence index, which need
/// not be an integer (interpolants, curve parameters).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub name: String,
    pub n: f64,
    pub re: f64,
    pub im: f64,
}

impl TableRow {
    pub fn new(name: impl Into<String>, n: f64, z: ComplexPoint) -> Self {
        TableRow { name: name.into(), n, re: z.re, im: z.im }
    }

    pub fn point(&self) -> ComplexPoint {
        ComplexPoint::new(self.re, self.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableFormat {
    Csv,
    Json,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::Table(format!("unknown format `{s}` (expected csv or json)"))),
        }
    }
}

pub fn rows_from_points<I>(name: &str, points: I) -> Vec<TableRow>
where
    I: IntoIterator<Item = (f64, ComplexPoint)>,
{
    points.into_iter().map(|(n, z)| TableRow::new(name, n, z)).collect()
}

/// Shortest decimal that parses back to the same bits, never more than 17
/// significant digits. Tiny or huge magnitudes switch to exponent form.
fn number(x: f64) -> String {
    let plain = format!("{x}");
    if plain.len() <= 24 {
        plain
    } else {
        format!("{x:e}")
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::Table(e.to_string())
}

pub fn export_table(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
            w.write_record(CSV_HEADER.split(',')).expect("write to memory");
            for r in rows {
                w.write_record([r.name.clone(), number(r.n), number(r.re), number(r.im)])
                    .expect("write to memory");
            }
            String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 fields")
        }
        TableFormat::Json => {
            let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
            out.push('\n');
            out
        }
    }
}

fn parse_number(field: &str, line: u64) -> Result<f64> {
    field
        .parse()
        .map_err(|_| Error::Table(format!("line {line}: `{field}` is not a number")))
}

/// Inverse of [`export_table`].
pub fn parse_table(text: &str, format: TableFormat) -> Result<Vec<TableRow>> {
    match format {
        TableFormat::Json => serde_json::from_str(text).map_err(|e| Error::Table(e.to_string())),
        TableFormat::Csv => {
            let mut reader = csv::ReaderBuilder::new().from_reader(text.as_bytes());
            let header = reader.headers().map_err(csv_error)?;
            if header.iter().collect::<Vec<_>>().join(",") != CSV_HEADER {
                return Err(Error::Table(format!("expected header `{CSV_HEADER}`")));
            }
            let mut rows = Vec::new();
            for record in reader.records() {
                let record = record.map_err(csv_error)?;
                let line = record.position().map_or(0, |p| p.line());
                rows.push(TableRow {
                    name: record[0].to_string(),
                    n: parse_number(&record[1], line)?,
                    re: parse_number(&record[2], line)?,
                    im: parse_number(&record[3], line)?,
                });
            }
            Ok(rows)
        }
    }
}
