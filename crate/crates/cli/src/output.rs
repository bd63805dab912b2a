use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

use crate::records::Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    JsonLines,
    Csv,
    /// Aligned columns for reading; not byte-stable across versions.
    Table,
}

enum Inner<W: Write> {
    Json(W),
    Csv(csv::Writer<W>),
    Table { out: W, header: Vec<String>, rows: Vec<Vec<String>> },
}

/// Writes a homogeneous stream of records in the selected format.
pub struct Sink<W: Write> {
    inner: Inner<W>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_owned(),
        Value::Bool(true) => "yes".to_owned(),
        Value::Bool(false) => "no".to_owned(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl<W: Write> Sink<W> {
    pub fn new<R: Record>(format: Format, out: W) -> io::Result<Self> {
        let inner = match format {
            Format::JsonLines => Inner::Json(out),
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
                w.write_record(R::FIELDS)?;
                Inner::Csv(w)
            }
            Format::Table => Inner::Table {
                out,
                header: R::FIELDS.iter().map(|s| s.to_string()).collect(),
                rows: Vec::new(),
            },
        };
        Ok(Sink { inner })
    }

    pub fn emit<R: Record>(&mut self, record: &R) -> io::Result<()> {
        match &mut self.inner {
            Inner::Json(out) => {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")
            }
            Inner::Csv(w) => w.serialize(record).map_err(io::Error::other),
            Inner::Table { rows, .. } => {
                let Value::Object(map) = serde_json::to_value(record)? else {
                    return Err(io::Error::other("record is not a struct"));
                };
                rows.push(map.values().map(cell).collect());
                Ok(())
            }
        }
    }

    pub fn finish(self) -> io::Result<()> {
        match self.inner {
            Inner::Json(mut out) => out.flush(),
            Inner::Csv(mut w) => w.flush(),
            Inner::Table { mut out, header, rows } => {
                let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
                for row in &rows {
                    for (w, c) in widths.iter_mut().zip(row) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                for row in std::iter::once(&header).chain(&rows) {
                    let line: Vec<String> = row
                        .iter()
                        .zip(&widths)
                        .map(|(c, &w)| format!("{c:>w$}"))
                        .collect();
                    writeln!(out, "{}", line.join("  "))?;
                }
                out.flush()
            }
        }
    }
}
