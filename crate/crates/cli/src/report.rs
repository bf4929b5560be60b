use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// What a subcommand emits: one JSON document, one CSV table and a text rendering.
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Custom text rendering; the CSV table is aligned when absent.
    pub text: Option<String>,
    /// Process exit status: 1 for a false verdict, 2 when the question does not apply.
    pub exit: u8,
}

impl Report {
    pub fn new(json: Value, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        Report { json, header: header.iter().map(|s| s.to_string()).collect(), rows, text: None, exit: 0 }
    }

    pub fn text(mut self, text: impl Into<String>) -> Self {
        self.text = Some(text.into());
        self
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.exit = if ok { 0 } else { 1 };
        self
    }

    pub fn exit(mut self, code: u8) -> Self {
        self.exit = code;
        self
    }

    pub fn render(&self, format: Format) -> io::Result<Vec<u8>> {
        match format {
            Format::Json => {
                let mut out = serde_json::to_vec_pretty(&self.json)?;
                out.push(b'\n');
                Ok(out)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.into_inner().map_err(|e| e.into_error())
            }
            Format::Text => Ok(match &self.text {
                Some(t) if t.ends_with('\n') => t.clone().into_bytes(),
                Some(t) => format!("{t}\n").into_bytes(),
                None => align(&self.header, &self.rows).into_bytes(),
            }),
        }
    }

    pub fn emit(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        out.write_all(&self.render(format)?)?;
        out.flush()
    }
}

/// Left-aligned columns separated by two spaces.
pub fn align(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            std::iter::once(header)
                .chain(rows.iter().map(Vec::as_slice))
                .map(|r| r.get(c).map_or(0, String::len))
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for line in std::iter::once(header).chain(rows.iter().map(Vec::as_slice)) {
        let cells: Vec<String> = line.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}
