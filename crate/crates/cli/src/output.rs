use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Format;

/// Version of the JSON envelope and result objects; bumped on any
/// incompatible change to the files under `schema/`.
pub const SCHEMA_VERSION: u32 = 1;

/// Results of one command in all output shapes.
#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub results: Vec<Value>,
    /// Replaces the table in text mode (bare graph6 lines, for piping).
    pub plain: Option<Vec<String>>,
}

impl Report {
    pub fn new(command: &'static str, columns: &[&'static str]) -> Self {
        Report {
            command,
            columns: columns.to_vec(),
            rows: Vec::new(),
            results: Vec::new(),
            plain: None,
        }
    }

    pub fn push<T: Serialize>(&mut self, result: &T, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.results.push(serde_json::to_value(result).expect("results serialize"));
        self.rows.push(row);
    }

    /// Adds a table row without a JSON result, for grouped results.
    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn push_result<T: Serialize>(&mut self, result: &T) {
        self.results.push(serde_json::to_value(result).expect("results serialize"));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": self.command,
                    "results": self.results,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("json");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = csv_line(self.columns.iter().copied());
                for r in &self.rows {
                    s.push_str(&csv_line(r.iter().map(String::as_str)));
                }
                s
            }
            Format::Text => match &self.plain {
                Some(lines) => lines.iter().map(|l| format!("{l}\n")).collect(),
                None => table(&self.columns, &self.rows),
            },
        }
    }
}

fn csv_field(f: &str) -> String {
    if f.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", f.replace('"', "\"\""))
    } else {
        f.to_string()
    }
}

fn csv_line<'a>(fields: impl Iterator<Item = &'a str>) -> String {
    let mut line = fields.map(csv_field).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn table(columns: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(c);
            } else {
                s.push_str(&format!("{c:<w$}  "));
            }
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(columns.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}
