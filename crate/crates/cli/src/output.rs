//! Rendering of command results as JSON, CSV or aligned text.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Result of one subcommand.
pub struct Report {
    /// Versioned schema tag, e.g. `cyclo-schur/dim-hecke/v1`.
    pub schema: String,
    /// Payload merged into the JSON object next to `schema`.
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Replaces the table in text mode when set.
    pub text: Option<String>,
    /// `false` when a verification failed.
    pub ok: bool,
}

impl Report {
    pub fn new(kind: &str, json: Value) -> Self {
        Report { schema: format!("cyclo-schur/{kind}/v1"), json, headers: Vec::new(), rows: Vec::new(), text: None, ok: true }
    }

    pub fn table<S: ToString>(mut self, headers: &[S], rows: Vec<Vec<String>>) -> Self {
        self.headers = headers.iter().map(|h| h.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn text(mut self, text: String) -> Self {
        self.text = Some(text);
        self
    }

    pub fn ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }

    pub fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => {
                let mut obj = json!({ "schema": self.schema, "ok": self.ok });
                if let (Some(o), Value::Object(extra)) = (obj.as_object_mut(), &self.json) {
                    o.extend(extra.clone());
                }
                serde_json::to_string_pretty(&obj).map(|s| s + "\n").map_err(|e| e.to_string())
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).map_err(|e| e.to_string())?;
                for r in &self.rows {
                    w.write_record(r).map_err(|e| e.to_string())?;
                }
                String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
            }
            Format::Text => Ok(match &self.text {
                Some(t) => t.clone(),
                None => aligned(&self.headers, &self.rows),
            }),
        }
    }
}

fn aligned(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    for r in std::iter::once(headers).chain(rows.iter().map(|r| r.as_slice())) {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", cells.join("  ").trim_end());
    }
    out
}
