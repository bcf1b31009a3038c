//! The report envelope shared by every subcommand and its three renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub id: String,
    pub citation: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: Value,
    pub citations: Vec<String>,
    pub status: Status,
    #[serde(default)]
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Fixed CSV header.
pub const CSV_COLUMNS: [&str; 4] = ["command", "status", "path", "value"];

impl ReportEnvelope {
    pub fn new(command: &str, inputs: BTreeMap<String, Value>, outputs: Value, citations: Vec<String>) -> Self {
        let mut citations = citations;
        citations.sort();
        citations.dedup();
        Self { command: command.to_string(), inputs, outputs, citations, status: Status::Ok, mismatches: Vec::new() }
    }

    /// Leaf values keyed by dotted path, in document order.
    pub fn rows(&self) -> Vec<(String, String)> {
        let mut rows = Vec::new();
        for (k, v) in &self.inputs {
            flatten(&format!("inputs.{k}"), v, &mut rows);
        }
        flatten("outputs", &self.outputs, &mut rows);
        for (i, c) in self.citations.iter().enumerate() {
            rows.push((format!("citations.{i}"), c.clone()));
        }
        for (i, m) in self.mismatches.iter().enumerate() {
            rows.push((format!("mismatches.{i}.id"), m.id.clone()));
            rows.push((format!("mismatches.{i}.expected"), m.expected.clone()));
            rows.push((format!("mismatches.{i}.actual"), m.actual.clone()));
        }
        rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Md => self.to_markdown(),
        }
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for (path, value) in self.rows() {
            w.write_record([self.command.as_str(), self.status.as_str(), &path, &value]).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
    }

    fn to_markdown(&self) -> String {
        let rows: Vec<(String, String)> =
            self.rows().into_iter().map(|(p, v)| (p, v.replace('|', "\\|"))).collect();
        let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0).max(4);
        let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0).max(5);
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w - s.chars().count()));
        let mut out = String::new();
        let _ = writeln!(out, "## {}\n\nstatus: **{}**\n", self.command, self.status.as_str());
        let _ = writeln!(out, "| {} | {} |", pad("path", w0), pad("value", w1));
        let _ = writeln!(out, "|{}|{}|", "-".repeat(w0 + 2), "-".repeat(w1 + 2));
        for (path, value) in &rows {
            let _ = writeln!(out, "| {} | {} |", pad(path, w0), pad(value, w1));
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&format!("{prefix}.{k}"), v, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push((prefix.to_string(), "[]".to_string()));
            }
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}.{i}"), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), "null".to_string())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> ReportEnvelope {
        let mut inputs = BTreeMap::new();
        inputs.insert("genus".into(), json!(3));
        inputs.insert("a".into(), json!(4));
        ReportEnvelope::new("invariants", inputs, json!({"n": 16, "chi": "3/2", "list": [1, 2]}), vec!["b".into(), "a".into(), "a".into()])
    }

    #[test]
    fn citations_are_sorted_and_unique() {
        assert_eq!(sample().citations, ["a", "b"]);
    }

    #[test]
    fn json_round_trips() {
        let env = sample();
        let back: ReportEnvelope = serde_json::from_str(&env.render(Format::Json)).unwrap();
        assert_eq!(back, env);
    }

    #[test]
    fn csv_has_fixed_header_and_paths() {
        let csv = sample().render(Format::Csv);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("command,status,path,value"));
        assert!(csv.contains("invariants,ok,outputs.chi,3/2"));
        assert!(csv.contains("invariants,ok,outputs.list.1,2"));
        assert!(csv.contains("invariants,ok,inputs.a,4"));
    }

    #[test]
    fn markdown_columns_align() {
        let md = sample().render(Format::Md);
        let widths: Vec<usize> = md.lines().filter(|l| l.starts_with('|')).map(|l| l.chars().count()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{md}");
    }
}
