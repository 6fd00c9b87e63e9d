//! Report rendering.
//!
//! JSON reports contain the verdict, per-axiom violation counts, and the
//! full witness list; identical inputs produce byte-identical output. The
//! text form is a small human-readable table.

use std::fmt::Write as _;

use serde_json::{json, Value};

use yamaguti::report::{CheckReport, Witness};
use yamaguti::{StagedReport, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

fn vector_value(v: &Vector) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn witness_value(w: &Witness) -> Value {
    json!({
        "axiom": w.axiom,
        "indices": w.indices,
        "lhs": vector_value(&w.lhs),
        "rhs": vector_value(&w.rhs),
    })
}

pub fn report_value(report: &CheckReport) -> Value {
    let counts: serde_json::Map<String, Value> = report
        .counts()
        .into_iter()
        .map(|(k, v)| (k, json!(v)))
        .collect();
    json!({
        "verdict": if report.passed() { "pass" } else { "fail" },
        "counts": counts,
        "witnesses": report.witnesses().iter().map(witness_value).collect::<Vec<_>>(),
    })
}

pub fn staged_value(staged: &StagedReport) -> Value {
    json!({
        "verdict": if staged.passed() { "pass" } else { "fail" },
        "stages": staged
            .stages
            .iter()
            .map(|(name, report)| {
                let mut v = report_value(report);
                v.as_object_mut()
                    .expect("report is an object")
                    .insert("name".to_owned(), json!(name));
                v
            })
            .collect::<Vec<_>>(),
    })
}

fn vector_text(v: &Vector) -> String {
    let inner: Vec<String> = v.iter().map(|s| s.to_string()).collect();
    format!("({})", inner.join(", "))
}

fn witness_lines(out: &mut String, witnesses: &[Witness], indent: &str) {
    for w in witnesses {
        let idx: Vec<String> = w.indices.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(
            out,
            "{indent}{} ({}): lhs = {}, rhs = {}",
            w.axiom,
            idx.join(","),
            vector_text(&w.lhs),
            vector_text(&w.rhs),
        );
    }
}

pub fn report_text(report: &CheckReport) -> String {
    let mut out = String::new();
    let counts = report.counts();
    let width = counts.keys().map(String::len).max().unwrap_or(5).max(5);
    let _ = writeln!(out, "{:<width$}  violations", "axiom");
    for (axiom, count) in &counts {
        let _ = writeln!(out, "{axiom:<width$}  {count}");
    }
    if !report.passed() {
        let _ = writeln!(out, "witnesses:");
        witness_lines(&mut out, report.witnesses(), "  ");
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if report.passed() { "pass" } else { "fail" }
    );
    out
}

pub fn staged_text(staged: &StagedReport) -> String {
    let mut out = String::new();
    for (name, report) in &staged.stages {
        let _ = writeln!(
            out,
            "stage {name}: {}",
            if report.passed() { "pass" } else { "fail" }
        );
        if !report.passed() {
            witness_lines(&mut out, report.witnesses(), "  ");
        }
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        if staged.passed() { "pass" } else { "fail" }
    );
    out
}

pub fn render_report(report: &CheckReport, format: Format) -> String {
    match format {
        Format::Json => crate::jsonfmt::canonical(&report_value(report)),
        Format::Text => report_text(report),
    }
}

pub fn render_staged(staged: &StagedReport, format: Format) -> String {
    match format {
        Format::Json => crate::jsonfmt::canonical(&staged_value(staged)),
        Format::Text => staged_text(staged),
    }
}
