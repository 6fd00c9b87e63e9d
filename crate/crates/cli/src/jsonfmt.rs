//! Canonical JSON writer.
//!
//! Objects are printed one key per line (keys already sorted by the
//! underlying map); arrays stay on one line while they contain no objects
//! and fit comfortably, which keeps structure-constant entries like
//! `[1, 2, ["1", "0"]]` readable. Output is deterministic for equal values.

use serde_json::Value;

const INLINE_LIMIT: usize = 72;

pub fn canonical(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn contains_object(value: &Value) -> bool {
    match value {
        Value::Object(_) => true,
        Value::Array(items) => items.iter().any(contains_object),
        _ => false,
    }
}

fn inline(value: &Value) -> Option<String> {
    if contains_object(value) {
        return None;
    }
    let compact = compact(value);
    (compact.len() <= INLINE_LIMIT).then_some(compact)
}

fn compact(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let inner: Vec<String> = items.iter().map(compact).collect();
            format!("[{}]", inner.join(", "))
        }
        other => other.to_string(),
    }
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    let pad_inner = "  ".repeat(depth + 1);
    match value {
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (pos, (key, v)) in map.iter().enumerate() {
                out.push_str(&pad_inner);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, v, depth + 1);
                if pos + 1 < map.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push('}');
        }
        Value::Array(items) if items.is_empty() => out.push_str("[]"),
        Value::Array(items) => {
            if let Some(text) = inline(value) {
                out.push_str(&text);
                return;
            }
            out.push_str("[\n");
            for (pos, v) in items.iter().enumerate() {
                out.push_str(&pad_inner);
                write_value(out, v, depth + 1);
                if pos + 1 < items.len() {
                    out.push(',');
                }
                out.push('\n');
            }
            out.push_str(&pad);
            out.push(']');
        }
        leaf => out.push_str(&leaf.to_string()),
    }
}
