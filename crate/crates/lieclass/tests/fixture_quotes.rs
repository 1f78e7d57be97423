//! Every fixture quote is a verbatim excerpt of the source text, when the
//! source text is available next to the workspace.

use std::path::Path;

use lieclass::classifier::fixtures::{fixture_ids, fixture_text, load_fixture};
use serde_json::Value;

fn quotes(v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match (k.as_str(), x) {
                    ("quote", Value::String(s)) => out.push(s.clone()),
                    _ => quotes(x, out),
                }
            }
        }
        Value::Array(items) => items.iter().for_each(|x| quotes(x, out)),
        _ => {}
    }
}

#[test]
fn every_row_carries_a_quote() {
    for id in fixture_ids() {
        for (i, row) in load_fixture(id).unwrap().rows.iter().enumerate() {
            let q = row.get("quote").and_then(Value::as_str).unwrap_or_default();
            assert!(!q.trim().is_empty(), "{id} row {i} has no quote");
        }
    }
}

#[test]
fn quotes_are_verbatim() {
    let source = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../paper.md");
    let Ok(text) = std::fs::read_to_string(&source) else {
        eprintln!("source text not found at {}; skipping", source.display());
        return;
    };
    for id in fixture_ids() {
        let v: Value = serde_json::from_str(&fixture_text(id).unwrap()).unwrap();
        let mut found = Vec::new();
        quotes(&v, &mut found);
        assert!(!found.is_empty(), "{id}");
        for q in found {
            assert!(text.contains(&q), "{id}: quote not found verbatim: {q:?}");
        }
    }
}
