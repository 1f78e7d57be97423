//! A perturbed fixture directory produces exactly the perturbed diff.
//! Kept alone in its binary because it sets a process-wide variable.

use lieclass::classifier::fixtures::{fixture_ids, load_fixture, reproduce_tables, FIXTURE_ENV};
use serde_json::{json, Value};

#[test]
fn perturbed_fixture_yields_one_line_diff() {
    let dir = tempfile::tempdir().unwrap();
    for id in fixture_ids() {
        let mut v: Value = serde_json::to_value(load_fixture(id).unwrap()).unwrap();
        if id == "case1-simple" {
            let row = v["rows"]
                .as_array_mut()
                .unwrap()
                .iter_mut()
                .find(|r| r["g"] == json!(["A4"]) && r["h"] == json!(["B2"]))
                .unwrap();
            row["centralizer"] = json!("U(2)");
        }
        std::fs::write(
            dir.path().join(format!("{id}.json")),
            serde_json::to_string_pretty(&v).unwrap(),
        )
        .unwrap();
    }
    std::env::set_var(FIXTURE_ENV, dir.path());

    let diff = reproduce_tables("case1-simple").unwrap();
    assert!(diff.missing.is_empty() && diff.extra.is_empty(), "{diff:?}");
    assert_eq!(diff.changed.len(), 1, "{diff:?}");
    let change = &diff.changed[0];
    assert_eq!(change.field, "centralizer");
    assert_eq!(change.expected, json!("U(2)"));
    assert_eq!(change.actual, json!("U(1)"));
    for id in fixture_ids().into_iter().filter(|&id| id != "case1-simple") {
        assert!(reproduce_tables(id).unwrap().is_empty(), "{id}");
    }

    std::fs::remove_file(dir.path().join("spheres.json")).unwrap();
    assert!(reproduce_tables("spheres").is_err());
    std::env::remove_var(FIXTURE_ENV);
    assert!(reproduce_tables("spheres").unwrap().is_empty());
}
