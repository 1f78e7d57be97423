//! Curated fixture tables and the regression diff against them.
//!
//! Fixtures are JSON files, one table per file, embedded at build time. The
//! `LIECLASS_FIXTURES` environment variable points to a directory that
//! replaces the embedded copies.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use super::{
    classify_case1, classify_case2, classify_spheres, classify_stiefel, coincidences, semisimple,
    CandidatePair, CaseKind,
};
use crate::dynkin_index::{
    pi3_cokernel, smith_invariants, summand_unitary_index, IntMatrix, TargetField,
};
use crate::error::{LieError, Result};
use crate::lie_data::SimpleType;
use crate::rep_theory::{dim_complex, dims_over, DominantWeight};

/// Environment variable overriding the fixture directory.
pub const FIXTURE_ENV: &str = "LIECLASS_FIXTURES";

const EMBEDDED: [(&str, &str); 8] = [
    (
        "case1-simple",
        include_str!("../../fixtures/case1-simple.json"),
    ),
    (
        "case2-simple",
        include_str!("../../fixtures/case2-simple.json"),
    ),
    ("spheres", include_str!("../../fixtures/spheres.json")),
    ("stiefel", include_str!("../../fixtures/stiefel.json")),
    ("semisimple", include_str!("../../fixtures/semisimple.json")),
    ("rep-tables", include_str!("../../fixtures/rep-tables.json")),
    (
        "pi3-annotations",
        include_str!("../../fixtures/pi3-annotations.json"),
    ),
    (
        "matrix-equivalences",
        include_str!("../../fixtures/matrix-equivalences.json"),
    ),
];

/// Ids of all known fixtures.
pub fn fixture_ids() -> Vec<&'static str> {
    EMBEDDED.iter().map(|(id, _)| *id).collect()
}

/// One fixture table.
#[derive(Debug, Clone, Deserialize, Serialize)]
pub struct Fixture {
    pub id: String,
    pub kind: String,
    pub description: String,
    #[serde(default)]
    pub case: Option<String>,
    #[serde(default)]
    pub max_rank: Option<u32>,
    #[serde(default)]
    pub coincidences: Vec<String>,
    pub rows: Vec<Map<String, Value>>,
}

/// Raw JSON text of fixture `id`, honoring the directory override.
pub fn fixture_text(id: &str) -> Result<String> {
    let embedded = EMBEDDED
        .iter()
        .find(|(name, _)| *name == id)
        .map(|(_, text)| *text);
    if let Some(dir) = std::env::var_os(FIXTURE_ENV) {
        let path = PathBuf::from(dir).join(format!("{id}.json"));
        return std::fs::read_to_string(&path)
            .map_err(|e| LieError::Fixture(format!("cannot read {}: {e}", path.display())));
    }
    embedded.map(str::to_string).ok_or_else(|| {
        LieError::Fixture(format!(
            "unknown fixture id '{id}' (known: {})",
            fixture_ids().join(", ")
        ))
    })
}

pub fn load_fixture(id: &str) -> Result<Fixture> {
    let text = fixture_text(id)?;
    serde_json::from_str(&text).map_err(|e| LieError::Fixture(format!("{id}: {e}")))
}

/// A field whose computed value differs from the fixture.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FieldChange {
    pub key: String,
    pub field: String,
    pub expected: Value,
    pub actual: Value,
}

/// Row-level difference between a fixture and the computed table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableDiff {
    pub id: String,
    pub compared: usize,
    pub missing: Vec<Value>,
    pub extra: Vec<Value>,
    pub changed: Vec<FieldChange>,
}

impl TableDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.changed.is_empty()
    }
}

/// Recomputes the table behind fixture `id` and diffs it against the fixture.
pub fn reproduce_tables(id: &str) -> Result<TableDiff> {
    let fixture = load_fixture(id)?;
    let mut diff = TableDiff {
        id: fixture.id.clone(),
        compared: fixture.rows.len(),
        missing: vec![],
        extra: vec![],
        changed: vec![],
    };
    match fixture.kind.as_str() {
        "classification" => diff_classification(&fixture, &mut diff)?,
        "representations" => {
            for row in &fixture.rows {
                diff_rep_row(row, &mut diff)?;
            }
        }
        "pi3" => {
            for row in &fixture.rows {
                diff_pi3_row(row, &mut diff)?;
            }
        }
        "equivalences" => {
            for row in &fixture.rows {
                diff_equivalence_row(row, &mut diff)?;
            }
        }
        other => {
            return Err(LieError::Fixture(format!(
                "{id}: unknown fixture kind '{other}'"
            )))
        }
    }
    Ok(diff)
}

const CLASSIFICATION_FIELDS: [&str; 4] = ["centralizer", "space", "series", "coincidence"];

fn computed_rows(fixture: &Fixture) -> Result<Vec<CandidatePair>> {
    let max_rank = fixture
        .max_rank
        .ok_or_else(|| LieError::Fixture(format!("{}: missing max_rank", fixture.id)))?;
    Ok(match fixture.case.as_deref() {
        Some("I") => classify_case1(max_rank),
        Some("II") => classify_case2(max_rank),
        Some("sphere") => classify_spheres(max_rank),
        Some("stiefel") => classify_stiefel(max_rank),
        Some("nonsplit") => semisimple::classify_semisimple(max_rank)
            .into_iter()
            .filter(|r| r.case != CaseKind::Split)
            .collect(),
        other => {
            return Err(LieError::Fixture(format!(
                "{}: unknown case {other:?}",
                fixture.id
            )))
        }
    })
}

/// Comparable projection of a computed row.
pub fn project_row(row: &CandidatePair) -> Value {
    json!({
        "g": row.g.labels(),
        "h": row.h.labels(),
        "residual": row.residual,
        "index": row.index,
        "centralizer": row.info.centralizer,
        "space": row.info.space,
        "series": row.info.series,
        "coincidence": row.coincidence,
    })
}

/// Key of a classification row. Per-factor indices of `H` are unordered
/// except for matrix-valued indices of semisimple rows.
fn row_key(row: &Value, ordered_index: bool) -> String {
    let mut index: Vec<u64> = row["index"]
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default();
    if !ordered_index {
        index.sort_unstable();
    }
    format!(
        "{}/{} residual={} index={:?}",
        row["g"], row["h"], row["residual"], index
    )
}

fn diff_classification(fixture: &Fixture, diff: &mut TableDiff) -> Result<()> {
    let rows = computed_rows(fixture)?;
    let ordered = fixture.case.as_deref() == Some("nonsplit");
    let mut actual: BTreeMap<String, Value> = BTreeMap::new();
    for row in &rows {
        let v = project_row(row);
        actual.insert(row_key(&v, ordered), v);
    }
    let mut expected: BTreeMap<String, Value> = BTreeMap::new();
    for row in &fixture.rows {
        let v = Value::Object(row.clone());
        expected.insert(row_key(&v, ordered), v);
    }
    for (key, exp) in &expected {
        match actual.get(key) {
            None => diff.missing.push(strip_annotations(exp)),
            Some(act) => {
                for field in CLASSIFICATION_FIELDS {
                    let e = exp.get(field).cloned().unwrap_or(Value::Null);
                    let a = act.get(field).cloned().unwrap_or(Value::Null);
                    if e != a {
                        diff.changed.push(FieldChange {
                            key: key.clone(),
                            field: field.to_string(),
                            expected: e,
                            actual: a,
                        });
                    }
                }
            }
        }
    }
    for (key, act) in &actual {
        if !expected.contains_key(key) {
            diff.extra.push(act.clone());
        }
    }
    let mut want = fixture.coincidences.clone();
    want.sort();
    let got = coincidences(&rows);
    if want != got {
        diff.changed.push(FieldChange {
            key: "table".into(),
            field: "coincidences".into(),
            expected: json!(want),
            actual: json!(got),
        });
    }
    Ok(())
}

fn strip_annotations(v: &Value) -> Value {
    let mut v = v.clone();
    if let Some(obj) = v.as_object_mut() {
        obj.remove("quote");
        obj.remove("note");
    }
    v
}

fn field<'a>(row: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    row.get(name)
        .ok_or_else(|| LieError::Fixture(format!("row is missing field '{name}'")))
}

fn str_field<'a>(row: &'a Map<String, Value>, name: &str) -> Result<&'a str> {
    field(row, name)?
        .as_str()
        .ok_or_else(|| LieError::Fixture(format!("field '{name}' is not a string")))
}

fn u32_list(v: &Value) -> Result<Vec<u32>> {
    v.as_array()
        .and_then(|a| a.iter().map(|x| x.as_u64().map(|n| n as u32)).collect())
        .ok_or_else(|| LieError::Fixture(format!("expected a list of integers, got {v}")))
}

fn compare(diff: &mut TableDiff, key: &str, name: &str, expected: &Value, actual: Value) {
    if *expected != actual {
        diff.changed.push(FieldChange {
            key: key.to_string(),
            field: name.to_string(),
            expected: expected.clone(),
            actual,
        });
    }
}

fn diff_rep_row(row: &Map<String, Value>, diff: &mut TableDiff) -> Result<()> {
    let ty: SimpleType = str_field(row, "type")?.parse()?;
    let coeffs = u32_list(field(row, "weight")?)?;
    let w = DominantWeight::new(ty, coeffs.clone())?;
    let key = format!("{ty} {coeffs:?}");
    let (dim_r, dim_h) = dims_over(&w);
    let computed = [("dim", dim_complex(&w)), ("dim_r", dim_r), ("dim_h", dim_h)];
    for (name, value) in computed {
        if let Some(expected) = row.get(name) {
            let actual: Value = serde_json::from_str(&value.to_string()).expect("integer literal");
            compare(diff, &key, name, expected, actual);
        }
    }
    Ok(())
}

fn target_field(s: &str) -> Result<TargetField> {
    match s {
        "C" => Ok(TargetField::Complex),
        "R" => Ok(TargetField::Real),
        "H" => Ok(TargetField::Quaternionic),
        other => Err(LieError::Fixture(format!("unknown target field '{other}'"))),
    }
}

/// `π3(H) -> π3(G)` for a fixture row, from its summands or its matrix.
pub fn pi3_row_matrix(row: &Map<String, Value>) -> Result<IntMatrix> {
    if let Some(m) = row.get("matrix") {
        let s = m
            .as_str()
            .ok_or_else(|| LieError::Fixture("matrix is not a string".into()))?;
        return IntMatrix::parse(s);
    }
    let target = target_field(str_field(row, "target")?)?;
    let h: SimpleType = str_field(row, "h")?.parse()?;
    let summands = field(row, "summands")?
        .as_array()
        .ok_or_else(|| LieError::Fixture("summands is not a list".into()))?;
    let mut total = 0u64;
    for s in summands {
        let obj = s
            .as_object()
            .ok_or_else(|| LieError::Fixture("summand is not an object".into()))?;
        let w = DominantWeight::new(h, u32_list(field(obj, "weight")?)?)?;
        let mult = field(obj, "mult")?.as_u64().unwrap_or(1);
        total += summand_unitary_index(&w, mult, target);
    }
    let unit = target.unitary_index();
    if !total.is_multiple_of(unit) {
        return Err(LieError::Fixture(format!(
            "index sum {total} not divisible by {unit}"
        )));
    }
    Ok(IntMatrix::from_i64(&[&[(total / unit) as i64]]))
}

fn diff_pi3_row(row: &Map<String, Value>, diff: &mut TableDiff) -> Result<()> {
    let m = pi3_row_matrix(row)?;
    let key = format!("{} [{}]", str_field(row, "g")?, m);
    compare(
        diff,
        &key,
        "pi3",
        field(row, "pi3")?,
        json!(pi3_cokernel(&m).to_string()),
    );
    Ok(())
}

fn diff_equivalence_row(row: &Map<String, Value>, diff: &mut TableDiff) -> Result<()> {
    let a = IntMatrix::parse(str_field(row, "matrix")?)?;
    let b = IntMatrix::parse(str_field(row, "normal_form")?)?;
    let key = format!("{a} ~ {b}");
    let inv = |m: &IntMatrix| {
        json!(smith_invariants(m)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>())
    };
    compare(diff, &key, "smith_invariants", &inv(&b), inv(&a));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(
            reproduce_tables("no-such-table"),
            Err(LieError::Fixture(_))
        ));
    }

    #[test]
    fn embedded_fixtures_parse() {
        for id in fixture_ids() {
            let f = load_fixture(id).unwrap();
            assert_eq!(f.id, id);
            assert!(!f.rows.is_empty());
            assert!(f
                .rows
                .iter()
                .all(|r| r.get("quote").is_some_and(Value::is_string)));
        }
    }
}
