//! Serializable reports shared by the library, the test suites, and the CLI.
//!
//! Serialization is struct-order `serde_json`, so identical runs produce
//! byte-identical documents — the determinism contract leans on that. The
//! shipped schema files under `schema/` describe the same shapes;
//! [`validate_against_schema`] interprets them so emitted documents can be
//! checked against the published contract rather than against the code that
//! produced them.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Configuration echo plus per-entry tallies for one catalog run.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub meta: Meta,
    pub entries: Vec<EntryReport>,
}

impl Report {
    pub fn total_failures(&self) -> usize {
        self.entries.iter().map(|e| e.fails).sum()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Meta {
    pub seed: u64,
    pub dims: [usize; 2],
    pub trials: usize,
    /// "entry" when each entry runs over its own required field, otherwise the
    /// forced radicand rendered as a number.
    pub field: String,
    pub k_values: Vec<u32>,
}

/// Tallies for one catalog entry; `passes + fails + misses = dims x trials`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryReport {
    pub id: String,
    pub passes: usize,
    pub fails: usize,
    pub misses: usize,
    pub failures: Vec<FailureReport>,
}

/// A complete replayable counterexample: the exact inputs, parameters, and both
/// evaluated sides.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FailureReport {
    pub dim: usize,
    pub trial: usize,
    pub k: u32,
    pub scalars: Vec<String>,
    pub seed_path: u64,
    pub inputs: serde_json::Value,
    pub lhs: String,
    pub rhs: String,
    pub note: String,
}

/// One certified extremal-rank record: closed-form bounds against sampled draws.
///
/// Field names follow the published certification interface
/// (`maxAttained`/`minAttained`/`trials`/`seed`).
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertRecord {
    pub family: String,
    pub lambda: String,
    pub dim: usize,
    pub instance: usize,
    pub bounds: BoundsReport,
    pub observed: BoundsReport,
    #[serde(rename = "maxAttained")]
    pub max_attained: bool,
    #[serde(rename = "minAttained")]
    pub min_attained: bool,
    #[serde(rename = "trials")]
    pub draws: usize,
    #[serde(rename = "seed")]
    pub seed_path: u64,
    /// Set when a sampled rank escapes the closed-form interval — never expected.
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
pub struct BoundsReport {
    pub max: usize,
    pub min: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CertificationReport {
    pub meta: Meta,
    pub records: Vec<CertRecord>,
    pub violations: usize,
    /// Instances whose sampled maximum never reached the closed-form maximum.
    pub max_anomalies: usize,
}

/// Audit-mode output: one note per annotated catalog entry, with the as-printed
/// reading's empirical verdict where it is machine-evaluable.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AuditReport {
    pub seed: u64,
    pub notes: Vec<AuditNote>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AuditNote {
    pub id: String,
    pub annotation: String,
    /// "fails (n/t)", "passes (t/t)", or "not machine-evaluable".
    pub literal_verdict: String,
    /// Outcome of the corrected reading on the same instances.
    pub corrected_verdict: String,
}

/// Checks a document against a schema, supporting the subset of JSON Schema
/// the shipped files use: `type` (single name or list), `enum`,
/// `properties`/`required`/`additionalProperties: false`, `items`, and
/// `minItems`/`maxItems`. Empty or non-object schemas accept anything.
pub fn validate_against_schema(value: &Value, schema: &Value) -> Result<(), String> {
    validate_at(value, schema, "$")
}

fn json_type(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) if n.is_i64() || n.is_u64() => "integer",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn type_matches(v: &Value, name: &str) -> bool {
    // Every integer is also a number.
    json_type(v) == name || (name == "number" && v.is_number())
}

fn validate_at(value: &Value, schema: &Value, path: &str) -> Result<(), String> {
    let Some(schema) = schema.as_object() else {
        return Ok(());
    };
    if let Some(t) = schema.get("type") {
        let ok = match t {
            Value::String(name) => type_matches(value, name),
            Value::Array(names) => names
                .iter()
                .any(|n| n.as_str().is_some_and(|n| type_matches(value, n))),
            _ => true,
        };
        if !ok {
            return Err(format!("{path}: expected {t}, found {}", json_type(value)));
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: value outside the allowed constants"));
        }
    }
    if let Some(map) = value.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        if let Some(props) = props {
            for (key, sub) in props {
                if let Some(v) = map.get(key) {
                    validate_at(v, sub, &format!("{path}.{key}"))?;
                }
            }
            if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                if let Some(extra) = map.keys().find(|k| !props.contains_key(*k)) {
                    return Err(format!("{path}.{extra}: field not in the schema"));
                }
            }
        }
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required.iter().filter_map(Value::as_str) {
                if !map.contains_key(key) {
                    return Err(format!("{path}.{key}: required field missing"));
                }
            }
        }
    }
    if let Some(items) = value.as_array() {
        if let Some(item_schema) = schema.get("items") {
            for (i, v) in items.iter().enumerate() {
                validate_at(v, item_schema, &format!("{path}[{i}]"))?;
            }
        }
        if let Some(lo) = schema.get("minItems").and_then(Value::as_u64) {
            if (items.len() as u64) < lo {
                return Err(format!("{path}: fewer than {lo} items"));
            }
        }
        if let Some(hi) = schema.get("maxItems").and_then(Value::as_u64) {
            if (items.len() as u64) > hi {
                return Err(format!("{path}: more than {hi} items"));
            }
        }
    }
    Ok(())
}
