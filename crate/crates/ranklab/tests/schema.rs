//! The shipped schema files and the emitted documents must stay in sync: real
//! reports validate, and the validator actually rejects shape drift.

use ranklab::catalog::{run_suite, SuiteConfig};
use ranklab::extremal::{certify, CertMode, Family, Pencil};
use ranklab::gen::SeedPath;
use ranklab::matrix::Matrix;
use ranklab::report::{
    validate_against_schema, BoundsReport, CertRecord, CertificationReport, Meta,
};
use ranklab::scalar::{ExactScalar, FieldSpec};

fn report_schema() -> serde_json::Value {
    serde_json::from_str(include_str!("../../../schema/report.schema.json")).unwrap()
}

fn certification_schema() -> serde_json::Value {
    serde_json::from_str(include_str!("../../../schema/certification.schema.json")).unwrap()
}

#[test]
fn catalog_reports_match_the_published_schema() {
    let cfg = SuiteConfig {
        entry_ids: Some(vec!["v31".into(), "hh21".into(), "w3".into()]),
        dims: (2, 3),
        trials: 2,
        seed: 11,
        field: None,
        k_values: vec![1, 2],
    };
    let report = run_suite(&cfg).unwrap();
    let doc = serde_json::to_value(&report).unwrap();
    validate_against_schema(&doc, &report_schema()).unwrap();
}

#[test]
fn certification_reports_match_the_published_schema() {
    let f = FieldSpec::RATIONAL;
    let a = Matrix::from_ints(&[&[1], &[0]], f);
    let b = Matrix::from_ints(&[&[0], &[1]], f);
    let pencil = Pencil::SumPP { a, b };
    let path = SeedPath::root(12);
    let cert = certify(&pencil, &ExactScalar::zero(f), 4, CertMode::Shared, &path);
    let record = CertRecord {
        family: Family::SumPP.name().to_string(),
        lambda: ExactScalar::zero(f).to_string(),
        dim: 2,
        instance: 0,
        bounds: BoundsReport { max: cert.bounds.max, min: cert.bounds.min },
        observed: BoundsReport { max: cert.observed.max, min: cert.observed.min },
        max_attained: cert.max_attained,
        min_attained: cert.min_attained,
        draws: cert.draws,
        seed_path: path.key(),
        violation: cert.violation.clone(),
    };
    let doc = serde_json::to_value(CertificationReport {
        meta: Meta {
            seed: 12,
            dims: [2, 2],
            trials: 4,
            field: "entry".into(),
            k_values: vec![],
        },
        records: vec![record],
        violations: 0,
        max_anomalies: 0,
    })
    .unwrap();
    validate_against_schema(&doc, &certification_schema()).unwrap();

    // The published key spelling, not the in-memory one.
    let rendered = doc["records"][0].as_object().unwrap();
    for key in ["maxAttained", "minAttained", "trials", "seed", "violation"] {
        assert!(rendered.contains_key(key), "record lost the published key {key}");
    }
}

#[test]
fn validator_rejects_shape_drift() {
    let schema = report_schema();
    let cfg = SuiteConfig {
        entry_ids: Some(vec!["hh21".into()]),
        dims: (2, 2),
        trials: 1,
        seed: 1,
        field: None,
        k_values: vec![1],
    };
    let good = serde_json::to_value(run_suite(&cfg).unwrap()).unwrap();
    validate_against_schema(&good, &schema).unwrap();

    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("meta");
    assert!(validate_against_schema(&missing, &schema).is_err(), "missing field accepted");

    let mut retyped = good.clone();
    retyped["meta"]["seed"] = serde_json::json!("not a number");
    assert!(validate_against_schema(&retyped, &schema).is_err(), "retyped field accepted");

    let mut extended = good;
    extended["sneaky"] = serde_json::json!(true);
    assert!(validate_against_schema(&extended, &schema).is_err(), "extra field accepted");
}
