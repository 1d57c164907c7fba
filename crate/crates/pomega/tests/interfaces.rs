//! External-interface invariants: exchange-format round trips, report
//! serialisation and thread-count independence of the outputs.

use pomega::linalg::FpMatrix;
use pomega::pcomplex::{HomologyReport, PComplex};
use pomega::specht::h0_basis;
use pomega::subsets::{binomial, boundary_matrix};

#[test]
fn matrix_export_import_rebuilds_the_same_report() {
    let (n, p) = (6usize, 3u64);
    let exported: Vec<String> = (0..=n)
        .map(|k| serde_json::to_string(&boundary_matrix(n, k, p).unwrap()).unwrap())
        .collect();
    let diffs: Vec<FpMatrix> = exported
        .iter()
        .map(|s| {
            let m: FpMatrix = serde_json::from_str(s).unwrap();
            m.validate().unwrap();
            m
        })
        .collect();
    let dims = (0..=n).map(|k| binomial(n as i64, k as i64) as usize).collect();
    let rebuilt = PComplex::new(p, p as usize, dims, diffs).unwrap();
    assert_eq!(
        rebuilt.full_report().to_json(),
        PComplex::omega(n, p).unwrap().full_report().to_json()
    );
}

#[test]
fn corrupted_payloads_are_rejected() {
    let json = r#"{"p":5,"rows":2,"cols":2,"entries":[1,2,3]}"#;
    let m: FpMatrix = serde_json::from_str(json).unwrap();
    assert!(m.validate().is_err());
    let json = r#"{"p":4,"rows":1,"cols":1,"entries":[1]}"#;
    let m: FpMatrix = serde_json::from_str(json).unwrap();
    assert!(m.validate().is_err());
    let json = r#"{"p":5,"rows":1,"cols":2,"entries":[1,7]}"#;
    let m: FpMatrix = serde_json::from_str(json).unwrap();
    assert!(m.validate().is_err());
}

#[test]
fn report_json_is_thread_count_independent() {
    let compute = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| PComplex::omega(7, 3).unwrap().full_report().to_json())
    };
    let single = compute(1);
    let multi = compute(4);
    assert_eq!(single, multi);
    let parsed = HomologyReport::from_json(&single).unwrap();
    assert_eq!(parsed.to_json(), single);
}

#[test]
fn basis_export_schema() {
    let basis = h0_basis(5, 2, 3).unwrap();
    let json = basis.to_json();
    assert!(json.starts_with("{\"n\":5,\"k\":2,\"p\":3,\"tableaux\":"));
    assert!(json.contains("\"representatives\":{\"p\":3,"));
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(value["tableaux"][0][0], serde_json::json!([1, 3, 5]));
    assert_eq!(value["tableaux"][0][1], serde_json::json!([2, 4]));
}
