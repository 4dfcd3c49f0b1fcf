use std::path::Path;
use std::process::{Command, Output};

use holotriple::Scalar;
use holotriple_cli::records::{CurvatureRecord, HolonomyRecord, RicciRecord, TableRecord, VerifyRecord};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holotriple")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// No floating-point numbers anywhere in a report.
fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_u64() || n.is_i64(), "non-integer number {n}"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

/// Parses a JSON report into its record type and checks it serializes back to the same document.
fn roundtrip<T: DeserializeOwned + Serialize + PartialEq + std::fmt::Debug>(o: &Output) -> T {
    let text = stdout(o);
    let value: Value = serde_json::from_str(&text).expect("valid JSON");
    assert_no_floats(&value);
    let rec: T = serde_json::from_value(value.clone()).expect("record shape");
    assert_eq!(serde_json::to_value(&rec).unwrap(), value);
    let again: T = serde_json::from_str(&serde_json::to_string(&rec).unwrap()).unwrap();
    assert_eq!(again, rec);
    rec
}

fn scalar(s: &str) -> Scalar {
    s.parse().unwrap()
}

#[test]
fn verify_symplectic_passes() {
    let o = run(&["verify", "--family", "symplectic", "--n", "2"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert!(stdout(&o).contains("result   PASS"));
}

#[test]
fn verify_json_record() {
    let o = run(&["verify", "--family", "orthogonal", "--w", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let rec: VerifyRecord = roundtrip(&o);
    assert!(rec.passed && rec.simple && rec.jacobi.checked);
    assert_eq!(rec.dim, 6);
}

#[test]
fn out_of_range_parameter_is_a_usage_error() {
    let o = run(&["verify", "--family", "orthogonal", "--w", "2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("w >= 3"));
}

#[test]
fn missing_parameter_is_a_usage_error() {
    assert_eq!(code(&run(&["verify", "--family", "symplectic"])), 2);
    assert_eq!(code(&run(&["verify", "--family", "exceptional", "--J", "sedenion"])), 2);
    assert_eq!(code(&run(&["verify", "--family", "file"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn perturbed_file_fails_with_a_witness() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.sts.json");
    let o = run(&["verify", "--family", "symplectic", "--n", "2", "--save", good.to_str().unwrap()]);
    assert_eq!(code(&o), 0);

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&good).unwrap()).unwrap();
    doc["triple"][0][4] = Value::String("7".into());
    let broken = dir.path().join("broken.sts.json");
    std::fs::write(&broken, serde_json::to_string(&doc).unwrap()).unwrap();

    let o = run(&["verify", "--family", "file", "--path", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("fails at ("), "{}", stdout(&o));

    // Downstream commands refuse the file too.
    let o = run(&["holonomy", "--family", "file", "--path", broken.to_str().unwrap(), "--connection", "canonical"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("fails at ("));
}

#[test]
fn malformed_file_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\"dim\": 2,").unwrap();
    let o = run(&["verify", "--family", "file", "--path", p.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 1"));
}

#[test]
fn literal_cross_product_fails_verification() {
    let o = run(&["verify", "--family", "exceptional", "--J", "f4", "--cross", "literal"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn holonomy_g2_distinguished() {
    let o = run(&["holonomy", "--family", "exceptional", "--J", "scalar", "--connection", "distinguished"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("dim hol     6 (expected 6)"), "{out}");
    assert!(out.contains("result      PASS"));
}

#[test]
fn holonomy_special_canonical_json() {
    let o = run(&["holonomy", "--family", "special", "--w", "1", "--connection", "canonical", "--json"]);
    assert_eq!(code(&o), 0);
    let rec: HolonomyRecord = roundtrip(&o);
    assert_eq!((rec.dim, rec.center), (4, 1));
    assert!(rec.identity.unwrap().equal);
}

#[test]
fn heavy_cases_are_refused() {
    let o = run(&["holonomy", "--family", "exceptional", "--J", "octonion", "--connection", "canonical"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("--allow-heavy"));
    assert_eq!(code(&run(&["table", "--case", "e7"])), 3);
}

#[test]
fn ricci_reports() {
    let o = run(&["ricci", "--family", "symplectic", "--n", "1", "--connection", "levi-civita", "--json"]);
    assert_eq!(code(&o), 0);
    let rec: RicciRecord = roundtrip(&o);
    assert_eq!(rec.vertical_constant.as_deref(), Some("6"));
    assert_eq!(rec.horizontal_constant.as_deref(), Some("6"));
    assert_eq!(rec.scalar_curvature, "42");

    let o = run(&["ricci", "--family", "symplectic", "--n", "1", "--connection", "canonical", "--json"]);
    assert_eq!(code(&o), 0);
    let rec: RicciRecord = roundtrip(&o);
    assert_eq!(rec.vertical_constant.as_deref(), Some("-16"));
    assert_eq!(rec.scalar_curvature, "-48");
}

#[test]
fn family_connection_flags() {
    let o = run(&[
        "ricci", "--family", "symplectic", "--n", "1", "--connection", "family", "--a", "2", "--b-matrix",
        "1,0,0;0,1,0;0,0,1", "--json",
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rec: RicciRecord = roundtrip(&o);
    // (2, I) is the distinguished connection.
    assert_eq!(rec.scalar_curvature, "0");
    assert!(rec.expected.is_none());

    let bad = run(&["ricci", "--family", "symplectic", "--n", "1", "--connection", "family", "--b-matrix", "1,0;0,1"]);
    assert_eq!(code(&bad), 2);
    let stray = run(&["ricci", "--family", "symplectic", "--n", "1", "--connection", "canonical", "--a", "1"]);
    assert_eq!(code(&stray), 2);
}

#[test]
fn curvature_operator() {
    let o = run(&[
        "curvature", "--family", "symplectic", "--n", "1", "--connection", "canonical", "--i", "0", "--j", "1", "--json",
    ]);
    assert_eq!(code(&o), 0);
    let rec: CurvatureRecord = roundtrip(&o);
    assert_eq!(rec.matrix.len(), 7);
    // R^c(ξ₁, ξ₂) = 2 ad[ξ₁, ξ₂] = 4 ad ξ₃, and ad ξ₃ (ξ₁) = −2ξ₂.
    assert_eq!(scalar(&rec.matrix[1][0]), Scalar::int(8));
    assert!(rec.matrix.iter().flatten().all(|x| x.parse::<Scalar>().is_ok()));

    let o = run(&["curvature", "--family", "symplectic", "--n", "1", "--connection", "canonical", "--i", "0", "--j", "7"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn table_selected_cases() {
    let o = run(&["table", "--case", "g2", "--case", "special(w=1)", "--json"]);
    assert_eq!(code(&o), 0);
    let rec: TableRecord = roundtrip(&o);
    assert!(rec.passed);
    let g2 = &rec.rows[0];
    assert_eq!(
        (g2.hol_levi_civita.computed, g2.hol_distinguished.computed, g2.hol_canonical.computed),
        (55, 6, 6)
    );
    assert_eq!(code(&run(&["table", "--case", "klein(n=1)"])), 2);
}

#[test]
fn table_all_light() {
    let o = run(&["table", "--all-light"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("exceptional(J=H3(unarion))"));
    assert!(!out.contains("FAIL"));
}

fn holonomy_json(args: &[&str]) -> HolonomyRecord {
    let o = run(args);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    roundtrip(&o)
}

fn saved(dir: &Path, name: &str, family: &[&str]) -> String {
    let p = dir.join(name);
    let mut args = vec!["verify"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["--save", p.to_str().unwrap()]);
    assert_eq!(code(&run(&args)), 0);
    p.to_str().unwrap().to_string()
}

#[test]
fn file_cases_match_built_ones() {
    let dir = tempfile::tempdir().unwrap();
    for family in [&["--family", "special", "--w", "2"][..], &["--family", "exceptional", "--J", "g2"][..]] {
        let path = saved(dir.path(), "t.sts.json", family);
        for conn in ["levi-civita", "distinguished", "canonical"] {
            let mut built = vec!["holonomy"];
            built.extend_from_slice(family);
            built.extend_from_slice(&["--connection", conn, "--json"]);
            let from_file = ["holonomy", "--family", "file", "--path", &path, "--connection", conn, "--json"];
            assert_eq!(holonomy_json(&built), holonomy_json(&from_file));
        }
    }
}
