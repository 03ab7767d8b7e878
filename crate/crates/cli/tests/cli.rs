use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3toric")).args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn path(f: &tempfile::NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn picard_of_the_third_polytope() {
    let d = run_json(&["k3", "picard", data("delta3.json").to_str().unwrap()]);
    assert_eq!(d["gram"], json!([[-2, 2], [2, 0]]));
    assert_eq!(d["rho"], 2);
    assert_eq!(d["rho_dual"], 18);
    assert_eq!(d["rank_l0"], 0);
    assert_eq!(d["recognition"]["name"], "<-2>+<2>");
    assert_eq!(d["recognition"]["level"], "verified-isometric");
    assert_eq!(d["basis"], json!(["D4", "D5"]));
    let selfs: Vec<i64> =
        d["nodes"].as_array().unwrap().iter().map(|n| n["self_intersection"].as_i64().unwrap()).collect();
    assert_eq!(selfs.len(), 5);
}

#[test]
fn picard_of_an_unlabeled_polytope() {
    // Δ3 with a unimodular change of coordinates (x, y, z) -> (x + y, y, z).
    let f = temp_file(r#"{"vertices": [[-2,-1,1], [0,1,-1], [0,-1,-1], [4,-1,-1], [4,5,-1]]}"#);
    let d = run_json(&["k3", "picard", path(&f)]);
    assert_eq!(d["reference"], Value::Null);
    assert_eq!(d["rho"], 2);
    assert_eq!(d["recognition"]["name"], "<-2>+<2>");
}

#[test]
fn invariants_of_b_b() {
    let d = run_json(&["lattice", "invariants", data("B_B.json").to_str().unwrap()]);
    assert_eq!(d["determinant"], -4);
    assert_eq!(d["signature"], json!([1, 17]));
    assert_eq!(d["rank"], 18);
    assert_eq!(d["disc_group"], json!([2, 2]));
}

#[test]
fn recognize_a_b2() {
    let d = run_json(&["lattice", "recognize", data("A_B2.json").to_str().unwrap()]);
    assert_eq!(d["name"], "U+A5");
}

/// Square pyramid with base `(±1, ±1, -1)` and apex `(0, 0, 2)`. The base
/// facet `z >= -1` gives the dual vertex `(0, 0, 1)`; the side facet
/// `3x + z <= 2` gives `(-3/2, 0, -1/2)`, and symmetrically for the others.
#[test]
fn dual_of_a_square_pyramid_is_flagged_non_integral() {
    let f = temp_file(r#"{"vertices": [[1,1,-1], [1,-1,-1], [-1,1,-1], [-1,-1,-1], [0,0,2]]}"#);
    let d = run_json(&["polytope", "dual", path(&f)]);
    assert_eq!(d["integral"], false);
    let mut expect = vec![
        json!(["-3/2", "0", "-1/2"]),
        json!(["0", "-3/2", "-1/2"]),
        json!(["0", "3/2", "-1/2"]),
        json!(["3/2", "0", "-1/2"]),
    ];
    let mut got = d["non_integral_vertices"].as_array().unwrap().clone();
    got.sort_by_key(|v| v.to_string());
    expect.sort_by_key(|v| v.to_string());
    assert_eq!(got, expect);
    assert!(d["vertices"].as_array().unwrap().contains(&json!([0, 0, 1])));

    let r = run_json(&["polytope", "reflexive", path(&f)]);
    assert_eq!(r["reflexive"], false);
}

#[test]
fn reference_polytopes_are_reflexive() {
    for n in ["delta1", "delta2", "delta3"] {
        let d = run_json(&["polytope", "reflexive", data(&format!("{n}.json")).to_str().unwrap()]);
        assert_eq!(d["reflexive"], true, "{n}");
    }
    let d = run_json(&["polytope", "dual", data("delta1.json").to_str().unwrap()]);
    assert_eq!(d["vertices"], json!([[-1, -1, -3], [0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 2, 2]]));
}

#[test]
fn lattice_points_of_the_dual() {
    let d = run_json(&["polytope", "points", data("delta3_dual.json").to_str().unwrap()]);
    assert_eq!(d["interior_count"], 1);
    assert_eq!(d["interior"], json!([[0, 0, 0]]));
}

#[test]
fn duality_of_polytope_pairs() {
    let d =
        run_json(&["k3", "duality", data("delta3.json").to_str().unwrap(), data("delta3_dual.json").to_str().unwrap()]);
    assert_eq!(d["all_pass"], true);
    let d =
        run_json(&["k3", "duality", data("delta1.json").to_str().unwrap(), data("delta1_dual.json").to_str().unwrap()]);
    assert_eq!(d["failed_stage"], "rank");
    assert_eq!(d["rank_s"], 4);
    assert_eq!(d["rank_t_prime"], 19);
    let d = run_json(&["lattice", "duality", data("A_B3.json").to_str().unwrap(), data("B_B.json").to_str().unwrap()]);
    assert_eq!(d["all_pass"], true);
}

#[test]
fn classify_curves() {
    let d = run_json(&["curve", "classify", data("curve_3E6.json").to_str().unwrap()]);
    assert_eq!(d["configuration"], "3E6");
    let d = run_json(&["curve", "classify", data("curve_6A2.json").to_str().unwrap()]);
    assert_eq!(d["conic_cubic"], json!({"distinct_points": 6, "transversal": true}));
    let d = run_json(&["curve", "classify", data("curve_2A8.json").to_str().unwrap()]);
    assert_eq!(d["stated"][1]["error"], "point is not on the curve");
    assert_eq!(d["configuration"], "A2+A8");
}

#[test]
fn curve_without_points_uses_the_grid() {
    let f = temp_file(r#"{"f2": "Y*Z - X^2", "f3": "X^3 + Y^3 + Z^3"}"#);
    let d = run_json(&["curve", "classify", path(&f)]);
    assert_eq!(d["stated"], json!([]));
    assert_eq!(d["singular_points"][0]["point"], json!(["1", "0", "0"]));
    assert_eq!(d["singular_points"][0]["type"], "A1");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["k3", "picard", "delta2.json"],
        vec!["lattice", "invariants", "B_B.json"],
        vec!["curve", "classify", "curve_A2_E6_A8.json"],
    ] {
        let file = data(args[2]);
        let args = [args[0], args[1], file.to_str().unwrap()];
        let (a, b) = (run(&args), run(&args));
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}

#[test]
fn verify_paper_reports() {
    let text = run(&["verify-paper"]);
    let json = run(&["verify-paper", "--json"]);
    // Some reference values are inconsistent, so the run does not all pass.
    assert_eq!(text.status.code(), Some(1));
    assert_eq!(json.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    let total = v["summary"]["total"].as_u64().unwrap();
    assert!(total >= 40);
    assert_eq!(v["claims"].as_array().unwrap().len() as u64, total);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.contains("coverage: 24/24 operations"));
    assert!(stderr(&json).starts_with(&format!("claims: {total}")));
}

#[test]
fn bad_input_exits_with_2() {
    let missing = run(&["polytope", "dual", "/nonexistent/polytope.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(stderr(&missing).contains("cannot read"));

    let f = temp_file("{\"vertices\": [[1, 2, 3],\n [1, 2.5, 3]]}");
    let out = run(&["polytope", "points", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains(": 2:8: "), "{}", stderr(&out));

    let f = temp_file(r#"{"vertices": [[0,0,0], [1,0,0], [0,1,0], [1,1,0]]}"#);
    assert_eq!(run(&["polytope", "points", path(&f)]).status.code(), Some(2));

    let f = temp_file(r#"{"gram": [[2, 1], [0, 2]]}"#);
    let out = run(&["lattice", "invariants", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not symmetric"));

    let f = temp_file(r#"{"f2": "Y*Z - X^2", "f3": "X^3 + u*Y^3"}"#);
    let out = run(&["curve", "classify", path(&f)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown parameter 'u'"));

    assert_eq!(run(&["polytope", "hull"]).status.code(), Some(2));
    assert!(run(&["polytope", "dual"]).stdout.is_empty());
}

#[test]
fn computation_failures_exit_with_1() {
    // The origin is a vertex.
    let f = temp_file(r#"{"vertices": [[0,0,0], [1,0,0], [0,1,0], [0,0,1]]}"#);
    let out = run(&["polytope", "dual", path(&f)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("origin"));

    let f = temp_file(r#"{"vertices": [[1,1,-1], [1,-1,-1], [-1,1,-1], [-1,-1,-1], [0,0,2]]}"#);
    let out = run(&["k3", "picard", path(&f)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not reflexive"));

    let f = temp_file(r#"{"gram": [[1, 1], [1, 1]]}"#);
    assert_eq!(run(&["lattice", "recognize", path(&f)]).status.code(), Some(1));
}
