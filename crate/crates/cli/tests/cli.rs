//! End-to-end runs of the binary: output shape and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_handlegraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn analyze_theta_json() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "theta.json",
        r#"{"vertices":[0,1],"edges":[[0,1],[0,1],[0,1]]}"#,
    );
    let o = run(&["analyze", &p, "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 2);
    assert_eq!(v["euler_characteristic"], -1);
    assert_eq!(v["aut_order"], 12);
    assert_eq!(v["automorphisms"].as_array().unwrap().len(), 12);
    assert_eq!(v["verdict"]["kernel_order"], 1);
    assert_eq!(v["verdict"]["holds"], true);
    assert_eq!(v["hopf_all_equal"], true);
}

#[test]
fn analyze_outside_hypotheses_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    // theta with two pendant leaves at vertex 0: nontrivial kernel, free edges
    let p = write(
        dir.path(),
        "leaves.json",
        r#"{"vertices":[0,1,2,3],"edges":[[0,1],[0,1],[0,1],[0,2],[0,3]]}"#,
    );
    let o = run(&["analyze", &p]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("homology kernel order: 2"), "{text}");
    assert!(text.contains("outside hypotheses"), "{text}");

    let p = write(
        dir.path(),
        "c3.json",
        r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2],[2,0]]}"#,
    );
    let o = run(&["analyze", &p, "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["kernel_order"], 3);
    assert_eq!(v["verdict"]["hypotheses_hold"], false);
}

#[test]
fn analyze_disconnected() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "two.json",
        r#"{"vertices":[0,1],"edges":[[0,0],[1,1]]}"#,
    );
    let o = run(&["analyze", &p, "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["connected"], false);
    assert!(v["genus"].is_null());
}

#[test]
fn analyze_bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(
        dir.path(),
        "bad.json",
        r#"{"vertices":[0,1],"edges":[[0,5]]}"#,
    );
    let o = run(&["analyze", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    let junk = write(dir.path(), "junk.json", "not json");
    assert_eq!(code(&run(&["analyze", &junk])), 2);
    assert_eq!(code(&run(&["analyze", "/no/such/file.json"])), 2);
}

#[test]
fn verify_proposition_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&[
        "verify-proposition",
        "--max-vertices",
        "3",
        "--max-edges",
        "4",
        "--min-genus",
        "2",
        "--max-genus",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["proposition_violations"].as_array().unwrap().len(), 0);
    assert_eq!(v["graphs_checked"], 9);
}

#[test]
fn verify_proposition_rejects_bounds() {
    assert_eq!(
        code(&run(&["verify-proposition", "--max-vertices", "99"])),
        2
    );
    assert_eq!(
        code(&run(&[
            "verify-proposition",
            "--min-genus",
            "5",
            "--max-genus",
            "2"
        ])),
        2
    );
    assert_eq!(code(&run(&["verify-proposition", "--max-edges", "x"])), 2);
}

#[test]
fn gl2_flags() {
    let o = run(&["gl2", "--entry-bound", "1", "--cap", "100", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entry_bound"], 1);
    assert_eq!(v["maximal_types"], serde_json::json!(["D6", "D4"]));
    assert!(v["finite_subgroup_orders"].is_array());
    assert!(v["infinite_pairs"].as_u64().unwrap() > 0);
    assert_eq!(code(&run(&["gl2", "--entry-bound", "0"])), 2);
    assert_eq!(code(&run(&["gl2", "--entry-bound", "4"])), 2);
    assert_eq!(code(&run(&["gl2", "--cap", "10"])), 2);
    assert_eq!(code(&run(&["gl2", "--cap", "20000"])), 2);
}

#[test]
fn theorem1_names_and_tables() {
    let o = run(&["theorem1", "--genus", "3", "--group", "A5"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(
        text.contains("Icosahedral") && text.contains("Contradiction"),
        "{text}"
    );

    let o = run(&["theorem1", "--genus", "4", "--group", "Z6", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "Cyclic(6)");
    assert_eq!(v["verdict"], "Consistent-Cyclic");

    let o = run(&["theorem1", "--genus", "1", "--group", "D8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "Dihedral(8)");
    assert_eq!(v["verdict"], "OutsideHypotheses");

    let o = run(&["theorem1", "--genus", "2", "--group", "Q8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("NotSO3"));

    let dir = tempfile::tempdir().unwrap();
    // Z2 x Z2 as a bare table, Z3 wrapped
    let k4 = write(
        dir.path(),
        "k4.json",
        "[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]",
    );
    let o = run(&["classify-group", "--group", &k4, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "Dihedral(4)");
    let z3 = write(
        dir.path(),
        "z3.json",
        r#"{"table":[[0,1,2],[1,2,0],[2,0,1]]}"#,
    );
    let o = run(&["theorem1", "--genus", "2", "--group", &z3]);
    assert!(stdout(&o).contains("Consistent-Cyclic"));

    let broken = write(dir.path(), "broken.json", "[[0,1],[0,1]]");
    assert_eq!(
        code(&run(&["theorem1", "--genus", "2", "--group", &broken])),
        2
    );
    assert_eq!(code(&run(&["classify-group", "--group", "D7"])), 2);
}

#[test]
fn enumerate_lists_classes() {
    let o = run(&[
        "enumerate",
        "--max-vertices",
        "2",
        "--max-edges",
        "3",
        "--min-genus",
        "2",
        "--max-genus",
        "2",
        "--json",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let sigs: Vec<&str> = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["signature"].as_str().unwrap())
        .collect();
    assert_eq!(
        sigs,
        [
            "1:0-0,0-0",
            "2:0-0,0-1,0-1",
            "2:0-0,0-1,1-1",
            "2:0-1,0-1,0-1"
        ]
    );
}
