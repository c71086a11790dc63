use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negacyclic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

#[test]
fn factor_fifteen_nega() {
    let out = run(&["factor", "--n", "15", "--ring", "nega"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "x+1\nx^2-x+1\nx^4+x^3+2x^2+1\nx^4+2x^2+x+1\nx^4-x^3+x^2-x+1\n"
    );
}

#[test]
fn factor_fifteen_lifts() {
    let v = json(&["factor", "--n", "15", "--json"]);
    assert_eq!(v["schema"], 1);
    let z4: Vec<&str> = v["z4"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    for lift in [
        "x^4-x^3+2x^2+1",
        "x^4+2x^2-x+1",
        "x^4+x^3+x^2+x+1",
        "x^2+x+1",
        "x-1",
    ] {
        assert!(z4.contains(&lift), "{lift}");
    }
    assert_eq!(v["f2"].as_array().unwrap().len(), 5);
}

#[test]
fn factor_rejects_even_length() {
    let out = run(&["factor", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["p2"]).status.code(), Some(1));
    assert_eq!(run(&["p2", "list"]).status.code(), Some(1));
    assert_eq!(
        run(&["odd", "rank", "--n", "7", "--g", "x^^2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn list_length_two() {
    let v = json(&["p2", "list", "--n", "2", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["count"], 23);
    assert_eq!(v["codes"][2]["generators"], "<u>");
    assert_eq!(v["codes"][2]["self_dual"], true);
}

#[test]
fn list_csv_columns() {
    let out = stdout(&run(&["p2", "list", "--n", "2", "--csv"]));
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "index,generators,type,s,t,m,m1,l,h,size,annihilator-index,self-orthogonal,self-dual"
    );
    assert_eq!(lines.count(), 23);
}

#[test]
fn verify_exit_status_and_report() {
    let out = run(&["p2", "verify", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["distinct"], 23);
    assert_eq!(v["self_dual_count"], 7);
    assert_eq!(v["checks"]["cardinality"]["fail"], 0);
    assert_eq!(v["checks"]["annihilator-formula"]["fail"], 0);
    for d in v["discrepancies"].as_array().unwrap() {
        assert!(!d["explanation"].as_str().unwrap().is_empty(), "{d}");
    }
}

#[test]
fn verify_writes_file() {
    let dir = std::env::temp_dir().join(format!("negacyclic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["p2", "verify", "--n", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("discrepancies:"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["p2", "verify", "--n", "4"][..],
        &["p2", "table", "--n", "2"][..],
        &["factor", "--n", "21", "--json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn table_length_two() {
    let v = json(&["p2", "table", "--n", "2", "--json"]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 24);
    assert_eq!(rows[3]["generators"], "<u*(x+1)>");
    assert_eq!(rows[3]["annihilator"], "C21");
    assert_eq!(rows[3]["printed"]["annihilator"], "C22");
    assert_eq!(rows[7]["mark"], "*");
}

#[test]
fn dual_by_descriptor_index_and_generators() {
    let a = json(&["p2", "dual", "--n", "2", "--code", "T1,m=0", "--json"]);
    assert_eq!(a["oracle_dual_index"], 3);
    assert_eq!(a["agrees"], true);
    let b = json(&["p2", "dual", "--n", "2", "--code", "C3", "--json"]);
    assert_eq!(a, b);
    let c = json(&["p2", "dual", "--n", "2", "--code", "u", "--json"]);
    assert_eq!(c["index"], 3);
    assert_eq!(
        run(&["p2", "dual", "--n", "2", "--code", "T2_0,s=5"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn sizes() {
    let v = json(&["p2", "size", "--n", "4", "--json"]);
    let codes = v["codes"].as_array().unwrap();
    assert_eq!(codes.len(), 135);
    assert!(codes.iter().all(|c| c["agrees"] == true));
}

#[test]
fn selfdual_length_two() {
    let out = stdout(&run(&["p2", "selfdual", "--n", "2"]));
    assert!(out.ends_with("self-dual: 7\nself-orthogonal: 15\n"));
}

#[test]
fn odd_commands() {
    let c = json(&["odd", "count", "--n", "15", "--json"]);
    assert_eq!(c["seven_to_m"], 16807);
    let r = json(&[
        "odd",
        "rank",
        "--n",
        "7",
        "--g",
        "x^3+2x^2+x+1",
        "--p",
        "x^2+x+1",
        "--a",
        "x+1",
        "--json",
    ]);
    assert_eq!(r["rank"], 6);
    assert_eq!(r["branch"], "regular-monic");
    assert_eq!(r["family"].as_array().unwrap().len(), 6);
    let f = json(&[
        "odd",
        "free",
        "--n",
        "15",
        "--gen",
        "x^4+2x^2+x+1",
        "--json",
    ]);
    assert_eq!(f["free"], true);
    assert_eq!(f["free_rank"], 11);
    let f = json(&[
        "odd",
        "free",
        "--n",
        "7",
        "--gen",
        "u*x^3+2x^2+u*x+u",
        "--json",
    ]);
    assert_eq!(f["free"], false);
    assert_eq!(f["residue_is_free"], false);
}
