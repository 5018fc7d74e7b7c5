use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn totecc(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_totecc"))
        .args(args)
        .arg("--quiet")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn schema(command: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(format!("{command}.schema.json"));
    let s: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::draft202012::new(&s).expect("schema compiles")
}

fn json_run(args: &[&str], stdin: Option<&str>) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = totecc(&full, stdin);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", stdout(&o)));
    (v, o.status.code().unwrap())
}

const MATRIX: &[&[&str]] = &[
    &["eps", "-g", "D}K", "-g", "DFw"],
    &["eps", "-f", "dumbbell 3 3 7", "-f", "spider 9 3", "-f", "complete-with-paths 3 2 2"],
    &["family", "tadpole-l", "7", "3"],
    &["family", "complete-with-paths", "3", "2", "2"],
    &["rewrite", "-g", "Ghe?GC", "-k", "shrink-girth", "--list"],
    &["rewrite", "-g", "Ghe?GC", "-k", "shrink-girth", "--all"],
    &["rewrite", "-g", "Ds_", "-k", "add-edge", "-s", "1,2"],
    &["enumerate", "-n", "5", "-c", "unicyclic"],
    &["enumerate", "-n", "1..7", "--count", "-c", "tree"],
    &["search", "-n", "4..7", "-c", "pendant-count:2", "--objective", "min"],
    &["search", "-n", "3..6"],
    &["verify", "-t", "tree", "-n", "4..7"],
    &["verify", "-n", "6..7"],
    &["conjecture", "-n", "5..8"],
];

#[test]
fn json_output_matches_schemas() {
    for args in MATRIX {
        let (v, _) = json_run(args, None);
        let validator = schema(args[0]);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| format!("{e} at {}", e.instance_path)).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}");
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn schemas_reject_wrong_shapes() {
    let bad = serde_json::json!({"schema_version": 2, "command": "eps", "results": []});
    assert!(!schema("eps").is_valid(&bad));
    let bad = serde_json::json!({"schema_version": 1, "command": "eps", "results": [{"graph6": "D}K"}]});
    assert!(!schema("eps").is_valid(&bad));
}

#[test]
fn example_graph_invariants() {
    let (v, code) = json_run(&["eps", "-g", "D}K", "-g", "DFw"], None);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["eps"], 10);
    assert_eq!(v["results"][0]["wiener"], 13);
}

#[test]
fn family_pipes_into_eps() {
    let fam = totecc(&["family", "dumbbell", "3", "3", "7"], None);
    assert!(fam.status.success());
    let (v, code) = json_run(&["eps", "--stdin"], Some(&stdout(&fam)));
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["eps"], 24);
}

#[test]
fn closed_form_is_reported() {
    let (v, _) = json_run(&["eps", "-f", "tadpole-l 9 3"], None);
    let r = &v["results"][0];
    assert_eq!(r["formula"], "eps_unicyclic_max");
    assert_eq!(r["formula_value"], r["eps"]);
    assert_eq!(r["formula_agrees"], true);
}

#[test]
fn enumerated_graph6_round_trips() {
    let listing = stdout(&totecc(&["enumerate", "-n", "6"], None));
    let lines: Vec<&str> = listing.lines().collect();
    assert_eq!(lines.len(), 112);
    let (v, code) = json_run(&["eps", "--stdin"], Some(&listing));
    assert_eq!(code, 0);
    let back: Vec<&str> = v["results"].as_array().unwrap().iter().map(|r| r["graph6"].as_str().unwrap()).collect();
    assert_eq!(back, lines);
    for g in lines {
        let decoded = total_ecc::graph6::decode(g).unwrap();
        assert_eq!(total_ecc::graph6::encode(&decoded), g);
    }
}

#[test]
fn rewrite_output_round_trips() {
    let (v, code) = json_run(&["rewrite", "-g", "Ghe?GC", "-k", "shrink-girth", "--all"], None);
    assert_eq!(code, 0);
    let after = v["results"][0]["after"].as_str().unwrap();
    let g = total_ecc::graph6::decode(after).unwrap();
    assert_eq!(total_ecc::graph6::encode(&g), after);
    assert_eq!(v["results"][0]["eps_after"].as_u64().unwrap(), total_ecc::invariants::total_eccentricity(&g).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(totecc(&["verify", "-t", "tree", "-n", "4..7"], None).status.code(), Some(0));
    // the n = 5 pendant-free case has extra maximizers
    assert_eq!(totecc(&["verify", "-t", "pendant-max", "-n", "5"], None).status.code(), Some(1));
    // conjecture findings do not fail the run
    assert_eq!(totecc(&["conjecture", "-n", "8"], None).status.code(), Some(0));
    assert_eq!(totecc(&["eps", "-g", "!!"], None).status.code(), Some(2));
    assert_eq!(totecc(&["eps"], None).status.code(), Some(2));
    assert_eq!(totecc(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(totecc(&["verify", "-n", "10"], None).status.code(), Some(2));
    assert_eq!(totecc(&["enumerate", "-n", "10", "--count"], None).status.code(), Some(2));
    assert_eq!(totecc(&["rewrite", "-g", "Ds_", "-k", "graft"], None).status.code(), Some(2));
    assert_eq!(totecc(&["search", "-n", "5", "--workers", "0"], None).status.code(), Some(2));
}

#[test]
fn conjecture_findings_go_to_stderr() {
    let o = totecc(&["conjecture", "-n", "8"], None);
    let err = String::from_utf8_lossy(&o.stderr).into_owned();
    assert!(err.contains("refuted at n=8 s=2"), "{err}");
    assert!(stdout(&o).contains("conjecture-violated"));
}

#[test]
fn csv_has_header_and_rows() {
    let out = stdout(&totecc(&["enumerate", "-n", "1..5", "--count", "--format", "csv"], None));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,class,count");
    assert_eq!(lines[5], "5,all,21");
}

#[test]
fn output_file_and_workers() {
    let dir = std::env::temp_dir().join(format!("totecc-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let o = totecc(
        &["search", "-n", "6", "-c", "cut-count:2", "--workers", "2", "--format", "json", "-o", path.to_str().unwrap()],
        None,
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"][0]["value"], 19);
    std::fs::remove_dir_all(dir).unwrap();
}
