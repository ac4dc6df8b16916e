//! End-to-end runs of the `octo` binary.

use std::process::{Command, Output};

fn octo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn table_sources_are_byte_identical() {
    for format in ["text", "csv", "json"] {
        let runs: Vec<Output> = ["fano", "lattice", "index"]
            .iter()
            .map(|s| octo(&["table", "--source", s, "--format", format]))
            .collect();
        for out in &runs {
            assert!(out.status.success());
        }
        assert_eq!(runs[0].stdout, runs[1].stdout, "{format}");
        assert_eq!(runs[1].stdout, runs[2].stdout, "{format}");
    }
}

#[test]
fn table_json_has_the_expected_product() {
    let out = octo(&["table", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // Row e1, column e2 is slot [2][3].
    assert_eq!(v["table"][2][3], "e4");
    assert_eq!(v["table"][1][1], "-1");
    assert_eq!(v["basis"][0], "1");
}

#[test]
fn table_text_has_diagonal_minus_one() {
    let text = stdout(&octo(&["table", "--source", "fano"]));
    for line in text.lines().skip(3) {
        let cells: Vec<&str> = line.split('|').collect();
        let row = cells[0].trim();
        let entries: Vec<&str> = cells[1].split_whitespace().collect();
        let diag = entries[text.lines().skip(3).position(|l| l == line).unwrap() + 1];
        assert_eq!(diag, "-1", "diagonal of {row}");
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(octo(&["table", "--source", "bogus"]).status.code(), Some(2));
    assert_eq!(octo(&["--format", "yaml", "dual"]).status.code(), Some(2));
    assert_eq!(octo(&["no-such-command"]).status.code(), Some(2));
    let csv = octo(&["--format", "csv", "verify-algebra"]);
    assert_eq!(csv.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&csv.stderr).contains("csv"));
    assert_eq!(
        octo(&["verify-algebra", "--mutate-line", "7"]).status.code(),
        Some(2)
    );
    assert_eq!(
        octo(&["verify-algebra", "--trials", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_algebra_passes_and_detects_mutation() {
    let ok = octo(&["verify-algebra", "--trials", "25"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("result: pass"));

    let bad = octo(&["verify-algebra", "--trials", "25", "--mutate-line", "3"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("check alternative: FAIL"));
    assert!(text.contains("associator"), "counterexample is named");
}

#[test]
fn verify_algebra_json_report_shape() {
    let out = octo(&["verify-algebra", "--trials", "2", "--format", "json", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["command"], "verify-algebra");
    assert_eq!(v["parameters"]["seed"], "11");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "alternative",
            "norm-multiplicative",
            "quaternion-subalgebras",
            "inverse-round-trip"
        ]
    );
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert_eq!(v["counters"]["inverse_cases"], 100);
}

#[test]
fn search_orientations_reports_the_unique_class() {
    let out = octo(&["search-orientations", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counters"]["total"], 2_097_152);
    assert_eq!(v["counters"]["survivors"], 240);
    assert_eq!(v["counters"]["classes"], 1);
    assert_eq!(v["counters"]["class_size"], 240);
    assert_eq!(v["counters"]["canonical_mask"], 85_298);
    assert_eq!(v["counters"]["paley_mask"], 1_956_555);
}

#[test]
fn search_is_thread_count_independent() {
    let one = octo(&["search-orientations", "--format", "json", "--threads", "1"]);
    let four = octo(&["search-orientations", "--format", "json", "--threads", "4"]);
    let a: serde_json::Value = serde_json::from_str(&stdout(&one)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&four)).unwrap();
    assert_eq!(a["counters"], b["counters"]);
    assert_eq!(a["checks"], b["checks"]);
}

#[test]
fn search_oracle_sample_agrees() {
    let out = octo(&["search-orientations", "--oracle", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counters"]["sample_size"], 32_768);
    let oracle = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "oracle-agrees")
        .expect("oracle check present");
    assert_eq!(oracle["pass"], true);
}

#[test]
fn enumerate_triangulations_counts() {
    let out = octo(&["enumerate-triangulations", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["counters"]["labeled_count"], 120);
}

#[test]
fn dual_passes() {
    let out = octo(&["dual"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("check girth-six: pass"));
    assert!(text.contains("counter girth = 6"));
}

#[test]
fn draw_matches_the_golden_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("map.svg");
    let out = octo(&["draw", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/hexmap.svg"));

    let piped = octo(&["draw"]);
    assert_eq!(stdout(&piped), include_str!("golden/hexmap.svg"));

    let mirrored = octo(&["draw", "--mirror"]);
    assert_eq!(stdout(&mirrored), include_str!("golden/hexmap-mirror.svg"));
}

#[test]
fn draw_into_missing_directory_fails_with_io_error() {
    let out = octo(&["draw", "--out", "/nonexistent-dir/map.svg"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn version_flag_works() {
    let out = octo(&["--version"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(env!("CARGO_PKG_VERSION")));
}
