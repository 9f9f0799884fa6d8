// SPDX-License-Identifier: Apache-2.0

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn netfrac(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_netfrac"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn generate_writes_edge_list() {
    let out = netfrac(&["generate", "path", "4"], b"");
    assert!(out.status.success());
    assert_eq!(out.stdout, b"0 1\n1 2\n2 3\n");

    let out = netfrac(&["generate", "grid", "2", "3"], b"");
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 7);
}

#[test]
fn generate_rejects_bad_parameters() {
    for args in [&["generate", "cycle", "2"][..], &["generate", "grid", "3"], &["generate", "torus", "3"]] {
        let out = netfrac(args, b"");
        assert_eq!(out.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn cover_emits_valid_partition() {
    let out = netfrac(&["cover", "-", "--l", "2", "--seed", "7"], b"a b\nb c\nc d\n");
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["l"], 2);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["labels"], serde_json::json!(["a", "b", "c", "d"]));
    let mut members: Vec<u64> = v["boxes"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|b| b.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()))
        .collect();
    members.sort_unstable();
    assert_eq!(members, [0, 1, 2, 3]);
}

#[test]
fn cover_rejects_zero_box_size() {
    let out = netfrac(&["cover", "-", "--l", "0"], b"1 2\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_pipeline_summary() {
    let grid = netfrac(&["generate", "grid", "3", "3"], b"").stdout;
    let out = netfrac(&["analyze", "-", "--runs", "20"], &grid);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["n"], 9);
    assert_eq!(v["m"], 12);
    assert_eq!(v["diameter"], 4);
    assert_eq!(v["lmin"], 1);
    assert_eq!(v["lmax"], 5);
    assert_eq!(v["runs"], 20);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["entropy_scaling"], "log-log");
    assert_eq!(v["permutation_mode"], "independent");
    for key in ["d_i", "Q_i", "d_b", "Q_b"] {
        assert!(v[key].as_f64().unwrap().is_finite(), "{key}");
    }
    assert_eq!(v["box_fit"]["dimension"], v["d_b"]);
    assert_eq!(v["box_fit"]["sse_Q"], v["Q_b"]);
    assert_eq!(v["box_fit"]["runs"], 20);
    assert!(v["box_fit"]["points_used"].is_array());
    assert!(stderr(&out).contains("largest component: 9 of 9 nodes"));
}

#[test]
fn analyze_reduces_to_largest_component() {
    let out = netfrac(&["analyze", "-", "--runs", "5"], b"1 2\n2 3\n3 4\n4 5\n8 9\n");
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((v["original_n"].as_u64(), v["n"].as_u64()), (Some(7), Some(5)));
    assert_eq!((v["original_m"].as_u64(), v["m"].as_u64()), (Some(5), Some(4)));
}

#[test]
fn analyze_csv_output_and_series_file() {
    let dir = tempfile::tempdir().unwrap();
    let series = dir.path().join("series.csv");
    let path = netfrac(&["generate", "path", "10"], b"").stdout;
    let out = netfrac(
        &["analyze", "-", "--runs", "10", "--output-format", "csv", "--series", series.to_str().unwrap()],
        &path,
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = String::from_utf8(out.stdout).unwrap();
    assert_eq!(std::fs::read_to_string(&series).unwrap(), csv);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("l,mean_Nb,std_Nb,mean_I,std_I"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 10);
    assert!(rows[0].starts_with("1,10,0,"));
    assert_eq!(rows[9], "10,1,0,0,0");
}

#[test]
fn analyze_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("summary.json");
    let out = netfrac(
        &["analyze", "-", "--runs", "4", "-o", target.to_str().unwrap(), "--entropy-scaling", "semi-log"],
        b"0 1\n1 2\n2 3\n3 0\n3 4\n",
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(target).unwrap()).unwrap();
    assert_eq!(v["entropy_scaling"], "semi-log");
}

#[test]
fn degenerate_series_exits_with_two() {
    let k5 = netfrac(&["generate", "complete", "5"], b"").stdout;
    let out = netfrac(&["analyze", "-", "--runs", "10"], &k5);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("degenerate scaling series"), "{}", stderr(&out));
}

#[test]
fn input_errors_exit_with_one() {
    let out = netfrac(&["analyze", "/nonexistent/graph.txt"], b"");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cannot read"));

    let out = netfrac(&["analyze", "-", "--runs", "3"], b"1 2\nlonely\n");
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let out = netfrac(&["analyze", "-", "--format", "gml"], b"graph [ node [ ] ]");
    assert_eq!(out.status.code(), Some(1));

    let out = netfrac(&["analyze", "-", "--runs", "0"], b"1 2\n");
    assert_eq!(out.status.code(), Some(1));

    let out = netfrac(&["analyze"], b"");
    assert_eq!(out.status.code(), Some(1));

    let out = netfrac(&["analyze", "-", "--lmin", "9"], b"1 2\n");
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pajek_from_stdin_with_explicit_format() {
    let net = b"*Vertices 3\n1 \"x\"\n2 \"y\"\n3 \"z\"\n*Edges\n1 2\n2 3\n";
    let out = netfrac(&["cover", "-", "--format", "pajek", "--l", "3"], net);
    assert!(out.status.success(), "{}", stderr(&out));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["boxes"], serde_json::json!([[0, 1, 2]]));
    assert_eq!(v["labels"], serde_json::json!(["x", "y", "z"]));
}
