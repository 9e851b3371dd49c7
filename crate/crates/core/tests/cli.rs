use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use evolalg::cli::{parse_algebra, run, EXIT_INPUT, EXIT_OK, EXIT_UNDETERMINED};
use serde_json::Value;

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("evolalg").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = cli(args);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_json_and_text_agree() {
    let f = data("counterexample.json");
    let j = json(&["analyze", &f, "--json"]);
    assert_eq!(j["dimension"], 2);
    assert_eq!(j["degeneracy"]["state"], "yes");
    assert_eq!(j["degeneracy"]["witness"]["element"], serde_json::json!(["1", "1"]));
    assert_eq!(j["semiprime"]["state"], "no");
    assert_eq!(j["prime"]["state"], "no");
    assert_eq!(j["centroid"]["dim"], 1);
    assert_eq!(j["engine"]["undetermined"], false);

    let (code, text, _) = cli(&["analyze", &f]);
    assert_eq!(code, EXIT_OK);
    assert!(text.contains("degenerate: yes [support-kernel]; witness e1 + e2"));
    assert!(text.contains("semiprime: no [zero-square-ideal]; witness ideal span{e1 + e2}"));
    assert!(text.contains("centroid dimension: 1"));
}

#[test]
fn engines_agree_on_examples() {
    for name in [
        "counterexample.json",
        "degenerate4.json",
        "zero_square4.json",
        "loops2.json",
        "strata8.json",
    ] {
        let f = data(name);
        let lin = json(&["analyze", &f, "--json"]);
        let grb = json(&["analyze", &f, "--json", "--engine", "groebner"]);
        assert_eq!(lin["degeneracy"]["state"], grb["degeneracy"]["state"], "{name}");
        assert_eq!(lin["semiprime"], grb["semiprime"], "{name}");
    }
}

#[test]
fn graph_dot_counts() {
    for (name, nodes, edges) in [
        ("counterexample.json", 2, 4),
        ("strata8.json", 8, 12),
        ("loops2.json", 2, 2),
    ] {
        let (code, dot, _) = cli(&["graph", &data(name)]);
        assert_eq!(code, EXIT_OK);
        assert!(dot.starts_with("digraph E {\n") && dot.ends_with("}\n"));
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), edges, "{name}");
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with(';') && !l.contains("->"))
                .count(),
            nodes,
            "{name}"
        );
    }
}

#[test]
fn prime_ideals_listing() {
    let j = json(&["prime-ideals", &data("nonprime5.json"), "--json"]);
    assert_eq!(j["ideals"].as_array().unwrap().len(), 3);
    assert!(j["undetermined"].as_array().unwrap().is_empty());
}

#[test]
fn series_reports_strata() {
    let j = json(&["series", &data("strata8.json"), "--json"]);
    assert_eq!(j["asi"], 4);
    assert_eq!(j["strata"].as_array().unwrap().len(), 4);
    let (_, text, _) = cli(&["series", &data("strata8.json")]);
    assert!(text.contains("stratum 1: {e7, e8}"));
    assert!(text.contains("annihilator stabilizing index: 4"));
}

#[test]
fn centroid_and_decompose() {
    let j = json(&["centroid", &data("loops2.json"), "--json"]);
    assert_eq!(j["dim"], 2);
    let d = json(&["decompose", &data("loops2.json"), "--json"]);
    assert_eq!(d["summands"].as_array().unwrap().len(), 2);
    let (code, _, err) = cli(&["decompose", &data("strata8.json")]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("zero annihilator"));
}

#[test]
fn element_checks() {
    let f = data("counterexample.json");
    let j = json(&["element", &f, "--coords", "1,1", "--check", "azd", "--json"]);
    assert_eq!(j["holds"], true);
    let j = json(&["element", &f, "--coords", "1,0", "--check", "azd", "--json"]);
    assert_eq!(j["holds"], false);
    let j = json(&[
        "element",
        &data("loops2.json"),
        "--coords",
        "2,-1/3",
        "--check",
        "vn",
        "--json",
    ]);
    assert_eq!(j["holds"], true);
    assert_eq!(j["inverse"], serde_json::json!(["1/2", "-3"]));
    let (code, _, err) = cli(&["element", &f, "--coords", "1,2,3", "--check", "vn"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("dimension 2"));
    let (code, _, err) = cli(&["element", &f, "--coords", "1,x", "--check", "vn"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("entry 1"));
}

#[test]
fn random_is_seed_stable() {
    let args = ["random", "--dim", "5", "--density", "0.5", "--seed", "42"];
    let (code, a, _) = cli(&args);
    assert_eq!(code, EXIT_OK);
    let (_, b, _) = cli(&args);
    assert_eq!(a, b);
    let (_, c, _) = cli(&["random", "--dim", "5", "--density", "0.5", "--seed", "43"]);
    assert_ne!(a, c);
    assert_eq!(parse_algebra(&a).unwrap().algebra.dim(), 5);
    let (code, _, _) = cli(&["random", "--dim", "0", "--density", "0.5", "--seed", "1"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _, _) = cli(&["random", "--dim", "3", "--density", "1.5", "--seed", "1"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn bound_exceeded_exits_undetermined() {
    let f = data("counterexample.json");
    let (code, _, err) = cli(&["prime-ideals", &f, "--support-bound", "1"]);
    assert_eq!(code, EXIT_UNDETERMINED);
    assert!(err.contains("exceeds the configured bound"));
    let (code, out, _) = cli(&["analyze", &f, "--support-bound", "1", "--json"]);
    assert_eq!(code, EXIT_UNDETERMINED);
    let j: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(j["engine"]["undetermined"], true);
}

#[test]
fn input_errors() {
    let (code, _, err) = cli(&["analyze", "/nonexistent/algebra.json"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("/nonexistent/algebra.json"));
    let (code, _, _) = cli(&["frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, out, _) = cli(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
}

#[test]
fn binary_reads_stdin_and_reports_errors() {
    let bin = env!("CARGO_BIN_EXE_evolalg");
    let mut child = Command::new(bin)
        .args(["analyze", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"basis": ["a", "b"], "matrix": [[1, 0], [0, 1]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_OK));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["degeneracy"]["state"], "no");
    assert_eq!(j["von_neumann"], true);

    let mut child = Command::new(bin)
        .args(["graph", "-"])
        .stdin(Stdio::piped())
        .stderr(Stdio::piped())
        .stdout(Stdio::null())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"basis": ["a", "b"], "matrix": [[1, 0.5], [0, 1]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
    assert!(String::from_utf8_lossy(&out.stderr).contains("matrix[0][1]"));

    let out = Command::new(bin)
        .args(["series", &data("strata8.json")])
        .env("EVOLALG_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INPUT));
}
