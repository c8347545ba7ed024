use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use corona_spectra::io::parse_edge_list;
use corona_spectra::{build_uniform_corona, generators, laplacian_spectrum, CoronaMode};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corona-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn spectrum_of_k2_json() {
    let o = run(&["spectrum", "-g", "gen:complete:2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"order":2,"eigenvalues":[0.0,2.0]}"#);
}

#[test]
fn verify_c4_k2_matches() {
    let o = run(&["verify", "--mode", "vertex", "-g", "gen:cycle:4", "-H", "gen:complete:2", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matched"], true);
    assert_eq!(v["order"], 16);
    assert_eq!(v["mode"], "vertex");
}

#[test]
fn missing_file_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.el");
    let o = run(&[
        "build",
        "--mode",
        "vertex",
        "-g",
        "missing.el",
        "-H",
        "gen:complete:2",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read missing.el"), "{}", stderr(&o));
    assert!(!out.exists());
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(run(&["verify", "-g", "gen:cycle:4", "-H", "gen:complete:2"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--mode", "sideways", "-g", "gen:cycle:4", "-H", "gen:complete:2"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "-g", "gen:nosuch:3"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn parse_error_names_file_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    fs::write(&path, "3 2\n0 1\n1 x\n").unwrap();
    let o = run(&["spectrum", "-g", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.el"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn build_write_read_spectrum_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (mode, g, h) in [
        ("vertex", "gen:petersen", "gen:cycle:3"),
        ("edge", "gen:hypercube:3", "gen:complete:2"),
    ] {
        let out = dir.path().join(format!("{mode}.el"));
        let o = run(&["build", "--mode", mode, "-g", g, "-H", h, "-o", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

        let read = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
        let layout = build_uniform_corona(
            mode.parse::<CoronaMode>().unwrap(),
            &generators::from_spec(g).unwrap(),
            &generators::from_spec(h).unwrap(),
        )
        .unwrap();
        assert_eq!(read, layout.graph);
        let from_file = laplacian_spectrum(&read).unwrap();
        let in_memory = laplacian_spectrum(&layout.graph).unwrap();
        assert_eq!(from_file.values(), in_memory.values());

        let o = run(&["spectrum", "-g", out.to_str().unwrap(), "--json"]);
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v, serde_json::to_value(&in_memory).unwrap());
    }
}

fn write_attachments(dir: &Path, graphs: &[&str]) {
    for (i, spec) in graphs.iter().enumerate() {
        let g = generators::from_spec(spec).unwrap();
        fs::write(dir.join(format!("H_{}.el", i + 1)), corona_spectra::io::write_edge_list(&g)).unwrap();
    }
}

#[test]
fn per_attach_uniform_matches_replicated() {
    let dir = tempfile::tempdir().unwrap();
    write_attachments(dir.path(), &["gen:cycle:3"; 4]);
    let per = run(&[
        "verify",
        "--mode",
        "vertex",
        "-g",
        "gen:cycle:4",
        "--per-attach",
        dir.path().to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(per.status.code(), Some(0), "{}", stderr(&per));
    let v: Value = serde_json::from_str(&stdout(&per)).unwrap();
    assert_eq!(v["matched"], true);
    assert_eq!(v["order"], 4 + 4 + 12);
}

#[test]
fn per_attach_heterogeneous_is_refused() {
    let dir = tempfile::tempdir().unwrap();
    write_attachments(dir.path(), &["gen:cycle:3", "gen:complete:2", "gen:cycle:3", "gen:complete:2"]);
    let args = ["--mode", "vertex", "-g", "gen:cycle:4", "--per-attach", dir.path().to_str().unwrap()];

    let o = run(&[&["verify"], &args[..], &["--json"]].concat());
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["matched"], false);
    assert!(v["predictor_refusal"].is_string());
    assert_eq!(v["oracle"]["order"], 4 + 4 + 10);

    let o = run(&[&["build"], &args[..]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_edge_list(&stdout(&o)).unwrap().order(), 18);
}

#[test]
fn per_attach_missing_file() {
    let dir = tempfile::tempdir().unwrap();
    write_attachments(dir.path(), &["gen:cycle:3"; 3]);
    let o = run(&["build", "--mode", "vertex", "-g", "gen:cycle:4", "--per-attach", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("H_4.el"));
}

#[test]
fn predict_json_parts() {
    let o = run(&["predict", "--mode", "edge", "-g", "gen:complete:4", "-H", "gen:complete:2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parts"]["repeated"]["multiplicity"], 2);
    assert_eq!(v["parts"]["cubic"].as_array().unwrap().len(), 4);
    assert_eq!(v["flattened"].as_array().unwrap().len(), 4 + 6 + 12);
}

#[test]
fn predict_rejects_irregular_base() {
    let o = run(&["predict", "--mode", "vertex", "-g", "gen:path:4", "-H", "gen:complete:2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cospectral_exit_codes() {
    let o = run(&["cospectral", "-a", "gen:shrikhande", "-b", "gen:rook:4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cospectral"], true);
    assert_eq!(v["isomorphic_hint"], false);

    let o = run(&["cospectral", "-a", "gen:cycle:6", "-b", "gen:complete:6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("cospectral            false"));
}

#[test]
fn text_spectrum_is_aligned() {
    let o = run(&["spectrum", "-g", "gen:cycle:4"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "order 4");
    assert_eq!(lines.len(), 5);
    assert!(lines[1..].iter().all(|l| l.len() == lines[1].len()));
    assert!(lines[4].trim_end().ends_with("2.0"));
}

#[test]
fn battery_passes() {
    let o = run(&["battery"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.matches("[PASS]").count(), 9);
    assert!(!text.contains("[FAIL]"));

    let o = run(&["battery", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v.as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["matched"] == true));
}
