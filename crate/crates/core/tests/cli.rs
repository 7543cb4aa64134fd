use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use positroid_lab::constructions::{catalog, extremal_family, CatalogId};
use positroid_lab::io::{parse_one, parse_stream, to_text};
use positroid_lab::positroid::CyclicOrdering;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_positroid-lab"))
        .args(args)
        .env_remove("POSITROID_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn construct_emits_parseable_matroids() {
    let out = run(&["construct", "--family", "extremal", "--r", "4", "--l", "3"]);
    assert!(out.status.success());
    assert_eq!(
        parse_one(&stdout(&out)).unwrap(),
        extremal_family(4, 3).unwrap()
    );

    let out = run(&["construct", "--catalog", "M6"]);
    assert_eq!(parse_one(&stdout(&out)).unwrap(), catalog(CatalogId::M6));

    let out = run(&[
        "construct",
        "--family",
        "whirl",
        "--r",
        "3",
        "--l",
        "5",
        "--plus",
    ]);
    assert_eq!(parse_one(&stdout(&out)).unwrap().n(), 10);

    let out = run(&["construct", "--family", "extremal", "--r", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn positroid_check_and_enumerate() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.matroid", &to_text(&catalog(CatalogId::M4)));
    let out = run(&["positroid", "--check", &k4]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "NOT_POSITROID");

    let m = extremal_family(3, 2).unwrap();
    let path = write(dir.path(), "e.matroid", &to_text(&m));
    let out = run(&["positroid", "--check", &path]);
    let order: Vec<usize> = stdout(&out)
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert!(CyclicOrdering::new(order).unwrap().validates(&m).unwrap());

    let out = run(&[
        "positroid",
        "--enumerate",
        "5",
        "--rank",
        "3",
        "--simple",
        "--no-line-minor",
        "4",
        "--count-only",
    ]);
    assert_eq!(stdout(&out).trim(), "1");
    let out = run(&["positroid", "--enumerate", "4", "--rank", "2", "--simple"]);
    assert_eq!(parse_stream(&stdout(&out)).unwrap().len(), 1);

    let out = run(&["positroid", "--enumerate", "10", "--count-only"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minor_search() {
    let dir = tempfile::tempdir().unwrap();
    let host = write(dir.path(), "m6.matroid", &to_text(&catalog(CatalogId::M6)));
    let out = run(&["minor", "--host", &host, "--uniform-line", "5"]);
    assert_eq!(stdout(&out).trim(), "none");
    let out = run(&["minor", "--host", &host, "--uniform-line", "4"]);
    assert!(stdout(&out).starts_with("contract "));
    let out = run(&["minor", "--host", &host, "--catalog"]);
    assert!(stdout(&out).starts_with("M6 "));
    let target = write(dir.path(), "k4.matroid", &to_text(&catalog(CatalogId::M4)));
    let out = run(&["minor", "--host", &host, "--target", &target]);
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn oriented_queries() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "a.csv", "1,1,1,1,1,1\n0,1,2,3,4,5\n");
    let out = run(&[
        "oriented",
        "--matrix",
        &m,
        "--mono",
        "3",
        "--polarity",
        "plus",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["found"], true);
    let out = run(&[
        "oriented",
        "--matrix",
        &m,
        "--mono",
        "3",
        "--polarity",
        "minus",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["found"], false);
    let out = run(&["oriented", "--matrix", &m, "--ramsey", "1"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["dichotomy_holds"], true);

    let floats = write(dir.path(), "f.csv", "1,1,1\n0,0.5,2\n");
    let out = run(&["oriented", "--matrix", &floats, "--ramsey", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn corrupted_input_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.matroid", "matroid 3 2\n0 1\n0 1 2\n");
    let out = run(&["positroid", "--check", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
}

#[test]
fn verify_writes_report_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("out").join("report.json");
    let out = run(&[
        "verify",
        "prop32",
        "--samples",
        "5",
        "--seed",
        "3",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(json["reports"][0]["claim_id"], "PROP_3_2");
    assert_eq!(json["reports"][0]["outcome"], "verified");
    let manifest: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(dir.path().join("out/report.manifest.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(manifest["config"]["seed"], 3);
    assert!(manifest["elapsed_ms"]["PROP_3_2"].is_number());
}

#[test]
fn verify_beyond_cap_is_partial() {
    let out = run(&["verify", "theorem-main", "--r", "5", "--l", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["reports"][0]["outcome"], "partial");
}

#[test]
fn reports_identical_across_thread_counts() {
    let one = run(&["verify", "oracle", "--max-n", "6", "--threads", "1"]);
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_positroid-lab"));
    let three = cmd
        .args(["verify", "oracle", "--max-n", "6"])
        .env("POSITROID_LAB_THREADS", "3")
        .output()
        .unwrap();
    assert!(one.status.success() && three.status.success());
    assert_eq!(one.stdout, three.stdout);
}
