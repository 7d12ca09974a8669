use std::fs;
use std::process::{Command, Output};

fn simsek(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simsek"))
        .args(args)
        .output()
        .expect("failed to run simsek")
}

fn stdout(args: &[&str]) -> String {
    let out = simsek(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_goldens() {
    assert_eq!(
        stdout(&["compute", "--family", "y1star", "--route", "B", "--n", "1", "--k", "2"]),
        "1*l^2 + 1*l + -1/2*l*a\n"
    );
    assert_eq!(stdout(&["compute", "--family", "y1", "--n", "0", "--k", "3", "--lambda", "1"]), "4/3\n");
    assert_eq!(stdout(&["compute", "--family", "stirling2", "--n", "4", "--k", "2"]), "7\n");
}

#[test]
fn compute_json() {
    let out = stdout(&["compute", "--family", "y1star", "--n", "1", "--k", "2", "--alpha", "-1/2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"], "1*l^2 + 5/4*l");
    assert_eq!(v["alpha"], "-1/2");
}

#[test]
fn phi_golden() {
    assert_eq!(stdout(&["phi", "--n", "0", "--lambda", "0", "--alpha", "1", "--degree", "4"]), "[1, 1, 0, 0, 0]\n");
}

#[test]
fn series_output() {
    assert_eq!(stdout(&["series", "--family", "y1star", "--k", "1", "--order", "2"]), "[1*l + 1, 1*l, 1/2*l]\n");
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: &[&[&str]] = &[
        &["compute", "--family", "y1", "--n", "-1", "--k", "2"],
        &["compute", "--family", "y1", "--n", "1", "--k", "2", "--lambda", "1/0"],
        &["compute", "--family", "y1", "--n", "1", "--k", "2", "--lambda", "x"],
        &["compute", "--family", "nope", "--n", "1", "--k", "2"],
        &["table", "--family", "stirling2", "--route", "A"],
        &["table", "--family", "y1star", "--route", "Z"],
        &["verify", "--identity", "NOT-AN-ID"],
        &["verify", "--format", "yaml"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(simsek(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_list_shows_registry() {
    let out = stdout(&["verify", "--list"]);
    for id in ["FUNC-EQ", "REL-S2STAR", "PHI-INT", "RED-CLASSICAL"] {
        assert!(out.contains(id), "{id} missing");
    }
}

#[test]
fn verify_selected_identities() {
    let out = stdout(&["verify", "--identity", "REC-K,PHI-INT", "--random-points", "0", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[1], "REC-K,,,pass,k=8;n=8,,,,");
    assert!(lines.iter().any(|l| l.starts_with("PHI-INT,1,0,pass,")));
    assert!(lines.iter().any(|l| l.starts_with("PHI-INT,1,1/2,expected-discrepancy,")));
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "4"] {
        let path = dir.path().join(format!("report-{jobs}.json"));
        let p = path.to_str().unwrap();
        let out = simsek(&["verify", "--seed", "11", "--jobs", jobs, "--format", "json", "--out", p]);
        assert_eq!(out.status.code(), Some(0));
        outputs.push(fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn table_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s2.csv");
    let p = path.to_str().unwrap();
    let out = simsek(&["table", "--family", "stirling2", "--n-max", "4", "--k-max", "4", "--out", p]);
    assert!(out.status.success());
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# family=stirling2\n"));
    assert!(text.contains("\n4,2,7\n"));
}
