//! End-to-end checks of the command-line interface: flags, formats, exit
//! codes and output stability.

use std::process::Command;

fn qchar(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_qchar"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn compute_json_has_expected_shape() {
    let (stdout, _, code) = qchar(&["compute", "--type", "C", "--rank", "2", "--node", "2"]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["schema"], "1");
    assert_eq!(doc["meta"]["type"], "C");
    assert_eq!(doc["totals"]["mass"], 5);
    assert_eq!(doc["payload"]["character"].as_array().unwrap().len(), 5);
}

#[test]
fn compute_is_deterministic_across_processes() {
    let args = ["compute", "--type", "D", "--rank", "4", "--node", "2"];
    let (a, _, _) = qchar(&args);
    let (b, _, _) = qchar(&args);
    assert_eq!(a, b);
    assert!(!a.is_empty());
}

#[test]
fn compute_minuscule_path() {
    let (stdout, _, code) = qchar(&[
        "compute", "--type", "A", "--rank", "2", "--node", "1", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("3 distinct monomials"));
}

#[test]
fn dominant_text_lists_partitions() {
    let (stdout, _, code) = qchar(&[
        "dominant", "--type", "D", "--rank", "4", "--node", "2", "--r", "0", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("j=(").count(), 5);
    assert!(stdout.contains("class={(2),(3)}"));
}

#[test]
fn usage_errors_exit_2() {
    // parity of the residue
    let (_, stderr, code) = qchar(&[
        "dominant", "--type", "C", "--rank", "2", "--node", "2", "--r", "1",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("r = i mod 2"));
    // rank rule for type D
    let (_, _, code) = qchar(&["compute", "--type", "D", "--rank", "3", "--node", "2"]);
    assert_eq!(code, 2);
    // unknown suite
    let (_, stderr, code) = qchar(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown suite"));
    // unknown flag
    let (_, _, code) = qchar(&["compute", "--type", "A", "--rank", "2", "--node", "1", "--frob", "x"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_small_suite_passes() {
    let (stdout, _, code) = qchar(&[
        "verify", "--suite", "counts", "--max-rank", "6", "--format", "text",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("pass"));
}

#[test]
fn out_flag_writes_stable_files() {
    let dir = std::env::temp_dir();
    let p1 = dir.join("qchar_cli_test_1.json");
    let p2 = dir.join("qchar_cli_test_2.json");
    for p in [&p1, &p2] {
        let (_, _, code) = qchar(&[
            "compute", "--type", "B", "--rank", "3", "--node", "2",
            "--out", p.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert_eq!(a, b);
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}
