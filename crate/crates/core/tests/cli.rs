//! End-to-end checks of the command-line interface and its exit codes.

use std::process::Command;

use semigroup_forge::report::RunRecord;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semigroup-forge"))
}

#[test]
fn analyze_json_round_trips() {
    let out = bin().args(["analyze", "--json", "6", "13", "40", "41"]).output().unwrap();
    assert!(out.status.success());
    let record: RunRecord = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(record.generators, vec![6, 13, 40, 41]);
    assert_eq!(record.pseudo_frobenius, vec![33, 34, 35]);
    assert_eq!(serde_json::from_str::<RunRecord>(&serde_json::to_string(&record).unwrap()).unwrap(), record);
}

#[test]
fn verify_paper_passes() {
    let out = bin().arg("verify-paper").output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("all checks passed"));
}

#[test]
fn subcommand_outputs() {
    let out = bin().args(["apery", "6", "13", "40", "41"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[0, 13, 26, 39, 40, 41]");

    let out = bin().args(["pf", "6", "13", "40", "41"]).output().unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[33, 34, 35]");

    let out = bin().args(["matrix", "7", "39", "43", "47", "17"]).output().unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]"));

    let out = bin()
        .args(["family", "j1", "--ell", "3", "--n", "4", "--alpha", "1", "--h1", "1"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[6, 13, 40, 41]");
}

#[test]
fn exit_codes() {
    // Computational error: generators with gcd 2.
    let out = bin().args(["analyze", "2", "4"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));

    // Usage error: unknown subcommand.
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // Missing required argument.
    let out = bin().arg("analyze").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn caps_env_is_honored() {
    let out = bin()
        .env("SEMIGROUP_FORGE_CAPS", "3,2")
        .args(["ideal", "6", "13", "40", "41"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin()
        .env("SEMIGROUP_FORGE_CAPS", "bogus")
        .args(["pf", "2", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_writes_jsonl() {
    let dir = std::env::temp_dir().join("semigroup_forge_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.jsonl");
    let _ = std::fs::remove_file(&path);

    let out = bin()
        .args([
            "search",
            "--max-multiplicity",
            "4",
            "--max-frobenius",
            "12",
            "--jobs",
            "1",
            "--out",
            path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 contradictions"));

    let body = std::fs::read_to_string(&path).unwrap();
    let mut keys = Vec::new();
    for line in body.lines() {
        let r: RunRecord = serde_json::from_str(line).unwrap();
        assert_eq!(r.schema, 1);
        let mut k = r.generators.clone();
        k.sort_unstable();
        keys.push(k);
    }
    assert!(keys.len() > 10);
    // --jobs 1 gives canonical order.
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}
