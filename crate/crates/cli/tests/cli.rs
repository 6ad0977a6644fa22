use std::process::Command;

use tatebv_cli::{exit, run, Outcome};

fn tatebv(args: &[&str]) -> Outcome {
    run(std::iter::once("tatebv").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> serde_json::Value {
    assert_eq!(out.code, exit::SUCCESS, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid JSON")
}

#[test]
fn bundles_have_the_frozen_top_level_shape() {
    let v = json(&tatebv(&["--group", "cyclic:3", "--char", "3", "--window", "-2..2", "dims"]));
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["classes", "config", "dims", "provenance", "tables"]);
    assert_eq!(v["provenance"]["schema"], 1);
    assert_eq!(v["provenance"]["config_hash"].as_str().unwrap().len(), 64);
    assert_eq!(v["config"]["char"], 3);
    assert!(v["dims"].as_array().unwrap().iter().all(|r| r["total"] == 3 && r["direct"] == 3));
}

#[test]
fn identical_configs_give_identical_bytes() {
    let args = ["--group", "symmetric:3", "--char", "3", "--window", "-2..2", "--seed", "11", "tables"];
    let a = tatebv(&args);
    let b = tatebv(&args);
    assert_eq!(a.code, exit::SUCCESS, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let threaded = tatebv(&["--threads", "4"].into_iter().chain(args).collect::<Vec<_>>());
    assert_ne!(threaded.stdout, a.stdout, "the thread count is part of the configuration");
    let v = json(&threaded);
    let w = json(&a);
    assert_eq!(v["tables"], w["tables"], "results must not depend on the thread count");
}

#[test]
fn tables_are_spot_checked_and_complete() {
    let v = json(&tatebv(&["--group", "cyclic:2", "--char", "2", "--window", "-2..2", "tables"]));
    let t = &v["tables"];
    let basis = t["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 10);
    // Every pair of basis elements whose degrees sum into the window.
    assert_eq!(t["cup"].as_array().unwrap().len(), 2 * 2 * 19);
    let spot = &t["spot_checks"];
    assert!(spot["checked"].as_u64().unwrap() >= 1);
    assert_eq!(spot["failed"], 0);
    // Δ vanishes on every degree-0 class.
    for entry in t["delta"].as_array().unwrap() {
        if entry["degree"] == -1 {
            assert!(entry["coords"].as_array().unwrap().iter().all(|c| c == 0));
        }
    }
}

#[test]
fn invalid_configurations_exit_with_2() {
    for args in [
        &["--char", "4", "dims"][..],
        &["--window", "3..1", "dims"],
        &["--window", "nonsense", "dims"],
        &["--group", "bogus:3", "dims"],
        &["--threads", "0", "dims"],
        &["--format", "yaml", "dims"],
        &["--group", "cyclic:2", "verify-s3"],
        &["--group", "cyclic:2", "--char", "3", "verify-appendix-b"],
        &["no-such-command"],
    ] {
        let out = tatebv(args);
        assert_eq!(out.code, exit::INVALID_CONFIG, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn cost_caps_exit_with_3() {
    let out = tatebv(&["--group", "symmetric:3", "--direct-cap", "10", "export-diff"]);
    assert_eq!(out.code, exit::COST_CAP, "{}", out.stderr);
    let out = tatebv(&["--group", "symmetric:3", "--decomposition-cap", "10", "dims"]);
    assert_eq!(out.code, exit::COST_CAP, "{}", out.stderr);
    assert!(out.stderr.contains("basis elements"), "{}", out.stderr);
}

#[test]
fn help_exits_cleanly() {
    let out = tatebv(&["--help"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stdout.contains("selftest"));
}

#[test]
fn degenerate_selftest_passes() {
    let v = json(&tatebv(&["--group", "cyclic:2", "--char", "3", "selftest"]));
    let suites = v["tables"]["selftest"].as_array().unwrap();
    assert_eq!(suites.len(), 10);
    assert!(suites.iter().all(|s| s["failed"] == 0));
    assert!(v["dims"].as_array().unwrap().iter().all(|r| r["total"] == 0));
}

#[test]
fn a_mutated_differential_is_caught() {
    let out = tatebv(&["--group", "cyclic:3", "--char", "3", "--window", "-2..2", "--format", "text", "selftest", "--samples", "50", "--mutate-differential"]);
    assert_eq!(out.code, exit::VERIFICATION_FAILURE, "{}", out.stdout);
    assert!(out.stdout.contains("FAIL differential squares to zero"), "{}", out.stdout);
}

#[test]
fn connes_operator_check_passes_on_c3() {
    let v = json(&tatebv(&["--group", "cyclic:3", "--char", "3", "verify-appendix-b"]));
    let degrees = v["tables"]["connes"]["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 3);
    assert!(degrees.iter().all(|d| d["failures"] == 0));
}

#[test]
fn exported_differentials_compose_to_zero() {
    let v = json(&tatebv(&["--group", "symmetric:3", "--char", "3", "--window", "-3..2", "export-diff"]));
    let diffs = v["tables"]["differentials"].as_array().unwrap();
    assert_eq!(diffs.len(), 5);
    let dense = |d: &serde_json::Value| {
        let (rows, cols) = (d["rows"].as_u64().unwrap() as usize, d["cols"].as_u64().unwrap() as usize);
        let mut m = vec![vec![0u64; cols]; rows];
        for e in d["entries"].as_array().unwrap() {
            let (r, c, x) = (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize, e[2].as_u64().unwrap());
            assert!(x > 0 && x < 3);
            m[r][c] = x;
        }
        m
    };
    for pair in diffs.windows(2) {
        assert_eq!(pair[0]["to"], pair[1]["from"]);
        let (a, b) = (dense(&pair[0]), dense(&pair[1]));
        assert!(!pair[0]["entries"].as_array().unwrap().is_empty());
        for row in &b {
            for j in 0..a[0].len() {
                let sum: u64 = row.iter().zip(&a).map(|(x, arow)| x * arow[j]).sum();
                assert_eq!(sum % 3, 0, "d∘d != 0 out of degree {}", pair[0]["from"]);
            }
        }
    }
}

#[test]
fn csv_writes_one_file_per_table() {
    let dir = std::env::temp_dir().join(format!("tatebv-csv-{}", std::process::id()));
    let out = tatebv(&["--group", "cyclic:2", "--char", "2", "--window", "-1..1", "--format", "csv", "--out", dir.to_str().unwrap(), "tables"]);
    assert_eq!(out.code, exit::SUCCESS, "{}", out.stderr);
    let mut names: Vec<String> = std::fs::read_dir(&dir).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert!(names.contains(&"cup.csv".to_string()), "{names:?}");
    assert!(names.contains(&"dims.csv".to_string()), "{names:?}");
    let cup = std::fs::read_to_string(dir.join("cup.csv")).unwrap();
    assert!(cup.lines().count() > 1);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn the_binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tatebv");
    let status = Command::new(bin).args(["--char", "6", "dims"]).output().unwrap();
    assert_eq!(status.status.code(), Some(exit::INVALID_CONFIG));
    let ok = Command::new(bin).args(["--group", "cyclic:3", "--format", "text", "info"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(exit::SUCCESS));
    assert!(!ok.stdout.is_empty());
}
