//! End-to-end checks of the command-line contract: exit codes, JSON
//! schemas, golden outputs.

use std::process::Command;

fn capelli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_capelli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = capelli(args);
    assert!(out.status.success(), "command failed: {out:?}");
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn compute_rank_one_golden() {
    let v = stdout_json(&[
        "compute", "--case", "rank-one", "--s", "3/2", "--lambda", "2",
    ]);
    assert_eq!(v["schema"], "capelli/1");
    assert_eq!(v["case"], "rank-one");
    assert_eq!(v["ell"], 2);
    assert_eq!(v["d_lambda"], "6");
    // (z - 3/2)(z - 5/2)/2 = z^2/2 - 2 z + 15/8, leading term first.
    let terms = v["polynomial"].as_array().unwrap();
    assert_eq!(terms[0]["exp"].as_array().unwrap()[0], 2);
    assert_eq!(terms[0]["coeff"], "1/2");
    assert_eq!(terms[1]["coeff"], "-2");
    assert_eq!(terms[2]["coeff"], "15/8");
}

#[test]
fn compute_classical_zero_weight_is_one() {
    let v = stdout_json(&[
        "compute", "--case", "classical", "--n", "2", "--r", "1/5", "--s", "3/7", "--lambda",
        "0,0",
    ]);
    let terms = v["polynomial"].as_array().unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0]["coeff"], "1");
}

#[test]
fn compute_degree_one_is_centered_degree_form() {
    let v = stdout_json(&[
        "compute", "--case", "classical", "--n", "2", "--r", "1/5", "--s", "3/7", "--lambda",
        "1,0", "--format", "json",
    ]);
    let terms = v["polynomial"].as_array().unwrap();
    // z1 + z2 - 37/35
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["exp"].as_array().unwrap().len(), 2);
    assert_eq!(terms[2]["coeff"], "-37/35");
}

#[test]
fn table_rank_one_is_binomial_triangle() {
    let v = stdout_json(&[
        "table", "--case", "rank-one", "--s", "5/7", "--max-ell", "3",
    ]);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries[0][3], "1");
    assert_eq!(entries[1][3], "3");
    assert_eq!(entries[2][3], "3");
    assert_eq!(entries[3][3], "1");
    assert_eq!(entries[2][1], "0");
}

#[test]
fn table_classical_extra_vanishing_entry() {
    let v = stdout_json(&[
        "table", "--case", "classical", "--n", "2", "--r", "1/5", "--s", "3/7", "--max-ell", "3",
    ]);
    let weights = v["weights"].as_array().unwrap();
    let find = |target: &[i64]| {
        weights
            .iter()
            .position(|w| {
                w.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect::<Vec<_>>()
                    == target
            })
            .unwrap()
    };
    let mu = find(&[1, 1]);
    let lam = find(&[3, 0]);
    assert_eq!(v["entries"][mu][lam], "0");
    // Diagonal is identically one.
    for i in 0..weights.len() {
        assert_eq!(v["entries"][i][i], "1");
    }
}

#[test]
fn op_emits_window_and_shift() {
    let v = stdout_json(&[
        "op", "--case", "rank-one", "--s", "5/7", "--which", "L", "--truncation", "4",
    ]);
    assert_eq!(v["degree_shift"], 1);
    assert_eq!(v["window"], 3);
    // Column 0 of the raising operator hits the first basis vector once.
    assert_eq!(v["entries"][1][0], "1");
    assert_eq!(v["entries"][0][0], "0");
}

#[test]
fn verify_single_suite_passes() {
    let v = stdout_json(&[
        "verify", "--suite", "transposition", "--case", "classical", "--n", "3", "--r", "1/5",
        "--s", "3/7", "--max-ell", "3",
    ]);
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["suite"], "transposition");
    assert_eq!(v["reports"][0]["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_parallel_jobs_agree_with_serial() {
    let serial = capelli(&[
        "verify", "--suite", "all", "--case", "semiclassical", "--n", "2", "--r", "2/3", "--s",
        "5/11", "--max-ell", "2",
    ]);
    let parallel = capelli(&[
        "verify", "--suite", "all", "--case", "semiclassical", "--n", "2", "--r", "2/3", "--s",
        "5/11", "--max-ell", "2", "--jobs", "4",
    ]);
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn malformed_rational_exits_two() {
    let out = capelli(&[
        "compute", "--case", "rank-one", "--s", "1/0", "--lambda", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_dominant_precondition_exits_two() {
    let out = capelli(&[
        "compute", "--case", "classical", "--n", "2", "--r", "-1", "--s", "1/2", "--lambda",
        "1,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("dominant"), "stderr names the predicate: {err}");
}

#[test]
fn integral_parameters_split_the_suites() {
    // At geometric-style parameters (integer r) the transposition family
    // still holds and runs; the pole-dependent suites refuse by name.
    let ok = capelli(&[
        "verify", "--suite", "transposition", "--case", "classical", "--n", "3", "--r", "1",
        "--s", "1/2", "--max-ell", "3",
    ]);
    assert!(ok.status.success());
    let refused = capelli(&[
        "verify", "--suite", "pieri-ell", "--case", "classical", "--n", "3", "--r", "1", "--s",
        "1/2", "--max-ell", "3",
    ]);
    assert_eq!(refused.status.code(), Some(2));
    let err = String::from_utf8_lossy(&refused.stderr);
    assert!(err.contains("non-integral"), "stderr names the predicate: {err}");
}

#[test]
fn degenerate_verify_exits_two() {
    let out = capelli(&[
        "verify", "--suite", "evaluation", "--case", "rank-one", "--s", "-1", "--max-ell", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_suite_exits_two() {
    let out = capelli(&["verify", "--suite", "nonsense", "--case", "rank-one"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_flag_exits_two() {
    let out = capelli(&["compute", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn rank_one_demo_passes() {
    let out = capelli(&["rank-one-demo", "--s", "1/2", "--max-ell", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("PASS"));
}

#[test]
fn seed_env_var_controls_sampling() {
    let with_seed = |seed: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_capelli"))
            .args([
                "verify", "--suite", "hat", "--case", "classical", "--n", "2", "--r", "1/5",
                "--s", "3/7", "--max-ell", "2",
            ])
            .env("CAPELLI_SEED", seed)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    // Different seeds still pass; the same seed reproduces byte-for-byte.
    assert_eq!(with_seed("7"), with_seed("7"));
    let _ = with_seed("8");
    let bad = Command::new(env!("CARGO_BIN_EXE_capelli"))
        .args(["verify", "--suite", "hat", "--case", "rank-one"])
        .env("CAPELLI_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("capelli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    let out = capelli(&[
        "table", "--case", "rank-one", "--s", "5/7", "--max-ell", "2", "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["schema"], "capelli/1");
    std::fs::remove_dir_all(&dir).unwrap();
}
