//! CLI behavior: exit-code contract, input forms, tolerance plumbing, and
//! the non-default semifield kinds.

use std::io::Write as _;
use std::process::{Command, Stdio};

fn tropic() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tropic"))
}

fn write_temp(name: &str, content: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join("tropic-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(format!("{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> (String, String, i32) {
    let output = tropic().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
        output.status.code().unwrap_or(-1),
    )
}

#[test]
fn exit_code_contract() {
    let solvable = write_temp("solvable.prob", "maxplus-rational; A: [0 2; 1 0]; d: [3 2]\n");
    let unsolvable = write_temp("unsolvable.prob", "maxplus-rational; A: [0; 0]; d: [1 2]\n");
    let dependent = write_temp("dependent.prob", "maxplus-rational; A: [0 0; 0 0]\n");

    let (_, _, code) = run(&["solve", solvable.to_str().unwrap()]);
    assert_eq!(code, 0);
    let (_, _, code) = run(&["solve", unsolvable.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (_, _, code) = run(&["general", unsolvable.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (_, _, code) = run(&["independent", dependent.to_str().unwrap()]);
    assert_eq!(code, 1);

    // usage errors
    let (_, stderr, code) = run(&["solve"]);
    assert_eq!(code, 64, "missing input is a usage error: {stderr}");
    let (_, _, code) = run(&["frobnicate"]);
    assert_eq!(code, 64);
    let (_, stderr, code) = run(&[
        "solve",
        solvable.to_str().unwrap(),
        "--semifield",
        "minplus-float",
    ]);
    assert_eq!(code, 64, "kind conflict: {stderr}");
    assert!(stderr.contains("conflicts"));

    // data errors
    let broken = write_temp("broken.prob", "maxplus-rational; A: [0 2; 1]; d: [3 2]\n");
    let (_, stderr, code) = run(&["solve", broken.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("ragged"), "stderr: {stderr}");
    let (_, _, code) = run(&["solve", "/nonexistent/path.prob"]);
    assert_eq!(code, 2);

    // help is not an error
    let (stdout, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("Usage"));
}

#[test]
fn pseudo_with_infinite_residual_is_a_negative_verdict() {
    let irregular = write_temp(
        "irregular.prob",
        "maxplus-rational; A: [0 1; -inf -inf]; d: [1 2]\n",
    );
    let (stdout, _, code) = run(&["pseudo", irregular.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stdout.contains("residual: inf"));
    assert!(stdout.contains("pseudo: none"));
}

#[test]
fn separate_matrix_and_vector_files() {
    let a = write_temp("a.mat", "0 2\n1 0\n");
    let d = write_temp("d.vec", "3\n2\n");
    let (stdout, _, code) = run(&[
        "solve",
        "-A",
        a.to_str().unwrap(),
        "-d",
        d.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("principal: [1 1]"), "stdout: {stdout}");
    assert!(stdout.contains("semifield: maxplus-rational"));

    // -d is required by solve
    let (_, stderr, code) = run(&["solve", "-A", a.to_str().unwrap()]);
    assert_eq!(code, 64);
    assert!(stderr.contains("right-hand side"), "stderr: {stderr}");
}

#[test]
fn random_instances_round_trip_through_solve() {
    for seed in ["1", "2", "3"] {
        let (problem, _, code) = run(&["oracle", "random", "--seed", seed]);
        assert_eq!(code, 0);
        let path = write_temp(&format!("roundtrip-{seed}.prob"), &problem);
        let (stdout, stderr, code) = run(&["residual", path.to_str().unwrap()]);
        assert!(code == 0, "residual failed: {stderr}");
        assert!(stdout.contains("residual:"));

        // emitting the same seed twice gives the identical file
        let (again, _, _) = run(&["oracle", "random", "--seed", seed]);
        assert_eq!(problem, again);
    }
}

#[test]
fn float_kinds_and_tolerance_plumbing() {
    // a float instance missing Δ=𝟙 by 5e-14, far below the default slack
    let nearly = write_temp(
        "nearly.prob",
        "maxplus-float; A: [0; 0]; d: [1 1.0000000000001]\n",
    );
    let (stdout, _, code) = run(&["solve", nearly.to_str().unwrap()]);
    assert_eq!(code, 0, "within default 1e-9: {stdout}");
    assert!(stdout.contains("verdict: unique"));

    let (stdout, _, code) = run(&["solve", nearly.to_str().unwrap(), "--tol", "1e-15"]);
    assert_eq!(code, 1, "tight tolerance must reject: {stdout}");
    assert!(stdout.contains("verdict: none"));

    // the environment variable overrides the default
    let output = tropic()
        .args(["solve", nearly.to_str().unwrap()])
        .env("TROPIC_TOLERANCE", "1e-15")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));

    // ... but an explicit flag beats it
    let output = tropic()
        .args(["solve", nearly.to_str().unwrap(), "--tol", "1e-9"])
        .env("TROPIC_TOLERANCE", "1e-15")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));

    // the rational kind rejects a nonzero tolerance
    let exact = write_temp("exact.prob", "maxplus-rational; A: [0]; d: [1]\n");
    let (_, stderr, code) = run(&["solve", exact.to_str().unwrap(), "--tol", "1e-9"]);
    assert_eq!(code, 64);
    assert!(stderr.contains("exact"), "stderr: {stderr}");
}

#[test]
fn min_plus_and_max_times_kinds() {
    // min-plus: ⊕ = min, 𝟘 = +inf; d = (3,2) against columns (0,1),(2,0):
    // principal x = (d⁻A)⁻ with residuation mirrored through the order
    let minplus = write_temp(
        "minplus.prob",
        "minplus-float; A: [0 2; 1 0]; d: [3 2]\n",
    );
    let (stdout, _, code) = run(&["solve", minplus.to_str().unwrap()]);
    assert!(code == 0 || code == 1, "min-plus solve must complete: {stdout}");
    assert!(stdout.contains("semifield: minplus-float"));

    // max-times: d = (6,8) = 2·(3,4), a one-column solvable system
    let maxtimes = write_temp("maxtimes.prob", "maxtimes-float; A: [3; 4]; d: [6 8]\n");
    let (stdout, _, code) = run(&["solve", maxtimes.to_str().unwrap()]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("verdict: unique"), "stdout: {stdout}");
    assert!(stdout.contains("principal: [2]"), "stdout: {stdout}");

    // max-times zero literal is "0"
    let maxtimes_zero = write_temp(
        "maxtimes-zero.prob",
        "maxtimes-float; A: [3 0; 0 4]; d: [6 0]\n",
    );
    let (stdout, _, code) = run(&["consistify", maxtimes_zero.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("zero-rows-of-d: {2}"), "stdout: {stdout}");
}

#[test]
fn json_reports_parse_and_mirror_text() {
    let solvable = write_temp("json.prob", "maxplus-rational; A: [0 2; 1 0]; d: [3 2]\n");
    let (stdout, _, code) = run(&["solve", solvable.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code, 0);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(parsed["verdict"], "unique");
    assert_eq!(parsed["principal"][0], "1");
    assert_eq!(parsed["residual-is-one"], true);
    assert_eq!(parsed["free-indices"].as_array().unwrap().len(), 0);

    let family = write_temp(
        "json-family.prob",
        "maxplus-rational; A: [0 0 -inf; -inf 0 0]; d: [1 1]\n",
    );
    let (stdout, _, _) = run(&["general", family.to_str().unwrap(), "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(parsed["family-size"], 2);
    assert_eq!(parsed["family"][0]["index_set"][0], 2);
    assert_eq!(parsed["family"][1]["fixed"][0]["value"], "1");
}

#[test]
fn general_respects_the_column_cap() {
    let family = write_temp(
        "cap-family.prob",
        "maxplus-rational; A: [0 0 -inf; -inf 0 0]; d: [1 1]\n",
    );
    // the three-column instance fits a cap of 3 and yields both boxes
    let (stdout, _, code) = run(&["general", family.to_str().unwrap(), "--max-cols", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("box 1: I={2}"), "stdout: {stdout}");
    assert!(stdout.contains("box 2: I={1,3}"), "stdout: {stdout}");

    // a cap below the column count is a hard error
    let (_, stderr, code) = run(&["general", family.to_str().unwrap(), "--max-cols", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("exceeds the cap"), "stderr: {stderr}");
}

#[test]
fn reads_problem_from_explicit_files_and_oracle_subcommands_work() {
    let fam = write_temp(
        "oracle-fam.prob",
        "maxplus-rational; A: [0 0 -inf; -inf 0 0]; d: [1 1]\n",
    );
    let (stdout, _, code) = run(&["oracle", "generators", fam.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("minimal-generators: [{2} {1,3}]"), "stdout: {stdout}");
    assert!(stdout.contains("agreement: true"));

    let single = write_temp("oracle-grid.prob", "maxplus-rational; A: [0; 0]; d: [1 2]\n");
    let (stdout, _, code) = run(&[
        "oracle",
        "grid",
        single.to_str().unwrap(),
        "--lo",
        "-5",
        "--hi",
        "5",
        "--step",
        "1/2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("oracle-min: 1/2"), "stdout: {stdout}");
    assert!(stdout.contains("agreement: true"));

    // the default 10^7 grid cap is enforced
    let wide = write_temp(
        "oracle-wide.prob",
        "maxplus-rational; A: [0 0 0 0; 0 0 0 0]; d: [1 2]\n",
    );
    let (_, stderr, code) = run(&[
        "oracle",
        "grid",
        wide.to_str().unwrap(),
        "--lo",
        "-15",
        "--hi",
        "15",
        "--step",
        "1/2",
    ]);
    assert_eq!(code, 2, "61^4 > 10^7 points: {stderr}");
    assert!(stderr.contains("exceeds"), "stderr: {stderr}");
}

#[test]
fn stdin_is_not_consumed() {
    // guard against accidentally reading stdin when a file is given
    let solvable = write_temp("stdin.prob", "maxplus-rational; A: [0]; d: [1]\n");
    let mut child = tropic()
        .args(["solve", solvable.to_str().unwrap()])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(b"garbage")
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(0));
}
