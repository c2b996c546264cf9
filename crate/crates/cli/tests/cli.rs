//! End-to-end checks of the mubkit binary: exit codes, output formats, and
//! byte-level determinism of generated files.

use std::path::Path;
use std::process::{Command, Output};

fn mubkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(args)
        .output()
        .expect("the mubkit binary should run")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("temp paths are UTF-8")
}

#[test]
fn gen_then_verify_round_trips_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q9.json");
    let gen = mubkit(&["gen", "--p", "3", "--m", "2", "--out", path_str(&file)]);
    assert_eq!(gen.status.code(), Some(0), "{}", stderr_of(&gen));

    let verify = mubkit(&["verify", "--input", path_str(&file)]);
    assert_eq!(verify.status.code(), Some(0), "{}", stderr_of(&verify));
    let text = stdout_of(&verify);
    assert!(text.contains("mub.field.q9.orthonormality"));
    assert!(text.contains(", 0 failed,"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn gen_ring_then_verify_round_trips_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r8.json");
    let gen = mubkit(&["gen-ring", "--m", "3", "--out", path_str(&file)]);
    assert_eq!(gen.status.code(), Some(0), "{}", stderr_of(&gen));

    let verify = mubkit(&["verify", "--input", path_str(&file), "--format", "csv"]);
    assert_eq!(verify.status.code(), Some(0));
    let text = stdout_of(&verify);
    assert!(text.starts_with("name,paper_anchor,measured,expected,tolerance,pass\n"));
    assert!(text.contains("mub.ring.q8.unbiasedness"));
}

#[test]
fn gen_rejects_characteristic_two_and_points_at_the_ring_command() {
    let out = mubkit(&["gen", "--p", "2", "--m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("gen-ring"));
}

#[test]
fn generated_files_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for file in [&a, &b] {
        let out = mubkit(&["gen", "--p", "5", "--m", "1", "--out", path_str(file)]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr_of(&out));
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert!(!bytes_a.is_empty());
    assert_eq!(bytes_a, bytes_b);
}

#[test]
fn tampered_basis_file_fails_verification_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("q3.json");
    let gen = mubkit(&["gen", "--p", "3", "--m", "1", "--out", path_str(&file)]);
    assert_eq!(gen.status.code(), Some(0));

    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["bases"][0]["vectors"][0][0][0] = serde_json::json!(0.9);
    std::fs::write(&file, serde_json::to_string(&doc).unwrap()).unwrap();

    let verify = mubkit(&["verify", "--input", path_str(&file)]);
    assert_eq!(verify.status.code(), Some(1), "{}", stderr_of(&verify));
    assert!(stdout_of(&verify).contains("FAIL"));
}

#[test]
fn verify_rejects_missing_and_malformed_input_with_exit_two() {
    let missing = mubkit(&["verify", "--input", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"not\": \"a basis set\"}").unwrap();
    let bad = mubkit(&["verify", "--input", path_str(&junk)]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr_of(&bad).starts_with("error:"));
}

#[test]
fn bell_families_round_trip_through_verify_bell() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, q) in [("fourier", "4"), ("galois", "3"), ("ring", "4")] {
        let file = dir.path().join(format!("{kind}.json"));
        let gen = mubkit(&["bell", "--kind", kind, "--q", q, "--out", path_str(&file)]);
        assert_eq!(gen.status.code(), Some(0), "{}", stderr_of(&gen));
        let verify = mubkit(&["verify-bell", "--input", path_str(&file)]);
        assert_eq!(verify.status.code(), Some(0), "{}", stderr_of(&verify));
        assert!(stdout_of(&verify).contains("maximal_entanglement"));
    }
}

#[test]
fn bell_rejects_bad_dimensions() {
    let ring = mubkit(&["bell", "--kind", "ring", "--q", "6"]);
    assert_eq!(ring.status.code(), Some(2));
    let galois = mubkit(&["bell", "--kind", "galois", "--q", "2"]);
    assert_eq!(galois.status.code(), Some(2));
    let shift = mubkit(&["bell", "--kind", "fourier", "--q", "3", "--shift", "field"]);
    assert_eq!(shift.status.code(), Some(2));
}

#[test]
fn corrupt_bell_amplitudes_are_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bell.json");
    let gen = mubkit(&[
        "bell",
        "--kind",
        "fourier",
        "--q",
        "2",
        "--out",
        path_str(&file),
    ]);
    assert_eq!(gen.status.code(), Some(0));

    let mut doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    doc["states"][0]["amps"][0][0] = serde_json::json!(5.0);
    std::fs::write(&file, serde_json::to_string(&doc).unwrap()).unwrap();

    let verify = mubkit(&["verify-bell", "--input", path_str(&file)]);
    assert_eq!(verify.status.code(), Some(2));
}

#[test]
fn gamma_sums_list_every_ring_element_with_lawful_magnitudes() {
    let out = mubkit(&["sums", "--kind", "gamma", "--m", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,y,re,im,magnitude,expected,pass"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 16);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0], "2");
        let expected: f64 = fields[5].parse().unwrap();
        assert!(
            [4.0, 2.0, 0.0].contains(&expected),
            "unexpected magnitude class {expected}"
        );
        assert_eq!(fields[6], "true");
    }
}

#[test]
fn gauss_sums_cover_all_character_shift_pairs() {
    let out = mubkit(&["sums", "--kind", "gauss", "--q", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("q,k,c,re,im,magnitude,expected,pass\n"));
    let rows = text.lines().count() - 1;
    assert_eq!(rows, 8 * 9);
    assert!(!text.contains(",false"));
}

#[test]
fn weil_sums_respect_the_square_root_bound() {
    let out = mubkit(&["sums", "--kind", "weil", "--q", "7", "--d", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("q,d,f,re,im,magnitude,bound,pass\n"));
    assert_eq!(text.lines().count() - 1, 343);
    assert!(!text.contains(",false"));

    let degenerate = mubkit(&["sums", "--kind", "weil", "--q", "7", "--d", "7"]);
    assert_eq!(degenerate.status.code(), Some(2));
}

#[test]
fn phase_op_emits_a_square_matrix() {
    let out = mubkit(&["phase-op", "--p", "5", "--m", "1", "--a", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.starts_with("n,m,re,im\n"));
    assert_eq!(text.lines().count() - 1, 25);

    let ring = mubkit(&["phase-op", "--ring", "--m", "2", "--a", "1", "--k", "1"]);
    assert_eq!(ring.status.code(), Some(0));
    assert_eq!(stdout_of(&ring).lines().count() - 1, 16);

    let conflict = mubkit(&["phase-op", "--p", "5", "--ring", "--m", "2"]);
    assert_eq!(conflict.status.code(), Some(2));
}

#[test]
fn phase_sweep_grid_is_half_open_and_complete() {
    let out = mubkit(&[
        "phase-sweep",
        "--p",
        "3",
        "--m",
        "1",
        "--a",
        "1",
        "--steps",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("beta,b,probability,expectation,variance")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4 * 3);
    assert!(rows[0].starts_with("0.0,0,"));
    let last_beta: f64 = rows
        .last()
        .unwrap()
        .split(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(last_beta < std::f64::consts::TAU);

    let empty = mubkit(&["phase-sweep", "--p", "3", "--m", "1", "--steps", "0"]);
    assert_eq!(empty.status.code(), Some(2));
}

#[test]
fn paper_suite_passes_in_every_format() {
    let text = mubkit(&["paper-suite"]);
    assert_eq!(text.status.code(), Some(0), "{}", stdout_of(&text));
    assert!(stdout_of(&text).contains(", 0 failed,"));

    let json = mubkit(&["paper-suite", "--format", "json"]);
    assert_eq!(json.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout_of(&json)).unwrap();
    assert!(doc["summary"]["pass"].as_u64().unwrap() > 60);
    assert_eq!(doc["summary"]["fail"].as_u64(), Some(0));
    for check in doc["checks"].as_array().unwrap() {
        assert!(check["paper_anchor"].as_str().is_some());
    }
}

#[test]
fn impossible_tolerance_makes_the_suite_fail_honestly() {
    let out = mubkit(&["--tolerance", "1e-300", "paper-suite"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("FAIL"));
}

#[test]
fn thread_count_env_var_is_validated() {
    let bad = Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(["paper-suite"])
        .env("MUBKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr_of(&bad).contains("MUBKIT_THREADS"));

    let good = Command::new(env!("CARGO_BIN_EXE_mubkit"))
        .args(["paper-suite"])
        .env("MUBKIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(good.status.code(), Some(0));
}
