//! End-to-end tests driving the `mckay` binary: command surface, machine
//! report schema, exit-code contract, and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn assert_line(haystack: &str, needle: &str) {
    assert!(
        haystack.lines().any(|l| l == needle),
        "expected line `{needle}` in:\n{haystack}"
    );
}

#[test]
fn verify_symmetric_three_passes() {
    let out = mckay(&["verify", "--family", "symmetric", "-n", "3", "--format", "machine"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_line(&text, "result = pass");
    assert_line(&text, "verify.age-codim.status = pass");
    assert_line(&text, "verify.transversality.status = pass");
    assert_line(&text, "verify.associativity.status = pass");
    assert_line(&text, "verify.associativity.mode = elements");
    assert_line(&text, "verify.associativity.checked = 216");
    assert_line(&text, "verify.betti-paths.status = pass");
    assert_line(&text, "verify.filtration.status = pass");
}

#[test]
fn betti_of_cyclic_seven() {
    let out = mckay(&["betti", "--family", "cyclic", "-m", "7", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "betti.orbifold.0 = 1");
    assert_line(&text, "betti.orbifold.2 = 6");
    assert_line(&text, "betti.hochschild.2 = 6");
}

#[test]
fn reflections_of_symmetric_five() {
    let out = mckay(&[
        "reflections",
        "--family",
        "symmetric",
        "-n",
        "5",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "reflections.count = 1");
    assert_line(&text, "reflections.classes = c1");
    // the ten transpositions of S_5
    assert_line(&text, "reflections.c1.size = 10");
    assert_line(&text, "reflections.dim_c = 1");
}

#[test]
fn ring_of_symmetric_three() {
    let out = mckay(&["ring", "--family", "symmetric", "-n", "3", "--format", "machine"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "ring.basis.c1.degree = 2");
    assert_line(&text, "ring.basis.c2.degree = 4");
    assert_line(&text, "ring.c1*c1.c2 = 3");
}

#[test]
fn wreath_target_accepted() {
    let out = mckay(&[
        "betti", "--family", "wreath", "--inner", "cyclic", "-m", "2", "-n", "2",
        "--format", "machine",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_line(&text, "group.order = 8");
    assert_line(&text, "betti.orbifold.0 = 1");
    assert_line(&text, "betti.orbifold.2 = 2");
    assert_line(&text, "betti.orbifold.4 = 2");
}

#[test]
fn group_files_run_end_to_end() {
    let out = mckay(&["betti", "--file", &data("a1.group"), "--format", "machine"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_line(&text, "group.order = 2");
    assert_line(&text, "betti.orbifold.0 = 1");
    assert_line(&text, "betti.orbifold.2 = 1");

    let out = mckay(&[
        "report",
        "--file",
        &data("binary-tetrahedral.group"),
        "--format",
        "machine",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert_line(&text, "group.order = 24");
    assert_line(&text, "group.classes = 7");
    // the E6 diagram has six nodes
    assert_line(&text, "betti.orbifold.2 = 6");
    assert_line(&text, "reflections.count = 6");
    assert_line(&text, "result = pass");
}

#[test]
fn parse_errors_name_the_generator_and_exit_2() {
    let out = mckay(&["betti", "--file", &data("bad-shape.group")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("generator 2"), "{err}");
    assert!(err.contains("2x3"), "{err}");
}

#[test]
fn symplectic_only_commands_refuse_sl_groups() {
    // betti works for a volume-preserving group
    let out = mckay(&["betti", "--file", &data("sl-not-sp.group"), "--format", "machine"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert_line(&stdout(&out), "group.in_sp = false");
    // the ring is a symplectic object
    let out = mckay(&["ring", "--file", &data("sl-not-sp.group")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("symplectic"), "{err}");
    // and so is verify
    let out = mckay(&["verify", "--file", &data("sl-not-sp.group")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_target_is_a_usage_error() {
    let out = mckay(&["betti"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mckay(&["betti", "--family", "symmetric"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for format in ["text", "machine"] {
        let first = mckay(&["report", "--family", "binary-dihedral", "-m", "3", "--format", format]);
        let second = mckay(&["report", "--family", "binary-dihedral", "-m", "3", "--format", format]);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{format} output drifted");
    }
}

#[test]
fn timing_is_opt_in() {
    let out = mckay(&["betti", "--family", "cyclic", "-m", "3", "--format", "machine"]);
    assert!(!stdout(&out).contains("timing."));
    let out = mckay(&["betti", "--family", "cyclic", "-m", "3", "--format", "machine", "--timing"]);
    assert!(stdout(&out).contains("timing.total_ms = "));
}

#[test]
fn skip_flag_skips_checks() {
    let out = mckay(&[
        "verify",
        "--family",
        "cyclic",
        "-m",
        "4",
        "--skip",
        "associativity",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_line(&text, "verify.associativity.status = skipped");
    assert_line(&text, "verify.age-codim.status = pass");

    let out = mckay(&["verify", "--family", "cyclic", "-m", "4", "--skip", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn caps_are_enforced_from_the_command_line() {
    let out = mckay(&[
        "betti",
        "--family",
        "symmetric",
        "-n",
        "4",
        "--max-group-order",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("cap"), "{err}");
}

#[test]
fn assoc_mode_flag_is_respected() {
    let out = mckay(&[
        "verify",
        "--family",
        "symmetric",
        "-n",
        "3",
        "--assoc-mode",
        "classes",
        "--format",
        "machine",
    ]);
    assert!(out.status.success());
    assert_line(&stdout(&out), "verify.associativity.mode = classes");
}
