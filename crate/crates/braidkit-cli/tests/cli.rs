//! End-to-end checks of the binary: output shapes, exit codes, and
//! byte-level determinism across parallelism degrees.

use std::process::{Command, Output};

fn braidkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn standard_cabling_emits_wire_json() {
    let out = braidkit(&["standard", "--kind", "cabling", "--k", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["images"][0], serde_json::json!([1, 1, 2, 3, 1, 2]));
    assert_eq!(v["source_strands"], 5);
    assert_eq!(v["target_strands"], 10);
}

#[test]
fn standard_inner_requires_conjugator() {
    let out = braidkit(&["standard", "--kind", "inner", "--n", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn screen_table_has_documented_row() {
    let out = braidkit(&["screen", "--n", "5", "--m-max", "10"]);
    assert!(stdout(&out).lines().any(|l| l.starts_with("5 10 false")));

    let out = braidkit(&["screen", "--n", "5", "--m-max", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let row = &v["rows"][9];
    assert_eq!(row["m"], 10);
    assert_eq!(row["special_constraint"], false);
    assert_eq!(row["range_ok"], true);
}

#[test]
fn word_subcommand_exit_codes() {
    let eq = braidkit(&["word", "compare", "B5: 1 2 1", "B5: 2 1 2"]);
    assert_eq!(eq.status.code(), Some(0));

    let ne = braidkit(&["word", "compare", "B5: 1", "B5: 2"]);
    assert_eq!(ne.status.code(), Some(1));

    let far = braidkit(&["word", "commute", "B4: 1", "B4: 3"]);
    assert_eq!(far.status.code(), Some(0));

    let bad = braidkit(&["word", "reduce", "B3: 7"]);
    assert_eq!(bad.status.code(), Some(3));

    let low_fuel = braidkit(&["--fuel", "10", "word", "reduce", "B3: 1"]);
    assert_eq!(low_fuel.status.code(), Some(3));
}

#[test]
fn hom_pipeline_round_trips() {
    let std_out = braidkit(&["standard", "--kind", "inclusion", "--n", "5"]);
    let hom = stdout(&std_out);
    let hom = hom.trim();

    let verify = braidkit(&["hom", "verify", hom]);
    assert_eq!(verify.status.code(), Some(0));

    let apply = braidkit(&["hom", "apply", hom, "B5: 1 2 3 4"]);
    assert_eq!(apply.status.code(), Some(0));
    assert_eq!(stdout(&apply).trim(), "B10: 1 2 3 4");

    // (σ1, σ2, σ1, σ2) breaks far commutation → verification failure
    let bad = braidkit(&[
        "hom",
        "make",
        "--source",
        "5",
        "--target",
        "5",
        "--image",
        "B5: 1",
        "--image",
        "B5: 2",
        "--image",
        "B5: 1",
        "--image",
        "B5: 2",
    ]);
    assert_eq!(bad.status.code(), Some(1));

    let malformed = braidkit(&["hom", "verify", "{\"images\": oops"]);
    assert_eq!(malformed.status.code(), Some(3));
}

#[test]
fn classifier_certifies_standard_cabling() {
    let hom = stdout(&braidkit(&["standard", "--kind", "cabling", "--k", "-1", "--n", "4"]));
    let out = braidkit(&["classify-cabling", "--format", "json", hom.trim()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["k_canonical"], -1);
    assert_eq!(v["certified"], true);
}

#[test]
fn suite_exit_agrees_with_counterexample_count() {
    let ok = braidkit(&["suite", "prop31", "--n", "5", "--max-conj", "3", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&ok).trim()).unwrap();
    assert_eq!(v["counterexamples"], 0);
    assert_eq!(v["passed"], true);

    // the divisibility screen has three documented arithmetic
    // exceptions, so it reports a failure
    let red = braidkit(&["suite", "screen", "--format", "json"]);
    assert_eq!(red.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&red).trim()).unwrap();
    assert_eq!(v["counterexamples"], 3);

    let unknown = braidkit(&["suite", "nope"]);
    assert_eq!(unknown.status.code(), Some(3));
}

#[test]
fn json_reports_are_deterministic_across_threads() {
    let one = braidkit(&["--threads", "1", "enumerate-sym", "--n", "5", "--k", "3", "--format", "json"]);
    let four = braidkit(&["--threads", "4", "enumerate-sym", "--n", "5", "--k", "3", "--format", "json"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));

    let a = braidkit(&["suite", "b4-identities", "--format", "json"]);
    let b = braidkit(&["suite", "b4-identities", "--format", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn enumerate_sym_size_guard() {
    let out = braidkit(&["enumerate-sym", "--n", "10", "--k", "6"]);
    assert_eq!(out.status.code(), Some(3));
}
