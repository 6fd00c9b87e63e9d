//! End-to-end command tests against the shipped sample documents.

use std::path::PathBuf;

use clap::Parser;
use serde_json::Value;

use yamaguti_cli::{execute, Cli, Outcome};

fn sample(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../samples")
        .join(name);
    path.to_str().expect("utf-8 path").to_owned()
}

fn run(args: &[&str]) -> Outcome {
    let mut argv = vec!["yamaguti"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("arguments parse");
    execute(cli)
}

fn json_stdout(outcome: &Outcome) -> Value {
    serde_json::from_str(&outcome.stdout).expect("stdout is JSON")
}

#[test]
fn check_ly_passes_on_the_samples() {
    for file in ["ly2.json", "ly4.json"] {
        let outcome = run(&["check", "ly", &sample(file)]);
        assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
        assert!(outcome.stdout.contains("verdict: pass"));
    }
    // Lie-algebra documents get the Jacobi check.
    let outcome = run(&["check", "ly", &sample("sl2-lie.json")]);
    assert_eq!(outcome.code, 0);
}

#[test]
fn corrupted_algebra_fails_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(
        &path,
        r#"{"kind":"ly-algebra","dim":2,"binary":[[1,2,["1","0"]]],"ternary":[[1,2,2,["0","1"]]]}"#,
    )
    .unwrap();
    let outcome = run(&["--format", "json", "check", "ly", path.to_str().unwrap()]);
    assert_eq!(outcome.code, 1);
    let value = json_stdout(&outcome);
    assert_eq!(value["verdict"], "fail");
    let witnesses = value["witnesses"].as_array().unwrap();
    assert!(witnesses.iter().any(|w| w["axiom"] == "ly3"));
    assert!(value["counts"]["ly3"].as_u64().unwrap() > 0);
}

#[test]
fn identity_operator_fails_the_rbo_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    std::fs::write(
        &path,
        r#"{"kind":"linear-map","rows":2,"cols":2,"entries":[["1","0"],["0","1"]]}"#,
    )
    .unwrap();
    let outcome = run(&[
        "--format",
        "json",
        "check",
        "rbo",
        "--rep",
        "adjoint",
        &sample("ly2.json"),
        path.to_str().unwrap(),
    ]);
    assert_eq!(outcome.code, 1);
    let value = json_stdout(&outcome);
    let witnesses = value["witnesses"].as_array().unwrap();
    let binary = witnesses
        .iter()
        .find(|w| w["axiom"] == "rbo-binary")
        .expect("binary witness");
    assert_eq!(binary["indices"], serde_json::json!([1, 2]));
    assert_eq!(binary["lhs"], serde_json::json!(["1", "0"]));
    assert_eq!(binary["rhs"], serde_json::json!(["2", "0"]));
}

#[test]
fn parameterized_operator_families_pass() {
    let outcome = run(&[
        "check",
        "rbo",
        &sample("ly2.json"),
        &sample("t2.json"),
        "--sample",
        "a=2,b=3",
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);

    let outcome = run(&[
        "check",
        "rbo",
        &sample("ly4.json"),
        &sample("t4.json"),
        "--sample",
        "a=1,b=2,c=3,d=4,e=5,f=6,g=7,h=8,k=9",
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
}

#[test]
fn missing_parameters_are_an_input_error() {
    let outcome = run(&["check", "rbo", &sample("ly2.json"), &sample("t2.json")]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("--sample"));
}

#[test]
fn pre_ly_samples_pass_at_sampled_parameters() {
    for bindings in ["a=1,b=1", "a=2,b=3", "a=-1,b=5/3"] {
        let outcome = run(&[
            "check",
            "pre-ly",
            &sample("prely2.json"),
            "--sample",
            bindings,
        ]);
        assert_eq!(
            outcome.code, 0,
            "bindings {bindings}, stderr: {}",
            outcome.stderr
        );
    }
    let outcome = run(&["check", "pre-ly", &sample("prely4.json"), "--sample", "a=1"]);
    assert_eq!(outcome.code, 0);
}

#[test]
fn quadratic_symplectic_and_manin_checks() {
    let outcome = run(&[
        "check",
        "quadratic",
        &sample("sl2-lie.json"),
        &sample("killing.json"),
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);

    let outcome = run(&[
        "check",
        "symplectic",
        &sample("ly2.json"),
        &sample("omega2.json"),
    ]);
    assert_eq!(outcome.code, 0);

    // The manin samples reference their parts by relative path.
    let outcome = run(&["check", "manin", &sample("manin2.json")]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let outcome = run(&["check", "manin", &sample("manin4.json")]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
}

#[test]
fn phase_space_documents_act_as_algebras() {
    // The shipped dim-4 fixtures stay consistent with each other: the
    // phase-space document is symplectic for the canonical form, and
    // deriving from it reproduces the shipped compatible table.
    let outcome = run(&[
        "check",
        "symplectic",
        &sample("phase4.json"),
        &sample("omega4.json"),
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let outcome = run(&[
        "derive",
        "pre-ly",
        "--from-symplectic",
        &sample("phase4.json"),
        &sample("omega4.json"),
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let shipped = std::fs::read_to_string(sample("q4.json")).unwrap();
    assert_eq!(outcome.stdout, shipped);
}

#[test]
fn representation_check_from_a_generated_document() {
    let adj = yamaguti::rep::adjoint_rep(&yamaguti::samples::ly_dim2());
    let text = yamaguti_cli::doc::serialize(&yamaguti_cli::doc::Document::Representation(adj));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adjoint.json");
    std::fs::write(&path, text).unwrap();
    let outcome = run(&["check", "rep", path.to_str().unwrap()]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    // With the algebra given explicitly the bases must match.
    let outcome = run(&["check", "rep", &sample("ly2.json"), path.to_str().unwrap()]);
    assert_eq!(outcome.code, 0);
    let outcome = run(&["check", "rep", &sample("ly4.json"), path.to_str().unwrap()]);
    assert_eq!(outcome.code, 2);
}

#[test]
fn derive_from_symplectic_emits_the_compatible_table() {
    let outcome = run(&[
        "derive",
        "pre-ly",
        "--from-symplectic",
        &sample("ly2.json"),
        &sample("omega2.json"),
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let doc = yamaguti_cli::doc::parse(&outcome.stdout, &yamaguti_cli::expr::Params::new(), None)
        .unwrap();
    let expected = yamaguti::pre_ly::PreLyAlgebra::from_sparse(
        2,
        &[
            (0, 1, yamaguti::Vector::basis(2, 0)),
            (1, 1, yamaguti::Vector::basis(2, 1)),
        ],
        &[
            (1, 1, 0, yamaguti::Vector::basis(2, 0)),
            (1, 1, 1, yamaguti::Vector::basis(2, 1)),
        ],
    )
    .unwrap();
    assert_eq!(doc, yamaguti_cli::doc::Document::PreLy(expected));
}

#[test]
fn derive_from_rbo_matches_the_induced_table() {
    let outcome = run(&[
        "derive",
        "pre-ly",
        "--from-rbo",
        &sample("ly2.json"),
        &sample("t2.json"),
        "--sample",
        "a=2,b=3",
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let doc = yamaguti_cli::doc::parse(&outcome.stdout, &yamaguti_cli::expr::Params::new(), None)
        .unwrap();
    let expected = yamaguti::samples::pre_ly_dim2(
        &yamaguti::Scalar::from_int(2),
        &yamaguti::Scalar::from_int(3),
    );
    assert_eq!(doc, yamaguti_cli::doc::Document::PreLy(expected));
}

#[test]
fn derive_with_a_non_operator_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("id.json");
    std::fs::write(
        &path,
        r#"{"kind":"linear-map","rows":2,"cols":2,"entries":[["1","0"],["0","1"]]}"#,
    )
    .unwrap();
    let outcome = run(&[
        "derive",
        "pre-ly",
        "--from-rbo",
        &sample("ly2.json"),
        path.to_str().unwrap(),
    ]);
    assert_eq!(outcome.code, 1);
    assert!(outcome.stdout.contains("rbo-binary"));
}

#[test]
fn build_phase_space_and_check_it() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("phase.json");
    let outcome = run(&[
        "build",
        "phase-space",
        &sample("prely2.json"),
        "--sample",
        "a=1,b=1",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("\"phase-space\""));
    assert!(text.contains("\"h_dim\": 2"));
    // The emitted document passes the full phase-space verification.
    let outcome = run(&["check", "ly", out.to_str().unwrap()]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
}

#[test]
fn roundtrip_reports_all_stages() {
    let outcome = run(&["roundtrip", &sample("prely2.json"), "--sample", "a=1,b=1"]);
    assert_eq!(outcome.code, 0, "stderr: {}", outcome.stderr);
    for stage in ["phase-space", "perfect", "manin", "restriction"] {
        assert!(
            outcome.stdout.contains(&format!("stage {stage}: pass")),
            "{}",
            outcome.stdout
        );
    }

    let json1 = run(&[
        "--format",
        "json",
        "roundtrip",
        &sample("prely4.json"),
        "--sample",
        "a=1",
    ]);
    assert_eq!(json1.code, 0);
    let value = json_stdout(&json1);
    assert_eq!(value["verdict"], "pass");
    assert_eq!(value["stages"].as_array().unwrap().len(), 4);
    // Identical inputs produce byte-identical reports.
    let json2 = run(&[
        "--format",
        "json",
        "roundtrip",
        &sample("prely4.json"),
        "--sample",
        "a=1",
    ]);
    assert_eq!(json1.stdout, json2.stdout);
}

#[test]
fn input_errors_exit_with_code_two() {
    let outcome = run(&["check", "ly", "/nonexistent/algebra.json"]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stdout.is_empty());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conflict.json");
    std::fs::write(
        &path,
        r#"{"kind":"ly-algebra","dim":2,"binary":[[1,2,["1","0"]],[2,1,["1","0"]]]}"#,
    )
    .unwrap();
    let outcome = run(&["check", "ly", path.to_str().unwrap()]);
    assert_eq!(outcome.code, 2);
    assert!(outcome.stderr.contains("conflicting"));

    let bad_kind = dir.path().join("bad.json");
    std::fs::write(&bad_kind, r#"{"kind":"mystery","dim":2}"#).unwrap();
    let outcome = run(&["check", "ly", bad_kind.to_str().unwrap()]);
    assert_eq!(outcome.code, 2);

    let outcome = run(&["check", "quadratic", &sample("ly2.json")]);
    assert_eq!(outcome.code, 2);
}

#[test]
fn non_symplectic_form_fails_the_check() {
    let dir = tempfile::tempdir().unwrap();
    let broken = dir.path().join("broken.json");
    std::fs::write(
        &broken,
        r#"{"kind":"ly-algebra","dim":2,"binary":[[1,2,["1","0"]]],"ternary":[[1,2,2,["0","1"]]]}"#,
    )
    .unwrap();
    let outcome = run(&[
        "check",
        "symplectic",
        broken.to_str().unwrap(),
        &sample("omega2.json"),
    ]);
    assert_eq!(outcome.code, 1);
}
