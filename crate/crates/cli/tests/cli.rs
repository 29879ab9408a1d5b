//! End-to-end tests of the binary: golden outputs, exit codes, and JSON
//! schema conformance, all through the real process boundary.

use std::process::Command;

fn fixture(name: &str) -> String {
    format!("{}/tests/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qgs"));
    cmd.args(args).env_remove("QGS_STEP_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary should run");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf8"),
        String::from_utf8(out.stderr).expect("stderr is utf8"),
    )
}

#[test]
fn nf_reduces_a_derived_relation_to_zero() {
    let d4 = fixture("d4.txt");
    let (code, stdout, _) = run(&[
        "nf",
        "--graph",
        &d4,
        "--poly",
        "X[1,1]*X[2,2] - X[1,1]",
        "--no-timings",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0\n");
}

#[test]
fn nf_prints_a_nonzero_normal_form() {
    let d4 = fixture("d4.txt");
    let (code, stdout, _) = run(&[
        "nf",
        "--graph",
        &d4,
        "--poly",
        "X[1,1]*X[3,3]",
        "--no-timings",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "X[1,1]*X[3,3]\n");
}

#[test]
fn aut_reports_the_cycle_group() {
    let c5 = fixture("cycle5.txt");
    let (code, stdout, _) = run(&["aut", "--graph", &c5]);
    assert_eq!(code, 0);
    assert!(stdout.contains("order: 5"), "{}", stdout);
    assert!(stdout.contains("cyclic: true"), "{}", stdout);
    assert!(stdout.contains("abelian: true"), "{}", stdout);
    assert!(stdout.contains("2 3 4 5 1"), "{}", stdout);
}

#[test]
fn gb_json_is_complete_and_byte_deterministic() {
    let args = [
        "gb",
        "--family",
        "complete",
        "--n",
        "3",
        "--format",
        "json",
        "--no-timings",
    ];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&first).expect("valid json");
    assert_eq!(doc["fully_complete"], serde_json::Value::Bool(true));
    assert_eq!(doc["schema_version"], 1);
    assert!(doc["elements"].as_array().expect("array").len() > 0);

    let (_, second, _) = run(&args);
    assert_eq!(first, second, "same input must serialize identically");
}

#[test]
fn member_verdicts_on_the_two_point_algebra() {
    let base = [
        "member",
        "--family",
        "empty",
        "--n",
        "2",
        "--presentation",
        "quantum-perm",
        "--no-timings",
        "--poly",
    ];
    let mut in_ideal = base.to_vec();
    in_ideal.push("x[1,1]*x[2,2] - x[1,1]");
    let (code, stdout, _) = run(&in_ideal);
    assert_eq!(code, 0);
    assert!(stdout.contains("member of the ideal"), "{}", stdout);
    assert!(stdout.contains("re-verified by expansion"), "{}", stdout);

    let mut not_in_ideal = base.to_vec();
    not_in_ideal.push("x[1,1]");
    let (code, stdout, _) = run(&not_in_ideal);
    assert_eq!(code, 0);
    assert!(stdout.contains("not a member"), "{}", stdout);
}

#[test]
fn census_of_the_projection_presentation_stabilizes_at_four() {
    let (code, stdout, _) = run(&[
        "census",
        "--presentation",
        "b0",
        "--degree-bound",
        "8",
        "--format",
        "json",
        "--no-timings",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    let per_degree: Vec<u64> = doc["per_degree"]
        .as_array()
        .expect("array")
        .iter()
        .map(|v| v.as_u64().expect("u64"))
        .collect();
    assert_eq!(per_degree, vec![1, 5, 4, 4, 4, 4, 4, 4, 4]);
    assert_eq!(doc["exact"], serde_json::Value::Bool(true));
    assert_eq!(doc["cumulative"], 34);
}

#[test]
fn hopf_verify_passes_on_a_triangle() {
    let (code, stdout, _) = run(&[
        "hopf-verify",
        "--family",
        "cycle",
        "--n",
        "3",
        "--format",
        "json",
        "--no-timings",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(doc["all_verified"], serde_json::Value::Bool(true));
}

#[test]
fn hopf_verify_rejects_the_projection_presentation() {
    let (code, _, stderr) = run(&["hopf-verify", "--presentation", "b0", "--no-timings"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("no coalgebra structure"), "{}", stderr);
}

#[test]
fn rep_check_validates_the_projection_pair_representation() {
    let pi = fixture("pi.json");
    let (code, stdout, _) = run(&[
        "rep-check",
        "--presentation",
        "b0",
        "--rep",
        &pi,
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(doc["valid"], serde_json::Value::Bool(true));
    assert_eq!(doc["star_compatible"], serde_json::Value::Bool(false));
    let failures: Vec<&str> = doc["star_failures"]
        .as_array()
        .expect("array")
        .iter()
        .map(|v| v.as_str().expect("string"))
        .collect();
    assert_eq!(failures, vec!["y7", "y8"]);
    assert_eq!(doc["commutator_witness"]["a"], "y1");
    assert_eq!(doc["commutator_witness"]["b"], "y7");
}

#[test]
fn classify_json_conforms_to_the_published_schema() {
    let schema_path = format!(
        "{}/../../schema/classify.schema.json",
        env!("CARGO_MANIFEST_DIR")
    );
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&schema_path).expect("schema file"))
            .expect("schema is json");
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");

    for args in [
        vec!["classify", "--family", "d4", "--format", "json", "--no-timings"],
        vec!["classify", "--family", "cycle", "--n", "5", "--format", "json", "--no-timings"],
        vec![
            "classify", "--family", "complete", "--n", "3", "--format", "json", "--no-timings",
        ],
    ] {
        let (code, stdout, _) = run(&args);
        assert_eq!(code, 0, "{:?}", args);
        let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
        let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{:?}: {:?}", args, errors);
    }
}

#[test]
fn classify_certifies_quantum_symmetry_of_two_opposite_two_cycles() {
    let (code, stdout, _) = run(&[
        "classify", "--family", "d4", "--format", "json", "--no-timings",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(doc["quantum_symmetry"]["verdict"], "present");
    assert_eq!(doc["quantum_symmetry"]["provenance"], "certified");
    assert_eq!(doc["commutativity"]["verdict"], "noncommutative");
    assert_eq!(doc["classical_group"]["order"], 8);
    assert_eq!(doc["classical_group"]["dihedral"], true);
    assert_eq!(doc["hopf_descent"]["all_verified"], true);
    assert_eq!(doc["edge_matrix"]["all_verified"], true);
    assert_eq!(doc["witness_representation"]["found"], true);
    assert_eq!(doc["witness_representation"]["valid"], true);
}

#[test]
fn classify_finds_no_quantum_symmetry_on_a_five_cycle() {
    let (code, stdout, _) = run(&[
        "classify", "--family", "cycle", "--n", "5", "--format", "json", "--no-timings",
    ]);
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(doc["quantum_symmetry"]["verdict"], "absent");
    assert_eq!(doc["quantum_symmetry"]["provenance"], "certified");
    assert_eq!(doc["commutativity"]["verdict"], "commutative");
    assert_eq!(doc["classical_group"]["order"], 5);
    assert_eq!(doc["classical_group"]["cyclic"], true);
    assert_eq!(doc["dimension"]["verdict"], "finite");
    assert_eq!(doc["dimension"]["dim"], 5);
}

#[test]
fn usage_errors_exit_one() {
    // No graph selection at all.
    let (code, _, stderr) = run(&["gb", "--no-timings"]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());

    // Missing file.
    let (code, _, _) = run(&["aut", "--graph", "/nonexistent/graph.txt"]);
    assert_eq!(code, 1);

    // Unknown family.
    let (code, _, _) = run(&["aut", "--family", "moebius", "--n", "5"]);
    assert_eq!(code, 1);

    // Malformed polynomial.
    let d4 = fixture("d4.txt");
    let (code, _, stderr) = run(&["nf", "--graph", &d4, "--poly", "X[1,1]*", "--no-timings"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--poly"), "{}", stderr);
}

#[test]
fn help_and_version_exit_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("classify"), "{}", stdout);

    let (code, stdout, _) = run(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("qgs"), "{}", stdout);
}

#[test]
fn exhausted_step_cap_exits_two() {
    let d4 = fixture("d4.txt");
    let (code, _, stderr) =
        run_with_env(&["gb", "--graph", &d4, "--no-timings"], &[("QGS_STEP_CAP", "10")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("step cap"), "{}", stderr);

    let (code, _, stderr) =
        run_with_env(&["gb", "--graph", &d4, "--no-timings"], &[("QGS_STEP_CAP", "lots")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("QGS_STEP_CAP"), "{}", stderr);
}

#[test]
fn timings_go_to_stderr_not_stdout() {
    let d4 = fixture("d4.txt");
    let (code, stdout, stderr) = run(&["gb", "--graph", &d4]);
    assert_eq!(code, 0);
    assert!(stderr.contains("timing:"), "{}", stderr);
    assert!(!stdout.contains("timing:"), "{}", stdout);
}

#[test]
fn graph_json_and_text_inputs_agree() {
    let dir = std::env::temp_dir().join("qgs-cli-test-graphs");
    std::fs::create_dir_all(&dir).expect("mkdir");
    let json_path = dir.join("d4.json");
    std::fs::write(
        &json_path,
        r#"{"vertices": 4, "edges": [[1,2],[2,1],[3,4],[4,3]]}"#,
    )
    .expect("write");

    let d4_txt = fixture("d4.txt");
    let (code_a, out_a, _) = run(&["present", &format!("--graph={}", d4_txt), "--no-timings"]);
    let (code_b, out_b, _) = run(&[
        "present",
        &format!("--graph={}", json_path.display()),
        "--no-timings",
    ]);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(out_a, out_b);
}
