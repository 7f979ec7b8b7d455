//! CLI contract acceptance: exit codes, the mutation negative control, and
//! output determinism. Exercises the real binary.

use std::path::Path;
use std::process::{Command, Output};

fn paraverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paraverify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn criterion_9_cli_contract_and_negative_control() {
    // verify --suites all on (1,1,1) exits 0.
    let ok = paraverify(&["verify", "--m1", "1", "--m2", "1", "--n", "1", "--suites", "all"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    // One flipped sign in the embedding formula: the osp closed form, the
    // short-root triples and the relation families must fail with witnesses,
    // and the process must exit 1.
    let bad = paraverify(&[
        "verify",
        "--m1",
        "1",
        "--m2",
        "1",
        "--n",
        "1",
        "--suites",
        "all",
        "--mutate-embedding-sign",
        "--format",
        "json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    let json: serde_json::Value = serde_json::from_str(&stdout(&bad)).unwrap();
    assert_eq!(json["all_passed"], false);
    let suites = json["suites"].as_array().unwrap();
    for name in ["osp-closed-form", "short-root-triple", "a1", "b1", "ab2"] {
        let suite = suites
            .iter()
            .find(|s| s["suite"] == name)
            .unwrap_or_else(|| panic!("suite {name} missing"));
        assert!(
            suite["failures"].as_u64().unwrap() > 0,
            "{name} should fail under mutation"
        );
        assert!(
            !suite["witnesses"].as_array().unwrap().is_empty(),
            "{name} should carry witnesses"
        );
    }
    println!("criterion 9: PASS - CLI exit codes and mutation negative control");
}

#[test]
fn exit_codes_are_distinguishable() {
    // Usage error: unknown suite.
    let unknown = paraverify(&["verify", "--m1", "1", "--suites", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
    // Usage error: empty algebra.
    let empty = paraverify(&["build", "osp", "--m1", "0", "--m2", "0", "--n", "0"]);
    assert_eq!(empty.status.code(), Some(2));
    // Usage error: clap-level bad flag.
    let badflag = paraverify(&["verify", "--bogus"]);
    assert_eq!(badflag.status.code(), Some(2));
    // Internal error: unwritable output path.
    let unwritable = paraverify(&[
        "export",
        "osp",
        "--m1",
        "1",
        "--out",
        "/nonexistent-dir/file.json",
    ]);
    assert_eq!(unwritable.status.code(), Some(3));
}

#[test]
fn vacuous_suite_exits_zero_and_is_flagged() {
    let out = paraverify(&[
        "verify", "--m1", "1", "--m2", "0", "--n", "1", "--suites", "a2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["suites"][0]["vacuous"], true);
    assert_eq!(json["suites"][0]["total_cases"], 0);
}

#[test]
fn explicitly_requested_unmet_degeneration_is_usage_error() {
    let out = paraverify(&["verify", "--m1", "1", "--m2", "0", "--n", "1", "--suites", "gm-relative-bose"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn central_degeneration_passes() {
    let out = paraverify(&["verify", "--m1", "0", "--m2", "1", "--n", "1", "--suites", "gm-relative-bose"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn build_gl_summary() {
    let out = paraverify(&["build", "gl", "--dims", "1,1,1,0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("gl(1,1|1,0)"), "{text}");
    assert!(text.contains("basis elements 9"), "{text}");
}

#[test]
fn closure_command_confirms_generation() {
    let out = paraverify(&["closure", "--m1", "1", "--m2", "1", "--n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["dimension"], 23);
    assert_eq!(json["closure_rank"], 23);
    assert_eq!(json["generates"], true);
}

#[test]
fn export_is_byte_identical_and_parseable() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.json");
    let p2 = dir.path().join("b.json");
    for p in [&p1, &p2] {
        let out = paraverify(&["export", "osp", "--m1", "1", "--out", p.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert_eq!(b1, b2);
    assert!(b1.ends_with(b"\n"));
    let json: serde_json::Value = serde_json::from_slice(&b1).unwrap();
    assert_eq!(json["dimension"], 3);
    assert_eq!(json["basis"].as_array().unwrap().len(), 3);
}

#[test]
fn text_and_json_reports_agree_on_totals() {
    let json_out = paraverify(&[
        "verify", "--m1", "1", "--m2", "1", "--n", "1", "--suites", "b1,ab3", "--format", "json",
    ]);
    assert_eq!(json_out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    let text_out = paraverify(&["verify", "--m1", "1", "--m2", "1", "--n", "1", "--suites", "b1,ab3"]);
    let text = stdout(&text_out);
    for suite in json["suites"].as_array().unwrap() {
        let needle = format!(
            "cases={} failures={}",
            suite["total_cases"], suite["failures"]
        );
        assert!(text.contains(&needle), "{text} missing {needle}");
    }
}

#[test]
fn json_outputs_match_documented_schemas() {
    // Light-weight structural validation against the shipped schema docs:
    // every required property named in the schema must be present.
    let schema_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/schema");
    let check = |schema_file: &str, value: &serde_json::Value| {
        let schema: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(schema_dir.join(schema_file)).unwrap(),
        )
        .unwrap();
        for req in schema["required"].as_array().unwrap() {
            let key = req.as_str().unwrap();
            assert!(
                value.get(key).is_some(),
                "{schema_file}: missing required key {key}"
            );
        }
    };
    let verify = paraverify(&[
        "verify", "--m1", "1", "--m2", "1", "--n", "1", "--suites", "b1", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&verify)).unwrap();
    check("verify-report.schema.json", &v);
    let export = paraverify(&["export", "osp", "--m1", "1"]);
    let e: serde_json::Value = serde_json::from_str(&stdout(&export)).unwrap();
    check("structure-constants.schema.json", &e);
}
